#pragma once

#include "sddlab/bounds.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sddlab {

nlohmann::json to_json(const BoundCheck& bc);
nlohmann::json to_json(const DiscrepancyRecord& rec);
nlohmann::json to_json(const SweepSummary& s);

struct TheoremRun {
    TheoremId theorem;
    SweepResult result;
};

// Aggregated verification report. `expected_falsifications` counts
// discrepancies on the *_literal registry entries; `unexpected` counts
// everything else and drives the failure exit code.
struct VerifyReport {
    std::string command;
    std::string input_digest;
    std::vector<TheoremRun> runs;
    long expected_falsifications = 0;
    long unexpected = 0;

    void add(TheoremId id, SweepResult result);
};

// Deterministic serialization (sorted keys, values rendered as strings).
// include_checks embeds every BoundCheck, not just the discrepancies.
nlohmann::json to_json(const VerifyReport& report, bool include_checks);

// One line per theorem:
// theorem,checked,skipped,equalities,violations,mismatches,expected
std::string verify_csv(const VerifyReport& report);

// FNV-1a 64-bit, rendered as 16 hex digits; used for input digests.
std::string fnv1a_digest(const std::string& bytes);

} // namespace sddlab
