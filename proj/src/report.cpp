#include "sddlab/report.hpp"

#include <cstdio>
#include <sstream>

namespace sddlab {

namespace {

std::string alpha_string(const std::optional<double>& alpha) {
    if (!alpha) return {};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", *alpha);
    return buf;
}

} // namespace

nlohmann::json to_json(const BoundCheck& bc) {
    nlohmann::json j{
        {"theorem", std::string(theorem_name(bc.theorem))},
        {"graph6", bc.graph6},
        {"lhs", bc.lhs.str()},
        {"rhs", bc.rhs.str()},
        {"direction", std::string(direction_symbol(bc.direction))},
        {"exact", bc.exact},
        {"holds", bc.holds},
        {"equality", bc.equality},
        {"predicate", bc.equality_predicate},
        {"consistent", bc.consistent},
    };
    if (bc.alpha) j["alpha"] = alpha_string(bc.alpha);
    if (bc.edge) j["edge"] = {bc.edge->first, bc.edge->second};
    return j;
}

nlohmann::json to_json(const DiscrepancyRecord& rec) {
    nlohmann::json j{
        {"theorem", std::string(theorem_name(rec.theorem))},
        {"witness", rec.witness},
        {"lhs", rec.lhs},
        {"rhs", rec.rhs},
        {"kind", rec.kind == DiscrepancyRecord::Kind::bound_violated ? "bound_violated"
                                                                     : "equality_mismatch"},
    };
    if (rec.alpha) j["alpha"] = alpha_string(rec.alpha);
    if (rec.edge) j["edge"] = {rec.edge->first, rec.edge->second};
    return j;
}

nlohmann::json to_json(const SweepSummary& s) {
    return nlohmann::json{
        {"checked", s.checked},     {"skipped", s.skipped},
        {"equalities", s.equalities}, {"violations", s.violations},
        {"mismatches", s.mismatches},
    };
}

void VerifyReport::add(TheoremId id, SweepResult result) {
    const long found = result.summary.violations + result.summary.mismatches;
    if (theorem_info(id).literal)
        expected_falsifications += found;
    else
        unexpected += found;
    runs.push_back({id, std::move(result)});
}

nlohmann::json to_json(const VerifyReport& report, bool include_checks) {
    nlohmann::json theorems = nlohmann::json::array();
    for (const auto& run : report.runs) {
        nlohmann::json entry{
            {"theorem", std::string(theorem_name(run.theorem))},
            {"formula", std::string(theorem_info(run.theorem).formula)},
            {"literal", theorem_info(run.theorem).literal},
            {"summary", to_json(run.result.summary)},
        };
        nlohmann::json discrepancies = nlohmann::json::array();
        for (const auto& rec : run.result.discrepancies) discrepancies.push_back(to_json(rec));
        entry["discrepancies"] = std::move(discrepancies);
        if (include_checks) {
            nlohmann::json checks = nlohmann::json::array();
            for (const auto& bc : run.result.checks) checks.push_back(to_json(bc));
            entry["checks"] = std::move(checks);
        }
        theorems.push_back(std::move(entry));
    }
    return nlohmann::json{
        {"command", report.command},
        {"input_digest", report.input_digest},
        {"theorems", std::move(theorems)},
        {"expected_falsifications", report.expected_falsifications},
        {"unexpected", report.unexpected},
    };
}

std::string verify_csv(const VerifyReport& report) {
    std::ostringstream out;
    out << "theorem,checked,skipped,equalities,violations,mismatches,expected\n";
    for (const auto& run : report.runs) {
        const auto& s = run.result.summary;
        out << theorem_name(run.theorem) << ',' << s.checked << ',' << s.skipped << ','
            << s.equalities << ',' << s.violations << ',' << s.mismatches << ','
            << (theorem_info(run.theorem).literal ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string fnv1a_digest(const std::string& bytes) {
    uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

} // namespace sddlab
