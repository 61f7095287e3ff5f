#pragma once

#include "sddlab/enumerate.hpp"
#include "sddlab/graph.hpp"
#include "sddlab/indices.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sddlab {

// Every registered inequality. The *_literal entries reproduce printed
// forms that fail numerically and exist to be falsified; their corrected
// twins follow the sound derivation chain.
enum class TheoremId {
    T3_1_lower, T3_1_upper,
    C3_2,
    T3_3_lower, T3_3_upper,
    T3_4,
    C3_5,
    T3_6_a, T3_6_b_literal, T3_6_b_corrected,
    T3_7_m2, T3_7_f,
    T3_9,
    T4_1_i, T4_1_ii,
    T4_2_lower, T4_2_upper,
    T4_3_lower, T4_3_upper,
    C4_4_lower, C4_4_upper,
    T4_5_literal, T4_5_corrected,
    T4_6,
    T4_8,
};

enum class Direction { le, lt, ge, gt };

std::string_view direction_symbol(Direction d);

struct TheoremInfo {
    TheoremId id;
    std::string_view name;     // stable CLI identifier
    std::string_view formula;  // human-readable statement
    bool alpha_parameterized;
    bool literal;              // expected-to-fail entry, excluded from the gate
    bool strict;
    bool per_edge;             // T3_9: one check per minimal edge
};

const std::vector<TheoremInfo>& theorem_registry();
const TheoremInfo& theorem_info(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);
std::string_view theorem_name(TheoremId id);

// One bound applied to one graph. `holds`, `equality` and `consistent`
// are always recomputed from lhs/direction/rhs.
struct BoundCheck {
    TheoremId theorem;
    std::string graph6;
    std::optional<Edge> edge;    // per-edge checks only
    std::optional<double> alpha; // alpha-parameterized theorems only
    IndexValue lhs;
    IndexValue rhs;
    Direction direction;
    bool exact;              // both sides rational, compared exactly
    bool holds;
    bool equality;           // asserted on the exact path only
    bool equality_predicate; // the characterization's membership test
    bool consistent;         // equality == predicate (exact path)
};

struct DiscrepancyRecord {
    enum class Kind { bound_violated, equality_mismatch };
    TheoremId theorem;
    std::string witness; // graph6
    std::optional<Edge> edge;
    std::optional<double> alpha;
    std::string lhs;
    std::string rhs;
    Kind kind;
};

// True when the graph satisfies the theorem's hypotheses (connected,
// nontrivial, plus per-theorem side conditions).
bool hypothesis_met(TheoremId id, const Graph& g);

// Evaluates one bound on one graph. Throws HypothesisNotMet outside the
// theorem's scope and BadParameter for the per-edge entry (use
// check_t3_9). Alpha defaults to 1 for parameterized entries and must be
// positive.
BoundCheck check(TheoremId id, const Graph& g, std::optional<double> alpha = {});

// Edge-deletion bound: SDD(G - u0v0) > SDD(G) - (d_u0^2 + d_v0^2)/(d_u0 d_v0)
// for a minimal edge u0v0. The K_2 boundary evaluates to a non-strict tie
// and is reported honestly (holds = false); sweeps skip it because the
// deleted graph has no edges left.
BoundCheck check_t3_9(const Graph& g, Edge e);

struct SweepSummary {
    long checked = 0;
    long skipped = 0;
    long equalities = 0;
    long violations = 0;
    long mismatches = 0;
};

struct SweepResult {
    std::vector<BoundCheck> checks;
    std::vector<DiscrepancyRecord> discrepancies; // sorted by (witness, theorem, alpha, edge)
    SweepSummary summary;
};

// Checks every in-hypothesis graph, once per alpha for parameterized
// theorems. Work is partitioned into contiguous blocks across `threads`
// workers and merged in block order, so results do not depend on the
// worker count.
SweepResult sweep(TheoremId id, const std::vector<Graph>& graphs,
                  const std::vector<double>& alphas = {1.0}, int threads = 1);
SweepResult sweep(TheoremId id, GraphStream stream,
                  const std::vector<double>& alphas = {1.0}, int threads = 1);

} // namespace sddlab
