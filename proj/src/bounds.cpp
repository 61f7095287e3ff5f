#include "sddlab/bounds.hpp"

#include "sddlab/graph6.hpp"
#include "sddlab/line_graph.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace sddlab {

namespace {

const std::vector<TheoremInfo> kRegistry = {
    {TheoremId::T3_1_lower, "T3_1_lower", "2m <= SDD(G)", false, false, false, false},
    {TheoremId::T3_1_upper, "T3_1_upper", "SDD(G) <= m(n-1 + 1/(n-1))", false, false, false, false},
    {TheoremId::C3_2, "C3_2", "SDD(G) >= 2(n-1)", false, false, false, false},
    {TheoremId::T3_3_lower, "T3_3_lower", "d^2 ID(G) <= SDD(G)", false, false, false, false},
    {TheoremId::T3_3_upper, "T3_3_upper", "SDD(G) <= D^2 ID(G)", false, false, false, false},
    {TheoremId::T3_4, "T3_4", "SDD(G) <= m(D/d + d/D)", false, false, false, false},
    {TheoremId::C3_5, "C3_5", "SDD(G) < m(n-2 + 1/(n-2)) when D <= n-2", false, false, true, false},
    {TheoremId::T3_6_a, "T3_6_a",
     "SDD(G) >= 2 d^2 m^((a+1)/a) / M2^a(G)^(1/a)", true, false, false, false},
    {TheoremId::T3_6_b_literal, "T3_6_b_literal",
     "SDD(G) >= d^2 (2m)^((a+1)/a) / (D M1^a(G)^(1/a))", true, true, false, false},
    {TheoremId::T3_6_b_corrected, "T3_6_b_corrected",
     "SDD(G) >= d^2 (2m)^((a+1)/a) / (D M1^(a+1)(G)^(1/a))", true, false, false, false},
    {TheoremId::T3_7_m2, "T3_7_m2", "SDD(G) >= 2m^2 / M2(G)", false, false, false, false},
    {TheoremId::T3_7_f, "T3_7_f", "SDD(G) >= 4m^2 / F(G)", false, false, false, false},
    {TheoremId::T3_9, "T3_9",
     "SDD(G - u0v0) > SDD(G) - (d_u0^2 + d_v0^2)/(d_u0 d_v0) for minimal u0v0",
     false, false, true, true},
    {TheoremId::T4_1_i, "T4_1_i", "SDD(L(G)) >= 2m for non-path G", false, false, false, false},
    {TheoremId::T4_1_ii, "T4_1_ii",
     "SDD(L(G)) <= (M1(G)/2 - m)(m-1 + 1/(m-1))", false, false, false, false},
    {TheoremId::T4_2_lower, "T4_2_lower",
     "max{4(d-1)^2, 1} ID(L(G)) <= SDD(L(G))", false, false, false, false},
    {TheoremId::T4_2_upper, "T4_2_upper",
     "SDD(L(G)) <= 4(D-1)^2 ID(L(G))", false, false, false, false},
    {TheoremId::T4_3_lower, "T4_3_lower", "M1(G) - 2m <= SDD(L(G))", false, false, false, false},
    {TheoremId::T4_3_upper, "T4_3_upper",
     "SDD(L(G)) <= (M1(G) - 2m)/2 ((2D-2)/max{2d-2,1} + max{2d-2,1}/(2D-2))",
     false, false, false, false},
    {TheoremId::C4_4_lower, "C4_4_lower", "M1(G) <= SDD(G) + SDD(L(G))", false, false, false, false},
    {TheoremId::C4_4_upper, "C4_4_upper",
     "SDD(G) + SDD(L(G)) <= M1(G)/2 ((2D-2)/max{2d-2,1} + max{2d-2,1}/(2D-2))",
     false, false, false, false},
    {TheoremId::T4_5_literal, "T4_5_literal",
     "SDD(L(G)) >= D d^2 chi_(a+1)(G) / ((D-1)^2 chi_a(G)^(1/a))", true, true, false, false},
    {TheoremId::T4_5_corrected, "T4_5_corrected",
     "SDD(L(G)) >= max{2d-2,1}^2 D^((a+1)/a) (M1(G)-2m)^((a+1)/a)"
     " / ((2D-2)(D-1)^((a+1)/a) chi_(a+1)(G)^(1/a))", true, false, false, false},
    {TheoremId::T4_6, "T4_6",
     "SDD(L(G)) > D^3 (M1(G)-2m)^2 / ((D-1)^3 chi_3(G))", false, false, true, false},
    {TheoremId::T4_8, "T4_8",
     "SDD(L(G))/SDD(G) <= (D^2-d)/(4d) (4(D-1)^2 + max{2d-2,1}^2)/((D-1) max{2d-2,1})",
     false, false, false, false},
};

int lower_degree_floor(int delta) { return std::max(2 * delta - 2, 1); }

bool is_k2(const Graph& g) { return g.order() == 2 && g.size() == 1; }

bool equality_predicate_of(TheoremId id, const Graph& g) {
    switch (id) {
    case TheoremId::T3_1_lower:
    case TheoremId::T3_3_lower:
    case TheoremId::T3_3_upper:
    case TheoremId::T3_6_a:
    case TheoremId::T3_6_b_literal:
    case TheoremId::T3_6_b_corrected:
    case TheoremId::T4_2_upper:
    case TheoremId::C4_4_lower:
    case TheoremId::C4_4_upper:
    case TheoremId::T4_5_literal:
    case TheoremId::T4_5_corrected:
    case TheoremId::T4_8:
        return is_regular(g).has_value();
    case TheoremId::T3_1_upper:
        return is_star(g);
    case TheoremId::C3_2:
    case TheoremId::T3_7_m2:
    case TheoremId::T3_7_f:
        return is_k2(g);
    case TheoremId::T3_4:
    case TheoremId::T4_3_lower:
        return is_regular(g).has_value() || is_biregular(g).has_value();
    case TheoremId::T4_1_i:
        return is_cycle(g) || (is_star(g) && g.order() == 4);
    case TheoremId::T4_1_ii:
        return is_path(g) && (g.order() == 3 || g.order() == 4);
    case TheoremId::T4_2_lower:
        return is_regular(g).has_value() || (is_star(g) && g.order() == 3);
    case TheoremId::T4_3_upper:
        return is_regular(g).has_value() || (is_path(g) && g.order() == 4);
    case TheoremId::C3_5:
    case TheoremId::T3_9:
    case TheoremId::T4_6:
        return false; // strict bounds carry no equality clause
    }
    return false;
}

struct CompareOut {
    bool exact;
    bool holds;
    bool equality;
};

CompareOut compare_sides(const IndexValue& lhs, Direction dir, const IndexValue& rhs) {
    if (lhs.exact() && rhs.exact()) {
        const Rational& l = lhs.rat();
        const Rational& r = rhs.rat();
        bool holds = false;
        switch (dir) {
        case Direction::le: holds = l <= r; break;
        case Direction::lt: holds = l < r; break;
        case Direction::ge: holds = l >= r; break;
        case Direction::gt: holds = l > r; break;
        }
        return {true, holds, l == r};
    }
    const double l = lhs.num();
    const double r = rhs.num();
    const double tol = kRelTol * std::max(1.0, std::abs(r));
    bool holds = false;
    switch (dir) {
    case Direction::le:
    case Direction::lt: holds = l <= r + tol; break;
    case Direction::ge:
    case Direction::gt: holds = l >= r - tol; break;
    }
    return {false, holds, std::abs(l - r) <= tol};
}

BoundCheck assemble(TheoremId id, const Graph& g, IndexValue lhs, IndexValue rhs,
                    Direction dir, std::optional<double> alpha, std::optional<Edge> edge) {
    BoundCheck bc;
    bc.theorem = id;
    bc.graph6 = graph6_encode(g);
    bc.edge = edge;
    bc.alpha = alpha;
    bc.lhs = std::move(lhs);
    bc.rhs = std::move(rhs);
    bc.direction = dir;
    const CompareOut out = compare_sides(bc.lhs, dir, bc.rhs);
    bc.exact = out.exact;
    bc.holds = out.holds;
    bc.equality = out.equality;
    bc.equality_predicate = equality_predicate_of(id, g);
    bc.consistent = bc.exact ? (bc.equality == bc.equality_predicate) : true;
    return bc;
}

Rational bracket_term(int big, int small) {
    // x/y + y/x with exact arithmetic
    return Rational(big, small) + Rational(small, big);
}

} // namespace

std::string_view direction_symbol(Direction d) {
    switch (d) {
    case Direction::le: return "<=";
    case Direction::lt: return "<";
    case Direction::ge: return ">=";
    case Direction::gt: return ">";
    }
    return "?";
}

const std::vector<TheoremInfo>& theorem_registry() { return kRegistry; }

const TheoremInfo& theorem_info(TheoremId id) {
    return kRegistry[static_cast<size_t>(id)];
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
    for (const auto& info : kRegistry)
        if (info.name == name) return info.id;
    return std::nullopt;
}

std::string_view theorem_name(TheoremId id) { return theorem_info(id).name; }

bool hypothesis_met(TheoremId id, const Graph& g) {
    if (g.order() < 2 || g.size() < 1 || !is_connected(g)) return false;
    switch (id) {
    case TheoremId::C3_5:
        return degree_extremes(g).Delta <= g.order() - 2;
    case TheoremId::T4_1_i:
        return !is_path(g);
    case TheoremId::T4_1_ii:
    case TheoremId::T4_2_lower:
    case TheoremId::T4_2_upper:
    case TheoremId::T4_3_lower:
    case TheoremId::T4_3_upper:
    case TheoremId::C4_4_lower:
    case TheoremId::C4_4_upper:
    case TheoremId::T4_5_literal:
    case TheoremId::T4_5_corrected:
    case TheoremId::T4_6:
    case TheoremId::T4_8:
        return !is_k2(g);
    default:
        return true;
    }
}

BoundCheck check(TheoremId id, const Graph& g, std::optional<double> alpha) {
    const TheoremInfo& info = theorem_info(id);
    if (info.per_edge)
        fail(Errc::BadParameter, "per-edge bound; use check_t3_9");
    if (!hypothesis_met(id, g))
        fail(Errc::HypothesisNotMet, std::string(info.name) + " does not apply");

    double a = 1.0;
    std::optional<double> alpha_out;
    if (info.alpha_parameterized) {
        a = alpha.value_or(1.0);
        if (!(a > 0)) fail(Errc::BadParameter, "alpha must be > 0");
        alpha_out = a;
    }
    const bool exact_alpha = (a == 1.0);

    const int n = g.order();
    const int m = g.size();
    const auto [delta, Delta] = degree_extremes(g);
    const Rational sdd_g = sdd(g);

    auto E = [](Rational v) { return IndexValue::exact_of(std::move(v)); };
    auto A = [](double v) { return IndexValue::approx_of(v); };

    switch (id) {
    case TheoremId::T3_1_lower:
        return assemble(id, g, E(Rational(2 * m)), E(sdd_g), Direction::le, {}, {});
    case TheoremId::T3_1_upper:
        return assemble(id, g, E(sdd_g),
                        E(Rational(m) * (Rational(n - 1) + Rational(1, n - 1))),
                        Direction::le, {}, {});
    case TheoremId::C3_2:
        return assemble(id, g, E(sdd_g), E(Rational(2 * (n - 1))), Direction::ge, {}, {});
    case TheoremId::T3_3_lower:
        return assemble(id, g, E(Rational(delta) * delta * inverse_degree(g)), E(sdd_g),
                        Direction::le, {}, {});
    case TheoremId::T3_3_upper:
        return assemble(id, g, E(sdd_g), E(Rational(Delta) * Delta * inverse_degree(g)),
                        Direction::le, {}, {});
    case TheoremId::T3_4:
        return assemble(id, g, E(sdd_g), E(Rational(m) * bracket_term(Delta, delta)),
                        Direction::le, {}, {});
    case TheoremId::C3_5:
        return assemble(id, g, E(sdd_g),
                        E(Rational(m) * (Rational(n - 2) + Rational(1, n - 2))),
                        Direction::lt, {}, {});
    case TheoremId::T3_6_a: {
        if (exact_alpha) {
            const Rational rhs = Rational(2) * delta * delta * m * m / zagreb_m2(g);
            return assemble(id, g, E(sdd_g), E(rhs), Direction::ge, alpha_out, {});
        }
        const double m2a = general_zagreb(g, a, ZagrebKind::edge).num();
        const double rhs = 2.0 * delta * delta * std::pow(m, (a + 1) / a) / std::pow(m2a, 1 / a);
        return assemble(id, g, E(sdd_g), A(rhs), Direction::ge, alpha_out, {});
    }
    case TheoremId::T3_6_b_literal: {
        if (exact_alpha) {
            const Rational m1a = general_zagreb(g, 1.0, ZagrebKind::vertex).rat();
            const Rational rhs =
                Rational(delta) * delta * (2 * m) * (2 * m) / (Rational(Delta) * m1a);
            return assemble(id, g, E(sdd_g), E(rhs), Direction::ge, alpha_out, {});
        }
        const double m1a = general_zagreb(g, a, ZagrebKind::vertex).num();
        const double rhs = delta * delta * std::pow(2.0 * m, (a + 1) / a) /
                           (Delta * std::pow(m1a, 1 / a));
        return assemble(id, g, E(sdd_g), A(rhs), Direction::ge, alpha_out, {});
    }
    case TheoremId::T3_6_b_corrected: {
        if (exact_alpha) {
            const Rational m1a1 = general_zagreb(g, 2.0, ZagrebKind::vertex).rat();
            const Rational rhs =
                Rational(delta) * delta * (2 * m) * (2 * m) / (Rational(Delta) * m1a1);
            return assemble(id, g, E(sdd_g), E(rhs), Direction::ge, alpha_out, {});
        }
        const double m1a1 = general_zagreb(g, a + 1, ZagrebKind::vertex).num();
        const double rhs = delta * delta * std::pow(2.0 * m, (a + 1) / a) /
                           (Delta * std::pow(m1a1, 1 / a));
        return assemble(id, g, E(sdd_g), A(rhs), Direction::ge, alpha_out, {});
    }
    case TheoremId::T3_7_m2:
        return assemble(id, g, E(sdd_g), E(Rational(2 * m) * m / zagreb_m2(g)),
                        Direction::ge, {}, {});
    case TheoremId::T3_7_f:
        return assemble(id, g, E(sdd_g), E(Rational(4 * m) * m / forgotten(g)),
                        Direction::ge, {}, {});
    case TheoremId::T3_9:
        break; // handled above
    default:
        break;
    }

    // Line-graph side of the registry.
    const LineGraphResult line = line_graph(g);
    const Rational sdd_l = sdd(line.lg);
    const Rational m1 = zagreb_m1(g);
    const int floor_d = lower_degree_floor(delta);

    switch (id) {
    case TheoremId::T4_1_i:
        return assemble(id, g, E(sdd_l), E(Rational(2 * m)), Direction::ge, {}, {});
    case TheoremId::T4_1_ii:
        return assemble(id, g, E(sdd_l),
                        E((m1 / 2 - m) * (Rational(m - 1) + Rational(1, m - 1))),
                        Direction::le, {}, {});
    case TheoremId::T4_2_lower: {
        const Rational factor =
            std::max(Rational(4) * (delta - 1) * (delta - 1), Rational(1));
        return assemble(id, g, E(factor * inverse_degree(line.lg)), E(sdd_l),
                        Direction::le, {}, {});
    }
    case TheoremId::T4_2_upper:
        return assemble(id, g, E(sdd_l),
                        E(Rational(4) * (Delta - 1) * (Delta - 1) * inverse_degree(line.lg)),
                        Direction::le, {}, {});
    case TheoremId::T4_3_lower:
        return assemble(id, g, E(m1 - 2 * m), E(sdd_l), Direction::le, {}, {});
    case TheoremId::T4_3_upper:
        return assemble(id, g, E(sdd_l),
                        E((m1 - 2 * m) / 2 * bracket_term(2 * Delta - 2, floor_d)),
                        Direction::le, {}, {});
    case TheoremId::C4_4_lower:
        return assemble(id, g, E(m1), E(sdd_g + sdd_l), Direction::le, {}, {});
    case TheoremId::C4_4_upper:
        return assemble(id, g, E(sdd_g + sdd_l),
                        E(m1 / 2 * bracket_term(2 * Delta - 2, floor_d)), Direction::le,
                        {}, {});
    case TheoremId::T4_5_literal: {
        if (exact_alpha) {
            const Rational chi1 = sum_connectivity_chi(g, 1.0).rat();
            const Rational chi2 = sum_connectivity_chi(g, 2.0).rat();
            const Rational rhs = Rational(Delta) * delta * delta * chi2 /
                                 (Rational(Delta - 1) * (Delta - 1) * chi1);
            return assemble(id, g, E(sdd_l), E(rhs), Direction::ge, alpha_out, {});
        }
        const double chi_a = sum_connectivity_chi(g, a).num();
        const double chi_a1 = sum_connectivity_chi(g, a + 1).num();
        const double rhs = Delta * delta * delta * chi_a1 /
                           ((Delta - 1.0) * (Delta - 1.0) * std::pow(chi_a, 1 / a));
        return assemble(id, g, E(sdd_l), A(rhs), Direction::ge, alpha_out, {});
    }
    case TheoremId::T4_5_corrected: {
        const Rational base = m1 - 2 * m;
        if (exact_alpha) {
            const Rational chi2 = sum_connectivity_chi(g, 2.0).rat();
            const Rational rhs = Rational(floor_d) * floor_d * Delta * Delta * base * base /
                                 (Rational(2 * Delta - 2) * (Delta - 1) * (Delta - 1) * chi2);
            return assemble(id, g, E(sdd_l), E(rhs), Direction::ge, alpha_out, {});
        }
        const double chi_a1 = sum_connectivity_chi(g, a + 1).num();
        const double expo = (a + 1) / a;
        const double rhs = floor_d * floor_d * std::pow(Delta, expo) *
                           std::pow(rational_to_double(base), expo) /
                           ((2.0 * Delta - 2.0) * std::pow(Delta - 1.0, expo) *
                            std::pow(chi_a1, 1 / a));
        return assemble(id, g, E(sdd_l), A(rhs), Direction::ge, alpha_out, {});
    }
    case TheoremId::T4_6: {
        const Rational chi3 = sum_connectivity_chi(g, 3.0).rat();
        const Rational base = m1 - 2 * m;
        const Rational rhs = Rational(Delta) * Delta * Delta * base * base /
                             (Rational(Delta - 1) * (Delta - 1) * (Delta - 1) * chi3);
        return assemble(id, g, E(sdd_l), E(rhs), Direction::gt, {}, {});
    }
    case TheoremId::T4_8: {
        const Rational rhs =
            Rational(BigInt(Delta) * Delta - delta, BigInt(4) * delta) *
            Rational(BigInt(4) * (Delta - 1) * (Delta - 1) + BigInt(floor_d) * floor_d,
                     BigInt(Delta - 1) * floor_d);
        return assemble(id, g, E(sdd_l / sdd_g), E(rhs), Direction::le, {}, {});
    }
    default:
        break;
    }
    fail(Errc::BadParameter, "unhandled bound id");
}

BoundCheck check_t3_9(const Graph& g, Edge e) {
    if (g.order() < 2 || g.size() < 1 || !is_connected(g))
        fail(Errc::HypothesisNotMet, "edge-deletion bound needs a connected nontrivial graph");
    Edge edge{std::min(e.first, e.second), std::max(e.first, e.second)};
    const auto minimal = minimal_edges(g);
    if (std::find(minimal.begin(), minimal.end(), edge) == minimal.end())
        fail(Errc::NotMinimalEdge, "edge (" + std::to_string(edge.first) + "," +
                                       std::to_string(edge.second) + ") is not minimal");
    const int du = g.degree(edge.first);
    const int dv = g.degree(edge.second);
    const Graph reduced = without_edge(g, edge.first, edge.second);
    const Rational lhs = sdd(reduced);
    const Rational rhs = sdd(g) - Rational(BigInt(du) * du + BigInt(dv) * dv, BigInt(du) * dv);
    return assemble(TheoremId::T3_9, g, IndexValue::exact_of(lhs),
                    IndexValue::exact_of(rhs), Direction::gt, {}, edge);
}

namespace {

void record_check(SweepResult& out, BoundCheck bc, bool literal) {
    ++out.summary.checked;
    if (bc.exact && bc.equality) ++out.summary.equalities;
    if (!bc.holds) {
        ++out.summary.violations;
        out.discrepancies.push_back({bc.theorem, bc.graph6, bc.edge, bc.alpha,
                                     bc.lhs.str(), bc.rhs.str(),
                                     DiscrepancyRecord::Kind::bound_violated});
    } else if (bc.exact && !bc.consistent && !literal) {
        ++out.summary.mismatches;
        out.discrepancies.push_back({bc.theorem, bc.graph6, bc.edge, bc.alpha,
                                     bc.lhs.str(), bc.rhs.str(),
                                     DiscrepancyRecord::Kind::equality_mismatch});
    }
    out.checks.push_back(std::move(bc));
}

void sweep_block(TheoremId id, const std::vector<Graph>& graphs, size_t begin, size_t end,
                 const std::vector<double>& alphas, SweepResult& out) {
    const TheoremInfo& info = theorem_info(id);
    for (size_t i = begin; i < end; ++i) {
        const Graph& g = graphs[i];
        if (!hypothesis_met(id, g)) {
            ++out.summary.skipped;
            continue;
        }
        if (info.per_edge) {
            if (g.size() == 1) {
                // deleting the only edge leaves nothing to measure
                ++out.summary.skipped;
                continue;
            }
            for (const Edge& e : minimal_edges(g))
                record_check(out, check_t3_9(g, e), info.literal);
        } else if (info.alpha_parameterized) {
            for (double a : alphas) record_check(out, check(id, g, a), info.literal);
        } else {
            record_check(out, check(id, g), info.literal);
        }
    }
}

bool discrepancy_before(const DiscrepancyRecord& a, const DiscrepancyRecord& b) {
    if (a.witness != b.witness) return a.witness < b.witness;
    if (a.theorem != b.theorem) return a.theorem < b.theorem;
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.edge < b.edge;
}

} // namespace

SweepResult sweep(TheoremId id, const std::vector<Graph>& graphs,
                  const std::vector<double>& alphas, int threads) {
    const std::vector<double>& as =
        theorem_info(id).alpha_parameterized && !alphas.empty() ? alphas
                                                                : std::vector<double>{1.0};
    threads = std::max(1, threads);
    const size_t total = graphs.size();
    SweepResult merged;
    if (threads == 1 || total < 2) {
        sweep_block(id, graphs, 0, total, as, merged);
    } else {
        const size_t blocks = std::min<size_t>(static_cast<size_t>(threads), total);
        std::vector<SweepResult> partial(blocks);
        std::vector<std::thread> workers;
        workers.reserve(blocks);
        for (size_t b = 0; b < blocks; ++b) {
            const size_t begin = total * b / blocks;
            const size_t end = total * (b + 1) / blocks;
            workers.emplace_back([&, b, begin, end] {
                sweep_block(id, graphs, begin, end, as, partial[b]);
            });
        }
        for (auto& w : workers) w.join();
        for (auto& p : partial) {
            merged.summary.checked += p.summary.checked;
            merged.summary.skipped += p.summary.skipped;
            merged.summary.equalities += p.summary.equalities;
            merged.summary.violations += p.summary.violations;
            merged.summary.mismatches += p.summary.mismatches;
            std::move(p.checks.begin(), p.checks.end(), std::back_inserter(merged.checks));
            std::move(p.discrepancies.begin(), p.discrepancies.end(),
                      std::back_inserter(merged.discrepancies));
        }
    }
    std::sort(merged.discrepancies.begin(), merged.discrepancies.end(), discrepancy_before);
    return merged;
}

SweepResult sweep(TheoremId id, GraphStream stream, const std::vector<double>& alphas,
                  int threads) {
    return sweep(id, stream.drain(), alphas, threads);
}

} // namespace sddlab
