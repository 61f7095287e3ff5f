#pragma once

#include "sddlab/graph.hpp"
#include "sddlab/rational.hpp"

#include <optional>
#include <string>
#include <variant>

namespace sddlab {

enum class IndexId { sdd, m1, m2, m1a, m2a, chi, ga, id, f };

std::string_view index_name(IndexId id);
std::optional<IndexId> index_from_name(const std::string& name);

// Tagged exact-or-approximate scalar. Index values that are rational by
// construction travel on the exact path; everything else is a double
// compared under kRelTol.
struct IndexValue {
    std::variant<Rational, double> value;
    std::optional<IndexId> id;
    std::optional<double> alpha;

    static IndexValue exact_of(Rational v) { return IndexValue{std::move(v), {}, {}}; }
    static IndexValue approx_of(double v) { return IndexValue{v, {}, {}}; }

    bool exact() const { return std::holds_alternative<Rational>(value); }
    const Rational& rat() const { return std::get<Rational>(value); }
    double num() const;
    std::string str() const; // "p/q" when exact, 12 significant digits otherwise
};

// Relative tolerance for the approximate comparison path.
inline constexpr double kRelTol = 1e-9;

// sum over edges of d_u/d_v + d_v/d_u; 0 for an edgeless graph.
Rational sdd(const Graph& g);

// First Zagreb index, computed as the vertex square-sum and cross-checked
// against the edge degree-sum form.
Rational zagreb_m1(const Graph& g);
Rational zagreb_m2(const Graph& g);

enum class ZagrebKind { vertex, edge }; // M1^a over vertices, M2^a over edges

// General Zagreb indices with real exponent. Exact for integer alpha
// (negative integer alpha requires all in-scope degrees nonzero).
IndexValue general_zagreb(const Graph& g, double alpha, ZagrebKind which);

// General sum-connectivity: sum over edges of (d_u + d_v)^alpha. Exact for
// integer alpha >= 0.
IndexValue sum_connectivity_chi(const Graph& g, double alpha);

double geometric_arithmetic(const Graph& g);

// Inverse degree: sum over vertices of 1/d_u; rejects isolated vertices.
Rational inverse_degree(const Graph& g);

// Forgotten index: edge sum of d_u^2 + d_v^2, cross-checked against the
// vertex cube-sum.
Rational forgotten(const Graph& g);

// CLI-facing dispatcher over the index identifiers.
IndexValue compute_index(const Graph& g, IndexId id, std::optional<double> alpha);

} // namespace sddlab
