#include "sddlab/indices.hpp"

#include <array>
#include <cmath>
#include <cstdio>

namespace sddlab {

namespace {

constexpr std::array<std::string_view, 9> kIndexNames = {
    "sdd", "m1", "m2", "m1a", "m2a", "chi", "ga", "id", "f"};

bool integral(double alpha, long long& out) {
    if (!std::isfinite(alpha) || std::floor(alpha) != alpha) return false;
    if (alpha > 1e6 || alpha < -1e6) return false;
    out = static_cast<long long>(alpha);
    return true;
}

} // namespace

std::string_view index_name(IndexId id) {
    return kIndexNames[static_cast<size_t>(id)];
}

std::optional<IndexId> index_from_name(const std::string& name) {
    for (size_t i = 0; i < kIndexNames.size(); ++i)
        if (name == kIndexNames[i]) return static_cast<IndexId>(i);
    return std::nullopt;
}

double IndexValue::num() const {
    if (exact()) return rational_to_double(rat());
    return std::get<double>(value);
}

std::string IndexValue::str() const {
    if (exact()) return rational_to_string(rat());
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", std::get<double>(value));
    return buf;
}

Rational sdd(const Graph& g) {
    Rational total(0);
    for (const auto& [u, v] : g.edges()) {
        const int du = g.degree(u), dv = g.degree(v);
        total += Rational(du, dv) + Rational(dv, du);
    }
    return total;
}

Rational zagreb_m1(const Graph& g) {
    BigInt vertex_sum(0);
    for (int d : g.degrees()) vertex_sum += BigInt(d) * d;
    BigInt edge_sum(0);
    for (const auto& [u, v] : g.edges()) edge_sum += g.degree(u) + g.degree(v);
    if (vertex_sum != edge_sum)
        throw std::logic_error("M1 vertex-sum and edge-sum disagree");
    return Rational(vertex_sum);
}

Rational zagreb_m2(const Graph& g) {
    BigInt total(0);
    for (const auto& [u, v] : g.edges()) total += BigInt(g.degree(u)) * g.degree(v);
    return Rational(total);
}

IndexValue general_zagreb(const Graph& g, double alpha, ZagrebKind which) {
    IndexValue out;
    out.id = which == ZagrebKind::vertex ? IndexId::m1a : IndexId::m2a;
    out.alpha = alpha;
    long long e = 0;
    const bool exact = integral(alpha, e);
    if (alpha <= 0 && which == ZagrebKind::vertex) {
        for (int d : g.degrees())
            if (d == 0)
                fail(Errc::ZeroDegreeNegativeExponent,
                     "degree-0 vertex with exponent <= 0");
    }
    if (exact) {
        Rational total(0);
        if (which == ZagrebKind::vertex) {
            for (int d : g.degrees()) total += rational_pow(Rational(d), e);
        } else {
            for (const auto& [u, v] : g.edges())
                total += rational_pow(Rational(g.degree(u)) * g.degree(v), e);
        }
        out.value = total;
        return out;
    }
    double total = 0;
    if (which == ZagrebKind::vertex) {
        for (int d : g.degrees()) total += std::pow(d, alpha);
    } else {
        for (const auto& [u, v] : g.edges())
            total += std::pow(static_cast<double>(g.degree(u)) * g.degree(v), alpha);
    }
    out.value = total;
    return out;
}

IndexValue sum_connectivity_chi(const Graph& g, double alpha) {
    IndexValue out;
    out.id = IndexId::chi;
    out.alpha = alpha;
    long long e = 0;
    if (integral(alpha, e) && e >= 0) {
        Rational total(0);
        for (const auto& [u, v] : g.edges())
            total += rational_pow(Rational(g.degree(u) + g.degree(v)), e);
        out.value = total;
        return out;
    }
    double total = 0;
    for (const auto& [u, v] : g.edges())
        total += std::pow(g.degree(u) + g.degree(v), alpha);
    out.value = total;
    return out;
}

double geometric_arithmetic(const Graph& g) {
    double total = 0;
    for (const auto& [u, v] : g.edges()) {
        const double du = g.degree(u), dv = g.degree(v);
        total += 2.0 * std::sqrt(du * dv) / (du + dv);
    }
    return total;
}

Rational inverse_degree(const Graph& g) {
    Rational total(0);
    for (int d : g.degrees()) {
        if (d == 0) fail(Errc::IsolatedVertex, "inverse degree needs all degrees >= 1");
        total += Rational(1, d);
    }
    return total;
}

Rational forgotten(const Graph& g) {
    BigInt edge_sum(0);
    for (const auto& [u, v] : g.edges())
        edge_sum += BigInt(g.degree(u)) * g.degree(u) + BigInt(g.degree(v)) * g.degree(v);
    BigInt cube_sum(0);
    for (int d : g.degrees()) cube_sum += BigInt(d) * d * d;
    if (edge_sum != cube_sum)
        throw std::logic_error("F edge-sum and degree cube-sum disagree");
    return Rational(edge_sum);
}

IndexValue compute_index(const Graph& g, IndexId id, std::optional<double> alpha) {
    const double a = alpha.value_or(1.0);
    IndexValue out;
    switch (id) {
    case IndexId::sdd: out.value = sdd(g); break;
    case IndexId::m1: out.value = zagreb_m1(g); break;
    case IndexId::m2: out.value = zagreb_m2(g); break;
    case IndexId::m1a: return general_zagreb(g, a, ZagrebKind::vertex);
    case IndexId::m2a: return general_zagreb(g, a, ZagrebKind::edge);
    case IndexId::chi: return sum_connectivity_chi(g, a);
    case IndexId::ga: out.value = geometric_arithmetic(g); break;
    case IndexId::id: out.value = inverse_degree(g); break;
    case IndexId::f: out.value = forgotten(g); break;
    }
    out.id = id;
    return out;
}

} // namespace sddlab
