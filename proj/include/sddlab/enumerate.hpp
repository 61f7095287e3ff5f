#pragma once

#include "sddlab/graph.hpp"
#include "sddlab/rational.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sddlab {

// Relabeling-invariant certificate: the graph6 bytes of the labeling that
// minimizes the packed upper-triangle bit string over all orderings
// compatible with iterated degree/neighborhood refinement. Equal bytes
// if and only if isomorphic.
struct CanonicalForm {
    std::string bytes;
    auto operator<=>(const CanonicalForm&) const = default;
};

// Supported up to n = 10; larger orders are rejected.
CanonicalForm canonical_form(const Graph& g);

// The graph relabeled into its canonical ordering.
Graph canonical_relabel(const Graph& g);

// One representative per isomorphism class of connected graphs on n
// vertices (1 <= n <= 8), canonically labeled, sorted by graph6 bytes.
// Built by augmenting the (n-1)-vertex classes with one new vertex and
// deduplicating on canonical form; results are cached per order.
const std::vector<Graph>& connected_graphs(int n);

// Iterator over connected graphs from the builtin generator or a graph6
// file, with optional order/size filters.
class GraphStream {
public:
    static GraphStream builtin(int n_min, int n_max);
    static GraphStream from_file(const std::string& path, bool dedup = false,
                                 bool connected_only = true);

    GraphStream(GraphStream&&) noexcept;
    GraphStream& operator=(GraphStream&&) noexcept;
    ~GraphStream();

    void set_order_range(int lo, int hi);
    void set_size_range(int lo, int hi);

    std::optional<Graph> next();
    std::vector<Graph> drain();

private:
    GraphStream();
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

struct SddInterval {
    Rational lo; // exclusive
    Rational hi; // inclusive
};

enum class TargetObject { graph, line_graph };

struct ClassificationResult {
    SddInterval interval;
    // (graph6 of the source graph G, exact SDD of the target object)
    std::vector<std::pair<std::string, Rational>> members;
};

// Buckets every connected graph class with 2 <= n <= n_max by the exact
// SDD value of the graph itself or of its line graph. Members are
// reported by source graph, sorted by graph6 bytes.
std::vector<ClassificationResult> classify_by_sdd(int n_max,
                                                  const std::vector<SddInterval>& intervals,
                                                  TargetObject target);

// All classes whose target SDD equals the given rational exactly; an
// empty list is a valid negative certificate within the range.
std::vector<std::string> inverse_solve(const Rational& target, int n_max,
                                       TargetObject target_object);

struct ExtremalResult {
    Rational value;
    std::vector<std::string> witnesses; // full tie set, sorted
};

// Minimum or maximum SDD over connected classes of order n (and size m
// when given).
ExtremalResult extremal_search(int n, std::optional<int> m, bool maximize);

} // namespace sddlab
