#include "sddlab/enumerate.hpp"

#include "sddlab/graph6.hpp"
#include "sddlab/indices.hpp"
#include "sddlab/line_graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <map>
#include <mutex>
#include <set>

namespace sddlab {

namespace {

constexpr int kMaxCanonOrder = 10;
constexpr int kMaxBuiltinOrder = 8;

// Minimizes the packed upper-triangle bit string (graph6 bit order,
// MSB-first in a uint64) over all orderings compatible with iterated
// refinement, branching by individualization inside the first
// non-singleton cell. C(10,2) = 45 bits, so one word suffices.
class Canonizer {
public:
    explicit Canonizer(const Graph& g) : n_(g.order()) {
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                if (u != v && g.adjacent(u, v))
                    adj_[static_cast<size_t>(u)] |= uint16_t{1} << v;
    }

    // position -> vertex of the minimizing labeling
    std::array<int, kMaxCanonOrder> run() {
        have_best_ = false;
        if (n_ <= 1) {
            best_perm_[0] = 0;
            return best_perm_;
        }
        Partition start{std::vector<int>(static_cast<size_t>(n_))};
        for (int v = 0; v < n_; ++v) start[0][static_cast<size_t>(v)] = v;
        search(std::move(start));
        return best_perm_;
    }

private:
    using Partition = std::vector<std::vector<int>>;

    void refine(Partition& part) const {
        for (bool changed = true; changed;) {
            changed = false;
            std::vector<uint16_t> cellmask(part.size(), 0);
            for (size_t c = 0; c < part.size(); ++c)
                for (int v : part[c]) cellmask[c] |= uint16_t{1} << v;
            for (size_t c = 0; c < part.size() && !changed; ++c) {
                if (part[c].size() <= 1) continue;
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(part[c].size());
                for (int v : part[c]) {
                    std::vector<int> key(part.size());
                    for (size_t k = 0; k < part.size(); ++k)
                        key[k] = std::popcount(
                            static_cast<unsigned>(adj_[static_cast<size_t>(v)] & cellmask[k]));
                    keyed.emplace_back(std::move(key), v);
                }
                std::sort(keyed.begin(), keyed.end());
                if (keyed.front().first == keyed.back().first) continue;
                Partition next(part.begin(), part.begin() + static_cast<long>(c));
                for (size_t i = 0; i < keyed.size();) {
                    size_t j = i;
                    std::vector<int> group;
                    while (j < keyed.size() && keyed[j].first == keyed[i].first)
                        group.push_back(keyed[j++].second);
                    std::sort(group.begin(), group.end());
                    next.push_back(std::move(group));
                    i = j;
                }
                next.insert(next.end(), part.begin() + static_cast<long>(c) + 1, part.end());
                part = std::move(next);
                changed = true;
            }
        }
    }

    uint64_t pack_prefix(const std::array<int, kMaxCanonOrder>& perm, int count) const {
        uint64_t out = 0;
        int idx = 0;
        for (int j = 1; j < count; ++j)
            for (int i = 0; i < j; ++i, ++idx)
                if ((adj_[static_cast<size_t>(perm[static_cast<size_t>(i)])] >>
                     perm[static_cast<size_t>(j)]) & 1)
                    out |= uint64_t{1} << (63 - idx);
        return out;
    }

    void search(Partition part) {
        refine(part);
        std::array<int, kMaxCanonOrder> prefix{};
        size_t c = 0;
        int k = 0;
        while (c < part.size() && part[c].size() == 1) prefix[static_cast<size_t>(k++)] = part[c++][0];
        if (have_best_ && k >= 2) {
            const int bits = k * (k - 1) / 2;
            const uint64_t mask = ~uint64_t{0} << (64 - bits);
            if ((pack_prefix(prefix, k) & mask) > (best_ & mask)) return;
        }
        if (c == part.size()) {
            const uint64_t value = pack_prefix(prefix, n_);
            if (!have_best_ || value < best_) {
                best_ = value;
                best_perm_ = prefix;
                have_best_ = true;
            }
            return;
        }
        const std::vector<int> cell = part[c];
        for (int v : cell) {
            Partition child(part.begin(), part.begin() + static_cast<long>(c));
            child.push_back({v});
            std::vector<int> rest;
            rest.reserve(cell.size() - 1);
            for (int w : cell)
                if (w != v) rest.push_back(w);
            child.push_back(std::move(rest));
            child.insert(child.end(), part.begin() + static_cast<long>(c) + 1, part.end());
            search(std::move(child));
            if (interchangeable(cell)) break; // sibling branches are automorphic images
        }
    }

    // True when swapping any two cell members is an automorphism of the
    // whole graph: identical neighborhoods outside the cell and a clique
    // or independent set inside. Then every branch of the cell yields the
    // same minimum and one suffices.
    bool interchangeable(const std::vector<int>& cell) const {
        uint16_t mask = 0;
        for (int v : cell) mask |= uint16_t{1} << v;
        const uint16_t outside0 = adj_[static_cast<size_t>(cell[0])] & ~mask;
        const uint16_t inside0 = adj_[static_cast<size_t>(cell[0])] & mask;
        const bool clique = inside0 == (mask ^ (uint16_t{1} << cell[0]));
        if (!clique && inside0 != 0) return false;
        for (int v : cell) {
            const uint16_t row = adj_[static_cast<size_t>(v)];
            if ((row & ~mask) != outside0) return false;
            const uint16_t inside = row & mask;
            if (clique ? inside != (mask ^ (uint16_t{1} << v)) : inside != 0) return false;
        }
        return true;
    }

    int n_;
    std::array<uint16_t, kMaxCanonOrder> adj_{};
    uint64_t best_ = 0;
    std::array<int, kMaxCanonOrder> best_perm_{};
    bool have_best_ = false;
};

} // namespace

Graph canonical_relabel(const Graph& g) {
    const int n = g.order();
    if (n > kMaxCanonOrder)
        fail(Errc::TooLarge, "canonical form supports n <= 10, got " + std::to_string(n));
    if (n <= 1) return g;
    Canonizer canon(g);
    const auto perm = canon.run();
    std::vector<int> position_of(static_cast<size_t>(n));
    for (int pos = 0; pos < n; ++pos)
        position_of[static_cast<size_t>(perm[static_cast<size_t>(pos)])] = pos;
    return relabeled(g, position_of);
}

CanonicalForm canonical_form(const Graph& g) {
    return CanonicalForm{graph6_encode(canonical_relabel(g))};
}

const std::vector<Graph>& connected_graphs(int n) {
    if (n < 1) fail(Errc::BadParameter, "order must be >= 1");
    if (n > kMaxBuiltinOrder)
        fail(Errc::TooLarge,
             "builtin generator supports n <= 8; use graph6 file input beyond that");

    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    for (int k = 1; k <= n; ++k) {
        if (cache.count(k)) continue;
        if (k == 1) {
            cache[1] = {Graph(1)};
            continue;
        }
        std::set<std::string> seen;
        const std::vector<Graph>& parents = cache[k - 1];
        for (const Graph& parent : parents) {
            std::vector<Edge> base = parent.edges();
            for (unsigned mask = 1; mask < (1u << (k - 1)); ++mask) {
                std::vector<Edge> edges = base;
                for (int v = 0; v < k - 1; ++v)
                    if ((mask >> v) & 1) edges.emplace_back(v, k - 1);
                const Graph candidate = Graph::from_edges(k, edges);
                seen.insert(graph6_encode(canonical_relabel(candidate)));
            }
        }
        std::vector<Graph> level;
        level.reserve(seen.size());
        for (const std::string& bytes : seen) level.push_back(graph6_decode(bytes));
        cache[k] = std::move(level); // std::set iterates sorted
    }
    return cache[n];
}

struct GraphStream::Impl {
    bool builtin = true;
    int n_min = 1, n_max = 1;
    int current_order = 0;
    size_t index = 0;
    std::vector<Graph> file_graphs;
    bool dedup = false;
    bool connected_only = true;
    std::optional<std::pair<int, int>> order_range;
    std::optional<std::pair<int, int>> size_range;
    std::set<std::string> seen;

    bool passes(const Graph& g) {
        if (order_range &&
            (g.order() < order_range->first || g.order() > order_range->second))
            return false;
        if (size_range && (g.size() < size_range->first || g.size() > size_range->second))
            return false;
        if (connected_only && !is_connected(g)) return false;
        if (dedup && !seen.insert(canonical_form(g).bytes).second) return false;
        return true;
    }
};

GraphStream::GraphStream() : impl_(std::make_unique<Impl>()) {}
GraphStream::GraphStream(GraphStream&&) noexcept = default;
GraphStream& GraphStream::operator=(GraphStream&&) noexcept = default;
GraphStream::~GraphStream() = default;

GraphStream GraphStream::builtin(int n_min, int n_max) {
    if (n_min < 1 || n_max < n_min) fail(Errc::BadParameter, "bad order range");
    if (n_max > kMaxBuiltinOrder)
        fail(Errc::TooLarge, "builtin generator supports n <= 8");
    GraphStream s;
    s.impl_->builtin = true;
    s.impl_->n_min = n_min;
    s.impl_->n_max = n_max;
    s.impl_->current_order = n_min;
    return s;
}

GraphStream GraphStream::from_file(const std::string& path, bool dedup,
                                   bool connected_only) {
    std::ifstream in(path);
    if (!in) fail(Errc::BadParameter, "cannot open " + path);
    GraphStream s;
    s.impl_->builtin = false;
    s.impl_->file_graphs = read_graph6_stream(in);
    s.impl_->dedup = dedup;
    s.impl_->connected_only = connected_only;
    return s;
}

void GraphStream::set_order_range(int lo, int hi) {
    impl_->order_range = {lo, hi};
}

void GraphStream::set_size_range(int lo, int hi) {
    impl_->size_range = {lo, hi};
}

std::optional<Graph> GraphStream::next() {
    Impl& s = *impl_;
    if (s.builtin) {
        while (s.current_order <= s.n_max) {
            const auto& level = connected_graphs(s.current_order);
            while (s.index < level.size()) {
                const Graph& g = level[s.index++];
                if (s.passes(g)) return g;
            }
            ++s.current_order;
            s.index = 0;
        }
        return std::nullopt;
    }
    while (s.index < s.file_graphs.size()) {
        const Graph& g = s.file_graphs[s.index++];
        if (s.passes(g)) return g;
    }
    return std::nullopt;
}

std::vector<Graph> GraphStream::drain() {
    std::vector<Graph> out;
    while (auto g = next()) out.push_back(std::move(*g));
    return out;
}

namespace {

Rational target_sdd(const Graph& g, TargetObject target) {
    if (target == TargetObject::graph) return sdd(g);
    if (g.size() == 0) return Rational(0);
    return sdd(line_graph(g).lg);
}

} // namespace

std::vector<ClassificationResult> classify_by_sdd(int n_max,
                                                  const std::vector<SddInterval>& intervals,
                                                  TargetObject target) {
    std::vector<ClassificationResult> results;
    results.reserve(intervals.size());
    for (const auto& interval : intervals) results.push_back({interval, {}});
    for (int n = 2; n <= n_max; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            const Rational value = target_sdd(g, target);
            for (auto& result : results)
                if (result.interval.lo < value && value <= result.interval.hi)
                    result.members.emplace_back(graph6_encode(g), value);
        }
    }
    return results;
}

std::vector<std::string> inverse_solve(const Rational& target, int n_max,
                                       TargetObject target_object) {
    std::vector<std::string> hits;
    for (int n = 2; n <= n_max; ++n)
        for (const Graph& g : connected_graphs(n))
            if (target_sdd(g, target_object) == target) hits.push_back(graph6_encode(g));
    return hits;
}

ExtremalResult extremal_search(int n, std::optional<int> m, bool maximize) {
    if (n < 1) fail(Errc::BadParameter, "order must be >= 1");
    if (n > kMaxBuiltinOrder) fail(Errc::TooLarge, "extremal search supports n <= 8");
    if (m) {
        const int lo = n - 1, hi = n * (n - 1) / 2;
        if (*m < lo || *m > hi)
            fail(Errc::Infeasible, "no connected graph with n = " + std::to_string(n) +
                                       ", m = " + std::to_string(*m));
    }
    ExtremalResult result;
    bool first = true;
    for (const Graph& g : connected_graphs(n)) {
        if (m && g.size() != *m) continue;
        const Rational value = sdd(g);
        if (first || (maximize ? value > result.value : value < result.value)) {
            result.value = value;
            result.witnesses = {graph6_encode(g)};
            first = false;
        } else if (value == result.value) {
            result.witnesses.push_back(graph6_encode(g));
        }
    }
    std::sort(result.witnesses.begin(), result.witnesses.end());
    return result;
}

} // namespace sddlab
