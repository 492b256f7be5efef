#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tautgraph {

/// Order-independent fingerprint of an r-marked multigraph. Two graphs have
/// equal keys iff they are isomorphic by a bijection fixing the marked
/// vertices pointwise and permuting the unmarked ones.
struct CanonicalKey {
    std::vector<int> data;
    auto operator<=>(const CanonicalKey&) const = default;
};

/// An r-marked multigraph. Marked vertices are ids 1..r, unmarked vertices
/// are ids r+1..r+u; edges form a multiset of unordered id pairs, a loop
/// being the pair {v,v}. Stored as (min,max) -> multiplicity.
class MarkedGraph {
public:
    using EdgeMap = std::map<std::pair<int, int>, int>;

    MarkedGraph(int r, int u, const std::vector<std::pair<int, int>>& edges)
        : r_(r), u_(u) {
        if (r < 0 || u < 0) throw std::invalid_argument("MarkedGraph: negative vertex count");
        for (auto [a, b] : edges) add_edge(a, b, 1);
    }

    /// The r-marked graph with no edges and no unmarked vertices (the wedge
    /// unit; for r = 0 it is the empty graph).
    static MarkedGraph bare_marks(int r) { return MarkedGraph(r, 0, {}); }

    [[nodiscard]] int r() const { return r_; }
    [[nodiscard]] int u() const { return u_; }
    [[nodiscard]] int vertex_count() const { return r_ + u_; }
    [[nodiscard]] bool is_marked(int v) const { return v >= 1 && v <= r_; }
    [[nodiscard]] const EdgeMap& edges() const { return edges_; }

    [[nodiscard]] int edge_count() const {
        int e = 0;
        for (const auto& [pair, mult] : edges_) e += mult;
        return e;
    }

    [[nodiscard]] int multiplicity(int a, int b) const {
        if (a > b) std::swap(a, b);
        auto it = edges_.find({a, b});
        return it == edges_.end() ? 0 : it->second;
    }

    /// Number of times v occurs as an endpoint; each loop contributes 2.
    [[nodiscard]] int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (const auto& [pair, mult] : edges_) {
            if (pair.first == v) d += mult;
            if (pair.second == v) d += mult;
        }
        return d;
    }

    [[nodiscard]] int loop_count(int v) const {
        check_vertex(v);
        auto it = edges_.find({v, v});
        return it == edges_.end() ? 0 : it->second;
    }

    /// Number of incident edges counted with multiplicity (loops count once).
    [[nodiscard]] int incident_edge_count(int v) const {
        check_vertex(v);
        int n = 0;
        for (const auto& [pair, mult] : edges_)
            if (pair.first == v || pair.second == v) n += mult;
        return n;
    }

    [[nodiscard]] int euler_char() const { return vertex_count() - edge_count(); }

    void add_edge(int a, int b, int mult = 1) {
        check_vertex(a);
        check_vertex(b);
        if (mult <= 0) throw std::invalid_argument("MarkedGraph: nonpositive edge multiplicity");
        if (a > b) std::swap(a, b);
        edges_[{a, b}] += mult;
    }

    friend bool operator==(const MarkedGraph& a, const MarkedGraph& b) {
        return a.r_ == b.r_ && a.u_ == b.u_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const MarkedGraph& a, const MarkedGraph& b) { return !(a == b); }

private:
    void check_vertex(int v) const {
        if (v < 1 || v > r_ + u_)
            throw std::invalid_argument("MarkedGraph: vertex id " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(r_ + u_));
    }

    int r_ = 0;
    int u_ = 0;
    EdgeMap edges_;
};

inline MarkedGraph make_graph(int r, int u, const std::vector<std::pair<int, int>>& edges) {
    return MarkedGraph(r, u, edges);
}

inline int euler_char(const MarkedGraph& g) { return g.euler_char(); }
inline int vertex_degree(const MarkedGraph& g, int v) { return g.degree(v); }

/// The graph induced by a total vertex map f: ids of g -> 1..new_r+new_u
/// (f[i-1] is the image of vertex i). Edge count is preserved; whether the
/// result's marking makes sense is the caller's business.
inline MarkedGraph induced_graph(const MarkedGraph& g, const std::vector<int>& f,
                                 int new_r, int new_u) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw std::invalid_argument("induced_graph: map not total on vertices");
    MarkedGraph out(new_r, new_u, {});
    for (const auto& [pair, mult] : g.edges())
        out.add_edge(f[pair.first - 1], f[pair.second - 1], mult);
    return out;
}

namespace detail {

inline CanonicalKey encode(const MarkedGraph& g) {
    CanonicalKey key;
    key.data.reserve(3 + 3 * g.edges().size());
    key.data.push_back(g.r());
    key.data.push_back(g.u());
    key.data.push_back(static_cast<int>(g.edges().size()));
    for (const auto& [pair, mult] : g.edges()) {
        key.data.push_back(pair.first);
        key.data.push_back(pair.second);
        key.data.push_back(mult);
    }
    return key;
}

/// Visits every relabeling of the unmarked vertices that respects the
/// (degree, loop count) partition: vertices are grouped into classes sorted
/// by signature, each class occupies a fixed block of target labels, and all
/// within-class assignments are enumerated.
template <typename Visit>
void for_each_class_relabeling(const MarkedGraph& g, Visit&& visit) {
    const int r = g.r(), u = g.u();
    std::vector<int> unmarked(u);
    std::iota(unmarked.begin(), unmarked.end(), r + 1);

    std::vector<std::pair<std::pair<int, int>, int>> tagged; // (signature, id)
    tagged.reserve(u);
    for (int v : unmarked) tagged.push_back({{g.degree(v), g.loop_count(v)}, v});
    std::sort(tagged.begin(), tagged.end());

    std::vector<std::vector<int>> blocks;
    for (std::size_t i = 0; i < tagged.size(); ++i) {
        if (i == 0 || tagged[i].first != tagged[i - 1].first) blocks.emplace_back();
        blocks.back().push_back(tagged[i].second);
    }

    std::vector<int> relabel(r + u + 1, 0); // old id -> new id
    for (int i = 1; i <= r; ++i) relabel[i] = i;

    // Odometer over per-block permutations; blocks.size() == 0 means u == 0.
    std::vector<std::vector<int>> perms = blocks;
    auto apply = [&] {
        int next = r + 1;
        for (const auto& perm : perms)
            for (int old_id : perm) relabel[old_id] = next++;
        visit(relabel);
    };
    std::size_t bi = 0;
    apply();
    while (bi < perms.size()) {
        if (std::next_permutation(perms[bi].begin(), perms[bi].end())) {
            for (std::size_t j = 0; j < bi; ++j) perms[j] = blocks[j];
            bi = 0;
            apply();
        } else {
            ++bi;
        }
    }
}

} // namespace detail

/// Canonical representative and key: the lexicographically least edge
/// encoding over all degree/loop-class-respecting relabelings of the
/// unmarked vertices. Deterministic across runs and platforms.
inline std::pair<MarkedGraph, CanonicalKey> canonicalize(const MarkedGraph& g) {
    if (g.u() <= 1) return {g, detail::encode(g)};
    MarkedGraph best = g;
    CanonicalKey best_key;
    bool have = false;
    detail::for_each_class_relabeling(g, [&](const std::vector<int>& relabel) {
        std::vector<int> f(relabel.begin() + 1, relabel.end());
        MarkedGraph candidate = induced_graph(g, f, g.r(), g.u());
        CanonicalKey key = detail::encode(candidate);
        if (!have || key < best_key) {
            best = std::move(candidate);
            best_key = std::move(key);
            have = true;
        }
    });
    return {best, best_key};
}

inline CanonicalKey canonical_key(const MarkedGraph& g) { return canonicalize(g).second; }

inline bool is_isomorphic(const MarkedGraph& a, const MarkedGraph& b) {
    if (a.r() != b.r())
        throw std::invalid_argument("is_isomorphic: marking sizes differ");
    if (a.u() != b.u() || a.edge_count() != b.edge_count()) return false;
    return canonical_key(a) == canonical_key(b);
}

} // namespace tautgraph
