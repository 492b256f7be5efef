#pragma once

#include "tautgraph/marked_graph.hpp"
#include "tautgraph/set_map.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace tautgraph {

/// Glue two r-marked graphs along their markings: marked vertices are
/// identified pairwise, everything else is a disjoint union. This is the
/// graph-side counterpart of the wedge product of forms, and satisfies
/// chi(glue(G,H)) = chi(G) + chi(H) - r.
inline MarkedGraph glue(const MarkedGraph& g, const MarkedGraph& h) {
    if (g.r() != h.r())
        throw std::invalid_argument("glue: marking sizes differ");
    const int r = g.r();
    MarkedGraph out(r, g.u() + h.u(), {});
    for (const auto& [pair, mult] : g.edges()) out.add_edge(pair.first, pair.second, mult);
    for (const auto& [pair, mult] : h.edges()) {
        auto shift = [&](int v) { return v <= r ? v : v + g.u(); };
        out.add_edge(shift(pair.first), shift(pair.second), mult);
    }
    return out;
}

/// Pushforward along phi: {1..s} -> {1..r}: the s marked vertices are
/// replaced by r marked vertices via the pushout of the marking, so marks
/// with the same image merge. Unmarked vertices and the edge count are
/// untouched; chi changes by r - s.
inline MarkedGraph pushforward(const SetMap& phi, const MarkedGraph& g) {
    if (g.r() != phi.source_size())
        throw std::invalid_argument("pushforward: graph marking size differs from map source");
    const int s = phi.source_size(), r = phi.target_size();
    std::vector<int> f(g.vertex_count());
    for (int k = 1; k <= s; ++k) f[k - 1] = phi(k);
    for (int i = 1; i <= g.u(); ++i) f[s + i - 1] = r + i;
    return induced_graph(g, f, r, g.u());
}

/// Pullback along an injective phi: {1..s} -> {1..r}: vertex and edge sets
/// are unchanged, the marking is precomposed with phi. Marks outside the
/// image of phi become unmarked (relabeled in ascending order after the
/// kept marks); chi is preserved.
inline MarkedGraph pullback(const SetMap& phi, const MarkedGraph& g) {
    if (!phi.is_injective())
        throw std::invalid_argument("pullback: map is not injective");
    if (g.r() != phi.target_size())
        throw std::invalid_argument("pullback: graph marking size differs from map target");
    const int s = phi.source_size(), r = phi.target_size();
    std::vector<int> f(g.vertex_count(), 0);
    for (int k = 1; k <= s; ++k) f[phi(k) - 1] = k;
    int next = s + 1;
    for (int v = 1; v <= r; ++v)
        if (f[v - 1] == 0) f[v - 1] = next++;
    for (int i = 1; i <= g.u(); ++i) f[r + i - 1] = next++;
    return induced_graph(g, f, s, g.u() + (r - s));
}

/// Scalar picked up by one contraction step.
enum class Multiplier { zero, one, two_minus_2g };

struct ContractionResult {
    MarkedGraph graph;
    Multiplier multiplier;
};

/// True iff v is an unmarked vertex that a contraction step applies to:
/// degree <= 2, or degree 3 with a loop (equivalently, incident to exactly
/// two edges, a loop plus a non-loop edge).
inline bool is_contractible_vertex(const MarkedGraph& g, int v) {
    if (g.is_marked(v)) return false;
    const int d = g.degree(v);
    return d <= 2 || (d == 3 && g.loop_count(v) > 0);
}

/// A graph is contracted when no contraction step applies: every unmarked
/// vertex has degree at least 3, and each unmarked degree-3 vertex is
/// incident to three distinct (non-loop) edges.
inline bool is_contracted(const MarkedGraph& g) {
    for (int v = g.r() + 1; v <= g.vertex_count(); ++v)
        if (is_contractible_vertex(g, v)) return false;
    return true;
}

/// One contraction step at the unmarked vertex v, following the case split:
///   deg 0:            remove v                          -> multiplier zero
///   deg 1:            remove v and its edge             -> 1
///   deg 2, 2 edges:   smooth out (edge or loop at w)    -> 1
///   deg 2, loop:      remove v and its loop             -> (2-2g)
///   deg 3 with loop:  remove loop + edge, loop at w     -> 1
/// The returned graph has v's id removed (higher unmarked ids shift down).
inline ContractionResult contract_vertex(const MarkedGraph& g, int v) {
    if (g.is_marked(v))
        throw std::invalid_argument("contract_vertex: vertex is marked");
    if (!is_contractible_vertex(g, v))
        throw std::invalid_argument("contract_vertex: vertex is not contractible");

    const int deg = g.degree(v);
    const int loops = g.loop_count(v);
    auto relabel = [&](int w) { return w < v ? w : w - 1; };

    MarkedGraph out(g.r(), g.u() - 1, {});
    std::vector<int> neighbors; // non-loop endpoints, with multiplicity
    for (const auto& [pair, mult] : g.edges()) {
        auto [a, b] = pair;
        if (a != v && b != v) {
            out.add_edge(relabel(a), relabel(b), mult);
        } else if (a == v && b == v) {
            // loop at v, dropped
        } else {
            int w = (a == v) ? b : a;
            for (int i = 0; i < mult; ++i) neighbors.push_back(w);
        }
    }

    Multiplier mult = Multiplier::one;
    if (deg == 0) {
        mult = Multiplier::zero;
    } else if (deg == 1) {
        // edge already dropped
    } else if (deg == 2 && loops == 1) {
        mult = Multiplier::two_minus_2g;
    } else if (deg == 2) {
        out.add_edge(relabel(neighbors[0]), relabel(neighbors[1]));
    } else {
        // deg 3 with a loop: one non-loop edge to w becomes a loop at w
        out.add_edge(relabel(neighbors[0]), relabel(neighbors[0]));
    }
    return {std::move(out), mult};
}

struct ContractedForm {
    bool is_zero = false;
    MarkedGraph graph;
    int two_minus_2g_exponent = 0; // number of (2-2g) factors picked up
};

/// Contract the lowest-id contractible unmarked vertex until the graph is
/// contracted. Returns ZERO as soon as any step has multiplier zero.
inline ContractedForm contract_fully(MarkedGraph g) {
    int k = 0;
    for (;;) {
        int v = 0;
        for (int w = g.r() + 1; w <= g.vertex_count(); ++w)
            if (is_contractible_vertex(g, w)) { v = w; break; }
        if (v == 0) return {false, std::move(g), k};
        ContractionResult step = contract_vertex(g, v);
        switch (step.multiplier) {
            case Multiplier::zero: return {true, MarkedGraph::bare_marks(g.r()), 0};
            case Multiplier::two_minus_2g: ++k; break;
            case Multiplier::one: break;
        }
        g = std::move(step.graph);
    }
}

} // namespace tautgraph
