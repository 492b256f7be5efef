#pragma once

#include "tautgraph/graph_ops.hpp"
#include "tautgraph/marked_graph.hpp"
#include "tautgraph/poly.hpp"
#include "tautgraph/set_map.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace tautgraph {

/// The coefficient (2 - 2*g) picked up by contracting a lone unmarked loop.
inline Poly two_minus_2g() { return Poly(2) - Poly(2) * Poly::variable("g"); }

/// A formal linear combination of r-marked graphs over Poly, representing a
/// tautological form on C_g^r. Graphs are stored in canonical form and terms
/// are combined by canonical key; zero coefficients are never kept.
///
/// Expressions are tied to a fixed ambient r. Combining expressions on
/// different ambients is an error, never a coercion.
class TautExpr {
public:
    struct Term {
        MarkedGraph graph;
        Poly coeff;
    };
    using TermMap = std::map<CanonicalKey, Term>;

    explicit TautExpr(int ambient_r) : ambient_r_(ambient_r) {
        if (ambient_r < 0) throw std::invalid_argument("TautExpr: negative ambient");
    }

    [[nodiscard]] int ambient_r() const { return ambient_r_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

    /// Accumulate coeff * graph; the graph is canonicalized on the way in.
    void add_term(const MarkedGraph& graph, const Poly& coeff) {
        if (graph.r() != ambient_r_)
            throw std::invalid_argument("TautExpr: graph marking differs from ambient");
        if (coeff.is_zero()) return;
        auto [canon, key] = canonicalize(graph);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), Term{std::move(canon), coeff});
        } else {
            it->second.coeff += coeff;
            if (it->second.coeff.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const TautExpr& a, const TautExpr& b) {
        if (a.ambient_r_ != b.ambient_r_ || a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || ia->second.coeff != ib->second.coeff) return false;
        return true;
    }
    friend bool operator!=(const TautExpr& a, const TautExpr& b) { return !(a == b); }

private:
    int ambient_r_;
    TermMap terms_;
};

inline TautExpr zero_expr(int r) { return TautExpr(r); }

/// The multiplicative unit on C_g^r: the bare-marks graph with coefficient 1.
inline TautExpr unit_expr(int r) {
    TautExpr e(r);
    e.add_term(MarkedGraph::bare_marks(r), Poly(1));
    return e;
}

/// p_ij^* h: the single edge {i,j} on r marks. With i = j this is the loop
/// graph, i.e. p_i^* e^A (the diagonal pullback).
inline TautExpr gen_h(int r, int i, int j) {
    if (i < 1 || i > r || j < 1 || j > r)
        throw std::invalid_argument("gen_h: mark index out of range");
    TautExpr e(r);
    e.add_term(MarkedGraph(r, 0, {{i, j}}), Poly(1));
    return e;
}

/// p_i^* e^A: a loop based at mark i.
inline TautExpr gen_eA(int r, int i) { return gen_h(r, i, i); }

/// The pullback of e_d^A to C_g^r: one unmarked vertex carrying d+1 loops,
/// next to r bare marks.
inline TautExpr gen_ed(int r, int d) {
    if (d < 1) throw std::invalid_argument("gen_ed: d must be >= 1");
    TautExpr e(r);
    MarkedGraph g(r, 1, {});
    g.add_edge(r + 1, r + 1, d + 1);
    e.add_term(g, Poly(1));
    return e;
}

/// The pullback of nu to C_g^r: two unmarked vertices joined by three
/// parallel edges, next to r bare marks.
inline TautExpr gen_nu(int r) {
    TautExpr e(r);
    MarkedGraph g(r, 2, {});
    g.add_edge(r + 1, r + 2, 3);
    e.add_term(g, Poly(1));
    return e;
}

inline TautExpr add_expr(const TautExpr& a, const TautExpr& b) {
    if (a.ambient_r() != b.ambient_r())
        throw std::invalid_argument("add_expr: ambient mismatch");
    TautExpr out = a;
    for (const auto& [key, term] : b.terms()) out.add_term(term.graph, term.coeff);
    return out;
}

inline TautExpr scale(const TautExpr& a, const Poly& c) {
    TautExpr out(a.ambient_r());
    for (const auto& [key, term] : a.terms()) out.add_term(term.graph, term.coeff * c);
    return out;
}

inline TautExpr sub_expr(const TautExpr& a, const TautExpr& b) {
    return add_expr(a, scale(b, Poly(-1)));
}

/// Wedge product: the bilinear extension of graph gluing, coefficients
/// multiplying in Poly.
inline TautExpr wedge(const TautExpr& a, const TautExpr& b) {
    if (a.ambient_r() != b.ambient_r())
        throw std::invalid_argument("wedge: ambient mismatch");
    TautExpr out(a.ambient_r());
    for (const auto& [ka, ta] : a.terms())
        for (const auto& [kb, tb] : b.terms())
            out.add_term(glue(ta.graph, tb.graph), ta.coeff * tb.coeff);
    return out;
}

inline TautExpr power(const TautExpr& a, int k) {
    if (k < 0) throw std::invalid_argument("power: negative exponent");
    TautExpr out = unit_expr(a.ambient_r());
    for (int i = 0; i < k; ++i) out = wedge(out, a);
    return out;
}

/// Pullback of forms along the tautological morphism f^phi, phi: s -> r:
/// the linear extension of graph pushforward. Coefficients are unchanged.
inline TautExpr pullback_expr(const SetMap& phi, const TautExpr& a) {
    if (a.ambient_r() != phi.source_size())
        throw std::invalid_argument("pullback_expr: ambient differs from map source");
    TautExpr out(phi.target_size());
    for (const auto& [key, term] : a.terms())
        out.add_term(pushforward(phi, term.graph), term.coeff);
    return out;
}

/// Fiber integration along the tautological submersion f^phi for injective
/// phi: s -> r: graph pullback followed by full contraction. Terms hitting a
/// zero multiplier drop out; every (2-2g) multiplier scales the coefficient.
/// The result is always in contracted normal form.
inline TautExpr integrate(const SetMap& phi, const TautExpr& a) {
    if (!phi.is_injective())
        throw std::invalid_argument("integrate: map is not injective");
    if (a.ambient_r() != phi.target_size())
        throw std::invalid_argument("integrate: ambient differs from map target");
    TautExpr out(phi.source_size());
    const Poly c = two_minus_2g();
    for (const auto& [key, term] : a.terms()) {
        ContractedForm nf = contract_fully(pullback(phi, term.graph));
        if (nf.is_zero) continue;
        out.add_term(nf.graph, term.coeff * c.pow(nf.two_minus_2g_exponent));
    }
    return out;
}

/// Rewrite every graph term to its contracted form and recombine. The result
/// spans the same form; equality of normal forms is sound but not complete
/// for equality of forms (contracted graphs can satisfy genus-specific
/// linear relations).
inline TautExpr normalize(const TautExpr& a) {
    TautExpr out(a.ambient_r());
    const Poly c = two_minus_2g();
    for (const auto& [key, term] : a.terms()) {
        ContractedForm nf = contract_fully(term.graph);
        if (nf.is_zero) continue;
        out.add_term(nf.graph, term.coeff * c.pow(nf.two_minus_2g_exponent));
    }
    return out;
}

/// Syntactic equality after normalization.
inline bool equal_normalized(const TautExpr& a, const TautExpr& b) {
    return normalize(a) == normalize(b);
}

/// Coefficientwise substitution (e.g. binding the genus g to a number).
inline TautExpr specialize(const TautExpr& a, const std::map<std::string, Poly>& bindings) {
    TautExpr out(a.ambient_r());
    for (const auto& [key, term] : a.terms())
        out.add_term(term.graph, term.coeff.substitute(bindings));
    return out;
}

/// The set of form degrees 2(r - chi(Gamma)) present in the expression.
inline std::set<int> form_degrees(const TautExpr& a) {
    std::set<int> out;
    for (const auto& [key, term] : a.terms())
        out.insert(2 * (a.ambient_r() - term.graph.euler_char()));
    return out;
}

} // namespace tautgraph
