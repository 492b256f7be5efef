#pragma once

#include "tautgraph/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tautgraph {

/// A monomial: indeterminate name -> exponent (> 0). The empty map is 1.
using Monomial = std::map<std::string, int>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [name, e] : m) d += e;
    return d;
}

/// Degree-lexicographic order, larger first: higher total degree wins,
/// ties broken by exponent-vector comparison with names in ascending order.
/// Map iteration in this order is the canonical term order used for display.
struct DegLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        auto ia = a.begin(), ib = b.begin();
        while (ia != a.end() && ib != b.end()) {
            if (ia->first != ib->first) return ia->first < ib->first;
            if (ia->second != ib->second) return ia->second > ib->second;
            ++ia, ++ib;
        }
        return ia != a.end();
    }
};

/// Sparse multivariate polynomial with Rational coefficients in named
/// indeterminates. Immutable in spirit: all operations return new values.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, DegLexGreater>;

    Poly() = default;
    Poly(const Rational& c) { // NOLINT: implicit by design, scalars embed
        if (c != 0) terms_.emplace(Monomial{}, c);
    }
    Poly(int c) : Poly(Rational(c)) {} // NOLINT

    static Poly variable(const std::string& name, int exponent = 1) {
        if (name.empty()) throw std::invalid_argument("Poly: empty indeterminate name");
        if (exponent < 0) throw std::invalid_argument("Poly: negative exponent");
        Poly p;
        if (exponent == 0) return Poly(1);
        p.terms_.emplace(Monomial{{name, exponent}}, Rational(1));
        return p;
    }

    static Poly term(const Monomial& m, const Rational& c) {
        Poly p;
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    /// The constant value; requires is_constant().
    [[nodiscard]] Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::logic_error("Poly: not a constant");
        return terms_.begin()->second;
    }

    [[nodiscard]] const TermMap& terms() const { return terms_; }

    /// Coefficient of a given monomial (0 if absent).
    [[nodiscard]] Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Coefficient of the canonically first (deg-lex greatest) term.
    [[nodiscard]] Rational leading_coefficient() const {
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    Poly& operator+=(const Poly& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, Rational(-c));
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly(0) - a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (const auto& [name, e] : mb) {
                    int& x = m[name];
                    x += e;
                    if (x == 0) m.erase(name);
                }
                out.add_term(m, Rational(ca * cb));
            }
        return out;
    }
    Poly& operator*=(const Poly& other) { return *this = *this * other; }

    [[nodiscard]] Poly pow(int k) const {
        if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
        Poly acc(1);
        Poly base = *this;
        for (; k > 0; k >>= 1) {
            if (k & 1) acc *= base;
            if (k > 1) base *= base;
        }
        return acc;
    }

    /// Simultaneous substitution of indeterminates by polynomials (a plain
    /// Rational binds as a constant Poly). Unbound names are left alone.
    [[nodiscard]] Poly substitute(const std::map<std::string, Poly>& bindings) const {
        Poly out;
        for (const auto& [m, c] : terms_) {
            Poly t{c};
            for (const auto& [name, e] : m) {
                auto it = bindings.find(name);
                t *= (it == bindings.end()) ? Poly::variable(name, e) : it->second.pow(e);
            }
            out += t;
        }
        return out;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Canonical rendering, deg-lex order, e.g. "32*g^2 - 16*g" or "2".
    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                out += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            out += render_monomial(m, a);
            first = false;
        }
        return out;
    }

private:
    void add_term(const Monomial& m, const Rational& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    static std::string render_monomial(const Monomial& m, const Rational& abs_coeff) {
        std::string out;
        if (m.empty()) return tautgraph::to_string(abs_coeff);
        if (abs_coeff != 1) out += tautgraph::to_string(abs_coeff) + "*";
        bool first = true;
        for (const auto& [name, e] : m) {
            if (!first) out += "*";
            out += name;
            if (e != 1) out += "^" + std::to_string(e);
            first = false;
        }
        return out;
    }

    TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return Poly(c) * p; }

} // namespace tautgraph
