#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tautgraph {

/// Exact arbitrary-precision rational, the scalar type of the whole engine.
/// All identities computed here are exact; no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q) { return q.str(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

} // namespace tautgraph
