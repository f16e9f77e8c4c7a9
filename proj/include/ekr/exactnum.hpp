#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ekr/errors.hpp"

namespace ekr::num {

// All arithmetic in the library is exact. Integer and Rational are
// arbitrary precision; Rational is kept in lowest terms with positive
// denominator by the backend.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// base^exp for exp >= 0.
Integer ipow(const Integer& base, unsigned exp);
Integer ipow(long base, unsigned exp);

// a / b, throwing PropertyError unless b divides a exactly.
Integer exact_div(const Integer& a, const Integer& b);

// a / b, throwing EvalError on b == 0 (GMP would abort otherwise).
Rational checked_div(const Rational& a, const Rational& b);

// Gaussian binomial [n choose k]_b = prod_{i=1..k} (b^(n-k+i)-1)/(b^i-1).
// Total on its domain: returns 0 when k > n, 1 when k == 0.
Integer gaussian_binomial(unsigned n, unsigned k, const Integer& b);

// The same product over the rationals, for identity certification at
// rational points. Throws EvalError when some b^i = 1 makes a factor
// denominator vanish.
Rational gaussian_binomial_rational(unsigned n, unsigned k, const Rational& b);

using Evaluator = std::function<Rational(const Rational&)>;

struct PointFailure {
  std::size_t point_index;
  std::string what;
};

// Outcome of an exact multi-point comparison of two evaluators.
struct IdentityCheck {
  std::vector<std::size_t> mismatches;    // points where lhs(p) != rhs(p)
  std::vector<PointFailure> failures;     // points where evaluation threw
  bool holds() const { return mismatches.empty() && failures.empty(); }
  explicit operator bool() const { return holds(); }
};

// Compares lhs(p) and rhs(p) exactly at every point. When both sides are
// polynomial in the point of degree <= points.size()-1 and the points are
// distinct, holds() certifies the polynomial identity. Evaluation failures
// are recorded per point, never swallowed.
IdentityCheck verify_polynomial_identity(const Evaluator& lhs,
                                         const Evaluator& rhs,
                                         const std::vector<Rational>& points);

Integer floor_rat(const Rational& r);

std::string to_string(const Integer& v);
// Canonical "num/den" in lowest terms, denominator always present.
std::string to_string(const Rational& v);
// Accepts "num" or "num/den"; throws DomainError on malformed input.
Rational rational_from_string(const std::string& s);

}  // namespace ekr::num
