#include "ekr/exactnum.hpp"

#include <sstream>

namespace ekr::num {

Integer ipow(const Integer& base, unsigned exp) {
  Integer r;
  mpz_pow_ui(r.backend().data(), base.backend().data(), exp);
  return r;
}

Integer ipow(long base, unsigned exp) { return ipow(Integer(base), exp); }

Integer exact_div(const Integer& a, const Integer& b) {
  if (b == 0) throw PropertyError("exact_div: division by zero");
  Integer q, r;
  mpz_tdiv_qr(q.backend().data(), r.backend().data(), a.backend().data(),
              b.backend().data());
  if (r != 0) {
    throw PropertyError("exact_div: " + to_string(a) + " not divisible by " +
                        to_string(b));
  }
  return q;
}

Rational checked_div(const Rational& a, const Rational& b) {
  if (b == 0) throw EvalError("division by zero");
  return a / b;
}

Integer gaussian_binomial(unsigned n, unsigned k, const Integer& b) {
  if (b < 2) throw DomainError("gaussian_binomial: base must be >= 2");
  if (k > n) return 0;
  // g_i = [n-k+i choose i]_b is an integer at every step, so the division
  // after the multiplication is exact.
  Integer g = 1;
  for (unsigned i = 1; i <= k; ++i) {
    g *= ipow(b, n - k + i) - 1;
    g = exact_div(g, ipow(b, i) - 1);
  }
  return g;
}

Rational gaussian_binomial_rational(unsigned n, unsigned k, const Rational& b) {
  if (k > n) return 0;
  Rational g = 1;
  Rational bi = 1;   // b^i
  Rational bni = 1;  // b^(n-k+i)
  for (unsigned e = 0; e < n - k; ++e) bni *= b;
  for (unsigned i = 1; i <= k; ++i) {
    bi *= b;
    bni *= b;
    g = checked_div(g * (bni - 1), bi - 1);
  }
  return g;
}

IdentityCheck verify_polynomial_identity(const Evaluator& lhs,
                                         const Evaluator& rhs,
                                         const std::vector<Rational>& points) {
  IdentityCheck out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    try {
      if (lhs(points[i]) != rhs(points[i])) out.mismatches.push_back(i);
    } catch (const std::exception& e) {
      out.failures.push_back({i, e.what()});
    }
  }
  return out;
}

Integer floor_rat(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.backend().data(), mpq_numref(r.backend().data()),
             mpq_denref(r.backend().data()));
  return q;
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& v) {
  return numerator(v).str() + "/" + denominator(v).str();
}

Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer nom(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw DomainError("rational_from_string: zero denominator");
    return Rational(nom, den);
  } catch (const std::runtime_error&) {
    throw DomainError("rational_from_string: malformed rational '" + s + "'");
  }
}

}  // namespace ekr::num
