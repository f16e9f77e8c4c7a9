#include "ekr/equality.hpp"

#include "ekr/hoffman.hpp"

namespace ekr::equality {

using num::checked_div;

const char* to_string(Verdict v) {
  return v == Verdict::contradiction_found ? "contradiction-found"
                                           : "no-contradiction";
}

namespace {

std::pair<Rational, Rational> solve_from(const Rational& ratio,  // size/N
                                         const Integer& k_d,
                                         const Integer& p1d,
                                         const Integer& pdd) {
  if (p1d == pdd)
    throw PropertyError(
        "equality system singular: P_{1,d} = P_{d,d}; the two equations "
        "are not independent");
  // a_1 (P_{1,d} - P_{d,d}) = -(size/N) k_d - (1 - size/N) P_{d,d}
  const Rational rhs = -ratio * k_d - (1 - ratio) * pdd;
  const Rational a1 = checked_div(rhs, Rational(p1d - pdd));
  const Rational ad = 1 - ratio - a1;
  return {a1, ad};
}

}  // namespace

std::pair<Rational, Rational> solve_coeffs(const SchemeParams& p,
                                           const Integer& size) {
  scheme::validate_odd_rank(p);
  const auto col_d = scheme::closed_form_column(p, p.d);
  const auto k = scheme::valencies(p);
  const Rational ratio(size, scheme::generator_count(p));
  return solve_from(ratio, k[p.d], col_d[1], col_d[p.d]);
}

EqualityReport intersection_distribution(const SchemeParams& p,
                                         const Integer& size) {
  scheme::validate_odd_rank(p);
  const int d = p.d;
  const auto em = scheme::eigenmatrix(p);
  const Rational ratio(size, em.N);

  EqualityReport rep;
  rep.params = p;
  rep.size = size;
  auto [a1, ad] = solve_from(ratio, em.k[d], em.P[1][d], em.P[d][d]);
  {
    // The closed-form route must give the same coefficients.
    auto [b1, bd] = solve_coeffs(p, size);
    if (b1 != a1 || bd != ad)
      throw PropertyError("equality coefficients disagree between the "
                          "eigenmatrix and the closed-form columns");
  }
  rep.a1 = a1;
  rep.ad = ad;

  rep.n.resize(d + 1);
  Rational total = 0;
  for (int i = 0; i <= d; ++i) {
    rep.n[i] = ratio * em.k[i] + a1 * em.P[1][i] + ad * em.P[d][i];
    total += rep.n[i];
    const bool is_int = denominator(rep.n[i]) == 1;
    const bool is_nonneg = rep.n[i] >= 0;
    rep.integral.push_back(is_int);
    rep.nonnegative.push_back(is_nonneg);
    if (!is_int || !is_nonneg) rep.witnesses.push_back(i);
  }
  if (rep.n[0] != 1) throw PropertyError("equality distribution: n_0 != 1");
  if (rep.n[d] != 0) throw PropertyError("equality distribution: n_d != 0");
  if (total != Rational(size))
    throw PropertyError("equality distribution: sum n_i != size");
  rep.verdict = rep.witnesses.empty() ? Verdict::no_contradiction
                                      : Verdict::contradiction_found;
  return rep;
}

EqualityReport intersection_distribution(const SchemeParams& p) {
  return intersection_distribution(p, hoffman::closed_form_bound(p));
}

}  // namespace ekr::equality
