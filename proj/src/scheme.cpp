#include "ekr/scheme.hpp"

#include <sstream>

namespace ekr::scheme {

using num::exact_div;
using num::gaussian_binomial;
using num::ipow;

void validate(const SchemeParams& p) {
  if (p.d < 1) throw DomainError("rank d must be >= 1");
  if (p.q < 2) throw DomainError("field parameter q must be >= 2");
}

void validate_odd_rank(const SchemeParams& p) {
  validate(p);
  if (p.d < 3 || p.d % 2 == 0)
    throw DomainError("d must be odd and >= 3 (got d=" + std::to_string(p.d) +
                      ")");
}

IntersectionArray intersection_array(const SchemeParams& p) {
  validate(p);
  const int d = p.d;
  const Integer Q = Integer(p.q) * p.q;
  IntersectionArray ia;
  ia.b.resize(d + 1);
  ia.c.resize(d + 1);
  ia.a.resize(d + 1);
  for (int i = 0; i <= d; ++i) {
    ia.c[i] = i == 0 ? Integer(0) : exact_div(ipow(Q, i) - 1, Q - 1);
    ia.b[i] = i == d ? Integer(0)
                     : ipow(Q, i) * p.q * exact_div(ipow(Q, d - i) - 1, Q - 1);
  }
  for (int i = 0; i <= d; ++i) ia.a[i] = ia.b[0] - ia.b[i] - ia.c[i];
  for (int i = 0; i <= d; ++i) {
    if (ia.a[i] < 0 || ia.b[i] < 0 || ia.c[i] < 0)
      throw PropertyError("intersection array entry negative at i=" +
                          std::to_string(i));
  }
  if (ia.c[1] != 1) throw PropertyError("intersection array: c_1 != 1");
  return ia;
}

std::vector<Integer> valencies(const SchemeParams& p) {
  validate(p);
  const Integer Q = Integer(p.q) * p.q;
  std::vector<Integer> k(p.d + 1);
  for (int j = 0; j <= p.d; ++j)
    k[j] = gaussian_binomial(p.d, j, Q) * ipow(p.q, j * j);
  return k;
}

Integer generator_count(const SchemeParams& p) {
  validate(p);
  Integer n = 1;
  for (int i = 1; i <= p.d; ++i) n *= ipow(p.q, 2 * i - 1) + 1;
  return n;
}

std::vector<Integer> classical_parameter_spectrum(const SchemeParams& p) {
  validate(p);
  const Integer Q = Integer(p.q) * p.q;
  std::vector<Integer> theta(p.d + 1);
  for (int i = 0; i <= p.d; ++i) {
    theta[i] = p.q * exact_div(ipow(Q, p.d - i) - 1, Q - 1) -
               exact_div(ipow(Q, i) - 1, Q - 1);
  }
  return theta;
}

Integer charpoly_eval(const IntersectionArray& ia, const Integer& x) {
  // Leading principal minors of xI - T for the tridiagonal intersection
  // matrix T (diagonal a_i, super c_{i+1}, sub b_{i-1}):
  //   f_0 = 1, f_1 = x - a_0, f_k = (x - a_{k-1}) f_{k-1} - b_{k-2} c_{k-1} f_{k-2}.
  const int n = static_cast<int>(ia.a.size());  // d + 1
  Integer fprev = 1;
  Integer f = x - ia.a[0];
  for (int k = 2; k <= n; ++k) {
    Integer next = (x - ia.a[k - 1]) * f - ia.b[k - 2] * ia.c[k - 1] * fprev;
    fprev = std::move(f);
    f = std::move(next);
  }
  return f;
}

namespace {

// Number of eigenvalues of the intersection matrix that are >= x, by the
// Sturm sign-change count of the minor sequence. A zero entry takes the
// sign opposite to its predecessor; consecutive minors never vanish
// together because b_i c_{i+1} > 0.
int count_ge(const IntersectionArray& ia, const Integer& x) {
  const int n = static_cast<int>(ia.a.size());
  Integer fprev = 1;
  Integer f = x - ia.a[0];
  int changes = 0;
  int prev_sign = 1;  // sign of f_0
  auto step_sign = [&](const Integer& v) {
    int s = v == 0 ? -prev_sign : (v > 0 ? 1 : -1);
    if (s != prev_sign) ++changes;
    prev_sign = s;
  };
  step_sign(f);
  for (int k = 2; k <= n; ++k) {
    Integer next = (x - ia.a[k - 1]) * f - ia.b[k - 2] * ia.c[k - 1] * fprev;
    fprev = std::move(f);
    f = std::move(next);
    step_sign(f);
  }
  return changes;
}

}  // namespace

std::vector<Integer> tridiagonal_spectrum(const IntersectionArray& ia) {
  const int n = static_cast<int>(ia.a.size());
  const Integer& valency = ia.b[0];
  std::vector<Integer> theta;
  theta.reserve(n);
  // All eigenvalues lie in [-b_0, b_0] (constant row sum b_0, nonnegative
  // entries). Find the t-th largest as the largest integer x with
  // count_ge(x) >= t, then certify it is an exact root.
  Integer hi_cap = valency + 1;
  for (int t = 1; t <= n; ++t) {
    Integer lo = -valency - 1;       // count_ge = n >= t
    Integer hi = hi_cap;             // count_ge < t
    while (hi - lo > 1) {
      Integer mid = (lo + hi) / 2;
      if (count_ge(ia, mid) >= t)
        lo = std::move(mid);
      else
        hi = std::move(mid);
    }
    if (charpoly_eval(ia, lo) != 0)
      throw PropertyError(
          "tridiagonal spectrum: eigenvalue " + std::to_string(t) +
          " is not an integer (bracket at " + num::to_string(lo) + ")");
    if (!theta.empty() && theta.back() <= lo)
      throw PropertyError("tridiagonal spectrum: repeated eigenvalue " +
                          num::to_string(lo));
    hi_cap = lo;  // next eigenvalue is strictly smaller
    theta.push_back(std::move(lo));
  }
  return theta;
}

Eigenmatrix eigenmatrix(const SchemeParams& p) {
  validate(p);
  const int d = p.d;
  Eigenmatrix em;
  em.params = p;
  em.k = valencies(p);
  em.N = generator_count(p);

  Integer ksum = 0;
  for (const auto& kj : em.k) ksum += kj;
  if (ksum != em.N)
    throw PropertyError("valency sum does not equal the generator count");

  const IntersectionArray ia = intersection_array(p);
  em.theta = tridiagonal_spectrum(ia);
  if (em.theta[0] != em.k[1])
    throw PropertyError("theta_0 != k_1: wrong intersection array");

  // P[i][j] = v_j(theta_i); each division by c_{j+1} must be exact because
  // the entries are eigenvalues of integer matrices.
  em.P.assign(d + 1, std::vector<Integer>(d + 1));
  for (int i = 0; i <= d; ++i) {
    em.P[i][0] = 1;
    if (d >= 1) em.P[i][1] = em.theta[i];
    for (int j = 1; j < d; ++j) {
      Integer t = (em.theta[i] - ia.a[j]) * em.P[i][j] -
                  ia.b[j - 1] * em.P[i][j - 1];
      em.P[i][j + 1] = exact_div(t, ia.c[j + 1]);
    }
  }
  for (int j = 0; j <= d; ++j)
    if (em.P[0][j] != em.k[j])
      throw PropertyError("eigenmatrix row 0 does not equal the valencies");

  // Multiplicities from orthogonality: m_i = N / sum_j P_ij^2 / k_j.
  em.m.resize(d + 1);
  Rational msum = 0;
  for (int i = 0; i <= d; ++i) {
    Rational s = 0;
    for (int j = 0; j <= d; ++j)
      s += Rational(em.P[i][j] * em.P[i][j], em.k[j]);
    em.m[i] = num::checked_div(Rational(em.N), s);
    if (em.m[i] <= 0)
      throw PropertyError("non-positive multiplicity at i=" +
                          std::to_string(i) + ": wrong intersection array");
    if (denominator(em.m[i]) != 1)
      throw PropertyError("non-integral multiplicity at i=" +
                          std::to_string(i) + ": " + num::to_string(em.m[i]));
    msum += em.m[i];
  }
  if (em.m[0] != 1) throw PropertyError("m_0 != 1");
  if (msum != em.N)
    throw PropertyError("multiplicities do not sum to the generator count");
  return em;
}

std::vector<Integer> closed_form_column(const SchemeParams& p, int j) {
  validate(p);
  const int d = p.d;
  const Integer Q = Integer(p.q) * p.q;
  std::vector<Integer> col(d + 1);
  if (j == d) {
    // P_{i,d} = (-1)^i q^((d-i)^2 + i(i-1))
    for (int i = 0; i <= d; ++i) {
      Integer v = ipow(p.q, (d - i) * (d - i) + i * (i - 1));
      col[i] = (i % 2 == 0) ? v : -v;
    }
    return col;
  }
  if (j == d - 2 && d >= 2) {
    // P_{i,d-2} = sum_{u=0..2} (-1)^(i+u) [d-i choose 2-u][i choose u]
    //             q^((d-2+u-i)^2 + (i-u)(i-u-1))
    for (int i = 0; i <= d; ++i) {
      Integer s = 0;
      for (int u = 0; u <= 2; ++u) {
        if (u > i || 2 - u > d - i) continue;  // a binomial vanishes
        Integer g = gaussian_binomial(d - i, 2 - u, Q) *
                    gaussian_binomial(i, u, Q);
        int e = (d - 2 + u - i) * (d - 2 + u - i) + (i - u) * (i - u - 1);
        Integer term = g * ipow(p.q, e);
        s += ((i + u) % 2 == 0) ? term : -term;
      }
      col[i] = s;
    }
    return col;
  }
  throw DomainError("closed_form_column: j must be d or d-2 (with d >= 2)");
}

std::vector<std::vector<Rational>> dual_eigenmatrix(const Eigenmatrix& em) {
  const int n = static_cast<int>(em.theta.size());
  std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      q[j][i] = num::checked_div(em.m[i] * Rational(em.P[i][j]),
                                 Rational(em.k[j]));
  return q;
}

std::string to_text(const Eigenmatrix& em) {
  std::ostringstream os;
  os << "eigenmatrix of H(" << 2 * em.params.d - 1 << ", "
     << em.params.q * em.params.q << ")  (d=" << em.params.d
     << ", q=" << em.params.q << ")\n";
  os << "N = " << em.N.str() << "\n";
  auto row = [&os](const char* name, auto&& tostr, const auto& v) {
    os << name << " =";
    for (const auto& x : v) os << " " << tostr(x);
    os << "\n";
  };
  auto istr = [](const Integer& x) { return x.str(); };
  auto rstr = [](const Rational& x) { return num::to_string(x); };
  row("theta", istr, em.theta);
  row("k", istr, em.k);
  row("m", rstr, em.m);
  os << "P =\n";
  for (const auto& r : em.P) {
    os << " ";
    for (const auto& x : r) os << " " << x.str();
    os << "\n";
  }
  return os.str();
}

}  // namespace ekr::scheme
