#include "ekr/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <string>

#include "ekr/hoffman.hpp"

namespace ekr::oracle {

Field build_field(int q) {
  if (q != 2 && q != 3) throw DomainError("build_field: q must be 2 or 3");
  Field f;
  f.q = q;
  f.size = q * q;
  // GF(4): t^2 = t + 1.  GF(9): t^2 = -1.
  auto enc = [q](int a, int b) {
    return static_cast<uint8_t>(((a % q + q) % q) + q * ((b % q + q) % q));
  };
  for (int a1 = 0; a1 < q; ++a1)
    for (int b1 = 0; b1 < q; ++b1)
      for (int a2 = 0; a2 < q; ++a2)
        for (int b2 = 0; b2 < q; ++b2) {
          const int x = enc(a1, b1), y = enc(a2, b2);
          f.add[x][y] = enc(a1 + a2, b1 + b2);
          const int u = a1 * a2, v = a1 * b2 + a2 * b1, w = b1 * b2;
          f.mul[x][y] = q == 2 ? enc(u + w, v + w) : enc(u - w, v);
        }
  for (int x = 0; x < f.size; ++x) {
    f.neg[x] = enc(-(x % q), -(x / q));
    // Frobenius x -> x^q by repeated multiplication.
    uint8_t c = static_cast<uint8_t>(x);
    for (int i = 1; i < q; ++i) c = f.mul[c][x];
    f.conj[x] = c;
    for (int y = 0; y < f.size; ++y)
      if (f.mul[x][y] == 1) f.inv[x] = static_cast<uint8_t>(y);
  }
  for (int x = 1; x < f.size; ++x)
    if (f.mul[x][f.inv[x]] != 1)
      throw PropertyError("build_field: missing inverse");
  for (int x = 0; x < f.size; ++x) {
    if (f.conj[f.conj[x]] != x)
      throw PropertyError("build_field: conjugation not involutive");
    if ((f.conj[x] == x) != f.in_subfield(static_cast<uint8_t>(x)))
      throw PropertyError("build_field: conjugation fixed field wrong");
  }
  return f;
}

uint8_t hermitian(const Field& f, const Vec& u, const Vec& v) {
  uint8_t s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    s = f.add[s][f.mul[u[i]][f.conj[v[i]]]];
  return s;
}

namespace {

void sub_scaled(const Field& f, Vec& v, uint8_t c, const Vec& row) {
  const uint8_t mc = f.neg[c];
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = f.add[v[i]][f.mul[mc][row[i]]];
}

// In-place reduced row echelon form; returns the rank. Zero rows are
// dropped, so the result is the canonical basis of the row space.
int rref(const Field& f, std::vector<Vec>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t pr = r;
    while (pr < rows.size() && rows[pr][col] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[r], rows[pr]);
    const uint8_t scale = f.inv[rows[r][col]];
    for (auto& x : rows[r]) x = f.mul[scale][x];
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][col] != 0)
        sub_scaled(f, rows[i], rows[i][col], rows[r]);
    ++r;
  }
  rows.resize(r);
  return static_cast<int>(r);
}

// Reduce v against RREF rows; v ends up zero iff it lies in the span.
Vec reduce_against(const Field& f, const std::vector<Vec>& rows, Vec v) {
  for (const auto& row : rows) {
    std::size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead < row.size() && v[lead] != 0) sub_scaled(f, v, v[lead], row);
  }
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](uint8_t x) { return x == 0; });
}

std::string key_of(const std::vector<Vec>& rows) {
  std::string k;
  for (const auto& r : rows) k.append(r.begin(), r.end());
  return k;
}

void check_guard(const SchemeParams& p, const EnumerationGuard& guard) {
  scheme::validate(p);
  const bool ok =
      (p.q == 2 && p.d <= 3) || (guard.allow_q3 && p.q == 3 && p.d <= 2);
  if (!ok)
    throw ResourceGuardError(
        "explicit construction of H(" + std::to_string(2 * p.d - 1) + ", " +
        std::to_string(p.q * p.q) + ") refused (N = " +
        scheme::generator_count(p).str() +
        "); allowed: q=2 with d<=3, and q=3 with d<=2 behind allow-q3");
}

PolarSpace enumerate_impl(const SchemeParams& p, const EnumerationGuard& guard,
                          std::mt19937* rng) {
  check_guard(p, guard);
  PolarSpace ps;
  ps.params = p;
  ps.field = build_field(p.q);
  const Field& f = ps.field;
  const int n = 2 * p.d;

  // All isotropic vectors h(v, v) = 0, v != 0.
  std::vector<Vec> isotropic;
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= f.size;
  for (std::size_t code = 1; code < total; ++code) {
    Vec v(n);
    std::size_t c = code;
    for (int i = 0; i < n; ++i) {
      v[i] = static_cast<uint8_t>(c % f.size);
      c /= f.size;
    }
    if (hermitian(f, v, v) == 0) isotropic.push_back(std::move(v));
  }
  if (rng) std::shuffle(isotropic.begin(), isotropic.end(), *rng);

  // Monic representatives of the isotropic 1-spaces.
  std::map<std::string, Vec> points;
  for (const auto& v : isotropic) {
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    Vec mon(v);
    const uint8_t scale = f.inv[v[lead]];
    for (auto& x : mon) x = f.mul[scale][x];
    points.emplace(key_of({mon}), std::move(mon));
  }
  for (const auto& [k, v] : points) ps.isotropic_points.push_back(v);

  // Extend rank by rank: candidates are isotropic vectors orthogonal to
  // the current basis and outside its span; canonical RREF dedups, so the
  // scan order cannot affect the result.
  std::map<std::string, std::vector<Vec>> level;
  for (const auto& [k, v] : points) level.emplace(k, std::vector<Vec>{v});
  for (int rank = 1; rank < p.d; ++rank) {
    std::map<std::string, std::vector<Vec>> next;
    for (const auto& [k, rows] : level) {
      for (const auto& v : isotropic) {
        bool orth = true;
        for (const auto& row : rows)
          if (hermitian(f, v, row) != 0) {
            orth = false;
            break;
          }
        if (!orth || is_zero(reduce_against(f, rows, v))) continue;
        std::vector<Vec> ext(rows);
        ext.push_back(v);
        if (rref(f, ext) != rank + 1)
          throw PropertyError("enumeration: extension lost rank");
        std::string kk = key_of(ext);
        next.emplace(std::move(kk), std::move(ext));
      }
    }
    level = std::move(next);
  }

  ps.generators.reserve(level.size());
  for (auto& [k, rows] : level) ps.generators.push_back(Generator{rows});
  const Integer expected = scheme::generator_count(p);
  if (Integer(static_cast<unsigned long>(ps.generators.size())) != expected)
    throw PropertyError("enumeration: generator count " +
                        std::to_string(ps.generators.size()) +
                        " does not equal N = " + expected.str());

  // Pairwise codimension: codim = rank(G_r + G_s) - d.
  const std::size_t N = ps.generators.size();
  ps.codim.assign(N * N, 0);
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t s = r + 1; s < N; ++s) {
      std::vector<Vec> stack(ps.generators[r].rows);
      stack.insert(stack.end(), ps.generators[s].rows.begin(),
                   ps.generators[s].rows.end());
      const uint8_t cd = static_cast<uint8_t>(rref(f, stack) - p.d);
      ps.codim[r * N + s] = cd;
      ps.codim[s * N + r] = cd;
    }
  }
  return ps;
}

// ---- dense exact integer matrices for the identity checks --------------

using Mat = std::vector<int64_t>;

Mat relation_matrix(const PolarSpace& ps, int j) {
  const std::size_t N = ps.vertex_count();
  Mat a(N * N, 0);
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t s = 0; s < N; ++s)
      if (ps.codim_at(r, s) == j) a[r * N + s] = 1;
  return a;
}

Mat mat_mul(const Mat& a, const Mat& b, std::size_t N) {
  Mat c(N * N, 0);
  for (std::size_t i = 0; i < N; ++i) {
    const int64_t* arow = &a[i * N];
    int64_t* crow = &c[i * N];
    for (std::size_t k = 0; k < N; ++k) {
      const int64_t av = arow[k];
      if (av == 0) continue;
      const int64_t* brow = &b[k * N];
      for (std::size_t j = 0; j < N; ++j) crow[j] += av * brow[j];
    }
  }
  int64_t mx = 0;
  for (const auto v : c) mx = std::max(mx, v < 0 ? -v : v);
  if (mx > (int64_t{1} << 60))
    throw PropertyError("matrix product entries too large for int64");
  return c;
}

int64_t small_int(const Integer& v) {
  if (v > std::numeric_limits<int32_t>::max() ||
      v < std::numeric_limits<int32_t>::min())
    throw PropertyError("scheme parameter too large for dense check");
  return v.convert_to<int64_t>();
}

}  // namespace

PolarSpace enumerate_generators(const SchemeParams& p,
                                const EnumerationGuard& guard) {
  return enumerate_impl(p, guard, nullptr);
}

PolarSpace enumerate_generators_shuffled(const SchemeParams& p, unsigned seed,
                                         const EnumerationGuard& guard) {
  std::mt19937 rng(seed);
  return enumerate_impl(p, guard, &rng);
}

DistanceDistribution distance_distribution(const PolarSpace& ps) {
  const std::size_t N = ps.vertex_count();
  const int d = ps.params.d;
  std::vector<std::size_t> first(d + 1, 0);
  for (std::size_t s = 0; s < N; ++s) ++first[ps.codim_at(0, s)];
  for (std::size_t r = 1; r < N; ++r) {
    std::vector<std::size_t> cnt(d + 1, 0);
    for (std::size_t s = 0; s < N; ++s) ++cnt[ps.codim_at(r, s)];
    if (cnt != first)
      throw PropertyError("distance distribution not constant at vertex " +
                          std::to_string(r));
  }
  DistanceDistribution out;
  out.constant_over_vertices = true;
  for (auto c : first) out.counts.emplace_back(static_cast<unsigned long>(c));
  const auto k = scheme::valencies(ps.params);
  out.matches_valencies = true;
  for (int j = 0; j <= d; ++j)
    out.matches_valencies = out.matches_valencies && out.counts[j] == k[j];
  return out;
}

MatrixCheckReport verify_scheme_matrices(const PolarSpace& ps,
                                         const scheme::Eigenmatrix& em) {
  if (em.params.d != ps.params.d || em.params.q != ps.params.q)
    throw DomainError("verify_scheme_matrices: parameter mismatch");
  const std::size_t N = ps.vertex_count();
  const int d = ps.params.d;
  const auto ia = scheme::intersection_array(ps.params);
  const Mat a1 = relation_matrix(ps, 1);

  MatrixCheckReport rep;

  // (a) prod_i (A_1 - theta_i I) = 0, multiplied out exactly.
  {
    Mat m(N * N, 0);
    for (std::size_t r = 0; r < N; ++r)
      m[r * N + r] = 1;
    for (int i = 0; i <= d; ++i) {
      Mat factor(a1);
      const int64_t th = small_int(em.theta[i]);
      for (std::size_t r = 0; r < N; ++r) factor[r * N + r] -= th;
      m = mat_mul(factor, m, N);
    }
    for (std::size_t e = 0; e < N * N; ++e)
      if (m[e] != 0)
        throw PropertyError("annihilation fails at entry (" +
                            std::to_string(e / N) + ", " +
                            std::to_string(e % N) + ") = " +
                            std::to_string(m[e]));
    rep.annihilation = true;
  }

  // (b) A_{j+1} = (A_1 A_j - a_j A_j - b_{j-1} A_{j-1}) / c_{j+1}, compared
  // against the matrix built directly from the codimension table.
  {
    Mat prev(N * N, 0);
    for (std::size_t r = 0; r < N; ++r) prev[r * N + r] = 1;
    Mat cur(a1);
    for (int j = 1; j < d; ++j) {
      Mat t = mat_mul(a1, cur, N);
      const int64_t aj = small_int(ia.a[j]);
      const int64_t bj1 = small_int(ia.b[j - 1]);
      const int64_t cj1 = small_int(ia.c[j + 1]);
      const Mat direct = relation_matrix(ps, j + 1);
      for (std::size_t e = 0; e < N * N; ++e) {
        const int64_t num = t[e] - aj * cur[e] - bj1 * prev[e];
        if (num % cj1 != 0)
          throw PropertyError("A_" + std::to_string(j + 1) +
                              " recurrence not divisible at entry (" +
                              std::to_string(e / N) + ", " +
                              std::to_string(e % N) + ")");
        t[e] = num / cj1;
        if (t[e] != direct[e])
          throw PropertyError("A_" + std::to_string(j + 1) +
                              " != v_j(A_1) at entry (" +
                              std::to_string(e / N) + ", " +
                              std::to_string(e % N) + ")");
      }
      prev = std::move(cur);
      cur = std::move(t);
    }
    rep.polynomial_identities = true;
  }

  // (c) row sums of A_d - f A_{d-2} all equal K (needs the odd-rank f).
  if (d >= 3 && d % 2 == 1) {
    const Rational f = hoffman::optimal_f(ps.params);
    const Rational K = hoffman::row_sum_K(ps.params, f);
    for (std::size_t r = 0; r < N; ++r) {
      std::size_t sd = 0, sd2 = 0;
      for (std::size_t s = 0; s < N; ++s) {
        if (ps.codim_at(r, s) == d) ++sd;
        if (ps.codim_at(r, s) == d - 2) ++sd2;
      }
      if (Rational(static_cast<unsigned long>(sd)) -
              f * static_cast<unsigned long>(sd2) !=
          K)
        throw PropertyError("row sum of A_d - f A_{d-2} differs from K at row " +
                            std::to_string(r));
    }
    rep.row_sums = true;
    rep.row_sums_checked = true;
  }
  return rep;
}

Pencil point_pencil(const PolarSpace& ps, const Vec& point) {
  const Field& f = ps.field;
  if (point.size() != static_cast<std::size_t>(2 * ps.params.d) ||
      is_zero(point))
    throw DomainError("point_pencil: need a nonzero vector of length 2d");
  if (hermitian(f, point, point) != 0)
    throw DomainError("point_pencil: point is not isotropic");

  Pencil out;
  out.point = point;
  for (std::size_t r = 0; r < ps.generators.size(); ++r)
    if (is_zero(reduce_against(f, ps.generators[r].rows, point)))
      out.members.push_back(r);
  out.expected_size = hoffman::point_pencil_size(ps.params);
  if (Integer(static_cast<unsigned long>(out.members.size())) !=
      out.expected_size)
    throw PropertyError("point pencil has " +
                        std::to_string(out.members.size()) +
                        " members, expected " + out.expected_size.str());
  out.pairwise_intersecting = true;
  for (std::size_t i = 0; i < out.members.size(); ++i)
    for (std::size_t j = i + 1; j < out.members.size(); ++j)
      out.pairwise_intersecting =
          out.pairwise_intersecting &&
          ps.codim_at(out.members[i], out.members[j]) < ps.params.d;
  if (!out.pairwise_intersecting)
    throw PropertyError("point pencil is not pairwise intersecting");

  if (ps.params.d >= 3 && ps.params.d % 2 == 1) {
    const Rational f_opt = hoffman::optimal_f(ps.params);
    const Rational K = hoffman::row_sum_K(ps.params, f_opt);
    const Rational lambda = hoffman::lambda_min(ps.params);
    const Rational size(Integer(static_cast<unsigned long>(out.members.size())));
    // |S| (K + |lambda|) <= |lambda| N with lambda < 0.
    out.ratio_inequality =
        size * (K - lambda) <= -lambda * scheme::generator_count(ps.params);
    out.ratio_inequality_checked = true;
    if (!out.ratio_inequality)
      throw PropertyError("point pencil violates the ratio bound");
  }
  return out;
}

void dump(const PolarSpace& ps, std::ostream& os) {
  static const char* hex = "0123456789abcdef";
  os << "# generators of H(" << 2 * ps.params.d - 1 << ", "
     << ps.params.q * ps.params.q << "), one canonical matrix per line\n";
  for (const auto& g : ps.generators) {
    for (std::size_t r = 0; r < g.rows.size(); ++r) {
      if (r) os << '.';
      for (const auto x : g.rows[r]) os << hex[x];
    }
    os << '\n';
  }
  os << "# codimension table\n";
  const std::size_t N = ps.vertex_count();
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t s = 0; s < N; ++s) os << hex[ps.codim_at(r, s)];
    os << '\n';
  }
}

}  // namespace ekr::oracle
