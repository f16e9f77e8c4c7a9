#include "ekr/lp.hpp"

#include <sstream>

#include "ekr/hoffman.hpp"

namespace ekr::lp {

using num::checked_div;

const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::unbounded: return "unbounded";
    case LPStatus::infeasible: return "infeasible";
  }
  return "?";
}

LPInstance build_lp(const scheme::Eigenmatrix& em) {
  const SchemeParams& p = em.params;
  if (p.d < 2) throw DomainError("build_lp: needs d >= 2");
  const int d = p.d;
  const auto Q = scheme::dual_eigenmatrix(em);

  LPInstance lp;
  lp.params = p;
  lp.obj_const = 1;  // the substituted x_0
  for (int j = 1; j <= d - 1; ++j) {
    lp.var_names.push_back("x" + std::to_string(j));
    lp.obj.push_back(1);
  }
  // sum_{j=0..d-1} x_j Q[j][i] >= 0 with x_0 = 1, flipped into <= form.
  for (int i = 1; i <= d; ++i) {
    lp.row_names.push_back("xQ[" + std::to_string(i) + "] >= 0");
    std::vector<Rational> row(d - 1);
    for (int j = 1; j <= d - 1; ++j) row[j - 1] = -Q[j][i];
    lp.A.push_back(std::move(row));
    lp.rhs.push_back(Q[0][i]);  // = m_i
  }
  return lp;
}

LPInstance build_lp(const SchemeParams& p) {
  return build_lp(scheme::eigenmatrix(p));
}

namespace {

// Dense exact tableau over the columns [structural | slack | artificial].
struct Tableau {
  int nstruct = 0;
  int nslack = 0;
  int nart = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<Rational> red;  // reduced costs
  Rational value;             // current objective value
  std::vector<int> basis;     // basic variable per row

  int cols() const { return nstruct + nslack + nart; }

  void pivot(int r, int c) {
    const Rational pv = rows[r][c];
    for (auto& x : rows[r]) x /= pv;
    rhs[r] /= pv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational factor = rows[i][c];
      for (int j = 0; j < cols(); ++j) rows[i][j] -= factor * rows[r][j];
      rhs[i] -= factor * rhs[r];
    }
    if (red[c] != 0) {
      const Rational factor = red[c];
      for (int j = 0; j < cols(); ++j) red[j] -= factor * rows[r][j];
      value -= factor * rhs[r];
    }
    basis[r] = c;
  }

  // Bland's rule: entering = smallest column with negative reduced cost;
  // leaving = smallest ratio, ties broken by smallest basic variable.
  LPStatus run() {
    constexpr int kPivotCap = 200000;
    for (int iter = 0; iter < kPivotCap; ++iter) {
      int enter = -1;
      for (int j = 0; j < cols(); ++j) {
        if (red[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LPStatus::optimal;
      int leave = -1;
      Rational best;
      for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rhs[i] / rows[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return LPStatus::unbounded;
      pivot(leave, enter);
    }
    throw PropertyError("simplex: pivot cap exceeded");
  }

  // Reduced costs and value for objective coefficients c (all columns),
  // eliminating the current basic columns.
  void load_objective(const std::vector<Rational>& c) {
    red.assign(cols(), Rational(0));
    for (int j = 0; j < cols(); ++j) red[j] = -c[j];
    value = 0;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      const Rational& cb = c[basis[i]];
      if (cb == 0) continue;
      for (int j = 0; j < cols(); ++j) red[j] += cb * rows[i][j];
      value += cb * rhs[i];
    }
  }
};

void verify_certificate(const LPInstance& lp, const LPCertificate& cert) {
  const std::size_t m = lp.A.size(), n = lp.obj.size();
  for (const auto& x : cert.primal)
    if (x < 0) throw PropertyError("lp certificate: negative primal value");
  for (const auto& y : cert.dual)
    if (y < 0) throw PropertyError("lp certificate: negative dual value");
  Rational primal_obj = lp.obj_const, dual_obj = lp.obj_const;
  for (std::size_t i = 0; i < m; ++i) {
    Rational ax = 0;
    for (std::size_t j = 0; j < n; ++j) ax += lp.A[i][j] * cert.primal[j];
    if (ax > lp.rhs[i]) throw PropertyError("lp certificate: primal infeasible");
    if (cert.dual[i] != 0 && ax != lp.rhs[i])
      throw PropertyError("lp certificate: complementary slackness (rows)");
    dual_obj += lp.rhs[i] * cert.dual[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    primal_obj += lp.obj[j] * cert.primal[j];
    Rational aty = 0;
    for (std::size_t i = 0; i < m; ++i) aty += lp.A[i][j] * cert.dual[i];
    if (aty < lp.obj[j]) throw PropertyError("lp certificate: dual infeasible");
    if (cert.primal[j] != 0 && aty != lp.obj[j])
      throw PropertyError("lp certificate: complementary slackness (columns)");
  }
  if (primal_obj != cert.optimum || dual_obj != cert.optimum)
    throw PropertyError("lp certificate: objective values disagree");
}

}  // namespace

LPCertificate solve_exact(const LPInstance& lp) {
  const int m = static_cast<int>(lp.A.size());
  const int n = static_cast<int>(lp.obj.size());
  for (const auto& row : lp.A)
    if (static_cast<int>(row.size()) != n)
      throw DomainError("solve_exact: ragged constraint matrix");

  Tableau t;
  t.nstruct = n;
  t.nslack = m;
  std::vector<int> art_row;
  for (int i = 0; i < m; ++i)
    if (lp.rhs[i] < 0) art_row.push_back(i);
  t.nart = static_cast<int>(art_row.size());

  t.rows.assign(m, std::vector<Rational>(t.cols(), Rational(0)));
  t.rhs.resize(m);
  t.basis.resize(m);
  std::vector<int> orig(m);  // original constraint index per surviving row
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t.rows[i][j] = lp.A[i][j];
    t.rows[i][n + i] = 1;
    t.rhs[i] = lp.rhs[i];
    t.basis[i] = n + i;
    orig[i] = i;
  }
  // Rows with negative rhs are negated in place and given an artificial
  // basic variable. The slack column of such a row becomes -e_i, which is
  // exactly what makes the plain red[n+i] read-off below yield the dual
  // of the original (un-negated) constraint.
  for (int a = 0; a < t.nart; ++a) {
    const int i = art_row[a];
    for (int j = 0; j < n + m; ++j) t.rows[i][j] = -t.rows[i][j];
    t.rhs[i] = -t.rhs[i];
    t.rows[i][n + m + a] = 1;
    t.basis[i] = n + m + a;
  }

  LPCertificate cert;

  if (t.nart > 0) {
    std::vector<Rational> c1(t.cols(), Rational(0));
    for (int a = 0; a < t.nart; ++a) c1[n + m + a] = -1;
    t.load_objective(c1);
    if (t.run() != LPStatus::optimal)
      throw PropertyError("simplex: phase 1 reported unbounded");
    if (t.value < 0) {
      cert.status = LPStatus::infeasible;
      return cert;
    }
    // Basic artificials sit at value zero now; pivot them out, dropping
    // rows that are redundant (all-zero over the real columns).
    for (int i = static_cast<int>(t.rows.size()) - 1; i >= 0; --i) {
      if (t.basis[i] < n + m) continue;
      int c = -1;
      for (int j = 0; j < n + m; ++j)
        if (t.rows[i][j] != 0) {
          c = j;
          break;
        }
      if (c >= 0) {
        t.pivot(i, c);
        continue;
      }
      if (t.rhs[i] != 0)
        throw PropertyError("simplex: inconsistent zero row after phase 1");
      t.rows.erase(t.rows.begin() + i);
      t.rhs.erase(t.rhs.begin() + i);
      t.basis.erase(t.basis.begin() + i);
      orig.erase(orig.begin() + i);
    }
    for (auto& row : t.rows) row.resize(n + m);
    t.nart = 0;
  }

  std::vector<Rational> c2(t.cols(), Rational(0));
  for (int j = 0; j < n; ++j) c2[j] = lp.obj[j];
  t.load_objective(c2);
  cert.status = t.run();
  if (cert.status != LPStatus::optimal) return cert;

  cert.optimum = t.value + lp.obj_const;
  cert.primal.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < n) cert.primal[t.basis[i]] = t.rhs[i];
  cert.dual.assign(m, Rational(0));  // dropped redundant rows keep 0
  for (int i : orig) cert.dual[i] = t.red[n + i];
  verify_certificate(lp, cert);
  cert.verified = true;
  return cert;
}

Comparison lp_vs_ratio(const SchemeParams& p) {
  scheme::validate_odd_rank(p);
  Comparison cmp;
  cmp.params = p;
  cmp.certificate = solve_exact(build_lp(p));
  cmp.ratio = hoffman::ratio_bound(p);
  cmp.equal = cmp.certificate.status == LPStatus::optimal &&
              cmp.certificate.optimum == cmp.ratio;
  return cmp;
}

std::string to_text(const LPInstance& lp) {
  std::ostringstream os;
  os << "maximize " << num::to_string(lp.obj_const);
  for (std::size_t j = 0; j < lp.obj.size(); ++j)
    os << " + " << num::to_string(lp.obj[j]) << " " << lp.var_names[j];
  os << "\nsubject to (x >= 0):\n";
  for (std::size_t i = 0; i < lp.A.size(); ++i) {
    os << "  [" << lp.row_names[i] << "]";
    for (std::size_t j = 0; j < lp.A[i].size(); ++j)
      os << " " << num::to_string(lp.A[i][j]) << " " << lp.var_names[j]
         << (j + 1 < lp.A[i].size() ? " +" : "");
    os << " <= " << num::to_string(lp.rhs[i]) << "\n";
  }
  return os.str();
}

std::string to_text(const LPCertificate& c, const LPInstance& lp) {
  std::ostringstream os;
  os << "status: " << to_string(c.status) << "\n";
  if (c.status != LPStatus::optimal) return os.str();
  os << "optimum: " << num::to_string(c.optimum) << "\n";
  for (std::size_t j = 0; j < c.primal.size(); ++j)
    os << "  " << lp.var_names[j] << " = " << num::to_string(c.primal[j])
       << "\n";
  os << "dual multipliers:\n";
  for (std::size_t i = 0; i < c.dual.size(); ++i)
    os << "  [" << lp.row_names[i] << "] y = " << num::to_string(c.dual[i])
       << "\n";
  os << "certificates verified: " << (c.verified ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace ekr::lp
