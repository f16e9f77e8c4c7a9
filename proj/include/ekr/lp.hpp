#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ekr/scheme.hpp"

namespace ekr::lp {

using num::Integer;
using num::Rational;
using scheme::SchemeParams;

// maximize obj_const + obj . x  subject to  A x <= rhs, x >= 0.
// Rows built from >=-constraints are stored negated.
struct LPInstance {
  std::vector<std::string> var_names;
  std::vector<std::string> row_names;
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> rhs;
  std::vector<Rational> obj;
  Rational obj_const;
  std::optional<SchemeParams> params;  // set for Delsarte instances
};

enum class LPStatus { optimal, unbounded, infeasible };
const char* to_string(LPStatus s);

struct LPCertificate {
  LPStatus status = LPStatus::infeasible;
  Rational optimum;              // includes obj_const
  std::vector<Rational> primal;  // per variable
  std::vector<Rational> dual;    // per constraint row
  bool verified = false;         // both certificates checked by substitution
};

// Delsarte inner-distribution LP for EKR sets: variables x_1..x_{d-1}
// (x_0 = 1 substituted, x_d = 0 dropped), maximize 1 + sum_j x_j subject
// to x_j >= 0 and sum_{j=0..d-1} x_j Q_{j,i} >= 0 for i = 1..d.
LPInstance build_lp(const SchemeParams& p);
LPInstance build_lp(const scheme::Eigenmatrix& em);

// Exact two-phase tableau simplex with Bland's rule. Deterministic. On an
// optimal instance the primal/dual pair is verified by substitution
// (feasibility, equal objectives, complementary slackness) before return.
LPCertificate solve_exact(const LPInstance& lp);

struct Comparison {
  SchemeParams params;
  LPCertificate certificate;
  Rational ratio;  // spectral ratio bound
  bool equal = false;
};
// LP optimum next to the ratio bound; reports, never asserts equality.
Comparison lp_vs_ratio(const SchemeParams& p);

std::string to_text(const LPInstance& lp);
std::string to_text(const LPCertificate& c, const LPInstance& lp);

}  // namespace ekr::lp
