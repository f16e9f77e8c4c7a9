#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ekr/hoffman.hpp"
#include "ekr/lp.hpp"

using namespace ekr;
using num::Integer;
using num::Rational;
using scheme::SchemeParams;

namespace {

lp::LPInstance toy(std::vector<std::vector<Rational>> A,
                   std::vector<Rational> rhs, std::vector<Rational> obj,
                   Rational c0 = 0) {
  lp::LPInstance inst;
  inst.A = std::move(A);
  inst.rhs = std::move(rhs);
  inst.obj = std::move(obj);
  inst.obj_const = std::move(c0);
  for (std::size_t j = 0; j < inst.obj.size(); ++j)
    inst.var_names.push_back("x" + std::to_string(j + 1));
  for (std::size_t i = 0; i < inst.A.size(); ++i)
    inst.row_names.push_back("r" + std::to_string(i + 1));
  return inst;
}

}  // namespace

TEST_CASE("toy instances") {
  // maximize x1 subject to x1 <= 2
  const auto c1 = lp::solve_exact(toy({{1}}, {2}, {1}));
  CHECK(c1.status == lp::LPStatus::optimal);
  CHECK(c1.optimum == 2);
  CHECK(c1.primal == std::vector<Rational>{2});
  CHECK(c1.verified);

  // unbounded: maximize x1 subject to -x1 <= 1
  CHECK(lp::solve_exact(toy({{-1}}, {1}, {1})).status ==
        lp::LPStatus::unbounded);

  // infeasible: x1 <= -1 with x1 >= 0
  CHECK(lp::solve_exact(toy({{1}}, {-1}, {1})).status ==
        lp::LPStatus::infeasible);

  // phase-1 path: maximize x2 s.t. x1 >= 1, x1 + x2 <= 3
  const auto c2 = lp::solve_exact(toy({{-1, 0}, {1, 1}}, {-1, 3}, {0, 1}));
  CHECK(c2.status == lp::LPStatus::optimal);
  CHECK(c2.optimum == 2);
  CHECK(c2.verified);

  // degenerate duplicated constraint with negative rhs
  const auto c3 =
      lp::solve_exact(toy({{-1}, {-1}, {1}}, {-1, -1, 4}, {3}, 7));
  CHECK(c3.status == lp::LPStatus::optimal);
  CHECK(c3.optimum == 19);  // 7 + 3*4
  CHECK(c3.verified);

  // a 2-variable LP with fractional optimum:
  // max x + y s.t. 2x + y <= 2, x + 3y <= 3 -> (3/5, 4/5), value 7/5
  const auto c4 = lp::solve_exact(toy({{2, 1}, {1, 3}}, {2, 3}, {1, 1}));
  CHECK(c4.optimum == Rational(7, 5));
  CHECK(c4.primal == std::vector<Rational>{Rational(3, 5), Rational(4, 5)});
  CHECK(c4.dual == std::vector<Rational>{Rational(2, 5), Rational(1, 5)});
}

TEST_CASE("delsarte instance shape") {
  const auto inst = lp::build_lp(SchemeParams{3, 2});
  CHECK(inst.obj.size() == 2);   // x_1, x_2
  CHECK(inst.A.size() == 3);     // i = 1..d
  const auto em = scheme::eigenmatrix({3, 2});
  for (int i = 1; i <= 3; ++i)
    CHECK(inst.rhs[i - 1] == em.m[i]);  // the constant term Q_{0,i} = m_i

  CHECK(lp::build_lp(SchemeParams{5, 2}).obj.size() == 4);
  CHECK(lp::build_lp(SchemeParams{5, 2}).A.size() == 5);
  CHECK_THROWS_AS(lp::build_lp(SchemeParams{1, 2}), DomainError);
}

TEST_CASE("delsarte optimum reproduces the ratio bound at (5,2)") {
  const auto cert = lp::solve_exact(lp::build_lp(SchemeParams{5, 2}));
  CHECK(cert.status == lp::LPStatus::optimal);
  CHECK(cert.optimum == 347139);
  CHECK(cert.verified);
}

TEST_CASE("lp_vs_ratio comparison") {
  const auto cmp = lp::lp_vs_ratio({5, 2});
  CHECK(cmp.equal);
  CHECK(cmp.ratio == 347139);
  // d = 3: tool reports, makes no equality claim; both are upper bounds
  const auto cmp3 = lp::lp_vs_ratio({3, 2});
  CHECK(cmp3.certificate.status == lp::LPStatus::optimal);
  CHECK(cmp3.certificate.optimum >= hoffman::point_pencil_size({3, 2}));
  CHECK(cmp3.ratio == 57);
}

TEST_CASE("solver determinism") {
  const auto inst = lp::build_lp(SchemeParams{5, 2});
  const auto a = lp::solve_exact(inst);
  const auto b = lp::solve_exact(inst);
  CHECK(a.optimum == b.optimum);
  CHECK(a.primal == b.primal);
  CHECK(a.dual == b.dual);
}

TEST_CASE("instance and certificate serialize to text") {
  const auto inst = lp::build_lp(SchemeParams{3, 2});
  const auto cert = lp::solve_exact(inst);
  const auto itxt = lp::to_text(inst);
  CHECK(itxt.find("maximize") != std::string::npos);
  const auto ctxt = lp::to_text(cert, inst);
  CHECK(ctxt.find("optimal") != std::string::npos);
  CHECK(ctxt.find("certificates verified: yes") != std::string::npos);
}
