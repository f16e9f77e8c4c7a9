#pragma once

#include <utility>
#include <vector>

#include "ekr/scheme.hpp"

namespace ekr::equality {

using num::Integer;
using num::Rational;
using scheme::SchemeParams;

enum class Verdict { contradiction_found, no_contradiction };
const char* to_string(Verdict v);

// Intersection distribution of a hypothetical EKR set meeting the bound
// with equality: n_i = (size/N) k_i + a_1 P_{1,i} + a_d P_{d,i}. Every n_i
// counts generators, so a non-integral or negative entry is the
// contradiction.
struct EqualityReport {
  SchemeParams params;
  Integer size;
  Rational a1;
  Rational ad;
  std::vector<Rational> n;       // i = 0..d
  std::vector<bool> integral;    // per n_i
  std::vector<bool> nonnegative; // per n_i
  std::vector<int> witnesses;    // indices with non-integral or negative n_i
  Verdict verdict = Verdict::no_contradiction;
};

// Solves the pair of linear equations for the eigenvector entries a_1, a_d
// on an element of S:
//   (size/N) k_d + a_1 P_{1,d} + a_d P_{d,d} = 0   (entries of A_d chi on S)
//   size/N + a_1 + a_d = 1
// Throws PropertyError if the 2x2 system is singular.
std::pair<Rational, Rational> solve_coeffs(const SchemeParams& p,
                                           const Integer& size);

EqualityReport intersection_distribution(const SchemeParams& p,
                                         const Integer& size);
// Default size = the closed-form bound.
EqualityReport intersection_distribution(const SchemeParams& p);

}  // namespace ekr::equality
