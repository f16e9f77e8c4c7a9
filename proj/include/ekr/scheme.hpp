#pragma once

#include <string>
#include <vector>

#include "ekr/exactnum.hpp"

namespace ekr::scheme {

using num::Integer;
using num::Rational;

// The pair (d, q) selecting the Hermitian polar space H(2d-1, q^2).
struct SchemeParams {
  int d = 0;  // rank, >= 1
  int q = 0;  // field base parameter, >= 2
};

// Throws DomainError unless d >= 1 and q >= 2.
void validate(const SchemeParams& p);
// Throws DomainError unless additionally d is odd and d >= 3.
void validate_odd_rank(const SchemeParams& p);

// Distance-regular parameters of the dual polar graph on generators.
// b[i] for i = 0..d-1 (b[d] = 0), c[i] for i = 1..d (c[0] = 0), a[i] for
// i = 0..d, with a_i = b_0 - b_i - c_i.
struct IntersectionArray {
  std::vector<Integer> b;
  std::vector<Integer> c;
  std::vector<Integer> a;
};

IntersectionArray intersection_array(const SchemeParams& p);

// k_j = [d choose j]_{q^2} * q^(j^2), j = 0..d.
std::vector<Integer> valencies(const SchemeParams& p);

// N = prod_{i=1..d} (q^(2i-1) + 1).
Integer generator_count(const SchemeParams& p);

// Exact eigenvalue table of the association scheme. Rows are indexed so
// that theta (the relation-1 eigenvalues) is strictly decreasing, hence
// row 0 is the valency row and theta[0] = k[1].
struct Eigenmatrix {
  SchemeParams params;
  std::vector<std::vector<Integer>> P;  // (d+1) x (d+1), P[i][j]
  std::vector<Integer> theta;           // strictly decreasing
  std::vector<Integer> k;               // valencies, k[j] = P[0][j]
  std::vector<Rational> m;              // multiplicities, all integral > 0
  Integer N;
};

// Integer spectrum of the tridiagonal intersection matrix, extracted by
// exact Sturm-count bisection on the principal-minor recurrence and
// certified by exact root evaluation. Sorted strictly decreasing.
// Throws PropertyError if any eigenvalue is non-integral or repeated.
std::vector<Integer> tridiagonal_spectrum(const IntersectionArray& ia);

// Classical-parameter closed form theta_i = q*[d-i]_{q^2} - [i]_{q^2},
// kept as an independent cross-check for the bisection path.
std::vector<Integer> classical_parameter_spectrum(const SchemeParams& p);

// Characteristic polynomial of the intersection matrix evaluated at x,
// via the three-term minor recurrence.
Integer charpoly_eval(const IntersectionArray& ia, const Integer& x);

// Builds the full eigenmatrix from the intersection array: P[i][j] =
// v_j(theta_i) with c_{j+1} v_{j+1} = (x - a_j) v_j - b_{j-1} v_{j-1},
// multiplicities from the orthogonality relation. Fails loudly if any
// division is inexact, any multiplicity is non-positive or non-integral,
// or any structural invariant breaks.
Eigenmatrix eigenmatrix(const SchemeParams& p);

// The two closed-form columns, evaluated verbatim (base-q^2 Gaussian
// binomials; out-of-range binomials contribute 0). j must be d or d-2,
// and j = d-2 requires d >= 2.
std::vector<Integer> closed_form_column(const SchemeParams& p, int j);

// Q[j][i] = m_i P[i][j] / k_j; satisfies P*Q = N*I exactly.
std::vector<std::vector<Rational>> dual_eigenmatrix(const Eigenmatrix& em);

// Structured text report, exact values only.
std::string to_text(const Eigenmatrix& em);

}  // namespace ekr::scheme
