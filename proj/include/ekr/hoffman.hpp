#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ekr/scheme.hpp"

namespace ekr::hoffman {

using num::Integer;
using num::Rational;
using scheme::Eigenmatrix;
using scheme::SchemeParams;

// Weights c_j of the generalized adjacency matrix sum_j c_j A_j, stored at
// index j for j = 1..d (index 0 unused and zero). Relation d is the edge
// set of the oppositeness graph; every other weight must be <= 0, and at
// least one weight must be nonzero.
struct WeightVector {
  std::vector<Rational> c;
};

// The optimal weight f in its displayed shape: the reduced value plus the
// printed numerator f_1 and denominator f_2 that the bound identity chain
// manipulates verbatim.
struct OptimalF {
  Rational value;
  Integer printed_num;  // f_1 = (q^(d-1)-1) q^(4(d-2))
  Integer printed_den;  // f_2 = [d-1,1] q^(2d-5) - [d-1,2] + [d,2] q^(d-3)
};

struct BoundReport {
  SchemeParams params;
  std::optional<OptimalF> f;           // engaged for the A_d - f A_{d-2} weighting
  Rational K;                          // constant row sum = spectrum[0]
  Rational lambda;                     // min of spectrum
  std::vector<Rational> spectrum;      // eigenvalue on V_i, i = 0..d
  Rational ratio;                      // -lambda N / (K - lambda)
  std::optional<Integer> closed_form;  // product formula value
  bool bounds_match = false;
  bool in_theorem_range = false;       // d >= 5
};

// Both printed forms of f, the fully factored form, and the eigenvalue
// matching equation, all checked to agree exactly; 0 < f < q^2 - 1.
// Requires d odd, d >= 3.
OptimalF optimal_f_forms(const SchemeParams& p);
Rational optimal_f(const SchemeParams& p);

// Eigenvalues P_{i,d} - f P_{i,d-2} of A_d - f A_{d-2}, i = 0..d.
std::vector<Rational> pseudo_spectrum(const Eigenmatrix& em, const Rational& f);
std::vector<Rational> pseudo_spectrum(const SchemeParams& p, const Rational& f);

// Constant row sum K = q^(d^2) - f [d,2] q^((d-2)^2).
Rational row_sum_K(const SchemeParams& p, const Rational& f);

// Smallest eigenvalue of A_d - f A_{d-2} at f = optimal_f. Both printed
// expressions are checked to agree, the minimum over the spectrum is
// attained exactly at indices 1 and d, and for d >= 5 the bound
// lambda < -q^(d^2-2d+2) is checked.
Rational lambda_min(const SchemeParams& p);
Rational lambda_min(const Eigenmatrix& em);

struct SignCheck {
  int index;
  std::string condition;
  bool ok;
};
struct SignAnalysis {
  std::vector<SignCheck> checks;
  bool all_ok = true;
  // Throws PropertyError naming the first violated inequality.
  void require() const;
};
// Per-index parity/sign structure of the spectrum at f = optimal_f.
SignAnalysis sign_analysis(const Eigenmatrix& em);
SignAnalysis sign_analysis(const SchemeParams& p);

// -lambda N / (K - lambda); checked against closed_form_bound exactly.
Rational ratio_bound(const SchemeParams& p);

// ((q^2+q+1) q^(2d-3) + 1) prod_{i=1..d-1, 2i != d+-1} (q^(2i-1) + 1).
Integer closed_form_bound(const SchemeParams& p);

// prod_{i=1..d-1} (q^(2i-1) + 1), the size of a point pencil.
Integer point_pencil_size(const SchemeParams& p);

struct ChainLink {
  std::string name;
  bool ok;
};
struct ChainCheck {
  std::vector<ChainLink> links;
  bool all_ok() const;
  std::string first_failure() const;  // empty when all links hold
};
// Every displayed equality in the derivation of the closed-form bound,
// evaluated exactly at (d, q).
ChainCheck verify_lemma3_chain(const SchemeParams& p);

// Full report for the A_d - f A_{d-2} weighting at f = optimal_f, with
// every structural property checked (spectrum matching, K > 0, minimum
// attained exactly at {1, d}, ratio == closed form).
BoundReport bound_report(const Eigenmatrix& em);
BoundReport bound_report(const SchemeParams& p);

// Ratio bound for an arbitrary admissible weight vector. Rejects weights
// violating the sign constraint and spectra with least eigenvalue >= 0.
BoundReport generic_ratio_bound(const Eigenmatrix& em, const WeightVector& w);
BoundReport generic_ratio_bound(const SchemeParams& p, const WeightVector& w);

struct SweepSample {
  Rational f;
  Rational min_eigenvalue;
};
struct SweepReport {
  SchemeParams params;
  int grid_size = 0;
  Rational optimal_f;
  Rational min_at_optimal;
  std::vector<SweepSample> samples;  // grid over [0, q^2-1]
  bool optimal_wins = false;
};
// Samples the min-eigenvalue of A_d - f A_{d-2} on a uniform rational grid
// and checks the optimal f is at least as good as every sample.
SweepReport f_sweep(const Eigenmatrix& em, int grid_size);
SweepReport f_sweep(const SchemeParams& p, int grid_size);

}  // namespace ekr::hoffman
