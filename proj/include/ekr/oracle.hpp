#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ekr/scheme.hpp"

namespace ekr::oracle {

using num::Integer;
using num::Rational;
using scheme::SchemeParams;

// GF(q^2) for q in {2, 3}, polynomial basis {1, t} over GF(q); element
// a + b*t is encoded as a + q*b. Conjugation is the Frobenius x -> x^q,
// an involutive automorphism fixing exactly GF(q).
struct Field {
  int q = 0;     // subfield order
  int size = 0;  // q^2
  std::array<std::array<uint8_t, 9>, 9> add{};
  std::array<std::array<uint8_t, 9>, 9> mul{};
  std::array<uint8_t, 9> neg{};
  std::array<uint8_t, 9> inv{};  // inv[0] unused
  std::array<uint8_t, 9> conj{};
  bool in_subfield(uint8_t x) const { return x < static_cast<uint8_t>(q); }
};

// Full arithmetic tables; rejects q outside {2, 3}.
Field build_field(int q);

using Vec = std::vector<uint8_t>;  // coordinates in GF(q^2), length 2d

// h(u, v) = sum_i u_i * conj(v_i).
uint8_t hermitian(const Field& f, const Vec& u, const Vec& v);

// Canonical basis of a subspace: rows in reduced row echelon form, the
// dedup key for the subspace.
struct Generator {
  std::vector<Vec> rows;
};

struct PolarSpace {
  SchemeParams params;
  Field field;
  std::vector<Generator> generators;  // canonical order
  std::vector<Vec> isotropic_points;  // monic representatives
  std::vector<uint8_t> codim;         // N x N pairwise d - rank(G_r cap G_s)
  std::size_t vertex_count() const { return generators.size(); }
  uint8_t codim_at(std::size_t r, std::size_t s) const {
    return codim[r * generators.size() + s];
  }
};

struct EnumerationGuard {
  bool allow_q3 = false;  // additionally admit (q = 3, d <= 2)
};

// Explicit construction of H(2d-1, q^2) under the standard form
// h(u, v) = sum u_i conj(v_i): enumerates all rank-d totally isotropic
// subspaces by recursive extension with canonical-form dedup, checks the
// count against prod (q^(2i-1)+1), and fills the codimension table.
// Guarded to (q = 2, d <= 3), plus (q = 3, d <= 2) on request; anything
// larger is refused with ResourceGuardError.
PolarSpace enumerate_generators(const SchemeParams& p,
                                const EnumerationGuard& guard = {});

// Same construction with the candidate scan order shuffled; the canonical
// result must not depend on the order (tested, not assumed).
PolarSpace enumerate_generators_shuffled(const SchemeParams& p, unsigned seed,
                                         const EnumerationGuard& guard = {});

struct DistanceDistribution {
  std::vector<Integer> counts;    // per-vertex counts by codim
  bool constant_over_vertices = false;
  bool matches_valencies = false;
};
// Per-vertex distance distribution; throws PropertyError if the counts
// differ between vertices (distance-regularity failure).
DistanceDistribution distance_distribution(const PolarSpace& ps);

struct MatrixCheckReport {
  bool annihilation = false;           // prod_i (A_1 - theta_i I) = 0
  bool polynomial_identities = false;  // A_j = v_j(A_1) for every j
  bool row_sums = false;               // rows of A_d - f A_{d-2} sum to K
  bool row_sums_checked = false;       // only possible for odd d >= 3
};
// Exact integer matrix identities tying the explicit space to the
// eigenmatrix; any failure names the first offending entry.
MatrixCheckReport verify_scheme_matrices(const PolarSpace& ps,
                                         const scheme::Eigenmatrix& em);

struct Pencil {
  Vec point;
  std::vector<std::size_t> members;  // generators through the point
  Integer expected_size;
  bool pairwise_intersecting = false;
  bool ratio_inequality_checked = false;  // needs odd d >= 3
  bool ratio_inequality = false;          // |S| (K + |lambda|) <= |lambda| N
};
// All generators through an isotropic point; rejects non-isotropic input.
Pencil point_pencil(const PolarSpace& ps, const Vec& point);

// Flat text dump: one generator per line (rows '.'-separated, hex-coded
// field elements), then the codimension table as hex rows.
void dump(const PolarSpace& ps, std::ostream& os);

}  // namespace ekr::oracle
