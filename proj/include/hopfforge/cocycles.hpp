#pragma once

/*
 * Deforming cocycles for u(D, lambda, mu): the Hochschild cocycles zeta_i and
 * eta_{j,i}, their exponential and q-exponential multiplicative closures, the
 * linking cocycle built on the quotient algebra C and pulled back, the fully
 * assembled sigma, and the Singer cocycle of a cleft extension
 * kG0 -> B -> C.  Every construction is paired with an exhaustive verifier;
 * nothing is trusted on the strength of the formulas alone.
 */

#include <memory>
#include <optional>

#include "hopfforge/functionals.hpp"

namespace hopfforge {

// images of source basis elements in a target algebra, Hom(C, B) as a table
using AlgebraMap = std::vector<AlgebraElement>;

LinearFunctional d_functional(const PbwHopfAlgebra& A, uint32_t i);
LinearFunctional extended_character(const PbwHopfAlgebra& A, uint32_t i);

// d_i(uv) = d_i(u) eps(v) + chi_i(u) d_i(v) on all basis pairs
bool verify_skew_derivation(const HopfTables& T, const LinearFunctional& d,
                            const LinearFunctional& chi_ext);

PairFunctional zeta_cocycle(const PbwHopfAlgebra& A, uint32_t i);

// (d_j * chi_i) (x) d_i; requires (i, j) linkable, i < j; the skew-derivation
// law for d_i and d_j is verified as a side effect
PairFunctional eta_functional(const PbwHopfAlgebra& A, const HopfTables& T, uint32_t j,
                              uint32_t i);

struct HochschildReport {
  bool ok = false;
  std::string witness;
};
HochschildReport is_hochschild_2cocycle(const HopfTables& T, const PairFunctional& f);

struct MultiplicativeReport {
  bool normalized = false;
  bool cocycle_identity = false;
  bool invertible = false;
  std::string witness;
  std::optional<PairFunctional> inverse;
  bool ok() const { return normalized && cocycle_identity && invertible; }
};
MultiplicativeReport is_multiplicative_cocycle(const HopfTables& T, const PairFunctional& sigma);

struct GradedDecomposition {
  bool unital_degree_zero = false;  // sigma_0 == eps (x) eps
  uint32_t s = 0;                   // least positive degree with a nonzero layer, 0 if none
  PairFunctional infinitesimal;     // sigma_s (empty when s = 0)
  bool infinitesimal_hochschild = true;
  std::string witness;
  std::map<uint32_t, PairFunctional> layers;
};
GradedDecomposition graded_parts(const HopfTables& T, const PairFunctional& sigma);

// e^{sum_i mu_i zeta_i} on u(D,0,0); A must be the graded algebra of
// params.zeroed(), while params carries the mu values
PairFunctional mu_exponential_cocycle(const PbwHopfAlgebra& A, const HopfTables& T,
                                      const PointedDatum& params);

struct LinkingData {
  GroupQuotient Q;                      // G / <g_b^{N_b} : b admissible>
  PointedDatum quotient_datum;          // D' with lambda = mu = 0
  std::unique_ptr<PbwHopfAlgebra> C;    // u(D',0,0)
  std::unique_ptr<HopfTables> TC;
  PairFunctional sigma_on_C;
  PairFunctional sigma;                 // pullback along x^a g -> x^a (g mod G0)
  bool disjoint_factors_commute = true; // checked when two or more pairs are linked
};
LinkingData linking_cocycle(const PbwHopfAlgebra& A, const HopfTables& T,
                            const PointedDatum& params);

// pull a pair functional on C back along the basis projection x^a g -> x^a gbar
PairFunctional pullback_pair(const PbwHopfAlgebra& A, const PbwHopfAlgebra& C,
                             const GroupQuotient& Q, const PairFunctional& f);

// sigma = sigma_{lambda,mu} * e^{sum mu_i zeta_i} on u(D,0,0)
PairFunctional assemble_sigma(const PbwHopfAlgebra& A, const HopfTables& T,
                              const PointedDatum& params);

struct SingerData {
  bool ok = false;
  std::string witness;
  GroupQuotient Q;                      // G / <g_i^{N_i} : mu_i != 0>
  PointedDatum quotient_datum;
  std::unique_ptr<PbwHopfAlgebra> B;    // u(D,0,mu)
  std::unique_ptr<PbwHopfAlgebra> C;    // u(D',0,0)
  std::unique_ptr<PbwHopfAlgebra> A0;   // u(D,0,0), domain of the lifted cocycle
  std::unique_ptr<HopfTables> TB;
  std::unique_ptr<HopfTables> TC;
  AlgebraMap xi, xi_inv;                // Hom(B, kG0), tabulated in B
  AlgebraMap chi, chi_inv;              // Hom(C, B)
  bool xi_inverse_verified = false;
  bool representative_independent = false;
  bool chi_inverse_verified = false;
  bool a_values_in_group_part = false;
  std::vector<AlgebraElement> a;        // row-major dim_C x dim_C, values in kG0
  PairFunctional sigma_prime;           // phi o a, on C
  PairFunctional sigma_lift;            // pullback to u(D,0,0)
  MultiplicativeReport sigma_prime_check;
};
SingerData singer_cocycle(const PointedDatum& datum, const Character& phi,
                          uint64_t dim_cap = 2000);

// lex-least character of G nontrivial on every generator g_i^{N_i} with
// mu_i != 0 (falls back to lex-least nontrivial on G0, then to trivial)
Character pick_singer_character(const PointedDatum& datum);

}  // namespace hopfforge
