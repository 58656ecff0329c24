#pragma once

/*
 * Cocycle deformation A_sigma: same coalgebra, multiplication conjugated to
 * m_sigma = sigma * m * sigma^{-1}, antipode recomputed.  The deformed
 * structure is produced as a new HopfTables snapshot, so a deformation can
 * itself be deformed or dualized.  The antipode is solved from its defining
 * identity; the convolution formula through U(x) = sigma(x_1, S(x_2)) is
 * computed alongside and compared, never trusted on its own.
 */

#include "hopfforge/cocycles.hpp"

namespace hopfforge {

struct DeformationResult {
  HopfTables tables;          // A_sigma
  PairFunctional sigma;
  PairFunctional sigma_inv;
  AxiomReport axioms;         // full Hopf verification of A_sigma
  std::string antipode_route; // "convolution" when the U-route agreed, else "solver"
  bool u_route_agrees = false;
  bool antipode_solved = false;
  std::string witness;
};

// both sigma and its convolution inverse come from the caller, typically out
// of is_multiplicative_cocycle
DeformationResult deform_by_cocycle(const HopfTables& T, const PairFunctional& sigma,
                                    const PairFunctional& sigma_inv);

struct LiftingMatch {
  struct Relation {
    std::string name;
    bool residual_zero = false;
  };
  std::vector<Relation> relations;
  bool dimension_ok = false;
  std::string witness;
  bool all() const {
    if (!dimension_ok) return false;
    for (const auto& r : relations)
      if (!r.residual_zero) return false;
    return true;
  }
};

// check the defining relations of u(D, lambda, mu) inside the deformed
// product: group commutation, Serre relations for linked pairs, root
// relations x_i^{N_i} = mu_i (1 - g_i^{N_i})
LiftingMatch match_lifting(const HopfTables& deformed, const PbwHopfAlgebra& A0,
                           const PointedDatum& params);

// n-fold product of basis element idx under the tables' multiplication
AlgebraElement table_power(const HopfTables& T, uint32_t idx, uint32_t n);

// read mu' from the N_i-th deformed power of x_i, expected of the shape
// mu' (1 - g_i^{N_i}); nullopt when the element has a different shape
std::optional<Cyc> radical_scalar(const HopfTables& deformed, const PbwHopfAlgebra& A0,
                                  const PointedDatum& params, uint32_t i);

struct FormalComponents {
  bool m0_is_original = false;  // degree-preserving part of m_sigma equals m
  uint32_t s = 0;               // first deforming degree, 0 when sigma = eps (x) eps
  bool bracket_identity = false;    // m_s = sigma_s * m - m * sigma_s
  bool sigma_s_commutes = false;    // whether sigma_s * m = m * sigma_s outright
  std::string witness;
};

// split m_sigma by degree drop against the grading of the undeformed tables
FormalComponents formal_deformation_components(const HopfTables& T, const PairFunctional& sigma,
                                               const HopfTables& deformed);

}  // namespace hopfforge
