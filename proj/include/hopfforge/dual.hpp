#pragma once

/*
 * The dual Hopf algebra as a table transpose, and Drinfeld twisting of its
 * comultiplication by an invertible F in H (x) H.  H = A* is identified with
 * linear functionals on A, H (x) H with pair functionals, so every product
 * here is a convolution over the original tables.  The twist preconditions
 * mirror the multiplicative-cocycle conditions with the two sides of the
 * identity exchanged.
 */

#include "hopfforge/cocycles.hpp"

namespace hopfforge {

struct DualResult {
  HopfTables dual;
  AxiomReport axioms;
  bool double_dual_matches = false;
};

// basis of the dual = dual basis; multiplication transposes the coproduct,
// comultiplication transposes the product, unit is the counit of A
DualResult dual_hopf(const HopfTables& T);

struct TwistReport {
  bool normalized = false;
  bool conditions = false;   // (F x 1)(Delta x id)F = (1 x F)(id x Delta)F
  bool invertible = false;
  std::optional<PairFunctional> inverse;
  std::string witness;
  bool ok() const { return normalized && conditions && invertible; }
};
TwistReport twist_precondition(const HopfTables& T, const PairFunctional& F);

// Delta_H(h) = h o m as a pair functional
PairFunctional dual_comult_of(const HopfTables& T, const LinearFunctional& h);

// F * (h o m) * F^{-1}
PairFunctional twisted_comult_of(const HopfTables& T, const PairFunctional& F,
                                 const PairFunctional& Finv, const LinearFunctional& h);

struct TwistedDualChecks {
  bool counital = false;
  bool coassociative = false;
  bool algebra_map = false;
  std::string witness;
  bool ok() const { return counital && coassociative && algebra_map; }
};

// sweeps the dual basis: the twisted coproduct must stay counital,
// coassociative, and an algebra map for the convolution product
TwistedDualChecks verify_twisted_dual(const HopfTables& T, const PairFunctional& F,
                                      const PairFunctional& Finv);

// n-fold convolution power, f^0 = eps_A = the unit of the dual
LinearFunctional functional_power(const HopfTables& T, const LinearFunctional& f, uint32_t n);

}  // namespace hopfforge
