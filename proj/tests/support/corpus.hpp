#pragma once

/*
 * Deterministic test corpus: every invariant-factor chain group of order at
 * most 24, vertex tuples with N_i in [2,5] satisfying the Cartan condition,
 * deduplicated by a structural fingerprint and bounded per group, then
 * expanded into parameter variants (plain, mu, lambda, both).  The same
 * corpus is shared by the property suites and the acceptance run, so its
 * generation must stay order-stable.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "hopfforge/abelian_group.hpp"

namespace hopfforge::testsupport {

struct Entry {
  std::string name;
  PointedDatum datum;
  bool has_mu = false;
  bool has_lambda = false;
  uint64_t dimension = 0;  // |G| * prod N_i
};

const std::vector<Entry>& corpus();

// the two worked examples: cyclic of order 6, q a primitive cube root
PointedDatum ex51();  // theta = 1, mu = 1, dim 18
PointedDatum ex52();  // theta = 2, mu = (1,1), lambda = 1, dim 54

// (Z/4)^3 with q_ii of order 4 and all cross-braidings -1; graded only
// (dim 4096), for two-strategy rewriting comparisons
PointedDatum theta3_cube();

// (Z/4)^2 with two disjoint linked pairs whose cross-pairings are -1;
// N = (2,2,2,2), dim 256
PointedDatum theta4_pairs();

}  // namespace hopfforge::testsupport
