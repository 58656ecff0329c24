#pragma once

/*
 * Gaussian binomials at a root of unity, built by the q-Pascal recurrence
 * C(n,i)_q = C(n-1,i-1)_q + q^i C(n-1,i)_q.  Never divides q-factorials:
 * at roots of unity those vanish while the binomial itself stays finite.
 */

#include "hopfforge/cyclotomic.hpp"

namespace hopfforge {

// (j)_q = 1 + q + ... + q^(j-1)
Cyc q_integer(unsigned j, const Cyc& q);
// (m)!_q = (1)_q (2)_q ... (m)_q
Cyc q_factorial(unsigned m, const Cyc& q);
// C(n,i)_q via the recurrence; throws input_error when i > n
Cyc gauss_binomial(unsigned n, unsigned i, const Cyc& q);

}  // namespace hopfforge
