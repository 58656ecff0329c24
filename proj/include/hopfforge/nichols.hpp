#pragma once

/*
 * The diagonal braiding attached to a datum, the braid group action it
 * induces on tensor powers of V, and the quantum symmetrizers whose ranks
 * give the graded dimensions of the Nichols algebra B(V).  Lifts T_w are
 * computed along one reduced word per permutation; well-definedness is not
 * assumed, it is rechecked on independently generated reduced words.
 */

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hopfforge/abelian_group.hpp"
#include "hopfforge/cyclotomic.hpp"

namespace Eigen {

// exact scalar: no epsilon, no precision, rank decisions are is_zero tests
template <>
struct NumTraits<hopfforge::CyclotomicScalar>
    : GenericNumTraits<hopfforge::CyclotomicScalar> {
  typedef hopfforge::CyclotomicScalar Real;
  typedef hopfforge::CyclotomicScalar NonInteger;
  typedef hopfforge::CyclotomicScalar Nested;
  typedef hopfforge::CyclotomicScalar Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64,
  };
  static inline Real epsilon() { return hopfforge::CyclotomicScalar(); }
  static inline Real dummy_precision() { return hopfforge::CyclotomicScalar(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace hopfforge {

using CycMatrix = Eigen::Matrix<Cyc, Eigen::Dynamic, Eigen::Dynamic>;

// q_{ij} = chi_j(g_i), stored as exponents of the conductor-L root so that
// braid word scalars compose by integer addition mod L
struct DiagonalBraiding {
  uint32_t theta = 0;
  uint32_t conductor = 1;
  std::vector<uint32_t> qexp;  // row-major theta x theta

  uint32_t exponent(uint32_t i, uint32_t j) const { return qexp[i * theta + j]; }
  Cyc q(uint32_t i, uint32_t j) const {
    return Cyc::root_power(conductor, exponent(i, j));
  }
};

DiagonalBraiding braiding_of(const PointedDatum& datum);

// a basis word of V^(x)n together with the accumulated root-of-unity exponent
struct BraidedWord {
  std::vector<uint8_t> letters;
  uint32_t zexp = 0;
};

// c_k swaps letters k, k+1 and multiplies by q(old left, old right)
void apply_braid_generator(const DiagonalBraiding& B, uint32_t k, BraidedWord& w);

// generators applied right to left, as operator composition reads
BraidedWord apply_braid_word(const DiagonalBraiding& B,
                             const std::vector<uint32_t>& gens,
                             std::vector<uint8_t> letters);

// a reduced word for perm (adjacent transpositions, 1-based: s_k acts on
// positions k-1, k); length always equals the inversion number
std::vector<uint32_t> reduced_word(std::vector<uint32_t> perm);
std::vector<uint32_t> reduced_word_descending(std::vector<uint32_t> perm);

// T_w must not depend on the chosen reduced word; checked on `samples`
// random permutations per call, all theta^n basis words each
bool matsumoto_recheck(const DiagonalBraiding& B, uint32_t n, uint32_t samples,
                       uint64_t seed, std::string* witness = nullptr);

// mixed-radix index of a basis word, letters[0] most significant
uint64_t word_index(const DiagonalBraiding& B, const std::vector<uint8_t>& letters);

// S_n = sum over all permutations of T_w, built from the coset factorization
// S_n = S_{n-1} (1 + c_{n-1} + c_{n-1}c_{n-2} + ... + c_{n-1}...c_1);
// throws cap_error when theta^n exceeds word_cap
CycMatrix quantum_symmetrizer(const DiagonalBraiding& B, uint32_t n,
                              uint64_t word_cap = 10000);

// the same sum taken literally, one reduced word per permutation; an
// independent cross-check for the factorized build, exponential in n
CycMatrix quantum_symmetrizer_direct(const DiagonalBraiding& B, uint32_t n,
                                     uint64_t word_cap = 10000);

// row echelon over Q(zeta): pivot search, exact division, no thresholds
uint32_t exact_rank(CycMatrix M);

struct HilbertReport {
  std::vector<uint32_t> ranks;     // rank of S_n for n = 0 .. top degree + 1
  std::vector<uint32_t> expected;  // coefficients of prod_i (1 + t + ... + t^(N_i - 1))
  bool match = false;
  std::string witness;
};

// graded dimensions of B(V) out of symmetrizer ranks, against the
// quantum-linear-space Hilbert series; one degree past the top must vanish
HilbertReport nichols_hilbert_series(const PointedDatum& datum,
                                     uint64_t word_cap = 10000);

}  // namespace hopfforge
