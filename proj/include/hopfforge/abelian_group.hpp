#pragma once

/*
 * Finite abelian groups in invariant-factor form, their characters, and the
 * pointed datum (G, g_i, chi_i, lambda, mu) of quantum-linear-space type.
 * Elements and characters are exponent vectors; the pairing lands in
 * Q(zeta_L) where every invariant factor divides L.
 */

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfforge/cyclotomic.hpp"

namespace hopfforge {

using GroupElement = std::vector<uint32_t>;  // e_j mod m_j

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<uint32_t> invariant_factors);

  const std::vector<uint32_t>& factors() const { return m_; }
  size_t rank() const { return m_.size(); }
  uint64_t order() const { return order_; }
  uint32_t exponent() const { return exponent_; }

  GroupElement identity() const { return GroupElement(m_.size(), 0); }
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement mul_int(const GroupElement& a, long long n) const;
  uint32_t element_order(const GroupElement& a) const;
  bool is_identity(const GroupElement& a) const;

  // mixed-radix enumeration; index is the canonical "group element order"
  uint64_t index_of(const GroupElement& a) const;
  GroupElement element_at(uint64_t idx) const;

 private:
  std::vector<uint32_t> m_;
  uint64_t order_ = 1;
  uint32_t exponent_ = 1;
};

// character chi(t_j) = z^(c_j L/m_j), exponents c_j mod m_j
struct Character {
  std::vector<uint32_t> c;
};

Character character_mul(const FiniteAbelianGroup& G, const Character& a, const Character& b);
Character character_inverse(const FiniteAbelianGroup& G, const Character& a);
Character character_pow(const FiniteAbelianGroup& G, const Character& a, long long n);
bool character_is_trivial(const Character& a);
uint32_t character_order(const FiniteAbelianGroup& G, const Character& a);
// chi(g) as z-exponent mod L, and as a scalar
uint32_t character_pairing_exponent(const FiniteAbelianGroup& G, const Character& chi,
                                    const GroupElement& g, uint32_t L);
Cyc character_pairing(const FiniteAbelianGroup& G, const Character& chi, const GroupElement& g,
                      uint32_t L);

struct PointedDatum {
  FiniteAbelianGroup group;
  uint32_t conductor = 1;
  uint32_t theta = 0;
  std::vector<GroupElement> g;
  std::vector<Character> chi;
  std::vector<uint32_t> N;  // recomputed orders of q_ii; 0 when q_ii = 1
  std::vector<Cyc> mu;
  std::map<std::pair<uint32_t, uint32_t>, Cyc> lambda;  // keys (i,j), i < j

  Cyc q(uint32_t i, uint32_t j) const {  // = chi_j(g_i)
    return character_pairing(group, chi[j], g[i], conductor);
  }
  Cyc mu_at(uint32_t i) const { return mu[i]; }
  Cyc lambda_at(uint32_t i, uint32_t j) const;  // 0 unless (i,j) present, i < j
  bool has_nonzero_lambda() const;
  bool has_nonzero_mu() const;

  PointedDatum zeroed() const;  // same structure, lambda = mu = 0

  // recompute N from the pairing; call after structural edits
  void refresh_orders();

  bool mu_admissible(uint32_t i) const;                 // chi_i^{N_i} = eps and g_i^{N_i} != 1
  bool linkable(uint32_t i, uint32_t j) const;          // chi_i chi_j = eps, g_i g_j != 1, ord(chi_i(g_j)) >= 2
  std::string canonical_serialization() const;          // deterministic, feeds datum_hash
};

// every violated condition, one human-readable line each; empty means valid
std::vector<std::string> validate_datum(const PointedDatum& d);

/*
 * Quotient G/G0 for a subgroup G0 given by generators.  Invariant factors
 * come from the Smith normal form of [diag(m) | generators]; the tracked row
 * transform gives the projection.  Groups here are tiny, so coset data is
 * tabulated by scanning all of G.
 */
struct GroupQuotient {
  FiniteAbelianGroup quotient;                      // trivial factors dropped
  std::vector<GroupElement> kernel;                 // all of G0, ascending G-index
  std::vector<std::vector<GroupElement>> cosets;    // [quotient index] -> members, ascending
  std::vector<std::vector<long long>> row_transform;  // U with U*[diag(m)|gens]*V = D
  std::vector<uint32_t> kept;                       // rows of U kept (factor > 1)
  std::vector<uint32_t> diagonal;                   // full SNF diagonal
  FiniteAbelianGroup source;

  GroupElement project(const GroupElement& g) const;
  const GroupElement& canonical_lift(const GroupElement& qbar) const;
};

GroupQuotient quotient_by(const FiniteAbelianGroup& G, const std::vector<GroupElement>& generators);

}  // namespace hopfforge
