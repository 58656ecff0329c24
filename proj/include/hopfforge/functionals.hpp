#pragma once

/*
 * Functionals on a finite dimensional Hopf algebra and on its tensor powers,
 * together with the convolution calculus used by the cocycle machinery.
 *
 * Everything here runs against HopfTables, a dense snapshot of the structure
 * maps.  The snapshot form matters: deformed algebras and duals are produced
 * as tables, not as PBW data, and the same convolution code must serve all of
 * them.  fiber(a, b) inverts the coproduct: it lists the basis elements u
 * whose Delta(u) contains a (x) b, so convolutions iterate over the sparse
 * support of the functionals instead of over all basis pairs.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hopfforge/pbw_algebra.hpp"

namespace hopfforge {

using LinearFunctional = std::map<uint32_t, Cyc>;
using PairFunctional = std::map<std::pair<uint32_t, uint32_t>, Cyc>;
using TripleFunctional = std::map<std::tuple<uint32_t, uint32_t, uint32_t>, Cyc>;

struct HopfTables {
  uint32_t dim_ = 0;
  uint32_t conductor_ = 1;
  AlgebraElement unit_element_;  // the dual algebra's unit is not a basis element
  std::vector<AlgebraElement> mult_;  // row-major dim x dim
  std::vector<TensorElement> comult_;
  std::vector<Cyc> counit_;
  std::vector<AlgebraElement> antipode_;  // may be empty until computed
  std::vector<uint32_t> degrees_;
  std::vector<std::string> labels_;

  using Fiber = std::vector<std::pair<uint32_t, Cyc>>;
  std::map<std::pair<uint32_t, uint32_t>, Fiber> fibers_;

  uint32_t dim() const { return dim_; }
  uint32_t conductor() const { return conductor_; }
  uint32_t degree(uint32_t i) const { return degrees_[i]; }
  const AlgebraElement& mult(uint32_t i, uint32_t j) const {
    return mult_[(size_t)i * dim_ + j];
  }
  const TensorElement& comult(uint32_t i) const { return comult_[i]; }
  Cyc counit(uint32_t i) const { return counit_[i]; }
  const AlgebraElement& antipode(uint32_t i) const { return antipode_[i]; }
  const AlgebraElement& unit_element() const { return unit_element_; }
  std::string label(uint32_t i) const { return labels_[i]; }

  AlgebraElement elem_mult(const AlgebraElement& u, const AlgebraElement& v) const;
  Cyc counit_of(const AlgebraElement& u) const;
  TensorElement comult_of(const AlgebraElement& u) const;
  const Fiber& fiber(uint32_t a, uint32_t b) const;
  void build_fibers();
};

HopfTables tables_from(const PbwHopfAlgebra& A);

Cyc eval(const LinearFunctional& f, uint32_t i);
Cyc eval(const LinearFunctional& f, const AlgebraElement& u);
Cyc eval(const PairFunctional& f, uint32_t i, uint32_t j);
Cyc eval(const PairFunctional& f, const TensorElement& t);
Cyc eval(const TripleFunctional& f, uint32_t i, uint32_t j, uint32_t k);

template <typename K>
void func_add_term(std::map<K, Cyc>& f, const K& key, const Cyc& c) {
  if (c.is_zero()) return;
  auto it = f.find(key);
  if (it == f.end()) {
    f.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
  }
}

template <typename K>
void func_add_scaled(std::map<K, Cyc>& dst, const std::map<K, Cyc>& src, const Cyc& c) {
  if (c.is_zero()) return;
  for (const auto& [k, v] : src) func_add_term(dst, k, v * c);
}

template <typename K>
std::map<K, Cyc> func_scaled(const std::map<K, Cyc>& f, const Cyc& c) {
  std::map<K, Cyc> out;
  func_add_scaled(out, f, c);
  return out;
}

LinearFunctional counit_functional(const HopfTables& T);
PairFunctional pair_counit(const HopfTables& T);
TripleFunctional triple_counit(const HopfTables& T);

PairFunctional tensor_functional(const LinearFunctional& f, const LinearFunctional& h);
TripleFunctional tensor_functional(const LinearFunctional& f, const LinearFunctional& g,
                                   const LinearFunctional& h);

LinearFunctional convolve(const HopfTables& T, const LinearFunctional& f,
                          const LinearFunctional& h);
PairFunctional convolve(const HopfTables& T, const PairFunctional& f, const PairFunctional& h);
TripleFunctional convolve(const HopfTables& T, const TripleFunctional& f,
                          const TripleFunctional& h);

// exp(f) = sum f^(*k) / k!; requires f convolution-nilpotent, throws cap_error
// when k exceeds nilpotency_bound without the powers vanishing
template <typename F>
F exp_functional(const HopfTables& T, const F& f, uint32_t nilpotency_bound);

// exp_q(f) = sum_{m < ord(q)} f^(*m) / (m)!_q
template <typename F>
F exp_q_functional(const HopfTables& T, const F& f, const Cyc& q);

// embeddings of a pair functional into functionals on three tensor factors,
// used by the cocycle identity and the twist conditions
TripleFunctional tensor_counit_left(const HopfTables& T, const PairFunctional& f);
TripleFunctional tensor_counit_right(const HopfTables& T, const PairFunctional& f);
TripleFunctional precompose_mult_left(const HopfTables& T, const PairFunctional& f);
TripleFunctional precompose_mult_right(const HopfTables& T, const PairFunctional& f);

// largest possible degree of a pair functional entry, for nilpotency bounds
uint32_t max_pair_degree(const HopfTables& T);

// two-sided convolution inverse, or nullopt when none exists.  The pair
// version runs the degree recursion eta_0 = pointwise inverse on group-like
// pairs, eta_l = -eta_0 * sum_{i>=1} f_i * eta_{l-i}, which only needs the
// degree-0 part to be invertible, not equal to the counit.  The linear
// version solves along the coradical filtration.  Both verify the candidate
// against f on the full basis before returning it.
std::optional<PairFunctional> convolution_inverse(const HopfTables& T, const PairFunctional& f);
std::optional<LinearFunctional> convolution_inverse(const HopfTables& T,
                                                    const LinearFunctional& f);

}  // namespace hopfforge
