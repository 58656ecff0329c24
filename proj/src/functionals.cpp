#include "hopfforge/functionals.hpp"

#include <algorithm>
#include <type_traits>

#include "hopfforge/qbinomial.hpp"

namespace hopfforge {

AlgebraElement HopfTables::elem_mult(const AlgebraElement& u, const AlgebraElement& v) const {
  AlgebraElement out;
  for (const auto& [i, cu] : u)
    for (const auto& [j, cv] : v) elem_add_scaled(out, mult(i, j), cu * cv);
  return out;
}

Cyc HopfTables::counit_of(const AlgebraElement& u) const {
  Cyc acc(0);
  for (const auto& [i, c] : u) acc += counit_[i] * c;
  return acc;
}

TensorElement HopfTables::comult_of(const AlgebraElement& u) const {
  TensorElement t;
  for (const auto& [i, c] : u)
    for (const auto& [uv, c2] : comult_[i]) tensor_add_term(t, uv.first, uv.second, c * c2);
  return t;
}

const HopfTables::Fiber& HopfTables::fiber(uint32_t a, uint32_t b) const {
  static const Fiber empty;
  auto it = fibers_.find(std::make_pair(a, b));
  return it == fibers_.end() ? empty : it->second;
}

void HopfTables::build_fibers() {
  fibers_.clear();
  for (uint32_t u = 0; u < dim_; ++u)
    for (const auto& [legs, c] : comult_[u]) fibers_[legs].emplace_back(u, c);
}

HopfTables tables_from(const PbwHopfAlgebra& A) {
  HopfTables T;
  T.dim_ = A.dim();
  T.conductor_ = A.conductor();
  T.unit_element_ = {{A.unit_index(), Cyc(1)}};
  T.mult_.resize((size_t)T.dim_ * T.dim_);
  for (uint32_t i = 0; i < T.dim_; ++i)
    for (uint32_t j = 0; j < T.dim_; ++j) T.mult_[(size_t)i * T.dim_ + j] = A.mult(i, j);
  T.comult_.resize(T.dim_);
  T.counit_.resize(T.dim_);
  T.antipode_.resize(T.dim_);
  T.degrees_.resize(T.dim_);
  T.labels_.resize(T.dim_);
  for (uint32_t i = 0; i < T.dim_; ++i) {
    T.comult_[i] = A.comult(i);
    T.counit_[i] = A.counit(i);
    T.antipode_[i] = A.antipode(i);
    T.degrees_[i] = A.degree(i);
    T.labels_[i] = A.label(i);
  }
  T.build_fibers();
  return T;
}

Cyc eval(const LinearFunctional& f, uint32_t i) {
  auto it = f.find(i);
  return it == f.end() ? Cyc(0) : it->second;
}

Cyc eval(const LinearFunctional& f, const AlgebraElement& u) {
  Cyc acc(0);
  for (const auto& [i, c] : u) {
    auto it = f.find(i);
    if (it != f.end()) acc += it->second * c;
  }
  return acc;
}

Cyc eval(const PairFunctional& f, uint32_t i, uint32_t j) {
  auto it = f.find(std::make_pair(i, j));
  return it == f.end() ? Cyc(0) : it->second;
}

Cyc eval(const PairFunctional& f, const TensorElement& t) {
  Cyc acc(0);
  for (const auto& [key, c] : t) {
    auto it = f.find(key);
    if (it != f.end()) acc += it->second * c;
  }
  return acc;
}

Cyc eval(const TripleFunctional& f, uint32_t i, uint32_t j, uint32_t k) {
  auto it = f.find(std::make_tuple(i, j, k));
  return it == f.end() ? Cyc(0) : it->second;
}

LinearFunctional counit_functional(const HopfTables& T) {
  LinearFunctional f;
  for (uint32_t i = 0; i < T.dim(); ++i)
    if (!T.counit(i).is_zero()) f.emplace(i, T.counit(i));
  return f;
}

PairFunctional pair_counit(const HopfTables& T) {
  PairFunctional f;
  for (uint32_t i = 0; i < T.dim(); ++i) {
    if (T.counit(i).is_zero()) continue;
    for (uint32_t j = 0; j < T.dim(); ++j)
      if (!T.counit(j).is_zero()) f.emplace(std::make_pair(i, j), T.counit(i) * T.counit(j));
  }
  return f;
}

TripleFunctional triple_counit(const HopfTables& T) {
  TripleFunctional f;
  for (uint32_t i = 0; i < T.dim(); ++i) {
    if (T.counit(i).is_zero()) continue;
    for (uint32_t j = 0; j < T.dim(); ++j) {
      if (T.counit(j).is_zero()) continue;
      for (uint32_t k = 0; k < T.dim(); ++k)
        if (!T.counit(k).is_zero())
          f.emplace(std::make_tuple(i, j, k), T.counit(i) * T.counit(j) * T.counit(k));
    }
  }
  return f;
}

PairFunctional tensor_functional(const LinearFunctional& f, const LinearFunctional& h) {
  PairFunctional out;
  for (const auto& [i, ci] : f)
    for (const auto& [j, cj] : h) func_add_term(out, std::make_pair(i, j), ci * cj);
  return out;
}

TripleFunctional tensor_functional(const LinearFunctional& f, const LinearFunctional& g,
                                   const LinearFunctional& h) {
  TripleFunctional out;
  for (const auto& [i, ci] : f)
    for (const auto& [j, cj] : g)
      for (const auto& [k, ck] : h) func_add_term(out, std::make_tuple(i, j, k), ci * cj * ck);
  return out;
}

LinearFunctional convolve(const HopfTables& T, const LinearFunctional& f,
                          const LinearFunctional& h) {
  LinearFunctional out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : h) {
      Cyc cab = ca * cb;
      for (const auto& [u, cu] : T.fiber(a, b)) func_add_term(out, u, cab * cu);
    }
  return out;
}

PairFunctional convolve(const HopfTables& T, const PairFunctional& f, const PairFunctional& h) {
  PairFunctional out;
  for (const auto& [ab, cf] : f)
    for (const auto& [cd, ch] : h) {
      const auto& left = T.fiber(ab.first, cd.first);
      if (left.empty()) continue;
      const auto& right = T.fiber(ab.second, cd.second);
      if (right.empty()) continue;
      Cyc c = cf * ch;
      for (const auto& [u, cu] : left)
        for (const auto& [v, cv] : right) func_add_term(out, std::make_pair(u, v), c * cu * cv);
    }
  return out;
}

TripleFunctional convolve(const HopfTables& T, const TripleFunctional& f,
                          const TripleFunctional& h) {
  TripleFunctional out;
  for (const auto& [abc, cf] : f)
    for (const auto& [def, ch] : h) {
      const auto& first = T.fiber(std::get<0>(abc), std::get<0>(def));
      if (first.empty()) continue;
      const auto& second = T.fiber(std::get<1>(abc), std::get<1>(def));
      if (second.empty()) continue;
      const auto& third = T.fiber(std::get<2>(abc), std::get<2>(def));
      if (third.empty()) continue;
      Cyc c = cf * ch;
      for (const auto& [u, cu] : first)
        for (const auto& [v, cv] : second)
          for (const auto& [w, cw] : third)
            func_add_term(out, std::make_tuple(u, v, w), c * cu * cv * cw);
    }
  return out;
}

namespace {

template <typename F>
F conv_identity(const HopfTables& T) {
  if constexpr (std::is_same_v<F, LinearFunctional>) {
    return counit_functional(T);
  } else if constexpr (std::is_same_v<F, PairFunctional>) {
    return pair_counit(T);
  } else {
    return triple_counit(T);
  }
}

}  // namespace

namespace {

uint32_t key_degree(const HopfTables& T, uint32_t k) { return T.degree(k); }
uint32_t key_degree(const HopfTables& T, const std::pair<uint32_t, uint32_t>& k) {
  return T.degree(k.first) + T.degree(k.second);
}
uint32_t key_degree(const HopfTables& T, const std::tuple<uint32_t, uint32_t, uint32_t>& k) {
  return T.degree(std::get<0>(k)) + T.degree(std::get<1>(k)) + T.degree(std::get<2>(k));
}

}  // namespace

template <typename F>
F exp_functional(const HopfTables& T, const F& f, uint32_t nilpotency_bound) {
  for (const auto& [key, c] : f)
    if (key_degree(T, key) == 0)
      throw input_error("exp argument must vanish in total degree 0");
  F acc = conv_identity<F>(T);
  F power = f;
  mpz_class fact = 1;
  uint32_t k = 1;
  while (!power.empty()) {
    fact *= k;
    func_add_scaled(acc, power, Cyc(Rational(mpz_class(1), fact)));
    ++k;
    if (k > nilpotency_bound)
      throw cap_error("exp argument is not convolution-nilpotent within bound " +
                      std::to_string(nilpotency_bound));
    power = convolve(T, power, f);
  }
  return acc;
}

template <typename F>
F exp_q_functional(const HopfTables& T, const F& f, const Cyc& q) {
  auto ord = q.multiplicative_order();
  if (!ord) throw input_error("exp_q requires q to be a root of unity");
  uint32_t ell = *ord;
  F acc = conv_identity<F>(T);
  F power = f;
  for (uint32_t m = 1; m < ell && !power.empty(); ++m) {
    func_add_scaled(acc, power, q_factorial(m, q).inverse());
    if (m + 1 < ell) power = convolve(T, power, f);
  }
  return acc;
}

template LinearFunctional exp_functional<LinearFunctional>(const HopfTables&,
                                                           const LinearFunctional&, uint32_t);
template PairFunctional exp_functional<PairFunctional>(const HopfTables&, const PairFunctional&,
                                                       uint32_t);
template TripleFunctional exp_functional<TripleFunctional>(const HopfTables&,
                                                           const TripleFunctional&, uint32_t);
template LinearFunctional exp_q_functional<LinearFunctional>(const HopfTables&,
                                                             const LinearFunctional&, const Cyc&);
template PairFunctional exp_q_functional<PairFunctional>(const HopfTables&, const PairFunctional&,
                                                         const Cyc&);
template TripleFunctional exp_q_functional<TripleFunctional>(const HopfTables&,
                                                             const TripleFunctional&, const Cyc&);

TripleFunctional tensor_counit_left(const HopfTables& T, const PairFunctional& f) {
  TripleFunctional out;
  for (uint32_t g = 0; g < T.dim(); ++g) {
    Cyc e = T.counit(g);
    if (e.is_zero()) continue;
    for (const auto& [key, c] : f)
      func_add_term(out, std::make_tuple(g, key.first, key.second), e * c);
  }
  return out;
}

TripleFunctional tensor_counit_right(const HopfTables& T, const PairFunctional& f) {
  TripleFunctional out;
  for (uint32_t g = 0; g < T.dim(); ++g) {
    Cyc e = T.counit(g);
    if (e.is_zero()) continue;
    for (const auto& [key, c] : f)
      func_add_term(out, std::make_tuple(key.first, key.second, g), e * c);
  }
  return out;
}

namespace {

// basis index k -> list of pairs (u, v) whose product contains k
std::map<uint32_t, std::vector<std::tuple<uint32_t, uint32_t, Cyc>>> mult_fibers(
    const HopfTables& T) {
  std::map<uint32_t, std::vector<std::tuple<uint32_t, uint32_t, Cyc>>> mf;
  for (uint32_t u = 0; u < T.dim(); ++u)
    for (uint32_t v = 0; v < T.dim(); ++v)
      for (const auto& [k, c] : T.mult(u, v)) mf[k].emplace_back(u, v, c);
  return mf;
}

}  // namespace

TripleFunctional precompose_mult_left(const HopfTables& T, const PairFunctional& f) {
  auto mf = mult_fibers(T);
  TripleFunctional out;
  for (const auto& [key, val] : f) {
    auto it = mf.find(key.first);
    if (it == mf.end()) continue;
    for (const auto& [u, v, c] : it->second)
      func_add_term(out, std::make_tuple(u, v, key.second), c * val);
  }
  return out;
}

TripleFunctional precompose_mult_right(const HopfTables& T, const PairFunctional& f) {
  auto mf = mult_fibers(T);
  TripleFunctional out;
  for (const auto& [key, val] : f) {
    auto it = mf.find(key.second);
    if (it == mf.end()) continue;
    for (const auto& [v, w, c] : it->second)
      func_add_term(out, std::make_tuple(key.first, v, w), c * val);
  }
  return out;
}

uint32_t max_pair_degree(const HopfTables& T) {
  uint32_t d = 0;
  for (uint32_t i = 0; i < T.dim(); ++i) d = std::max(d, T.degree(i));
  return 2 * d;
}

std::optional<PairFunctional> convolution_inverse(const HopfTables& T, const PairFunctional& f) {
  // split into homogeneous layers by total pair degree
  std::map<uint32_t, PairFunctional> parts;
  for (const auto& [key, c] : f) parts[T.degree(key.first) + T.degree(key.second)][key] = c;

  // the degree-0 layer must be pointwise invertible on group-like pairs
  PairFunctional eta0;
  for (uint32_t i = 0; i < T.dim(); ++i) {
    if (T.degree(i) != 0) continue;
    for (uint32_t j = 0; j < T.dim(); ++j) {
      if (T.degree(j) != 0) continue;
      Cyc v = eval(f, i, j);
      if (v.is_zero()) return std::nullopt;
      eta0.emplace(std::make_pair(i, j), v.inverse());
    }
  }

  uint32_t maxdeg = max_pair_degree(T);
  std::map<uint32_t, PairFunctional> eta_parts;
  eta_parts[0] = eta0;
  for (uint32_t l = 1; l <= maxdeg; ++l) {
    PairFunctional acc;
    for (uint32_t i = 1; i <= l; ++i) {
      auto pit = parts.find(i);
      auto eit = eta_parts.find(l - i);
      if (pit == parts.end() || eit == eta_parts.end()) continue;
      func_add_scaled(acc, convolve(T, pit->second, eit->second), Cyc(1));
    }
    if (acc.empty()) continue;
    eta_parts[l] = func_scaled(convolve(T, eta0, acc), Cyc(-1));
  }

  PairFunctional eta;
  for (const auto& [l, part] : eta_parts) func_add_scaled(eta, part, Cyc(1));

  PairFunctional id = pair_counit(T);
  if (convolve(T, f, eta) != id || convolve(T, eta, f) != id) return std::nullopt;
  return eta;
}

std::optional<LinearFunctional> convolution_inverse(const HopfTables& T,
                                                    const LinearFunctional& f) {
  // solve f * eta = counit along the filtration by degree; for each u the
  // only Delta(u) term whose right leg is u itself has a degree-0 left leg
  std::vector<uint32_t> order(T.dim());
  for (uint32_t i = 0; i < T.dim(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](uint32_t a, uint32_t b) { return T.degree(a) < T.degree(b); });

  LinearFunctional eta;
  std::vector<bool> known(T.dim(), false);
  for (uint32_t u : order) {
    Cyc lead(0);
    Cyc rest(0);
    for (const auto& [legs, c] : T.comult(u)) {
      if (legs.second == u) {
        lead += eval(f, legs.first) * c;
      } else {
        if (!known[legs.second]) return std::nullopt;
        rest += eval(f, legs.first) * eval(eta, legs.second) * c;
      }
    }
    if (lead.is_zero()) return std::nullopt;
    Cyc value = (T.counit(u) - rest) / lead;
    if (!value.is_zero()) eta.emplace(u, value);
    known[u] = true;
  }

  LinearFunctional id = counit_functional(T);
  if (convolve(T, f, eta) != id || convolve(T, eta, f) != id) return std::nullopt;
  return eta;
}

}  // namespace hopfforge
