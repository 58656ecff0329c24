#pragma once

#include <atomic>
#include <mutex>

#include "hopfforge/parallel.hpp"

namespace hopfforge {

namespace detail {

template <typename View>
AlgebraElement view_mult_elems(const View& A, const AlgebraElement& u, const AlgebraElement& v) {
  AlgebraElement out;
  for (const auto& [i, cu] : u)
    for (const auto& [j, cv] : v) {
      AlgebraElement m = A.mult(i, j);
      elem_add_scaled(out, m, cu * cv);
    }
  return out;
}

// first-failure tracking that stays deterministic under parallel sweeps:
// keep the failure with the smallest tuple index
struct WitnessMin {
  std::mutex mu;
  uint64_t best = ~0ull;
  std::string text;
  void offer(uint64_t rank, const std::string& t) {
    std::lock_guard<std::mutex> lock(mu);
    if (rank < best) {
      best = rank;
      text = t;
    }
  }
  bool failed() const { return best != ~0ull; }
};

}  // namespace detail

template <typename View>
AxiomReport verify_hopf_axioms(const View& A) {
  AxiomReport rep;
  const uint32_t n = A.dim();
  const AlgebraElement one = A.unit_element();

  // associativity: (u_i u_j) u_k = u_i (u_j u_k)
  {
    detail::WitnessMin w;
    parallel_for(n, [&](size_t b, size_t e) {
      for (size_t i = b; i < e; ++i) {
        for (uint32_t j = 0; j < n; ++j) {
          AlgebraElement ij = A.mult((uint32_t)i, j);
          for (uint32_t k = 0; k < n; ++k) {
            AlgebraElement lhs = detail::view_mult_elems(A, ij, AlgebraElement{{k, Cyc(1)}});
            AlgebraElement rhs = detail::view_mult_elems(A, AlgebraElement{{(uint32_t)i, Cyc(1)}},
                                                         A.mult(j, k));
            if (!elem_eq(lhs, rhs)) {
              w.offer(((uint64_t)i * n + j) * n + k, "associativity fails at (" + A.label((uint32_t)i) +
                                                         ", " + A.label(j) + ", " + A.label(k) + ")");
              return;
            }
          }
        }
      }
    });
    rep.associativity = !w.failed();
    if (w.failed() && rep.witness.empty()) rep.witness = w.text;
  }

  // unit
  {
    bool ok = true;
    for (uint32_t i = 0; i < n && ok; ++i) {
      AlgebraElement ei{{i, Cyc(1)}};
      if (!elem_eq(detail::view_mult_elems(A, one, ei), ei) ||
          !elem_eq(detail::view_mult_elems(A, ei, one), ei)) {
        ok = false;
        if (rep.witness.empty()) rep.witness = "unit fails at " + A.label(i);
      }
    }
    rep.unit = ok;
  }

  // coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
  {
    bool ok = true;
    for (uint32_t i = 0; i < n && ok; ++i) {
      TripleTensorElement lhs, rhs;
      for (const auto& [uv, c] : A.comult(i)) {
        for (const auto& [pq, c2] : A.comult(uv.first)) {
          Cyc prod = c * c2;
          if (prod.is_zero()) continue;
          auto key = std::make_tuple(pq.first, pq.second, uv.second);
          auto it = lhs.find(key);
          if (it == lhs.end()) lhs.emplace(key, prod);
          else {
            it->second += prod;
            if (it->second.is_zero()) lhs.erase(it);
          }
        }
        for (const auto& [pq, c2] : A.comult(uv.second)) {
          Cyc prod = c * c2;
          if (prod.is_zero()) continue;
          auto key = std::make_tuple(uv.first, pq.first, pq.second);
          auto it = rhs.find(key);
          if (it == rhs.end()) rhs.emplace(key, prod);
          else {
            it->second += prod;
            if (it->second.is_zero()) rhs.erase(it);
          }
        }
      }
      if (lhs != rhs) {
        ok = false;
        if (rep.witness.empty()) rep.witness = "coassociativity fails at " + A.label(i);
      }
    }
    rep.coassociativity = ok;
  }

  // counit
  {
    bool ok = true;
    for (uint32_t i = 0; i < n && ok; ++i) {
      AlgebraElement left, right, ei{{i, Cyc(1)}};
      for (const auto& [uv, c] : A.comult(i)) {
        elem_add_term(left, uv.second, c * A.counit(uv.first));
        elem_add_term(right, uv.first, c * A.counit(uv.second));
      }
      if (!elem_eq(left, ei) || !elem_eq(right, ei)) {
        ok = false;
        if (rep.witness.empty()) rep.witness = "counit fails at " + A.label(i);
      }
    }
    rep.counit = ok;
  }

  // bialgebra compatibility: Delta(uv) = Delta(u) Delta(v), Delta(1) = 1 (x) 1,
  // eps(uv) = eps(u) eps(v)
  {
    detail::WitnessMin w;
    TensorElement one_one;
    for (const auto& [i, ci] : one)
      for (const auto& [j, cj] : one) tensor_add_term(one_one, i, j, ci * cj);
    {
      TensorElement d1;
      for (const auto& [i, ci] : one)
        for (const auto& [uv, c] : A.comult(i)) tensor_add_term(d1, uv.first, uv.second, ci * c);
      if (!tensor_eq(d1, one_one)) w.offer(0, "Delta(1) != 1 (x) 1");
    }
    parallel_for(n, [&](size_t b, size_t e) {
      for (size_t i = b; i < e; ++i) {
        for (uint32_t j = 0; j < n; ++j) {
          AlgebraElement prod = A.mult((uint32_t)i, j);
          TensorElement lhs;
          Cyc eps_prod(0);
          for (const auto& [k, c] : prod) {
            for (const auto& [uv, c2] : A.comult(k)) tensor_add_term(lhs, uv.first, uv.second, c * c2);
            eps_prod += c * A.counit(k);
          }
          TensorElement rhs;
          for (const auto& [uv, cu] : A.comult((uint32_t)i))
            for (const auto& [pq, cv] : A.comult(j)) {
              Cyc c = cu * cv;
              if (c.is_zero()) continue;
              AlgebraElement m1 = A.mult(uv.first, pq.first);
              AlgebraElement m2 = A.mult(uv.second, pq.second);
              for (const auto& [r, cr] : m1)
                for (const auto& [s, cs] : m2) tensor_add_term(rhs, r, s, c * cr * cs);
            }
          if (!tensor_eq(lhs, rhs)) {
            w.offer((uint64_t)i * n + j + 1, "bialgebra compatibility fails at (" +
                                                 A.label((uint32_t)i) + ", " + A.label(j) + ")");
            return;
          }
          if (eps_prod != A.counit((uint32_t)i) * A.counit(j)) {
            w.offer((uint64_t)i * n + j + 1,
                    "counit multiplicativity fails at (" + A.label((uint32_t)i) + ", " + A.label(j) + ")");
            return;
          }
        }
      }
    });
    rep.bialgebra_compat = !w.failed();
    if (w.failed() && rep.witness.empty()) rep.witness = w.text;
  }

  // antipode: m(S (x) id)Delta = eta eps = m(id (x) S)Delta
  {
    bool ok = true;
    for (uint32_t i = 0; i < n && ok; ++i) {
      AlgebraElement left, right;
      for (const auto& [uv, c] : A.comult(i)) {
        elem_add_scaled(left, detail::view_mult_elems(A, A.antipode(uv.first),
                                                      AlgebraElement{{uv.second, Cyc(1)}}),
                        c);
        elem_add_scaled(right, detail::view_mult_elems(A, AlgebraElement{{uv.first, Cyc(1)}},
                                                       A.antipode(uv.second)),
                        c);
      }
      AlgebraElement expect = elem_scaled(one, A.counit(i));
      if (!elem_eq(left, expect) || !elem_eq(right, expect)) {
        ok = false;
        if (rep.witness.empty()) rep.witness = "antipode axiom fails at " + A.label(i);
      }
    }
    rep.antipode = ok;
  }

  return rep;
}

}  // namespace hopfforge
