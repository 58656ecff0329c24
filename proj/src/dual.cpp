#include "hopfforge/dual.hpp"

namespace hopfforge {

namespace {

HopfTables make_dual(const HopfTables& T) {
  uint32_t n = T.dim();
  HopfTables D;
  D.dim_ = n;
  D.conductor_ = T.conductor();
  D.mult_.resize((size_t)n * n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      AlgebraElement& e = D.mult_[(size_t)i * n + j];
      for (const auto& [u, c] : T.fiber(i, j)) elem_add_term(e, u, c);
    }
  D.comult_.resize(n);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = 0; v < n; ++v)
      for (const auto& [k, c] : T.mult(u, v)) tensor_add_term(D.comult_[k], u, v, c);
  D.counit_.resize(n);
  for (const auto& [k, c] : T.unit_element()) D.counit_[k] = c;
  for (uint32_t k = 0; k < n; ++k)
    if (!T.counit(k).is_zero()) D.unit_element_.emplace(k, T.counit(k));
  D.antipode_.resize(n);
  for (uint32_t u = 0; u < n; ++u)
    for (const auto& [k, c] : T.antipode(u)) elem_add_term(D.antipode_[k], u, c);
  D.degrees_ = T.degrees_;
  D.labels_.reserve(n);
  for (uint32_t k = 0; k < n; ++k) D.labels_.push_back("d(" + T.label(k) + ")");
  D.build_fibers();
  return D;
}

bool tables_structurally_equal(const HopfTables& A, const HopfTables& B) {
  if (A.dim() != B.dim()) return false;
  uint32_t n = A.dim();
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      if (!elem_eq(A.mult(i, j), B.mult(i, j))) return false;
  for (uint32_t k = 0; k < n; ++k) {
    if (!tensor_eq(A.comult(k), B.comult(k))) return false;
    if (A.counit(k) != B.counit(k)) return false;
    if (!elem_eq(A.antipode(k), B.antipode(k))) return false;
  }
  return elem_eq(A.unit_element(), B.unit_element());
}

bool triple_func_eq(const TripleFunctional& a, const TripleFunctional& b) {
  for (const auto& [k, c] : a)
    if (eval(b, std::get<0>(k), std::get<1>(k), std::get<2>(k)) != c) return false;
  for (const auto& [k, c] : b)
    if (eval(a, std::get<0>(k), std::get<1>(k), std::get<2>(k)) != c) return false;
  return true;
}

}  // namespace

DualResult dual_hopf(const HopfTables& T) {
  DualResult out;
  out.dual = make_dual(T);
  out.axioms = verify_hopf_axioms(out.dual);
  out.double_dual_matches = tables_structurally_equal(make_dual(out.dual), T);
  return out;
}

TwistReport twist_precondition(const HopfTables& T, const PairFunctional& F) {
  TwistReport rep;
  uint32_t n = T.dim();

  rep.normalized = true;
  for (uint32_t v = 0; v < n; ++v) {
    Cyc left, right;
    for (const auto& [u, cu] : T.unit_element()) {
      left += cu * eval(F, u, v);
      right += cu * eval(F, v, u);
    }
    if (left != T.counit(v) || right != T.counit(v)) {
      rep.normalized = false;
      rep.witness = "normalization fails at " + T.label(v);
      break;
    }
  }

  TripleFunctional lhs =
      convolve(T, tensor_counit_right(T, F), precompose_mult_left(T, F));
  TripleFunctional rhs =
      convolve(T, tensor_counit_left(T, F), precompose_mult_right(T, F));
  rep.conditions = triple_func_eq(lhs, rhs);
  if (!rep.conditions && rep.witness.empty()) rep.witness = "twist identity fails";

  auto inv = convolution_inverse(T, F);
  rep.invertible = inv.has_value();
  if (inv) {
    rep.inverse = std::move(*inv);
  } else if (rep.witness.empty()) {
    rep.witness = "no convolution inverse";
  }
  return rep;
}

PairFunctional dual_comult_of(const HopfTables& T, const LinearFunctional& h) {
  PairFunctional out;
  uint32_t n = T.dim();
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = 0; v < n; ++v) {
      Cyc val;
      for (const auto& [k, c] : T.mult(u, v)) val += c * eval(h, k);
      if (!val.is_zero()) out.emplace(std::pair<uint32_t, uint32_t>{u, v}, val);
    }
  return out;
}

PairFunctional twisted_comult_of(const HopfTables& T, const PairFunctional& F,
                                 const PairFunctional& Finv, const LinearFunctional& h) {
  return convolve(T, F, convolve(T, dual_comult_of(T, h), Finv));
}

TwistedDualChecks verify_twisted_dual(const HopfTables& T, const PairFunctional& F,
                                      const PairFunctional& Finv) {
  TwistedDualChecks out;
  uint32_t n = T.dim();
  std::vector<PairFunctional> Df(n);
  for (uint32_t k = 0; k < n; ++k)
    Df[k] = twisted_comult_of(T, F, Finv, LinearFunctional{{k, Cyc(1)}});

  std::vector<Cyc> epsH(n);
  for (const auto& [k, c] : T.unit_element()) epsH[k] = c;

  out.counital = true;
  for (uint32_t k = 0; k < n && out.counital; ++k) {
    LinearFunctional left, right;
    for (const auto& [uv, c] : Df[k]) {
      func_add_term(left, uv.second, c * epsH[uv.first]);
      func_add_term(right, uv.first, c * epsH[uv.second]);
    }
    LinearFunctional self{{k, Cyc(1)}};
    if (!(left == self) || !(right == self)) {
      out.counital = false;
      out.witness = "twisted coproduct not counital at " + T.label(k);
    }
  }

  out.coassociative = true;
  for (uint32_t k = 0; k < n && out.coassociative; ++k) {
    TripleFunctional a, b;
    for (const auto& [uv, c] : Df[k]) {
      for (const auto& [pq, c2] : Df[uv.first])
        func_add_term(a, std::tuple<uint32_t, uint32_t, uint32_t>{pq.first, pq.second, uv.second},
                      c * c2);
      for (const auto& [pq, c2] : Df[uv.second])
        func_add_term(b, std::tuple<uint32_t, uint32_t, uint32_t>{uv.first, pq.first, pq.second},
                      c * c2);
    }
    if (!triple_func_eq(a, b)) {
      out.coassociative = false;
      out.witness = "twisted coproduct not coassociative at " + T.label(k);
    }
  }

  out.algebra_map = true;
  // the unit of the dual is eps_A
  {
    LinearFunctional one = counit_functional(T);
    PairFunctional img;
    for (const auto& [k, c] : one) func_add_scaled(img, Df[k], c);
    PairFunctional expect = tensor_functional(one, one);
    bool okay = true;
    for (const auto& [kk, c] : img)
      if (eval(expect, kk.first, kk.second) != c) okay = false;
    for (const auto& [kk, c] : expect)
      if (eval(img, kk.first, kk.second) != c) okay = false;
    if (!okay) {
      out.algebra_map = false;
      out.witness = "twisted coproduct does not fix the dual unit";
    }
  }
  for (uint32_t i = 0; i < n && out.algebra_map; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      LinearFunctional prod = convolve(T, LinearFunctional{{i, Cyc(1)}},
                                       LinearFunctional{{j, Cyc(1)}});
      PairFunctional lhs;
      for (const auto& [k, c] : prod) func_add_scaled(lhs, Df[k], c);
      PairFunctional rhs = convolve(T, Df[i], Df[j]);
      bool okay = true;
      for (const auto& [kk, c] : lhs)
        if (eval(rhs, kk.first, kk.second) != c) okay = false;
      for (const auto& [kk, c] : rhs)
        if (eval(lhs, kk.first, kk.second) != c) okay = false;
      if (!okay) {
        out.algebra_map = false;
        out.witness = "twisted coproduct not multiplicative at (" + T.label(i) + ", " +
                      T.label(j) + ")";
        break;
      }
    }
  return out;
}

LinearFunctional functional_power(const HopfTables& T, const LinearFunctional& f, uint32_t n) {
  LinearFunctional p = counit_functional(T);
  for (uint32_t k = 0; k < n; ++k) p = convolve(T, p, f);
  return p;
}

}  // namespace hopfforge
