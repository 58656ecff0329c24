#include "hopfforge/cocycles.hpp"

#include <algorithm>
#include <utility>

namespace hopfforge {

namespace {

// dense value matrix so triple sweeps evaluate pair functionals in O(1)
struct DensePair {
  uint32_t dim;
  std::vector<Cyc> v;
  DensePair(const HopfTables& T, const PairFunctional& f)
      : dim(T.dim()), v((size_t)T.dim() * T.dim()) {
    for (const auto& [k, c] : f) v[(size_t)k.first * dim + k.second] = c;
  }
  const Cyc& at(uint32_t i, uint32_t j) const { return v[(size_t)i * dim + j]; }
};

bool pair_func_eq(const PairFunctional& a, const PairFunctional& b) {
  for (const auto& [k, c] : a)
    if (eval(b, k.first, k.second) != c) return false;
  for (const auto& [k, c] : b)
    if (eval(a, k.first, k.second) != c) return false;
  return true;
}

std::string triple_label(const HopfTables& T, uint32_t a, uint32_t b, uint32_t c) {
  return "(" + T.label(a) + " | " + T.label(b) + " | " + T.label(c) + ")";
}

// descend the datum along G -> G/G0; characters must kill the kernel
PointedDatum quotient_datum_of(const PointedDatum& D, const GroupQuotient& Q) {
  const FiniteAbelianGroup& G = D.group;
  uint32_t L = D.conductor;
  for (uint32_t i = 0; i < D.theta; ++i)
    for (const GroupElement& h : Q.kernel)
      if (character_pairing_exponent(G, D.chi[i], h, L) % L != 0)
        throw input_error("character " + std::to_string(i + 1) +
                          " does not descend to the quotient");

  PointedDatum out;
  out.group = Q.quotient;
  out.conductor = L;
  out.theta = D.theta;
  out.mu.assign(D.theta, Cyc());
  size_t r = Q.quotient.rank();
  for (uint32_t i = 0; i < D.theta; ++i) {
    Character ci;
    ci.c.resize(r);
    for (size_t j = 0; j < r; ++j) {
      GroupElement ej(r, 0);
      ej[j] = 1;
      const GroupElement& w = Q.canonical_lift(ej);
      uint64_t k = character_pairing_exponent(G, D.chi[i], w, L);
      uint32_t mj = Q.quotient.factors()[j];
      uint64_t step = L / mj;  // mj divides exponent(G) divides L
      if (k % step != 0) throw std::logic_error("quotient character not well defined");
      ci.c[j] = (uint32_t)((k / step) % mj);
    }
    out.chi.push_back(std::move(ci));
    out.g.push_back(Q.project(D.g[i]));
  }
  out.refresh_orders();

  for (uint32_t i = 0; i < D.theta; ++i)
    for (uint64_t gi = 0; gi < G.order(); ++gi) {
      GroupElement g = G.element_at(gi);
      if (character_pairing(out.group, out.chi[i], Q.project(g), L) !=
          character_pairing(G, D.chi[i], g, L))
        throw std::logic_error("quotient character disagrees with the original");
    }
  return out;
}

// (f * h)(c) = sum f(c_1) h(c_2), coproduct from S, products in the target
AlgebraMap map_convolve(const HopfTables& S, const HopfTables& target, const AlgebraMap& f,
                        const AlgebraMap& h) {
  AlgebraMap out(S.dim());
  for (uint32_t c = 0; c < S.dim(); ++c) {
    AlgebraElement acc;
    for (const auto& [pp, cc] : S.comult(c)) {
      if (f[pp.first].empty() || h[pp.second].empty()) continue;
      elem_add_scaled(acc, target.elem_mult(f[pp.first], h[pp.second]), cc);
    }
    out[c] = std::move(acc);
  }
  return out;
}

bool map_is_unit_eps(const HopfTables& S, const HopfTables& target, const AlgebraMap& m) {
  for (uint32_t c = 0; c < S.dim(); ++c) {
    AlgebraElement expect;
    elem_add_scaled(expect, target.unit_element(), S.counit(c));
    if (!elem_eq(m[c], expect)) return false;
  }
  return true;
}

// inverse of a single-term element scalar * (group-like); nullopt otherwise
std::optional<AlgebraElement> grouplike_inverse(const PbwHopfAlgebra& B,
                                                const AlgebraElement& u) {
  if (u.size() != 1) return std::nullopt;
  const auto& [idx, c] = *u.begin();
  const PbwMonomial& m = B.monomial(idx);
  if (m.degree() != 0 || c.is_zero()) return std::nullopt;
  const FiniteAbelianGroup& G = B.datum().group;
  return AlgebraElement{{B.group_index(G.neg(m.g)), c.inverse()}};
}

}  // namespace

LinearFunctional d_functional(const PbwHopfAlgebra& A, uint32_t i) {
  if (i >= A.datum().theta) throw input_error("derivation index out of range");
  LinearFunctional f;
  std::vector<uint32_t> a(A.datum().theta, 0);
  a[i] = 1;
  const FiniteAbelianGroup& G = A.datum().group;
  for (uint64_t gi = 0; gi < G.order(); ++gi)
    f.emplace(A.index_of(a, G.element_at(gi)), Cyc(1));
  return f;
}

LinearFunctional extended_character(const PbwHopfAlgebra& A, uint32_t i) {
  if (i >= A.datum().theta) throw input_error("character index out of range");
  LinearFunctional f;
  const FiniteAbelianGroup& G = A.datum().group;
  for (uint64_t gi = 0; gi < G.order(); ++gi) {
    GroupElement g = G.element_at(gi);
    f.emplace(A.group_index(g), A.chi_value(i, g));
  }
  return f;
}

bool verify_skew_derivation(const HopfTables& T, const LinearFunctional& d,
                            const LinearFunctional& chi_ext) {
  uint32_t n = T.dim();
  std::vector<Cyc> dv(n), cv(n);
  for (const auto& [k, c] : d) dv[k] = c;
  for (const auto& [k, c] : chi_ext) cv[k] = c;
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = 0; v < n; ++v) {
      Cyc lhs;
      for (const auto& [k, ck] : T.mult(u, v))
        if (!dv[k].is_zero()) lhs += ck * dv[k];
      Cyc rhs = dv[u] * T.counit(v) + cv[u] * dv[v];
      if (lhs != rhs) return false;
    }
  return true;
}

PairFunctional zeta_cocycle(const PbwHopfAlgebra& A, uint32_t i) {
  const PointedDatum& D = A.datum();
  if (i >= D.theta) throw input_error("zeta index out of range");
  uint32_t N = D.N[i];
  const FiniteAbelianGroup& G = D.group;
  uint32_t L = D.conductor;
  PairFunctional f;
  std::vector<uint32_t> a(D.theta, 0), b(D.theta, 0);
  for (uint32_t ai = 1; ai < N; ++ai) {
    a[i] = ai;
    b[i] = N - ai;
    for (uint64_t gi = 0; gi < G.order(); ++gi) {
      GroupElement g = G.element_at(gi);
      uint32_t lead = A.index_of(a, g);
      Cyc val = Cyc::root_power(L, (long long)A.chi_exponent(i, g) * (N - ai));
      for (uint64_t hi = 0; hi < G.order(); ++hi)
        f.emplace(std::pair<uint32_t, uint32_t>{lead, A.index_of(b, G.element_at(hi))}, val);
    }
  }
  return f;
}

PairFunctional eta_functional(const PbwHopfAlgebra& A, const HopfTables& T, uint32_t j,
                              uint32_t i) {
  const PointedDatum& D = A.datum();
  if (j >= D.theta || i >= j) throw input_error("eta wants i < j < theta");
  if (!D.linkable(i, j)) throw input_error("eta: pair is not linkable");
  LinearFunctional di = d_functional(A, i);
  LinearFunctional dj = d_functional(A, j);
  LinearFunctional chi_i = extended_character(A, i);
  LinearFunctional chi_j = extended_character(A, j);
  if (!verify_skew_derivation(T, di, chi_i) || !verify_skew_derivation(T, dj, chi_j))
    throw input_error("eta: skew-derivation law failed");
  return tensor_functional(convolve(T, dj, chi_i), di);
}

HochschildReport is_hochschild_2cocycle(const HopfTables& T, const PairFunctional& f) {
  HochschildReport rep;
  uint32_t n = T.dim();
  DensePair F(T, f);
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      for (uint32_t c = 0; c < n; ++c) {
        Cyc lhs = T.counit(a) * F.at(b, c);
        for (const auto& [k, ck] : T.mult(b, c)) {
          const Cyc& s = F.at(a, k);
          if (!s.is_zero()) lhs += ck * s;
        }
        Cyc rhs = F.at(a, b) * T.counit(c);
        for (const auto& [k, ck] : T.mult(a, b)) {
          const Cyc& s = F.at(k, c);
          if (!s.is_zero()) rhs += ck * s;
        }
        if (lhs != rhs) {
          rep.witness = triple_label(T, a, b, c);
          return rep;
        }
      }
  rep.ok = true;
  return rep;
}

MultiplicativeReport is_multiplicative_cocycle(const HopfTables& T, const PairFunctional& sigma) {
  MultiplicativeReport rep;
  uint32_t n = T.dim();
  DensePair S(T, sigma);
  const AlgebraElement& one = T.unit_element();

  rep.normalized = true;
  for (uint32_t v = 0; v < n; ++v) {
    Cyc left, right;
    for (const auto& [u, cu] : one) {
      left += cu * S.at(u, v);
      right += cu * S.at(v, u);
    }
    if (left != T.counit(v) || right != T.counit(v)) {
      rep.normalized = false;
      rep.witness = "normalization fails at " + T.label(v);
      break;
    }
  }

  rep.cocycle_identity = true;
  for (uint32_t u = 0; u < n && rep.cocycle_identity; ++u)
    for (uint32_t v = 0; v < n && rep.cocycle_identity; ++v)
      for (uint32_t w = 0; w < n; ++w) {
        Cyc lhs;
        for (const auto& [vp, cv] : T.comult(v))
          for (const auto& [wp, cw] : T.comult(w)) {
            const Cyc& s1 = S.at(vp.first, wp.first);
            if (s1.is_zero()) continue;
            Cyc inner;
            for (const auto& [k, ck] : T.mult(vp.second, wp.second)) {
              const Cyc& s2 = S.at(u, k);
              if (!s2.is_zero()) inner += ck * s2;
            }
            if (!inner.is_zero()) lhs += cv * cw * s1 * inner;
          }
        Cyc rhs;
        for (const auto& [up, cu] : T.comult(u))
          for (const auto& [vp, cv] : T.comult(v)) {
            const Cyc& s1 = S.at(up.first, vp.first);
            if (s1.is_zero()) continue;
            Cyc inner;
            for (const auto& [k, ck] : T.mult(up.second, vp.second)) {
              const Cyc& s2 = S.at(k, w);
              if (!s2.is_zero()) inner += ck * s2;
            }
            if (!inner.is_zero()) rhs += cu * cv * s1 * inner;
          }
        if (lhs != rhs) {
          rep.cocycle_identity = false;
          if (rep.witness.empty()) rep.witness = "identity fails at " + triple_label(T, u, v, w);
          break;
        }
      }

  auto inv = convolution_inverse(T, sigma);
  rep.invertible = inv.has_value();
  if (inv) {
    rep.inverse = std::move(*inv);
  } else if (rep.witness.empty()) {
    rep.witness = "no convolution inverse";
  }
  return rep;
}

GradedDecomposition graded_parts(const HopfTables& T, const PairFunctional& sigma) {
  GradedDecomposition out;
  for (const auto& [k, c] : sigma)
    out.layers[T.degree(k.first) + T.degree(k.second)].emplace(k, c);

  PairFunctional eps2 = pair_counit(T);
  auto it0 = out.layers.find(0);
  static const PairFunctional kEmpty;
  const PairFunctional& s0 = (it0 == out.layers.end()) ? kEmpty : it0->second;
  out.unital_degree_zero = pair_func_eq(s0, eps2);
  if (!out.unital_degree_zero) out.witness = "degree-0 part differs from eps (x) eps";

  for (const auto& [deg, layer] : out.layers)
    if (deg > 0 && !layer.empty()) {
      out.s = deg;
      out.infinitesimal = layer;
      break;
    }
  if (out.s != 0) {
    HochschildReport h = is_hochschild_2cocycle(T, out.infinitesimal);
    out.infinitesimal_hochschild = h.ok;
    if (!h.ok && out.witness.empty())
      out.witness = "infinitesimal part fails Hochschild at " + h.witness;
  }
  return out;
}

PairFunctional mu_exponential_cocycle(const PbwHopfAlgebra& A, const HopfTables& T,
                                      const PointedDatum& params) {
  if (!A.is_graded()) throw input_error("mu exponential wants the graded algebra");
  PairFunctional f;
  for (uint32_t i = 0; i < params.theta && i < params.mu.size(); ++i)
    if (!params.mu[i].is_zero()) func_add_scaled(f, zeta_cocycle(A, i), params.mu[i]);
  if (f.empty()) return pair_counit(T);
  return exp_functional(T, f, max_pair_degree(T) + 1);
}

LinkingData linking_cocycle(const PbwHopfAlgebra& A, const HopfTables& T,
                            const PointedDatum& params) {
  if (!A.is_graded()) throw input_error("linking cocycle wants the graded algebra");
  PointedDatum P = params;
  P.refresh_orders();
  if (P.mu.size() < P.theta) P.mu.resize(P.theta, Cyc());
  const FiniteAbelianGroup& G = P.group;

  LinkingData out;
  std::vector<GroupElement> gens;
  for (uint32_t b = 0; b < P.theta; ++b)
    if (P.mu_admissible(b)) gens.push_back(G.mul_int(P.g[b], P.N[b]));
  out.Q = quotient_by(G, gens);
  out.quotient_datum = quotient_datum_of(P.zeroed(), out.Q);
  out.C = std::make_unique<PbwHopfAlgebra>(out.quotient_datum, A.dim());
  out.TC = std::make_unique<HopfTables>(tables_from(*out.C));
  out.sigma_on_C = pair_counit(*out.TC);

  // Each linked pair contributes exp_q(lambda eta).  The factor lives on C
  // when the pair stays linkable there; when the quotient swallows g_i g_j
  // the q-exponential theorem still applies to A itself, so the factor is
  // built there instead (the two agree whenever both exist, since the etas
  // only see chi values that are constant on G0 cosets).
  std::vector<PairFunctional> on_A;
  std::vector<PairFunctional> on_C;
  for (const auto& [key, lam] : P.lambda) {
    if (lam.is_zero()) continue;
    uint32_t i = key.first, j = key.second;
    Cyc qij = P.q(j, i);  // chi_i(g_j)
    auto ord = qij.multiplicative_order();
    if (!ord || *ord < 2) throw input_error("linked pair with interaction order < 2");
    if (out.quotient_datum.linkable(i, j)) {
      PairFunctional f = exp_q_functional(
          *out.TC, func_scaled(eta_functional(*out.C, *out.TC, j, i), lam), qij);
      on_C.push_back(f);
      on_A.push_back(pullback_pair(A, *out.C, out.Q, f));
    } else {
      on_A.push_back(
          exp_q_functional(T, func_scaled(eta_functional(A, T, j, i), lam), qij));
    }
  }

  if (on_A.size() >= 2) {
    for (size_t a = 0; a < on_A.size() && out.disjoint_factors_commute; ++a)
      for (size_t b = a + 1; b < on_A.size(); ++b)
        if (!pair_func_eq(convolve(T, on_A[a], on_A[b]), convolve(T, on_A[b], on_A[a]))) {
          out.disjoint_factors_commute = false;
          break;
        }
  }

  for (const PairFunctional& f : on_C) out.sigma_on_C = convolve(*out.TC, out.sigma_on_C, f);
  if (on_A.empty()) {
    out.sigma = pair_counit(T);
  } else {
    out.sigma = on_A.front();
    for (size_t k = 1; k < on_A.size(); ++k) out.sigma = convolve(T, out.sigma, on_A[k]);
  }
  return out;
}

PairFunctional pullback_pair(const PbwHopfAlgebra& A, const PbwHopfAlgebra& C,
                             const GroupQuotient& Q, const PairFunctional& f) {
  std::vector<std::vector<uint32_t>> pre(C.dim());
  for (uint32_t c = 0; c < C.dim(); ++c) {
    const PbwMonomial& m = C.monomial(c);
    for (const GroupElement& g : Q.cosets[Q.quotient.index_of(m.g)])
      pre[c].push_back(A.index_of(m.a, g));
  }
  PairFunctional out;
  for (const auto& [key, val] : f)
    for (uint32_t u : pre[key.first])
      for (uint32_t v : pre[key.second]) out.emplace(std::pair<uint32_t, uint32_t>{u, v}, val);
  return out;
}

PairFunctional assemble_sigma(const PbwHopfAlgebra& A, const HopfTables& T,
                              const PointedDatum& params) {
  LinkingData link = linking_cocycle(A, T, params);
  return convolve(T, link.sigma, mu_exponential_cocycle(A, T, params));
}

SingerData singer_cocycle(const PointedDatum& datum_in, const Character& phi, uint64_t dim_cap) {
  SingerData out;
  PointedDatum D = datum_in;
  D.refresh_orders();
  if (D.mu.size() < D.theta) D.mu.resize(D.theta, Cyc());
  const FiniteAbelianGroup& G = D.group;
  uint32_t L = D.conductor;
  if (phi.c.size() != G.rank()) throw input_error("singer: character rank mismatch");

  std::vector<GroupElement> gens;
  for (uint32_t i = 0; i < D.theta; ++i)
    if (!D.mu[i].is_zero()) gens.push_back(G.mul_int(D.g[i], D.N[i]));
  if (gens.empty()) throw input_error("singer: every mu_i is zero");
  out.Q = quotient_by(G, gens);
  if (out.Q.kernel.size() <= 1) throw input_error("singer: the subgroup G0 is trivial");

  PointedDatum Bd = D;
  Bd.lambda.clear();
  out.B = std::make_unique<PbwHopfAlgebra>(Bd, dim_cap);
  out.TB = std::make_unique<HopfTables>(tables_from(*out.B));
  out.quotient_datum = quotient_datum_of(D.zeroed(), out.Q);
  out.C = std::make_unique<PbwHopfAlgebra>(out.quotient_datum, dim_cap);
  out.TC = std::make_unique<HopfTables>(tables_from(*out.C));
  out.A0 = std::make_unique<PbwHopfAlgebra>(D.zeroed(), dim_cap);

  const PbwHopfAlgebra& B = *out.B;
  const PbwHopfAlgebra& C = *out.C;
  const HopfTables& TB = *out.TB;
  const HopfTables& TC = *out.TC;

  // xi projects onto kG0 along the B-module structure: with g = h t for the
  // canonical coset representative t, x^a g goes to [a = 0] h
  out.xi.assign(B.dim(), {});
  for (uint32_t u = 0; u < B.dim(); ++u) {
    const PbwMonomial& m = B.monomial(u);
    if (m.degree() != 0) continue;
    const GroupElement& t = out.Q.canonical_lift(out.Q.project(m.g));
    out.xi[u] = {{B.group_index(G.add(m.g, G.neg(t))), Cyc(1)}};
  }

  // convolution inverse of xi in Hom(B, B), solved to a fixpoint: the leading
  // coefficient of each equation is a group-like and inverts on the left
  out.xi_inv.assign(B.dim(), {});
  {
    std::vector<bool> known(B.dim(), false);
    bool progress = true;
    uint32_t remaining = B.dim();
    while (progress && remaining > 0) {
      progress = false;
      for (uint32_t u = 0; u < B.dim(); ++u) {
        if (known[u]) continue;
        AlgebraElement lead, rest;
        bool blocked = false;
        for (const auto& [pp, cc] : TB.comult(u)) {
          if (pp.second == u) {
            elem_add_scaled(lead, out.xi[pp.first], cc);
          } else {
            if (!known[pp.second]) {
              blocked = true;
              break;
            }
            if (out.xi[pp.first].empty() || out.xi_inv[pp.second].empty()) continue;
            elem_add_scaled(rest, TB.elem_mult(out.xi[pp.first], out.xi_inv[pp.second]), cc);
          }
        }
        if (blocked) continue;
        auto linv = grouplike_inverse(B, lead);
        if (!linv) {
          out.witness = "xi has no convolution inverse: lead at " + TB.label(u);
          return out;
        }
        AlgebraElement rhs;
        elem_add_scaled(rhs, B.unit_element(), TB.counit(u));
        elem_add_scaled(rhs, rest, Cyc(-1));
        out.xi_inv[u] = TB.elem_mult(*linv, rhs);
        known[u] = true;
        --remaining;
        progress = true;
      }
    }
    if (remaining > 0) {
      out.witness = "xi inverse recursion stalled";
      return out;
    }
  }
  out.xi_inverse_verified = map_is_unit_eps(TB, TB, map_convolve(TB, TB, out.xi, out.xi_inv)) &&
                            map_is_unit_eps(TB, TB, map_convolve(TB, TB, out.xi_inv, out.xi));
  if (!out.xi_inverse_verified) {
    out.witness = "xi inverse failed verification";
    return out;
  }

  // chi(c) = sum xi^{-1}(b_1) b_2 over a preimage b of c; well-definedness
  // across the whole coset is checked, not assumed
  auto chi_from_preimage = [&](uint32_t b) {
    AlgebraElement val;
    for (const auto& [pp, cc] : TB.comult(b)) {
      if (out.xi_inv[pp.first].empty()) continue;
      elem_add_scaled(val,
                      TB.elem_mult(out.xi_inv[pp.first], AlgebraElement{{pp.second, Cyc(1)}}),
                      cc);
    }
    return val;
  };

  out.chi.assign(C.dim(), {});
  out.representative_independent = true;
  for (uint32_t c = 0; c < C.dim(); ++c) {
    const PbwMonomial& m = C.monomial(c);
    const auto& coset = out.Q.cosets[out.Q.quotient.index_of(m.g)];
    out.chi[c] = chi_from_preimage(B.index_of(m.a, coset[0]));
    for (size_t k = 1; k < coset.size(); ++k) {
      if (!elem_eq(out.chi[c], chi_from_preimage(B.index_of(m.a, coset[k])))) {
        out.representative_independent = false;
        out.witness = "chi depends on the representative at " + TC.label(c);
        return out;
      }
    }
  }

  // chi^{-1} in Hom(C, B) by the same fixpoint scheme
  out.chi_inv.assign(C.dim(), {});
  {
    std::vector<bool> known(C.dim(), false);
    bool progress = true;
    uint32_t remaining = C.dim();
    while (progress && remaining > 0) {
      progress = false;
      for (uint32_t c = 0; c < C.dim(); ++c) {
        if (known[c]) continue;
        AlgebraElement lead, rest;
        bool blocked = false;
        for (const auto& [pp, cc] : TC.comult(c)) {
          if (pp.second == c) {
            elem_add_scaled(lead, out.chi[pp.first], cc);
          } else {
            if (!known[pp.second]) {
              blocked = true;
              break;
            }
            if (out.chi[pp.first].empty() || out.chi_inv[pp.second].empty()) continue;
            elem_add_scaled(rest, TB.elem_mult(out.chi[pp.first], out.chi_inv[pp.second]), cc);
          }
        }
        if (blocked) continue;
        auto linv = grouplike_inverse(B, lead);
        if (!linv) {
          out.witness = "chi has no convolution inverse: lead at " + TC.label(c);
          return out;
        }
        AlgebraElement rhs;
        elem_add_scaled(rhs, B.unit_element(), TC.counit(c));
        elem_add_scaled(rhs, rest, Cyc(-1));
        out.chi_inv[c] = TB.elem_mult(*linv, rhs);
        known[c] = true;
        --remaining;
        progress = true;
      }
    }
    if (remaining > 0) {
      out.witness = "chi inverse recursion stalled";
      return out;
    }
  }
  out.chi_inverse_verified = map_is_unit_eps(TC, TB, map_convolve(TC, TB, out.chi, out.chi_inv)) &&
                             map_is_unit_eps(TC, TB, map_convolve(TC, TB, out.chi_inv, out.chi));
  if (!out.chi_inverse_verified) {
    out.witness = "chi inverse failed verification";
    return out;
  }

  // a(x, y) = sum chi(x_1) chi(y_1) chi^{-1}(x_2 y_2), expected in kG0
  out.a.assign((size_t)C.dim() * C.dim(), {});
  out.a_values_in_group_part = true;
  for (uint32_t x = 0; x < C.dim(); ++x)
    for (uint32_t y = 0; y < C.dim(); ++y) {
      AlgebraElement acc;
      for (const auto& [xp, cx] : TC.comult(x)) {
        if (out.chi[xp.first].empty()) continue;
        for (const auto& [yp, cy] : TC.comult(y)) {
          if (out.chi[yp.first].empty()) continue;
          AlgebraElement head = TB.elem_mult(out.chi[xp.first], out.chi[yp.first]);
          if (head.empty()) continue;
          for (const auto& [k, ck] : TC.mult(xp.second, yp.second)) {
            if (out.chi_inv[k].empty()) continue;
            elem_add_scaled(acc, TB.elem_mult(head, out.chi_inv[k]), cx * cy * ck);
          }
        }
      }
      for (const auto& [idx, coeff] : acc) {
        const PbwMonomial& m = B.monomial(idx);
        (void)coeff;
        if (m.degree() != 0 || !out.Q.quotient.is_identity(out.Q.project(m.g))) {
          out.a_values_in_group_part = false;
          out.witness = "a(" + TC.label(x) + ", " + TC.label(y) + ") leaves kG0";
          return out;
        }
      }
      out.a[(size_t)x * C.dim() + y] = std::move(acc);
    }

  // sigma' = phi o a, with phi restricted from the ambient group
  for (uint32_t x = 0; x < C.dim(); ++x)
    for (uint32_t y = 0; y < C.dim(); ++y) {
      Cyc val;
      for (const auto& [idx, coeff] : out.a[(size_t)x * C.dim() + y])
        val += coeff * character_pairing(G, phi, B.monomial(idx).g, L);
      if (!val.is_zero()) out.sigma_prime.emplace(std::pair<uint32_t, uint32_t>{x, y}, val);
    }

  out.sigma_prime_check = is_multiplicative_cocycle(TC, out.sigma_prime);
  if (!out.sigma_prime_check.ok() && out.witness.empty())
    out.witness = "sigma' is not multiplicative: " + out.sigma_prime_check.witness;

  out.sigma_lift = pullback_pair(*out.A0, C, out.Q, out.sigma_prime);
  out.ok = out.xi_inverse_verified && out.representative_independent &&
           out.chi_inverse_verified && out.a_values_in_group_part &&
           out.sigma_prime_check.ok();
  return out;
}

Character pick_singer_character(const PointedDatum& datum_in) {
  PointedDatum D = datum_in;
  D.refresh_orders();
  if (D.mu.size() < D.theta) D.mu.resize(D.theta, Cyc());
  const FiniteAbelianGroup& G = D.group;
  uint32_t L = D.conductor;
  std::vector<GroupElement> gens;
  for (uint32_t i = 0; i < D.theta; ++i)
    if (!D.mu[i].is_zero()) gens.push_back(G.mul_int(D.g[i], D.N[i]));

  if (!gens.empty()) {
    for (uint64_t ci = 0; ci < G.order(); ++ci) {
      Character ph{G.element_at(ci)};
      bool good = true;
      for (const GroupElement& w : gens)
        if (character_pairing_exponent(G, ph, w, L) % L == 0) {
          good = false;
          break;
        }
      if (good) return ph;
    }
    GroupQuotient Q = quotient_by(G, gens);
    for (uint64_t ci = 0; ci < G.order(); ++ci) {
      Character ph{G.element_at(ci)};
      for (const GroupElement& h : Q.kernel)
        if (character_pairing_exponent(G, ph, h, L) % L != 0) return ph;
    }
  }
  return Character{GroupElement(G.rank(), 0)};
}

}  // namespace hopfforge
