#include "hopfforge/deform.hpp"

namespace hopfforge {

namespace {

struct DensePair {
  uint32_t dim;
  std::vector<Cyc> v;
  DensePair(const HopfTables& T, const PairFunctional& f)
      : dim(T.dim()), v((size_t)T.dim() * T.dim()) {
    for (const auto& [k, c] : f) v[(size_t)k.first * dim + k.second] = c;
  }
  const Cyc& at(uint32_t i, uint32_t j) const { return v[(size_t)i * dim + j]; }
};

// right inverse of a degree-0 basis element under the tables' product, found
// by search; group-likes of a deformation multiply exactly as in the original
std::optional<uint32_t> find_right_inverse(const HopfTables& T, uint32_t w) {
  for (uint32_t c = 0; c < T.dim(); ++c) {
    if (T.degree(c) != 0) continue;
    const AlgebraElement& p = T.mult(w, c);
    if (elem_eq(p, T.unit_element())) return c;
  }
  return std::nullopt;
}

}  // namespace

DeformationResult deform_by_cocycle(const HopfTables& T, const PairFunctional& sigma,
                                    const PairFunctional& sigma_inv) {
  DeformationResult out;
  out.sigma = sigma;
  out.sigma_inv = sigma_inv;
  uint32_t n = T.dim();
  DensePair S(T, sigma), Si(T, sigma_inv);

  out.tables = T;

  // stage one: h = m * sigma^{-1}
  std::vector<AlgebraElement> h((size_t)n * n);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = 0; v < n; ++v) {
      AlgebraElement acc;
      for (const auto& [up, cu] : T.comult(u))
        for (const auto& [vp, cv] : T.comult(v)) {
          const Cyc& s = Si.at(up.second, vp.second);
          if (s.is_zero()) continue;
          elem_add_scaled(acc, T.mult(up.first, vp.first), cu * cv * s);
        }
      h[(size_t)u * n + v] = std::move(acc);
    }

  // stage two: m_sigma = sigma * h
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = 0; v < n; ++v) {
      AlgebraElement acc;
      for (const auto& [up, cu] : T.comult(u))
        for (const auto& [vp, cv] : T.comult(v)) {
          const Cyc& s = S.at(up.first, vp.first);
          if (s.is_zero()) continue;
          elem_add_scaled(acc, h[(size_t)up.second * n + vp.second], cu * cv * s);
        }
      out.tables.mult_[(size_t)u * n + v] = std::move(acc);
    }

  // antipode from its left identity, solved to a fixpoint; the lead factor of
  // each equation is a degree-0 basis element, inverted by search
  std::vector<AlgebraElement> sp(n);
  {
    std::vector<bool> known(n, false);
    uint32_t remaining = n;
    bool progress = true;
    while (progress && remaining > 0) {
      progress = false;
      for (uint32_t x = 0; x < n; ++x) {
        if (known[x]) continue;
        AlgebraElement lead, rest;
        bool blocked = false;
        for (const auto& [pp, cc] : T.comult(x)) {
          if (pp.first == x) {
            elem_add_term(lead, pp.second, cc);
          } else {
            if (!known[pp.first]) {
              blocked = true;
              break;
            }
            if (sp[pp.first].empty()) continue;
            elem_add_scaled(rest, out.tables.elem_mult(sp[pp.first], {{pp.second, Cyc(1)}}), cc);
          }
        }
        if (blocked) continue;
        if (lead.size() != 1 || T.degree(lead.begin()->first) != 0) {
          out.witness = "antipode solver: lead not invertible at " + T.label(x);
          return out;
        }
        auto winv = find_right_inverse(out.tables, lead.begin()->first);
        if (!winv) {
          out.witness = "antipode solver: no inverse group-like at " + T.label(x);
          return out;
        }
        AlgebraElement rhs;
        elem_add_scaled(rhs, T.unit_element(), T.counit(x));
        elem_add_scaled(rhs, rest, Cyc(-1));
        sp[x] = out.tables.elem_mult(rhs, {{*winv, lead.begin()->second.inverse()}});
        known[x] = true;
        --remaining;
        progress = true;
      }
    }
    if (remaining > 0) {
      out.witness = "antipode solver stalled";
      return out;
    }
  }
  out.antipode_solved = true;
  out.tables.antipode_ = sp;

  // the convolution route: U(x) = sigma(x_1, S(x_2)), U^{-1}(x) =
  // sigma^{-1}(S(x_1), x_2), candidate = U(x_1) S(x_2) U^{-1}(x_3)
  {
    std::vector<Cyc> U(n), Ui(n);
    for (uint32_t x = 0; x < n; ++x)
      for (const auto& [pp, cc] : T.comult(x)) {
        for (const auto& [k, ck] : T.antipode(pp.second)) {
          const Cyc& s = S.at(pp.first, k);
          if (!s.is_zero()) U[x] += cc * ck * s;
        }
        for (const auto& [k, ck] : T.antipode(pp.first)) {
          const Cyc& s = Si.at(k, pp.second);
          if (!s.is_zero()) Ui[x] += cc * ck * s;
        }
      }
    out.u_route_agrees = true;
    for (uint32_t x = 0; x < n && out.u_route_agrees; ++x) {
      AlgebraElement cand;
      for (const auto& [pp, c1] : T.comult(x))
        for (const auto& [qq, c2] : T.comult(pp.second)) {
          Cyc scale = c1 * c2 * U[pp.first] * Ui[qq.second];
          if (scale.is_zero()) continue;
          elem_add_scaled(cand, T.antipode(qq.first), scale);
        }
      if (!elem_eq(cand, sp[x])) out.u_route_agrees = false;
    }
    out.antipode_route = out.u_route_agrees ? "convolution" : "solver";
  }

  out.axioms = verify_hopf_axioms(out.tables);
  if (!out.axioms.all() && out.witness.empty()) out.witness = out.axioms.witness;
  return out;
}

AlgebraElement table_power(const HopfTables& T, uint32_t idx, uint32_t n) {
  AlgebraElement p = T.unit_element();
  for (uint32_t k = 0; k < n; ++k) p = T.elem_mult(p, {{idx, Cyc(1)}});
  return p;
}

LiftingMatch match_lifting(const HopfTables& deformed, const PbwHopfAlgebra& A0,
                           const PointedDatum& params) {
  LiftingMatch out;
  const PointedDatum& D = A0.datum();  // carries refreshed N
  const FiniteAbelianGroup& G = D.group;
  uint64_t expected = G.order();
  for (uint32_t i = 0; i < D.theta; ++i) expected *= D.N[i];
  out.dimension_ok = (deformed.dim() == expected);
  if (!out.dimension_ok) out.witness = "dimension differs from |G| prod N_i";

  auto add = [&](std::string name, const AlgebraElement& residual) {
    bool zero = residual.empty();
    if (!zero && out.witness.empty()) out.witness = "nonzero residual in " + name;
    out.relations.push_back({std::move(name), zero});
  };

  for (uint32_t i = 0; i < D.theta; ++i) {
    uint32_t xi = A0.generator_index(i);
    AlgebraElement res;
    for (uint64_t gi = 0; gi < G.order(); ++gi) {
      GroupElement g = G.element_at(gi);
      uint32_t gidx = A0.group_index(g);
      AlgebraElement r = deformed.mult(gidx, xi);
      elem_add_scaled(r, deformed.mult(xi, gidx), -A0.chi_value(i, g));
      elem_add_scaled(res, r, Cyc(1));
      if (!r.empty()) break;
    }
    add("group_action_x" + std::to_string(i + 1), res);
  }

  for (uint32_t i = 0; i < D.theta; ++i)
    for (uint32_t j = i + 1; j < D.theta; ++j) {
      uint32_t xi = A0.generator_index(i), xj = A0.generator_index(j);
      AlgebraElement res = deformed.mult(xj, xi);
      elem_add_scaled(res, deformed.mult(xi, xj), -D.q(j, i));
      Cyc lam = params.lambda_at(i, j);
      if (!lam.is_zero()) {
        elem_add_term(res, A0.unit_index(), -lam);
        GroupElement gg = G.add(D.g[i], D.g[j]);
        elem_add_term(res, A0.group_index(gg), lam);
      }
      add("qcommutator_x" + std::to_string(i + 1) + "_x" + std::to_string(j + 1), res);
    }

  for (uint32_t i = 0; i < D.theta; ++i) {
    AlgebraElement res = table_power(deformed, A0.generator_index(i), D.N[i]);
    Cyc mu = (i < params.mu.size()) ? params.mu[i] : Cyc();
    if (!mu.is_zero()) {
      elem_add_term(res, A0.unit_index(), -mu);
      GroupElement gN = G.mul_int(D.g[i], D.N[i]);
      elem_add_term(res, A0.group_index(gN), mu);
    }
    add("root_x" + std::to_string(i + 1), res);
  }
  return out;
}

std::optional<Cyc> radical_scalar(const HopfTables& deformed, const PbwHopfAlgebra& A0,
                                  const PointedDatum& params, uint32_t i) {
  (void)params;
  const PointedDatum& D = A0.datum();
  const FiniteAbelianGroup& G = D.group;
  AlgebraElement p = table_power(deformed, A0.generator_index(i), D.N[i]);
  if (p.empty()) return Cyc();
  GroupElement gN = G.mul_int(D.g[i], D.N[i]);
  if (G.is_identity(gN)) return std::nullopt;
  uint32_t one = A0.unit_index(), rad = A0.group_index(gN);
  if (p.size() != 2 || p.find(one) == p.end() || p.find(rad) == p.end()) return std::nullopt;
  Cyc c = p.at(one);
  if (!(p.at(rad) + c).is_zero()) return std::nullopt;
  return c;
}

FormalComponents formal_deformation_components(const HopfTables& T, const PairFunctional& sigma,
                                               const HopfTables& deformed) {
  FormalComponents out;
  uint32_t n = T.dim();
  GradedDecomposition gd = graded_parts(T, sigma);
  out.s = gd.s;

  out.m0_is_original = true;
  for (uint32_t u = 0; u < n && out.m0_is_original; ++u)
    for (uint32_t v = 0; v < n; ++v) {
      uint32_t d = T.degree(u) + T.degree(v);
      AlgebraElement m0;
      for (const auto& [k, c] : deformed.mult(u, v))
        if (T.degree(k) == d) elem_add_term(m0, k, c);
      if (!elem_eq(m0, T.mult(u, v))) {
        out.m0_is_original = false;
        out.witness = "degree-preserving part differs at (" + T.label(u) + ", " + T.label(v) + ")";
        break;
      }
    }

  if (out.s == 0) {
    out.bracket_identity = true;
    out.sigma_s_commutes = true;
    if (out.witness.empty()) out.witness = "sigma has no positive-degree part";
    return out;
  }

  DensePair Ss(T, gd.infinitesimal);
  out.bracket_identity = true;
  out.sigma_s_commutes = true;
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = 0; v < n; ++v) {
      uint32_t d = T.degree(u) + T.degree(v);
      AlgebraElement ms;
      for (const auto& [k, c] : deformed.mult(u, v))
        if (T.degree(k) + out.s == d) elem_add_term(ms, k, c);

      AlgebraElement left, right;
      for (const auto& [up, cu] : T.comult(u))
        for (const auto& [vp, cv] : T.comult(v)) {
          const Cyc& sl = Ss.at(up.first, vp.first);
          if (!sl.is_zero()) elem_add_scaled(left, T.mult(up.second, vp.second), cu * cv * sl);
          const Cyc& sr = Ss.at(up.second, vp.second);
          if (!sr.is_zero()) elem_add_scaled(right, T.mult(up.first, vp.first), cu * cv * sr);
        }
      if (!elem_eq(left, right)) out.sigma_s_commutes = false;
      elem_add_scaled(left, right, Cyc(-1));
      if (!elem_eq(ms, left)) {
        out.bracket_identity = false;
        if (out.witness.empty())
          out.witness = "bracket identity fails at (" + T.label(u) + ", " + T.label(v) + ")";
      }
    }
  return out;
}

}  // namespace hopfforge
