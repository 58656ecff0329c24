#include "hopfforge/pbw_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace hopfforge {

void elem_add_term(AlgebraElement& e, uint32_t idx, const Cyc& c) {
  if (c.is_zero()) return;
  auto it = e.find(idx);
  if (it == e.end()) {
    e.emplace(idx, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

void elem_add_scaled(AlgebraElement& e, const AlgebraElement& o, const Cyc& c) {
  if (c.is_zero()) return;
  for (const auto& [idx, v] : o) elem_add_term(e, idx, v * c);
}

AlgebraElement elem_scaled(const AlgebraElement& e, const Cyc& c) {
  AlgebraElement out;
  elem_add_scaled(out, e, c);
  return out;
}

bool elem_is_zero(const AlgebraElement& e) { return e.empty(); }

bool elem_eq(const AlgebraElement& a, const AlgebraElement& b) { return a == b; }

void tensor_add_term(TensorElement& t, uint32_t i, uint32_t j, const Cyc& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

bool tensor_eq(const TensorElement& a, const TensorElement& b) { return a == b; }

PbwHopfAlgebra::PbwHopfAlgebra(const PointedDatum& datum, uint64_t dim_cap) : datum_(datum) {
  datum_.refresh_orders();
  if (datum_.mu.size() != datum_.theta) datum_.mu.resize(datum_.theta, Cyc(0));
  for (uint32_t i = 0; i < datum_.theta; ++i)
    if (datum_.N[i] < 2)
      throw input_error("vertex " + std::to_string(i + 1) + ": q_ii must be a root of unity != 1");

  graded_ = !datum_.has_nonzero_lambda() && !datum_.has_nonzero_mu();

  uint64_t dim = datum_.group.order();
  for (uint32_t i = 0; i < datum_.theta; ++i) dim *= datum_.N[i];
  if (dim > dim_cap)
    throw cap_error("dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(dim_cap));
  dim_ = (uint32_t)dim;

  // enumerate basis in (degree, lex a, group order) order
  basis_.reserve(dim_);
  std::vector<uint32_t> a(datum_.theta, 0);
  uint64_t exp_count = dim / datum_.group.order();
  for (uint64_t t = 0; t < exp_count; ++t) {
    for (uint64_t gi = 0; gi < datum_.group.order(); ++gi)
      basis_.push_back({a, datum_.group.element_at(gi)});
    // mixed-radix increment of a (radix N_i), most significant first for lex
    for (size_t i = datum_.theta; i-- > 0;) {
      if (++a[i] < datum_.N[i]) break;
      a[i] = 0;
    }
  }
  std::stable_sort(basis_.begin(), basis_.end(), [&](const PbwMonomial& u, const PbwMonomial& v) {
    uint32_t du = u.degree(), dv = v.degree();
    if (du != dv) return du < dv;
    if (u.a != v.a) return u.a < v.a;
    return datum_.group.index_of(u.g) < datum_.group.index_of(v.g);
  });
  degrees_.resize(dim_);
  code_to_index_.assign(dim_, 0);
  for (uint32_t idx = 0; idx < dim_; ++idx) {
    degrees_[idx] = basis_[idx].degree();
    code_to_index_[code_of(basis_[idx].a, basis_[idx].g)] = idx;
  }
  unit_index_ = index_of(std::vector<uint32_t>(datum_.theta, 0), datum_.group.identity());

  // pairing exponents: chi_i over all of G, and the q-matrix
  chi_exp_.assign(datum_.theta, std::vector<uint32_t>(datum_.group.order(), 0));
  for (uint32_t i = 0; i < datum_.theta; ++i)
    for (uint64_t gi = 0; gi < datum_.group.order(); ++gi)
      chi_exp_[i][gi] = character_pairing_exponent(datum_.group, datum_.chi[i],
                                                   datum_.group.element_at(gi), datum_.conductor);
  qexp_.assign(datum_.theta, std::vector<uint32_t>(datum_.theta, 0));
  for (uint32_t i = 0; i < datum_.theta; ++i)
    for (uint32_t j = 0; j < datum_.theta; ++j)
      qexp_[i][j] = chi_exp_[j][datum_.group.index_of(datum_.g[i])];

  if (!graded_) {
    mult_table_.resize((size_t)dim_ * dim_);
    for (uint32_t i = 0; i < dim_; ++i)
      for (uint32_t j = 0; j < dim_; ++j) {
        RewriteWord w;
        const PbwMonomial &u = basis_[i], &v = basis_[j];
        for (uint32_t t = 0; t < datum_.theta; ++t)
          for (uint32_t r = 0; r < u.a[t]; ++r) w.push_back({false, t, {}});
        if (!datum_.group.is_identity(u.g)) w.push_back({true, 0, u.g});
        for (uint32_t t = 0; t < datum_.theta; ++t)
          for (uint32_t r = 0; r < v.a[t]; ++r) w.push_back({false, t, {}});
        if (!datum_.group.is_identity(v.g)) w.push_back({true, 0, v.g});
        mult_table_[(size_t)i * dim_ + j] = rewrite(w, Cyc(1), false);
      }
  }

  build_comult();
  build_antipode();
}

uint64_t PbwHopfAlgebra::code_of(const std::vector<uint32_t>& a, const GroupElement& g) const {
  uint64_t code = 0;
  for (uint32_t i = 0; i < datum_.theta; ++i) code = code * datum_.N[i] + a[i];
  return code * datum_.group.order() + datum_.group.index_of(g);
}

uint32_t PbwHopfAlgebra::index_of(const std::vector<uint32_t>& a, const GroupElement& g) const {
  return code_to_index_[code_of(a, g)];
}

uint32_t PbwHopfAlgebra::group_index(const GroupElement& g) const {
  return index_of(std::vector<uint32_t>(datum_.theta, 0), g);
}

uint32_t PbwHopfAlgebra::generator_index(uint32_t i) const {
  std::vector<uint32_t> a(datum_.theta, 0);
  a[i] = 1;
  return index_of(a, datum_.group.identity());
}

std::string PbwHopfAlgebra::label(uint32_t idx) const {
  const PbwMonomial& m = basis_[idx];
  std::ostringstream out;
  bool any = false;
  for (uint32_t i = 0; i < datum_.theta; ++i) {
    if (m.a[i] == 0) continue;
    if (any) out << "*";
    any = true;
    out << "x" << i + 1;
    if (m.a[i] > 1) out << "^" << m.a[i];
  }
  if (!datum_.group.is_identity(m.g)) {
    if (any) out << "*";
    any = true;
    out << "g(";
    for (size_t j = 0; j < m.g.size(); ++j) out << (j ? "," : "") << m.g[j];
    out << ")";
  }
  if (!any) return "1";
  return out.str();
}

uint32_t PbwHopfAlgebra::chi_exponent(uint32_t i, const GroupElement& g) const {
  return chi_exp_[i][datum_.group.index_of(g)];
}

Cyc PbwHopfAlgebra::chi_value(uint32_t i, const GroupElement& g) const {
  return Cyc::root_power(datum_.conductor, chi_exponent(i, g));
}

AlgebraElement PbwHopfAlgebra::mult_graded(uint32_t i, uint32_t j) const {
  const PbwMonomial &u = basis_[i], &v = basis_[j];
  uint64_t e = 0;
  std::vector<uint32_t> a(datum_.theta);
  for (uint32_t t = 0; t < datum_.theta; ++t) {
    a[t] = u.a[t] + v.a[t];
    if (a[t] >= datum_.N[t]) return {};  // x_t^(N_t) = 0 in the graded algebra
  }
  // move the group part of u past the x-letters of v, then merge x-blocks
  for (uint32_t t = 0; t < datum_.theta; ++t)
    if (v.a[t]) e += (uint64_t)v.a[t] * chi_exp_[t][datum_.group.index_of(u.g)];
  for (uint32_t s = 0; s < datum_.theta; ++s)
    for (uint32_t t = s + 1; t < datum_.theta; ++t)
      if (u.a[t] && v.a[s]) e += (uint64_t)u.a[t] * v.a[s] * qexp_[t][s];
  AlgebraElement out;
  out.emplace(index_of(a, datum_.group.add(u.g, v.g)),
              Cyc::root_power(datum_.conductor, (long long)(e % datum_.conductor)));
  return out;
}

AlgebraElement PbwHopfAlgebra::mult(uint32_t i, uint32_t j) const {
  if (graded_) return mult_graded(i, j);
  return mult_table_[(size_t)i * dim_ + j];
}

AlgebraElement PbwHopfAlgebra::elem_mult(const AlgebraElement& u, const AlgebraElement& v) const {
  AlgebraElement out;
  for (const auto& [i, cu] : u)
    for (const auto& [j, cv] : v) elem_add_scaled(out, mult(i, j), cu * cv);
  return out;
}

AlgebraElement PbwHopfAlgebra::unit_element() const { return {{unit_index_, Cyc(1)}}; }

Cyc PbwHopfAlgebra::counit(uint32_t idx) const {
  return degrees_[idx] == 0 ? Cyc(1) : Cyc(0);
}

Cyc PbwHopfAlgebra::counit_of(const AlgebraElement& u) const {
  Cyc acc(0);
  for (const auto& [i, c] : u)
    if (degrees_[i] == 0) acc += c;
  return acc;
}

AlgebraElement PbwHopfAlgebra::normal_form(const RewriteWord& word, const Cyc& coeff) const {
  return rewrite(word, coeff, false);
}

AlgebraElement PbwHopfAlgebra::normal_form_rightmost(const RewriteWord& word, const Cyc& coeff) const {
  return rewrite(word, coeff, true);
}

AlgebraElement PbwHopfAlgebra::rewrite(const RewriteWord& word, const Cyc& coeff, bool rightmost) const {
  AlgebraElement out;
  std::vector<std::pair<RewriteWord, Cyc>> work;
  work.emplace_back(word, coeff);
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    if (c.is_zero()) continue;

    // find a redex: R3 run check first at each position so the leftmost
    // rule instance wins, then the two-letter rules
    long redex = -1;
    int kind = 0;  // 1=R1, 2=R2, 3=R3, 4=R4
    auto scan = [&](size_t p) -> bool {
      if (!w[p].is_group) {
        uint32_t t = w[p].x;
        uint32_t run = 1;
        while (p + run < w.size() && !w[p + run].is_group && w[p + run].x == t) ++run;
        if (run >= datum_.N[t]) {
          redex = (long)p;
          kind = 3;
          return true;
        }
      }
      if (p + 1 < w.size()) {
        if (w[p].is_group && w[p + 1].is_group) {
          redex = (long)p;
          kind = 4;
          return true;
        }
        if (w[p].is_group && !w[p + 1].is_group) {
          redex = (long)p;
          kind = 1;
          return true;
        }
        if (!w[p].is_group && !w[p + 1].is_group && w[p].x > w[p + 1].x) {
          redex = (long)p;
          kind = 2;
          return true;
        }
      }
      return false;
    };
    if (rightmost) {
      for (size_t p = w.size(); p-- > 0;)
        if (scan(p)) break;
    } else {
      for (size_t p = 0; p < w.size(); ++p)
        if (scan(p)) break;
    }

    if (redex < 0) {
      // normal form: ascending x-letters then at most one group letter
      std::vector<uint32_t> a(datum_.theta, 0);
      GroupElement g = datum_.group.identity();
      for (const auto& l : w) {
        if (l.is_group) g = datum_.group.add(g, l.g);
        else a[l.x]++;
      }
      elem_add_term(out, index_of(a, g), c);
      continue;
    }

    size_t p = (size_t)redex;
    if (kind == 4) {
      RewriteWord nw(w.begin(), w.begin() + p);
      nw.push_back({true, 0, datum_.group.add(w[p].g, w[p + 1].g)});
      nw.insert(nw.end(), w.begin() + p + 2, w.end());
      work.emplace_back(std::move(nw), c);
    } else if (kind == 1) {
      uint32_t t = w[p + 1].x;
      Cyc scalar = Cyc::root_power(datum_.conductor, chi_exp_[t][datum_.group.index_of(w[p].g)]);
      RewriteWord nw(w.begin(), w.begin() + p);
      nw.push_back(w[p + 1]);
      nw.push_back(w[p]);
      nw.insert(nw.end(), w.begin() + p + 2, w.end());
      work.emplace_back(std::move(nw), c * scalar);
    } else if (kind == 2) {
      uint32_t hi = w[p].x, lo = w[p + 1].x;
      Cyc scalar = Cyc::root_power(datum_.conductor, qexp_[hi][lo]);
      RewriteWord nw(w.begin(), w.begin() + p);
      nw.push_back(w[p + 1]);
      nw.push_back(w[p]);
      nw.insert(nw.end(), w.begin() + p + 2, w.end());
      work.emplace_back(std::move(nw), c * scalar);
      Cyc lam = datum_.lambda_at(lo, hi);
      if (!lam.is_zero()) {
        RewriteWord drop(w.begin(), w.begin() + p);
        drop.insert(drop.end(), w.begin() + p + 2, w.end());
        work.emplace_back(drop, c * lam);
        RewriteWord grp(w.begin(), w.begin() + p);
        grp.push_back({true, 0, datum_.group.add(datum_.g[lo], datum_.g[hi])});
        grp.insert(grp.end(), w.begin() + p + 2, w.end());
        work.emplace_back(std::move(grp), -(c * lam));
      }
    } else {  // R3
      uint32_t t = w[p].x;
      uint32_t Nt = datum_.N[t];
      Cyc mu = datum_.mu[t];
      if (!mu.is_zero()) {
        RewriteWord drop(w.begin(), w.begin() + p);
        drop.insert(drop.end(), w.begin() + p + Nt, w.end());
        work.emplace_back(drop, c * mu);
        RewriteWord grp(w.begin(), w.begin() + p);
        grp.push_back({true, 0, datum_.group.mul_int(datum_.g[t], Nt)});
        grp.insert(grp.end(), w.begin() + p + Nt, w.end());
        work.emplace_back(std::move(grp), -(c * mu));
      }
      // mu = 0: the run collapses to zero, nothing to enqueue
    }
  }
  return out;
}

void PbwHopfAlgebra::build_comult() {
  comult_.resize(dim_);
  // Delta(x^a) by degree recursion, then both legs are right-multiplied by g
  std::map<std::vector<uint32_t>, TensorElement> pure;
  std::vector<std::vector<uint32_t>> by_degree;
  for (uint32_t idx = 0; idx < dim_; ++idx)
    if (datum_.group.is_identity(basis_[idx].g)) by_degree.push_back(basis_[idx].a);
  std::sort(by_degree.begin(), by_degree.end(), [](const auto& u, const auto& v) {
    uint32_t du = 0, dv = 0;
    for (auto x : u) du += x;
    for (auto x : v) dv += x;
    if (du != dv) return du < dv;
    return u < v;
  });
  for (const auto& a : by_degree) {
    uint32_t deg = 0;
    for (auto x : a) deg += x;
    TensorElement t;
    if (deg == 0) {
      t.emplace(std::make_pair(unit_index_, unit_index_), Cyc(1));
    } else {
      size_t last = 0;
      for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0) last = i;
      std::vector<uint32_t> prev = a;
      prev[last]--;
      const TensorElement& base = pure.at(prev);
      // multiply by Delta(x_last) = x (x) 1 + g_last (x) x on the right
      uint32_t xi = generator_index((uint32_t)last);
      uint32_t gi = group_index(datum_.g[last]);
      for (const auto& [uv, c] : base) {
        AlgebraElement l1 = mult(uv.first, xi);
        for (const auto& [r, cr] : l1) tensor_add_term(t, r, uv.second, c * cr);
        AlgebraElement l2 = mult(uv.first, gi);
        AlgebraElement r2 = mult(uv.second, xi);
        for (const auto& [r, cr] : l2)
          for (const auto& [s, cs] : r2) tensor_add_term(t, r, s, c * cr * cs);
      }
    }
    pure.emplace(a, std::move(t));
  }
  for (uint32_t idx = 0; idx < dim_; ++idx) {
    const PbwMonomial& m = basis_[idx];
    const TensorElement& base = pure.at(m.a);
    if (datum_.group.is_identity(m.g)) {
      comult_[idx] = base;
      continue;
    }
    TensorElement t;
    uint32_t gidx = group_index(m.g);
    for (const auto& [uv, c] : base) {
      AlgebraElement l = mult(uv.first, gidx);
      AlgebraElement r = mult(uv.second, gidx);
      for (const auto& [p, cp] : l)
        for (const auto& [q, cq] : r) tensor_add_term(t, p, q, c * cp * cq);
    }
    comult_[idx] = std::move(t);
  }
}

TensorElement PbwHopfAlgebra::comult_of(const AlgebraElement& u) const {
  TensorElement t;
  for (const auto& [i, c] : u)
    for (const auto& [uv, c2] : comult_[i]) tensor_add_term(t, uv.first, uv.second, c * c2);
  return t;
}

void PbwHopfAlgebra::build_antipode() {
  antipode_.resize(dim_);
  for (uint32_t idx = 0; idx < dim_; ++idx) {
    const PbwMonomial& m = basis_[idx];
    // S reverses letters: S(x^a g) = S(g) S(x_theta)^a_theta ... S(x_1)^a_1
    RewriteWord w;
    Cyc sign(1);
    if (!datum_.group.is_identity(m.g)) w.push_back({true, 0, datum_.group.neg(m.g)});
    for (uint32_t t = datum_.theta; t-- > 0;) {
      for (uint32_t r = 0; r < m.a[t]; ++r) {
        w.push_back({true, 0, datum_.group.neg(datum_.g[t])});
        w.push_back({false, t, {}});
        sign = -sign;
      }
    }
    antipode_[idx] = rewrite(w, sign, false);
  }
}

AlgebraElement PbwHopfAlgebra::antipode_of(const AlgebraElement& u) const {
  AlgebraElement out;
  for (const auto& [i, c] : u) elem_add_scaled(out, antipode_[i], c);
  return out;
}

}  // namespace hopfforge
