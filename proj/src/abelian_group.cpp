#include "hopfforge/abelian_group.hpp"

#include <numeric>
#include <sstream>

namespace hopfforge {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<uint32_t> invariant_factors)
    : m_(std::move(invariant_factors)) {
  for (uint32_t m : m_) {
    if (m < 2) throw input_error("invariant factors must be >= 2");
    order_ *= m;
    exponent_ = std::lcm(exponent_, m);
  }
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement r(m_.size());
  for (size_t j = 0; j < m_.size(); ++j) r[j] = (a[j] + b[j]) % m_[j];
  return r;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
  GroupElement r(m_.size());
  for (size_t j = 0; j < m_.size(); ++j) r[j] = (m_[j] - a[j]) % m_[j];
  return r;
}

GroupElement FiniteAbelianGroup::mul_int(const GroupElement& a, long long n) const {
  GroupElement r(m_.size());
  for (size_t j = 0; j < m_.size(); ++j) {
    long long v = (long long)(a[j]) * n % (long long)m_[j];
    if (v < 0) v += m_[j];
    r[j] = (uint32_t)v;
  }
  return r;
}

uint32_t FiniteAbelianGroup::element_order(const GroupElement& a) const {
  uint32_t ord = 1;
  for (size_t j = 0; j < m_.size(); ++j)
    ord = std::lcm(ord, m_[j] / std::gcd(m_[j], a[j] == 0 ? m_[j] : a[j]));
  return ord;
}

bool FiniteAbelianGroup::is_identity(const GroupElement& a) const {
  for (uint32_t v : a)
    if (v != 0) return false;
  return true;
}

uint64_t FiniteAbelianGroup::index_of(const GroupElement& a) const {
  uint64_t idx = 0;
  for (size_t j = 0; j < m_.size(); ++j) idx = idx * m_[j] + a[j];
  return idx;
}

GroupElement FiniteAbelianGroup::element_at(uint64_t idx) const {
  GroupElement r(m_.size());
  for (size_t j = m_.size(); j-- > 0;) {
    r[j] = (uint32_t)(idx % m_[j]);
    idx /= m_[j];
  }
  return r;
}

Character character_mul(const FiniteAbelianGroup& G, const Character& a, const Character& b) {
  Character r;
  r.c.resize(G.rank());
  for (size_t j = 0; j < G.rank(); ++j) r.c[j] = (a.c[j] + b.c[j]) % G.factors()[j];
  return r;
}

Character character_inverse(const FiniteAbelianGroup& G, const Character& a) {
  Character r;
  r.c.resize(G.rank());
  for (size_t j = 0; j < G.rank(); ++j) r.c[j] = (G.factors()[j] - a.c[j]) % G.factors()[j];
  return r;
}

Character character_pow(const FiniteAbelianGroup& G, const Character& a, long long n) {
  Character r;
  r.c.resize(G.rank());
  for (size_t j = 0; j < G.rank(); ++j) {
    long long v = (long long)(a.c[j]) * n % (long long)G.factors()[j];
    if (v < 0) v += G.factors()[j];
    r.c[j] = (uint32_t)v;
  }
  return r;
}

bool character_is_trivial(const Character& a) {
  for (uint32_t v : a.c)
    if (v != 0) return false;
  return true;
}

uint32_t character_order(const FiniteAbelianGroup& G, const Character& a) {
  uint32_t ord = 1;
  for (size_t j = 0; j < G.rank(); ++j) {
    uint32_t m = G.factors()[j];
    ord = std::lcm(ord, m / std::gcd(m, a.c[j] == 0 ? m : a.c[j]));
  }
  return ord;
}

uint32_t character_pairing_exponent(const FiniteAbelianGroup& G, const Character& chi,
                                    const GroupElement& g, uint32_t L) {
  uint64_t e = 0;
  for (size_t j = 0; j < G.rank(); ++j) {
    uint32_t m = G.factors()[j];
    if (L % m != 0) throw input_error("conductor not divisible by invariant factor");
    e = (e + (uint64_t)chi.c[j] * g[j] % L * (L / m)) % L;
  }
  return (uint32_t)e;
}

Cyc character_pairing(const FiniteAbelianGroup& G, const Character& chi, const GroupElement& g,
                      uint32_t L) {
  return Cyc::root_power(L, character_pairing_exponent(G, chi, g, L));
}

Cyc PointedDatum::lambda_at(uint32_t i, uint32_t j) const {
  auto it = lambda.find({i, j});
  return it == lambda.end() ? Cyc(0) : it->second;
}

bool PointedDatum::has_nonzero_lambda() const {
  for (const auto& [k, v] : lambda)
    if (!v.is_zero()) return true;
  return false;
}

bool PointedDatum::has_nonzero_mu() const {
  for (const auto& v : mu)
    if (!v.is_zero()) return true;
  return false;
}

PointedDatum PointedDatum::zeroed() const {
  PointedDatum d = *this;
  d.mu.assign(theta, Cyc(0));
  d.lambda.clear();
  return d;
}

void PointedDatum::refresh_orders() {
  N.assign(theta, 0);
  for (uint32_t i = 0; i < theta; ++i) {
    auto ord = q(i, i).multiplicative_order();
    N[i] = (ord && *ord > 1) ? *ord : 0;
  }
}

bool PointedDatum::mu_admissible(uint32_t i) const {
  if (N[i] == 0) return false;
  if (!character_is_trivial(character_pow(group, chi[i], N[i]))) return false;
  return !group.is_identity(group.mul_int(g[i], N[i]));
}

bool PointedDatum::linkable(uint32_t i, uint32_t j) const {
  if (i == j) return false;
  if (!character_is_trivial(character_mul(group, chi[i], chi[j]))) return false;
  if (group.is_identity(group.add(g[i], g[j]))) return false;
  auto ell = q(j, i).multiplicative_order();  // chi_i(g_j)
  return ell && *ell >= 2;
}

std::string PointedDatum::canonical_serialization() const {
  std::ostringstream out;
  out << "factors=";
  for (uint32_t m : group.factors()) out << m << ",";
  out << ";L=" << conductor << ";theta=" << theta << ";";
  for (uint32_t i = 0; i < theta; ++i) {
    out << "g" << i + 1 << "=";
    for (uint32_t v : g[i]) out << v << ",";
    out << ";chi" << i + 1 << "=";
    for (uint32_t v : chi[i].c) out << v << ",";
    out << ";N" << i + 1 << "=" << N[i] << ";mu" << i + 1 << "=" << print_scalar(mu[i]) << ";";
  }
  for (const auto& [key, v] : lambda)
    out << "lambda" << key.first + 1 << "." << key.second + 1 << "=" << print_scalar(v) << ";";
  return out.str();
}

std::vector<std::string> validate_datum(const PointedDatum& d) {
  std::vector<std::string> bad;
  auto vertex = [](uint32_t i) { return std::to_string(i + 1); };
  for (uint32_t m : d.group.factors())
    if (d.conductor % m != 0)
      bad.push_back("conductor " + std::to_string(d.conductor) + " not divisible by invariant factor " +
                    std::to_string(m));
  if (!bad.empty()) return bad;  // pairings below need divisibility
  for (uint32_t i = 0; i < d.theta; ++i) {
    Cyc qii = d.q(i, i);
    if (qii.is_one()) {
      bad.push_back("q_" + vertex(i) + vertex(i) + " = chi_" + vertex(i) + "(g_" + vertex(i) + ") is 1");
      continue;
    }
    auto ord = qii.multiplicative_order();
    if (!ord) {
      bad.push_back("q_" + vertex(i) + vertex(i) + " is not a root of unity");
      continue;
    }
    if (d.N[i] != *ord)
      bad.push_back("N_" + vertex(i) + " = " + std::to_string(d.N[i]) + " does not match order " +
                    std::to_string(*ord) + " of q_" + vertex(i) + vertex(i));
  }
  for (uint32_t i = 0; i < d.theta; ++i)
    for (uint32_t j = i + 1; j < d.theta; ++j)
      if (!(d.q(i, j) * d.q(j, i)).is_one())
        bad.push_back("Cartan condition fails: q_" + vertex(i) + vertex(j) + " * q_" + vertex(j) +
                      vertex(i) + " != 1");
  for (uint32_t i = 0; i < d.theta; ++i) {
    if (d.mu[i].is_zero()) continue;
    if (d.N[i] == 0) continue;  // already reported above
    if (!character_is_trivial(character_pow(d.group, d.chi[i], d.N[i])))
      bad.push_back("mu_" + vertex(i) + " != 0 but chi_" + vertex(i) + "^N_" + vertex(i) +
                    " is not the trivial character");
    if (d.group.is_identity(d.group.mul_int(d.g[i], d.N[i])))
      bad.push_back("mu_" + vertex(i) + " != 0 but g_" + vertex(i) + "^N_" + vertex(i) + " = 1");
  }
  std::vector<uint32_t> linked_count(d.theta, 0);
  for (const auto& [key, v] : d.lambda) {
    if (v.is_zero()) continue;
    auto [i, j] = key;
    std::string pair = "(" + vertex(i) + "," + vertex(j) + ")";
    if (!character_is_trivial(character_mul(d.group, d.chi[i], d.chi[j])))
      bad.push_back("lambda" + pair + " != 0 but chi_" + vertex(i) + " chi_" + vertex(j) + " != eps");
    if (d.group.is_identity(d.group.add(d.g[i], d.g[j])))
      bad.push_back("lambda" + pair + " != 0 but g_" + vertex(i) + " g_" + vertex(j) + " = 1");
    auto ell = d.q(j, i).multiplicative_order();  // chi_i(g_j)
    if (!ell || *ell < 2)
      bad.push_back("lambda" + pair + " != 0 but order of chi_" + vertex(i) + "(g_" + vertex(j) +
                    ") is < 2");
    linked_count[i]++;
    linked_count[j]++;
  }
  for (uint32_t i = 0; i < d.theta; ++i)
    if (linked_count[i] > 1)
      bad.push_back("vertex " + vertex(i) + " appears in more than one linked pair (not a matching)");
  return bad;
}

}  // namespace hopfforge

namespace hopfforge {

namespace {

using Mat = std::vector<std::vector<long long>>;

Mat identity_matrix(size_t n) {
  Mat I(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

// U*M_in*V = D with U, V unimodular; only U is tracked (V never needed: the
// projection reads classes of standard basis vectors, which only involves U)
void smith_form(Mat& M, Mat& U) {
  size_t n = M.size();
  if (n == 0) return;
  size_t m = M[0].size();
  U = identity_matrix(n);
  size_t t = 0;
  while (t < n && t < m) {
    // locate a nonzero entry of least magnitude in the trailing block
    size_t pi = t, pj = t;
    long long best = 0;
    for (size_t i = t; i < n; ++i)
      for (size_t j = t; j < m; ++j)
        if (M[i][j] != 0 && (best == 0 || std::llabs(M[i][j]) < best)) {
          best = std::llabs(M[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    std::swap(M[pi], M[t]);
    std::swap(U[pi], U[t]);
    for (size_t i = 0; i < n; ++i) std::swap(M[i][pj], M[i][t]);

    bool dirty = false;
    for (size_t i = t + 1; i < n; ++i) {
      if (M[i][t] == 0) continue;
      long long q = M[i][t] / M[t][t];
      for (size_t j = 0; j < m; ++j) M[i][j] -= q * M[t][j];
      for (size_t j = 0; j < n; ++j) U[i][j] -= q * U[t][j];
      if (M[i][t] != 0) dirty = true;
    }
    for (size_t j = t + 1; j < m; ++j) {
      if (M[t][j] == 0) continue;
      long long q = M[t][j] / M[t][t];
      for (size_t i = 0; i < n; ++i) M[i][j] -= q * M[i][t];
      if (M[t][j] != 0) dirty = true;
    }
    if (dirty) continue;  // remainders became new smaller candidates

    // divisibility: pivot must divide every entry of the trailing block
    bool fixed = true;
    for (size_t i = t + 1; i < n && fixed; ++i)
      for (size_t j = t + 1; j < m && fixed; ++j)
        if (M[i][j] % M[t][t] != 0) {
          for (size_t jj = 0; jj < m; ++jj) M[t][jj] += M[i][jj];
          for (size_t jj = 0; jj < n; ++jj) U[t][jj] += U[i][jj];
          fixed = false;
        }
    if (!fixed) continue;

    if (M[t][t] < 0) {
      for (size_t j = 0; j < m; ++j) M[t][j] = -M[t][j];
      for (size_t j = 0; j < n; ++j) U[t][j] = -U[t][j];
    }
    ++t;
  }
}

}  // namespace

GroupElement GroupQuotient::project(const GroupElement& g) const {
  size_t n = source.rank();
  GroupElement out(quotient.rank(), 0);
  for (size_t r = 0; r < kept.size(); ++r) {
    long long acc = 0;
    for (size_t j = 0; j < n; ++j) acc += row_transform[kept[r]][j] * (long long)g[j];
    long long d = diagonal[kept[r]];
    out[r] = (uint32_t)(((acc % d) + d) % d);
  }
  return out;
}

const GroupElement& GroupQuotient::canonical_lift(const GroupElement& qbar) const {
  return cosets[quotient.index_of(qbar)][0];
}

GroupQuotient quotient_by(const FiniteAbelianGroup& G, const std::vector<GroupElement>& generators) {
  GroupQuotient Q;
  Q.source = G;
  size_t n = G.rank();
  Mat M(n, std::vector<long long>(n + generators.size(), 0));
  for (size_t i = 0; i < n; ++i) M[i][i] = G.factors()[i];
  for (size_t c = 0; c < generators.size(); ++c)
    for (size_t i = 0; i < n; ++i) M[i][n + c] = generators[c][i];
  Mat U;
  smith_form(M, U);
  Q.row_transform = U;
  Q.diagonal.resize(n);
  std::vector<uint32_t> factors;
  for (size_t i = 0; i < n; ++i) {
    if (M[i][i] == 0)
      throw std::logic_error("quotient of a finite group has a zero invariant factor");
    Q.diagonal[i] = (uint32_t)M[i][i];
    if (M[i][i] > 1) {
      Q.kept.push_back((uint32_t)i);
      factors.push_back((uint32_t)M[i][i]);
    }
  }
  Q.quotient = FiniteAbelianGroup(factors);

  Q.cosets.assign(Q.quotient.order(), {});
  for (uint64_t idx = 0; idx < G.order(); ++idx) {
    GroupElement g = G.element_at(idx);
    GroupElement im = Q.project(g);
    if (Q.quotient.is_identity(im)) Q.kernel.push_back(g);
    Q.cosets[Q.quotient.index_of(im)].push_back(g);
  }
  if (Q.kernel.size() * Q.quotient.order() != G.order())
    throw std::logic_error("quotient projection is not balanced");
  for (const auto& gen : generators)
    if (!Q.quotient.is_identity(Q.project(gen)))
      throw std::logic_error("quotient generator does not map to the identity");
  return Q;
}

}  // namespace hopfforge
