#include "support/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hopfforge::testsupport {

namespace {

constexpr uint64_t kMaxOrder = 24;
constexpr uint64_t kDimCap = 60;     // |G| * prod N_i for theta = 2 entries
constexpr size_t kPerGroup = 2;      // entries kept per group and theta

// ascending divisor chains m1 | m2 | ... with product <= kMaxOrder
void chains_from(uint64_t min_factor, uint64_t budget, std::vector<uint32_t>& cur,
                 std::vector<std::vector<uint32_t>>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (uint64_t m = std::max<uint64_t>(min_factor, 2); m <= budget; ++m) {
    if (!cur.empty() && m % cur.back() != 0) continue;
    cur.push_back(static_cast<uint32_t>(m));
    chains_from(m, budget / m, cur, out);
    cur.pop_back();
  }
}

struct Vertex {
  GroupElement g;
  Character chi;
  uint32_t N = 0;
  bool admissible = false;  // chi^N = eps and g^N != 1
  std::string fp;
};

std::vector<Vertex> vertex_candidates(const FiniteAbelianGroup& G, uint32_t L) {
  std::vector<Vertex> out;
  for (uint64_t gi = 0; gi < G.order(); ++gi) {
    GroupElement g = G.element_at(gi);
    for (uint64_t ci = 0; ci < G.order(); ++ci) {
      Character chi{G.element_at(ci)};
      uint32_t k = character_pairing_exponent(G, chi, g, L);
      if (k == 0) continue;
      uint32_t N = L / std::gcd(k, L);
      if (N < 2 || N > 5) continue;
      Vertex v;
      v.g = g;
      v.chi = chi;
      v.N = N;
      // chi^N = eps iff ord(chi) divides N
      bool chiN_trivial = (N % character_order(G, chi)) == 0;
      GroupElement gN = G.mul_int(g, N);
      v.admissible = chiN_trivial && !G.is_identity(gN);
      std::ostringstream fp;
      fp << "N" << N << "og" << G.element_order(g) << "oc" << character_order(G, chi)
         << "ogN" << G.element_order(gN) << "cT" << chiN_trivial << "ad" << v.admissible;
      v.fp = fp.str();
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::string group_tag(const std::vector<uint32_t>& factors) {
  std::ostringstream os;
  for (size_t i = 0; i < factors.size(); ++i) os << (i ? "x" : "") << factors[i];
  return os.str();
}

PointedDatum base_datum(const FiniteAbelianGroup& G, uint32_t L,
                        const std::vector<Vertex>& vs) {
  PointedDatum d;
  d.group = G;
  d.conductor = L;
  d.theta = static_cast<uint32_t>(vs.size());
  for (const auto& v : vs) {
    d.g.push_back(v.g);
    d.chi.push_back(v.chi);
  }
  d.mu.assign(d.theta, Cyc(0));
  d.refresh_orders();
  return d;
}

void push_variants(std::vector<Entry>& out, const std::string& base_name,
                   const PointedDatum& base) {
  std::vector<uint32_t> adm;
  for (uint32_t i = 0; i < base.theta; ++i)
    if (base.mu_admissible(i)) adm.push_back(i);
  bool link = base.theta == 2 && base.linkable(0, 1);

  uint64_t dim = base.group.order();
  for (uint32_t i = 0; i < base.theta; ++i) dim *= base.N[i];

  auto add = [&](const char* tag, bool with_mu, bool with_lambda) {
    PointedDatum d = base;
    if (with_mu)
      for (uint32_t i : adm) d.mu[i] = Cyc(1);
    if (with_lambda) d.lambda[{0, 1}] = Cyc(1);
    auto bad = validate_datum(d);
    if (!bad.empty())
      throw std::logic_error("corpus generator produced invalid datum " + base_name +
                             tag + ": " + bad.front());
    Entry e;
    e.name = base_name + tag;
    e.datum = std::move(d);
    e.has_mu = with_mu;
    e.has_lambda = with_lambda;
    e.dimension = dim;
    out.push_back(std::move(e));
  };

  add("_p0", false, false);
  if (!adm.empty()) add("_pm", true, false);
  if (link) add("_pl", false, true);
  if (link && !adm.empty()) add("_plm", true, true);
}

std::vector<Entry> generate() {
  std::vector<Entry> out;
  std::vector<std::vector<uint32_t>> chains;
  std::vector<uint32_t> cur;
  chains_from(2, kMaxOrder, cur, chains);
  std::sort(chains.begin(), chains.end());

  for (const auto& factors : chains) {
    FiniteAbelianGroup G(factors);
    uint32_t L = factors.back();  // group exponent for a divisor chain
    auto verts = vertex_candidates(G, L);
    if (verts.empty()) continue;

    // theta = 1: admissible first, then fingerprint; one entry per fingerprint
    {
      std::vector<size_t> order(verts.size());
      std::iota(order.begin(), order.end(), size_t{0});
      std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (verts[a].admissible != verts[b].admissible) return verts[a].admissible;
        return verts[a].fp < verts[b].fp;
      });
      std::set<std::string> seen;
      size_t kept = 0;
      for (size_t idx : order) {
        if (kept == kPerGroup) break;
        if (!seen.insert(verts[idx].fp).second) continue;
        PointedDatum d = base_datum(G, L, {verts[idx]});
        std::ostringstream name;
        name << "g" << group_tag(factors) << "_t1_" << kept;
        push_variants(out, name.str(), d);
        ++kept;
      }
    }

    // theta = 2: Cartan pairs under the dimension cap, linkable preferred
    {
      struct Pair {
        size_t a, b;
        bool linkable;
        bool admissible;
        uint64_t dim;
        std::string fp;
      };
      std::vector<Pair> pairs;
      for (size_t a = 0; a < verts.size(); ++a) {
        for (size_t b = a; b < verts.size(); ++b) {
          uint32_t k12 = character_pairing_exponent(G, verts[b].chi, verts[a].g, L);
          uint32_t k21 = character_pairing_exponent(G, verts[a].chi, verts[b].g, L);
          if ((k12 + k21) % L != 0) continue;
          uint64_t dim = G.order() * uint64_t(verts[a].N) * verts[b].N;
          if (dim > kDimCap) continue;
          PointedDatum probe = base_datum(G, L, {verts[a], verts[b]});
          if (!validate_datum(probe).empty()) continue;  // e.g. g identical and chi equal
          Pair p;
          p.a = a;
          p.b = b;
          p.linkable = probe.linkable(0, 1);
          p.admissible = probe.mu_admissible(0) || probe.mu_admissible(1);
          p.dim = dim;
          std::string f1 = verts[a].fp, f2 = verts[b].fp;
          if (f2 < f1) std::swap(f1, f2);
          std::ostringstream fp;
          fp << f1 << "|" << f2 << "|q" << ((k12 % L)) << "|lk" << p.linkable << "|go"
             << G.element_order(G.add(verts[a].g, verts[b].g));
          p.fp = fp.str();
          pairs.push_back(std::move(p));
        }
      }
      std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
        if (x.linkable != y.linkable) return x.linkable;
        if (x.admissible != y.admissible) return x.admissible;
        if (x.dim != y.dim) return x.dim < y.dim;
        return x.fp < y.fp;
      });
      std::set<std::string> seen;
      size_t kept = 0;
      for (const auto& p : pairs) {
        if (kept == kPerGroup) break;
        if (!seen.insert(p.fp).second) continue;
        PointedDatum d = base_datum(G, L, {verts[p.a], verts[p.b]});
        std::ostringstream name;
        name << "g" << group_tag(factors) << "_t2_" << kept;
        push_variants(out, name.str(), d);
        ++kept;
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<Entry>& corpus() {
  static const std::vector<Entry> c = generate();
  return c;
}

PointedDatum ex51() {
  PointedDatum d;
  d.group = FiniteAbelianGroup({6});
  d.conductor = 6;
  d.theta = 1;
  d.g = {GroupElement{{1}}};
  d.chi = {Character{{2}}};
  d.mu = {Cyc(1)};
  d.refresh_orders();
  return d;
}

PointedDatum ex52() {
  PointedDatum d;
  d.group = FiniteAbelianGroup({6});
  d.conductor = 6;
  d.theta = 2;
  d.g = {GroupElement{{1}}, GroupElement{{1}}};
  d.chi = {Character{{2}}, Character{{4}}};
  d.mu = {Cyc(1), Cyc(1)};
  d.lambda[{0, 1}] = Cyc(1);
  d.refresh_orders();
  return d;
}

PointedDatum theta3_cube() {
  PointedDatum d;
  d.group = FiniteAbelianGroup({4, 4, 4});
  d.conductor = 4;
  d.theta = 3;
  d.g = {GroupElement{{1, 0, 0}}, GroupElement{{0, 1, 0}}, GroupElement{{0, 0, 1}}};
  d.chi = {Character{{1, 2, 2}}, Character{{2, 1, 2}}, Character{{2, 2, 1}}};
  d.mu.assign(3, Cyc(0));
  d.refresh_orders();
  return d;
}

PointedDatum theta4_pairs() {
  PointedDatum d;
  d.group = FiniteAbelianGroup({4, 4});
  d.conductor = 4;
  d.theta = 4;
  d.g = {GroupElement{{1, 0}}, GroupElement{{1, 0}}, GroupElement{{0, 1}},
         GroupElement{{0, 1}}};
  d.chi = {Character{{2, 2}}, Character{{2, 2}}, Character{{2, 2}}, Character{{2, 2}}};
  d.mu.assign(4, Cyc(0));
  d.lambda[{0, 1}] = Cyc(1);
  d.lambda[{2, 3}] = Cyc(1);
  d.refresh_orders();
  return d;
}

}  // namespace hopfforge::testsupport
