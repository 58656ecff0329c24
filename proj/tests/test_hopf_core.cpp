#include "doctest.h"

#include <random>

#include "support/corpus.hpp"
#include "hopfforge/functionals.hpp"

using namespace hopfforge;
using namespace hopfforge::testsupport;

namespace {

// letters of the PBW monomial x^a * g, generators in ascending order
RewriteWord word_of(const PbwHopfAlgebra& A, uint32_t idx) {
  const PbwMonomial& m = A.monomial(idx);
  RewriteWord w;
  for (uint32_t i = 0; i < m.a.size(); ++i)
    for (uint32_t r = 0; r < m.a[i]; ++r) w.push_back({false, i, {}});
  if (!A.datum().group.is_identity(m.g)) w.push_back({true, 0, m.g});
  return w;
}

RewriteWord concat(RewriteWord a, const RewriteWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST_CASE("basis layout of the order 18 example") {
  PbwHopfAlgebra A(ex51());
  REQUIRE(A.dim() == 18);
  CHECK(!A.is_graded());
  CHECK(A.unit_index() == 0);
  CHECK(A.label(0) == "1");
  // degree blocks: 6 group elements, then x g^j, then x^2 g^j
  for (uint32_t j = 0; j < 6; ++j) {
    CHECK(A.degree(j) == 0);
    CHECK(A.monomial(j).g == GroupElement{j});
    CHECK(A.degree(6 + j) == 1);
    CHECK(A.degree(12 + j) == 2);
  }
  CHECK(A.monomial(7).a == std::vector<uint32_t>{1});
  CHECK(A.monomial(7).g == GroupElement{1});
  CHECK(A.label(7) == "x1*g(1)");
  CHECK(A.index_of({2}, GroupElement{5}) == 17);
  CHECK(A.group_index(GroupElement{3}) == 3);
  CHECK(A.generator_index(0) == 6);
  CHECK(A.counit(3).is_one());
  CHECK(A.counit(6).is_zero());
}

TEST_CASE("structure constants of the order 18 example") {
  PbwHopfAlgebra A(ex51());
  const uint32_t L = 6;
  Cyc q = Cyc::root_power(L, 2);

  SUBCASE("comultiplication of x^2 carries a Gaussian coefficient") {
    uint32_t xx = A.index_of({2}, GroupElement{0});
    const TensorElement& c = A.comult(xx);
    // x^2 (x) 1 + (1+q) xg (x) x + g^2 (x) x^2
    TensorElement want;
    want[{xx, 0u}] = Cyc::one(L);
    want[{A.index_of({1}, GroupElement{1}), A.generator_index(0)}] = Cyc::one(L) + q;
    want[{A.group_index(GroupElement{2}), xx}] = Cyc::one(L);
    CHECK(tensor_eq(c, want));
  }

  SUBCASE("antipode of x") {
    // S(x) = -g^{-1} x = -chi(g^{-1}) x g^{-1} = -z^4 x g^5
    const AlgebraElement& s = A.antipode(A.generator_index(0));
    REQUIRE(s.size() == 1);
    auto it = s.find(A.index_of({1}, GroupElement{5}));
    REQUIRE(it != s.end());
    CHECK(it->second == -Cyc::root_power(L, 4));
  }

  SUBCASE("group commutation R1") {
    for (uint32_t j = 0; j < 6; ++j) {
      AlgebraElement p = A.mult(A.group_index(GroupElement{j}), A.generator_index(0));
      AlgebraElement want;
      want[A.index_of({1}, GroupElement{j})] = Cyc::root_power(L, 2 * j);
      CHECK(elem_eq(p, want));
    }
  }

  SUBCASE("root relation R3 with mu = 1") {
    // x * x^2 = mu (1 - g^3)
    AlgebraElement p = A.mult(A.generator_index(0), A.index_of({2}, GroupElement{0}));
    AlgebraElement want;
    want[0] = Cyc(1);
    want[A.group_index(GroupElement{3})] = Cyc(-1);
    CHECK(elem_eq(p, want));
  }
}

TEST_CASE("Hopf axioms hold for both examples") {
  PbwHopfAlgebra A(ex51());
  AxiomReport r = verify_hopf_axioms(PbwView{&A});
  CHECK(r.all());
  CHECK(r.witness.empty());

  PbwHopfAlgebra B(ex52());
  AxiomReport rb = verify_hopf_axioms(PbwView{&B});
  CHECK(rb.all());

  PbwHopfAlgebra G(ex52().zeroed());
  CHECK(G.is_graded());
  CHECK(verify_hopf_axioms(PbwView{&G}).all());
}

TEST_CASE("the two rewriting strategies agree on every product of the linked example") {
  PbwHopfAlgebra A(ex52());
  for (uint32_t i = 0; i < A.dim(); ++i) {
    RewriteWord wi = word_of(A, i);
    for (uint32_t j = 0; j < A.dim(); ++j) {
      RewriteWord w = concat(wi, word_of(A, j));
      AlgebraElement left = A.normal_form(w, Cyc::one(A.conductor()));
      AlgebraElement right = A.normal_form_rightmost(w, Cyc::one(A.conductor()));
      REQUIRE(elem_eq(left, right));
      REQUIRE(elem_eq(left, A.mult(i, j)));
    }
  }
}

TEST_CASE("strategy independence on sampled words of the rank 3 cube") {
  PointedDatum d = theta3_cube();
  PbwHopfAlgebra A(d, 5000);
  REQUIRE(A.dim() == 4096);
  REQUIRE(A.is_graded());
  std::mt19937 rng(424243);
  std::uniform_int_distribution<int> len(2, 6);
  std::uniform_int_distribution<int> kind(0, 3);  // 3 generators + group letter
  std::uniform_int_distribution<uint32_t> gcomp(0, 3);
  for (int t = 0; t < 150; ++t) {
    RewriteWord w;
    int n = len(rng);
    for (int s = 0; s < n; ++s) {
      int k = kind(rng);
      if (k < 3) {
        w.push_back({false, (uint32_t)k, {}});
      } else {
        w.push_back({true, 0, GroupElement{gcomp(rng), gcomp(rng), gcomp(rng)}});
      }
    }
    AlgebraElement left = A.normal_form(w, Cyc::one(d.conductor));
    AlgebraElement right = A.normal_form_rightmost(w, Cyc::one(d.conductor));
    REQUIRE(elem_eq(left, right));
  }
}

TEST_CASE("dimension cap throws") {
  CHECK_THROWS_AS(PbwHopfAlgebra(theta3_cube(), 100), cap_error);
  CHECK_NOTHROW(PbwHopfAlgebra(ex51(), 18));
}

TEST_CASE("the axiom verifier rejects tampered tables") {
  PbwHopfAlgebra A(ex51());
  HopfTables T = tables_from(A);
  REQUIRE(verify_hopf_axioms(T).all());

  SUBCASE("broken product") {
    HopfTables bad = T;
    elem_add_term(bad.mult_[(size_t)3 * bad.dim_ + 7], 0, Cyc(1));
    AxiomReport r = verify_hopf_axioms(bad);
    CHECK(!r.all());
    CHECK(!r.witness.empty());
  }
  SUBCASE("broken antipode") {
    HopfTables bad = T;
    bad.antipode_[6].clear();
    AxiomReport r = verify_hopf_axioms(bad);
    CHECK(!r.antipode);
    CHECK(!r.witness.empty());
  }
  SUBCASE("broken counit") {
    HopfTables bad = T;
    bad.counit_[1] = Cyc(0);
    AxiomReport r = verify_hopf_axioms(bad);
    CHECK(!r.all());
  }
}

TEST_CASE("products against the group algebra part stay in the group algebra") {
  PbwHopfAlgebra A(ex52());
  const auto& G = A.datum().group;
  for (uint64_t i = 0; i < G.order(); ++i)
    for (uint64_t j = 0; j < G.order(); ++j) {
      AlgebraElement p =
          A.mult(A.group_index(G.element_at(i)), A.group_index(G.element_at(j)));
      AlgebraElement want;
      want[A.group_index(G.add(G.element_at(i), G.element_at(j)))] = Cyc(1);
      CHECK(elem_eq(p, want));
    }
}
