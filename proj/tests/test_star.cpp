#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <set>
#include <vector>

#include "finring/catalogue.hpp"
#include "finring/construct.hpp"
#include "finring/star.hpp"

using namespace finring;

namespace {

FiniteRing make_m2_gf2() {
  FiniteRing r;
  r.order = 16;
  r.provenance = "M2(GF(2))";
  r.add_table.resize(256);
  r.mul_table.resize(256);
  r.neg_table.resize(16);
  r.labels.resize(16);
  auto bits = [](int v) {
    return std::array<int, 4>{v & 1, (v >> 1) & 1, (v >> 2) & 1, (v >> 3) & 1};
  };
  auto pack = [](std::array<int, 4> m) {
    return (m[0] & 1) | ((m[1] & 1) << 1) | ((m[2] & 1) << 2) |
           ((m[3] & 1) << 3);
  };
  for (int x = 0; x < 16; ++x) {
    auto a = bits(x);
    r.neg_table[x] = x;
    r.labels[x] = std::to_string(x);
    for (int y = 0; y < 16; ++y) {
      auto b = bits(y);
      r.add_table[x * 16 + y] =
          pack({a[0] ^ b[0], a[1] ^ b[1], a[2] ^ b[2], a[3] ^ b[3]});
      r.mul_table[x * 16 + y] = pack({(a[0] * b[0] + a[1] * b[2]) & 1,
                                      (a[0] * b[1] + a[1] * b[3]) & 1,
                                      (a[2] * b[0] + a[3] * b[2]) & 1,
                                      (a[2] * b[1] + a[3] * b[3]) & 1});
    }
  }
  r.one = 9;
  return r;
}

FiniteRing kxk(int p, int k) {
  FiniteRing kappa = make_gf(p, k);
  return algebra_sdprod(kappa, kappa, identity_hom(kappa));
}

}  // namespace

TEST_CASE("check_star_decomposition: local non-field positive") {
  FiniteRing dual = make_poly_quotient(make_gf(2, 1), {0, 0, 1});
  auto w = check_star_decomposition(dual);
  REQUIRE(w.has_value());
  CHECK(w->m.members == IndexSet{0, 2});  // <[x]>
  CHECK(w->kappa == IndexSet{0, 1});
}

TEST_CASE("check_star_decomposition: Z/4 and the zero ring are absent") {
  CHECK_FALSE(check_star_decomposition(make_zmod(4)).has_value());
  CHECK_FALSE(check_star_decomposition(make_zmod(1)).has_value());
}

TEST_CASE("check_star_decomposition: GF(3) x GF(3) splits over the diagonal") {
  FiniteRing q = make_product(make_gf(3, 1), make_gf(3, 1));
  auto w = check_star_decomposition(q);
  REQUIRE(w.has_value());
  CHECK(w->m.members == IndexSet{0, 1, 2});  // 0 x GF(3), lex-first
  CHECK(w->kappa == IndexSet{0, 4, 8});      // diagonal
}

TEST_CASE("check_star_section: forced section exists for the dual numbers") {
  FiniteRing dual = make_poly_quotient(make_gf(2, 1), {0, 0, 1});
  SectionResult res = check_star_section(dual, IdealSubset{{0, 2}});
  REQUIRE(res.status == SectionSearch::Found);
  CHECK(res.section->map == std::vector<int>{0, 1});  // [1] -> 1
}

TEST_CASE("check_star_section: Z/4 has no section onto GF(2)") {
  SectionResult res = check_star_section(make_zmod(4), IdealSubset{{0, 2}});
  CHECK(res.status == SectionSearch::Absent);
}

TEST_CASE("check_star_section: GF(2) x GF(2) lifts through the diagonal") {
  FiniteRing p = make_product(make_gf(2, 1), make_gf(2, 1));
  SectionResult res = check_star_section(p, IdealSubset{{0, 2}});
  REQUIRE(res.status == SectionSearch::Found);
  // section sends [(0,1)] to (1,1)
  CHECK(res.section->map == std::vector<int>{0, 3});
}

TEST_CASE("check_star_section: noncommutative quotients are reported") {
  FiniteRing m2 = make_m2_gf2();
  SectionResult res = check_star_section(m2, IdealSubset{{0}});
  CHECK(res.status == SectionSearch::UnsupportedNoncommutative);
  // and the decomposition route is absent: no subfield has order 16
  CHECK_FALSE(check_star_decomposition(m2).has_value());
}

TEST_CASE("check_star_section: fields split over the zero ideal") {
  for (int q : {2, 3, 5}) {
    SectionResult res =
        check_star_section(make_gf(q, 1), IdealSubset{{0}});
    CHECK(res.status == SectionSearch::Found);
  }
}

TEST_CASE("decompose") {
  FiniteRing r22 = kxk(2, 1);
  auto w = check_star_decomposition(r22);
  REQUIRE(w.has_value());
  CHECK(decompose(*w, 0) == std::pair{0, 0});
  // (1,1) = (1,0) + (0,1)
  CHECK(decompose(*w, 3) == std::pair{2, 1});

  FiniteRing q = make_product(make_gf(3, 1), make_gf(3, 1));
  // canonical witness: m = 0 x GF(3), so (2,1) = (0,2) + (2,2)
  auto wq = check_star_decomposition(q);
  REQUIRE(wq.has_value());
  CHECK(decompose(*wq, 7) == std::pair{2, 8});
  // the first-coordinate ideal is a witness too: (a,b) = (a-b,0) + (b,b),
  // so (2,1) = (1,0) + (1,1)
  auto wq2 = make_star_witness(q, IdealSubset{{0, 3, 6}}, IndexSet{0, 4, 8});
  REQUIRE(wq2.has_value());
  CHECK(decompose(*wq2, 7) == std::pair{3, 4});
}

TEST_CASE("build_phi_psi: dual numbers give a bijective phi of order 4") {
  FiniteRing dual = make_poly_quotient(make_gf(2, 1), {0, 0, 1});
  auto w = check_star_decomposition(dual);
  REQUIRE(w.has_value());
  PhiPsi pp = build_phi_psi(dual, *w);
  CHECK(pp.sdprod.order == 4);
  std::set<int> image(pp.phi.map.begin(), pp.phi.map.end());
  CHECK(image.size() == 4);
}

TEST_CASE("build_phi_psi: for a field phi is the identity relabeling") {
  FiniteRing k = make_gf(3, 1);
  auto w = check_star_decomposition(k);
  REQUIRE(w.has_value());
  CHECK(w->m.members == IndexSet{0});
  PhiPsi pp = build_phi_psi(k, *w);
  CHECK(pp.phi.map == std::vector<int>{0, 1, 2});
}

TEST_CASE("build_phi_psi: round trip on GF(3) x| GF(3)") {
  FiniteRing r = kxk(3, 1);
  auto w = check_star_decomposition(r);
  REQUIRE(w.has_value());
  PhiPsi pp = build_phi_psi(r, *w);
  for (int z = 0; z < r.order; ++z) CHECK(pp.phi.map[pp.psi.map[z]] == z);
  for (int p = 0; p < pp.sdprod.order; ++p)
    CHECK(pp.psi.map[pp.phi.map[p]] == p);
}

TEST_CASE("build_phi: injective for a non-witness pair") {
  // GF(4) with m = {0} and the prime subfield: |m|*|kappa| = 2 < 4
  FiniteRing gf4 = make_gf(2, 2);
  RingHom phi = build_phi(gf4, IdealSubset{{0}}, IndexSet{0, 1});
  CHECK(phi.map == std::vector<int>{0, 1});
  std::set<int> image(phi.map.begin(), phi.map.end());
  CHECK(image.size() == phi.map.size());
}

TEST_CASE("classify: GF(3)[x]/<x^2> is class (A) only") {
  Classification c = classify(make_poly_quotient(make_gf(3, 1), {0, 0, 1}));
  CHECK(c.star.has_value());
  CHECK(c.class_a);
  CHECK_FALSE(c.class_b);
  CHECK_FALSE(c.field);
  REQUIRE(c.a_witness.has_value());
  CHECK(c.a_witness->kappa == IndexSet{0, 1, 2});
}

TEST_CASE("classify: GF(2) x| GF(2) is class (B) only") {
  Classification c = classify(kxk(2, 1));
  CHECK(c.star.has_value());
  CHECK_FALSE(c.class_a);  // not local
  CHECK(c.class_b);
  REQUIRE(c.b_witness.has_value());
  CHECK(c.b_witness->kappa == IndexSet{0, 1});  // {(0,0),(0,1)}
}

TEST_CASE("classify: GF(3) x| GF(3) splits but is in neither class") {
  Classification c = classify(kxk(3, 1));
  CHECK(c.star.has_value());
  CHECK_FALSE(c.class_a);
  CHECK_FALSE(c.class_b);
  CHECK_FALSE(c.field);
}

TEST_CASE("classify: fields are in both classes") {
  for (int q : {2, 3, 4}) {
    Classification c =
        classify(q == 4 ? make_gf(2, 2) : make_gf(q, 1));
    CHECK(c.field);
    CHECK(c.class_a);
    CHECK(c.class_b);
    CHECK(c.star.has_value());
    CHECK(c.star->m.members == IndexSet{0});
  }
}

TEST_CASE("classify: Z/4 is local but in no class (no subfield)") {
  Classification c = classify(make_zmod(4));
  CHECK_FALSE(c.star.has_value());
  CHECK_FALSE(c.class_a);
  CHECK_FALSE(c.class_b);
}

TEST_CASE("check_inheritance: GF(2) acting on itself") {
  FiniteRing k2 = make_gf(2, 1);
  SemidirectSpec spec = algebra_actions(k2, k2, identity_hom(k2));
  InheritanceReport rep = check_inheritance(k2, k2, spec);
  REQUIRE(rep.ok);
  CHECK(rep.predicted_m.members == IndexSet{0, 2});  // {(0,0),(1,0)}
  CHECK(rep.predicted_kappa == IndexSet{0, 1});      // {(0,0),(0,1)}
}

TEST_CASE("check_inheritance: 2(Z/4) x| Z/2") {
  SemidirectSpec spec = two_z4_spec();
  InheritanceReport rep = check_inheritance(spec.b, spec.s, spec);
  REQUIRE(rep.ok);
  CHECK(rep.predicted_m.members == IndexSet{0, 2});  // {(0,0),(2,0)}
}

TEST_CASE("check_inheritance: an ideal of GF(3) x GF(3) under the full "
          "ring action") {
  FiniteRing r = make_product(make_gf(3, 1), make_gf(3, 1));
  IndexSet ideal{0, 3, 6};  // GF(3) x 0
  FiniteRing b = subset_rng(r, ideal, "GF(3)x0");
  SemidirectSpec spec;
  spec.b = b;
  spec.s = r;
  spec.lambda.assign(r.order, std::vector<int>(b.order));
  spec.rho.assign(r.order, std::vector<int>(b.order));
  std::vector<int> pos(r.order, -1);
  for (size_t i = 0; i < ideal.size(); ++i) pos[ideal[i]] = int(i);
  for (int u = 0; u < r.order; ++u)
    for (size_t x = 0; x < ideal.size(); ++x) {
      spec.lambda[u][x] = pos[r.mul(u, ideal[x])];
      spec.rho[u][x] = pos[r.mul(ideal[x], u)];
    }
  REQUIRE(verify_action_pair(spec).ok);
  InheritanceReport rep = check_inheritance(b, r, spec);
  REQUIRE(rep.ok);
  CHECK(rep.product.order == 27);
  CHECK(rep.predicted_m.size() == 9);
  CHECK(rep.witness.has_value());
}

TEST_CASE("check_inheritance reports rings without a splitting") {
  FiniteRing z4 = make_zmod(4);
  SemidirectSpec spec;
  spec.b = make_zmod(1);
  spec.s = z4;
  spec.lambda.assign(4, {0});
  spec.rho.assign(4, {0});
  InheritanceReport rep = check_inheritance(spec.b, z4, spec);
  CHECK_FALSE(rep.ok);
  CHECK(rep.detail == "R does not split, nothing to inherit");
}

TEST_CASE("noncommutative algebra: M2(GF(2)) x| GF(2) splits and is not "
          "local") {
  FiniteRing m2 = make_m2_gf2();
  FiniteRing gf2 = make_gf(2, 1);
  FiniteRing r = algebra_sdprod(m2, gf2, prime_subfield_embedding(m2, gf2));
  REQUIRE(r.order == 32);
  REQUIRE(verify_ring_axioms(r).ok);
  CHECK_FALSE(r.commutative());
  CHECK_FALSE(is_local(r).local);
  auto w = check_star_decomposition(r);
  REQUIRE(w.has_value());
  CHECK(w->m.size() * int(w->kappa.size()) == 32);
  // the canonical ideal {(x,0)} is the witness ideal of smallest size? it
  // has order 16 and the residue field GF(2); phi/psi must still invert
  PhiPsi pp = build_phi_psi(r, *w);
  for (int z = 0; z < r.order; ++z) CHECK(pp.phi.map[pp.psi.map[z]] == z);
  // the two splitting routes agree on every commutative-quotient ideal
  auto fields = subfields(r);
  for (const auto& m : maximal_ideals(r)) {
    SectionResult sec = check_star_section(r, m);
    if (sec.status == SectionSearch::UnsupportedNoncommutative) continue;
    bool dec = false;
    for (const auto& kappa : fields)
      dec = dec || 1LL * m.size() * int(kappa.size()) == r.order;
    CHECK(dec == (sec.status == SectionSearch::Found));
  }
}

TEST_CASE("function ring: every evaluation ideal is a witness with the "
          "constants") {
  FiniteRing fn = make_function_ring(2, make_gf(3, 1));
  auto maxi = maximal_ideals(fn);
  REQUIRE(maxi.size() == 2);  // one ideal per evaluation point
  for (const auto& m : maxi) {
    auto w = make_star_witness(fn, m, IndexSet{0, 4, 8});
    CHECK(w.has_value());
  }
}

TEST_CASE("witness fields are isomorphic to the residue field") {
  for (const FiniteRing& r :
       {kxk(2, 2), make_function_ring(3, make_gf(2, 1)),
        make_poly_quotient(make_gf(3, 1), {0, 0, 0, 1})}) {
    auto w = check_star_decomposition(r);
    REQUIRE(w.has_value());
    FiniteRing sub = subset_rng(r, w->kappa, "kappa");
    CHECK(find_isomorphism(sub, w->quo.quotient).has_value());
  }
}
