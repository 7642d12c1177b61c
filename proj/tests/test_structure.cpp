#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "finring/catalogue.hpp"
#include "finring/construct.hpp"
#include "finring/semidirect.hpp"
#include "finring/structure.hpp"

using namespace finring;

namespace {

// 2x2 matrices over GF(2): the standard noncommutative test subject.
// Index a + 2b + 4c + 8d encodes [[a,b],[c,d]].
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
    r.labels[x] = "[" + std::to_string(a[0]) + std::to_string(a[1]) +
                  std::to_string(a[2]) + std::to_string(a[3]) + "]";
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
  r.one = 9;  // [[1,0],[0,1]]
  return r;
}

// Complete subfield enumeration, independent of the library search.
// Order <= 16: literal power-set scan. Above that: every subfield is an
// additive subgroup containing {0, 1}, so enumerating those closures is
// still complete.
bool subfield_mask(const FiniteRing& r, unsigned long long mask) {
  if (!r.one) return false;
  if (!(mask & 1ULL)) return false;
  if (!((mask >> *r.one) & 1ULL) || *r.one == 0) return false;
  std::vector<int> members;
  for (int i = 0; i < r.order; ++i)
    if ((mask >> i) & 1ULL) members.push_back(i);
  for (int x : members) {
    if (!((mask >> r.neg(x)) & 1ULL)) return false;
    for (int y : members) {
      if (!((mask >> r.add(x, y)) & 1ULL)) return false;
      if (!((mask >> r.mul(x, y)) & 1ULL)) return false;
      if (r.mul(x, y) != r.mul(y, x)) return false;
    }
  }
  for (int x : members) {
    if (x == 0) continue;
    bool inv = false;
    for (int y : members)
      inv = inv || (r.mul(x, y) == *r.one && r.mul(y, x) == *r.one);
    if (!inv) return false;
  }
  return true;
}

std::vector<IndexSet> subfields_bruteforce(const FiniteRing& r) {
  std::vector<IndexSet> out;
  if (r.order <= 16) {
    for (unsigned long long mask = 1; mask < (1ULL << r.order); ++mask) {
      if (!subfield_mask(r, mask)) continue;
      IndexSet members;
      for (int i = 0; i < r.order; ++i)
        if ((mask >> i) & 1ULL) members.push_back(i);
      out.push_back(std::move(members));
    }
  } else {
    auto additive_closure = [&](IndexSet seed) {
      std::vector<char> in(r.order, 0);
      std::vector<int> elems;
      for (int s : seed)
        if (!in[s]) {
          in[s] = 1;
          elems.push_back(s);
        }
      for (size_t i = 0; i < elems.size(); ++i) {
        for (size_t j = 0; j <= i; ++j) {
          int e = r.add(elems[i], elems[j]);
          if (!in[e]) {
            in[e] = 1;
            elems.push_back(e);
          }
        }
      }
      std::sort(elems.begin(), elems.end());
      return elems;
    };
    std::set<IndexSet> seen;
    std::vector<IndexSet> work;
    if (r.one && *r.one != 0) {
      IndexSet start = additive_closure({0, *r.one});
      seen.insert(start);
      work.push_back(start);
    }
    for (size_t i = 0; i < work.size(); ++i) {
      IndexSet cur = work[i];
      for (int a = 0; a < r.order; ++a) {
        if (std::binary_search(cur.begin(), cur.end(), a)) continue;
        IndexSet grown = cur;
        grown.push_back(a);
        grown = additive_closure(grown);
        if (seen.insert(grown).second) work.push_back(grown);
      }
    }
    for (const auto& subgroup : seen) {
      bool field = true;
      for (int x : subgroup) {
        for (int y : subgroup) {
          if (!std::binary_search(subgroup.begin(), subgroup.end(),
                                  r.mul(x, y)) ||
              r.mul(x, y) != r.mul(y, x))
            field = false;
        }
      }
      if (field)
        for (int x : subgroup) {
          if (x == 0) continue;
          bool inv = false;
          for (int y : subgroup)
            inv = inv ||
                  (r.mul(x, y) == *r.one && r.mul(y, x) == *r.one);
          field = field && inv;
        }
      if (field) out.push_back(subgroup);
    }
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

TEST_CASE("units") {
  CHECK(units(make_zmod(4)) == IndexSet{1, 3});

  FiniteRing k3 = make_gf(3, 1);
  FiniteRing z3z3 = algebra_sdprod(k3, k3, identity_hom(k3));
  // (0,1), (0,2), (1,1), (2,2)
  CHECK(units(z3z3) == IndexSet{1, 2, 4, 8});

  FiniteRing k2 = make_gf(2, 1);
  FiniteRing z2z2 = algebra_sdprod(k2, k2, identity_hom(k2));
  CHECK(units(z2z2) == IndexSet{1});  // only (0,1)

  FiniteRing rng = subset_rng(make_zmod(4), IndexSet{0, 2}, "2(Zmod(4))");
  CHECK_THROWS_AS(units(rng), std::invalid_argument);
}

TEST_CASE("principal_ideal") {
  FiniteRing dual = make_poly_quotient(make_gf(2, 1), {0, 0, 1});
  CHECK(principal_ideal(dual, 2).members == IndexSet{0, 2});  // <[x]>
  CHECK(principal_ideal(make_zmod(9), 0).members == IndexSet{0});
  CHECK(principal_ideal(make_zmod(4), 2).members == IndexSet{0, 2});
}

TEST_CASE("all_ideals") {
  for (int q : {2, 3, 5, 7}) {
    auto ideals = all_ideals(make_gf(q, 1));
    REQUIRE(ideals.size() == 2);  // fields are simple
    CHECK(ideals[0].members == IndexSet{0});
    CHECK(ideals[1].size() == q);
  }
  FiniteRing p = make_product(make_gf(2, 1), make_gf(2, 1));
  auto ideals = all_ideals(p);
  REQUIRE(ideals.size() == 4);
  CHECK(ideals[1].members == IndexSet{0, 1});  // 0 x GF(2)
  CHECK(ideals[2].members == IndexSet{0, 2});  // GF(2) x 0

  auto chain = all_ideals(make_zmod(8));
  REQUIRE(chain.size() == 4);
  CHECK(chain[1].members == IndexSet{0, 4});
  CHECK(chain[2].members == IndexSet{0, 2, 4, 6});
}

TEST_CASE("maximal_ideals") {
  FiniteRing p = make_product(make_gf(2, 1), make_gf(2, 1));
  auto maxi = maximal_ideals(p);
  REQUIRE(maxi.size() == 2);
  CHECK(maxi[0].members == IndexSet{0, 1});
  CHECK(maxi[1].members == IndexSet{0, 2});

  FiniteRing k2 = make_gf(2, 1);
  FiniteRing z2z2 = algebra_sdprod(k2, k2, identity_hom(k2));
  maxi = maximal_ideals(z2z2);
  REQUIRE(maxi.size() == 2);
  CHECK(maxi[0].members == IndexSet{0, 2});  // {(0,0),(1,0)}
  CHECK(maxi[1].members == IndexSet{0, 3});  // {(0,0),(1,1)}

  FiniteRing two = build_sdprod(two_z4_spec());
  maxi = maximal_ideals(two);
  REQUIRE(maxi.size() == 1);
  CHECK(maxi[0].members == IndexSet{0, 2});  // {(0,0),(2,0)}

  CHECK(maximal_ideals(make_zmod(1)).empty());
}

TEST_CASE("is_local") {
  CHECK(is_local(make_poly_quotient(make_gf(3, 1), {0, 0, 1})).local);
  FiniteRing k3 = make_gf(3, 1);
  CHECK_FALSE(is_local(algebra_sdprod(k3, k3, identity_hom(k3))).local);
  CHECK_FALSE(
      is_local(make_product(make_gf(2, 1), make_gf(2, 1))).local);
  CHECK(is_local(build_sdprod(two_z4_spec())).local);
}

TEST_CASE("subfields") {
  CHECK(subfields(make_zmod(4)).empty());

  auto gf4_fields = subfields(make_gf(2, 2));
  REQUIRE(gf4_fields.size() == 2);
  CHECK(gf4_fields[0] == IndexSet{0, 1});          // prime subfield
  CHECK(gf4_fields[1] == IndexSet{0, 1, 2, 3});    // the field itself

  FiniteRing q = make_product(make_gf(3, 1), make_gf(3, 1));
  auto diag = subfields(q);
  REQUIRE(diag.size() == 1);
  CHECK(diag[0] == IndexSet{0, 4, 8});
}

TEST_CASE("subfields agree with complete enumeration") {
  std::vector<FiniteRing> rings;
  for (int n : {2, 4, 6, 8, 9, 12, 16}) rings.push_back(make_zmod(n));
  rings.push_back(make_gf(2, 2));
  rings.push_back(make_gf(2, 3));
  rings.push_back(make_gf(3, 2));
  rings.push_back(make_product(make_gf(2, 1), make_gf(2, 1)));
  rings.push_back(make_product(make_gf(3, 1), make_gf(3, 1)));
  rings.push_back(make_function_ring(3, make_gf(2, 1)));
  rings.push_back(make_m2_gf2());
  // above the power-set range: subgroup-closure enumeration
  rings.push_back(make_poly_quotient(make_gf(3, 1), {0, 0, 0, 1}));  // 27
  rings.push_back(make_gf(5, 2));                                    // 25
  rings.push_back(make_gf(2, 6));                                    // 64
  for (const auto& r : rings) {
    CAPTURE(r.provenance);
    CHECK(subfields(r) == subfields_bruteforce(r));
  }
}

TEST_CASE("subfield lattice of GF(64) follows the divisors of 6") {
  auto fields = subfields(make_gf(2, 6));
  std::vector<size_t> sizes;
  for (auto& f : fields) sizes.push_back(f.size());
  CHECK(sizes == std::vector<size_t>{2, 4, 8, 64});
}

TEST_CASE("quotient") {
  FiniteRing dual = make_poly_quotient(make_gf(2, 1), {0, 0, 1});
  QuotientPresentation q = quotient(dual, IdealSubset{{0, 2}});
  CHECK(q.quotient.order == 2);
  CHECK(q.quotient.is_field());
  CHECK(find_isomorphism(q.quotient, make_gf(2, 1)).has_value());
  CHECK(q.coset_reps == std::vector<int>{0, 1});

  // quotient by {0} is the ring itself
  FiniteRing z6 = make_zmod(6);
  QuotientPresentation same = quotient(z6, IdealSubset{{0}});
  CHECK(same.quotient.order == 6);
  CHECK(same.quotient.mul_table == z6.mul_table);

  FiniteRing p = make_product(make_gf(2, 1), make_gf(2, 1));
  QuotientPresentation half = quotient(p, IdealSubset{{0, 2}});
  CHECK(half.quotient.order == 2);
  CHECK(half.quotient.is_field());

  CHECK_THROWS_AS(quotient(z6, IdealSubset{{0, 1, 2, 3, 4, 5}}),
                  std::invalid_argument);
  CHECK(quotient(z6, IdealSubset{{0, 1, 2, 3, 4, 5}}, true).quotient.order ==
        1);
  CHECK_THROWS_AS(quotient(z6, IdealSubset{{0, 1}}), std::invalid_argument);
}

TEST_CASE("quotient by every maximal ideal of a commutative ring is a field") {
  for (const FiniteRing& r :
       {make_zmod(12), make_product(make_gf(2, 1), make_gf(3, 1)),
        make_poly_quotient(make_gf(2, 1), {0, 0, 0, 1})}) {
    for (const auto& m : maximal_ideals(r)) {
      QuotientPresentation q = quotient(r, m);
      CAPTURE(r.provenance);
      CHECK(q.quotient.is_field());
      CHECK(r.order % m.size() == 0);
    }
  }
}

TEST_CASE("noncommutative rings: M2(GF(2)) structure") {
  FiniteRing m2 = make_m2_gf2();
  REQUIRE(verify_ring_axioms(m2).ok);
  CHECK_FALSE(m2.commutative());
  auto ideals = all_ideals(m2);
  REQUIRE(ideals.size() == 2);  // simple ring
  CHECK(is_local(m2).local);    // unique maximal two-sided ideal {0}
  CHECK(units(m2).size() == 6);  // GL2(F2)
}

TEST_CASE("analysis report fields") {
  FiniteRing z3z3 = make_product(make_gf(3, 1), make_gf(3, 1));
  AnalysisReport rep = analyze(z3z3);
  CHECK(rep.order == 9);
  CHECK(rep.commutative);
  CHECK(rep.unit_count == 4);
  CHECK(rep.ideal_count == 4);
  CHECK(rep.maximal.size() == 2);
  CHECK_FALSE(rep.local);
  CHECK(rep.subfield_sets.size() == 1);
}
