#include "finring/catalogue.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "finring/construct.hpp"

namespace finring {

SemidirectSpec two_z4_spec() {
  FiniteRing z4 = make_zmod(4);
  SemidirectSpec spec;
  spec.b = subset_rng(z4, IndexSet{0, 2}, "2(Zmod(4))");
  spec.s = make_zmod(2);
  spec.lambda = {{0, 0}, {0, 1}};  // 0 -> zero map, 1 -> identity
  spec.rho = {{0, 0}, {0, 1}};
  return spec;
}

std::vector<CatalogueEntry> default_catalogue() {
  std::vector<CatalogueEntry> out;
  auto plain = [&](FiniteRing r) {
    out.push_back(CatalogueEntry{r.provenance, std::move(r), std::nullopt});
  };
  auto semidirect = [&](SemidirectSpec spec, std::string id = "") {
    FiniteRing r = build_sdprod(spec);
    if (!id.empty()) r.provenance = std::move(id);
    out.push_back(
        CatalogueEntry{r.provenance, std::move(r), std::move(spec)});
  };

  for (int n = 2; n <= 16; ++n) plain(make_zmod(n));
  plain(make_gf(2, 1));
  plain(make_gf(3, 1));
  plain(make_gf(2, 2));
  plain(make_gf(5, 1));
  plain(make_gf(7, 1));
  plain(make_gf(2, 3));
  plain(make_gf(3, 2));
  for (int q : {2, 3}) {
    FiniteRing k = make_gf(q, 1);
    std::vector<int> x2{0, 0, 1}, x3{0, 0, 0, 1};
    plain(make_poly_quotient(k, x2));
    plain(make_poly_quotient(k, x3));
    plain(make_product(k, k));
  }
  plain(make_function_ring(2, make_gf(2, 1)));
  plain(make_function_ring(3, make_gf(2, 1)));
  plain(make_function_ring(2, make_gf(3, 1)));
  for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    FiniteRing kappa = make_gf(p, k);
    SemidirectSpec spec = algebra_actions(kappa, kappa, identity_hom(kappa));
    semidirect(std::move(spec), "sdprod_alg(" + kappa.provenance + ", " +
                                    kappa.provenance + ")");
  }
  semidirect(two_z4_spec());
  {
    FiniteRing gf4 = make_gf(2, 2);
    FiniteRing gf2 = make_gf(2, 1);
    SemidirectSpec spec =
        algebra_actions(gf4, gf2, prime_subfield_embedding(gf4, gf2));
    semidirect(std::move(spec), "sdprod_alg(GF(2,2), GF(2))");
  }
  return out;
}

namespace {

std::string show_set(const FiniteRing& r, const IndexSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += r.label(s[i]);
  }
  return out + "}";
}

struct Harness {
  CatalogueReport report;

  void row(const std::string& ring_id, const std::string& check_id,
           const std::string& claim, bool pass, std::string witness = "") {
    report.rows.push_back(
        MatrixRow{ring_id, check_id, claim, pass, std::move(witness)});
  }
};

void check_ring_axioms(Harness& h, const CatalogueEntry& e) {
  AxiomReport rep = verify_ring_axioms(e.ring);
  h.row(e.id, "ring-axioms", "carrier tables satisfy the ring axioms",
        rep.ok, rep.ok ? "" : rep.detail);
}

void check_quotient_fields(Harness& h, const CatalogueEntry& e) {
  const char* claim = "quotients by maximal ideals are fields";
  for (const auto& m : maximal_ideals(e.ring)) {
    QuotientPresentation q = quotient(e.ring, m);
    if (!q.quotient.commutative()) {
      h.row(e.id, "quotient-by-maximal-is-field", claim, true,
            "noncommutative quotient at " + show_set(e.ring, m.members) +
                ", field assertion skipped");
      continue;
    }
    bool ok = q.quotient.is_field();
    h.row(e.id, "quotient-by-maximal-is-field", claim, ok,
          ok ? "" : "non-field quotient at " + show_set(e.ring, m.members));
  }
}

void check_subfield_ideal_meet(Harness& h, const CatalogueEntry& e) {
  const char* claim = "subfields meet maximal ideals only at zero";
  bool ok = true;
  std::string wit;
  for (const auto& kappa : subfields(e.ring)) {
    for (const auto& m : maximal_ideals(e.ring)) {
      IndexSet meet;
      std::set_intersection(kappa.begin(), kappa.end(), m.members.begin(),
                            m.members.end(), std::back_inserter(meet));
      if (meet != IndexSet{0}) {
        ok = false;
        wit = "kappa=" + show_set(e.ring, kappa) + " meets m at " +
              show_set(e.ring, meet);
      }
    }
  }
  h.row(e.id, "subfield-meets-ideal-at-zero", claim, ok, wit);
}

void check_lagrange(Harness& h, const CatalogueEntry& e) {
  bool ok = true;
  std::string wit;
  for (const auto& i : all_ideals(e.ring))
    if (e.ring.order % i.size() != 0) {
      ok = false;
      wit = "ideal of size " + std::to_string(i.size());
    }
  h.row(e.id, "ideal-order-divides", "ideal orders divide the ring order",
        ok, wit);
}

void check_field_simplicity(Harness& h, const CatalogueEntry& e) {
  const char* claim =
      "fields have exactly the trivial ideals, and conversely for "
      "commutative unital rings";
  auto ideals = all_ideals(e.ring);
  bool trivial_only = ideals.size() == 2 && ideals.front().size() == 1 &&
                      ideals.back().size() == e.ring.order;
  bool ok = true;
  std::string wit;
  if (e.ring.is_field() && !trivial_only) {
    ok = false;
    wit = "field with " + std::to_string(ideals.size()) + " ideals";
  }
  if (!e.ring.is_field() && e.ring.unital() && e.ring.commutative() &&
      trivial_only) {
    ok = false;
    wit = "simple commutative unital non-field";
  }
  h.row(e.id, "field-iff-trivial-ideals", claim, ok, wit);
}

void check_sdprod_entry(Harness& h, const CatalogueEntry& e) {
  if (!e.sd) return;
  const SemidirectSpec& spec = *e.sd;
  bool ok = bool(verify_action_pair(spec));
  std::string wit;
  const FiniteRing& p = e.ring;
  const int so = spec.s.order;
  if (ok) {
    AxiomReport rep = verify_ring_axioms(p);
    ok = rep.ok;
    if (!ok) wit = rep.detail;
  }
  if (ok) {
    for (int x = 0; x < spec.b.order && ok; ++x)
      for (int y = 0; y < spec.b.order && ok; ++y)
        if (p.mul(x * so, y * so) != spec.b.mul(x, y) * so) {
          ok = false;
          wit = "first-component injection breaks a product";
        }
    for (int u = 0; u < so && ok; ++u)
      for (int v = 0; v < so && ok; ++v)
        if (p.mul(u, v) != spec.s.mul(u, v)) {
          ok = false;
          wit = "second-component injection breaks a product";
        }
  }
  h.row(e.id, "sdprod-axioms-and-injections",
        "semidirect tables form a ring and the component injections "
        "preserve products",
        ok, wit);
}

void check_induced_products(Harness& h, const CatalogueEntry& e) {
  const char* claim =
      "multiplication-action products have order |m|*|kappa| with the "
      "first components a maximal ideal";
  bool ok = true;
  std::string wit;
  auto fields = subfields(e.ring);
  for (const auto& m : maximal_ideals(e.ring)) {
    for (const auto& kappa : fields) {
      SemidirectSpec spec = induced_actions(e.ring, kappa, m);
      FiniteRing prod = build_sdprod(spec);
      if (prod.order != int(m.members.size() * kappa.size())) {
        ok = false;
        wit = "order mismatch";
        continue;
      }
      IdealSubset first;
      for (size_t x = 0; x < m.members.size(); ++x)
        first.members.push_back(int(x) * int(kappa.size()));
      auto maxi = maximal_ideals(prod);
      if (std::find(maxi.begin(), maxi.end(), first) == maxi.end()) {
        ok = false;
        wit = "first components not maximal over m=" +
              show_set(e.ring, m.members) +
              ", kappa=" + show_set(e.ring, kappa);
      }
    }
  }
  h.row(e.id, "induced-sdprod-canonical-ideal", claim, ok, wit);
}

void check_not_local(Harness& h, const CatalogueEntry& e,
                     const std::vector<const FiniteRing*>& kappas) {
  if (!e.ring.unital() || e.ring.order < 2) return;
  const char* claim =
      "a semidirect product over a field with unital first factor "
      "(1 != 0) is never local";
  bool ok = true;
  std::string wit;
  int built = 0;
  for (const FiniteRing* kappa : kappas) {
    if (1LL * e.ring.order * kappa->order > 81) continue;
    for (const SemidirectSpec& spec : enumerate_action_pairs(e.ring, *kappa)) {
      FiniteRing prod = build_sdprod(spec);
      ++built;
      if (is_local(prod).local) {
        ok = false;
        wit = "local product with kappa of order " +
              std::to_string(kappa->order);
        break;
      }
      // (-1, 1) is a non-unit outside the canonical maximal ideal
      int minus_one = prod.order == 0
                          ? -1
                          : e.ring.neg(*e.ring.one) * kappa->order +
                                *kappa->one;
      if (prod.inverse(minus_one)) {
        ok = false;
        wit = "(-1,1) unexpectedly invertible";
        break;
      }
    }
    if (!ok) break;
  }
  h.row(e.id, "sdprod-unital-factor-not-local", claim, ok,
        ok ? std::to_string(built) + " products checked" : wit);
}

void check_kxk_units(Harness& h, const CatalogueEntry& e) {
  if (!e.sd) return;
  const SemidirectSpec& spec = *e.sd;
  // only the k x| k entries: B and S are the same field
  if (!spec.b.is_field() || spec.b.order != spec.s.order ||
      spec.b.mul_table != spec.s.mul_table)
    return;
  const FiniteRing& kappa = spec.s;
  const FiniteRing& p = e.ring;
  bool ok = true;
  std::string wit;
  IndexSet brute = units(p);
  IndexSet formula;
  for (int a = 0; a < kappa.order; ++a)
    for (int b = 0; b < kappa.order; ++b) {
      if (b == 0) continue;
      if (a == 0 || a != kappa.neg(b)) formula.push_back(a * kappa.order + b);
    }
  std::sort(formula.begin(), formula.end());
  if (formula != brute) {
    ok = false;
    wit = "formula " + show_set(p, formula) + " vs scan " + show_set(p, brute);
  }
  h.row(e.id, "kxk-unit-formula",
        "units of k x| k are the pairs with b != 0 and a = 0 or a != -b", ok,
        wit);
}

void check_oracle_agreement(Harness& h, const CatalogueEntry& e) {
  const char* claim =
      "additive-decomposition and section-search splitting checks agree "
      "on every maximal ideal";
  bool ok = true;
  std::string wit;
  auto fields = subfields(e.ring);
  for (const auto& m : maximal_ideals(e.ring)) {
    bool decomposition = false;
    for (const auto& kappa : fields)
      if (1LL * m.size() * int(kappa.size()) == e.ring.order) decomposition = true;
    SectionResult sec = check_star_section(e.ring, m);
    if (sec.status == SectionSearch::UnsupportedNoncommutative) {
      h.row(e.id, "star-oracle-agreement", claim, true,
            "noncommutative quotient at " + show_set(e.ring, m.members) +
                ", section search unsupported");
      continue;
    }
    bool section = sec.status == SectionSearch::Found;
    if (decomposition != section) {
      ok = false;
      wit = "disagreement at m=" + show_set(e.ring, m.members) +
            (section ? " (section only)" : " (decomposition only)");
    }
  }
  h.row(e.id, "star-oracle-agreement", claim, ok, wit);
}

void check_witness_field_maximality(Harness& h, const CatalogueEntry& e) {
  const char* claim =
      "witness subfields are maximal and isomorphic to the residue field";
  bool ok = true;
  std::string wit;
  auto fields = subfields(e.ring);
  auto w = check_star_decomposition(e.ring);
  if (w) {
    for (const auto& bigger : fields) {
      if (bigger.size() < w->kappa.size()) continue;
      if (!std::includes(bigger.begin(), bigger.end(), w->kappa.begin(),
                         w->kappa.end()))
        continue;
      // the corollary: (m, bigger) must also be a witness
      if (1LL * w->m.size() * int(bigger.size()) != e.ring.order) {
        ok = false;
        wit = "larger subfield breaks the cardinality condition";
      }
    }
    // remark: fixed m admits a single witness field up to isomorphism
    FiniteRing quo_field = w->quo.quotient;
    for (const auto& kappa : fields) {
      if (1LL * w->m.size() * int(kappa.size()) != e.ring.order) continue;
      FiniteRing sub = subset_rng(e.ring, kappa, "subfield");
      if (!find_isomorphism(sub, quo_field)) {
        ok = false;
        wit = "witness field not isomorphic to the residue field";
      }
    }
  }
  h.row(e.id, "witness-field-maximality", claim, ok, wit);
}

void check_class_intersection(Harness& h, const CatalogueEntry& e) {
  Classification c = classify(e.ring);
  bool ok = !(c.class_a && c.class_b) || c.field;
  h.row(e.id, "classes-intersect-in-fields",
        "rings in both class (A) and class (B) are fields", ok,
        ok ? "" : "non-field in both classes");
}

void check_field_star(Harness& h, const CatalogueEntry& e) {
  if (!e.ring.is_field()) return;
  auto w = check_star_decomposition(e.ring);
  bool ok = w && w->m.size() == 1;
  h.row(e.id, "fields-split-trivially",
        "fields split over the zero ideal", ok,
        ok ? "" : "expected witness with m = {0}");
}

void check_decomposition_bijective(Harness& h, const CatalogueEntry& e) {
  auto w = check_star_decomposition(e.ring);
  if (!w) return;
  bool ok = true;
  std::string wit;
  std::set<std::pair<int, int>> seen;
  for (int a = 0; a < e.ring.order; ++a) {
    auto [x, u] = decompose(*w, a);
    if (!contains(w->m.members, x) || !contains(w->kappa, u) ||
        e.ring.add(x, u) != a || !seen.insert({x, u}).second) {
      ok = false;
      wit = "broken at element " + e.ring.label(a);
      break;
    }
  }
  if (ok && seen.size() != size_t(e.ring.order)) ok = false;
  h.row(e.id, "decomposition-bijective",
        "witness decomposition is a bijection m x kappa -> R", ok, wit);
}

void check_phi_injective(Harness& h, const CatalogueEntry& e) {
  const char* claim =
      "the pair-sum map is injective for every (maximal ideal, subfield) "
      "pair";
  bool ok = true;
  std::string wit;
  auto fields = subfields(e.ring);
  for (const auto& m : maximal_ideals(e.ring)) {
    for (const auto& kappa : fields) {
      RingHom phi = build_phi(e.ring, m, kappa);
      std::vector<char> seen(e.ring.order, 0);
      for (int v : phi.map) {
        if (seen[v]) {
          ok = false;
          wit = "collision for m=" + show_set(e.ring, m.members) +
                ", kappa=" + show_set(e.ring, kappa);
          break;
        }
        seen[v] = 1;
      }
    }
  }
  h.row(e.id, "phi-injective", claim, ok, wit);
}

void check_closure_props(Harness& h, const CatalogueEntry& e) {
  bool ok = true;
  std::string wit;
  const FiniteRing& r = e.ring;
  std::vector<IndexSet> singles(r.order);
  for (int a = 0; a < r.order && ok; ++a) {
    singles[a] = subring_closure(r, IndexSet{a});
    if (subring_closure(r, singles[a]) != singles[a]) {
      ok = false;
      wit = "not idempotent at " + r.label(a);
    }
  }
  for (int a = 0; a < r.order && ok; ++a)
    for (int b = 0; b < r.order && ok; ++b) {
      IndexSet both = subring_closure(r, IndexSet{a, b});
      if (!std::includes(both.begin(), both.end(), singles[a].begin(),
                         singles[a].end())) {
        ok = false;
        wit = "not monotone at {" + r.label(a) + "," + r.label(b) + "}";
      }
    }
  h.row(e.id, "closure-idempotent-monotone",
        "subring closure is idempotent and monotone", ok, wit);
}

void check_polyquot_family(Harness& h) {
  const char* claim =
      "a polynomial quotient is a field exactly when the modulus has no "
      "root (degree <= 3)";
  bool ok = true;
  std::string wit;
  for (int q : {2, 3}) {
    FiniteRing k = make_gf(q, 1);
    for (int deg : {2, 3}) {
      int count = 1;
      for (int i = 0; i < deg; ++i) count *= q;
      for (int v = 0; v < count; ++v) {
        std::vector<int> coeffs(deg + 1);
        int rest = v;
        for (int i = 0; i < deg; ++i) {
          coeffs[i] = rest % q;
          rest /= q;
        }
        coeffs[deg] = *k.one;
        // root scan is the independent irreducibility route for deg <= 3
        bool has_root = false;
        for (int x = 0; x < q && !has_root; ++x) {
          int val = 0, pw = *k.one;
          for (int i = 0; i <= deg; ++i) {
            val = k.add(val, k.mul(coeffs[i], pw));
            pw = k.mul(pw, x);
          }
          has_root = val == 0;
        }
        FiniteRing quot = make_poly_quotient(k, coeffs);
        if (quot.is_field() == has_root) {
          ok = false;
          wit = "disagreement over GF(" + std::to_string(q) + ") at poly " +
                std::to_string(v);
        }
      }
    }
  }
  h.row("polyquot-family", "polyquot-field-iff-irreducible", claim, ok, wit);
}

void check_iso_symmetry(Harness& h) {
  const char* claim =
      "isomorphism search is symmetric and inverses verify as "
      "homomorphisms";
  bool ok = true;
  std::string wit;
  FiniteRing z4 = make_zmod(4);
  FiniteRing gf4 = make_gf(2, 2);
  FiniteRing prod = make_product(make_gf(2, 1), make_gf(2, 1));
  FiniteRing fn = make_function_ring(2, make_gf(2, 1));
  FiniteRing z2 = make_zmod(2);
  std::vector<std::pair<const FiniteRing*, const FiniteRing*>> pairs = {
      {&z4, &gf4}, {&prod, &fn}, {&z2, &z2}};
  for (auto [a, b] : pairs) {
    auto f = find_isomorphism(*a, *b);
    auto g = find_isomorphism(*b, *a);
    if (f.has_value() != g.has_value()) {
      ok = false;
      wit = "asymmetric result for " + a->provenance + " vs " + b->provenance;
      continue;
    }
    if (f) {
      RingHom inv;
      inv.domain = *b;
      inv.codomain = *a;
      inv.unital = true;
      inv.map.assign(b->order, -1);
      for (int x = 0; x < a->order; ++x) inv.map[f->map[x]] = x;
      if (!check_hom(inv)) {
        ok = false;
        wit = "inverse fails verification for " + a->provenance;
      }
    }
  }
  h.row("iso-pairs", "iso-symmetry", claim, ok, wit);
}

}  // namespace

CatalogueReport verify_catalogue(const std::vector<CatalogueEntry>& entries) {
  Harness h;
  if (entries.empty()) return std::move(h.report);

  std::vector<FiniteRing> kappa_pool;
  for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}})
    kappa_pool.push_back(make_gf(p, k));
  std::vector<const FiniteRing*> kappas;
  for (auto& k : kappa_pool) kappas.push_back(&k);

  for (const auto& e : entries) {
    check_ring_axioms(h, e);
    if (!verify_ring_axioms(e.ring)) continue;  // downstream checks need it
    check_quotient_fields(h, e);
    check_subfield_ideal_meet(h, e);
    check_lagrange(h, e);
    check_field_simplicity(h, e);
    check_sdprod_entry(h, e);
    check_induced_products(h, e);
    check_not_local(h, e, kappas);
    check_kxk_units(h, e);
    check_oracle_agreement(h, e);
    check_witness_field_maximality(h, e);
    check_class_intersection(h, e);
    check_field_star(h, e);
    check_decomposition_bijective(h, e);
    check_phi_injective(h, e);
    check_closure_props(h, e);
  }
  check_polyquot_family(h);
  check_iso_symmetry(h);
  return std::move(h.report);
}

}  // namespace finring
