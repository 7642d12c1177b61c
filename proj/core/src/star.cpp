#include "finring/star.hpp"

#include <algorithm>
#include <stdexcept>

namespace finring {

namespace {

// Builds the witness for a pair already known to satisfy the cardinality
// condition |m|*|kappa| = |R|; throws on any internal inconsistency.
StarWitness assemble_witness(const FiniteRing& r, const IdealSubset& m,
                             const IndexSet& kappa) {
  StarWitness w;
  w.m = m;
  w.kappa = kappa;
  w.decomposition.assign(r.order, {-1, -1});
  for (int x : m.members)
    for (int u : kappa) {
      int a = r.add(x, u);
      if (w.decomposition[a].first >= 0)
        throw std::logic_error("star witness: decomposition not unique");
      w.decomposition[a] = {x, u};
    }
  for (auto& d : w.decomposition)
    if (d.first < 0)
      throw std::logic_error("star witness: decomposition not total");
  w.quo = quotient(r, m);
  w.section.domain = w.quo.quotient;
  w.section.codomain = r;
  w.section.unital = true;
  w.section.map.resize(w.quo.quotient.order);
  for (int q = 0; q < w.quo.quotient.order; ++q)
    w.section.map[q] = w.decomposition[w.quo.coset_reps[q]].second;
  if (!check_hom(w.section))
    throw std::logic_error("star witness: section is not a homomorphism");
  for (int q = 0; q < w.quo.quotient.order; ++q)
    if (w.quo.projection.map[w.section.map[q]] != q)
      throw std::logic_error("star witness: section does not split");
  return w;
}

}  // namespace

std::optional<StarWitness> check_star_decomposition(const FiniteRing& r) {
  if (!r.unital())
    throw std::invalid_argument("check_star: ring must be unital");
  if (r.order < 2) return std::nullopt;  // no maximal ideal exists
  auto maxi = maximal_ideals(r);
  auto fields = subfields(r);
  for (const auto& m : maxi)
    for (const auto& kappa : fields)
      if (1LL * m.size() * int(kappa.size()) == r.order)
        return assemble_witness(r, m, kappa);
  return std::nullopt;
}

std::optional<StarWitness> make_star_witness(const FiniteRing& r,
                                             const IdealSubset& m,
                                             const IndexSet& kappa) {
  if (!is_ideal(r, m.members) || m.size() >= r.order)
    throw std::invalid_argument("make_star_witness: not a proper ideal");
  if (!is_subfield(r, kappa))
    throw std::invalid_argument("make_star_witness: not a subfield");
  if (1LL * m.size() * int(kappa.size()) != r.order) return std::nullopt;
  return assemble_witness(r, m, kappa);
}

SectionResult check_star_section(const FiniteRing& r, const IdealSubset& m) {
  if (!is_ideal(r, m.members) || m.size() >= r.order)
    throw std::invalid_argument("check_star_section: not a proper ideal");
  SectionResult res;
  QuotientPresentation quo = quotient(r, m);
  const FiniteRing& q = quo.quotient;
  if (!q.commutative()) {
    res.status = SectionSearch::UnsupportedNoncommutative;
    return res;
  }
  if (!q.is_field())
    throw std::invalid_argument(
        "check_star_section: ideal is not maximal (quotient not a field)");

  // least multiplicative generator of the residue field
  int gen = -1;
  std::vector<int> powers;  // g^0 .. g^{q-2}
  for (int g = 1; g < q.order && gen < 0; ++g) {
    std::vector<int> pw{*q.one};
    int cur = *q.one;
    for (int i = 1; i < q.order - 1; ++i) {
      cur = q.mul(cur, g);
      pw.push_back(cur);
    }
    std::vector<char> seen(q.order, 0);
    bool all = true;
    for (int v : pw) {
      if (seen[v]) {
        all = false;
        break;
      }
      seen[v] = 1;
    }
    if (all && q.mul(pw.back(), g) == *q.one) {
      gen = g;
      powers = std::move(pw);
    }
  }
  if (gen < 0)
    throw std::logic_error("check_star_section: residue field has no "
                           "multiplicative generator");

  // lift candidates: coset elements of gen, ascending index
  for (int c = 0; c < r.order; ++c) {
    if (quo.projection.map[c] != gen) continue;
    RingHom s;
    s.domain = q;
    s.codomain = r;
    s.unital = true;
    s.map.assign(q.order, 0);
    int img = *r.one;
    for (int i = 0; i < q.order - 1; ++i) {
      s.map[powers[i]] = img;
      img = r.mul(img, c);
    }
    if (!check_hom(s)) continue;
    bool splits = true;
    for (int e = 0; e < q.order && splits; ++e)
      splits = quo.projection.map[s.map[e]] == e;
    if (!splits) continue;
    res.status = SectionSearch::Found;
    res.section = std::move(s);
    return res;
  }
  res.status = SectionSearch::Absent;
  return res;
}

std::pair<int, int> decompose(const StarWitness& w, int a) {
  return w.decomposition[a];
}

RingHom build_phi(const FiniteRing& r, const IdealSubset& m,
                  const IndexSet& kappa) {
  SemidirectSpec spec = induced_actions(r, kappa, m);
  FiniteRing sd = build_sdprod(spec);
  RingHom phi;
  phi.domain = sd;
  phi.codomain = r;
  phi.unital = true;
  phi.map.resize(sd.order);
  const int sk = int(kappa.size());
  for (size_t x = 0; x < m.members.size(); ++x)
    for (int u = 0; u < sk; ++u)
      phi.map[int(x) * sk + u] = r.add(m.members[x], kappa[u]);
  if (!check_hom(phi))
    throw std::logic_error("build_phi: pair-sum map is not a homomorphism");
  return phi;
}

PhiPsi build_phi_psi(const FiniteRing& r, const StarWitness& w) {
  PhiPsi out;
  out.phi = build_phi(r, w.m, w.kappa);
  out.sdprod = out.phi.domain;

  std::vector<int> mpos(r.order, -1), kpos(r.order, -1);
  for (size_t i = 0; i < w.m.members.size(); ++i) mpos[w.m.members[i]] = int(i);
  for (size_t i = 0; i < w.kappa.size(); ++i) kpos[w.kappa[i]] = int(i);
  out.psi.domain = r;
  out.psi.codomain = out.sdprod;
  out.psi.unital = true;
  out.psi.map.resize(r.order);
  const int sk = int(w.kappa.size());
  for (int z = 0; z < r.order; ++z) {
    int u = w.section.map[w.quo.projection.map[z]];  // j([z]), in kappa
    int x = r.sub(z, u);                             // z - j([z]), in m
    if (mpos[x] < 0 || kpos[u] < 0)
      throw std::logic_error("build_phi_psi: decomposition left its sets");
    out.psi.map[z] = mpos[x] * sk + kpos[u];
  }
  if (!check_hom(out.psi))
    throw std::logic_error("build_phi_psi: psi is not a homomorphism");
  for (int z = 0; z < r.order; ++z)
    if (out.phi.map[out.psi.map[z]] != z)
      throw std::logic_error("build_phi_psi: phi o psi is not the identity");
  for (int p = 0; p < out.sdprod.order; ++p)
    if (out.psi.map[out.phi.map[p]] != p)
      throw std::logic_error("build_phi_psi: psi o phi is not the identity");
  return out;
}

Classification classify(const FiniteRing& r) {
  if (!r.unital())
    throw std::invalid_argument("classify: ring must be unital");
  Classification c;
  c.field = r.is_field();
  if (r.order < 2) return c;  // order-1 convention: no classes, no witness
  c.star = check_star_decomposition(r);

  auto fields = subfields(r);
  auto maxi = maximal_ideals(r);
  IndexSet us = units(r);
  std::vector<char> is_unit(r.order, 0);
  for (int u : us) is_unit[u] = 1;

  auto decompose_over = [&](const IndexSet& pool, const IdealSubset& m,
                            const IndexSet& kappa,
                            std::vector<std::pair<int, int>>& out) {
    out.clear();
    for (int a : pool) {
      bool done = false;
      for (int u : kappa) {
        int x = r.sub(a, u);
        if (contains(m.members, x)) {
          out.push_back({x, u});
          done = true;
          break;
        }
      }
      if (!done) return false;
    }
    return true;
  };

  LocalityReport loc = is_local(r);
  if (loc.local) {
    for (const auto& kappa : fields) {
      std::vector<std::pair<int, int>> dec;
      if (decompose_over(us, *loc.maximal, kappa, dec)) {
        c.class_a = true;
        c.a_witness = ClassAWitness{kappa, *loc.maximal, std::move(dec)};
        break;
      }
    }
  }

  IndexSet nonunits;
  for (int a = 0; a < r.order; ++a)
    if (!is_unit[a]) nonunits.push_back(a);
  for (const auto& kappa : fields) {
    bool units_inside = true;
    for (int u : us)
      if (!contains(kappa, u)) {
        units_inside = false;
        break;
      }
    if (!units_inside) continue;
    for (const auto& m : maxi) {
      std::vector<std::pair<int, int>> dec;
      if (decompose_over(nonunits, m, kappa, dec)) {
        c.class_b = true;
        c.b_witness = ClassBWitness{kappa, m, std::move(dec)};
        break;
      }
    }
    if (c.class_b) break;
  }
  return c;
}

InheritanceReport check_inheritance(const FiniteRing& s, const FiniteRing& r,
                                    const SemidirectSpec& spec) {
  InheritanceReport rep;
  if (spec.b.order != s.order || spec.s.order != r.order) {
    rep.detail = "spec shape does not match (S, R)";
    return rep;
  }
  ActionReport act = verify_action_pair(spec);
  if (!act) {
    rep.detail = std::string("action pair rejected: ") + act.detail;
    return rep;
  }
  auto w_r = check_star_decomposition(r);
  if (!w_r) {
    rep.detail = "R does not split, nothing to inherit";
    return rep;
  }
  rep.product = build_sdprod(spec);
  const int ro = r.order;
  // predicted ideal {(x, y) : y in m_R}, predicted field {(0, u) : u in k_R}
  for (int x = 0; x < s.order; ++x)
    for (int y : w_r->m.members) rep.predicted_m.members.push_back(x * ro + y);
  std::sort(rep.predicted_m.members.begin(), rep.predicted_m.members.end());
  for (int u : w_r->kappa) rep.predicted_kappa.push_back(u);
  std::sort(rep.predicted_kappa.begin(), rep.predicted_kappa.end());

  if (!is_ideal(rep.product, rep.predicted_m.members)) {
    rep.detail = "predicted ideal is not an ideal of the product";
    return rep;
  }
  auto maxi = maximal_ideals(rep.product);
  if (std::find(maxi.begin(), maxi.end(), rep.predicted_m) == maxi.end()) {
    rep.detail = "predicted ideal is not maximal in the product";
    return rep;
  }
  if (!is_subfield(rep.product, rep.predicted_kappa)) {
    rep.detail = "predicted field is not a subfield of the product";
    return rep;
  }
  if (1LL * rep.predicted_m.size() * int(rep.predicted_kappa.size()) !=
      rep.product.order) {
    rep.detail = "predicted pair fails the cardinality condition";
    return rep;
  }
  rep.witness = assemble_witness(rep.product, rep.predicted_m,
                                 rep.predicted_kappa);
  rep.ok = true;
  rep.detail = "splitting inherited by the product";
  return rep;
}

}  // namespace finring
