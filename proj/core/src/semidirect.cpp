#include "finring/semidirect.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace finring {

const char* action_axiom_name(ActionAxiom a) {
  switch (a) {
    case ActionAxiom::Structure: return "structure";
    case ActionAxiom::ModuleEndo: return "module-endo";
    case ActionAxiom::HomInS: return "hom-in-s";
    case ActionAxiom::AntiHomInS: return "anti-hom-in-s";
    case ActionAxiom::Commuting: return "commuting";
    case ActionAxiom::MiddleLinearity: return "middle-linearity";
    case ActionAxiom::UnitPreservation: return "unit-preservation";
  }
  return "?";
}

namespace {
ActionReport fail(ActionAxiom ax, std::array<int, 3> w, std::string detail) {
  ActionReport r;
  r.ok = false;
  r.axiom = ax;
  r.witness = w;
  r.detail = std::move(detail);
  return r;
}
}  // namespace

ActionReport verify_action_pair(const SemidirectSpec& spec) {
  const FiniteRing& b = spec.b;
  const FiniteRing& s = spec.s;
  const auto none = std::array<int, 3>{-1, -1, -1};
  auto table_ok = [&](const std::vector<std::vector<int>>& t) {
    if (t.size() != size_t(s.order)) return false;
    for (auto& row : t) {
      if (row.size() != size_t(b.order)) return false;
      for (int v : row)
        if (v < 0 || v >= b.order) return false;
    }
    return true;
  };
  if (!table_ok(spec.lambda))
    return fail(ActionAxiom::Structure, none, "lambda tables malformed");
  if (!table_ok(spec.rho))
    return fail(ActionAxiom::Structure, none, "rho tables malformed");

  for (int t = 0; t < s.order; ++t) {
    const auto& lam = spec.lambda[t];
    const auto& rh = spec.rho[t];
    for (int x = 0; x < b.order; ++x)
      for (int y = 0; y < b.order; ++y) {
        if (lam[b.add(x, y)] != b.add(lam[x], lam[y]))
          return fail(ActionAxiom::ModuleEndo, {t, x, y},
                      "lambda(s) is not additive");
        if (rh[b.add(x, y)] != b.add(rh[x], rh[y]))
          return fail(ActionAxiom::ModuleEndo, {t, x, y},
                      "rho(s) is not additive");
        if (lam[b.mul(x, y)] != b.mul(lam[x], y))
          return fail(ActionAxiom::ModuleEndo, {t, x, y},
                      "lambda(s) does not commute with right multiplication");
        if (rh[b.mul(x, y)] != b.mul(x, rh[y]))
          return fail(ActionAxiom::ModuleEndo, {t, x, y},
                      "rho(s) does not commute with left multiplication");
      }
  }
  for (int u = 0; u < s.order; ++u)
    for (int v = 0; v < s.order; ++v) {
      const auto& lu = spec.lambda[u];
      const auto& lv = spec.lambda[v];
      const auto& lsum = spec.lambda[s.add(u, v)];
      const auto& lprod = spec.lambda[s.mul(u, v)];
      for (int x = 0; x < b.order; ++x) {
        if (lsum[x] != b.add(lu[x], lv[x]))
          return fail(ActionAxiom::HomInS, {u, v, x},
                      "lambda is not additive in s");
        if (lprod[x] != lu[lv[x]])
          return fail(ActionAxiom::HomInS, {u, v, x},
                      "lambda is not multiplicative in s");
      }
    }
  for (int u = 0; u < s.order; ++u)
    for (int v = 0; v < s.order; ++v) {
      const auto& ru = spec.rho[u];
      const auto& rv = spec.rho[v];
      const auto& rsum = spec.rho[s.add(u, v)];
      const auto& rprod = spec.rho[s.mul(u, v)];
      for (int x = 0; x < b.order; ++x) {
        if (rsum[x] != b.add(ru[x], rv[x]))
          return fail(ActionAxiom::AntiHomInS, {u, v, x},
                      "rho is not additive in s");
        if (rprod[x] != rv[ru[x]])
          return fail(ActionAxiom::AntiHomInS, {u, v, x},
                      "rho is not anti-multiplicative in s");
      }
    }
  for (int u = 0; u < s.order; ++u)
    for (int v = 0; v < s.order; ++v) {
      const auto& lu = spec.lambda[u];
      const auto& rv = spec.rho[v];
      for (int x = 0; x < b.order; ++x)
        if (lu[rv[x]] != rv[lu[x]])
          return fail(ActionAxiom::Commuting, {u, v, x},
                      "lambda(s) and rho(t) do not commute");
    }
  for (int u = 0; u < s.order; ++u) {
    const auto& lu = spec.lambda[u];
    const auto& ru = spec.rho[u];
    for (int x = 0; x < b.order; ++x)
      for (int y = 0; y < b.order; ++y)
        if (b.mul(ru[x], y) != b.mul(x, lu[y]))
          return fail(ActionAxiom::MiddleLinearity, {u, x, y},
                      "rho(s)(x)*y != x*lambda(s)(y)");
  }
  if (s.one) {
    const auto& l1 = spec.lambda[*s.one];
    const auto& r1 = spec.rho[*s.one];
    for (int x = 0; x < b.order; ++x) {
      if (l1[x] != x)
        return fail(ActionAxiom::UnitPreservation, {*s.one, x, -1},
                    "lambda(1) is not the identity");
      if (r1[x] != x)
        return fail(ActionAxiom::UnitPreservation, {*s.one, x, -1},
                    "rho(1) is not the identity");
    }
  }
  return ActionReport{};
}

FiniteRing build_sdprod(const SemidirectSpec& spec, bool allow_rng) {
  ActionReport rep = verify_action_pair(spec);
  if (!rep)
    throw std::invalid_argument("sdprod: action pair rejected (" +
                                std::string(action_axiom_name(rep.axiom)) +
                                ": " + rep.detail + ")");
  if (!spec.s.unital() && !allow_rng)
    throw std::invalid_argument(
        "sdprod: S has no 1; pass allow_rng for a rng-level product");
  const FiniteRing& bb = spec.b;
  const FiniteRing& ss = spec.s;
  const long long n = 1LL * bb.order * ss.order;
  if (n > order_cap())
    throw std::invalid_argument("sdprod: order cap exceeded");
  FiniteRing r;
  r.order = int(n);
  r.provenance = "sdprod(" + bb.provenance + ", " + ss.provenance + ")";
  r.add_table.resize(size_t(n) * n);
  r.mul_table.resize(size_t(n) * n);
  r.neg_table.resize(n);
  r.labels.resize(n);
  auto idx = [&](int x, int u) { return x * ss.order + u; };
  for (int x = 0; x < bb.order; ++x)
    for (int u = 0; u < ss.order; ++u) {
      int a = idx(x, u);
      r.labels[a] = "(" + bb.label(x) + "," + ss.label(u) + ")";
      r.neg_table[a] = idx(bb.neg(x), ss.neg(u));
      for (int y = 0; y < bb.order; ++y)
        for (int v = 0; v < ss.order; ++v) {
          int c = idx(y, v);
          r.add_table[size_t(a) * n + c] = idx(bb.add(x, y), ss.add(u, v));
          int first = bb.add(bb.add(bb.mul(x, y), spec.lambda[u][y]),
                             spec.rho[v][x]);
          r.mul_table[size_t(a) * n + c] = idx(first, ss.mul(u, v));
        }
    }
  if (ss.one) r.one = idx(0, *ss.one);
  return r;
}

SemidirectSpec induced_actions(const FiniteRing& r, const IndexSet& kappa,
                               const IdealSubset& m) {
  if (!is_subfield(r, kappa))
    throw std::invalid_argument("induced_actions: kappa is not a subfield");
  if (!is_ideal(r, m.members))
    throw std::invalid_argument("induced_actions: m is not an ideal");
  SemidirectSpec spec;
  spec.b = subset_rng(r, m.members, "ideal(" + r.provenance + ")");
  spec.s = subset_rng(r, kappa, "subfield(" + r.provenance + ")");
  std::vector<int> mpos(r.order, -1);
  for (size_t i = 0; i < m.members.size(); ++i) mpos[m.members[i]] = int(i);
  spec.lambda.assign(kappa.size(), std::vector<int>(m.members.size()));
  spec.rho.assign(kappa.size(), std::vector<int>(m.members.size()));
  for (size_t u = 0; u < kappa.size(); ++u)
    for (size_t x = 0; x < m.members.size(); ++x) {
      spec.lambda[u][x] = mpos[r.mul(kappa[u], m.members[x])];
      spec.rho[u][x] = mpos[r.mul(m.members[x], kappa[u])];
    }
  ActionReport rep = verify_action_pair(spec);
  if (!rep)
    throw std::logic_error("induced_actions: multiplication actions failed (" +
                           rep.detail + ")");
  return spec;
}

SemidirectSpec algebra_actions(const FiniteRing& a, const FiniteRing& kappa,
                               const RingHom& embed) {
  if (!kappa.is_field())
    throw std::invalid_argument("algebra actions: kappa must be a field");
  if (embed.domain.order != kappa.order || embed.codomain.order != a.order)
    throw std::invalid_argument("algebra actions: embedding shape mismatch");
  RingHom e = embed;
  e.unital = true;
  if (!check_hom(e))
    throw std::invalid_argument(
        "algebra actions: embedding is not a unital homomorphism");
  std::vector<char> hit(a.order, 0);
  for (int v : e.map) {
    if (hit[v])
      throw std::invalid_argument("algebra actions: embedding not injective");
    hit[v] = 1;
  }
  SemidirectSpec spec;
  spec.b = a;
  spec.s = kappa;
  spec.lambda.assign(kappa.order, std::vector<int>(a.order));
  spec.rho.assign(kappa.order, std::vector<int>(a.order));
  for (int u = 0; u < kappa.order; ++u)
    for (int x = 0; x < a.order; ++x) {
      spec.lambda[u][x] = a.mul(e.map[u], x);
      spec.rho[u][x] = a.mul(x, e.map[u]);
    }
  return spec;
}

FiniteRing algebra_sdprod(const FiniteRing& a, const FiniteRing& kappa,
                          const RingHom& embed) {
  FiniteRing r = build_sdprod(algebra_actions(a, kappa, embed));
  r.provenance = "sdprod_alg(" + a.provenance + ", " + kappa.provenance + ")";
  return r;
}

RingHom prime_subfield_embedding(const FiniteRing& a,
                                 const FiniteRing& kappa) {
  if (!kappa.is_field())
    throw std::invalid_argument(
        "prime_subfield_embedding: kappa must be a field");
  bool prime = kappa.order >= 2;
  for (int d = 2; d * d <= kappa.order; ++d)
    if (kappa.order % d == 0) prime = false;
  if (!prime)
    throw std::invalid_argument(
        "prime_subfield_embedding: kappa must have prime order");
  if (!a.unital())
    throw std::invalid_argument("prime_subfield_embedding: target not unital");
  if (a.characteristic() != kappa.order)
    throw std::invalid_argument(
        "prime_subfield_embedding: characteristic mismatch");
  RingHom e;
  e.domain = kappa;
  e.codomain = a;
  e.unital = true;
  e.map.assign(kappa.order, 0);
  // kappa has prime order, so element u is the u-fold sum of kappa's 1;
  // send it to the u-fold sum of a's 1
  std::vector<int> fold_a(kappa.order, 0);
  int cur = 0;
  for (int u = 1; u < kappa.order; ++u) {
    cur = a.add(cur, *a.one);
    fold_a[u] = cur;
  }
  int ku = 0;
  for (int u = 1; u < kappa.order; ++u) {
    ku = kappa.add(ku, *kappa.one);
    e.map[ku] = fold_a[u];
  }
  if (!check_hom(e))
    throw std::logic_error("prime_subfield_embedding: not a homomorphism");
  return e;
}

namespace {

// Greedy additive generating set: repeatedly take the element of largest
// additive order (smallest index on ties) outside the span so far.
std::vector<int> greedy_additive_generators(const FiniteRing& r) {
  std::vector<char> in(r.order, 0);
  std::vector<int> span{0};
  in[0] = 1;
  auto extend = [&](int g) {
    if (!in[g]) {
      in[g] = 1;
      span.push_back(g);
    }
    for (size_t i = 0; i < span.size(); ++i)
      for (size_t j = 0; j <= i; ++j) {
        int e = r.add(span[i], span[j]);
        if (!in[e]) {
          in[e] = 1;
          span.push_back(e);
        }
      }
  };
  std::vector<int> gens;
  while (int(span.size()) != r.order) {
    int best = -1, best_ord = 0;
    for (int a = 0; a < r.order; ++a) {
      if (in[a]) continue;
      int o = r.additive_order(a);
      if (o > best_ord) {
        best_ord = o;
        best = a;
      }
    }
    gens.push_back(best);
    extend(best);
  }
  return gens;
}

// All additive endomorphisms of (B,+), as explicit tables. Enumerated by
// assigning images to the greedy generators and extending over the Cayley
// graph; inconsistent assignments are dropped.
std::vector<std::vector<int>> additive_endos(const FiniteRing& b) {
  std::vector<int> gens = greedy_additive_generators(b);
  std::vector<std::vector<int>> out;
  std::vector<int> images(gens.size(), 0);
  auto build = [&]() -> bool {
    std::vector<int> table(b.order, -1);
    table[0] = 0;
    std::vector<int> work{0};
    for (size_t i = 0; i < gens.size(); ++i) {
      // seed each generator, then close under +g transitions
      int g = gens[i];
      if (table[g] < 0) {
        table[g] = images[i];
        work.push_back(g);
      } else if (table[g] != images[i]) {
        return false;
      }
    }
    for (size_t w = 0; w < work.size(); ++w) {
      int x = work[w];
      for (size_t i = 0; i < gens.size(); ++i) {
        int nx = b.add(x, gens[i]);
        int val = b.add(table[x], images[i]);
        if (table[nx] < 0) {
          table[nx] = val;
          work.push_back(nx);
        } else if (table[nx] != val) {
          return false;
        }
      }
    }
    for (int v : table)
      if (v < 0) return false;
    out.push_back(std::move(table));
    return true;
  };
  size_t total = 1;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (total > size_t(1) << 20)
      throw std::invalid_argument(
          "enumerate_action_pairs: endomorphism space too large");
    total *= size_t(b.order);
  }
  if (gens.empty()) {
    build();
    return out;
  }
  for (size_t v = 0; v < total; ++v) {
    size_t rest = v;
    for (size_t i = 0; i < gens.size(); ++i) {
      images[i] = int(rest % b.order);
      rest /= b.order;
    }
    build();
  }
  return out;
}

bool right_module_endo(const FiniteRing& b, const std::vector<int>& t) {
  for (int x = 0; x < b.order; ++x)
    for (int y = 0; y < b.order; ++y)
      if (t[b.mul(x, y)] != b.mul(t[x], y)) return false;
  return true;
}

bool left_module_endo(const FiniteRing& b, const std::vector<int>& t) {
  for (int x = 0; x < b.order; ++x)
    for (int y = 0; y < b.order; ++y)
      if (t[b.mul(x, y)] != b.mul(x, t[y])) return false;
  return true;
}

// Extend generator images to a map S -> End(B,+) additive in S, via BFS
// over sums of generators. Returns empty on inconsistency.
std::vector<std::vector<int>> extend_over_s(
    const FiniteRing& s, const FiniteRing& b, const std::vector<int>& gens,
    const std::vector<const std::vector<int>*>& gen_tables) {
  std::vector<std::vector<int>> table(s.order);
  std::vector<char> known(s.order, 0);
  table[0].assign(b.order, 0);
  known[0] = 1;
  std::vector<int> work{0};
  auto add_tables = [&](const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(b.order);
    for (int x = 0; x < b.order; ++x) h[x] = b.add(f[x], g[x]);
    return h;
  };
  for (size_t w = 0; w < work.size(); ++w) {
    int u = work[w];
    for (size_t i = 0; i < gens.size(); ++i) {
      int nu = s.add(u, gens[i]);
      auto val = add_tables(table[u], *gen_tables[i]);
      if (!known[nu]) {
        known[nu] = 1;
        table[nu] = std::move(val);
        work.push_back(nu);
      } else if (table[nu] != val) {
        return {};
      }
    }
  }
  for (char k : known)
    if (!k) return {};
  return table;
}

}  // namespace

std::vector<SemidirectSpec> enumerate_action_pairs(const FiniteRing& b,
                                                   const FiniteRing& s) {
  if (!s.unital())
    throw std::invalid_argument("enumerate_action_pairs: S must be unital");
  if (1LL * b.order * s.order > order_cap())
    throw std::invalid_argument("enumerate_action_pairs: order cap exceeded");

  std::vector<std::vector<int>> endos = additive_endos(b);
  std::vector<const std::vector<int>*> lambda_cands, rho_cands;
  for (auto& e : endos) {
    if (right_module_endo(b, e)) lambda_cands.push_back(&e);
    if (left_module_endo(b, e)) rho_cands.push_back(&e);
  }
  std::vector<int> identity(b.order);
  for (int i = 0; i < b.order; ++i) identity[i] = i;

  std::vector<int> gens = greedy_additive_generators(s);
  if (gens.empty()) gens.push_back(0);  // order-1 S still needs a seed

  // the generator equal to 1 (if any) is pinned to the identity table
  auto candidates_for = [&](int g, bool lambda_side)
      -> std::vector<const std::vector<int>*> {
    if (s.one && g == *s.one) return {&identity};
    return lambda_side ? lambda_cands : rho_cands;
  };

  std::vector<SemidirectSpec> found;
  std::set<std::pair<std::vector<std::vector<int>>,
                     std::vector<std::vector<int>>>>
      seen;
  std::vector<const std::vector<int>*> lpick(gens.size()), rpick(gens.size());
  auto rec = [&](auto&& self, size_t gi, bool lambda_side) -> void {
    if (gi == gens.size()) {
      if (lambda_side) {
        self(self, 0, false);
        return;
      }
      auto lam = extend_over_s(s, b, gens, lpick);
      if (lam.empty()) return;
      auto rh = extend_over_s(s, b, gens, rpick);
      if (rh.empty()) return;
      SemidirectSpec spec{b, s, std::move(lam), std::move(rh)};
      if (!verify_action_pair(spec)) return;
      if (seen.insert({spec.lambda, spec.rho}).second)
        found.push_back(std::move(spec));
      return;
    }
    for (auto* cand : candidates_for(gens[gi], lambda_side)) {
      (lambda_side ? lpick : rpick)[gi] = cand;
      self(self, gi + 1, lambda_side);
    }
  };
  rec(rec, 0, true);
  return found;
}

}  // namespace finring
