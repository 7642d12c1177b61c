#include "finring/ring.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>

namespace finring {

namespace {
std::atomic<int> g_order_cap{512};
}

int order_cap() { return g_order_cap.load(); }

void set_order_cap(int cap) {
  if (cap < 1) throw std::invalid_argument("order cap must be positive");
  g_order_cap.store(cap);
}

bool FiniteRing::commutative() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<int> FiniteRing::inverse(int a) const {
  if (!one) return std::nullopt;
  for (int b = 0; b < order; ++b)
    if (mul(a, b) == *one && mul(b, a) == *one) return b;
  return std::nullopt;
}

bool FiniteRing::is_field() const {
  if (!one || order < 2 || *one == 0) return false;
  if (!commutative()) return false;
  for (int a = 1; a < order; ++a)
    if (!inverse(a)) return false;
  return true;
}

int FiniteRing::additive_order(int a) const {
  int k = 1;
  int x = a;
  while (x != 0) {
    x = add(x, a);
    ++k;
  }
  return k;
}

int FiniteRing::characteristic() const {
  if (one) return additive_order(*one);
  int e = 1;
  for (int a = 0; a < order; ++a) e = std::lcm(e, additive_order(a));
  return e;
}

const char* axiom_name(RingAxiom a) {
  switch (a) {
    case RingAxiom::Structure: return "structure";
    case RingAxiom::AddZero: return "add-zero";
    case RingAxiom::AddInverse: return "add-inverse";
    case RingAxiom::AddCommut: return "add-commut";
    case RingAxiom::AddAssoc: return "add-assoc";
    case RingAxiom::MulAssoc: return "mul-assoc";
    case RingAxiom::LeftDistrib: return "left-distrib";
    case RingAxiom::RightDistrib: return "right-distrib";
    case RingAxiom::One: return "one";
  }
  return "?";
}

namespace {
AxiomReport fail(RingAxiom ax, std::array<int, 3> w, std::string detail) {
  AxiomReport r;
  r.ok = false;
  r.axiom = ax;
  r.witness = w;
  r.detail = std::move(detail);
  return r;
}
}  // namespace

AxiomReport verify_ring_axioms(const FiniteRing& r) {
  const int n = r.order;
  const auto none = std::array<int, 3>{-1, -1, -1};
  if (n < 1) return fail(RingAxiom::Structure, none, "order must be >= 1");
  auto bad_table = [&](const std::vector<int>& t, size_t want,
                       const char* name) -> bool {
    if (t.size() != want) return true;
    for (int v : t)
      if (v < 0 || v >= n) return true;
    (void)name;
    return false;
  };
  if (bad_table(r.add_table, size_t(n) * n, "add"))
    return fail(RingAxiom::Structure, none, "add table malformed");
  if (bad_table(r.mul_table, size_t(n) * n, "mul"))
    return fail(RingAxiom::Structure, none, "mul table malformed");
  if (bad_table(r.neg_table, size_t(n), "neg"))
    return fail(RingAxiom::Structure, none, "neg table malformed");
  if (!r.labels.empty() && r.labels.size() != size_t(n))
    return fail(RingAxiom::Structure, none, "label count mismatch");
  if (r.one && (*r.one < 0 || *r.one >= n))
    return fail(RingAxiom::Structure, none, "one index out of range");

  for (int a = 0; a < n; ++a)
    if (r.add(0, a) != a || r.add(a, 0) != a)
      return fail(RingAxiom::AddZero, {a, -1, -1},
                  "index 0 is not the additive identity");
  for (int a = 0; a < n; ++a)
    if (r.add(a, r.neg(a)) != 0)
      return fail(RingAxiom::AddInverse, {a, r.neg(a), -1},
                  "neg table entry is not an additive inverse");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (r.add(a, b) != r.add(b, a))
        return fail(RingAxiom::AddCommut, {a, b, -1}, "addition not abelian");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
          return fail(RingAxiom::AddAssoc, {a, b, c},
                      "addition not associative");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
          return fail(RingAxiom::MulAssoc, {a, b, c},
                      "multiplication not associative");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
          return fail(RingAxiom::LeftDistrib, {a, b, c},
                      "left distributivity fails");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
          return fail(RingAxiom::RightDistrib, {a, b, c},
                      "right distributivity fails");
  if (r.one)
    for (int a = 0; a < n; ++a)
      if (r.mul(*r.one, a) != a || r.mul(a, *r.one) != a)
        return fail(RingAxiom::One, {a, -1, -1},
                    "declared one is not a two-sided identity");
  return AxiomReport{};
}

HomReport check_hom(const RingHom& h) {
  const int n = h.domain.order;
  HomReport rep;
  auto fail = [&](const char* law, int a, int b) {
    rep.ok = false;
    rep.law = law;
    rep.a = a;
    rep.b = b;
    return rep;
  };
  if (h.map.size() != size_t(n)) return fail("structure", -1, -1);
  for (int v : h.map)
    if (v < 0 || v >= h.codomain.order) return fail("structure", -1, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (h.map[h.domain.add(a, b)] != h.codomain.add(h.map[a], h.map[b]))
        return fail("additive", a, b);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (h.map[h.domain.mul(a, b)] != h.codomain.mul(h.map[a], h.map[b]))
        return fail("multiplicative", a, b);
  if (h.unital) {
    if (!h.domain.one || !h.codomain.one)
      return fail("unital", -1, -1);
    if (h.map[*h.domain.one] != *h.codomain.one)
      return fail("unital", *h.domain.one, -1);
  }
  return rep;
}

RingHom compose(const RingHom& g, const RingHom& f) {
  if (f.codomain.order != g.domain.order)
    throw std::invalid_argument("compose: domain mismatch");
  RingHom h;
  h.domain = f.domain;
  h.codomain = g.codomain;
  h.map.resize(f.map.size());
  for (size_t i = 0; i < f.map.size(); ++i) h.map[i] = g.map[f.map[i]];
  h.unital = f.unital && g.unital;
  return h;
}

RingHom identity_hom(const FiniteRing& r) {
  RingHom h;
  h.domain = r;
  h.codomain = r;
  h.map.resize(r.order);
  std::iota(h.map.begin(), h.map.end(), 0);
  h.unital = r.unital();
  return h;
}

bool contains(const IndexSet& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

IndexSet subring_closure(const FiniteRing& r, const IndexSet& seed) {
  if (seed.empty())
    throw std::invalid_argument("subring_closure: seed must be nonempty");
  std::vector<char> in(r.order, 0);
  std::vector<int> elems;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  for (int s : seed) {
    if (s < 0 || s >= r.order)
      throw std::invalid_argument("subring_closure: seed index out of range");
    push(s);
  }
  // Every unordered pair is visited once the later of its members is
  // processed, so one triangular sweep per new element closes the set.
  for (size_t i = 0; i < elems.size(); ++i) {
    int x = elems[i];
    push(r.neg(x));
    for (size_t j = 0; j <= i; ++j) {
      int y = elems[j];
      push(r.add(x, y));
      push(r.mul(x, y));
      push(r.mul(y, x));
    }
  }
  IndexSet out(elems.begin(), elems.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subring(const FiniteRing& r, const IndexSet& members) {
  if (members.empty() || !contains(members, 0)) return false;
  for (int x : members) {
    if (x < 0 || x >= r.order) return false;
    if (!contains(members, r.neg(x))) return false;
    for (int y : members)
      if (!contains(members, r.add(x, y)) || !contains(members, r.mul(x, y)))
        return false;
  }
  return true;
}

bool is_subfield(const FiniteRing& r, const IndexSet& members) {
  if (!r.one || *r.one == 0) return false;
  if (!contains(members, *r.one)) return false;
  if (!is_subring(r, members)) return false;
  for (int x : members)
    for (int y : members)
      if (r.mul(x, y) != r.mul(y, x)) return false;
  for (int x : members) {
    if (x == 0) continue;
    bool inv = false;
    for (int y : members)
      if (r.mul(x, y) == *r.one && r.mul(y, x) == *r.one) {
        inv = true;
        break;
      }
    if (!inv) return false;
  }
  return true;
}

FiniteRing subset_rng(const FiniteRing& r, const IndexSet& members,
                      std::string provenance) {
  if (!is_subring(r, members))
    throw std::invalid_argument("subset_rng: subset is not closed");
  const int m = int(members.size());
  std::vector<int> pos(r.order, -1);
  for (int i = 0; i < m; ++i) pos[members[i]] = i;
  FiniteRing out;
  out.order = m;
  out.provenance = std::move(provenance);
  out.add_table.resize(size_t(m) * m);
  out.mul_table.resize(size_t(m) * m);
  out.neg_table.resize(m);
  out.labels.resize(m);
  for (int i = 0; i < m; ++i) {
    out.labels[i] = r.label(members[i]);
    out.neg_table[i] = pos[r.neg(members[i])];
    for (int j = 0; j < m; ++j) {
      out.add_table[size_t(i) * m + j] = pos[r.add(members[i], members[j])];
      out.mul_table[size_t(i) * m + j] = pos[r.mul(members[i], members[j])];
    }
  }
  for (int e = 0; e < m; ++e) {
    bool ident = true;
    for (int x = 0; x < m && ident; ++x)
      ident = out.mul_table[size_t(e) * m + x] == x &&
              out.mul_table[size_t(x) * m + e] == x;
    if (ident) {
      out.one = e;
      break;
    }
  }
  return out;
}

namespace {

// Partial-map closure: images of sums and products of mapped elements are
// forced; a clash kills the branch.
bool propagate(const FiniteRing& r, const FiniteRing& s, std::vector<int>& m) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < r.order; ++a) {
      if (m[a] < 0) continue;
      for (int b = 0; b < r.order; ++b) {
        if (m[b] < 0) continue;
        int c = r.add(a, b), v = s.add(m[a], m[b]);
        if (m[c] < 0) {
          m[c] = v;
          changed = true;
        } else if (m[c] != v) {
          return false;
        }
        c = r.mul(a, b);
        v = s.mul(m[a], m[b]);
        if (m[c] < 0) {
          m[c] = v;
          changed = true;
        } else if (m[c] != v) {
          return false;
        }
      }
    }
  }
  return true;
}

bool injective_where_defined(const FiniteRing& s, const std::vector<int>& m) {
  std::vector<char> seen(s.order, 0);
  for (int v : m) {
    if (v < 0) continue;
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<int> unital_generators(const FiniteRing& r) {
  std::vector<int> gens;
  IndexSet seed{*r.one};
  IndexSet closed = subring_closure(r, seed);
  while (int(closed.size()) != r.order) {
    int pick = -1;
    for (int a = 0; a < r.order; ++a)
      if (!contains(closed, a)) {
        pick = a;
        break;
      }
    gens.push_back(pick);
    seed.push_back(pick);
    closed = subring_closure(r, seed);
  }
  return gens;
}

std::optional<RingHom> hom_search(const FiniteRing& r, const FiniteRing& s,
                                  bool surjective) {
  if (!r.one || !s.one)
    throw std::invalid_argument("hom search requires unital rings");
  if (r.order > order_cap() || s.order > order_cap())
    throw std::invalid_argument("hom search: order cap exceeded");
  if (surjective && r.order != s.order) return std::nullopt;
  if (r.additive_order(*r.one) != s.additive_order(*s.one))
    return std::nullopt;
  if (surjective) {
    auto histogram = [](const FiniteRing& t) {
      std::vector<int> h(t.order + 1, 0);
      for (int a = 0; a < t.order; ++a) ++h[t.additive_order(a)];
      return h;
    };
    if (histogram(r) != histogram(s)) return std::nullopt;
    auto unit_count = [](const FiniteRing& t) {
      int c = 0;
      for (int a = 0; a < t.order; ++a)
        if (t.inverse(a)) ++c;
      return c;
    };
    if (unit_count(r) != unit_count(s)) return std::nullopt;
  }

  std::vector<int> gens = unital_generators(r);
  std::vector<int> base(r.order, -1);
  base[0] = 0;
  base[*r.one] = *s.one;
  if (!propagate(r, s, base) || !injective_where_defined(s, base))
    return std::nullopt;

  std::optional<RingHom> found;
  auto dfs = [&](auto&& self, size_t gi, const std::vector<int>& m) -> bool {
    if (gi == gens.size()) {
      for (int v : m)
        if (v < 0) return false;  // generators exhausted yet map partial
      if (!injective_where_defined(s, m)) return false;
      RingHom h;
      h.domain = r;
      h.codomain = s;
      h.map = m;
      h.unital = true;
      if (!check_hom(h)) return false;
      found = std::move(h);
      return true;
    }
    const int g = gens[gi];
    const int want = r.additive_order(g);
    for (int c = 0; c < s.order; ++c) {
      if (s.additive_order(c) != want) continue;
      std::vector<int> next = m;
      if (next[g] >= 0) {
        if (next[g] != c) continue;
      } else {
        next[g] = c;
      }
      if (!propagate(r, s, next)) continue;
      if (!injective_where_defined(s, next)) continue;
      if (self(self, gi + 1, next)) return true;
    }
    return false;
  };
  dfs(dfs, 0, base);
  return found;
}

}  // namespace

std::optional<RingHom> find_isomorphism(const FiniteRing& r,
                                        const FiniteRing& s) {
  if (!r.one || !s.one)
    throw std::invalid_argument("find_isomorphism requires unital rings");
  if (r.order != s.order) return std::nullopt;
  return hom_search(r, s, true);
}

std::optional<RingHom> find_embedding(const FiniteRing& r,
                                      const FiniteRing& s) {
  return hom_search(r, s, false);
}

}  // namespace finring
