#include "finring/structure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace finring {

bool is_ideal(const FiniteRing& r, const IndexSet& members) {
  if (members.empty() || !contains(members, 0)) return false;
  for (int x : members) {
    if (x < 0 || x >= r.order) return false;
    if (!contains(members, r.neg(x))) return false;
    for (int y : members)
      if (!contains(members, r.add(x, y))) return false;
    for (int a = 0; a < r.order; ++a)
      if (!contains(members, r.mul(a, x)) || !contains(members, r.mul(x, a)))
        return false;
  }
  return true;
}

IndexSet units(const FiniteRing& r) {
  if (!r.unital())
    throw std::invalid_argument("units: ring must be unital");
  IndexSet out;
  for (int a = 0; a < r.order; ++a)
    if (r.inverse(a)) out.push_back(a);
  return out;
}

IdealSubset principal_ideal(const FiniteRing& r, int a) {
  if (a < 0 || a >= r.order)
    throw std::invalid_argument("principal_ideal: index out of range");
  std::vector<char> in(r.order, 0);
  std::vector<int> elems;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  push(0);
  push(a);
  for (size_t i = 0; i < elems.size(); ++i) {
    int x = elems[i];
    push(r.neg(x));
    for (size_t j = 0; j <= i; ++j) push(r.add(x, elems[j]));
    for (int s = 0; s < r.order; ++s) {
      push(r.mul(s, x));
      push(r.mul(x, s));
    }
  }
  IdealSubset out;
  out.members.assign(elems.begin(), elems.end());
  std::sort(out.members.begin(), out.members.end());
  return out;
}

namespace {
bool size_lex_less(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}
}  // namespace

std::vector<IdealSubset> all_ideals(const FiniteRing& r) {
  if (r.order > order_cap())
    throw std::invalid_argument("all_ideals: order cap exceeded");
  std::set<IndexSet> seen;
  std::vector<IndexSet> work;
  auto push = [&](IndexSet s) {
    if (seen.insert(s).second) work.push_back(std::move(s));
  };
  push(IndexSet{0});
  for (int a = 0; a < r.order; ++a) push(principal_ideal(r, a).members);
  // worklist over pairwise ideal sums; the sum of two ideals is already
  // an ideal, so no re-closure is needed
  for (size_t i = 0; i < work.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      std::set<int> sum;
      for (int x : work[i])
        for (int y : work[j]) sum.insert(r.add(x, y));
      push(IndexSet(sum.begin(), sum.end()));
    }
  }
  std::vector<IndexSet> sets(seen.begin(), seen.end());
  std::sort(sets.begin(), sets.end(), size_lex_less);
  std::vector<IdealSubset> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(IdealSubset{std::move(s)});
  return out;
}

std::vector<IdealSubset> maximal_ideals(const FiniteRing& r) {
  if (!r.unital())
    throw std::invalid_argument("maximal_ideals: ring must be unital");
  if (r.order < 2) return {};
  auto ideals = all_ideals(r);
  std::vector<IdealSubset> proper;
  for (auto& i : ideals)
    if (i.size() < r.order) proper.push_back(i);
  std::vector<IdealSubset> out;
  for (auto& i : proper) {
    bool maximal = true;
    for (auto& j : proper) {
      if (i.size() >= j.size() || &i == &j) continue;
      if (std::includes(j.members.begin(), j.members.end(), i.members.begin(),
                        i.members.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(i);
  }
  return out;  // inherits (size, lex) order from all_ideals
}

LocalityReport is_local(const FiniteRing& r) {
  LocalityReport rep;
  auto maxi = maximal_ideals(r);
  rep.local = maxi.size() == 1;
  if (rep.local) rep.maximal = maxi.front();
  return rep;
}

std::vector<IndexSet> subfields(const FiniteRing& r) {
  if (!r.unital())
    throw std::invalid_argument("subfields: ring must be unital");
  std::set<IndexSet> seen;
  for (int a = 0; a < r.order; ++a) {
    IndexSet closure = subring_closure(r, IndexSet{*r.one, a});
    if (is_subfield(r, closure)) seen.insert(std::move(closure));
  }
  std::vector<IndexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

QuotientPresentation quotient(const FiniteRing& r, const IdealSubset& ideal,
                              bool allow_zero) {
  if (!is_ideal(r, ideal.members))
    throw std::invalid_argument("quotient: subset is not a two-sided ideal");
  if (ideal.size() == r.order && !allow_zero)
    throw std::invalid_argument("quotient: ideal is the whole ring");

  // coset of a = { a + x : x in ideal }; canonical representative = least
  // member, so the coset of 0 (the ideal itself) is element 0
  std::vector<int> rep_of(r.order, -1);
  for (int a = 0; a < r.order; ++a) {
    if (rep_of[a] >= 0) continue;
    int least = a;
    std::vector<int> coset;
    for (int x : ideal.members) {
      int e = r.add(a, x);
      coset.push_back(e);
      least = std::min(least, e);
    }
    for (int e : coset) rep_of[e] = least;
  }
  std::vector<int> reps;
  for (int a = 0; a < r.order; ++a)
    if (rep_of[a] == a) reps.push_back(a);
  std::sort(reps.begin(), reps.end());
  std::vector<int> index_of_rep(r.order, -1);
  for (size_t i = 0; i < reps.size(); ++i) index_of_rep[reps[i]] = int(i);

  const int m = int(reps.size());
  FiniteRing q;
  q.order = m;
  q.provenance = "quotient(" + r.provenance + ")";
  q.add_table.resize(size_t(m) * m);
  q.mul_table.resize(size_t(m) * m);
  q.neg_table.resize(m);
  q.labels.resize(m);
  for (int i = 0; i < m; ++i) {
    q.labels[i] = "[" + r.label(reps[i]) + "]";
    q.neg_table[i] = index_of_rep[rep_of[r.neg(reps[i])]];
    for (int j = 0; j < m; ++j) {
      q.add_table[size_t(i) * m + j] =
          index_of_rep[rep_of[r.add(reps[i], reps[j])]];
      q.mul_table[size_t(i) * m + j] =
          index_of_rep[rep_of[r.mul(reps[i], reps[j])]];
    }
  }
  if (r.one) q.one = index_of_rep[rep_of[*r.one]];

  QuotientPresentation out;
  out.quotient = std::move(q);
  out.coset_reps = reps;
  out.projection.domain = r;
  out.projection.codomain = out.quotient;
  out.projection.map.resize(r.order);
  for (int a = 0; a < r.order; ++a)
    out.projection.map[a] = index_of_rep[rep_of[a]];
  out.projection.unital = r.unital();
  if (!check_hom(out.projection))
    throw std::logic_error("quotient: projection failed verification");
  return out;
}

AnalysisReport analyze(const FiniteRing& r) {
  AnalysisReport rep;
  rep.order = r.order;
  rep.commutative = r.commutative();
  rep.unital = r.unital();
  rep.field = r.is_field();
  if (rep.unital) rep.unit_count = int(units(r).size());
  auto ideals = all_ideals(r);
  rep.ideal_count = int(ideals.size());
  if (rep.unital) {
    rep.maximal = maximal_ideals(r);
    rep.local = rep.maximal.size() == 1;
    rep.subfield_sets = subfields(r);
  }
  return rep;
}

}  // namespace finring
