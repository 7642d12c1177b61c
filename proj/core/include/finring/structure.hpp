#ifndef FINRING_STRUCTURE_HPP
#define FINRING_STRUCTURE_HPP

#include <optional>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

/// A set of element indices asserted to be a two-sided ideal of the ring
/// it was computed from. Members are sorted ascending.
struct IdealSubset {
  IndexSet members;
  int size() const { return int(members.size()); }
  bool operator==(const IdealSubset& o) const { return members == o.members; }
};

bool is_ideal(const FiniteRing& r, const IndexSet& members);

/// Elements with a two-sided multiplicative inverse. Requires a unital
/// ring.
IndexSet units(const FiniteRing& r);

/// Smallest two-sided ideal containing a.
IdealSubset principal_ideal(const FiniteRing& r, int a);

/// Every two-sided ideal: the principal ideals closed under pairwise
/// ideal sum, plus {0}. Sorted by size, then lexicographically.
std::vector<IdealSubset> all_ideals(const FiniteRing& r);

/// Proper ideals not strictly contained in any other proper ideal.
/// The zero ring has none.
std::vector<IdealSubset> maximal_ideals(const FiniteRing& r);

struct LocalityReport {
  bool local = false;
  std::optional<IdealSubset> maximal;  // filled when local
};

LocalityReport is_local(const FiniteRing& r);

/// All unital subrings containing r's 1 that form a field. A finite
/// subfield is generated as a unital subring by one element, so the scan
/// closes {1, a} for every a and keeps the closures that are fields.
std::vector<IndexSet> subfields(const FiniteRing& r);

struct QuotientPresentation {
  FiniteRing quotient;
  RingHom projection;          // parent -> quotient
  std::vector<int> coset_reps; // least parent index per quotient element
};

/// Coset ring of a proper ideal; representatives are the least index in
/// each coset, and the coset of 0 gets index 0. Quotient by the whole
/// ring (the zero quotient) is only produced when allow_zero is set.
QuotientPresentation quotient(const FiniteRing& r, const IdealSubset& ideal,
                              bool allow_zero = false);

/// Structure summary used by reports: see io.hpp for serialization.
struct AnalysisReport {
  int order = 0;
  bool commutative = false;
  int unit_count = 0;
  int ideal_count = 0;
  std::vector<IdealSubset> maximal;
  bool local = false;
  std::vector<IndexSet> subfield_sets;
  bool unital = false;
  bool field = false;
};

AnalysisReport analyze(const FiniteRing& r);

}  // namespace finring

#endif
