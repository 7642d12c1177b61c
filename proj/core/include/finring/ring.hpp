#ifndef FINRING_RING_HPP
#define FINRING_RING_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace finring {

/// Sorted set of element indices into a ring's carrier.
using IndexSet = std::vector<int>;

/// Global bound on the number of elements a constructor may produce.
/// Defaults to 512; tables are order^2 entries, so this keeps every
/// exhaustive scan cheap.
int order_cap();
void set_order_cap(int cap);

/// A finite (possibly non-unital) ring given by explicit Cayley tables.
///
/// Element index 0 is always the additive zero. `one` is absent for rngs
/// without a multiplicative identity. All tables are row-major.
struct FiniteRing {
  int order = 0;
  std::vector<int> add_table;  // order*order
  std::vector<int> mul_table;  // order*order
  std::vector<int> neg_table;  // order
  std::optional<int> one;
  std::vector<std::string> labels;
  std::string provenance;

  int add(int a, int b) const { return add_table[a * order + b]; }
  int mul(int a, int b) const { return mul_table[a * order + b]; }
  int neg(int a) const { return neg_table[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  bool unital() const { return one.has_value(); }
  const std::string& label(int i) const { return labels[i]; }

  bool commutative() const;
  /// Two-sided multiplicative inverse, if any.
  std::optional<int> inverse(int a) const;
  /// Unital, 1 != 0, commutative, and every nonzero element invertible.
  bool is_field() const;
  /// Additive order of 1 when unital, else the exponent of (R,+).
  int characteristic() const;
  int additive_order(int a) const;
};

enum class RingAxiom {
  Structure,
  AddZero,
  AddInverse,
  AddCommut,
  AddAssoc,
  MulAssoc,
  LeftDistrib,
  RightDistrib,
  One,
};

const char* axiom_name(RingAxiom a);

/// Outcome of an axiom scan: either pass, or the first failing axiom with
/// a concrete witness. Structural defects (bad table dimensions, indices
/// out of range) are reported as RingAxiom::Structure, distinct from a
/// genuine axiom failure on well-formed tables.
struct AxiomReport {
  bool ok = true;
  RingAxiom axiom = RingAxiom::Structure;
  std::array<int, 3> witness{-1, -1, -1};
  std::string detail;
  explicit operator bool() const { return ok; }
  bool structural() const { return !ok && axiom == RingAxiom::Structure; }
};

/// Exhaustive axiom scan in a fixed order: structure, add-zero,
/// add-inverse, add-commut, add-assoc, mul-assoc, left-distrib,
/// right-distrib, one. Witness triples are scanned lexicographically, so
/// the first failure is deterministic.
AxiomReport verify_ring_axioms(const FiniteRing& r);

/// A total map between two table rings, with the homomorphism laws as
/// checkable evidence rather than assumptions.
struct RingHom {
  FiniteRing domain;
  FiniteRing codomain;
  std::vector<int> map;  // one codomain index per domain index
  bool unital = false;
};

struct HomReport {
  bool ok = true;
  std::string law;  // "structure" | "additive" | "multiplicative" | "unital"
  int a = -1, b = -1;
  explicit operator bool() const { return ok; }
};

/// Verifies additivity, multiplicativity, and (when flagged) preservation
/// of 1. Reports the first failing pair in lexicographic order.
HomReport check_hom(const RingHom& h);

/// Composition g(f(x)); domains must line up.
RingHom compose(const RingHom& g, const RingHom& f);

RingHom identity_hom(const FiniteRing& r);

bool contains(const IndexSet& s, int x);

/// Smallest subset containing `seed` closed under addition, negation and
/// multiplication. Seed must be nonempty.
IndexSet subring_closure(const FiniteRing& r, const IndexSet& seed);

/// True when `members` (sorted, containing 0) is closed under add, neg
/// and mul.
bool is_subring(const FiniteRing& r, const IndexSet& members);

/// True when `members` is a subring containing r's 1 that forms a field
/// (commutative, every nonzero member invertible inside the subset).
bool is_subfield(const FiniteRing& r, const IndexSet& members);

/// The rng structure induced on a multiplicatively and additively closed
/// subset, reindexed by position. Detects an internal identity if one
/// exists within the subset.
FiniteRing subset_rng(const FiniteRing& r, const IndexSet& members,
                      std::string provenance);

/// Backtracking search for a unital bijective homomorphism, pruned by
/// characteristic, additive-order histogram and unit count. Preconditions:
/// both rings unital, equal order. Deterministic: generator images are
/// tried in index order and the first isomorphism found is returned.
std::optional<RingHom> find_isomorphism(const FiniteRing& r,
                                        const FiniteRing& s);

/// Injective unital homomorphism search (same machinery, image need not be
/// all of s). Used to resolve algebra embeddings.
std::optional<RingHom> find_embedding(const FiniteRing& r,
                                      const FiniteRing& s);

}  // namespace finring

#endif
