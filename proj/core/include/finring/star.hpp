#ifndef FINRING_STAR_HPP
#define FINRING_STAR_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finring/semidirect.hpp"
#include "finring/structure.hpp"

namespace finring {

/// Evidence that a ring splits over a maximal ideal: a subfield kappa
/// meeting m only at 0, with |m|*|kappa| = |R|, the section of the
/// canonical projection landing in kappa, and the additive decomposition
/// a = x + u (x in m, u in kappa, unique) of every element.
struct StarWitness {
  IdealSubset m;
  IndexSet kappa;
  QuotientPresentation quo;  // R -> R/m
  RingHom section;           // R/m -> R, image inside kappa
  std::vector<std::pair<int, int>> decomposition;  // per element: (x, u)
};

/// Splitting check by additive decomposition: scans maximal ideals
/// (smallest first, then lexicographic) against subfields and accepts the
/// first pair with |m|*|kappa| = |R| (injectivity of (x,u) -> x+u makes
/// the cardinality condition sufficient). Absent means the ring does not
/// split. Order-1 rings have no maximal ideal and are always absent.
std::optional<StarWitness> check_star_decomposition(const FiniteRing& r);

/// Witness for one specific (ideal, subfield) pair, or absent when the
/// cardinality condition fails. The ideal is assumed maximal.
std::optional<StarWitness> make_star_witness(const FiniteRing& r,
                                             const IdealSubset& m,
                                             const IndexSet& kappa);

enum class SectionSearch { Found, Absent, UnsupportedNoncommutative };

struct SectionResult {
  SectionSearch status = SectionSearch::Absent;
  std::optional<RingHom> section;  // R/m -> R with projection o section = id
};

/// Independent splitting check for a fixed maximal ideal: searches unital
/// sections of R -> R/m directly, by lifting a multiplicative generator of
/// the residue field into its coset and extending through powers. Only
/// commutative residue rings are supported; noncommutative ones are
/// reported, not silently skipped.
SectionResult check_star_section(const FiniteRing& r, const IdealSubset& m);

/// The unique pair (x, u) with a = x + u, x in m, u in kappa.
std::pair<int, int> decompose(const StarWitness& w, int a);

/// The mutually inverse homomorphisms between m x| kappa (multiplication
/// actions) and R: phi(x,u) = x + u and psi(z) = (z - j([z]), j([z])).
struct PhiPsi {
  FiniteRing sdprod;
  RingHom phi;  // sdprod -> R
  RingHom psi;  // R -> sdprod
};

PhiPsi build_phi_psi(const FiniteRing& r, const StarWitness& w);

/// phi alone for an arbitrary (maximal ideal, subfield) pair; injective
/// even when the pair is not a witness.
RingHom build_phi(const FiniteRing& r, const IdealSubset& m,
                  const IndexSet& kappa);

struct ClassAWitness {
  IndexSet kappa;
  IdealSubset m;
  std::vector<std::pair<int, int>> unit_decomposition;  // per unit: (x, u)
};

struct ClassBWitness {
  IndexSet kappa;
  IdealSubset m;
  std::vector<std::pair<int, int>> nonunit_decomposition;
};

/// Class (A): local, and some subfield decomposes every unit over the
/// maximal ideal. Class (B): some subfield contains all units and some
/// maximal ideal decomposes every non-unit. Both quantify over all
/// subfields / maximal ideals before answering false.
struct Classification {
  std::optional<StarWitness> star;
  bool class_a = false;
  std::optional<ClassAWitness> a_witness;
  bool class_b = false;
  std::optional<ClassBWitness> b_witness;
  bool field = false;
};

Classification classify(const FiniteRing& r);

/// Splitting inheritance through a semidirect product: given spec for
/// S x| R where R itself splits over (m, kappa), the product must split
/// over the predicted ideal {(x, y) : y in m} and field {(0, u) : u in
/// kappa}. Confirms the predicted ideal is a genuine maximal ideal.
struct InheritanceReport {
  bool ok = false;
  std::string detail;
  FiniteRing product;
  IdealSubset predicted_m;
  IndexSet predicted_kappa;
  std::optional<StarWitness> witness;
};

InheritanceReport check_inheritance(const FiniteRing& s, const FiniteRing& r,
                                    const SemidirectSpec& spec);

}  // namespace finring

#endif
