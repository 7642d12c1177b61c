#ifndef FINRING_SEMIDIRECT_HPP
#define FINRING_SEMIDIRECT_HPP

#include <array>
#include <string>
#include <vector>

#include "finring/ring.hpp"
#include "finring/structure.hpp"

namespace finring {

/// Action data for a semidirect product B x| S: per S-element, lambda
/// holds a table B -> B acting on the left, rho one acting on the right.
/// The invariants (checked by verify_action_pair, in this order):
///   - each lambda(s) is additive and commutes with right multiplication
///     by B; each rho(s) is additive and commutes with left multiplication
///   - lambda is additive and multiplicative in s; rho is additive and
///     anti-multiplicative in s (composition applies the inner map first:
///     lambda(s*t) = lambda(s) o lambda(t), rho(s*t) = rho(t) o rho(s))
///   - lambda(s) o rho(t) = rho(t) o lambda(s)
///   - rho(s)(x) * y = x * lambda(s)(y)
///   - when S is unital, lambda(1) and rho(1) are the identity
struct SemidirectSpec {
  FiniteRing b;
  FiniteRing s;
  std::vector<std::vector<int>> lambda;  // |S| tables of |B| indices
  std::vector<std::vector<int>> rho;
};

enum class ActionAxiom {
  Structure,
  ModuleEndo,
  HomInS,
  AntiHomInS,
  Commuting,
  MiddleLinearity,
  UnitPreservation,
};

const char* action_axiom_name(ActionAxiom a);

struct ActionReport {
  bool ok = true;
  ActionAxiom axiom = ActionAxiom::Structure;
  std::array<int, 3> witness{-1, -1, -1};
  std::string detail;
  explicit operator bool() const { return ok; }
};

/// Checks the SemidirectSpec invariants in the fixed order above and
/// reports the first violation with witness elements.
ActionReport verify_action_pair(const SemidirectSpec& spec);

/// The ring on B x S with componentwise addition and
/// (b,s)(c,t) = (b*c + lambda(s)(c) + rho(t)(b), s*t). Pair (b,s) gets
/// index b*|S| + s and label "(b,s)". Unital with one = (0,1) when S is;
/// a non-unital S is rejected unless allow_rng is set.
FiniteRing build_sdprod(const SemidirectSpec& spec, bool allow_rng = false);

/// Actions of a subfield kappa of r on an ideal m of r, both given by
/// multiplication inside r: B is the rng on m, S the field on kappa,
/// lambda(u)(x) = u*x and rho(u)(x) = x*u.
SemidirectSpec induced_actions(const FiniteRing& r, const IndexSet& kappa,
                               const IdealSubset& m);

/// Actions of a field kappa on an algebra a through an injective unital
/// embedding: lambda(u)(x) = embed(u)*x, rho(u)(x) = x*embed(u).
SemidirectSpec algebra_actions(const FiniteRing& a, const FiniteRing& kappa,
                               const RingHom& embed);

/// The canonical embedding of a prime field into a unital ring of the
/// same characteristic, u -> u-fold sum of 1.
RingHom prime_subfield_embedding(const FiniteRing& a, const FiniteRing& kappa);

/// build_sdprod(algebra_actions(a, kappa, embed)).
FiniteRing algebra_sdprod(const FiniteRing& a, const FiniteRing& kappa,
                          const RingHom& embed);

/// All action pairs (lambda, rho) that pass verify_action_pair, found by
/// assigning candidate additive endomorphisms of B to a greedy additive
/// generating set of S (largest additive order first) and extending by
/// additivity. S must be unital; correctness does not depend on the
/// generating set. Exponential in the generator count, so keep S small.
std::vector<SemidirectSpec> enumerate_action_pairs(const FiniteRing& b,
                                                   const FiniteRing& s);

}  // namespace finring

#endif
