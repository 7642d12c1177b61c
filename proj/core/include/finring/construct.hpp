#ifndef FINRING_CONSTRUCT_HPP
#define FINRING_CONSTRUCT_HPP

#include <vector>

#include "finring/ring.hpp"

namespace finring {

bool is_prime(int n);

/// Z/nZ with addition and multiplication mod n; n >= 1. n = 1 yields the
/// zero ring (unital with 1 = 0).
FiniteRing make_zmod(int n);

/// The field of order p^k as a polynomial quotient by a fixed irreducible
/// polynomial from the built-in table (one per (p,k) with p^k <= 512).
/// Element i has base-p digits (c0..c_{k-1}) with c0 the constant term,
/// so 0 is the zero and 1 the multiplicative identity.
FiniteRing make_gf(int p, int k);

/// Monic coefficient vector (ascending degree, leading 1 implicit absent)
/// of the polynomial used by make_gf(p, k) for k >= 2.
const std::vector<int>& gf_modulus(int p, int k);

/// Componentwise product ring; unital iff both factors are. Pair (r, s)
/// gets index r*|S| + s and label "(r,s)".
FiniteRing make_product(const FiniteRing& r, const FiniteRing& s);

/// Ring of all functions from an x_size-point set into the field kappa,
/// i.e. the x_size-fold componentwise power. Constants embed kappa on the
/// diagonal. For x_size = 2 the tables coincide with make_product(k, k).
FiniteRing make_function_ring(int x_size, const FiniteRing& kappa);

/// Quotient kappa[x]/<f> for a monic f of degree >= 1 given by ascending
/// coefficients (kappa element indices, last entry = leading = 1). The
/// elements are residue polynomials of degree < deg f.
FiniteRing make_poly_quotient(const FiniteRing& kappa,
                              const std::vector<int>& monic_coeffs);

}  // namespace finring

#endif
