#pragma once

// Integer factorisation, polynomials over F_p and their factorisation,
// Hermite reduction over Z.

#include <map>
#include <utility>
#include <vector>

#include "gsp4/exactnum.hpp"

namespace gsp4 {

/// Prime factorisation of |n| (n != 0), primes ascending. Trial division then Pollard-Brent rho.
std::map<BigInt, unsigned> factor_integer(const BigInt& n);

/// Dense polynomial over F_p, ascending coefficients in [0, p), no trailing zeros (zero = empty).
using PolyModP = std::vector<BigInt>;

PolyModP poly_reduce(const std::vector<BigInt>& coeffs_ascending, const BigInt& p);
PolyModP poly_add(const PolyModP& a, const PolyModP& b, const BigInt& p);
PolyModP poly_sub(const PolyModP& a, const PolyModP& b, const BigInt& p);
PolyModP poly_mul(const PolyModP& a, const PolyModP& b, const BigInt& p);
/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<PolyModP, PolyModP> poly_divmod(const PolyModP& a, const PolyModP& b, const BigInt& p);
PolyModP poly_gcd(PolyModP a, PolyModP b, const BigInt& p);
PolyModP poly_monic(const PolyModP& a, const BigInt& p);
PolyModP poly_powmod(PolyModP base, BigInt e, const PolyModP& mod, const BigInt& p);
inline long poly_degree(const PolyModP& a) { return static_cast<long>(a.size()) - 1; }

/// Monic irreducible factors with multiplicity. Factors are sorted by their
/// descending coefficient lists (lexicographic). p must be prime; the input nonzero.
std::vector<std::pair<PolyModP, unsigned>> factor_mod_p(const PolyModP& f, const BigInt& p);

/// Descending coefficient list of a polynomial (leading coefficient first).
std::vector<BigInt> descending(const PolyModP& a);

/// Row-style Hermite reduction over Z: returns the nonzero rows of an echelon
/// basis of the Z-span of `rows`, pivots positive.
std::vector<std::vector<BigInt>> integer_hermite(std::vector<std::vector<BigInt>> rows);

}  // namespace gsp4
