#pragma once

// Lattices over Z_(p) inside Q^n, Gram discriminants, duals and dual indices,
// the split/project duality, square classes of p-units, and congruence primes
// between two Hecke eigen systems.

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gsp4/exactnum.hpp"
#include "gsp4/linalg.hpp"

namespace gsp4 {

using RationalMatrix = Matrix<BigRational>;
using RationalVector = std::vector<BigRational>;

/// Full-rank Z_(p)-lattice; the rows of `basis` are its basis vectors.
struct LatticeZp {
    unsigned long p = 2;
    RationalMatrix basis;

    /// Throws std::invalid_argument if p is not prime or the basis is not square and invertible.
    static LatticeZp make(unsigned long p, RationalMatrix basis);

    std::size_t dim() const { return basis.rows(); }
};

/// <x, y> = x G y^T. `alternating` records whether G is antisymmetric rather than symmetric.
struct BilinearForm {
    RationalMatrix gram;
    bool alternating = false;

    /// Throws std::invalid_argument unless G is square and (anti)symmetric as flagged.
    static BilinearForm make(RationalMatrix gram, bool alternating);
};

bool p_integral(const BigRational& x, unsigned long p);
bool p_integral(const RationalMatrix& m, unsigned long p);

/// Coordinates of x in the basis of L lie in Z_(p).
bool contains(const LatticeZp& lattice, const RationalVector& x);
bool is_sublattice(const LatticeZp& inner, const LatticeZp& outer);
bool same_lattice(const LatticeZp& a, const LatticeZp& b);

/// B G B^T for the basis B of L.
RationalMatrix gram_matrix(const LatticeZp& lattice, const BilinearForm& form);

/// det of the Gram matrix. Throws std::invalid_argument when some pairing is not p-integral.
BigRational gram_discriminant(const LatticeZp& lattice, const BilinearForm& form);

/// L* = {x : <x, y> in Z_(p) for all y in L}. Throws std::invalid_argument when the form is degenerate.
LatticeZp dual_lattice(const LatticeZp& lattice, const BilinearForm& form);

/// Exponents e_i of the elementary divisors p^{e_i} of a rational matrix over Z_(p) (one per unit of rank).
std::vector<long> local_elementary_divisors(const RationalMatrix& m, unsigned long p);

/// [L* : L]. Throws std::invalid_argument unless L is contained in L*.
BigInt dual_index(const LatticeZp& lattice, const BilinearForm& form);

/// With W1 = V e and W2 = V (1 - e) orthogonal, checks that the projection of L to W1
/// equals the dual of L ∩ W1 inside W1. Vectors are rows, so e acts by x -> x e.
/// Throws std::invalid_argument if e is not idempotent, the splitting is not
/// orthogonal, or L is not self-dual.
bool split_project_duality_check(const LatticeZp& lattice, const BilinearForm& form, const RationalMatrix& splitter);

/// x = s y with s a square of a unit in Z_(p). Throws std::invalid_argument on zero inputs or non-prime p.
bool similar_mod_unit_squares(const BigRational& x, const BigRational& y, unsigned long p);

/// Random instances for property checks.
struct LatticeSample {
    LatticeZp lattice;
    BilinearForm form;
    RationalMatrix splitter;  // empty unless produced by random_split_instance
};

/// Integer basis (first row scaled by p) and integer nondegenerate Gram matrix, so L is in L*.
LatticeSample random_integral_instance(std::mt19937_64& rng, std::size_t n, unsigned long p, bool alternating);

/// Self-dual L with an orthogonal idempotent e = G A^T (A G A^T)^{-1} A of random rank
/// (even when alternating; n must then be even).
LatticeSample random_split_instance(std::mt19937_64& rng, std::size_t n, unsigned long p, bool alternating);

// ---------------------------------------------------------------------------
// eigen systems and congruences

/// Hecke eigenvalues in Z[x]/(f): min_poly lists f's coefficients from the leading
/// one (which must be 1) down; each value lists coordinates over 1, x, ..., x^{deg f - 1}.
/// A system with rational integer values uses min_poly = [1, 0].
struct EigenSystem {
    std::vector<BigInt> min_poly;
    std::map<std::string, std::vector<BigInt>> values;

    std::size_t degree() const { return min_poly.empty() ? 0 : min_poly.size() - 1; }
    /// Throws std::invalid_argument for a non-monic or constant polynomial, bad labels or too many coordinates.
    void validate() const;
};

/// n for a label "T_n" (n >= 1), otherwise nothing.
std::optional<long> hecke_label_index(const std::string& label);

struct CongruencePrime {
    BigInt prime;
    /// Monic irreducible factors mod p of the two minimal polynomials (descending coefficients).
    std::vector<BigInt> factor_a, factor_b;
    /// Dimension over F_p of the residue ring of (p, factor_a(x), factor_b(y), differences).
    std::size_t residue_dimension = 0;
};

struct CongruenceScan {
    /// The differences have a common zero over C: congruent modulo every prime.
    bool identical = false;
    std::size_t labels_compared = 0;
    /// Order of Z[x,y]/(f, g, differences); zero when identical.
    BigInt index;
    std::vector<CongruencePrime> primes;  // ascending
};

/// Compares the operators T_n with n <= bound. Throws std::invalid_argument with
/// "empty comparison range" when bound < 1, and on label mismatches or invalid systems.
CongruenceScan congruence_prime_scan(const EigenSystem& a, const EigenSystem& b, long bound);

}  // namespace gsp4
