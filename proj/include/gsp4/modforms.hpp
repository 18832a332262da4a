#pragma once

// Level-1 modular forms as exact q-expansions: Eisenstein series, Delta,
// the echelon basis of M_k, Hecke operators, eigen systems and the 691 congruence.

#include <utility>
#include <vector>

#include "gsp4/exactnum.hpp"
#include "gsp4/lattice.hpp"

namespace gsp4 {

/// a_0 + a_1 q + ... + a_B q^B + O(q^{B+1}).
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(std::vector<BigRational> coeffs);
    static QSeries zero(long precision);

    long precision() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Throws std::out_of_range beyond the precision.
    const BigRational& operator[](long n) const;
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    QSeries truncate(long precision) const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const BigRational& s, const QSeries& a);
    /// Equal up to the smaller precision.
    friend bool operator==(const QSeries& a, const QSeries& b);

    QSeries pow(unsigned e) const;

private:
    std::vector<BigRational> coeffs_;
};

/// Sum of d^k over the positive divisors d of n >= 1.
BigInt divisor_sigma(unsigned k, long n);

/// E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n. Throws std::invalid_argument for odd k or k < 4.
QSeries eisenstein(long k, long precision);

/// (E_4^3 - E_6^2) / 1728. Throws std::invalid_argument for precision < 2.
QSeries delta(long precision);

/// a_m(T_n f) = sum over d | (m, n) of d^{k-1} a_{mn/d^2}(f), for m <= target.
/// Throws std::invalid_argument when n < 1 or n * target exceeds the precision of f.
QSeries hecke_operator(const QSeries& f, long weight, long n, long target);
/// Largest available target, floor(precision / n).
QSeries hecke_operator(const QSeries& f, long weight, long n);

/// Monomials E_4^a E_6^b of weight k, row-reduced so that element i is q^i + O(q^dim).
/// Throws std::invalid_argument for odd or negative k, k = 2, or precision < dim.
std::vector<QSeries> echelon_basis(long k, long precision);

/// dim M_k(SL_2(Z)) for even k >= 0 (0 for odd or negative k).
long modular_dimension(long k);

struct HeckeEigenSystem {
    long weight = 0;
    std::vector<BigInt> eigenvalues;  // index n, entry 0 unused

    long bound() const { return static_cast<long>(eigenvalues.size()) - 1; }
    const BigInt& operator[](long n) const { return eigenvalues.at(static_cast<std::size_t>(n)); }
    /// Throws std::logic_error if multiplicativity or the prime-power recursion fails.
    void check_hecke_relations() const;
    /// min_poly [1, 0] and values T_1..T_bound.
    EigenSystem as_eigen_system() const;
};

/// The normalized cusp eigenform of weight k, for the weights with dim S_k = 1
/// (12, 16, 18, 20, 22, 26). Throws std::invalid_argument otherwise.
HeckeEigenSystem cusp_eigensystem(long k, long bound);

/// Hecke eigenvalues sigma_{k-1}(n) of the Eisenstein series E_k.
HeckeEigenSystem eisenstein_eigensystem(long k, long bound);

/// Verifies tau(n) = sigma_11(n) mod 691 for 1 <= n <= bound and that 691 is the
/// numerator of zeta(12)/pi^12. Returns (691, bound). Throws std::invalid_argument
/// for bound < 50 and std::logic_error on a failed congruence.
std::pair<long, long> eisenstein_congruence_demo(long bound);

}  // namespace gsp4
