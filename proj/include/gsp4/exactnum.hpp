#pragma once

// Exact scalar arithmetic: big rationals, the quartic field Q(i, sqrt 2),
// pi-monomials, p-adic valuations and the combinatorial primitives used by
// the constant engine.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gsp4 {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error on a zero denominator.
BigRational make_rational(const BigInt& num, const BigInt& den = 1);

/// Parses "a", "-a/b" (base 10). Throws std::invalid_argument on bad input.
BigRational parse_rational(const std::string& text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

/// Decimal rendering with `digits` significant digits, for display only.
std::string to_decimal(const BigRational& q, int digits = 20);

bool is_integer(const BigRational& q);

// ---------------------------------------------------------------------------
// Q(i, sqrt 2)

/// Element c0 + c1*i + c2*sqrt2 + c3*i*sqrt2 of the biquadratic field Q(i, sqrt 2).
class QuadGaussian {
public:
    QuadGaussian() = default;
    QuadGaussian(long v) : c_{BigRational(v), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
    QuadGaussian(const BigRational& v) : c_{v, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
    QuadGaussian(BigRational c0, BigRational c1, BigRational c2, BigRational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static QuadGaussian i() { return {0, 1, 0, 0}; }
    static QuadGaussian sqrt2() { return {0, 0, 1, 0}; }

    const BigRational& coord(int k) const { return c_[k]; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    /// The rational value; throws std::domain_error if the element is not in Q.
    BigRational to_rational() const;

    /// Complex conjugation i -> -i (fixes sqrt 2).
    QuadGaussian conj() const { return {c_[0], -c_[1], c_[2], -c_[3]}; }
    /// The other generator of the Galois group, sqrt2 -> -sqrt2 (fixes i).
    QuadGaussian conj_sqrt2() const { return {c_[0], c_[1], -c_[2], -c_[3]}; }

    /// Throws std::domain_error on zero.
    QuadGaussian inverse() const;

    QuadGaussian operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
    QuadGaussian& operator+=(const QuadGaussian& o);
    QuadGaussian& operator-=(const QuadGaussian& o);
    QuadGaussian& operator*=(const QuadGaussian& o);
    QuadGaussian& operator/=(const QuadGaussian& o) { return *this *= o.inverse(); }

    friend QuadGaussian operator+(QuadGaussian a, const QuadGaussian& b) { return a += b; }
    friend QuadGaussian operator-(QuadGaussian a, const QuadGaussian& b) { return a -= b; }
    friend QuadGaussian operator*(QuadGaussian a, const QuadGaussian& b) { return a *= b; }
    friend QuadGaussian operator/(QuadGaussian a, const QuadGaussian& b) { return a /= b; }
    friend bool operator==(const QuadGaussian& a, const QuadGaussian& b) {
        return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] && a.c_[3] == b.c_[3];
    }
    friend bool operator!=(const QuadGaussian& a, const QuadGaussian& b) { return !(a == b); }

    std::string to_string() const;

private:
    BigRational c_[4];
};

std::ostream& operator<<(std::ostream& os, const QuadGaussian& x);

// ---------------------------------------------------------------------------
// q * pi^e

/// Exact monomial coeff * pi^pi_exp. Addition is only defined for equal exponents.
class PiQuantity {
public:
    PiQuantity() = default;
    PiQuantity(BigRational coeff, long pi_exp) : coeff_(std::move(coeff)), pi_exp_(pi_exp) {}

    const BigRational& coeff() const { return coeff_; }
    long pi_exp() const { return pi_exp_; }

    PiQuantity inverse() const;
    PiQuantity pow(long n) const;

    /// Throws std::domain_error when the pi exponents differ.
    PiQuantity& operator+=(const PiQuantity& o);
    PiQuantity& operator-=(const PiQuantity& o);
    PiQuantity& operator*=(const PiQuantity& o);
    PiQuantity& operator/=(const PiQuantity& o) { return *this *= o.inverse(); }

    friend PiQuantity operator+(PiQuantity a, const PiQuantity& b) { return a += b; }
    friend PiQuantity operator-(PiQuantity a, const PiQuantity& b) { return a -= b; }
    friend PiQuantity operator*(PiQuantity a, const PiQuantity& b) { return a *= b; }
    friend PiQuantity operator/(PiQuantity a, const PiQuantity& b) { return a /= b; }
    friend bool operator==(const PiQuantity& a, const PiQuantity& b) {
        return a.coeff_ == b.coeff_ && a.pi_exp_ == b.pi_exp_;
    }
    friend bool operator!=(const PiQuantity& a, const PiQuantity& b) { return !(a == b); }

    /// e.g. "8192/5*pi^9".
    std::string to_string() const;
    /// Decimal approximation of the whole quantity (pi included), display only.
    std::string to_decimal(int digits = 20) const;

private:
    BigRational coeff_{0};
    long pi_exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PiQuantity& x);

// ---------------------------------------------------------------------------
// p-adic valuations

/// v_p of a rational number; value is empty for x = 0 (v_p(0) = +infinity).
struct LocalValuation {
    unsigned long prime = 2;
    std::optional<long> value;

    bool is_infinite() const { return !value.has_value(); }
};

LocalValuation valuation(const BigRational& x, unsigned long p);
/// v_p(x) for nonzero x. Throws std::domain_error on zero.
long valuation_finite(const BigRational& x, unsigned long p);
long valuation_finite(const BigInt& x, unsigned long p);

bool is_prime(const BigInt& n);
bool is_prime(unsigned long n);

// ---------------------------------------------------------------------------
// combinatorics

BigInt factorial(unsigned long n);
/// 1/n! with the reciprocal-Gamma convention 1/n! = 0 for n < 0.
BigRational inverse_factorial(long n);
/// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// Rising factorial x(x+1)...(x+n-1); 1 for n = 0.
BigRational pochhammer(long x, unsigned long n);

/// Evaluates both sides of
///   sum_{a=0}^{l} (-1)^a C(l,a) (b-a)_m  =  C(m,l) l! (b)_{m-l}
/// and reports whether they agree. Requires 0 <= l <= m.
bool pochhammer_identity_check(long b, unsigned long l, unsigned long m);
BigRational pochhammer_identity_lhs(long b, unsigned long l, unsigned long m);
BigRational pochhammer_identity_rhs(long b, unsigned long l, unsigned long m);

/// Bernoulli number B_n, convention B_1 = -1/2.
BigRational bernoulli(unsigned long n);

/// zeta(n)/pi^n for even n >= 2. Throws std::invalid_argument otherwise.
BigRational zeta_even_over_pi(long n);

/// Gamma at a positive integer, (n-1)!.
BigInt gamma_positive_integer(long n);

}  // namespace gsp4
