#pragma once

// Archimedean and level constants: the quadruple sum C'_{k,k'}, its closed
// form C_{k,k'}, the chain of simplifications between them, the Ichino-type
// Petersson constant, C_N, the Siegel volume and the assembled constant.

#include <array>
#include <vector>

#include "gsp4/exactnum.hpp"

namespace gsp4 {

/// Square-free level N with its prime divisors (ascending).
struct LevelFactor {
    unsigned long level = 1;
    std::vector<unsigned long> primes;

    /// Throws std::invalid_argument when n = 0 or n is not square-free.
    static LevelFactor of(unsigned long n);
};

// ---------------------------------------------------------------------------
// coefficients of the quadruple sum (K = k + k'); 1/n! = 0 for n < 0

BigRational r_coefficient(long K, long i, long u, long r);
BigRational s_coefficient(long K, long i, long u);
BigRational t_coefficient(long K, long i, long u, long r);

struct CoefficientTriple {
    BigRational r_val;  // r_{i,u,r} * r_{i-u+u',u',r}
    BigRational s_val;
    BigRational t_val;

    BigRational product() const { return r_val * s_val * t_val; }
};

CoefficientTriple coefficient_triple(long k, long kprime, long i, long u, long uprime, long r);

/// (K-i+1)_4 (K-i+u-u'+1)_4 (i-u+1)_r / (K-i+u+1)_{4-r}
BigRational coefficient_ratio(long K, long i, long u, long uprime, long r);

/// a_0..a_4 = (-1, -1/4, 1/72, -1/72, -1/576).
const std::array<BigRational, 5>& alternation_table();

/// sum_r (-1)^r a_r C(4,r) (r!)^2
BigRational alternation_sum();

/// sum_{i=0}^{m} (i+1)_4
BigRational sum_rising4(long m);

// ---------------------------------------------------------------------------

/// The quadruple sum, constrained index range. Also evaluates the unconstrained
/// Pochhammer form and throws std::logic_error if they differ.
/// Throws std::invalid_argument unless k >= k' >= 0.
BigRational cprime(long k, long kprime);
BigRational cprime_unconstrained(long k, long kprime);

/// (-1)^{k+k'} (k+k'+4)! (k+k'+5)! / (3^3 * 5)
BigRational c_closed(long k, long kprime);

struct SimplificationTrace {
    /// Pochhammer-ratio form, after the first collapse, after the second collapse, closed form.
    std::array<BigRational, 4> forms;
    /// The 4/3 * sum (i'+1)_4 form between the second collapse and the closed form.
    BigRational rising_sum_form;
    /// Index tuples on which r r s t was checked against the Pochhammer ratio.
    std::size_t tuples_checked = 0;
};

/// Throws std::invalid_argument for invalid weights or k + k' > 20, std::logic_error on any mismatch.
SimplificationTrace simplification_trace(long k, long kprime);

/// Checks r r s t = Pochhammer ratio on every index tuple of the literal sum; returns the count.
/// Throws std::logic_error on a mismatch.
std::size_t check_coefficient_identity(long K);

// ---------------------------------------------------------------------------

/// prod_{l | N} (l + 1/l)^{-1} (l^2 + 1)^{-1}
BigRational c_level(const LevelFactor& n);

/// (1/l)(1 - l^-2)/(1 - l^-4), checked against (l + 1/l)^{-1}. Throws std::invalid_argument unless l is prime.
BigRational ichino_local_factor(unsigned long l);

/// 2^2 zeta(2)^{-1} zeta(4)^{-1}
PiQuantity ichino_global_factor();
/// 2^{l1-l2+5} pi^{3 l1 - l2 + 5} (1 + l1 - l2)^{-1}
PiQuantity ichino_archimedean_factor(long lambda1, long lambda2);

struct IchinoBreakdown {
    PiQuantity global;
    PiQuantity archimedean;
    BigRational local;
    PiQuantity assembled;  // product of the three
    PiQuantity displayed;  // 2^{k+k'+13} 3^3 5 pi^{3k+k'+9} / (k+k'+5) * prod (l + 1/l)^{-1}
};

IchinoBreakdown ichino_breakdown(long k, long kprime, const LevelFactor& n);
/// Throws std::logic_error when the assembled and displayed forms differ.
PiQuantity ichino_constant(long k, long kprime, const LevelFactor& n);

/// (pi^3 / 135) C'_{k,k'} prod_{l | N} (l^2 + 1)^{-1}
PiQuantity petersson_pairing_constant(long k, long kprime, const LevelFactor& n);

/// 2^{k+k'+13} C_{k,k'} C_N pi^{3k+k'+12} / (k+k'+5), checked against
/// petersson_pairing_constant * ichino_constant. Throws std::logic_error on mismatch.
PiQuantity main1_constant(long k, long kprime, const LevelFactor& n);
PiQuantity main1_displayed(long k, long kprime, const LevelFactor& n);
bool main1_assembly_check(long k, long kprime, const LevelFactor& n);

/// xi(s) = pi^{-s/2} Gamma(s/2) zeta(s) for even s >= 2.
PiQuantity xi_even(long s);
/// 2 xi(2) xi(4)
PiQuantity siegel_volume();

}  // namespace gsp4
