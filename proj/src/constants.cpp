#include "gsp4/constants.hpp"

#include <stdexcept>
#include <string>

namespace gsp4 {

namespace {

void check_weights(long k, long kprime) {
    if (kprime < 0 || k < kprime)
        throw std::invalid_argument("weights need k >= k' >= 0, got (" + std::to_string(k) + "," +
                                    std::to_string(kprime) + ")");
}

BigRational fact(long n) {
    if (n < 0) throw std::logic_error("factorial of a negative integer in a numerator");
    return BigRational(factorial(static_cast<unsigned long>(n)));
}

BigRational sign(long e) { return e % 2 == 0 ? BigRational(1) : BigRational(-1); }

BigRational prefactor(long K) {
    return sign(K) * fact(K) * fact(K + 4) / 36;
}

BigRational power_of_two(long e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return BigRational(p);
}

}  // namespace

LevelFactor LevelFactor::of(unsigned long n) {
    if (n == 0) throw std::invalid_argument("level must be a positive integer");
    LevelFactor lf;
    lf.level = n;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        m /= p;
        if (m % p == 0) throw std::invalid_argument("level " + std::to_string(n) + " is not square-free");
        lf.primes.push_back(p);
    }
    if (m > 1) lf.primes.push_back(m);
    return lf;
}

// ---------------------------------------------------------------------------

BigRational r_coefficient(long K, long i, long u, long r) {
    return fact(K + u - i) * fact(K + 4 - i) * fact(i + r - u) * inverse_factorial(i - u) * inverse_factorial(K - i) *
           inverse_factorial(K + 4 - i - r + u);
}

BigRational s_coefficient(long K, long i, long u) { return fact(i - u) * inverse_factorial(K - i + u); }

BigRational t_coefficient(long K, long i, long u, long r) {
    return fact(K + 4 + u - r - i) * inverse_factorial(i + r - u);
}

CoefficientTriple coefficient_triple(long k, long kprime, long i, long u, long uprime, long r) {
    long K = k + kprime;
    if (i - u < 0) throw std::invalid_argument("coefficient triple needs i >= u");
    return {r_coefficient(K, i, u, r) * r_coefficient(K, i - u + uprime, uprime, r), s_coefficient(K, i, u),
            t_coefficient(K, i, u, r)};
}

BigRational coefficient_ratio(long K, long i, long u, long uprime, long r) {
    return pochhammer(K - i + 1, 4) * pochhammer(K - i + u - uprime + 1, 4) *
           pochhammer(i - u + 1, static_cast<unsigned long>(r)) /
           pochhammer(K - i + u + 1, static_cast<unsigned long>(4 - r));
}

const std::array<BigRational, 5>& alternation_table() {
    static const std::array<BigRational, 5> a = {make_rational(-1), make_rational(-1, 4), make_rational(1, 72),
                                                 make_rational(-1, 72), make_rational(-1, 576)};
    return a;
}

BigRational alternation_sum() {
    BigRational s = 0;
    for (long r = 0; r <= 4; ++r)
        s += sign(r) * alternation_table()[static_cast<std::size_t>(r)] * BigRational(binomial(4, r)) * fact(r) * fact(r);
    return s;
}

BigRational sum_rising4(long m) {
    BigRational s = 0;
    for (long i = 0; i <= m; ++i) s += pochhammer(i + 1, 4);
    return s;
}

// ---------------------------------------------------------------------------

BigRational cprime_unconstrained(long k, long kprime) {
    check_weights(k, kprime);
    long K = k + kprime;
    BigRational total = 0;
    for (long r = 0; r <= 4; ++r) {
        const BigRational& a = alternation_table()[static_cast<std::size_t>(r)];
        for (long i = 0; i <= K; ++i)
            for (long u = 0; u <= r; ++u)
                for (long up = 0; up <= r; ++up)
                    total += sign(r + u + up) * a * BigRational(binomial(r, u) * binomial(r, up)) *
                             coefficient_ratio(K, i, u, up, r);
    }
    return prefactor(K) * total;
}

BigRational cprime(long k, long kprime) {
    check_weights(k, kprime);
    long K = k + kprime;
    BigRational total = 0;
    for (long r = 0; r <= 4; ++r) {
        const BigRational& a = alternation_table()[static_cast<std::size_t>(r)];
        for (long i = 0; i <= K; ++i)
            for (long u = 0; u <= r && u <= i; ++u)
                for (long up = 0; up <= r; ++up) {
                    CoefficientTriple c = coefficient_triple(k, kprime, i, u, up, r);
                    total += sign(r + u + up) * a * BigRational(binomial(r, u) * binomial(r, up)) * c.product();
                }
    }
    BigRational literal = prefactor(K) * total;
    if (literal != cprime_unconstrained(k, kprime))
        throw std::logic_error("constrained and unconstrained forms of C' disagree");
    return literal;
}

BigRational c_closed(long k, long kprime) {
    check_weights(k, kprime);
    long K = k + kprime;
    return sign(K) * fact(K + 4) * fact(K + 5) / 135;
}

std::size_t check_coefficient_identity(long K) {
    std::size_t count = 0;
    for (long r = 0; r <= 4; ++r)
        for (long i = 0; i <= K; ++i)
            for (long u = 0; u <= r && u <= i; ++u)
                for (long up = 0; up <= r; ++up) {
                    BigRational lhs = r_coefficient(K, i, u, r) * r_coefficient(K, i - u + up, up, r) *
                                      s_coefficient(K, i, u) * t_coefficient(K, i, u, r);
                    if (lhs != coefficient_ratio(K, i, u, up, r))
                        throw std::logic_error("coefficient identity fails at K=" + std::to_string(K) +
                                               " i=" + std::to_string(i) + " u=" + std::to_string(u) +
                                               " u'=" + std::to_string(up) + " r=" + std::to_string(r));
                    ++count;
                }
    return count;
}

SimplificationTrace simplification_trace(long k, long kprime) {
    check_weights(k, kprime);
    long K = k + kprime;
    if (K > 20) throw std::invalid_argument("simplification trace is limited to k + k' <= 20");
    const auto& a = alternation_table();
    SimplificationTrace tr;
    tr.tuples_checked = check_coefficient_identity(K);

    tr.forms[0] = cprime_unconstrained(k, kprime);

    BigRational second = 0;
    for (long r = 0; r <= 4; ++r)
        for (long i = 0; i <= K; ++i)
            for (long u = 0; u <= r; ++u)
                second += sign(r + u) * a[static_cast<std::size_t>(r)] * BigRational(binomial(r, u) * binomial(4, r)) *
                          fact(r) * pochhammer(K - i + 1, 4) * pochhammer(i - u + 1, static_cast<unsigned long>(r));
    tr.forms[1] = prefactor(K) * second;

    BigRational third = 0;
    for (long r = 0; r <= 4; ++r)
        for (long i = 0; i <= K; ++i)
            third += sign(r) * a[static_cast<std::size_t>(r)] * BigRational(binomial(4, r)) * fact(r) * fact(r) *
                     pochhammer(K - i + 1, 4);
    tr.forms[2] = prefactor(K) * third;

    tr.rising_sum_form = prefactor(K) * alternation_sum() * sum_rising4(K);
    tr.forms[3] = c_closed(k, kprime);

    for (std::size_t j = 1; j < 4; ++j)
        if (tr.forms[j] != tr.forms[0]) throw std::logic_error("simplification step " + std::to_string(j) + " changes the value");
    if (tr.rising_sum_form != tr.forms[0]) throw std::logic_error("rising-sum form changes the value");
    return tr;
}

// ---------------------------------------------------------------------------

BigRational c_level(const LevelFactor& n) {
    BigRational c = 1;
    for (unsigned long l : n.primes) {
        BigRational lq(static_cast<long>(l));
        c /= (lq + 1 / lq) * (lq * lq + 1);
    }
    return c;
}

BigRational ichino_local_factor(unsigned long l) {
    if (!is_prime(l)) throw std::invalid_argument(std::to_string(l) + " is not prime");
    BigRational lq(static_cast<long>(l));
    BigRational inv = 1 / lq;
    BigRational via_zeta = inv * (1 - inv * inv) / (1 - inv * inv * inv * inv);
    BigRational closed = 1 / (lq + inv);
    if (via_zeta != closed) throw std::logic_error("local factor formulas disagree at l=" + std::to_string(l));
    return closed;
}

PiQuantity ichino_global_factor() {
    PiQuantity z2(zeta_even_over_pi(2), 2), z4(zeta_even_over_pi(4), 4);
    return PiQuantity(4, 0) * z2.inverse() * z4.inverse();
}

PiQuantity ichino_archimedean_factor(long lambda1, long lambda2) {
    long e = lambda1 - lambda2 + 5;
    if (e < 0) throw std::invalid_argument("archimedean factor needs lambda1 - lambda2 >= -5");
    return PiQuantity(power_of_two(e) / (1 + lambda1 - lambda2), 3 * lambda1 - lambda2 + 5);
}

IchinoBreakdown ichino_breakdown(long k, long kprime, const LevelFactor& n) {
    check_weights(k, kprime);
    long K = k + kprime;
    IchinoBreakdown b;
    b.global = ichino_global_factor();
    b.archimedean = ichino_archimedean_factor(k + 3, -kprime - 1);
    b.local = 1;
    for (unsigned long l : n.primes) b.local *= ichino_local_factor(l);
    b.assembled = b.global * b.archimedean * PiQuantity(b.local, 0);
    BigRational level = 1;
    for (unsigned long l : n.primes) {
        BigRational lq(static_cast<long>(l));
        level /= lq + 1 / lq;
    }
    b.displayed = PiQuantity(power_of_two(K + 13) * 135 * level / (K + 5), 3 * k + kprime + 9);
    return b;
}

PiQuantity ichino_constant(long k, long kprime, const LevelFactor& n) {
    IchinoBreakdown b = ichino_breakdown(k, kprime, n);
    if (b.assembled != b.displayed) throw std::logic_error("Ichino constant assembly does not match its closed form");
    return b.assembled;
}

PiQuantity petersson_pairing_constant(long k, long kprime, const LevelFactor& n) {
    BigRational c = cprime(k, kprime) / 135;
    for (unsigned long l : n.primes) c /= BigRational(static_cast<long>(l * l + 1));
    return PiQuantity(c, 3);
}

PiQuantity main1_displayed(long k, long kprime, const LevelFactor& n) {
    check_weights(k, kprime);
    long K = k + kprime;
    return PiQuantity(power_of_two(K + 13) * c_closed(k, kprime) * c_level(n) / (K + 5), 3 * k + kprime + 12);
}

bool main1_assembly_check(long k, long kprime, const LevelFactor& n) {
    PiQuantity assembled = petersson_pairing_constant(k, kprime, n) * ichino_constant(k, kprime, n);
    PiQuantity displayed = main1_displayed(k, kprime, n);
    return assembled == displayed && 3 + (3 * k + kprime + 9) == displayed.pi_exp();
}

PiQuantity main1_constant(long k, long kprime, const LevelFactor& n) {
    if (!main1_assembly_check(k, kprime, n))
        throw std::logic_error("assembled constant does not match the product of its factors");
    return main1_displayed(k, kprime, n);
}

PiQuantity xi_even(long s) {
    if (s < 2 || s % 2 != 0) throw std::invalid_argument("xi_even needs an even s >= 2");
    return PiQuantity(BigRational(gamma_positive_integer(s / 2)) * zeta_even_over_pi(s), s - s / 2);
}

PiQuantity siegel_volume() { return PiQuantity(2, 0) * xi_even(2) * xi_even(4); }

}  // namespace gsp4
