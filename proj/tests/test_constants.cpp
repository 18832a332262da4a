#include "doctest.h"

#include <random>

#include "gsp4/constants.hpp"

using namespace gsp4;

namespace {

BigRational q(long n, long d = 1) { return make_rational(n, d); }

BigRational pow2(unsigned long e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
    return BigRational(p);
}

}  // namespace

TEST_CASE("level factors") {
    CHECK(LevelFactor::of(1).primes.empty());
    CHECK(LevelFactor::of(30).primes == std::vector<unsigned long>{2, 3, 5});
    CHECK(LevelFactor::of(691).primes == std::vector<unsigned long>{691});
    CHECK_THROWS_AS(LevelFactor::of(12), std::invalid_argument);
    CHECK_THROWS_AS(LevelFactor::of(0), std::invalid_argument);
    CHECK(c_level(LevelFactor::of(1)) == 1);
    CHECK(c_level(LevelFactor::of(2)) == q(2, 25));
    CHECK(c_level(LevelFactor::of(6)) == q(3, 1250));
}

TEST_CASE("C' and its closed form") {
    CHECK(cprime(0, 0) == q(64, 3));
    CHECK(cprime(1, 0) == -640);
    CHECK(cprime(2, 1) == -BigRational(factorial(7) * factorial(8)) / 135);
    CHECK(c_closed(0, 0) == q(64, 3));
    CHECK(c_closed(1, 0) == -640);
    for (long k = 0; k <= 12; ++k)
        for (long kp = 0; kp <= k; ++kp) {
            BigRational c = c_closed(k, kp);
            CHECK(cprime(k, kp) == c);
            CHECK((c > 0) == ((k + kp) % 2 == 0));
            BigRational scaled = c * 135;
            CHECK(is_integer(scaled));
            CHECK(mpz_divisible_p(scaled.get_num_mpz_t(), BigInt(24 * 120).get_mpz_t()));
        }
    CHECK_THROWS_AS(cprime(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(c_closed(1, -1), std::invalid_argument);
}

TEST_CASE("coefficients of the sum") {
    // (K,i,u,u',r) = (1,0,0,0,0)
    CoefficientTriple c = coefficient_triple(1, 0, 0, 0, 0, 0);
    CHECK(c.product() == coefficient_ratio(1, 0, 0, 0, 0));
    CHECK(c.product() == 120);
    CHECK(pochhammer(2, 4) * pochhammer(2, 4) == 14400);
    // the second r-factor vanishes once i - u + u' exceeds k + k'
    CHECK(coefficient_triple(1, 0, 1, 0, 1, 1).r_val == 0);
    CHECK(coefficient_ratio(1, 1, 0, 1, 1) == 0);
    CHECK_THROWS_AS(coefficient_triple(1, 0, 0, 1, 0, 1), std::invalid_argument);
    for (long K = 0; K <= 8; ++K) CHECK(check_coefficient_identity(K) > 0);
}

TEST_CASE("side identities") {
    CHECK(alternation_sum() == q(4, 3));
    CHECK(sum_rising4(1) == 144);
    CHECK(pochhammer(2, 5) / 5 == 144);
    for (long m = 0; m <= 30; ++m) CHECK(sum_rising4(m) == pochhammer(m + 1, 5) / 5);
}

TEST_CASE("simplification trace") {
    SimplificationTrace tr = simplification_trace(1, 0);
    for (const auto& f : tr.forms) CHECK(f == -640);
    CHECK(tr.rising_sum_form == -640);
    CHECK(tr.tuples_checked > 0);
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> pick(0, 20);
    for (int trial = 0; trial < 20; ++trial) {
        long k = pick(rng), kp = pick(rng);
        if (kp > k) std::swap(k, kp);
        if (k + kp > 20) kp = 20 - k;
        if (kp > k) kp = k;
        INFO(k << "," << kp);
        SimplificationTrace t = simplification_trace(k, kp);
        CHECK(t.forms[0] == t.forms[1]);
        CHECK(t.forms[1] == t.forms[2]);
        CHECK(t.forms[2] == t.forms[3]);
    }
    CHECK_THROWS_AS(simplification_trace(15, 10), std::invalid_argument);
}

TEST_CASE("Ichino factors") {
    CHECK(ichino_local_factor(2) == q(2, 5));
    CHECK(ichino_local_factor(3) == q(3, 10));
    for (unsigned long l = 2; l <= 100; ++l)
        if (is_prime(l)) CHECK_NOTHROW(ichino_local_factor(l));
    CHECK_THROWS_AS(ichino_local_factor(9), std::invalid_argument);
    CHECK(ichino_global_factor() == PiQuantity(16 * 27 * 5, -6));
    for (long k = 0; k <= 6; ++k)
        for (long kp = 0; kp <= k; ++kp)
            CHECK(ichino_archimedean_factor(k + 3, -kp - 1) ==
                  PiQuantity(pow2(static_cast<unsigned long>(k + kp + 9)) / (k + kp + 5), 3 * k + kp + 15));
    CHECK(ichino_constant(0, 0, LevelFactor::of(1)) == PiQuantity(pow2(13) * 27, 9));
    IchinoBreakdown b = ichino_breakdown(2, 1, LevelFactor::of(6));
    CHECK(b.assembled == b.displayed);
    CHECK(b.local == q(2, 5) * q(3, 10));
}

TEST_CASE("Petersson and assembled constants") {
    CHECK(petersson_pairing_constant(0, 0, LevelFactor::of(1)) == PiQuantity(q(64, 405), 3));
    CHECK(petersson_pairing_constant(1, 0, LevelFactor::of(1)) == PiQuantity(q(-128, 27), 3));
    CHECK(petersson_pairing_constant(1, 0, LevelFactor::of(2)) == PiQuantity(q(-128, 135), 3));
    CHECK(main1_constant(0, 0, LevelFactor::of(1)) == PiQuantity(pow2(13) * q(64, 3) / 5, 12));
    for (long k = 0; k <= 8; ++k)
        for (long kp = 0; kp <= k; ++kp)
            for (unsigned long n : {1UL, 2UL, 3UL, 5UL, 6UL, 7UL, 10UL}) {
                LevelFactor lf = LevelFactor::of(n);
                CHECK(main1_assembly_check(k, kp, lf));
                PiQuantity m = main1_constant(k, kp, lf);
                CHECK(m.pi_exp() == 3 * k + kp + 12);
                // no stray 3^3 * 5: the coefficient is 2^{K+13} C C_N / (K+5)
                CHECK(m.coeff() * (k + kp + 5) / pow2(static_cast<unsigned long>(k + kp + 13)) ==
                      c_closed(k, kp) * c_level(lf));
            }
    // pi^3/135 = 2 * pi^3/270
    CHECK(PiQuantity(q(1, 135), 3) == PiQuantity(2, 0) * siegel_volume());
}

TEST_CASE("Siegel volume") {
    CHECK(xi_even(2) == PiQuantity(q(1, 6), 1));
    CHECK(xi_even(4) == PiQuantity(q(1, 90), 2));
    CHECK(siegel_volume() == PiQuantity(q(1, 270), 3));
    CHECK_THROWS_AS(xi_even(3), std::invalid_argument);
}
