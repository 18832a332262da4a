#include "doctest.h"

#include "gsp4/modforms.hpp"
#include "gsp4/parallel.hpp"

using namespace gsp4;

namespace {

BigRational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("q-series arithmetic") {
    QSeries a({q(1), q(2), q(3)}), b({q(0), q(1), q(1), q(5)});
    CHECK((a + b).precision() == 2);
    CHECK((a * b).coeffs() == std::vector<BigRational>{q(0), q(1), q(3)});
    CHECK((a - a).coeffs() == std::vector<BigRational>{q(0), q(0), q(0)});
    CHECK(a.pow(0).coeffs() == std::vector<BigRational>{q(1), q(0), q(0)});
    CHECK(a.pow(2).coeffs() == std::vector<BigRational>{q(1), q(4), q(10)});
    CHECK((q(1, 2) * a)[2] == q(3, 2));
    CHECK_THROWS_AS(a[3], std::out_of_range);
    CHECK_THROWS_AS(QSeries(std::vector<BigRational>{}), std::invalid_argument);
}

TEST_CASE("divisor sums") {
    CHECK(divisor_sigma(0, 12) == 6);
    CHECK(divisor_sigma(1, 12) == 28);
    CHECK(divisor_sigma(11, 1) == 1);
    CHECK(divisor_sigma(11, 2) == 2049);
    CHECK(divisor_sigma(3, 9) == 1 + 27 + 729);
    CHECK_THROWS_AS(divisor_sigma(1, 0), std::invalid_argument);
}

TEST_CASE("Eisenstein series") {
    QSeries e4 = eisenstein(4, 10), e6 = eisenstein(6, 10), e12 = eisenstein(12, 10);
    CHECK(e4[0] == 1);
    CHECK(e4[1] == 240);
    CHECK(e4[2] == 240 * 9);
    CHECK(e6[1] == -504);
    CHECK(e6[2] == -504 * 33);
    CHECK(e12[0] == 1);
    CHECK(e12[1] == q(65520, 691));
    CHECK(-BigRational(24) / bernoulli(12) == q(65520, 691));
    CHECK(eisenstein(8, 10) == e4 * e4);
    CHECK(eisenstein(10, 10) == e4 * e6);
    CHECK_THROWS_AS(eisenstein(5, 10), std::invalid_argument);
    CHECK_THROWS_AS(eisenstein(2, 10), std::invalid_argument);
}

TEST_CASE("Delta") {
    QSeries d = delta(30);
    CHECK(d[0] == 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == -24);
    CHECK(d[3] == 252);
    CHECK(d[4] == -1472);
    CHECK(d[5] == 4830);
    CHECK(d[6] == -6048);
    CHECK(d[7] == -16744);
    CHECK(d[11] == 534612);
    QSeries raw = eisenstein(4, 30).pow(3) - eisenstein(6, 30).pow(2);
    CHECK(raw[0] == 0);
    CHECK(raw[1] == 1728);
    CHECK_THROWS_AS(delta(1), std::invalid_argument);
    // Delta = q prod (1 - q^n)^24
    QSeries prod = QSeries::zero(30);
    std::vector<BigRational> c(31, 0);
    c[1] = 1;
    prod = QSeries(c);
    for (long n = 1; n <= 30; ++n) {
        std::vector<BigRational> f(31, 0);
        f[0] = 1;
        f[static_cast<std::size_t>(n)] = -1;
        prod = prod * QSeries(f).pow(24);
    }
    CHECK(prod == d);
}

TEST_CASE("Hecke operators") {
    QSeries d = delta(60);
    CHECK(hecke_operator(d, 12, 1) == d);
    CHECK(hecke_operator(d, 12, 1).precision() == 60);
    QSeries t2 = hecke_operator(d, 12, 2);
    CHECK(t2.precision() == 30);
    CHECK(t2 == q(-24) * d);
    CHECK(hecke_operator(d, 12, 3) == q(252) * d);
    QSeries t6 = hecke_operator(d, 12, 6);
    QSeries t2t3 = hecke_operator(hecke_operator(d, 12, 3), 12, 2);
    CHECK(t6.precision() == 10);
    CHECK(t2t3.precision() == 10);
    CHECK(t6 == t2t3);
    CHECK(hecke_operator(d, 12, 4) == hecke_operator(t2, 12, 2) - q(2048) * d);
    CHECK_THROWS_AS(hecke_operator(d, 12, 2, 31), std::invalid_argument);
    CHECK_THROWS_AS(hecke_operator(d, 12, 0), std::invalid_argument);

    QSeries e4 = eisenstein(4, 40);
    CHECK(hecke_operator(e4, 4, 2) == BigRational(divisor_sigma(3, 2)) * e4);
    CHECK(hecke_operator(e4, 4, 5) == BigRational(divisor_sigma(3, 5)) * e4);
}

TEST_CASE("echelon basis") {
    CHECK(modular_dimension(0) == 1);
    CHECK(modular_dimension(2) == 0);
    CHECK(modular_dimension(12) == 2);
    CHECK(modular_dimension(14) == 1);
    CHECK(modular_dimension(24) == 3);
    CHECK_THROWS_AS(echelon_basis(2, 10), std::invalid_argument);
    CHECK_THROWS_AS(echelon_basis(24, 1), std::invalid_argument);
    for (long k = 4; k <= 36; k += 2) {
        if (k == 2) continue;
        auto basis = echelon_basis(k, 40);
        REQUIRE(static_cast<long>(basis.size()) == modular_dimension(k));
        long dim = static_cast<long>(basis.size());
        for (long i = 0; i < dim; ++i)
            for (long j = 0; j < dim; ++j) CHECK(basis[static_cast<std::size_t>(i)][j] == (i == j ? 1 : 0));
        // T_2 maps the span into itself: T_2 f = sum_i a_i(T_2 f) f_i.
        for (const auto& f : basis) {
            QSeries t2 = hecke_operator(f, k, 2);
            QSeries comb = QSeries::zero(t2.precision());
            for (long i = 0; i < dim; ++i) comb = comb + t2[i] * basis[static_cast<std::size_t>(i)];
            CHECK(comb == t2);
        }
    }
    auto b12 = echelon_basis(12, 20);
    CHECK(b12[1] == delta(20));
}

TEST_CASE("cusp eigen systems") {
    HeckeEigenSystem d = cusp_eigensystem(12, 100);
    CHECK(d[2] == -24);
    CHECK(d[4] == -1472);
    CHECK(d[4] == d[2] * d[2] - 2048);
    CHECK(d.bound() == 100);
    CHECK(cusp_eigensystem(16, 20)[2] == 216);
    CHECK(cusp_eigensystem(18, 20)[2] == -528);
    CHECK(cusp_eigensystem(20, 20)[2] == 456);
    CHECK(cusp_eigensystem(22, 20)[2] == -288);
    CHECK(cusp_eigensystem(26, 20)[2] == -48);
    for (long k : {12l, 16l, 18l, 20l, 22l, 26l}) CHECK_NOTHROW(cusp_eigensystem(k, 60).check_hecke_relations());
    for (long k : {10l, 14l, 24l, 13l, 28l}) CHECK_THROWS_AS(cusp_eigensystem(k, 20), std::invalid_argument);

    HeckeEigenSystem broken = d;
    broken.eigenvalues[6] += 1;
    CHECK_THROWS_AS(broken.check_hecke_relations(), std::logic_error);
    broken = d;
    broken.eigenvalues[8] += 1;
    CHECK_THROWS_AS(broken.check_hecke_relations(), std::logic_error);

    EigenSystem e = cusp_eigensystem(12, 10).as_eigen_system();
    CHECK(e.min_poly == std::vector<BigInt>{1, 0});
    CHECK(e.values.size() == 10);
    CHECK(e.values.at("T_3") == std::vector<BigInt>{252});
}

TEST_CASE("Eisenstein eigen systems and the 691 congruence") {
    HeckeEigenSystem e = eisenstein_eigensystem(12, 100);
    CHECK(e[2] == 2049);
    CHECK(divisor_sigma(11, 2) - cusp_eigensystem(12, 2)[2] == 2073);
    CHECK(BigInt(2073) == 3 * 691);
    CHECK(zeta_even_over_pi(12).get_num() == 691);
    CHECK(eisenstein_congruence_demo(200) == std::pair<long, long>{691, 200});
    CHECK(eisenstein_congruence_demo(50) == std::pair<long, long>{691, 50});
    CHECK_THROWS_AS(eisenstein_congruence_demo(49), std::invalid_argument);

    CongruenceScan s = congruence_prime_scan(cusp_eigensystem(12, 100).as_eigen_system(), e.as_eigen_system(), 100);
    CHECK_FALSE(s.identical);
    CHECK(s.index == 691);
    REQUIRE(s.primes.size() == 1);
    CHECK(s.primes[0].prime == 691);
    CHECK(congruence_prime_scan(cusp_eigensystem(12, 50).as_eigen_system(), e.as_eigen_system(), 50).index == 691);
}

TEST_CASE("results do not depend on the thread count") {
    set_default_threads(1);
    QSeries one = delta(80);
    HeckeEigenSystem a = cusp_eigensystem(16, 40);
    set_default_threads(4);
    CHECK(delta(80).coeffs() == one.coeffs());
    CHECK(cusp_eigensystem(16, 40).eigenvalues == a.eigenvalues);
    set_default_threads(1);
}
