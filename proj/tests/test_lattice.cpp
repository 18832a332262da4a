#include "doctest.h"

#include <random>

#include "gsp4/lattice.hpp"
#include "gsp4/numtheory.hpp"

using namespace gsp4;

namespace {

BigRational q(long n, long d = 1) { return make_rational(n, d); }

RationalMatrix diag(std::vector<BigRational> d) {
    RationalMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

RationalMatrix random_integer(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
    return m;
}

RationalMatrix random_rational(std::mt19937_64& rng, std::size_t n, unsigned long p) {
    std::uniform_int_distribution<long> num(-9, 9), den(0, 2);
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            long e = den(rng);
            BigRational d = 1;
            for (long k = 0; k < e; ++k) d *= BigRational(static_cast<long>(p));
            m(r, c) = BigRational(num(rng)) / (d * (1 + (r + c) % 2));
        }
    return m;
}

bool unimodular_at(const RationalMatrix& m, unsigned long p) {
    BigRational d = determinant(m);
    return p_integral(m, p) && d != 0 && valuation_finite(d, p) == 0;
}

RationalMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, unsigned long p) {
    for (;;) {
        RationalMatrix m = random_integer(rng, n, n, -6, 6);
        if (unimodular_at(m, p)) return m;
    }
}

RationalMatrix random_nonsingular(std::mt19937_64& rng, std::size_t n, unsigned long p) {
    for (;;) {
        RationalMatrix m = random_rational(rng, n, p);
        if (determinant(m) != 0) return m;
    }
}

RationalMatrix standard_alternating(std::size_t n) {
    RationalMatrix j(n, n);
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        j(i, i + 1) = 1;
        j(i + 1, i) = -1;
    }
    return j;
}

BigInt p_part(const BigRational& x, unsigned long p) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), p, static_cast<unsigned long>(valuation_finite(x, p)));
    return out;
}

}  // namespace

TEST_CASE("lattice construction and membership") {
    CHECK_THROWS_AS(LatticeZp::make(6, RationalMatrix::identity(2)), std::invalid_argument);
    CHECK_THROWS_AS(LatticeZp::make(5, RationalMatrix(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(LatticeZp::make(5, RationalMatrix(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(BilinearForm::make(RationalMatrix::from_rows({{q(1), q(2)}, {q(3), q(1)}}), false),
                    std::invalid_argument);
    CHECK_THROWS_AS(BilinearForm::make(RationalMatrix::identity(2), true), std::invalid_argument);
    CHECK_NOTHROW(BilinearForm::make(standard_alternating(4), true));

    LatticeZp l = LatticeZp::make(5, diag({q(1), q(5)}));
    CHECK(contains(l, {q(1, 3), q(10)}));
    CHECK_FALSE(contains(l, {q(1), q(1)}));
    CHECK_FALSE(contains(l, {q(1, 5), q(0)}));
    CHECK(is_sublattice(l, LatticeZp::make(5, RationalMatrix::identity(2))));
    CHECK_FALSE(is_sublattice(LatticeZp::make(5, RationalMatrix::identity(2)), l));
    CHECK(same_lattice(l, LatticeZp::make(5, RationalMatrix::from_rows({{q(2), q(5)}, {q(0), q(15)}}))));
}

TEST_CASE("gram discriminant examples") {
    for (unsigned long p : {2ul, 5ul, 7ul, 691ul}) {
        BilinearForm id = BilinearForm::make(RationalMatrix::identity(3), false);
        CHECK(gram_discriminant(LatticeZp::make(p, RationalMatrix::identity(3)), id) == 1);
        BigRational pq(static_cast<long>(p));
        CHECK(gram_discriminant(LatticeZp::make(p, diag({q(1), q(1), pq})), id) == pq * pq);
    }
    BilinearForm id = BilinearForm::make(RationalMatrix::identity(2), false);
    CHECK_THROWS_AS(gram_discriminant(LatticeZp::make(5, diag({q(1), q(1, 5)})), id), std::invalid_argument);
    CHECK(gram_discriminant(LatticeZp::make(5, diag({q(1), q(1, 3)})), id) == q(1, 9));

    std::mt19937_64 rng(691);
    for (int t = 0; t < 30; ++t) {
        RationalMatrix b = random_integer(rng, 4, 4, -20, 20);
        RationalMatrix g = random_integer(rng, 4, 4, -20, 20);
        g = g + g.transpose();
        if (determinant(b) == 0) continue;
        BigRational db = determinant(b);
        CHECK(gram_discriminant(LatticeZp::make(691, b), BilinearForm::make(g, false)) == db * db * determinant(g));
    }
}

TEST_CASE("discriminant square class is basis independent") {
    std::mt19937_64 rng(11);
    for (unsigned long p : {2ul, 3ul, 5ul, 691ul})
        for (int t = 0; t < 20; ++t) {
            RationalMatrix b = random_integer(rng, 3, 3, -9, 9);
            RationalMatrix g = random_integer(rng, 3, 3, -9, 9);
            g = g + g.transpose();
            if (determinant(b) == 0 || determinant(g) == 0) continue;
            BilinearForm form = BilinearForm::make(g, false);
            BigRational d1 = gram_discriminant(LatticeZp::make(p, b), form);
            BigRational d2 = gram_discriminant(LatticeZp::make(p, random_unimodular(rng, 3, p) * b), form);
            CHECK(similar_mod_unit_squares(d1, d2, p));
        }
}

TEST_CASE("dual lattice examples") {
    BilinearForm id = BilinearForm::make(RationalMatrix::identity(2), false);
    LatticeZp std2 = LatticeZp::make(5, RationalMatrix::identity(2));
    CHECK(same_lattice(dual_lattice(std2, id), std2));
    LatticeZp l = LatticeZp::make(5, diag({q(1), q(5)}));
    CHECK(same_lattice(dual_lattice(l, id), LatticeZp::make(5, diag({q(1), q(1, 5)}))));
    CHECK_THROWS_AS(dual_lattice(l, BilinearForm::make(RationalMatrix::from_rows({{q(1), q(1)}, {q(1), q(1)}}), false)),
                    std::invalid_argument);

    std::mt19937_64 rng(50);
    for (unsigned long p : {5ul, 7ul, 691ul})
        for (int t = 0; t < 50; ++t) {
            LatticeZp lat = LatticeZp::make(p, random_nonsingular(rng, 3, p));
            RationalMatrix g = random_rational(rng, 3, p);
            g = g + g.transpose();
            if (determinant(g) == 0) continue;
            BilinearForm form = BilinearForm::make(g, false);
            LatticeZp d = dual_lattice(lat, form);
            CHECK(same_lattice(dual_lattice(d, form), lat));
            CHECK(p_integral(lat.basis * g * d.basis.transpose(), p));
        }
}

TEST_CASE("dual is inclusion reversing") {
    std::mt19937_64 rng(3);
    for (unsigned long p : {5ul, 7ul})
        for (int t = 0; t < 30; ++t) {
            LatticeZp outer = LatticeZp::make(p, random_nonsingular(rng, 3, p));
            RationalMatrix c = random_integer(rng, 3, 3, -5, 5);
            if (determinant(c) == 0) continue;
            LatticeZp inner = LatticeZp::make(p, c * outer.basis);
            REQUIRE(is_sublattice(inner, outer));
            RationalMatrix g = random_integer(rng, 3, 3, -5, 5);
            g = g + g.transpose();
            if (determinant(g) == 0) continue;
            BilinearForm form = BilinearForm::make(g, false);
            CHECK(is_sublattice(dual_lattice(outer, form), dual_lattice(inner, form)));
        }
}

TEST_CASE("local elementary divisors") {
    CHECK(local_elementary_divisors(diag({q(1), q(25)}), 5) == std::vector<long>{0, 2});
    CHECK(local_elementary_divisors(diag({q(1, 5), q(3)}), 5) == std::vector<long>{-1, 0});
    CHECK(local_elementary_divisors(RationalMatrix::from_rows({{q(5), q(5)}, {q(5), q(10)}}), 5) ==
          std::vector<long>{1, 1});
    CHECK(local_elementary_divisors(RationalMatrix::from_rows({{q(1), q(2)}, {q(2), q(4)}}), 5).size() == 1);
}

TEST_CASE("dual index examples and discriminant identity") {
    BilinearForm id = BilinearForm::make(RationalMatrix::identity(2), false);
    for (unsigned long p : {5ul, 7ul, 691ul}) {
        BigInt pz(p);
        CHECK(dual_index(LatticeZp::make(p, RationalMatrix::identity(2)), id) == 1);
        CHECK(dual_index(LatticeZp::make(p, diag({q(1), BigRational(pz)})), id) == pz * pz);
    }
    CHECK_THROWS_AS(dual_index(LatticeZp::make(5, diag({q(1), q(1, 5)})), id), std::invalid_argument);
    CHECK_THROWS_AS(dual_index(LatticeZp::make(5, RationalMatrix::identity(2)),
                               BilinearForm::make(RationalMatrix::from_rows({{q(1), q(1)}, {q(1), q(1)}}), false)),
                    std::invalid_argument);

    std::mt19937_64 rng(4);
    for (unsigned long p : {5ul, 7ul, 691ul}) {
        int done = 0;
        while (done < 50) {
            RationalMatrix b = random_integer(rng, 4, 4, -12, 12);
            RationalMatrix g = random_integer(rng, 4, 4, -12, 12);
            bool alt = done % 3 == 0;
            g = alt ? g - g.transpose() : g + g.transpose();
            BigRational pq(static_cast<long>(p));
            b(0, 0) *= pq;
            if (determinant(b) == 0 || determinant(g) == 0) continue;
            LatticeZp l = LatticeZp::make(p, b);
            BilinearForm form = BilinearForm::make(g, alt);
            BigRational disc = gram_discriminant(l, form);
            CHECK(dual_index(l, form) == p_part(disc, p));
            ++done;
        }
    }
}

TEST_CASE("split projection duality") {
    BilinearForm id = BilinearForm::make(RationalMatrix::identity(2), false);
    LatticeZp std2 = LatticeZp::make(5, RationalMatrix::identity(2));
    CHECK(split_project_duality_check(std2, id, RationalMatrix::identity(2)));
    CHECK(split_project_duality_check(std2, id, RationalMatrix(2, 2)));
    RationalMatrix half = RationalMatrix::from_rows({{q(1, 2), q(1, 2)}, {q(1, 2), q(1, 2)}});
    CHECK(split_project_duality_check(std2, id, half));
    CHECK(split_project_duality_check(LatticeZp::make(2, RationalMatrix::identity(2)), id, half));

    CHECK_THROWS_AS(split_project_duality_check(std2, id, RationalMatrix::from_rows({{q(1), q(1)}, {q(0), q(0)}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(split_project_duality_check(std2, id, RationalMatrix::from_rows({{q(1), q(1)}, {q(0), q(1)}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(split_project_duality_check(LatticeZp::make(5, diag({q(1), q(5)})), id, half),
                    std::invalid_argument);

    std::mt19937_64 rng(100);
    int checked = 0;
    for (unsigned long p : {5ul, 691ul, 2ul, 7ul})
        for (int t = 0; t < 30; ++t) {
            LatticeSample s = random_split_instance(rng, 4, p, t % 2 == 1);
            CHECK(split_project_duality_check(s.lattice, s.form, s.splitter));
            ++checked;
        }
    CHECK(checked >= 100);

    for (int t = 0; t < 20; ++t) {
        LatticeSample s = random_split_instance(rng, 4, 5, false);
        RationalMatrix e = s.splitter;
        std::size_t r = rank(e);
        if (r == 0 || r == 4) continue;
        RationalMatrix a = random_integer(rng, 4, 4, -3, 3);
        RationalMatrix shear = RationalMatrix::identity(4) + e * a * (RationalMatrix::identity(4) - e);
        RationalMatrix bad = shear * e * inverse(shear);
        if (bad * s.form.gram * (RationalMatrix::identity(4) - bad).transpose() == RationalMatrix(4, 4)) continue;
        CHECK_THROWS_AS(split_project_duality_check(s.lattice, s.form, bad), std::invalid_argument);
    }
}

TEST_CASE("square classes of p-units") {
    CHECK(similar_mod_unit_squares(q(18), q(2), 5));
    CHECK(similar_mod_unit_squares(q(2), q(3), 5));
    CHECK_FALSE(similar_mod_unit_squares(q(5), q(1), 5));
    CHECK_FALSE(similar_mod_unit_squares(q(2), q(1), 5));
    CHECK(similar_mod_unit_squares(q(4), q(1), 5));
    CHECK(similar_mod_unit_squares(q(1, 4), q(9, 7), 3) == false);
    CHECK(similar_mod_unit_squares(q(50), q(2), 5) == false);
    CHECK(similar_mod_unit_squares(q(17), q(1), 2));
    CHECK_FALSE(similar_mod_unit_squares(q(5), q(1), 2));
    CHECK_FALSE(similar_mod_unit_squares(q(2), q(1), 2));
    CHECK(similar_mod_unit_squares(q(12), q(3, 4), 2) == false);
    CHECK(similar_mod_unit_squares(q(12), q(3, 16), 2) == false);
    CHECK(similar_mod_unit_squares(q(-7), q(1), 2));
    CHECK(similar_mod_unit_squares(q(-1), q(1), 5));
    CHECK_FALSE(similar_mod_unit_squares(q(-1), q(1), 7));
    CHECK_THROWS_AS(similar_mod_unit_squares(q(0), q(1), 5), std::invalid_argument);
    CHECK_THROWS_AS(similar_mod_unit_squares(q(1), q(1), 9), std::invalid_argument);

    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 691ul})
        for (long a = 1; a < 40; ++a)
            for (long s = 1; s < 12; ++s) {
                if (s % static_cast<long>(p) == 0) continue;
                CHECK(similar_mod_unit_squares(q(a * s * s), q(a), p));
            }
}

TEST_CASE("factorisation helpers") {
    auto f = factor_integer(BigInt(2073));
    CHECK(f == std::map<BigInt, unsigned>{{BigInt(3), 1}, {BigInt(691), 1}});
    CHECK(factor_integer(BigInt(-360)) == std::map<BigInt, unsigned>{{BigInt(2), 3}, {BigInt(3), 2}, {BigInt(5), 1}});
    BigInt big = BigInt("1000000007") * BigInt("998244353") * 691;
    CHECK(factor_integer(big).size() == 3);
    CHECK(factor_integer(big).count(BigInt("998244353")) == 1);

    BigInt p(7);
    // x^2 + 1 is irreducible mod 7, splits mod 5.
    CHECK(factor_mod_p(poly_reduce({1, 0, 1}, p), p).size() == 1);
    auto split5 = factor_mod_p(poly_reduce({1, 0, 1}, BigInt(5)), BigInt(5));
    REQUIRE(split5.size() == 2);
    CHECK(descending(split5[0].first) == std::vector<BigInt>{1, 2});
    CHECK(descending(split5[1].first) == std::vector<BigInt>{1, 3});
    // (x + 1)^3 (x^2 + x + 1) mod 2.
    BigInt two(2);
    PolyModP g = poly_mul(poly_mul(poly_reduce({1, 1}, two), poly_mul(poly_reduce({1, 1}, two), poly_reduce({1, 1}, two), two), two),
                          poly_reduce({1, 1, 1}, two), two);
    auto f2 = factor_mod_p(g, two);
    REQUIRE(f2.size() == 2);
    CHECK(descending(f2[0].first) == std::vector<BigInt>{1, 1});
    CHECK(f2[0].second == 3);
    CHECK(descending(f2[1].first) == std::vector<BigInt>{1, 1, 1});
    CHECK(f2[1].second == 1);

    std::mt19937_64 rng(9);
    for (unsigned long pr : {2ul, 3ul, 13ul, 691ul}) {
        BigInt pp(pr);
        std::uniform_int_distribution<unsigned long> coef(0, pr - 1);
        for (int t = 0; t < 20; ++t) {
            std::vector<BigInt> c(7);
            for (auto& x : c) x = coef(rng);
            c.back() = 1;
            PolyModP poly = poly_reduce(c, pp);
            PolyModP prod{BigInt(1)};
            for (const auto& [fac, m] : factor_mod_p(poly, pp)) {
                CHECK(fac.back() == 1);
                for (unsigned k = 0; k < m; ++k) prod = poly_mul(prod, fac, pp);
            }
            CHECK(prod == poly);
        }
    }

    auto h = integer_hermite({{4, 6}, {6, 9}, {2, 0}});
    REQUIRE(h.size() == 2);
    CHECK(h[0][0] * h[1][1] == 6);
}

TEST_CASE("eigen system validation") {
    EigenSystem ok{{1, 0}, {{"T_2", {5}}}};
    CHECK_NOTHROW(ok.validate());
    CHECK_THROWS_AS((EigenSystem{{2, 1}, {{"T_2", {5}}}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((EigenSystem{{1}, {{"T_2", {5}}}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((EigenSystem{{1, 0}, {{"U_2", {5}}}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((EigenSystem{{1, 0}, {{"T_2", {5, 1}}}}.validate()), std::invalid_argument);
    CHECK(hecke_label_index("T_12") == 12);
    CHECK_FALSE(hecke_label_index("T_0"));
    CHECK_FALSE(hecke_label_index("T_02"));
    CHECK_FALSE(hecke_label_index("T_"));
    CHECK_FALSE(hecke_label_index("T_2a"));
}

TEST_CASE("congruence scan on integer systems") {
    EigenSystem a{{1, 0}, {{"T_2", {0}}}}, b{{1, 0}, {{"T_2", {15}}}};
    CongruenceScan s = congruence_prime_scan(a, b, 2);
    CHECK_FALSE(s.identical);
    CHECK(s.index == 15);
    REQUIRE(s.primes.size() == 2);
    CHECK(s.primes[0].prime == 3);
    CHECK(s.primes[1].prime == 5);
    CHECK(s.primes[0].factor_a == std::vector<BigInt>{1, 0});
    CHECK(s.primes[0].residue_dimension == 1);

    CHECK(congruence_prime_scan(a, a, 5).identical);
    CHECK(congruence_prime_scan(a, EigenSystem{{1, 0}, {{"T_2", {1}}}}, 2).primes.empty());
    CHECK_THROWS_WITH_AS(congruence_prime_scan(a, b, 0), "empty comparison range", std::invalid_argument);
    CHECK_THROWS_AS(congruence_prime_scan(a, EigenSystem{{1, 0}, {{"T_3", {1}}}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(congruence_prime_scan(a, EigenSystem{{3, 0}, {{"T_2", {1}}}}, 3), std::invalid_argument);
    // Labels above the bound are ignored.
    CHECK(congruence_prime_scan(EigenSystem{{1, 0}, {{"T_2", {0}}, {"T_7", {1}}}}, b, 2).index == 15);
    CHECK(congruence_prime_scan(EigenSystem{{1, 0}, {{"T_2", {0}}, {"T_3", {2}}}},
                                EigenSystem{{1, 0}, {{"T_2", {15}}, {"T_3", {7}}}}, 3)
              .index == 5);
}

TEST_CASE("congruence scan over number fields") {
    // a = x in Z[x]/(x^2 - 5) against b = 0: (sqrt5) lies above 5 only.
    EigenSystem a{{1, 0, -5}, {{"T_2", {0, 1}}}}, z{{1, 0}, {{"T_2", {0}}}};
    CongruenceScan s = congruence_prime_scan(a, z, 2);
    CHECK(s.index == 5);
    REQUIRE(s.primes.size() == 1);
    CHECK(s.primes[0].factor_a == std::vector<BigInt>{1, 0});

    // 1 + i against 0 in Z[i]: the prime above 2.
    EigenSystem g{{1, 0, 1}, {{"T_2", {1, 1}}}};
    CongruenceScan t = congruence_prime_scan(g, z, 2);
    CHECK(t.index == 2);
    REQUIRE(t.primes.size() == 1);
    CHECK(t.primes[0].factor_a == std::vector<BigInt>{1, 1});

    // 2 + i has norm 5; of the two ideals above 5 it lies in (5, x + 2).
    EigenSystem h{{1, 0, 1}, {{"T_2", {2, 1}}}};
    CongruenceScan u = congruence_prime_scan(h, z, 2);
    CHECK(u.index == 5);
    REQUIRE(u.primes.size() == 1);
    CHECK(u.primes[0].factor_a == std::vector<BigInt>{1, 2});

    // Two conjugate systems in the same field differ by 2x, compared in the compositum.
    EigenSystem c1{{1, 0, 1}, {{"T_2", {0, 1}}}}, c2{{1, 0, 1}, {{"T_2", {0, -1}}}};
    CongruenceScan w = congruence_prime_scan(c1, c2, 2);
    CHECK(w.identical);

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> v(-40, 40);
    for (int t = 0; t < 25; ++t) {
        EigenSystem x{{1, 0, -2}, {{"T_2", {v(rng), v(rng)}}, {"T_3", {v(rng), v(rng)}}}};
        EigenSystem y{{1, 0}, {{"T_2", {v(rng)}}, {"T_3", {v(rng)}}}};
        CongruenceScan xy = congruence_prime_scan(x, y, 3), yx = congruence_prime_scan(y, x, 3);
        CHECK(xy.identical == yx.identical);
        CHECK(xy.index == yx.index);
        REQUIRE(xy.primes.size() == yx.primes.size());
        for (std::size_t k = 0; k < xy.primes.size(); ++k) {
            CHECK(xy.primes[k].prime == yx.primes[k].prime);
            CHECK(xy.primes[k].factor_a == yx.primes[k].factor_b);
            CHECK(xy.primes[k].residue_dimension == yx.primes[k].residue_dimension);
        }
    }
}

TEST_CASE("random instance generators") {
    std::mt19937_64 rng(5);
    for (unsigned long p : {5ul, 7ul, 691ul})
        for (int t = 0; t < 10; ++t) {
            LatticeSample s = random_integral_instance(rng, 4, p, t % 2 == 0);
            CHECK(p_integral(gram_matrix(s.lattice, s.form), p));
            CHECK(dual_index(s.lattice, s.form) == p_part(gram_discriminant(s.lattice, s.form), p));
            CHECK(dual_index(s.lattice, s.form) >= BigInt(p) * p);
            LatticeSample sp = random_split_instance(rng, 4, p, t % 2 == 0);
            CHECK(same_lattice(dual_lattice(sp.lattice, sp.form), sp.lattice));
            CHECK(sp.splitter * sp.splitter == sp.splitter);
        }
    CHECK_THROWS_AS(random_split_instance(rng, 3, 5, true), std::invalid_argument);
}
