#include "gsp4/suites.hpp"

#include <exception>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "gsp4/constants.hpp"
#include "gsp4/ktypes.hpp"
#include "gsp4/lattice.hpp"
#include "gsp4/liealg.hpp"
#include "gsp4/modforms.hpp"
#include "gsp4/parallel.hpp"

namespace gsp4 {

namespace {

class Tally {
public:
    explicit Tally(CheckResult& r) : r_(r) {}
    void expect(bool cond, const std::string& what) {
        ++r_.total;
        if (cond)
            ++r_.passed;
        else if (r_.detail.empty())
            r_.detail = what;
    }

private:
    CheckResult& r_;
};

CheckResult check(const std::string& name, const std::function<void(Tally&)>& body) {
    CheckResult r;
    r.name = name;
    Tally t(r);
    try {
        body(t);
    } catch (const std::exception& e) {
        ++r.total;
        if (r.detail.empty()) r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

BigRational q(long n, long d = 1) { return make_rational(n, d); }

// ---------------------------------------------------------------------------

std::vector<CheckResult> lie_suite() {
    std::vector<CheckResult> out;
    RootVectors rv = build_root_vectors();
    out.push_back(check("root vectors lie in sp4", [&](Tally& t) {
        for (const auto& [name, m] : rv.named()) t.expect(in_sp4(m), name);
    }));
    out.push_back(check("root vectors are T-eigenvectors with their roots", [&](Tally& t) {
        for (const auto& [alpha, x] : rv.by_root()) {
            std::string label = "(" + std::to_string(alpha.first) + "," + std::to_string(alpha.second) + ")";
            t.expect(verify_root_vector(rv.T1, x, alpha), label + " under T1");
            t.expect(verify_root_vector(rv.T2, x, alpha), label + " under T2");
        }
    }));
    out.push_back(check("Cartan decomposition k + p+ + p-", [&](Tally& t) {
        CartanReport r = cartan_report(rv);
        t.expect(r.dim_sp4 == 10, "dim sp4");
        t.expect(r.dim_k == 4, "dim k");
        t.expect(r.dim_p_plus == 3, "dim p+");
        t.expect(r.dim_p_minus == 3, "dim p-");
        t.expect(r.dim_total == 10, "k + p+ + p- spans");
        t.expect(r.k_preserves_p_plus, "[k, p+] in p+");
        t.expect(r.k_preserves_p_minus, "[k, p-] in p-");
        t.expect(r.p_plus_minus_in_k, "[p+, p-] in k");
        t.expect(r.p_plus_abelian, "p+ abelian");
        t.expect(r.p_minus_abelian, "p- abelian");
    }));
    out.push_back(check("J in Sp4 and J conj(J) = 1", [&](Tally& t) {
        LieMatrix j = cayley_J();
        t.expect(in_Sp4(j), "J in Sp4");
        t.expect(in_Sp4(conj(j)), "conj(J) in Sp4");
        t.expect(j * conj(j) == LieMatrix::identity(4), "J conj(J)");
    }));
    out.push_back(check("conj(J) diagonalises the compact torus", [&](Tally& t) {
        for (long a = -3; a <= 3; ++a)
            for (long b = 1; b <= 3; ++b) t.expect(verify_torus_conjugation(q(a, b), q(b, a == 0 ? 1 : a)), "torus point");
    }));

    struct Case {
        AlgebraicWeight w;
        std::size_t dim;
    };
    const std::vector<Case> cases = {{{1, 0, 1}, 4}, {{1, 1, 0}, 5}, {{2, 0, 2}, 10}, {{0, 0, 0}, 1},
                                     {{2, 1, 1}, 16}, {{3, 0, 1}, 20}, {{2, 2, 0}, 14}};
    std::vector<WeylModule> modules;
    for (const auto& c : cases) modules.push_back(weyl_construct(c.w));
    out.push_back(check("Weyl construction dimensions", [&](Tally& t) {
        for (std::size_t i = 0; i < cases.size(); ++i)
            t.expect(modules[i].dimension == cases[i].dim, to_string(cases[i].w));
    }));
    out.push_back(check("contractions annihilate Weyl modules", [&](Tally& t) {
        for (const auto& m : modules)
            for (const auto& v : m.basis)
                for (std::size_t p = 0; p < m.degree; ++p)
                    for (std::size_t r = p + 1; r < m.degree; ++r) {
                        bool zero = true;
                        for (const auto& x : contract(v, m.degree, p, r)) zero = zero && x == 0;
                        t.expect(zero, to_string(m.weight));
                    }
    }));
    out.push_back(check("Weyl basis vectors are weight vectors", [&](Tally& t) {
        for (const auto& m : modules)
            for (std::size_t j = 0; j < m.basis.size(); ++j) {
                auto w = tensor_weight(m.basis[j], m.degree, m.weight.c);
                t.expect(w && *w == m.weights[j], to_string(m.weight));
            }
    }));
    out.push_back(check("pairing of J w and conj(J) w is nonzero (k + k' <= 2)", [&](Tally& t) {
        for (const auto& m : modules)
            if (m.degree <= 2) t.expect(!transported_pairing(m).is_zero(), to_string(m.weight));
    }));
    return out;
}

// ---------------------------------------------------------------------------

TensorVector tensor(std::initializer_list<std::pair<int, long>> terms) {
    TensorVector v;
    v.fill(QuadGaussian(0));
    for (auto [idx, c] : terms) v[static_cast<std::size_t>(idx - 1)] = QuadGaussian(c);
    return v;
}

TensorVector scaled(TensorVector v, const QuadGaussian& s) {
    for (auto& c : v) c *= s;
    return v;
}

Matrix<BigRational> rational_part(const Matrix9& m) {
    Matrix<BigRational> out(9, 9);
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t c = 0; c < 9; ++c) out(r, c) = m(r, c).to_rational();
    return out;
}

std::vector<CheckResult> ktypes_suite() {
    std::vector<CheckResult> out;
    auto parts = decompose_tensor_space();
    auto find = [&](long k, long kp) -> const TauEmbedding& {
        for (const auto& p : parts)
            if (p.k == k && p.kprime == kp) return p;
        throw std::logic_error("summand tau(" + std::to_string(k) + "," + std::to_string(kp) + ") missing");
    };
    out.push_back(check("9-space = tau(3,-1) + tau(2,0) + tau(1,1)", [&](Tally& t) {
        t.expect(parts.size() == 3, "three summands");
        t.expect(find(3, -1).basis.size() == 5, "tau(3,-1) has dimension 5");
        t.expect(find(2, 0).basis.size() == 3, "tau(2,0) has dimension 3");
        t.expect(find(1, 1).basis.size() == 1, "tau(1,1) has dimension 1");
    }));
    out.push_back(check("standard basis w_4..w_0 (exact)", [&](Tally& t) {
        const auto& w = find(3, -1).basis;
        t.expect(w[4] == tensor({{1, 1}}), "w_4");
        t.expect(w[3] == tensor({{2, -1}, {4, 2}}), "w_3");
        t.expect(w[2] == tensor({{3, 1}, {5, -2}, {7, 1}}), "w_2");
        t.expect(w[1] == tensor({{6, 2}, {8, -1}}), "w_1");
        t.expect(w[0] == tensor({{9, 1}}), "w_0");
    }));
    out.push_back(check("standard basis x_2..x_0 (one common scalar), y_0", [&](Tally& t) {
        const auto& x = find(2, 0).basis;
        QuadGaussian s = x[2][1];
        t.expect(!s.is_zero(), "scalar is nonzero");
        t.expect(x[2] == scaled(tensor({{2, 1}, {4, 2}}), s), "x_2");
        t.expect(x[1] == scaled(tensor({{3, -2}, {7, 2}}), s), "x_1");
        t.expect(x[0] == scaled(tensor({{6, -2}, {8, -1}}), s), "x_0");
        t.expect(find(1, 1).basis[0] == tensor({{3, 1}, {5, 1}, {7, 1}}), "y_0");
    }));
    out.push_back(check("lowering relations LOWER v_s = (d - s + 1) v_{s-1}", [&](Tally& t) {
        for (const auto& p : parts) {
            std::size_t d = p.d();
            for (std::size_t s = 1; s <= d; ++s) {
                auto lowered = adjoint_action_on_tensor(k_generator(TauGenerator::Lower), p.basis[s]);
                t.expect(lowered == scaled(p.basis[s - 1], QuadGaussian(static_cast<long>(d - s + 1))),
                         "tau(" + std::to_string(p.k) + "," + std::to_string(p.kprime) + ") s=" + std::to_string(s));
            }
        }
    }));
    out.push_back(check("highest-weight vectors are killed by RAISE", [&](Tally& t) {
        for (const auto& p : parts) {
            bool zero = true;
            for (const auto& c : adjoint_action_on_tensor(k_generator(TauGenerator::Raise), p.basis[p.d()]))
                zero = zero && c.is_zero();
            t.expect(zero, "tau(" + std::to_string(p.k) + "," + std::to_string(p.kprime) + ")");
        }
    }));
    Matrix<BigRational> proj = projection_onto_31(), ref = reference_projection_31();
    out.push_back(check("projection matrix entries", [&](Tally& t) {
        for (std::size_t r = 0; r < 9; ++r)
            for (std::size_t c = 0; c < 9; ++c)
                t.expect(proj(r, c) == ref(r, c), "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
    }));
    out.push_back(check("projection matrix matches reference", [&](Tally& t) { t.expect(proj == ref, "matrix"); }));
    out.push_back(check("projection is an equivariant idempotent of rank 5", [&](Tally& t) {
        t.expect(proj * proj == proj, "P^2 = P");
        t.expect(rank(proj) == 5, "rank 5");
        for (auto g : {TauGenerator::H1, TauGenerator::H2, TauGenerator::Raise, TauGenerator::Lower}) {
            Matrix<BigRational> m = rational_part(adjoint_matrix(k_generator(g)));
            t.expect(proj * m == m * proj, "commutes with " + to_string(g));
        }
        t.expect(proj + equivariant_projection(2, 0) + equivariant_projection(1, 1) == Matrix<BigRational>::identity(9),
                 "projections sum to 1");
    }));
    out.push_back(check("projection as lowering combinations", [&](Tally& t) {
        const std::pair<BigRational, unsigned> expected[9] = {{q(1), 0},     {q(-1, 2), 1}, {q(1, 12), 2},
                                                              {q(1, 4), 1},  {q(-1, 6), 2}, {q(1, 24), 3},
                                                              {q(1, 12), 2}, {q(-1, 12), 3}, {q(1, 24), 4}};
        auto terms = projection_as_lowering_combinations();
        t.expect(terms.size() == 9, "nine terms");
        for (std::size_t j = 0; j < terms.size() && j < 9; ++j)
            t.expect(terms[j].coeff == expected[j].first && terms[j].power == expected[j].second,
                     "b_" + std::to_string(j + 1));
    }));
    out.push_back(check("pairing coefficient vs RAISE^i LOWER^i (d <= 12)", [&](Tally& t) {
        for (unsigned long d = 0; d <= 12; ++d)
            for (unsigned long i = 0; i <= d; ++i) {
                BigRational sign = i % 2 ? BigRational(-1) : BigRational(1);
                t.expect(pairing_coefficient(d, i) == sign * raise_lower_eigenvalue(d, i),
                         "(d,i)=(" + std::to_string(d) + "," + std::to_string(i) + ")");
            }
    }));
    out.push_back(check("[RAISE, LOWER] = H1 - H2 = 2s - d on tau strings (d <= 12)", [&](Tally& t) {
        for (long d = 0; d <= 12; ++d) {
            TauModule m(d - 2, -2);
            for (std::size_t s = 0; s <= static_cast<std::size_t>(d); ++s) {
                auto rl = m.apply(TauGenerator::Raise, tau_action(m, TauGenerator::Lower, s));
                auto lr = m.apply(TauGenerator::Lower, tau_action(m, TauGenerator::Raise, s));
                auto h1 = tau_action(m, TauGenerator::H1, s);
                auto h2 = tau_action(m, TauGenerator::H2, s);
                bool ok = true;
                for (std::size_t j = 0; j < rl.size(); ++j) {
                    BigRational e = j == s ? BigRational(2 * static_cast<long>(s) - d) : BigRational(0);
                    ok = ok && rl[j] - lr[j] == e && h1[j] - h2[j] == e;
                }
                t.expect(ok, "d=" + std::to_string(d) + " s=" + std::to_string(s));
            }
        }
    }));
    return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> constants_suite() {
    std::vector<CheckResult> out;
    out.push_back(check("C' = C for 91 weight pairs", [&](Tally& t) {
        for (long k = 0; k <= 12; ++k)
            for (long kp = 0; kp <= k; ++kp)
                t.expect(cprime(k, kp) == c_closed(k, kp), "(" + std::to_string(k) + "," + std::to_string(kp) + ")");
    }));
    out.push_back(check("pointwise coefficient identity (K <= 12)", [&](Tally& t) {
        for (long K = 0; K <= 12; ++K) t.expect(check_coefficient_identity(K) > 0, "K=" + std::to_string(K));
    }));
    out.push_back(check("simplification chain keeps the value (k + k' <= 8)", [&](Tally& t) {
        for (long k = 0; k <= 8; ++k)
            for (long kp = 0; kp <= k && k + kp <= 8; ++kp) {
                SimplificationTrace tr = simplification_trace(k, kp);
                t.expect(tr.forms[3] == c_closed(k, kp), "(" + std::to_string(k) + "," + std::to_string(kp) + ")");
            }
    }));
    out.push_back(check("alternating sum of the a_r is 4/3", [&](Tally& t) { t.expect(alternation_sum() == q(4, 3), "sum"); }));
    out.push_back(check("Pochhammer binomial identity", [&](Tally& t) {
        for (long b = -10; b <= 10; ++b)
            for (unsigned long m = 0; m <= 8; ++m)
                for (unsigned long l = 0; l <= m; ++l) t.expect(pochhammer_identity_check(b, l, m), "identity");
    }));
    out.push_back(check("sum of (i+1)_4 for i <= m is (m+1)_5 / 5 (m <= 30)", [&](Tally& t) {
        for (long m = 0; m <= 30; ++m) t.expect(sum_rising4(m) == pochhammer(m + 1, 5) / 5, "m=" + std::to_string(m));
    }));
    out.push_back(check("local factors agree (primes < 200)", [&](Tally& t) {
        for (unsigned long l = 2; l < 200; ++l)
            if (is_prime(l)) t.expect(ichino_local_factor(l) == 1 / (BigRational(static_cast<long>(l)) + q(1, static_cast<long>(l))), std::to_string(l));
    }));
    out.push_back(check("global factor is 2160 pi^-6", [&](Tally& t) { t.expect(ichino_global_factor() == PiQuantity(2160, -6), "global"); }));
    const std::vector<unsigned long> levels = {1, 2, 3, 5, 6, 7, 10, 30, 691};
    out.push_back(check("Ichino constant assembly (k <= 8)", [&](Tally& t) {
        for (long k = 0; k <= 8; ++k)
            for (long kp = 0; kp <= k; ++kp)
                for (unsigned long n : levels) {
                    IchinoBreakdown b = ichino_breakdown(k, kp, LevelFactor::of(n));
                    t.expect(b.assembled == b.displayed, "(" + std::to_string(k) + "," + std::to_string(kp) + ") N=" + std::to_string(n));
                }
    }));
    out.push_back(check("main constant assembly and pi exponent (k <= 8)", [&](Tally& t) {
        for (long k = 0; k <= 8; ++k)
            for (long kp = 0; kp <= k; ++kp)
                for (unsigned long n : levels)
                    t.expect(main1_assembly_check(k, kp, LevelFactor::of(n)),
                             "(" + std::to_string(k) + "," + std::to_string(kp) + ") N=" + std::to_string(n));
    }));
    out.push_back(check("3^3 5 cancels in the main constant (k <= 8)", [&](Tally& t) {
        for (long k = 0; k <= 8; ++k)
            for (long kp = 0; kp <= k; ++kp)
                for (unsigned long n : levels) {
                    LevelFactor lf = LevelFactor::of(n);
                    PiQuantity prod = petersson_pairing_constant(k, kp, lf) * ichino_constant(k, kp, lf);
                    BigInt two;
                    mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(k + kp + 13));
                    BigRational expected = BigRational(two) * c_closed(k, kp) * c_level(lf) / (k + kp + 5);
                    t.expect(prod.coeff() == expected && prod.pi_exp() == 3 * k + kp + 12,
                             "(" + std::to_string(k) + "," + std::to_string(kp) + ") N=" + std::to_string(n));
                }
    }));
    out.push_back(check("C_N examples", [&](Tally& t) {
        t.expect(c_level(LevelFactor::of(1)) == 1, "N=1");
        t.expect(c_level(LevelFactor::of(2)) == q(2, 25), "N=2");
        t.expect(c_level(LevelFactor::of(6)) == q(3, 1250), "N=6");
    }));
    out.push_back(check("Siegel volume 2 xi(2) xi(4) = pi^3/270", [&](Tally& t) {
        t.expect(siegel_volume() == PiQuantity(q(1, 270), 3), "volume");
    }));
    out.push_back(check("zeta(2)/pi^2 = 1/6, zeta(4)/pi^4 = 1/90, numerator of zeta(12)/pi^12 = 691", [&](Tally& t) {
        t.expect(zeta_even_over_pi(2) == q(1, 6), "zeta(2)");
        t.expect(zeta_even_over_pi(4) == q(1, 90), "zeta(4)");
        t.expect(zeta_even_over_pi(12).get_num() == 691, "zeta(12)");
    }));
    return out;
}

// ---------------------------------------------------------------------------

BigInt p_part(const BigRational& x, unsigned long p) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), p, static_cast<unsigned long>(valuation_finite(x, p)));
    return out;
}

RationalMatrix diag2(const BigRational& a, const BigRational& b) {
    return RationalMatrix::from_rows({{a, BigRational(0)}, {BigRational(0), b}});
}

std::vector<CheckResult> lattice_suite() {
    std::vector<CheckResult> out;
    const unsigned long primes[] = {5, 7, 691};
    BilinearForm id2 = BilinearForm::make(RationalMatrix::identity(2), false);
    out.push_back(check("discriminant and dual examples", [&](Tally& t) {
        for (unsigned long p : primes) {
            BigRational pq(static_cast<long>(p));
            LatticeZp l = LatticeZp::make(p, diag2(1, pq));
            t.expect(gram_discriminant(LatticeZp::make(p, RationalMatrix::identity(2)), id2) == 1, "identity");
            t.expect(gram_discriminant(l, id2) == pq * pq, "diag(1,p)");
            t.expect(same_lattice(dual_lattice(l, id2), LatticeZp::make(p, diag2(1, 1 / pq))), "dual of diag(1,p)");
            t.expect(dual_index(l, id2) == BigInt(p) * p, "index of diag(1,p)");
        }
    }));
    out.push_back(check("dual index = p-part of discriminant (50 per prime)", [&](Tally& t) {
        std::mt19937_64 rng(20240611);
        for (unsigned long p : primes)
            for (int i = 0; i < 50; ++i) {
                LatticeSample s = random_integral_instance(rng, 4, p, i % 3 == 0);
                t.expect(dual_index(s.lattice, s.form) == p_part(gram_discriminant(s.lattice, s.form), p),
                         "p=" + std::to_string(p) + " sample " + std::to_string(i));
            }
    }));
    out.push_back(check("double dual returns the lattice (50 per prime)", [&](Tally& t) {
        std::mt19937_64 rng(7);
        for (unsigned long p : primes)
            for (int i = 0; i < 50; ++i) {
                LatticeSample s = random_split_instance(rng, 4, p, false);
                LatticeSample g = random_integral_instance(rng, 4, p, false);
                LatticeZp lat{p, s.lattice.basis};
                t.expect(same_lattice(dual_lattice(dual_lattice(lat, g.form), g.form), lat),
                         "p=" + std::to_string(p) + " sample " + std::to_string(i));
            }
    }));
    out.push_back(check("split/project duality on conforming instances", [&](Tally& t) {
        std::mt19937_64 rng(100);
        for (unsigned long p : {5ul, 691ul, 2ul, 7ul})
            for (int i = 0; i < 30; ++i) {
                LatticeSample s = random_split_instance(rng, 4, p, i % 2 == 1);
                t.expect(split_project_duality_check(s.lattice, s.form, s.splitter),
                         "p=" + std::to_string(p) + " sample " + std::to_string(i));
            }
        RationalMatrix half = RationalMatrix::from_rows({{q(1, 2), q(1, 2)}, {q(1, 2), q(1, 2)}});
        t.expect(split_project_duality_check(LatticeZp::make(5, RationalMatrix::identity(2)), id2, half), "span(1,1) at 5");
    }));
    out.push_back(check("non-orthogonal or non-idempotent splitters are rejected", [&](Tally& t) {
        LatticeZp std2 = LatticeZp::make(5, RationalMatrix::identity(2));
        for (const auto& e : {RationalMatrix::from_rows({{q(1), q(1)}, {q(0), q(0)}}),
                              RationalMatrix::from_rows({{q(1), q(1)}, {q(0), q(1)}})}) {
            bool threw = false;
            try {
                split_project_duality_check(std2, id2, e);
            } catch (const std::invalid_argument&) {
                threw = true;
            }
            t.expect(threw, "rejected");
        }
    }));
    out.push_back(check("discriminant square class is basis independent", [&](Tally& t) {
        std::mt19937_64 rng(11);
        for (unsigned long p : primes)
            for (int i = 0; i < 20; ++i) {
                LatticeSample s = random_integral_instance(rng, 3, p, false);
                LatticeSample u = random_split_instance(rng, 3, p, false);
                // u's Gram on its basis is a p-unit matrix; use a unimodular change built from it.
                RationalMatrix change = gram_matrix(u.lattice, u.form);
                LatticeZp moved{p, change * s.lattice.basis};
                t.expect(similar_mod_unit_squares(gram_discriminant(s.lattice, s.form), gram_discriminant(moved, s.form), p),
                         "p=" + std::to_string(p));
            }
    }));
    out.push_back(check("congruence scan {T_2: 0} vs {T_2: 15} gives [3, 5]", [&](Tally& t) {
        EigenSystem a{{1, 0}, {{"T_2", {0}}}}, b{{1, 0}, {{"T_2", {15}}}};
        CongruenceScan s = congruence_prime_scan(a, b, 2);
        t.expect(s.primes.size() == 2 && s.primes[0].prime == 3 && s.primes[1].prime == 5, "primes");
        t.expect(congruence_prime_scan(a, a, 2).identical, "identical systems");
    }));
    out.push_back(check("congruence scan is symmetric", [&](Tally& t) {
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<long> v(-40, 40);
        for (int i = 0; i < 20; ++i) {
            EigenSystem x{{1, 0, -2}, {{"T_2", {v(rng), v(rng)}}, {"T_3", {v(rng), v(rng)}}}};
            EigenSystem y{{1, 0}, {{"T_2", {v(rng)}}, {"T_3", {v(rng)}}}};
            CongruenceScan xy = congruence_prime_scan(x, y, 3), yx = congruence_prime_scan(y, x, 3);
            bool same = xy.identical == yx.identical && xy.index == yx.index && xy.primes.size() == yx.primes.size();
            for (std::size_t k = 0; same && k < xy.primes.size(); ++k) same = xy.primes[k].prime == yx.primes[k].prime;
            t.expect(same, "sample " + std::to_string(i));
        }
    }));
    return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> modforms_suite() {
    std::vector<CheckResult> out;
    QSeries d = delta(120);
    out.push_back(check("Delta coefficients 1, -24, 252, -1472, 4830", [&](Tally& t) {
        const long expected[] = {0, 1, -24, 252, -1472, 4830};
        for (long n = 0; n <= 5; ++n) t.expect(d[n] == expected[n], "a_" + std::to_string(n));
    }));
    out.push_back(check("E4^3 - E6^2 = 1728 q + O(q^2)", [&](Tally& t) {
        QSeries raw = eisenstein(4, 4).pow(3) - eisenstein(6, 4).pow(2);
        t.expect(raw[0] == 0, "constant term");
        t.expect(raw[1] == 1728, "q coefficient");
    }));
    out.push_back(check("Eisenstein coefficients 240, -504, 65520/691", [&](Tally& t) {
        t.expect(eisenstein(4, 1)[1] == 240, "E4");
        t.expect(eisenstein(6, 1)[1] == -504, "E6");
        t.expect(eisenstein(12, 1)[1] == q(65520, 691), "E12");
    }));
    out.push_back(check("Hecke operators on Delta", [&](Tally& t) {
        t.expect(hecke_operator(d, 12, 1) == d, "T_1");
        t.expect(hecke_operator(d, 12, 2) == q(-24) * d, "T_2");
        t.expect(hecke_operator(d, 12, 6) == hecke_operator(hecke_operator(d, 12, 3), 12, 2), "T_6 = T_2 T_3");
    }));
    out.push_back(check("echelon bases are T_2-stable (weights 4..36)", [&](Tally& t) {
        for (long k = 4; k <= 36; k += 2) {
            auto basis = echelon_basis(k, 40);
            for (const auto& f : basis) {
                QSeries t2 = hecke_operator(f, k, 2);
                QSeries comb = QSeries::zero(t2.precision());
                for (std::size_t i = 0; i < basis.size(); ++i) comb = comb + t2[static_cast<long>(i)] * basis[i];
                t.expect(comb == t2, "weight " + std::to_string(k));
            }
        }
    }));
    out.push_back(check("cusp eigen systems satisfy the Hecke relations (n <= 100)", [&](Tally& t) {
        for (long k : {12l, 16l, 18l, 20l, 22l, 26l}) {
            bool ok = true;
            try {
                cusp_eigensystem(k, 100).check_hecke_relations();
            } catch (const std::logic_error&) {
                ok = false;
            }
            t.expect(ok, "weight " + std::to_string(k));
        }
    }));
    out.push_back(check("weight 16 eigenvalue a_2 = 216", [&](Tally& t) { t.expect(cusp_eigensystem(16, 2)[2] == 216, "a_2"); }));
    out.push_back(check("tau(n) = sigma_11(n) mod 691 for n <= 200", [&](Tally& t) {
        t.expect(eisenstein_congruence_demo(200) == std::pair<long, long>{691, 200}, "demo");
    }));
    out.push_back(check("Delta vs E12 congruence primes up to T_100 are [691]", [&](Tally& t) {
        CongruenceScan s = congruence_prime_scan(cusp_eigensystem(12, 100).as_eigen_system(),
                                                 eisenstein_eigensystem(12, 100).as_eigen_system(), 100);
        t.expect(s.primes.size() == 1 && s.primes[0].prime == 691, "primes");
    }));
    return out;
}

}  // namespace

bool SuiteResult::ok() const {
    if (checks.empty()) return false;
    for (const auto& c : checks)
        if (!c.ok()) return false;
    return true;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"lie", "ktypes", "constants", "lattice", "modforms"};
    return names;
}

SuiteResult run_suite(const std::string& name) {
    static const std::map<std::string, std::function<std::vector<CheckResult>()>> table = {
        {"lie", lie_suite}, {"ktypes", ktypes_suite}, {"constants", constants_suite},
        {"lattice", lattice_suite}, {"modforms", modforms_suite}};
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown suite '" + name + "'");
    SuiteResult r;
    r.suite = name;
    try {
        r.checks = it->second();
    } catch (const std::exception& e) {
        r.checks.push_back({"suite setup", 0, 1, std::string("exception: ") + e.what()});
    }
    return r;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, std::size_t threads) {
    for (const auto& n : names) {
        bool known = false;
        for (const auto& s : suite_names()) known = known || s == n;
        if (!known) throw std::invalid_argument("unknown suite '" + n + "'");
    }
    std::vector<SuiteResult> out(names.size());
    parallel_for(names.size(), threads, [&](std::size_t i) { out[i] = run_suite(names[i]); });
    return out;
}

}  // namespace gsp4
