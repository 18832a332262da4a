#include "gsp4/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gsp4/numtheory.hpp"

namespace gsp4 {

namespace {

long val(const BigRational& x, unsigned long p) { return valuation_finite(x, p); }

RationalVector row_times(const RationalVector& x, const RationalMatrix& m) {
    RationalVector out(m.cols(), 0);
    for (std::size_t k = 0; k < m.rows(); ++k) {
        if (x[k] == 0) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] += x[k] * m(k, c);
    }
    return out;
}

bool integral_vector(const RationalVector& v, unsigned long p) {
    return std::all_of(v.begin(), v.end(), [p](const BigRational& x) { return p_integral(x, p); });
}

void swap_rows(RationalMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(RationalMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// Row echelon over Z_(p) by unimodular row operations (pivot = least valuation in the column).
// Returns the rank; `track`, when given, accumulates the row operations.
std::size_t local_echelon(RationalMatrix& m, unsigned long p, RationalMatrix* track) {
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t piv = m.rows();
        for (std::size_t r = lead; r < m.rows(); ++r)
            if (m(r, c) != 0 && (piv == m.rows() || val(m(r, c), p) < val(m(piv, c), p))) piv = r;
        if (piv == m.rows()) continue;
        swap_rows(m, piv, lead);
        if (track) swap_rows(*track, piv, lead);
        for (std::size_t r = lead + 1; r < m.rows(); ++r) {
            if (m(r, c) == 0) continue;
            BigRational f = m(r, c) / m(lead, c);
            for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) -= f * m(lead, k);
            if (track)
                for (std::size_t k = 0; k < track->cols(); ++k) (*track)(r, k) -= f * (*track)(lead, k);
        }
        ++lead;
    }
    return lead;
}

// Every row of `rows` is a Z_(p)-combination of the rows of `basis` (basis rows independent).
bool module_contains(const RationalMatrix& basis, const RationalMatrix& rows, unsigned long p) {
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        RationalVector coords;
        if (!solve_row_combination(basis, rows.row(r), coords) || !integral_vector(coords, p)) return false;
    }
    return true;
}

RationalMatrix take_rows(const RationalMatrix& m, std::size_t from, std::size_t to) {
    RationalMatrix out(to - from, m.cols());
    for (std::size_t r = from; r < to; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r - from, c) = m(r, c);
    return out;
}

}  // namespace

bool p_integral(const BigRational& x, unsigned long p) {
    return !mpz_divisible_ui_p(x.get_den_mpz_t(), p);
}

bool p_integral(const RationalMatrix& m, unsigned long p) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!p_integral(m(r, c), p)) return false;
    return true;
}

LatticeZp LatticeZp::make(unsigned long p, RationalMatrix basis) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (basis.rows() == 0 || basis.rows() != basis.cols())
        throw std::invalid_argument("lattice basis must be a nonempty square matrix");
    if (determinant(basis) == 0) throw std::invalid_argument("lattice basis is singular");
    return {p, std::move(basis)};
}

BilinearForm BilinearForm::make(RationalMatrix gram, bool alternating) {
    if (gram.rows() == 0 || gram.rows() != gram.cols()) throw std::invalid_argument("Gram matrix must be nonempty and square");
    for (std::size_t r = 0; r < gram.rows(); ++r)
        for (std::size_t c = 0; c < gram.cols(); ++c) {
            bool ok = alternating ? gram(r, c) == -gram(c, r) : gram(r, c) == gram(c, r);
            if (!ok)
                throw std::invalid_argument(alternating ? "Gram matrix is flagged alternating but is not antisymmetric"
                                                        : "Gram matrix is flagged symmetric but is not symmetric");
        }
    return {std::move(gram), alternating};
}

bool contains(const LatticeZp& lattice, const RationalVector& x) {
    if (x.size() != lattice.dim()) throw std::invalid_argument("vector length does not match the lattice");
    return integral_vector(row_times(x, inverse(lattice.basis)), lattice.p);
}

bool is_sublattice(const LatticeZp& inner, const LatticeZp& outer) {
    if (inner.dim() != outer.dim()) return false;
    RationalMatrix coords = inner.basis * inverse(outer.basis);
    return p_integral(coords, outer.p);
}

bool same_lattice(const LatticeZp& a, const LatticeZp& b) {
    return a.p == b.p && is_sublattice(a, b) && is_sublattice(b, a);
}

RationalMatrix gram_matrix(const LatticeZp& lattice, const BilinearForm& form) {
    if (form.gram.rows() != lattice.dim()) throw std::invalid_argument("form and lattice dimensions differ");
    return lattice.basis * form.gram * lattice.basis.transpose();
}

BigRational gram_discriminant(const LatticeZp& lattice, const BilinearForm& form) {
    RationalMatrix g = gram_matrix(lattice, form);
    if (!p_integral(g, lattice.p))
        throw std::invalid_argument("pairing on the lattice basis is not " + std::to_string(lattice.p) + "-integral");
    return determinant(g);
}

LatticeZp dual_lattice(const LatticeZp& lattice, const BilinearForm& form) {
    if (form.gram.rows() != lattice.dim()) throw std::invalid_argument("form and lattice dimensions differ");
    RationalMatrix pairing = form.gram * lattice.basis.transpose();
    if (determinant(pairing) == 0) throw std::invalid_argument("bilinear form is degenerate");
    return {lattice.p, inverse(pairing)};
}

std::vector<long> local_elementary_divisors(const RationalMatrix& m_in, unsigned long p) {
    RationalMatrix m = m_in;
    std::vector<long> out;
    std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pr = m.rows(), pc = m.cols();
        long best = 0;
        for (std::size_t r = k; r < m.rows(); ++r)
            for (std::size_t c = k; c < m.cols(); ++c)
                if (m(r, c) != 0 && (pr == m.rows() || val(m(r, c), p) < best)) {
                    pr = r;
                    pc = c;
                    best = val(m(r, c), p);
                }
        if (pr == m.rows()) break;
        swap_rows(m, k, pr);
        swap_cols(m, k, pc);
        for (std::size_t r = k + 1; r < m.rows(); ++r) {
            if (m(r, k) == 0) continue;
            BigRational f = m(r, k) / m(k, k);
            for (std::size_t c = k; c < m.cols(); ++c) m(r, c) -= f * m(k, c);
        }
        for (std::size_t c = k + 1; c < m.cols(); ++c) {
            if (m(k, c) == 0) continue;
            BigRational f = m(k, c) / m(k, k);
            for (std::size_t r = k; r < m.rows(); ++r) m(r, c) -= f * m(r, k);
        }
        out.push_back(best);
    }
    return out;
}

BigInt dual_index(const LatticeZp& lattice, const BilinearForm& form) {
    RationalMatrix g = gram_matrix(lattice, form);
    if (!p_integral(g, lattice.p)) throw std::invalid_argument("lattice is not contained in its dual");
    auto exps = local_elementary_divisors(g, lattice.p);
    if (exps.size() != lattice.dim()) throw std::invalid_argument("bilinear form is degenerate");
    long total = 0;
    for (long e : exps) total += e;
    BigInt index;
    mpz_ui_pow_ui(index.get_mpz_t(), lattice.p, static_cast<unsigned long>(total));
    return index;
}

bool split_project_duality_check(const LatticeZp& lattice, const BilinearForm& form, const RationalMatrix& e) {
    std::size_t n = lattice.dim();
    if (e.rows() != n || e.cols() != n) throw std::invalid_argument("splitter has the wrong shape");
    if (e * e != e) throw std::invalid_argument("splitter is not idempotent");
    RationalMatrix comp = RationalMatrix::identity(n) - e;
    if (!(e * form.gram * comp.transpose()).is_zero() || !(comp * form.gram * e.transpose()).is_zero())
        throw std::invalid_argument("splitting is not orthogonal for the form");
    if (!same_lattice(dual_lattice(lattice, form), lattice)) throw std::invalid_argument("lattice is not self-dual");

    std::size_t r = rank(e);
    if (r == 0) return true;

    RationalMatrix proj = lattice.basis * e;
    if (local_echelon(proj, lattice.p, nullptr) != r) throw std::logic_error("projection has unexpected rank");
    RationalMatrix proj_basis = take_rows(proj, 0, r);

    // L ∩ W1: coordinates c with c B (1 - e) = 0, a saturated kernel.
    RationalMatrix m = lattice.basis * comp;
    RationalMatrix ops = RationalMatrix::identity(n);
    std::size_t s = local_echelon(m, lattice.p, &ops);
    if (s != n - r) throw std::logic_error("complement has unexpected rank");
    RationalMatrix inter = take_rows(ops, s, n) * lattice.basis;

    RationalMatrix restricted = inter * form.gram * inter.transpose();
    if (determinant(restricted) == 0) throw std::logic_error("form restricted to W1 is degenerate");
    RationalMatrix dual_inside = inverse(restricted) * inter;

    return module_contains(dual_inside, proj_basis, lattice.p) && module_contains(proj_basis, dual_inside, lattice.p);
}

bool similar_mod_unit_squares(const BigRational& x, const BigRational& y, unsigned long p) {
    if (x == 0 || y == 0) throw std::invalid_argument("square classes are only defined for nonzero numbers");
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    BigRational ratio = x / y;
    if (val(ratio, p) != 0) return false;
    BigInt a = ratio.get_num(), b = ratio.get_den();
    if (p == 2) {
        BigInt diff = a - b;
        return mpz_divisible_ui_p(diff.get_mpz_t(), 8) != 0;
    }
    BigInt ab = a * b;
    BigInt pp(p);
    return mpz_legendre(ab.get_mpz_t(), pp.get_mpz_t()) == 1;
}

// ---------------------------------------------------------------------------

namespace {

RationalMatrix random_integer(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
    return m;
}

bool unimodular_at(const RationalMatrix& m, unsigned long p) {
    BigRational d = determinant(m);
    return d != 0 && p_integral(m, p) && valuation_finite(d, p) == 0;
}

RationalMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, unsigned long p) {
    for (;;) {
        RationalMatrix m = random_integer(rng, n, n, 6);
        if (unimodular_at(m, p)) return m;
    }
}

// Entries a / (p^e * (1 or 2)) with |a| <= 9 and e <= 2.
RationalMatrix random_rational_basis(std::mt19937_64& rng, std::size_t n, unsigned long p) {
    std::uniform_int_distribution<long> num(-9, 9), pexp(0, 2), two(1, 2);
    for (;;) {
        RationalMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                BigRational den = two(rng);
                for (long k = pexp(rng); k > 0; --k) den *= BigRational(static_cast<long>(p));
                m(r, c) = BigRational(num(rng)) / den;
            }
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

}  // namespace

LatticeSample random_integral_instance(std::mt19937_64& rng, std::size_t n, unsigned long p, bool alternating) {
    if (n == 0 || (alternating && n % 2 == 1)) throw std::invalid_argument("no nondegenerate form of that shape");
    for (;;) {
        RationalMatrix b = random_integer(rng, n, n, 12);
        RationalMatrix g = random_integer(rng, n, n, 12);
        g = alternating ? g - g.transpose() : g + g.transpose();
        for (std::size_t c = 0; c < n; ++c) b(0, c) *= BigRational(static_cast<long>(p));
        if (determinant(b) == 0 || determinant(g) == 0) continue;
        return {LatticeZp::make(p, b), BilinearForm::make(g, alternating), RationalMatrix()};
    }
}

LatticeSample random_split_instance(std::mt19937_64& rng, std::size_t n, unsigned long p, bool alternating) {
    if (n == 0 || (alternating && n % 2 == 1)) throw std::invalid_argument("no nondegenerate form of that shape");
    RationalMatrix basis = random_rational_basis(rng, n, p);
    RationalMatrix inv = inverse(basis);
    RationalMatrix inner;
    do {
        RationalMatrix u = random_unimodular(rng, n, p);
        inner = alternating ? u * standard_alternating(n) * u.transpose() : u * u.transpose();
    } while (!unimodular_at(inner, p));
    // Gram of the form on L is `inner`, a unit at p: L is self-dual.
    RationalMatrix gram = inv * inner * inv.transpose();
    std::uniform_int_distribution<std::size_t> rk(1, n);
    for (;;) {
        std::size_t r = rk(rng);
        if (alternating && r % 2 == 1) continue;
        RationalMatrix a = random_integer(rng, r, n, 4);
        RationalMatrix m = a * gram * a.transpose();
        if (determinant(m) == 0) continue;
        return {LatticeZp::make(p, basis), BilinearForm::make(gram, alternating), gram * a.transpose() * inverse(m) * a};
    }
}

// ---------------------------------------------------------------------------

std::optional<long> hecke_label_index(const std::string& label) {
    if (label.size() < 3 || label.compare(0, 2, "T_") != 0) return std::nullopt;
    long n = 0;
    for (std::size_t k = 2; k < label.size(); ++k) {
        char ch = label[k];
        if (ch < '0' || ch > '9' || n > 100000000) return std::nullopt;
        n = 10 * n + (ch - '0');
    }
    if (n < 1 || (label.size() > 3 && label[2] == '0')) return std::nullopt;
    return n;
}

void EigenSystem::validate() const {
    if (min_poly.size() < 2) throw std::invalid_argument("min_poly must have degree at least 1");
    if (min_poly[0] != 1) throw std::invalid_argument("min_poly is not monic (leading coefficient must be 1)");
    for (const auto& [label, coords] : values) {
        if (!hecke_label_index(label)) throw std::invalid_argument("operator label '" + label + "' is not of the form T_n");
        if (coords.size() > degree())
            throw std::invalid_argument("value of " + label + " has more coordinates than the degree of min_poly");
    }
}

namespace {

// Elements of Z[x,y]/(f(x), g(y)) (or its reduction mod p) as flat vectors, index i*dg + j.
struct TensorRing {
    std::vector<BigInt> f, g;  // ascending, monic
    std::size_t df, dg;
    BigInt modulus;            // 0: work over Z

    TensorRing(std::vector<BigInt> f_, std::vector<BigInt> g_, BigInt m)
        : f(std::move(f_)), g(std::move(g_)), df(f.size() - 1), dg(g.size() - 1), modulus(std::move(m)) {}

    std::size_t size() const { return df * dg; }

    void reduce(std::vector<BigInt>& v) const {
        if (modulus == 0) return;
        for (auto& x : v) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    }

    std::vector<BigInt> times_x(const std::vector<BigInt>& v) const {
        std::vector<BigInt> out(size(), 0);
        for (std::size_t i = 0; i < df; ++i)
            for (std::size_t j = 0; j < dg; ++j) {
                const BigInt& c = v[i * dg + j];
                if (c == 0) continue;
                if (i + 1 < df) {
                    out[(i + 1) * dg + j] += c;
                } else {
                    for (std::size_t k = 0; k < df; ++k) out[k * dg + j] -= c * f[k];
                }
            }
        reduce(out);
        return out;
    }

    std::vector<BigInt> times_y(const std::vector<BigInt>& v) const {
        std::vector<BigInt> out(size(), 0);
        for (std::size_t i = 0; i < df; ++i)
            for (std::size_t j = 0; j < dg; ++j) {
                const BigInt& c = v[i * dg + j];
                if (c == 0) continue;
                if (j + 1 < dg) {
                    out[i * dg + j + 1] += c;
                } else {
                    for (std::size_t k = 0; k < dg; ++k) out[i * dg + k] -= c * g[k];
                }
            }
        reduce(out);
        return out;
    }

    // a(x) - b(y), with a over powers of x reduced mod f and b over powers of y reduced mod g.
    std::vector<BigInt> difference(const std::vector<BigInt>& a, const std::vector<BigInt>& b) const {
        std::vector<BigInt> out(size(), 0);
        std::vector<BigInt> xp(size(), 0), yp(size(), 0);
        xp[0] = 1;
        yp[0] = 1;
        for (const auto& c : a) {
            for (std::size_t k = 0; k < size(); ++k) out[k] += c * xp[k];
            xp = times_x(xp);
        }
        for (const auto& c : b) {
            for (std::size_t k = 0; k < size(); ++k) out[k] -= c * yp[k];
            yp = times_y(yp);
        }
        reduce(out);
        return out;
    }

    // Additive generators of the ideal generated by the given elements.
    std::vector<std::vector<BigInt>> ideal_generators(const std::vector<std::vector<BigInt>>& elems) const {
        std::vector<std::vector<BigInt>> out;
        for (const auto& e : elems) {
            std::vector<BigInt> xi = e;
            for (std::size_t i = 0; i < df; ++i) {
                std::vector<BigInt> yj = xi;
                for (std::size_t j = 0; j < dg; ++j) {
                    out.push_back(yj);
                    yj = times_y(yj);
                }
                xi = times_x(xi);
            }
        }
        return out;
    }
};

std::vector<BigInt> ascending(const std::vector<BigInt>& desc) { return std::vector<BigInt>(desc.rbegin(), desc.rend()); }

std::size_t rank_mod_p(std::vector<std::vector<BigInt>> rows, const BigInt& p) {
    if (rows.empty()) return 0;
    std::size_t n = rows[0].size(), lead = 0;
    for (std::size_t c = 0; c < n && lead < rows.size(); ++c) {
        std::size_t piv = lead;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[lead]);
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), rows[lead][c].get_mpz_t(), p.get_mpz_t());
        for (std::size_t r = lead + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            BigInt f = rows[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) {
                rows[r][k] -= f * rows[lead][k];
                mpz_fdiv_r(rows[r][k].get_mpz_t(), rows[r][k].get_mpz_t(), p.get_mpz_t());
            }
        }
        ++lead;
    }
    return lead;
}

}  // namespace

CongruenceScan congruence_prime_scan(const EigenSystem& a, const EigenSystem& b, long bound) {
    if (bound < 1) throw std::invalid_argument("empty comparison range");
    a.validate();
    b.validate();
    std::map<long, std::string> la, lb;
    for (const auto& [label, v] : a.values)
        if (long n = *hecke_label_index(label); n <= bound) la[n] = label;
    for (const auto& [label, v] : b.values)
        if (long n = *hecke_label_index(label); n <= bound) lb[n] = label;
    for (const auto& [n, label] : la)
        if (!lb.count(n)) throw std::invalid_argument("label mismatch: " + label + " missing from the second system");
    for (const auto& [n, label] : lb)
        if (!la.count(n)) throw std::invalid_argument("label mismatch: " + label + " missing from the first system");
    if (la.empty()) throw std::invalid_argument("no operators T_n with n <= " + std::to_string(bound) + " to compare");

    CongruenceScan scan;
    scan.labels_compared = la.size();
    TensorRing ring(ascending(a.min_poly), ascending(b.min_poly), 0);
    std::vector<std::vector<BigInt>> diffs;
    for (const auto& [n, label] : la) diffs.push_back(ring.difference(a.values.at(label), b.values.at(label)));

    auto hnf = integer_hermite(ring.ideal_generators(diffs));
    if (hnf.size() < ring.size()) {
        scan.identical = true;
        scan.index = 0;
        return scan;
    }
    scan.index = 1;
    for (std::size_t k = 0; k < hnf.size(); ++k) {
        std::size_t c = 0;
        while (hnf[k][c] == 0) ++c;
        scan.index *= hnf[k][c];
    }
    if (scan.index == 1) return scan;

    for (const auto& [p, mult] : factor_integer(scan.index)) {
        (void)mult;
        auto fa = factor_mod_p(poly_reduce(ascending(a.min_poly), p), p);
        auto fb = factor_mod_p(poly_reduce(ascending(b.min_poly), p), p);
        bool found = false;
        for (const auto& [phi, ma] : fa) {
            for (const auto& [psi, mb] : fb) {
                TensorRing local(phi, psi, p);
                std::vector<std::vector<BigInt>> ds;
                for (const auto& [n, label] : la) ds.push_back(local.difference(a.values.at(label), b.values.at(label)));
                std::size_t rk = rank_mod_p(local.ideal_generators(ds), p);
                if (rk < local.size()) {
                    scan.primes.push_back({p, descending(phi), descending(psi), local.size() - rk});
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) throw std::logic_error("no maximal ideal above " + p.get_str() + " contains the differences");
    }
    return scan;
}

}  // namespace gsp4
