#include "gsp4/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsp4 {

namespace {

BigInt mod(const BigInt& a, const BigInt& p) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

BigInt inverse_mod(const BigInt& a, const BigInt& p) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0) throw std::domain_error("not invertible mod p");
    return r;
}

void trim(PolyModP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

BigInt pollard_brent(const BigInt& n, unsigned long c) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    auto f = [&](const BigInt& x) { return mod(x * x + c, n); };
    BigInt y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = mod(q * abs(x - y), n);
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            BigInt diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    for (unsigned long c = 1;; ++c) {
        BigInt d = pollard_brent(n, c);
        if (d != n && d != 1) {
            factor_into(d, out);
            factor_into(n / d, out);
            return;
        }
    }
}

}  // namespace

std::map<BigInt, unsigned> factor_integer(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("cannot factor zero");
    std::map<BigInt, unsigned> out;
    BigInt m = abs(n);
    for (unsigned long p = 2; p < 10000 && m > 1; ++p) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[BigInt(p)];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    factor_into(m, out);
    return out;
}

// ---------------------------------------------------------------------------

PolyModP poly_reduce(const std::vector<BigInt>& coeffs, const BigInt& p) {
    PolyModP a;
    a.reserve(coeffs.size());
    for (const auto& c : coeffs) a.push_back(mod(c, p));
    trim(a);
    return a;
}

PolyModP poly_add(const PolyModP& a, const PolyModP& b, const BigInt& p) {
    PolyModP r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_reduce(r, p);
}

PolyModP poly_sub(const PolyModP& a, const PolyModP& b, const BigInt& p) {
    PolyModP r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_reduce(r, p);
}

PolyModP poly_mul(const PolyModP& a, const PolyModP& b, const BigInt& p) {
    if (a.empty() || b.empty()) return {};
    PolyModP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return poly_reduce(r, p);
}

std::pair<PolyModP, PolyModP> poly_divmod(const PolyModP& a, const PolyModP& b, const BigInt& p) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    PolyModP rem = a;
    if (rem.size() < b.size()) return {{}, rem};
    PolyModP quot(rem.size() - b.size() + 1, 0);
    BigInt lead_inv = inverse_mod(b.back(), p);
    while (rem.size() >= b.size() && !rem.empty()) {
        std::size_t shift = rem.size() - b.size();
        BigInt c = mod(rem.back() * lead_inv, p);
        quot[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] = mod(rem[shift + j] - c * b[j], p);
        trim(rem);
    }
    trim(quot);
    return {quot, rem};
}

PolyModP poly_monic(const PolyModP& a, const BigInt& p) {
    if (a.empty()) return a;
    BigInt inv = inverse_mod(a.back(), p);
    PolyModP r = a;
    for (auto& c : r) c = mod(c * inv, p);
    return r;
}

PolyModP poly_gcd(PolyModP a, PolyModP b, const BigInt& p) {
    while (!b.empty()) {
        PolyModP r = poly_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a, p);
}

PolyModP poly_powmod(PolyModP base, BigInt e, const PolyModP& m, const BigInt& p) {
    PolyModP result{1};
    result = poly_divmod(result, m, p).second;
    base = poly_divmod(base, m, p).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = poly_divmod(poly_mul(result, base, p), m, p).second;
        base = poly_divmod(poly_mul(base, base, p), m, p).second;
        e >>= 1;
    }
    return result;
}

std::vector<BigInt> descending(const PolyModP& a) { return std::vector<BigInt>(a.rbegin(), a.rend()); }

namespace {

PolyModP derivative(const PolyModP& a, const BigInt& p) {
    PolyModP d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<unsigned long>(i));
    return poly_reduce(d, p);
}

// f(x) = g(x)^p over F_p when f' = 0: g has coefficients f_{ip} (Frobenius is trivial on F_p).
PolyModP pth_root(const PolyModP& f, const BigInt& p) {
    unsigned long pp = p.get_ui();
    PolyModP g;
    for (std::size_t i = 0; i < f.size(); i += pp) g.push_back(f[i]);
    return g;
}

// Square-free factorisation: pairs (square-free factor, multiplicity).
std::vector<std::pair<PolyModP, unsigned>> squarefree(const PolyModP& f, const BigInt& p) {
    std::vector<std::pair<PolyModP, unsigned>> out;
    PolyModP df = derivative(f, p);
    if (df.empty()) {
        for (auto& [g, m] : squarefree(pth_root(f, p), p)) out.emplace_back(g, m * static_cast<unsigned>(p.get_ui()));
        return out;
    }
    PolyModP c = poly_gcd(f, df, p);
    PolyModP w = poly_divmod(f, c, p).first;
    unsigned i = 1;
    while (poly_degree(w) > 0) {
        PolyModP y = poly_gcd(w, c, p);
        PolyModP z = poly_divmod(w, y, p).first;
        if (poly_degree(z) > 0) out.emplace_back(poly_monic(z, p), i);
        ++i;
        w = y;
        c = poly_divmod(c, y, p).first;
    }
    if (poly_degree(c) > 0)
        for (auto& [g, m] : squarefree(pth_root(c, p), p)) out.emplace_back(g, m * static_cast<unsigned>(p.get_ui()));
    return out;
}

// Distinct-degree factorisation of a monic square-free polynomial.
std::vector<std::pair<PolyModP, long>> distinct_degree(PolyModP f, const BigInt& p) {
    std::vector<std::pair<PolyModP, long>> out;
    PolyModP x{0, 1};
    PolyModP h = poly_divmod(x, f, p).second;
    for (long d = 1; 2 * d <= poly_degree(f); ++d) {
        h = poly_powmod(h, p, f, p);
        PolyModP g = poly_gcd(f, poly_sub(h, x, p), p);
        if (poly_degree(g) > 0) {
            out.emplace_back(g, d);
            f = poly_divmod(f, g, p).first;
            h = poly_divmod(h, f, p).second;
        }
    }
    if (poly_degree(f) > 0) out.emplace_back(poly_monic(f, p), poly_degree(f));
    return out;
}

void equal_degree(const PolyModP& f, long d, const BigInt& p, gmp_randclass& rng, std::vector<PolyModP>& out) {
    if (poly_degree(f) == d) {
        out.push_back(poly_monic(f, p));
        return;
    }
    BigInt pd;
    mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    for (;;) {
        PolyModP a;
        for (long i = 0; i < poly_degree(f); ++i) a.push_back(rng.get_z_range(p));
        trim(a);
        if (poly_degree(a) < 1) continue;
        PolyModP b;
        if (p == 2) {
            // trace map a + a^2 + ... + a^{2^{d-1}}
            PolyModP t = a, acc = a;
            for (long i = 1; i < d; ++i) {
                t = poly_divmod(poly_mul(t, t, p), f, p).second;
                acc = poly_add(acc, t, p);
            }
            b = acc;
        } else {
            b = poly_sub(poly_powmod(a, (pd - 1) / 2, f, p), PolyModP{1}, p);
        }
        PolyModP g = poly_gcd(f, b, p);
        if (poly_degree(g) > 0 && poly_degree(g) < poly_degree(f)) {
            equal_degree(g, d, p, rng, out);
            equal_degree(poly_divmod(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<PolyModP, unsigned>> factor_mod_p(const PolyModP& f_in, const BigInt& p) {
    if (!is_prime(p)) throw std::invalid_argument("factor_mod_p needs a prime modulus");
    PolyModP f = poly_reduce(f_in, p);
    if (f.empty()) throw std::invalid_argument("cannot factor the zero polynomial");
    f = poly_monic(f, p);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(20240611UL);
    std::map<std::vector<BigInt>, unsigned> collected;
    for (const auto& [sf, mult] : squarefree(f, p))
        for (const auto& [part, d] : distinct_degree(sf, p)) {
            std::vector<PolyModP> pieces;
            equal_degree(part, d, p, rng, pieces);
            for (const auto& g : pieces) collected[descending(g)] += mult;
        }
    std::vector<std::pair<PolyModP, unsigned>> out;
    for (const auto& [desc, m] : collected) out.emplace_back(PolyModP(desc.rbegin(), desc.rend()), m);
    return out;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<BigInt>> integer_hermite(std::vector<std::vector<BigInt>> rows) {
    if (rows.empty()) return {};
    std::size_t n = rows[0].size();
    std::vector<std::vector<BigInt>> out;
    for (std::size_t c = 0; c < n && !rows.empty(); ++c) {
        // Euclid on column c among the remaining rows.
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (rows[r][c] != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) best = r;
            if (best == rows.size()) break;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == best || rows[r][c] == 0) continue;
                BigInt qt;
                mpz_fdiv_q(qt.get_mpz_t(), rows[r][c].get_mpz_t(), rows[best][c].get_mpz_t());
                for (std::size_t k = c; k < n; ++k) rows[r][k] -= qt * rows[best][k];
            }
            bool others_zero = true;
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (r != best && rows[r][c] != 0) others_zero = false;
            if (others_zero) {
                if (rows[best][c] < 0)
                    for (auto& x : rows[best]) x = -x;
                out.push_back(rows[best]);
                rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
                break;
            }
        }
        rows.erase(std::remove_if(rows.begin(), rows.end(),
                                  [](const std::vector<BigInt>& v) {
                                      return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
                                  }),
                   rows.end());
    }
    return out;
}

}  // namespace gsp4
