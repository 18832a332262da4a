#include "gsp4/liealg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gsp4 {

namespace {

const QuadGaussian kI = QuadGaussian::i();

LieMatrix block(const Matrix2& a, const Matrix2& b, const Matrix2& c, const Matrix2& d) {
    LieMatrix m(4, 4);
    for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
            m(r, s) = a[r][s];
            m(r, s + 2) = b[r][s];
            m(r + 2, s) = c[r][s];
            m(r + 2, s + 2) = d[r][s];
        }
    return m;
}

Matrix2 scaled(const Matrix2& z, const QuadGaussian& s) {
    Matrix2 out = z;
    for (auto& row : out)
        for (auto& x : row) x *= s;
    return out;
}

Matrix2 unit2(int r, int s) {
    Matrix2 z{};
    z[r][s] = 1;
    return z;
}

std::vector<QuadGaussian> flatten(const LieMatrix& m) {
    std::vector<QuadGaussian> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return v;
}

bool in_span(const std::vector<LieMatrix>& span, const LieMatrix& x) {
    std::vector<std::vector<QuadGaussian>> rows;
    for (const auto& s : span) rows.push_back(flatten(s));
    std::size_t before = rank_of_vectors(rows);
    rows.push_back(flatten(x));
    return rank_of_vectors(rows) == before;
}

std::size_t span_dim(const std::vector<LieMatrix>& mats) {
    std::vector<std::vector<QuadGaussian>> rows;
    for (const auto& s : mats) rows.push_back(flatten(s));
    return rank_of_vectors(rows);
}

// Std basis e0..e3 carries torus weights (1,0), (0,1), (-1,0), (0,-1).
constexpr int kWeightA[4] = {1, 0, -1, 0};
constexpr int kWeightB[4] = {0, 1, 0, -1};

std::size_t pow4(std::size_t d) { return std::size_t{1} << (2 * d); }

std::vector<int> digits_of(std::size_t index, std::size_t degree) {
    std::vector<int> dig(degree);
    for (std::size_t j = degree; j-- > 0;) {
        dig[j] = static_cast<int>(index & 3U);
        index >>= 2;
    }
    return dig;
}

std::size_t index_of(const std::vector<int>& dig) {
    std::size_t idx = 0;
    for (int x : dig) idx = (idx << 2) | static_cast<std::size_t>(x);
    return idx;
}

// Symplectic form entry J(a, b).
int form_entry(int a, int b) {
    if (a == 0 && b == 2) return 1;
    if (a == 1 && b == 3) return 1;
    if (a == 2 && b == 0) return -1;
    if (a == 3 && b == 1) return -1;
    return 0;
}

// Moves tensor factor j to position perm[j].
template <typename F>
std::vector<F> permute_factors(const std::vector<F>& t, std::size_t degree, const std::vector<std::size_t>& perm) {
    std::vector<F> out(t.size(), F(0));
    std::vector<int> dst(degree);
    for (std::size_t idx = 0; idx < t.size(); ++idx) {
        if (t[idx] == F(0)) continue;
        auto src = digits_of(idx, degree);
        for (std::size_t j = 0; j < degree; ++j) dst[perm[j]] = src[j];
        out[index_of(dst)] += t[idx];
    }
    return out;
}

int permutation_sign(const std::vector<std::size_t>& perm) {
    int sign = 1;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) sign = -sign;
    return sign;
}

// Row group of the Young tableau with rows {0..k-1}, {k..k+k'-1}.
std::vector<std::vector<std::size_t>> row_group(std::size_t k, std::size_t kp) {
    std::vector<std::size_t> r1(k), r2(kp);
    std::iota(r1.begin(), r1.end(), 0);
    std::iota(r2.begin(), r2.end(), k);
    std::vector<std::vector<std::size_t>> group;
    std::vector<std::size_t> p1 = r1;
    do {
        std::vector<std::size_t> p2 = r2;
        do {
            std::vector<std::size_t> perm(k + kp);
            for (std::size_t j = 0; j < k; ++j) perm[j] = p1[j];
            for (std::size_t j = 0; j < kp; ++j) perm[k + j] = p2[j];
            group.push_back(std::move(perm));
        } while (std::next_permutation(p2.begin(), p2.end()));
    } while (std::next_permutation(p1.begin(), p1.end()));
    return group;
}

// Column group: independent swaps of the pairs (j, k+j) for j < k'.
std::vector<std::vector<std::size_t>> column_group(std::size_t k, std::size_t kp) {
    std::vector<std::vector<std::size_t>> group;
    for (std::size_t mask = 0; mask < (std::size_t{1} << kp); ++mask) {
        std::vector<std::size_t> perm(k + kp);
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t j = 0; j < kp; ++j)
            if (mask & (std::size_t{1} << j)) std::swap(perm[j], perm[k + j]);
        group.push_back(std::move(perm));
    }
    return group;
}

Tensor young_symmetrize(const Tensor& t, std::size_t k, std::size_t kp) {
    std::size_t d = k + kp;
    Tensor sym(t.size(), 0);
    for (const auto& perm : row_group(k, kp)) {
        Tensor moved = permute_factors(t, d, perm);
        for (std::size_t j = 0; j < t.size(); ++j) sym[j] += moved[j];
    }
    Tensor out(t.size(), 0);
    for (const auto& perm : column_group(k, kp)) {
        Tensor moved = permute_factors(sym, d, perm);
        int sign = permutation_sign(perm);
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (sign > 0)
                out[j] += moved[j];
            else
                out[j] -= moved[j];
        }
    }
    return out;
}

using QTensor = std::vector<QuadGaussian>;

// g^{(x) d} applied factor by factor.
QTensor apply_tensor_power(const LieMatrix& g, const QTensor& t, std::size_t degree) {
    QTensor cur = t;
    for (std::size_t slot = 0; slot < degree; ++slot) {
        QTensor next(cur.size(), QuadGaussian(0));
        std::size_t shift = 2 * (degree - 1 - slot);
        for (std::size_t idx = 0; idx < cur.size(); ++idx) {
            if (cur[idx].is_zero()) continue;
            std::size_t a = (idx >> shift) & 3U;
            std::size_t base = idx & ~(std::size_t{3} << shift);
            for (std::size_t r = 0; r < 4; ++r) {
                const QuadGaussian& coef = g(r, a);
                if (coef.is_zero()) continue;
                next[base | (r << shift)] += coef * cur[idx];
            }
        }
        cur = std::move(next);
    }
    return cur;
}

QTensor to_quad(const Tensor& t) {
    QTensor q;
    q.reserve(t.size());
    for (const auto& x : t) q.emplace_back(x);
    return q;
}

QuadGaussian power(const QuadGaussian& z, long n) {
    QuadGaussian base = n < 0 ? z.inverse() : z;
    QuadGaussian r(1);
    for (long k = 0; k < (n < 0 ? -n : n); ++k) r *= base;
    return r;
}

void circle_point(const BigRational& t, BigRational& x, BigRational& y) {
    BigRational den = 1 + t * t;
    x = (1 - t * t) / den;
    y = 2 * t / den;
}

}  // namespace

// ---------------------------------------------------------------------------

LieMatrix lie_zero() { return LieMatrix(4, 4); }

LieMatrix bracket(const LieMatrix& a, const LieMatrix& b) { return a * b - b * a; }

LieMatrix conj(const LieMatrix& m) {
    LieMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).conj();
    return out;
}

LieMatrix conj_transpose(const LieMatrix& m) { return conj(m).transpose(); }

LieMatrix symplectic_form() {
    LieMatrix j(4, 4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) j(a, b) = form_entry(a, b);
    return j;
}

bool in_sp4(const LieMatrix& x) {
    LieMatrix j = symplectic_form();
    return (x.transpose() * j + j * x).is_zero();
}

bool in_Sp4(const LieMatrix& g) {
    LieMatrix j = symplectic_form();
    return g.transpose() * j * g == j;
}

LieMatrix dkappa(const Matrix2& z) {
    // z = X + iY with X, Y skew-Hermitian; a skew-Hermitian A + iB maps to (A B; -B A).
    QuadGaussian half = BigRational(1, 2);
    Matrix2 x{}, y{};
    for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
            QuadGaussian zs = z[s][r].conj();  // (z^*)_{rs}
            x[r][s] = (z[r][s] - zs) * half;
            y[r][s] = (z[r][s] + zs) * half * (-kI);
        }
    auto real_image = [&](const Matrix2& g) {
        Matrix2 re{}, im{}, neg_im{};
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s) {
                re[r][s] = (g[r][s] + g[r][s].conj()) * half;
                im[r][s] = (g[r][s] - g[r][s].conj()) * half * (-kI);
                neg_im[r][s] = -im[r][s];
            }
        return block(re, im, neg_im, re);
    };
    LieMatrix out = real_image(x);
    out += real_image(y) * kI;
    return out;
}

LieMatrix p_plus(const Matrix2& z) {
    Matrix2 iz = scaled(z, kI);
    return block(z, iz, iz, scaled(z, -1));
}

LieMatrix p_minus(const Matrix2& z) {
    Matrix2 miz = scaled(z, -kI);
    return block(z, miz, miz, scaled(z, -1));
}

std::map<RootLabel, LieMatrix> RootVectors::by_root() const {
    return {{{2, 0}, X20},  {{-2, 0}, Xm20}, {{1, 1}, X11},  {{-1, -1}, Xm1m1},
            {{0, 2}, X02},  {{0, -2}, X0m2}, {{1, -1}, X1m1}, {{-1, 1}, Xm11}};
}

std::map<std::string, LieMatrix> RootVectors::named() const {
    return {{"T1", T1},          {"T2", T2},          {"X(2,0)", X20},   {"X(-2,0)", Xm20},
            {"X(1,1)", X11},     {"X(-1,-1)", Xm1m1}, {"X(0,2)", X02},   {"X(0,-2)", X0m2},
            {"X(1,-1)", X1m1},   {"X(-1,1)", Xm11}};
}

RootVectors build_root_vectors(const BigRational& scale) {
    if (scale == 0) throw std::invalid_argument("root vector scale must be nonzero");
    QuadGaussian s(scale);
    Matrix2 e11 = unit2(0, 0), e22 = unit2(1, 1);
    Matrix2 sym12{};
    sym12[0][1] = 1;
    sym12[1][0] = 1;

    RootVectors rv;
    rv.T1 = dkappa(scaled(e11, kI));
    rv.T2 = dkappa(scaled(e22, kI));
    rv.X20 = p_plus(e11) * s;
    rv.Xm20 = p_minus(e11) * s;
    rv.X11 = p_plus(sym12) * s;
    rv.Xm1m1 = p_minus(sym12) * s;
    rv.X02 = p_plus(e22) * s;
    rv.X0m2 = p_minus(e22) * s;
    rv.X1m1 = dkappa(unit2(0, 1));
    rv.Xm11 = dkappa(unit2(1, 0));
    return rv;
}

bool verify_root_vector(const LieMatrix& h, const LieMatrix& x, RootLabel alpha) {
    static const RootVectors base = build_root_vectors();
    QuadGaussian a = h(0, 2), b = h(1, 3);
    if (h != base.T1 * a + base.T2 * b)
        throw std::invalid_argument("verify_root_vector: h is not in the compact Cartan span{T1, T2}");
    QuadGaussian eigen = kI * (QuadGaussian(alpha.first) * a + QuadGaussian(alpha.second) * b);
    return bracket(h, x) == x * eigen;
}

bool CartanReport::ok() const {
    return dim_sp4 == 10 && dim_k == 4 && dim_p_plus == 3 && dim_p_minus == 3 && dim_total == 10 &&
           k_preserves_p_plus && k_preserves_p_minus && p_plus_minus_in_k && p_plus_abelian && p_minus_abelian;
}

CartanReport cartan_report(const RootVectors& rv) {
    CartanReport rep;

    // Linear conditions tX J + J X = 0 on the 16 entries of X (rational coefficients).
    Matrix<BigRational> cond(16, 16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            std::size_t row = static_cast<std::size_t>(4 * a + b);
            // (tX J)_{ab} = sum_m X_{ma} J_{mb};  (J X)_{ab} = sum_m J_{am} X_{mb}
            for (int m = 0; m < 4; ++m) {
                cond(row, static_cast<std::size_t>(4 * m + a)) += form_entry(m, b);
                cond(row, static_cast<std::size_t>(4 * m + b)) += form_entry(a, m);
            }
        }
    rep.dim_sp4 = nullspace(cond).size();

    std::vector<LieMatrix> k = {dkappa(unit2(0, 0)), rv.X1m1, rv.Xm11, dkappa(unit2(1, 1))};
    std::vector<LieMatrix> pp = {rv.X20, rv.X11, rv.X02};
    std::vector<LieMatrix> pm = {rv.Xm20, rv.Xm1m1, rv.X0m2};
    rep.dim_k = span_dim(k);
    rep.dim_p_plus = span_dim(pp);
    rep.dim_p_minus = span_dim(pm);
    std::vector<LieMatrix> all = k;
    all.insert(all.end(), pp.begin(), pp.end());
    all.insert(all.end(), pm.begin(), pm.end());
    bool all_in = std::all_of(all.begin(), all.end(), [](const LieMatrix& m) { return in_sp4(m); });
    rep.dim_total = all_in ? span_dim(all) : 0;

    rep.k_preserves_p_plus = rep.k_preserves_p_minus = true;
    for (const auto& g : k) {
        for (const auto& x : pp) rep.k_preserves_p_plus = rep.k_preserves_p_plus && in_span(pp, bracket(g, x));
        for (const auto& x : pm) rep.k_preserves_p_minus = rep.k_preserves_p_minus && in_span(pm, bracket(g, x));
    }
    rep.p_plus_minus_in_k = true;
    for (const auto& x : pp)
        for (const auto& y : pm) rep.p_plus_minus_in_k = rep.p_plus_minus_in_k && in_span(k, bracket(x, y));
    rep.p_plus_abelian = rep.p_minus_abelian = true;
    for (const auto& x : pp)
        for (const auto& y : pp) rep.p_plus_abelian = rep.p_plus_abelian && bracket(x, y).is_zero();
    for (const auto& x : pm)
        for (const auto& y : pm) rep.p_minus_abelian = rep.p_minus_abelian && bracket(x, y).is_zero();
    return rep;
}

bool cartan_decomposition_check() { return cartan_report().ok(); }

// ---------------------------------------------------------------------------

AlgebraicWeight::AlgebraicWeight(long k_, long kprime_, long c_) : k(k_), kprime(kprime_), c(c_) {
    if (((k + kprime - c) % 2 + 2) % 2 != 0)
        throw std::invalid_argument("algebraic weight needs k + k' = c (mod 2): " + to_string(*this));
}

AnalyticWeight::AnalyticWeight(long n_, long nprime_, long c_) : n(n_), nprime(nprime_), c(c_) {
    if (((n + nprime - c) % 2 + 2) % 2 != 0)
        throw std::invalid_argument("analytic weight needs n + n' = c (mod 2): " + to_string(*this));
}

std::string to_string(const AlgebraicWeight& w) {
    return "lambda(" + std::to_string(w.k) + "," + std::to_string(w.kprime) + "," + std::to_string(w.c) + ")";
}

std::string to_string(const AnalyticWeight& w) {
    return "lambda'(" + std::to_string(w.n) + "," + std::to_string(w.nprime) + "," + std::to_string(w.c) + ")";
}

Tensor contract(const Tensor& t, std::size_t degree, std::size_t p, std::size_t q) {
    if (degree < 2 || p >= q || q >= degree) throw std::invalid_argument("contract: need 0 <= p < q < degree");
    Tensor out(pow4(degree - 2), 0);
    std::vector<int> rest;
    for (std::size_t idx = 0; idx < t.size(); ++idx) {
        if (t[idx] == 0) continue;
        auto dig = digits_of(idx, degree);
        int f = form_entry(dig[p], dig[q]);
        if (f == 0) continue;
        rest.clear();
        for (std::size_t j = 0; j < degree; ++j)
            if (j != p && j != q) rest.push_back(dig[j]);
        out[index_of(rest)] += f * t[idx];
    }
    return out;
}

std::optional<AlgebraicWeight> tensor_weight(const Tensor& t, std::size_t degree, long c) {
    std::optional<std::pair<long, long>> found;
    for (std::size_t idx = 0; idx < t.size(); ++idx) {
        if (t[idx] == 0) continue;
        auto dig = digits_of(idx, degree);
        long a = 0, b = 0;
        for (int x : dig) {
            a += kWeightA[x];
            b += kWeightB[x];
        }
        if (found && (found->first != a || found->second != b)) return std::nullopt;
        found = std::make_pair(a, b);
    }
    if (!found) return std::nullopt;
    return AlgebraicWeight(found->first, found->second, c);
}

WeylModule weyl_construct(const AlgebraicWeight& weight) {
    if (!weight.dominant())
        throw std::invalid_argument("weyl_construct needs a dominant weight (k >= k' >= 0), got " + to_string(weight));
    std::size_t k = static_cast<std::size_t>(weight.k), kp = static_cast<std::size_t>(weight.kprime);
    std::size_t d = k + kp;
    if (d > 4) throw std::invalid_argument("weyl_construct is limited to k + k' <= 4");

    WeylModule mod;
    mod.weight = weight;
    mod.degree = d;
    std::size_t total = pow4(d);

    // Group the tensor basis by torus weight; contractions and the symmetriser respect it.
    std::map<std::pair<long, long>, std::vector<std::size_t>> spaces;
    for (std::size_t idx = 0; idx < total; ++idx) {
        auto dig = digits_of(idx, d);
        long a = 0, b = 0;
        for (int x : dig) {
            a += kWeightA[x];
            b += kWeightB[x];
        }
        spaces[{a, b}].push_back(idx);
    }

    for (const auto& [wt, members] : spaces) {
        // Kernel of all contractions restricted to this weight space.
        std::vector<Tensor> kernel;
        if (d < 2) {
            for (auto idx : members) {
                Tensor e(total, 0);
                e[idx] = 1;
                kernel.push_back(std::move(e));
            }
        } else {
            std::vector<std::vector<BigRational>> rows;
            for (std::size_t p = 0; p < d; ++p)
                for (std::size_t q = p + 1; q < d; ++q) {
                    std::vector<Tensor> images;
                    for (auto idx : members) {
                        Tensor e(total, 0);
                        e[idx] = 1;
                        images.push_back(contract(e, d, p, q));
                    }
                    std::size_t out_size = pow4(d - 2);
                    for (std::size_t o = 0; o < out_size; ++o) {
                        std::vector<BigRational> row(members.size());
                        bool nonzero = false;
                        for (std::size_t m = 0; m < members.size(); ++m) {
                            row[m] = images[m][o];
                            nonzero = nonzero || row[m] != 0;
                        }
                        if (nonzero) rows.push_back(std::move(row));
                    }
                }
            if (rows.empty()) {
                for (auto idx : members) {
                    Tensor e(total, 0);
                    e[idx] = 1;
                    kernel.push_back(std::move(e));
                }
            } else {
                for (const auto& v : nullspace(Matrix<BigRational>::from_rows(rows))) {
                    Tensor e(total, 0);
                    for (std::size_t m = 0; m < members.size(); ++m) e[members[m]] = v[m];
                    kernel.push_back(std::move(e));
                }
            }
        }
        if (kernel.empty()) continue;

        // Image of the kernel under the Young symmetriser, reduced to a basis.
        std::vector<std::vector<BigRational>> images;
        for (const auto& v : kernel) {
            Tensor img = young_symmetrize(v, k, kp);
            std::vector<BigRational> restricted(members.size());
            for (std::size_t m = 0; m < members.size(); ++m) restricted[m] = img[members[m]];
            images.push_back(std::move(restricted));
        }
        auto reduced = Matrix<BigRational>::from_rows(images);
        auto pivots = rref(reduced);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            Tensor e(total, 0);
            for (std::size_t m = 0; m < members.size(); ++m) e[members[m]] = reduced(r, m);
            mod.basis.push_back(std::move(e));
            mod.weights.emplace_back(wt.first, wt.second, weight.c);
        }
    }
    mod.dimension = mod.basis.size();
    return mod;
}

// ---------------------------------------------------------------------------

LieMatrix cayley_J() {
    QuadGaussian f = QuadGaussian::sqrt2() * QuadGaussian(BigRational(1, 2));  // 1/sqrt2
    LieMatrix j(4, 4);
    for (int r = 0; r < 4; ++r) j(r, r) = f;
    j(0, 2) = j(1, 3) = j(2, 0) = j(3, 1) = f * kI;
    return j;
}

LieMatrix compact_torus_point(const BigRational& t, const BigRational& tprime) {
    BigRational x, y, xp, yp;
    circle_point(t, x, y);
    circle_point(tprime, xp, yp);
    LieMatrix m(4, 4);
    m(0, 0) = x;
    m(0, 2) = y;
    m(2, 0) = BigRational(-y);
    m(2, 2) = x;
    m(1, 1) = xp;
    m(1, 3) = yp;
    m(3, 1) = BigRational(-yp);
    m(3, 3) = xp;
    return m;
}

bool verify_torus_conjugation(const BigRational& t, const BigRational& tprime) {
    BigRational x, y, xp, yp;
    circle_point(t, x, y);
    circle_point(tprime, xp, yp);
    LieMatrix jbar = conj(cayley_J());
    LieMatrix lhs = inverse(jbar) * compact_torus_point(t, tprime) * jbar;
    LieMatrix expected(4, 4);
    expected(0, 0) = QuadGaussian(x) - kI * QuadGaussian(y);
    expected(1, 1) = QuadGaussian(xp) - kI * QuadGaussian(yp);
    expected(2, 2) = QuadGaussian(x) + kI * QuadGaussian(y);
    expected(3, 3) = QuadGaussian(xp) + kI * QuadGaussian(yp);
    return lhs == expected;
}

AnalyticWeight weight_of_transported_vector(const WeylModule& module, const Tensor& w, Transport transport) {
    std::size_t d = module.degree;
    if (w.size() != pow4(d)) throw std::invalid_argument("tensor has the wrong size for this module");
    if (!tensor_weight(w, d, module.weight.c))
        throw std::invalid_argument("input tensor is not a torus weight vector");
    {
        auto rows = module.basis;
        std::size_t before = rank_of_vectors(rows);
        rows.push_back(w);
        if (rank_of_vectors(rows) != before) throw std::invalid_argument("input tensor is not in the module");
    }

    LieMatrix g = transport == Transport::J ? cayley_J() : conj(cayley_J());
    QTensor v = apply_tensor_power(g, to_quad(w), d);
    std::size_t lead = 0;
    while (lead < v.size() && v[lead].is_zero()) ++lead;
    if (lead == v.size()) throw std::invalid_argument("zero vector has no weight");

    // Two generic rational points of T' pin down (n, n'): no root-of-unity coincidences.
    const std::pair<BigRational, BigRational> points[] = {{BigRational(1, 2), BigRational(1, 3)},
                                                          {BigRational(2, 7), BigRational(3, 5)}};
    std::optional<std::pair<long, long>> found;
    long bound = static_cast<long>(d);
    for (const auto& [t, tp] : points) {
        QTensor moved = apply_tensor_power(compact_torus_point(t, tp), v, d);
        QuadGaussian ratio = moved[lead] / v[lead];
        for (std::size_t j = 0; j < v.size(); ++j)
            if (moved[j] != ratio * v[j]) throw std::logic_error("transported vector is not a T' weight vector");
        BigRational x, y, xp, yp;
        circle_point(t, x, y);
        circle_point(tp, xp, yp);
        QuadGaussian z = QuadGaussian(x) + kI * QuadGaussian(y);
        QuadGaussian zp = QuadGaussian(xp) + kI * QuadGaussian(yp);
        std::vector<std::pair<long, long>> matches;
        for (long n = -bound; n <= bound; ++n)
            for (long np = -bound; np <= bound; ++np)
                if (power(z, n) * power(zp, np) == ratio) matches.emplace_back(n, np);
        if (matches.size() != 1) throw std::logic_error("could not identify the T' character");
        if (found && *found != matches[0]) throw std::logic_error("inconsistent T' character across points");
        found = matches[0];
    }
    long t_shift = (module.weight.c - static_cast<long>(d)) / 2;
    return AnalyticWeight(found->first, found->second, static_cast<long>(d) + 2 * t_shift);
}

QuadGaussian transported_pairing(const WeylModule& module) {
    const auto& lam = module.weight;
    std::size_t d = module.degree;
    std::optional<std::size_t> pick;
    for (std::size_t j = 0; j < module.weights.size(); ++j)
        if (module.weights[j].k == -lam.k && module.weights[j].kprime == lam.kprime) {
            if (pick) throw std::logic_error("weight (-k, k') should have multiplicity one");
            pick = j;
        }
    if (!pick) throw std::logic_error("weight (-k, k') missing from the module");
    QTensor w = to_quad(module.basis[*pick]);
    QTensor v = apply_tensor_power(cayley_J(), w, d);
    QTensor vbar = apply_tensor_power(conj(cayley_J()), w, d);

    // [a, b] = sum_I a_I b_{partner(I)} prod J(i_j, partner(i_j)), partner: 0<->2, 1<->3.
    QuadGaussian total(0);
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (v[idx].is_zero()) continue;
        auto dig = digits_of(idx, d);
        std::vector<int> partner(d);
        int sign = 1;
        for (std::size_t j = 0; j < d; ++j) {
            partner[j] = (dig[j] + 2) % 4;
            sign *= form_entry(dig[j], partner[j]);
        }
        total += v[idx] * vbar[index_of(partner)] * QuadGaussian(sign);
    }
    return total;
}

}  // namespace gsp4
