#include "gsp4/ktypes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gsp4 {

std::string to_string(TauGenerator g) {
    switch (g) {
        case TauGenerator::H1: return "H1";
        case TauGenerator::H2: return "H2";
        case TauGenerator::Raise: return "RAISE";
        case TauGenerator::Lower: return "LOWER";
    }
    return "?";
}

TauModule::TauModule(long k, long kprime) : k_(k), kprime_(kprime) {
    if (k < kprime) throw std::invalid_argument("tau_(k,k') needs k >= k'");
}

std::vector<BigRational> TauModule::apply(TauGenerator g, const std::vector<BigRational>& v) const {
    if (v.size() != dimension()) throw std::invalid_argument("vector has the wrong length for this K-type");
    std::vector<BigRational> out(dimension(), 0);
    long d = static_cast<long>(this->d());
    for (long s = 0; s <= d; ++s) {
        const BigRational& x = v[static_cast<std::size_t>(s)];
        if (x == 0) continue;
        switch (g) {
            case TauGenerator::H1: out[static_cast<std::size_t>(s)] += (s + kprime_) * x; break;
            case TauGenerator::H2: out[static_cast<std::size_t>(s)] += (k_ - s) * x; break;
            case TauGenerator::Raise:
                if (s < d) out[static_cast<std::size_t>(s + 1)] += (s + 1) * x;
                break;
            case TauGenerator::Lower:
                if (s > 0) out[static_cast<std::size_t>(s - 1)] += (d - s + 1) * x;
                break;
        }
    }
    return out;
}

std::vector<BigRational> tau_action(const TauModule& module, TauGenerator g, std::size_t s) {
    if (s > module.d())
        throw std::out_of_range("basis index " + std::to_string(s) + " outside 0.." + std::to_string(module.d()));
    std::vector<BigRational> e(module.dimension(), 0);
    e[s] = 1;
    return module.apply(g, e);
}

// ---------------------------------------------------------------------------

namespace {

const std::array<std::pair<int, int>, 3> kPairs = {{{0, 1}, {0, 2}, {1, 2}}};
const char* const kPlusNames[3] = {"X(2,0)", "X(1,1)", "X(0,2)"};
const char* const kMinusNames[3] = {"X(0,-2)", "X(-1,-1)", "X(-2,0)"};
const std::pair<long, long> kPlusWeights[3] = {{2, 0}, {1, 1}, {0, 2}};
const std::pair<long, long> kMinusWeights[3] = {{0, -2}, {-1, -1}, {-2, 0}};

std::vector<QuadGaussian> flatten(const LieMatrix& m) {
    std::vector<QuadGaussian> v;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) v.push_back(m(r, c));
    return v;
}

// Coordinates of x over `basis`; throws if x is outside the span.
std::vector<QuadGaussian> coordinates(const std::vector<LieMatrix>& basis, const LieMatrix& x, const char* what) {
    std::vector<std::vector<QuadGaussian>> rows;
    for (const auto& b : basis) rows.push_back(flatten(b));
    std::vector<QuadGaussian> out;
    if (!solve_row_combination(Matrix<QuadGaussian>::from_rows(rows), flatten(x), out))
        throw std::logic_error(std::string("bracket left ") + what);
    return out;
}

struct Spaces {
    std::vector<LieMatrix> plus, minus, k;
};

const Spaces& spaces() {
    static const Spaces s = [] {
        RootVectors rv = build_root_vectors();
        Matrix2 e11{}, e22{};
        e11[0][0] = 1;
        e22[1][1] = 1;
        return Spaces{{rv.X20, rv.X11, rv.X02}, {rv.X0m2, rv.Xm1m1, rv.Xm20}, {dkappa(e11), dkappa(e22), rv.X1m1, rv.Xm11}};
    }();
    return s;
}

// Index of the pair (a, b) with a < b, and the sign of the reordering.
std::pair<int, int> wedge_slot(int a, int b) {
    if (a == b) return {-1, 0};
    int sign = 1;
    if (a > b) {
        std::swap(a, b);
        sign = -1;
    }
    for (int p = 0; p < 3; ++p)
        if (kPairs[static_cast<std::size_t>(p)].first == a && kPairs[static_cast<std::size_t>(p)].second == b)
            return {p, sign};
    return {-1, 0};
}

}  // namespace

std::string tensor_basis_label(std::size_t j) {
    if (j >= 9) throw std::out_of_range("tensor basis index out of range");
    auto [a, b] = kPairs[j / 3];
    return std::string(kPlusNames[a]) + "^" + kPlusNames[b] + "(x)" + kMinusNames[j % 3];
}

std::pair<long, long> tensor_basis_weight(std::size_t j) {
    if (j >= 9) throw std::out_of_range("tensor basis index out of range");
    auto [a, b] = kPairs[j / 3];
    const auto& c = kMinusWeights[j % 3];
    return {kPlusWeights[a].first + kPlusWeights[b].first + c.first,
            kPlusWeights[a].second + kPlusWeights[b].second + c.second};
}

TensorVector tensor_basis_vector(std::size_t j) {
    if (j >= 9) throw std::out_of_range("tensor basis index out of range");
    TensorVector v;
    v.fill(QuadGaussian(0));
    v[j] = 1;
    return v;
}

LieMatrix k_generator(TauGenerator g) {
    const auto& k = spaces().k;
    switch (g) {
        case TauGenerator::H1: return k[0];
        case TauGenerator::H2: return k[1];
        case TauGenerator::Raise: return k[2];
        case TauGenerator::Lower: return k[3];
    }
    throw std::invalid_argument("unknown generator");
}

Matrix9 adjoint_matrix(const LieMatrix& g) {
    const Spaces& sp = spaces();
    {
        std::vector<std::vector<QuadGaussian>> rows;
        for (const auto& b : sp.k) rows.push_back(flatten(b));
        std::size_t before = rank_of_vectors(rows);
        rows.push_back(flatten(g));
        if (rank_of_vectors(rows) != before) throw std::invalid_argument("generator is not in k_C");
    }
    // ad(g) on p+ and p-, column j = coordinates of [g, basis_j].
    std::array<std::vector<QuadGaussian>, 3> on_plus, on_minus;
    for (std::size_t j = 0; j < 3; ++j) {
        on_plus[j] = coordinates(sp.plus, bracket(g, sp.plus[j]), "p+");
        on_minus[j] = coordinates(sp.minus, bracket(g, sp.minus[j]), "p-");
    }
    Matrix9 m(9, 9);
    for (std::size_t col = 0; col < 9; ++col) {
        auto [a, b] = kPairs[col / 3];
        std::size_t c = col % 3;
        // [g,A]^B (x) C
        for (int x = 0; x < 3; ++x) {
            const QuadGaussian& coef = on_plus[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)];
            if (coef.is_zero()) continue;
            auto [slot, sign] = wedge_slot(x, b);
            if (slot < 0) continue;
            m(static_cast<std::size_t>(3 * slot) + c, col) += coef * QuadGaussian(sign);
        }
        // A^[g,B] (x) C
        for (int x = 0; x < 3; ++x) {
            const QuadGaussian& coef = on_plus[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)];
            if (coef.is_zero()) continue;
            auto [slot, sign] = wedge_slot(a, x);
            if (slot < 0) continue;
            m(static_cast<std::size_t>(3 * slot) + c, col) += coef * QuadGaussian(sign);
        }
        // A^B (x) [g,C]
        for (std::size_t x = 0; x < 3; ++x) {
            const QuadGaussian& coef = on_minus[c][x];
            if (coef.is_zero()) continue;
            m(3 * (col / 3) + x, col) += coef;
        }
    }
    return m;
}

TensorVector adjoint_action_on_tensor(const LieMatrix& g, const TensorVector& v) {
    Matrix9 m = adjoint_matrix(g);
    TensorVector out;
    out.fill(QuadGaussian(0));
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t c = 0; c < 9; ++c)
            if (!v[c].is_zero()) out[r] += m(r, c) * v[c];
    return out;
}

namespace {

Matrix9 generator_matrix(TauGenerator g) {
    static const std::map<TauGenerator, Matrix9> cache = [] {
        std::map<TauGenerator, Matrix9> m;
        for (auto g : {TauGenerator::H1, TauGenerator::H2, TauGenerator::Raise, TauGenerator::Lower})
            m.emplace(g, adjoint_matrix(k_generator(g)));
        return m;
    }();
    return cache.at(g);
}

TensorVector act(const Matrix9& m, const TensorVector& v) {
    TensorVector out;
    out.fill(QuadGaussian(0));
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t c = 0; c < 9; ++c)
            if (!v[c].is_zero()) out[r] += m(r, c) * v[c];
    return out;
}

TensorVector times(TensorVector v, const QuadGaussian& s) {
    for (auto& x : v) x *= s;
    return v;
}

}  // namespace

std::vector<TauEmbedding> decompose_tensor_space() {
    Matrix9 raise = generator_matrix(TauGenerator::Raise);
    Matrix9 lower = generator_matrix(TauGenerator::Lower);
    Matrix9 h1 = generator_matrix(TauGenerator::H1);
    Matrix9 h2 = generator_matrix(TauGenerator::H2);

    std::map<std::pair<long, long>, std::vector<std::size_t>> by_weight;
    for (std::size_t j = 0; j < 9; ++j) by_weight[tensor_basis_weight(j)].push_back(j);

    std::vector<TauEmbedding> out;
    for (const auto& [wt, members] : by_weight) {
        // RAISE restricted to this weight space, as a map into the 9-space.
        Matrix9 restricted(9, members.size());
        for (std::size_t m = 0; m < members.size(); ++m)
            for (std::size_t r = 0; r < 9; ++r) restricted(r, m) = raise(r, members[m]);
        for (const auto& kv : nullspace(restricted)) {
            TensorVector v;
            v.fill(QuadGaussian(0));
            for (std::size_t m = 0; m < members.size(); ++m) v[members[m]] = kv[m];
            std::size_t lead = 0;
            while (v[lead].is_zero()) ++lead;
            QuadGaussian inv = v[lead].inverse();
            for (auto& x : v) x *= inv;

            auto [k, kp] = wt;
            if (act(h1, v) != times(v, QuadGaussian(k)) || act(h2, v) != times(v, QuadGaussian(kp)))
                throw std::logic_error("highest-weight vector has the wrong Cartan eigenvalues");

            TauEmbedding emb;
            emb.k = k;
            emb.kprime = kp;
            std::size_t d = emb.d();
            emb.basis.assign(d + 1, TensorVector{});
            emb.basis[d] = v;
            for (std::size_t s = d; s >= 1; --s) {
                emb.basis[s - 1] = times(act(lower, emb.basis[s]), BigRational(1, static_cast<long>(d - s + 1)));
            }
            TensorVector tail = act(lower, emb.basis[0]);
            for (const auto& x : tail)
                if (!x.is_zero()) throw std::logic_error("lowering string does not terminate");
            out.push_back(std::move(emb));
        }
    }
    std::sort(out.begin(), out.end(), [](const TauEmbedding& a, const TauEmbedding& b) {
        return a.k != b.k ? a.k > b.k : a.kprime > b.kprime;
    });
    std::size_t total = 0;
    for (const auto& e : out) total += e.basis.size();
    if (total != 9) throw std::logic_error("decomposition does not exhaust the 9-space");
    return out;
}

Matrix<BigRational> equivariant_projection(long k, long kprime) {
    auto parts = decompose_tensor_space();
    Matrix9 basis(9, 9);
    std::vector<bool> keep;
    std::size_t col = 0;
    bool found = false;
    for (const auto& e : parts) {
        bool match = e.k == k && e.kprime == kprime;
        found = found || match;
        for (std::size_t s = e.basis.size(); s-- > 0;) {
            for (std::size_t r = 0; r < 9; ++r) basis(r, col) = e.basis[s][r];
            keep.push_back(match);
            ++col;
        }
    }
    if (!found) throw std::invalid_argument("no summand tau_(" + std::to_string(k) + "," + std::to_string(kprime) + ")");
    Matrix9 diag(9, 9);
    for (std::size_t j = 0; j < 9; ++j)
        if (keep[j]) diag(j, j) = 1;
    Matrix9 p = basis * diag * inverse(basis);
    Matrix<BigRational> out(9, 9);
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t c = 0; c < 9; ++c) out(r, c) = p(r, c).to_rational();
    return out;
}

Matrix<BigRational> projection_onto_31() { return equivariant_projection(3, -1); }

Matrix<BigRational> reference_projection_31() {
    auto q = [](long n, long d = 1) { return BigRational(n, d); };
    return Matrix<BigRational>::from_rows({
        {q(1), 0, 0, 0, 0, 0, 0, 0, 0},
        {0, q(1, 2), 0, q(-1, 4), 0, 0, 0, 0, 0},
        {0, 0, q(1, 6), 0, q(-1, 3), 0, q(1, 6), 0, 0},
        {0, q(-1), 0, q(1, 2), 0, 0, 0, 0, 0},
        {0, 0, q(-1, 3), 0, q(2, 3), 0, q(-1, 3), 0, 0},
        {0, 0, 0, 0, 0, q(1, 2), 0, q(-1), 0},
        {0, 0, q(1, 6), 0, q(-1, 3), 0, q(1, 6), 0, 0},
        {0, 0, 0, 0, 0, q(-1, 4), 0, q(1, 2), 0},
        {0, 0, 0, 0, 0, 0, 0, 0, q(1)},
    });
}

std::vector<LoweringTerm> projection_as_lowering_combinations() {
    Matrix<BigRational> p = projection_onto_31();
    Matrix9 lower = generator_matrix(TauGenerator::Lower);
    std::vector<TensorVector> powers{tensor_basis_vector(0)};
    for (int r = 1; r <= 4; ++r) powers.push_back(act(lower, powers.back()));

    std::vector<LoweringTerm> out;
    for (std::size_t j = 0; j < 9; ++j) {
        TensorVector col;
        for (std::size_t r = 0; r < 9; ++r) col[r] = p(r, j);
        bool matched = false;
        for (unsigned power = 0; power <= 4 && !matched; ++power) {
            const TensorVector& target = powers[power];
            std::size_t lead = 0;
            while (lead < 9 && target[lead].is_zero()) ++lead;
            QuadGaussian scale = col[lead] / target[lead];
            bool ok = true;
            for (std::size_t r = 0; r < 9 && ok; ++r) ok = col[r] == scale * target[r];
            if (ok && !scale.is_zero()) {
                out.push_back({scale.to_rational(), power});
                matched = true;
            }
        }
        if (!matched) throw std::logic_error("projection of basis vector " + std::to_string(j + 1) + " is not on the string");
    }
    return out;
}

BigRational raise_lower_eigenvalue(unsigned long d, unsigned long i) {
    if (i > d) throw std::invalid_argument("pairing coefficient needs i <= d");
    TauModule tau(static_cast<long>(d), 0);
    std::vector<BigRational> v(d + 1, 0);
    v[d] = 1;
    for (unsigned long j = 0; j < i; ++j) v = tau.apply(TauGenerator::Lower, v);
    for (unsigned long j = 0; j < i; ++j) v = tau.apply(TauGenerator::Raise, v);
    for (std::size_t s = 0; s < d; ++s)
        if (v[s] != 0) throw std::logic_error("RAISE^i LOWER^i does not preserve the top vector");
    return v[d];
}

BigRational pairing_coefficient(unsigned long d, unsigned long i) {
    if (i > d) throw std::invalid_argument("pairing coefficient needs i <= d");
    BigRational magnitude = BigRational(factorial(i) * factorial(d)) / BigRational(factorial(d - i));
    if (raise_lower_eigenvalue(d, i) != magnitude)
        throw std::logic_error("pairing coefficient disagrees with the K-type action");
    return i % 2 == 0 ? magnitude : BigRational(-magnitude);
}

std::array<std::pair<long, long>, 4> minimal_k_types(long k, long kprime) {
    if (k < kprime || kprime < 0) throw std::invalid_argument("minimal K-types need k >= k' >= 0");
    return {{{k + 3, kprime + 3}, {k + 3, -kprime - 1}, {kprime + 1, -k - 3}, {-kprime - 3, -k - 3}}};
}

}  // namespace gsp4
