#include "gsp4/modforms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gsp4/linalg.hpp"
#include "gsp4/parallel.hpp"

namespace gsp4 {

namespace {

BigInt power(long base, unsigned long e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
    return out;
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

QSeries::QSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("q-series needs at least the constant term");
}

QSeries QSeries::zero(long precision) {
    if (precision < 0) throw std::invalid_argument("negative precision");
    return QSeries(std::vector<BigRational>(static_cast<std::size_t>(precision + 1), 0));
}

const BigRational& QSeries::operator[](long n) const {
    if (n < 0 || n > precision())
        throw std::out_of_range("coefficient " + std::to_string(n) + " beyond precision " + std::to_string(precision()));
    return coeffs_[static_cast<std::size_t>(n)];
}

QSeries QSeries::truncate(long precision) const {
    if (precision < 0 || precision > this->precision()) throw std::invalid_argument("cannot truncate to that precision");
    return QSeries(std::vector<BigRational>(coeffs_.begin(), coeffs_.begin() + precision + 1));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries out = QSeries::zero(std::min(a.precision(), b.precision()));
    for (long n = 0; n <= out.precision(); ++n) out.coeffs_[n] = a[n] + b[n];
    return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    QSeries out = QSeries::zero(std::min(a.precision(), b.precision()));
    for (long n = 0; n <= out.precision(); ++n) out.coeffs_[n] = a[n] - b[n];
    return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries out = QSeries::zero(std::min(a.precision(), b.precision()));
    parallel_for(static_cast<std::size_t>(out.precision() + 1), [&](std::size_t n) {
        BigRational s = 0;
        for (std::size_t i = 0; i <= n; ++i)
            if (a.coeffs_[i] != 0 && b.coeffs_[n - i] != 0) s += a.coeffs_[i] * b.coeffs_[n - i];
        out.coeffs_[n] = s;
    });
    return out;
}

QSeries operator*(const BigRational& s, const QSeries& a) {
    QSeries out = a;
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

bool operator==(const QSeries& a, const QSeries& b) {
    long m = std::min(a.precision(), b.precision());
    for (long n = 0; n <= m; ++n)
        if (a[n] != b[n]) return false;
    return true;
}

QSeries QSeries::pow(unsigned e) const {
    QSeries out = zero(precision());
    out.coeffs_[0] = 1;
    for (unsigned k = 0; k < e; ++k) out = out * *this;
    return out;
}

// ---------------------------------------------------------------------------

BigInt divisor_sigma(unsigned k, long n) {
    if (n < 1) throw std::invalid_argument("divisor sums need n >= 1");
    BigInt s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        s += power(d, k);
        if (d != n / d) s += power(n / d, k);
    }
    return s;
}

QSeries eisenstein(long k, long precision) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("Eisenstein series need an even weight >= 4, got " + std::to_string(k));
    if (precision < 0) throw std::invalid_argument("negative precision");
    BigRational factor = -BigRational(2 * k) / bernoulli(static_cast<unsigned long>(k));
    QSeries out = QSeries::zero(precision);
    std::vector<BigRational> c(static_cast<std::size_t>(precision + 1));
    c[0] = 1;
    parallel_for(static_cast<std::size_t>(precision), [&](std::size_t i) {
        long n = static_cast<long>(i) + 1;
        c[i + 1] = factor * BigRational(divisor_sigma(static_cast<unsigned>(k - 1), n));
    });
    return QSeries(std::move(c));
}

QSeries delta(long precision) {
    if (precision < 2) throw std::invalid_argument("delta needs precision >= 2");
    QSeries e4 = eisenstein(4, precision), e6 = eisenstein(6, precision);
    return make_rational(1, 1728) * (e4.pow(3) - e6.pow(2));
}

QSeries hecke_operator(const QSeries& f, long weight, long n, long target) {
    if (n < 1) throw std::invalid_argument("Hecke operators T_n need n >= 1");
    if (target < 0 || n * target > f.precision())
        throw std::invalid_argument("insufficient precision: T_" + std::to_string(n) + " to precision " +
                                    std::to_string(target) + " needs " + std::to_string(n * target) + ", have " +
                                    std::to_string(f.precision()));
    std::vector<BigRational> c(static_cast<std::size_t>(target + 1));
    parallel_for(c.size(), [&](std::size_t i) {
        long m = static_cast<long>(i);
        if (m == 0) {
            c[0] = BigRational(divisor_sigma(static_cast<unsigned>(weight - 1), n)) * f[0];
            return;
        }
        long g = std::gcd(m, n);
        BigRational s = 0;
        for (long d = 1; d <= g; ++d)
            if (g % d == 0) s += BigRational(power(d, static_cast<unsigned long>(weight - 1))) * f[m * n / (d * d)];
        c[i] = s;
    });
    return QSeries(std::move(c));
}

QSeries hecke_operator(const QSeries& f, long weight, long n) {
    if (n < 1) throw std::invalid_argument("Hecke operators T_n need n >= 1");
    return hecke_operator(f, weight, n, f.precision() / n);
}

long modular_dimension(long k) {
    if (k < 0 || k % 2 != 0) return 0;
    if (k % 12 == 2) return k / 12;
    return k / 12 + 1;
}

std::vector<QSeries> echelon_basis(long k, long precision) {
    if (k < 0 || k % 2 != 0 || k == 2) throw std::invalid_argument("no modular forms of weight " + std::to_string(k));
    long dim = modular_dimension(k);
    if (precision < dim) throw std::invalid_argument("echelon basis of weight " + std::to_string(k) + " needs precision >= " + std::to_string(dim));
    QSeries e4 = eisenstein(4, precision), e6 = eisenstein(6, precision);
    std::vector<QSeries> monomials;
    for (long b = 0; 6 * b <= k; ++b)
        if ((k - 6 * b) % 4 == 0) monomials.push_back(e4.pow(static_cast<unsigned>((k - 6 * b) / 4)) * e6.pow(static_cast<unsigned>(b)));
    if (static_cast<long>(monomials.size()) != dim) throw std::logic_error("monomial count differs from the dimension");

    Matrix<BigRational> m(monomials.size(), static_cast<std::size_t>(precision + 1));
    for (std::size_t r = 0; r < monomials.size(); ++r)
        for (long c = 0; c <= precision; ++c) m(r, static_cast<std::size_t>(c)) = monomials[r][c];
    auto pivots = rref(m);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] != r) throw std::logic_error("leading coefficients of the echelon basis are not 1, q, q^2, ...");
    std::vector<QSeries> out;
    for (std::size_t r = 0; r < monomials.size(); ++r) out.emplace_back(m.row(r));
    return out;
}

// ---------------------------------------------------------------------------

void HeckeEigenSystem::check_hecke_relations() const {
    long b = bound();
    if (b < 1 || eigenvalues[1] != 1) throw std::logic_error("eigen system is not normalized (a_1 != 1)");
    for (long m = 2; m <= b; ++m)
        for (long n = 2; m * n <= b; ++n)
            if (std::gcd(m, n) == 1 && (*this)[m * n] != (*this)[m] * (*this)[n])
                throw std::logic_error("multiplicativity fails at " + std::to_string(m) + "*" + std::to_string(n));
    for (long p = 2; p <= b; ++p) {
        if (prime_divisors(p).front() != p) continue;
        BigInt pk = power(p, static_cast<unsigned long>(weight - 1));
        long prev = 1, cur = p;
        while (cur <= b / p) {
            long next = cur * p;
            if ((*this)[next] != (*this)[p] * (*this)[cur] - pk * (*this)[prev])
                throw std::logic_error("prime-power recursion fails at " + std::to_string(next));
            prev = cur;
            cur = next;
        }
    }
}

EigenSystem HeckeEigenSystem::as_eigen_system() const {
    EigenSystem e;
    e.min_poly = {1, 0};
    for (long n = 1; n <= bound(); ++n) e.values["T_" + std::to_string(n)] = {(*this)[n]};
    return e;
}

HeckeEigenSystem cusp_eigensystem(long k, long bound) {
    if (k % 2 != 0 || k < 12 || modular_dimension(k) != 2)
        throw std::invalid_argument("weight " + std::to_string(k) + " does not have a one-dimensional cusp space");
    if (bound < 2) throw std::invalid_argument("eigen system bound must be at least 2");
    // T_2 needs twice the precision to be checked on the whole range.
    std::vector<QSeries> basis = echelon_basis(k, 2 * bound);
    const QSeries& f = basis[1];
    if (f[0] != 0 || f[1] != 1) throw std::logic_error("echelon cusp form is not q + O(q^2)");

    QSeries t2 = hecke_operator(f, k, 2, bound);
    BigRational lambda = t2[1];
    if (!(t2 == lambda * f.truncate(bound))) throw std::logic_error("cusp form is not a T_2 eigenvector");
    if (lambda != f[2]) throw std::logic_error("T_2 eigenvalue differs from a_2");

    HeckeEigenSystem sys;
    sys.weight = k;
    sys.eigenvalues.assign(static_cast<std::size_t>(bound + 1), 0);
    for (long n = 1; n <= bound; ++n) {
        if (!is_integer(f[n])) throw std::logic_error("non-integral eigenvalue at n=" + std::to_string(n));
        sys.eigenvalues[static_cast<std::size_t>(n)] = f[n].get_num();
    }
    sys.check_hecke_relations();
    return sys;
}

HeckeEigenSystem eisenstein_eigensystem(long k, long bound) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("Eisenstein series need an even weight >= 4, got " + std::to_string(k));
    if (bound < 1) throw std::invalid_argument("eigen system bound must be at least 1");
    HeckeEigenSystem sys;
    sys.weight = k;
    sys.eigenvalues.assign(static_cast<std::size_t>(bound + 1), 0);
    parallel_for(static_cast<std::size_t>(bound), [&](std::size_t i) {
        sys.eigenvalues[i + 1] = divisor_sigma(static_cast<unsigned>(k - 1), static_cast<long>(i) + 1);
    });
    sys.check_hecke_relations();
    return sys;
}

std::pair<long, long> eisenstein_congruence_demo(long bound) {
    if (bound < 50) throw std::invalid_argument("congruence demo needs bound >= 50");
    BigRational z = zeta_even_over_pi(12);
    if (z.get_num() != 691) throw std::logic_error("numerator of zeta(12)/pi^12 is not 691");
    QSeries d = delta(bound);
    for (long n = 1; n <= bound; ++n) {
        if (!is_integer(d[n])) throw std::logic_error("tau(" + std::to_string(n) + ") is not an integer");
        BigInt diff = divisor_sigma(11, n) - d[n].get_num();
        if (!mpz_divisible_ui_p(diff.get_mpz_t(), 691))
            throw std::logic_error("tau(" + std::to_string(n) + ") is not congruent to sigma_11 mod 691");
    }
    return {691, bound};
}

}  // namespace gsp4
