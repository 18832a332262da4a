#include "gsp4/exactnum.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace gsp4 {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigRational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    auto valid_int = [](const std::string& t) {
        std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (start == t.size()) return false;
        for (std::size_t k = start; k < t.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
        return true;
    };
    auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw std::invalid_argument("not a rational number: '" + text + "'");
    BigInt n(strip_plus(num), 10), d(strip_plus(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return make_rational(n, d);
}

std::string to_string(const BigInt& z) { return z.get_str(10); }

std::string to_string(const BigRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

namespace {

constexpr const char* kPiDigits =
    "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706798";

std::string format_float(const mpf_class& v, int digits) {
    mp_exp_t exp = 0;
    std::string mant = v.get_str(exp, 10, static_cast<std::size_t>(digits));
    if (mant.empty() || mant == "0") return "0";
    bool neg = mant[0] == '-';
    if (neg) mant.erase(0, 1);
    std::ostringstream os;
    if (neg) os << '-';
    os << mant[0];
    if (mant.size() > 1) os << '.' << mant.substr(1);
    os << "e" << (exp - 1);
    return os.str();
}

}  // namespace

std::string to_decimal(const BigRational& q, int digits) {
    mpf_class v(q, 512);
    return format_float(v, digits);
}

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

// ---------------------------------------------------------------------------

BigRational QuadGaussian::to_rational() const {
    if (!is_rational()) throw std::domain_error("element of Q(i,sqrt2) is not rational: " + to_string());
    return c_[0];
}

QuadGaussian& QuadGaussian::operator+=(const QuadGaussian& o) {
    for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
}

QuadGaussian& QuadGaussian::operator-=(const QuadGaussian& o) {
    for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
}

QuadGaussian& QuadGaussian::operator*=(const QuadGaussian& o) {
    // basis 1, i, s, is with i^2 = -1, s^2 = 2
    const BigRational &a0 = c_[0], &a1 = c_[1], &a2 = c_[2], &a3 = c_[3];
    const BigRational &b0 = o.c_[0], &b1 = o.c_[1], &b2 = o.c_[2], &b3 = o.c_[3];
    BigRational r0 = a0 * b0 - a1 * b1 + 2 * a2 * b2 - 2 * a3 * b3;
    BigRational r1 = a0 * b1 + a1 * b0 + 2 * a2 * b3 + 2 * a3 * b2;
    BigRational r2 = a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1;
    BigRational r3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
    c_[0] = std::move(r0);
    c_[1] = std::move(r1);
    c_[2] = std::move(r2);
    c_[3] = std::move(r3);
    return *this;
}

QuadGaussian QuadGaussian::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(i,sqrt2)");
    // x * conj(x) = P + Q sqrt2 lies in Q(sqrt2); multiply through by P - Q sqrt2.
    QuadGaussian xc = *this * conj();
    QuadGaussian rel = xc.conj_sqrt2();
    BigRational norm = (xc * rel).to_rational();
    QuadGaussian r = conj() * rel;
    for (auto& c : r.c_) c /= norm;
    return r;
}

std::string QuadGaussian::to_string() const {
    static const char* names[4] = {"", "i", "sqrt2", "i*sqrt2"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
        if (c_[k] == 0) continue;
        BigRational mag = abs(c_[k]);
        bool neg = c_[k] < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (k == 0)
            out += gsp4::to_string(mag);
        else if (mag == 1)
            out += names[k];
        else
            out += gsp4::to_string(mag) + "*" + names[k];
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const QuadGaussian& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------

PiQuantity PiQuantity::inverse() const {
    if (coeff_ == 0) throw std::domain_error("inverse of zero pi-quantity");
    BigRational inv = 1 / coeff_;
    return {inv, -pi_exp_};
}

PiQuantity PiQuantity::pow(long n) const {
    PiQuantity base = n < 0 ? inverse() : *this;
    unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.coeff_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.coeff_.get_den_mpz_t(), e);
    return {make_rational(num, den), base.pi_exp_ * static_cast<long>(e)};
}

PiQuantity& PiQuantity::operator+=(const PiQuantity& o) {
    if (pi_exp_ != o.pi_exp_)
        throw std::domain_error("adding pi-quantities with different exponents (" + std::to_string(pi_exp_) +
                                " vs " + std::to_string(o.pi_exp_) + ")");
    coeff_ += o.coeff_;
    return *this;
}

PiQuantity& PiQuantity::operator-=(const PiQuantity& o) {
    PiQuantity neg(-o.coeff_, o.pi_exp_);
    return *this += neg;
}

PiQuantity& PiQuantity::operator*=(const PiQuantity& o) {
    coeff_ *= o.coeff_;
    pi_exp_ += o.pi_exp_;
    return *this;
}

std::string PiQuantity::to_string() const {
    std::string c = gsp4::to_string(coeff_);
    if (pi_exp_ == 0) return c;
    return c + "*pi^" + std::to_string(pi_exp_);
}

std::string PiQuantity::to_decimal(int digits) const {
    mpf_class pi(kPiDigits, 512);
    mpf_class v(coeff_, 512);
    long e = pi_exp_;
    for (long k = 0; k < (e < 0 ? -e : e); ++k) {
        if (e > 0)
            v *= pi;
        else
            v /= pi;
    }
    return format_float(v, digits);
}

std::ostream& operator<<(std::ostream& os, const PiQuantity& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------

long valuation_finite(const BigInt& x, unsigned long p) {
    if (x == 0) throw std::domain_error("valuation of zero is infinite");
    if (p < 2) throw std::invalid_argument("valuation base must be >= 2");
    BigInt t = abs(x);
    long v = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
        ++v;
    }
    return v;
}

long valuation_finite(const BigRational& x, unsigned long p) {
    if (x == 0) throw std::domain_error("valuation of zero is infinite");
    return valuation_finite(BigInt(x.get_num()), p) - valuation_finite(BigInt(x.get_den()), p);
}

LocalValuation valuation(const BigRational& x, unsigned long p) {
    LocalValuation lv;
    lv.prime = p;
    if (x != 0) lv.value = valuation_finite(x, p);
    return lv;
}

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

bool is_prime(unsigned long n) { return is_prime(BigInt(n)); }

// ---------------------------------------------------------------------------

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigRational inverse_factorial(long n) {
    if (n < 0) return 0;
    return make_rational(1, factorial(static_cast<unsigned long>(n)));
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigRational pochhammer(long x, unsigned long n) {
    BigInt acc = 1;
    for (unsigned long j = 0; j < n; ++j) {
        long term = x + static_cast<long>(j);
        if (term == 0) return 0;
        acc *= term;
    }
    return BigRational(acc);
}

BigRational pochhammer_identity_lhs(long b, unsigned long l, unsigned long m) {
    BigRational sum = 0;
    for (unsigned long a = 0; a <= l; ++a) {
        BigRational term = BigRational(binomial(static_cast<long>(l), static_cast<long>(a))) *
                           pochhammer(b - static_cast<long>(a), m);
        if (a % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

BigRational pochhammer_identity_rhs(long b, unsigned long l, unsigned long m) {
    return BigRational(binomial(static_cast<long>(m), static_cast<long>(l)) * factorial(l)) *
           pochhammer(b, m - l);
}

bool pochhammer_identity_check(long b, unsigned long l, unsigned long m) {
    if (l > m) throw std::invalid_argument("pochhammer_identity_check requires l <= m");
    return pochhammer_identity_lhs(b, l, m) == pochhammer_identity_rhs(b, l, m);
}

BigRational bernoulli(unsigned long n) {
    // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
    std::vector<BigRational> b(n + 1);
    b[0] = 1;
    for (unsigned long m = 1; m <= n; ++m) {
        BigRational acc = 0;
        for (unsigned long k = 0; k < m; ++k)
            acc += BigRational(binomial(static_cast<long>(m + 1), static_cast<long>(k))) * b[k];
        b[m] = -acc / BigRational(static_cast<long>(m + 1));
    }
    return b[n];
}

BigRational zeta_even_over_pi(long n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("zeta_even_over_pi needs an even n >= 2, got " + std::to_string(n));
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
    BigRational val = bernoulli(static_cast<unsigned long>(n)) * BigRational(two_pow) /
                      BigRational(factorial(static_cast<unsigned long>(n)));
    if ((n / 2 + 1) % 2 != 0) val = -val;
    return val;
}

BigInt gamma_positive_integer(long n) {
    if (n < 1) throw std::invalid_argument("Gamma is only provided at positive integers");
    return factorial(static_cast<unsigned long>(n - 1));
}

}  // namespace gsp4
