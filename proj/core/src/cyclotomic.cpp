#include "degen/cyclotomic.hpp"

#include <mutex>
#include <numeric>

namespace degen {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_) x.canonicalize();
    trim();
}

Poly Poly::monomial(std::size_t deg, const Rational& c) {
    std::vector<Rational> v(deg + 1, 0);
    v[deg] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly::coeff(std::size_t i) const {
    static const Rational zero(0);
    return i < c_.size() ? c_[i] : zero;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(v));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(v));
}

Matrix Poly::eval(const Matrix& m) const {
    if (!m.square()) throw DimensionError("polynomial evaluation needs a square matrix");
    Matrix acc = Matrix::zero(m.rows(), m.cols());
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * m;
        for (std::size_t d = 0; d < m.rows(); ++d) acc(d, d) += c_[i];
    }
    return acc;
}

PolyDivision divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
    const Rational lead = b.coeff(static_cast<std::size_t>(db));
    for (int i = a.degree(); i >= db; --i) {
        Rational f = rem[static_cast<std::size_t>(i)] / lead;
        if (f == 0) continue;
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
    }
    return {Poly(std::move(q)), Poly(std::move(rem))};
}

unsigned long gcd_ul(unsigned long a, unsigned long b) { return std::gcd(a, b); }
unsigned long lcm_ul(unsigned long a, unsigned long b) { return std::lcm(a, b); }

unsigned long totient(unsigned long n) {
    if (n == 0) return 0;
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

Poly cyclotomic_poly(unsigned d) {
    if (d == 0) throw std::invalid_argument("cyclotomic order must be >= 1");
    static std::mutex mu;
    static std::map<unsigned, Poly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    Poly p = Poly::monomial(d) - Poly::monomial(0);
    for (unsigned e = 1; e < d; ++e)
        if (d % e == 0) p = divide(p, cyclotomic_poly(e)).quotient;
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(d, p);
    return p;
}

// Faddeev-LeVerrier: exact over Q, fine at the sizes we handle
Poly characteristic_poly(const Matrix& m) {
    if (!m.square()) throw DimensionError("characteristic polynomial needs a square matrix");
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1, 0);
    c[n] = 1;
    Matrix mk = Matrix::zero(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix shifted = mk;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
        mk = m * shifted;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return Poly(std::move(c));
}

CyclotomicFactorization cyclotomic_factor(const Poly& p) {
    CyclotomicFactorization out;
    Poly rest = p;
    if (rest.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    // phi(d) >= sqrt(d/2), so no cyclotomic factor of degree <= n has order above 2n^2
    const auto n = static_cast<unsigned long>(std::max(rest.degree(), 1));
    const unsigned long bound = 2 * n * n + 2;
    for (unsigned d = 1; d <= bound && rest.degree() > 0; ++d) {
        if (totient(d) > static_cast<unsigned long>(rest.degree())) continue;
        const Poly phi = cyclotomic_poly(d);
        for (;;) {
            auto qr = divide(rest, phi);
            if (!qr.remainder.is_zero()) break;
            rest = qr.quotient;
            ++out.orders[d];
        }
    }
    out.leftover = rest;
    return out;
}

}  // namespace degen
