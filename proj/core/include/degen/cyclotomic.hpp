#pragma once

#include <map>
#include <vector>

#include "degen/ratlin.hpp"

namespace degen {

// Dense univariate polynomial over Q, coefficient i multiplies x^i.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly monomial(std::size_t deg, const Rational& c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly derivative() const;
    Matrix eval(const Matrix& m) const;

private:
    void trim();
    std::vector<Rational> c_;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};
PolyDivision divide(const Poly& a, const Poly& b);

unsigned long totient(unsigned long n);
unsigned long gcd_ul(unsigned long a, unsigned long b);
unsigned long lcm_ul(unsigned long a, unsigned long b);

Poly cyclotomic_poly(unsigned d);
Poly characteristic_poly(const Matrix& m);

// multiplicity of each cyclotomic factor; nullopt-like failure is signalled by `ok`
struct CyclotomicFactorization {
    std::map<unsigned, std::size_t> orders;
    Poly leftover;  // 1 when fully cyclotomic
    bool ok() const { return leftover.degree() == 0; }
};
CyclotomicFactorization cyclotomic_factor(const Poly& p);

}  // namespace degen
