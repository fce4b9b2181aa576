#include "doctest.h"

#include "degen/cyclotomic.hpp"

using namespace degen;

namespace {

Poly poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.push_back(x);
    return Poly(v);
}

}  // namespace

TEST_CASE("cyclotomic polynomial table") {
    const std::vector<std::pair<unsigned, Poly>> table = {
        {1, poly({-1, 1})},
        {2, poly({1, 1})},
        {3, poly({1, 1, 1})},
        {4, poly({1, 0, 1})},
        {5, poly({1, 1, 1, 1, 1})},
        {6, poly({1, -1, 1})},
        {8, poly({1, 0, 0, 0, 1})},
        {9, poly({1, 0, 0, 1, 0, 0, 1})},
        {10, poly({1, -1, 1, -1, 1})},
        {12, poly({1, 0, -1, 0, 1})},
        {15, poly({1, -1, 0, 1, -1, 1, 0, -1, 1})},
        {30, poly({1, 1, 0, -1, -1, -1, 0, 1, 1})},
    };
    for (const auto& [d, expected] : table) {
        CAPTURE(d);
        CHECK(cyclotomic_poly(d) == expected);
    }
}

TEST_CASE("totient values") {
    const unsigned long n[] = {1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 30};
    const unsigned long phi[] = {1, 1, 2, 2, 4, 2, 4, 6, 4, 4, 8, 8};
    for (int i = 0; i < 12; ++i) CHECK(totient(n[i]) == phi[i]);
    for (unsigned d = 1; d <= 30; ++d) CHECK(cyclotomic_poly(d).degree() == static_cast<int>(totient(d)));
}

TEST_CASE("product over divisors gives x^n - 1") {
    for (unsigned n = 1; n <= 24; ++n) {
        Poly prod = poly({1});
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic_poly(d);
        CHECK(prod == Poly::monomial(n) - poly({1}));
    }
}

TEST_CASE("charpoly of integer 3x3") {
    Matrix m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    CHECK(characteristic_poly(m) == poly({-18, 24, -9, 1}));
    CHECK(characteristic_poly(m).eval(m).is_zero());
}

TEST_CASE("cyclotomic factorization") {
    // (x-1)^3 (x+1) (x^2-x+1)
    Poly p = poly({-1, 3, -3, 0, 3, -3, 1});
    auto f = cyclotomic_factor(p);
    CHECK(f.ok());
    CHECK(f.orders == std::map<unsigned, std::size_t>{{1, 3}, {2, 1}, {6, 1}});
    auto g = cyclotomic_factor(poly({-2, 1}));
    CHECK_FALSE(g.ok());
}

TEST_CASE("division with remainder") {
    auto d = divide(poly({-1, 0, 0, 1}), poly({-1, 1}));
    CHECK(d.quotient == poly({1, 1, 1}));
    CHECK(d.remainder.is_zero());
    auto e = divide(poly({1, 0, 1}), poly({1, 1}));
    CHECK(e.remainder == poly({2}));
    CHECK(gcd_ul(12, 18) == 6);
    CHECK(lcm_ul(4, 6) == 12);
}
