#include "doctest.h"
#include "generators.hpp"

#include "degen/hodge.hpp"

using namespace degen;

TEST_CASE("diagram arithmetic") {
    Diagram a{{{1, 0}, 1}, {{0, 1}, 1}};
    Diagram b{{{1, 1}, 2}};
    CHECK(add(a, b).mass() == 4);
    CHECK(twist(b, 1) == Diagram{{{2, 2}, 2}});
    CHECK(dual(a) == Diagram{{{-1, 0}, 1}, {{0, -1}, 1}});
    CHECK(subtract(add(a, b), a) == b);
    CHECK_THROWS_AS(subtract(a, b), ConsistencyError);
    CHECK(grF(add(a, b), 1) == 3);
    CHECK(weight_dims(add(a, b)) == std::map<int, long>{{1, 2}, {2, 2}});
    Diagram c;
    c.set(3, 3, 0);
    CHECK(c.empty());
    CHECK(a.leq(add(a, b)));
    CHECK_FALSE(b.leq(a));
}

TEST_CASE("signed tables") {
    SignedTable t;
    Diagram a{{{1, 1}, 3}};
    accumulate(t, a, 1);
    accumulate(t, a, -1);
    CHECK(signed_zero(t));
    accumulate(t, Diagram{{{0, 2}, 1}}, -1);
    PQ where;
    long v = 0;
    CHECK_FALSE(signed_zero(t, &where, &v));
    CHECK(where == PQ{0, 2});
    CHECK(v == -1);
    CHECK_THROWS_AS(to_diagram(t, "test"), ConsistencyError);
}

TEST_CASE("lmhs of a nodal curve H^1") {
    // one length-2 unipotent string from (1,1) down to (0,0)
    LmhsSpec s{1, {{{1, 1}, 2, 1, 0, 1}}};
    CHECK_NOTHROW(validate(s));
    CHECK(diagram(s) == Diagram{{{1, 1}, 1}, {{0, 0}, 1}});
    CHECK(ker_T_minus_I(s) == Diagram{{{0, 0}, 1}});
    CHECK(coker_T_minus_I(s) == Diagram{{{1, 1}, 1}});
    CHECK(ker_Tss_minus_I(s) == diagram(s));
}

TEST_CASE("lmhs validation errors") {
    LmhsSpec off{1, {{{1, 0}, 2, 1, 0, 1}}};  // p+q should be 2
    CHECK_THROWS_AS(validate(off), InputError);
    LmhsSpec zero_mult{1, {{{1, 0}, 1, 1, 0, 0}}};
    CHECK_THROWS_AS(validate(zero_mult), InputError);
    LmhsSpec bad_exp{1, {{{1, 0}, 1, 6, 2, 1}}};
    CHECK_THROWS_AS(validate(bad_exp), InputError);
    LmhsSpec neg_len{1, {{{1, 0}, 0, 1, 0, 1}}};
    CHECK_THROWS_AS(validate(neg_len), InputError);
}

TEST_CASE("canonical merges duplicates") {
    LmhsSpec s{2, {{{1, 1}, 1, 1, 0, 2}, {{2, 0}, 1, 1, 0, 1}, {{1, 1}, 1, 1, 0, 3}}};
    auto c = canonical(s);
    CHECK(c.strings.size() == 2);
    CHECK(c.dim() == 6);
    CHECK(canonical(c) == c);
}

TEST_CASE("galois linter") {
    // order 6 needs exponents 1 and 5 together, swapped under conjugation
    LmhsSpec ok{1, {{{1, 0}, 1, 6, 1, 1}, {{0, 1}, 1, 6, 5, 1}}};
    CHECK(galois_balance_warnings(ok).empty());
    LmhsSpec lonely{1, {{{1, 0}, 1, 6, 1, 1}}};
    CHECK_FALSE(galois_balance_warnings(lonely).empty());
    LmhsSpec unpaired{1, {{{1, 0}, 1, 6, 1, 1}, {{1, 0}, 1, 6, 5, 1}}};
    CHECK_FALSE(galois_balance_warnings(unpaired).empty());
}

TEST_CASE("random specs are valid, balanced and symmetric") {
    testing::Rng rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = trial % 4;
        auto s = testing::random_spec(rng, k, 4);
        CHECK_NOTHROW(validate(s));
        CHECK(galois_balance_warnings(s).empty());
        Diagram d = diagram(s);
        for (const auto& [pq, m] : d.entries()) CHECK(d.at(pq.second, pq.first) == m);
        CHECK(ker_T_minus_I(s).mass() == coker_T_minus_I(s).mass());
        CHECK(ker_T_minus_I(s).leq(ker_Tss_minus_I(s)));
    }
}
