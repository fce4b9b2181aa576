#include "doctest.h"
#include "generators.hpp"

#include "degen/quiver.hpp"

using namespace degen;

namespace {

struct FamilyRow {
    Summand s;
    std::size_t psi, phi;
    bool decomposes, lic;
};

}  // namespace

TEST_CASE("normal forms: dimensions and verdicts per family") {
    const FamilyRow rows[] = {
        {{Family::A, 1, 1}, 1, 1, false, true},  {{Family::A, 2, 1}, 2, 2, false, true},
        {{Family::B, 1, 1}, 1, 1, false, false}, {{Family::B, 2, 1}, 2, 2, false, false},
        {{Family::C, 1, 1}, 1, 0, true, true},   {{Family::C, 3, 1}, 3, 2, true, true},
        {{Family::D, 0, 1}, 0, 1, true, true},   {{Family::D, 1, 1}, 1, 2, false, false},
        {{Family::E, 1, 3}, 2, 2, true, true},   {{Family::E, 2, 6}, 4, 4, true, true},
    };
    for (const auto& row : rows) {
        CAPTURE(summand_string(row.s));
        QuiverRep r = normal_form(row.s);
        CHECK(validate(r).empty());
        CHECK(r.psi_dim() == row.psi);
        CHECK(r.phi_dim() == row.phi);
        CHECK(decomposes(r) == row.decomposes);
        CHECK(local_invariant_cycle(r) == row.lic);
        CHECK(cs_sequence(r).exact() == row.decomposes);
        SummandMultiset expect{{row.s, row.s.family == Family::E ? static_cast<long>(row.psi / row.s.size) : 1}};
        CHECK(decompose_indecomposables(r) == expect);
    }
}

TEST_CASE("stalks and costalks of small summands") {
    CHECK(stalk(normal_form({Family::C, 2, 1})) == Stalk{1, 0});
    CHECK(costalk(normal_form({Family::C, 2, 1})) == Costalk{0, 1});
    CHECK(stalk(normal_form({Family::D, 0, 1})) == Stalk{0, 1});
    CHECK(costalk(normal_form({Family::D, 0, 1})) == Costalk{1, 0});
}

TEST_CASE("validation catches broken monodromy relations") {
    QuiverRep r = normal_form({Family::C, 2, 1});
    r.var = r.var.scaled(2);
    CHECK_FALSE(validate(r).empty());
    CHECK_THROWS_AS(require_valid(r), InputError);
    QuiverRep shapes = normal_form({Family::C, 2, 1});
    shapes.can = Matrix(3, 3);
    CHECK_FALSE(validate(shapes).empty());
}

TEST_CASE("dualize swaps A and B, fixes the rest") {
    for (auto f : {Family::A, Family::B, Family::C, Family::D}) {
        for (int size = (f == Family::D ? 0 : 1); size <= 3; ++size) {
            Summand s{f, size, 1};
            auto dual = decompose_indecomposables(dualize(normal_form(s)));
            CHECK(dual == dual_multiset({{s, 1}}));
        }
    }
    auto e = decompose_indecomposables(dualize(normal_form({Family::E, 2, 4})));
    CHECK(e == SummandMultiset{{{Family::E, 2, 4}, 2}});
}

TEST_CASE("randomized construct-then-decompose") {
    testing::Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        auto m = testing::random_multiset(rng, 8, trial % 2 == 0);
        QuiverRep r = build(m);
        const auto p = testing::random_invertible(rng, r.psi_dim());
        const auto q = testing::random_invertible(rng, r.phi_dim());
        QuiverRep conj = change_basis(r, p, q);
        CHECK(validate(conj).empty());
        CHECK(decompose_indecomposables(conj) == m);
        CHECK(decompose_indecomposables(dualize(conj)) == dual_multiset(m));
    }
}

TEST_CASE("splitting check refuses non-self-dual input") {
    CHECK_THROWS_AS(theorem_a4_check(normal_form({Family::A, 1, 1})), InputError);
    QuiverRep both = direct_sum(normal_form({Family::A, 1, 1}), normal_form({Family::B, 1, 1}));
    Report rep = theorem_a4_check(both);
    CHECK(rep.ok());
    auto v = a4_verdicts(both);
    CHECK_FALSE(v.decomposes);
    CHECK(v.agree());
}

TEST_CASE("realize a spec with a phantom") {
    LmhsSpec s{1, {{{1, 1}, 2, 1, 0, 1}, {{1, 0}, 1, 3, 1, 1}, {{0, 1}, 1, 3, 2, 1}}};
    QuiverRep r = realize(s, Diagram{{{1, 1}, 2}});
    auto m = decompose_indecomposables(r);
    CHECK(m == SummandMultiset{{{Family::C, 2, 1}, 1}, {{Family::D, 0, 1}, 2}, {{Family::E, 1, 3}, 2}});
    CHECK(stalk(r).h_minus1 == 1);
    LmhsSpec lonely{1, {{{1, 0}, 1, 3, 1, 1}}};
    CHECK_THROWS_AS(realize(lonely, {}), InputError);
}

TEST_CASE("build rejects fractional Galois orbits") {
    CHECK_THROWS_AS(build({{{Family::E, 1, 5}, 3}}), InputError);
}
