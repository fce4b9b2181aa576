#include "doctest.h"
#include "fixtures.hpp"

#include "degen/degeneration.hpp"

using namespace degen;
using degen::testing::load_body;
using degen::testing::load_degeneration;

TEST_CASE("Kodaira fibres: phantom H^2 is one less than the component count") {
    const std::pair<const char*, long> cases[] = {
        {"kodaira-I1", 0}, {"kodaira-I6star", 10}, {"kodaira-II", 0}, {"kodaira-IVstar", 6}};
    for (const auto& [name, mass] : cases) {
        CAPTURE(name);
        auto fx = load_degeneration(name);
        auto solved = solve_unknown(fx, 2, Position::phantom);
        CHECK(solved.value.mass() == mass);
        if (mass > 0) CHECK(solved.value == Diagram{{{1, 1}, mass}});
        CHECK(check_all(fx).ok());
    }
}

TEST_CASE("cuspidal fibre: all of H^1 vanishes") {
    auto fx = load_degeneration("kodaira-II");
    CHECK(vanishing_cohomology(fx, 1) == Diagram{{{0, 1}, 1}, {{1, 0}, 1}});
    CHECK(invariants(fx, 1).empty());
    CHECK(homology_term(fx, 1).empty());
}

TEST_CASE("K3 with an E8-tilde point: sequences and invariants") {
    auto fx = load_degeneration("k3-E8tilde");
    for (int k = 0; k <= 6; ++k) {
        CAPTURE(k);
        CHECK(check_cs(fx, k).ok());
    }
    CHECK(fx.at(2)->special_fiber == invariants(fx, 2));
    CHECK(vanishing_cohomology(fx, 2) == Diagram{{{2, 1}, 1}, {{1, 2}, 1}, {{1, 1}, 8}});
    CHECK(solve_unknown(fx, 2, Position::special_fiber).value == *fx.at(2)->special_fiber);
    auto all = check_all(fx);
    CHECK(all.ok());
    CHECK(all.find("van.agreement", "k=2")->verdict == Verdict::pass);
}

TEST_CASE("slc-level GrF0 predicate") {
    auto k3 = load_degeneration("k3-E8tilde");
    for (int k = 0; k <= 4; ++k) CHECK(slc_grF0_predicate(k3, k).verdict == Verdict::pass);
    CHECK(check_frontier(k3).ok());

    auto n16 = load_degeneration("n16");
    auto bad = slc_grF0_predicate(n16, 2);
    CHECK(bad.verdict == Verdict::fail);
    CHECK(bad.witness.find("H^k(X_0)=0 lim=1") != std::string::npos);
    // class "none" does not license the predicate, so the frontier report leaves it out
    auto frontier = check_frontier(n16);
    CHECK(frontier.ok());
    const auto* skipped = frontier.find("frontier.slc-grF0", "k=2");
    REQUIRE(skipped != nullptr);
    CHECK(skipped->verdict == Verdict::skipped);

    // promoting the flags makes the same data fail
    n16.flags.singularity = SingularityClass::slc;
    CHECK_FALSE(check_frontier(n16).ok());
}

TEST_CASE("solve: every position on the nodal curve") {
    auto fx = load_degeneration("kodaira-I1");
    CHECK(solve_unknown(fx, 1, Position::special_fiber).value == Diagram{{{0, 0}, 1}});
    CHECK(solve_unknown(fx, 1, Position::invariants).value == Diagram{{{0, 0}, 1}});
    // the top degree needs the phantom pinned down
    CHECK_THROWS_AS(solve_unknown(fx, 2, Position::special_fiber), InputError);
    fx.degrees[2].phantom = Diagram{};
    CHECK(solve_unknown(fx, 2, Position::special_fiber).value == Diagram{{{1, 1}, 1}});
    // one vanishing cycle of type (1,1)
    CHECK(solve_unknown(fx, 1, Position::vanishing).value == Diagram{{{1, 1}, 1}});
}

TEST_CASE("solve: underdetermined and inconsistent requests") {
    auto fx = load_degeneration("kodaira-I1");
    fx.degrees[1].special_fiber.reset();
    fx.degrees[1].lmhs.reset();
    fx.degrees[2].lmhs.reset();
    CHECK_THROWS_AS(solve_unknown(fx, 1, Position::special_fiber), InputError);

    auto broken = load_degeneration("kodaira-I1");
    broken.degrees[2].special_fiber = Diagram{{{1, 1}, 1}, {{0, 0}, 1}};
    CHECK_THROWS_AS(solve_unknown(broken, 2, Position::phantom), ConsistencyError);
    CHECK_FALSE(check_all(broken).ok());
}

TEST_CASE("vanishing cohomology outside the support range is flagged") {
    auto fx = load_degeneration("kodaira-I1");
    fx.degrees[0].vanishing = Diagram{{{0, 0}, 1}};
    auto r = check_support_range(fx);
    CHECK_FALSE(r.ok());
    const auto* c = r.find("van.support", "k=0");
    REQUIRE(c != nullptr);
    CHECK(c->verdict == Verdict::fail);
}

TEST_CASE("phantom hard Lefschetz detects a lopsided phantom") {
    auto fx = load_degeneration("k3-E8tilde");
    CHECK(phantom_hard_lefschetz(fx).ok());
    fx.degrees[1].phantom = Diagram{{{0, 0}, 1}};
    auto r = phantom_hard_lefschetz(fx);
    CHECK_FALSE(r.ok());
    const auto* c = r.find("phantom.hard-lefschetz", "degrees 1/5");
    REQUIRE(c != nullptr);
    CHECK(c->verdict == Verdict::fail);
}

TEST_CASE("validation of degeneration fixtures") {
    auto fx = load_degeneration("kodaira-I1");
    fx.degrees.erase(1);
    CHECK_THROWS_AS(validate(fx), InputError);
    auto wrong = load_degeneration("kodaira-I1");
    wrong.degrees[2].lmhs->degree = 1;
    CHECK_THROWS_AS(validate(wrong), InputError);
    CHECK_THROWS_AS(parse_singularity_class("klt"), InputError);
    CHECK(parse_position("phantom") == Position::phantom);
    CHECK_THROWS_AS(parse_position("middle"), InputError);
}

TEST_CASE("Euler-Poincare rank") {
    auto k3 = load_body<LocalSystemFixture>("elliptic-k3-local-system.json");
    CHECK(euler_poincare_rank(k3.data) == 4);
    auto katz = load_body<LocalSystemFixture>("katz-family.json");
    CHECK(euler_poincare_rank(katz.data) == 7);
    LocalSystemData silly{2, 0, 2, 0, {}};
    CHECK_THROWS_AS(euler_poincare_rank(silly), InputError);
    LocalSystemData bad{0, 0, 1, 2, {}};
    CHECK_THROWS_AS(euler_poincare_rank(bad), InputError);
}

TEST_CASE("Shioda assembly") {
    auto k3 = load_body<LocalSystemFixture>("elliptic-k3-local-system.json");
    auto t = shioda_assemble(*k3.shioda);
    CHECK(t.h0_next == 1);
    CHECK(t.ih1 == 4);
    CHECK(t.phantom == 16);
    CHECK(t.h0_prev == 1);
    CHECK(t.total == 22);
    CHECK(t.diagram == Diagram{{{2, 0}, 1}, {{1, 1}, 20}, {{0, 2}, 1}});

    auto katz = load_body<LocalSystemFixture>("katz-family.json");
    auto u = shioda_assemble(*katz.shioda);
    CHECK(u.total == 10);
    CHECK(u.phantom == 8);
}

TEST_CASE("Milnor number from tail strata") {
    auto tail = load_body<TailFixture>("e12-tail.json");
    CHECK(milnor_number(tail.strata) == 12);
    CHECK(tail_bound_check(tail.strata, *tail.strata.vanishing).ok());
    Diagram too_big{{{2, 0}, 2}, {{1, 1}, 10}, {{0, 2}, 1}};
    CHECK_FALSE(tail_bound_check(tail.strata, too_big).ok());
}
