#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"

#include "degen/polydisk.hpp"

using namespace degen;
using degen::testing::load_body;

namespace {

MultiLmhs open_stratum(const std::string& file, int degree) {
    auto fx = load_body<MultiParameterFixture>(file);
    return *fx.strata.strata.at({}).at(degree).lmhs;
}

std::vector<std::size_t> ranks(const KoszulComplex& k) {
    std::vector<std::size_t> out;
    for (const auto& d : k.differentials) out.push_back(rank(d));
    return out;
}

}  // namespace

TEST_CASE("Koszul differentials square to zero") {
    testing::Rng rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const int r = 1 + trial % 3;
        auto h = testing::random_commuting(rng, r);
        CHECK_NOTHROW(validate(h));
        auto k = koszul_complex(h, {});
        REQUIRE(k.dims.size() == static_cast<std::size_t>(r + 1));
        for (std::size_t s = 0; s + 1 < k.differentials.size(); ++s)
            CHECK((k.differentials[s + 1] * k.differentials[s]).is_zero());
        // Euler characteristic of the complex equals that of its cohomology
        auto h_dims = koszul_cohomology_dims(k);
        long chi_c = 0, chi_h = 0;
        for (std::size_t s = 0; s < k.dims.size(); ++s) {
            const long sign = s % 2 ? -1 : 1;
            chi_c += sign * static_cast<long>(k.dims[s]);
            chi_h += sign * static_cast<long>(h_dims[s]);
        }
        CHECK(chi_c == chi_h);
        // H^0 is the common kernel of all N_j
        Matrix stacked = h.nilpotents.front();
        for (int j = 1; j < r; ++j) stacked = vstack(stacked, h.nilpotents[j]);
        CHECK(h_dims.front() == kernel(stacked).dim());
    }
}

TEST_CASE("three-fold over a bidisk, first family") {
    auto h = open_stratum("ex19c.json", 3);
    auto k = koszul_complex(h, {});
    CHECK(k.dims == std::vector<std::size_t>{6, 7, 2});
    CHECK(k.summand_dims[1] == std::vector<std::size_t>{3, 4});
    CHECK(ranks(k) == std::vector<std::size_t>{5, 2});
    CHECK(koszul_cohomology_dims(k) == std::vector<std::size_t>{1, 0, 0});
    CHECK(ih_local(h, {}, 1).empty());
    CHECK(ih_local(h, {}, 0) == Diagram{{{0, 0}, 1}});
}

TEST_CASE("three-fold over a bidisk, second family") {
    auto h = open_stratum("ex19c-family2.json", 3);
    auto k = koszul_complex(h, {});
    CHECK(k.summand_dims[1] == std::vector<std::size_t>{4, 4});
    CHECK(ranks(k) == std::vector<std::size_t>{5, 2});
    CHECK(ih_local(h, {}, 1) == Diagram{{{2, 2}, 1}});
}

TEST_CASE("decomposition and polydisk sequence on the shipped examples") {
    for (const char* file : {"ex19a.json", "ex19b.json", "ex19c.json", "ex19c-family2.json"}) {
        CAPTURE(file);
        auto fx = load_body<MultiParameterFixture>(file);
        REQUIRE_FALSE(fx.cases.empty());
        for (const auto& c : fx.cases) {
            CAPTURE(c.m);
            auto dec = ih_decomposition(c.m, fx.strata);
            CHECK(dec.checks.ok());
            CHECK(polydisk_cs(dec, c.invariants, c.special_fiber).ok());
        }
    }
}

TEST_CASE("a wrong special fibre is caught") {
    auto fx = load_body<MultiParameterFixture>("ex19c-family2.json");
    auto dec = ih_decomposition(4, fx.strata);
    CHECK_FALSE(polydisk_cs(dec, Diagram{{{2, 2}, 2}}, Diagram{{{2, 2}, 2}}).ok());
}

TEST_CASE("missing strata are an input error") {
    auto fx = load_body<MultiParameterFixture>("ex19c.json");
    fx.strata.strata.erase(ParamSubset{1});
    CHECK_THROWS_AS(ih_decomposition(4, fx.strata), InputError);
}

TEST_CASE("finite monodromy: only invariant vectors survive") {
    MultiLmhs h;
    h.r = 2;
    h.degree = 1;
    h.basis = {{{1, 0}, {{1, 2}, {0, 1}}}, {{0, 1}, {{1, 2}, {0, 1}}}, {{0, 0}, {}}};
    h.nilpotents = {Matrix(3, 3), Matrix(3, 3)};
    CHECK_NOTHROW(validate(h));
    CHECK(koszul_complex(h, {}, true).dims.front() == 1);
    CHECK(ih_local(h, {}, 0) == Diagram{{{0, 0}, 1}});
    // fixing the first parameter keeps the order-2 part
    CHECK(ih_local(h, {1}, 0).mass() == 3);
}

TEST_CASE("validation of multi-parameter limits") {
    testing::Rng rng(5);
    auto h = testing::random_commuting(rng, 2);
    auto broken = h;
    broken.nilpotents[0](0, 0) = 1;
    CHECK_THROWS_AS(validate(broken), InputError);
    MultiLmhs noncommuting;
    noncommuting.r = 2;
    noncommuting.basis = {{{2, 2}, {}}, {{1, 1}, {}}, {{0, 0}, {}}};
    noncommuting.nilpotents = {Matrix{{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}, Matrix{{0, 0, 0}, {0, 0, 0}, {0, 1, 0}}};
    CHECK_THROWS_AS(validate(noncommuting), InputError);
    CHECK_THROWS_AS(koszul_complex(h, {3}), InputError);
}

TEST_CASE("one parameter: local IH in slot 0 is the monodromy invariants") {
    testing::Rng rng(2718);
    for (int trial = 0; trial < 30; ++trial) {
        auto spec = testing::random_spec(rng, trial % 3 + 1, 4);
        auto h = testing::multi_from_spec(spec);
        CHECK_NOTHROW(validate(h));
        CHECK(diagram(h) == diagram(spec));
        CHECK(ih_local(h, {}, 0) == ker_T_minus_I(spec));
    }
}

TEST_CASE("subsets by size") {
    CHECK(subsets_of_size(3, 2) == std::vector<ParamSubset>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(subsets_of_size(2, 0) == std::vector<ParamSubset>{{}});
}
