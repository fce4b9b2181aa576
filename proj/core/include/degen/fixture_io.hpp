#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "degen/basechange.hpp"
#include "degen/degeneration.hpp"
#include "degen/polydisk.hpp"
#include "degen/quiver.hpp"
#include "degen/report.hpp"

namespace degen {

struct QuiverFixture {
    QuiverRep rep;
};

struct PolydiskCase {
    int m = 0;
    Diagram invariants;
    std::optional<Diagram> special_fiber;
};

struct MultiParameterFixture {
    StrataInput strata;
    std::vector<PolydiskCase> cases;
};

struct LocalSystemFixture {
    LocalSystemData data;
    std::optional<long> expected_rank;
    std::optional<ShiodaInputs> shioda;
    std::optional<long> expected_total;
};

struct TailFixture {
    TailStrata strata;
    std::optional<long> expected_milnor;
};

struct CyclotomicFixture {
    long kappa = 1;
    CyclotomicMultiset multiset;
};

using FixtureBody = std::variant<DegenerationFixture, QuiverFixture, MultiParameterFixture, LocalSystemFixture,
                                 TailFixture, CyclotomicFixture>;

struct FixtureFile {
    int format = 1;
    std::string name;
    std::string note;
    FixtureBody body;
};

const char* fixture_kind(const FixtureFile& f);

FixtureFile parse_fixture(const std::string& text, const std::string& source = "<input>");  // throws InputError
FixtureFile load_fixture(const std::filesystem::path& path);
std::string serialize_fixture(const FixtureFile& f);

Diagram parse_diagram(const std::string& text);  // [[p,q,m],...]
std::string diagram_json(const Diagram& d);
std::string lmhs_json(const LmhsSpec& s);
std::string report_json(const Report& r);

}  // namespace degen
