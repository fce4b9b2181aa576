#pragma once

#include "degen/fixture_io.hpp"
#include "degen/report.hpp"

namespace degen {

// every applicable check for the fixture's kind, in a fixed order
Report check_fixture(const FixtureFile& f);

}  // namespace degen
