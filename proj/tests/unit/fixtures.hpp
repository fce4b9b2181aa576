#pragma once

#include <string>

#include "degen/fixture_io.hpp"

namespace degen::testing {

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

template <class T>
T load_body(const std::string& name) {
    return std::get<T>(load_fixture(fixture_path(name)).body);
}

inline DegenerationFixture load_degeneration(const std::string& name) {
    return load_body<DegenerationFixture>(name + ".json");
}

}  // namespace degen::testing
