#pragma once

#include <string>

#include "degen/hodge.hpp"
#include "degen/report.hpp"

namespace degen {

struct RenderOptions {
    bool color = false;
    bool failures_only = false;  // report rendering: list failing checks, count everything
};

// p across, q up, origin at the lower left
std::string render_diagram(const Diagram& d, const RenderOptions& opt = {});
// same grid with eigenvalue braces and one line per N-string
std::string render_lmhs(const LmhsSpec& s, const RenderOptions& opt = {});
std::string render_report(const Report& r, const RenderOptions& opt = {});

}  // namespace degen
