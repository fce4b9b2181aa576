#include "degen/report.hpp"

#include <algorithm>

namespace degen {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

void Report::add(std::string id, std::string location, Verdict v, std::string witness) {
    checks_.push_back({std::move(id), std::move(location), v, std::move(witness)});
}

void Report::append(const Report& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::ok() const { return count(Verdict::fail) == 0; }

std::size_t Report::count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [v](const CheckResult& c) { return c.verdict == v; }));
}

const CheckResult* Report::find(const std::string& id, const std::string& location) const {
    for (const auto& c : checks_)
        if (c.id == id && (location.empty() || c.location == location)) return &c;
    return nullptr;
}

}  // namespace degen
