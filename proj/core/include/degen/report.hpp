#pragma once

#include <string>
#include <vector>

namespace degen {

enum class Verdict { pass, fail, skipped };

const char* verdict_name(Verdict v);

struct CheckResult {
    std::string id;        // e.g. "cs.alternating"
    std::string location;  // e.g. "k=2"
    Verdict verdict = Verdict::skipped;
    std::string witness;   // (p,q) and values on failure, notes otherwise
};

class Report {
public:
    void add(std::string id, std::string location, Verdict v, std::string witness = {});
    void pass(std::string id, std::string location, std::string witness = {}) {
        add(std::move(id), std::move(location), Verdict::pass, std::move(witness));
    }
    void fail(std::string id, std::string location, std::string witness) {
        add(std::move(id), std::move(location), Verdict::fail, std::move(witness));
    }
    void skip(std::string id, std::string location, std::string witness) {
        add(std::move(id), std::move(location), Verdict::skipped, std::move(witness));
    }
    void append(const Report& other);

    const std::vector<CheckResult>& checks() const { return checks_; }
    bool ok() const;  // no fail
    std::size_t count(Verdict v) const;
    const CheckResult* find(const std::string& id, const std::string& location = {}) const;

private:
    std::vector<CheckResult> checks_;
};

}  // namespace degen
