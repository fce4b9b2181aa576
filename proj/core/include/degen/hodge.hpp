#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace degen {

using PQ = std::pair<int, int>;

std::string pq_string(PQ pq);

// Raised for malformed or inconsistent input data (exit code 2 territory).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when data parse fine but contradict an exact sequence (exit code 1 territory).
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finitely supported (p,q) -> multiplicity table. Zero entries are never stored.
class Diagram {
public:
    Diagram() = default;
    Diagram(std::initializer_list<std::pair<const PQ, long>> init);

    long at(int p, int q) const;
    long at(PQ pq) const { return at(pq.first, pq.second); }
    void set(int p, int q, long m);
    void bump(int p, int q, long m = 1);

    long mass() const;
    bool empty() const { return m_.empty(); }
    const std::map<PQ, long>& entries() const { return m_; }

    bool operator==(const Diagram& o) const { return m_ == o.m_; }
    bool operator!=(const Diagram& o) const { return m_ != o.m_; }
    bool leq(const Diagram& o) const;  // entrywise <=

    std::string str() const;  // {(p,q):m,...}

private:
    std::map<PQ, long> m_;
};

Diagram twist(const Diagram& d, int m);
Diagram dual(const Diagram& d);
Diagram add(const Diagram& a, const Diagram& b);
Diagram subtract(const Diagram& a, const Diagram& b);  // throws ConsistencyError on underflow
long grF(const Diagram& d, int p0);
std::map<int, long> weight_dims(const Diagram& d);  // weight w -> sum over p+q=w

// Signed per-(p,q) ledger used for alternating sums.
using SignedTable = std::map<PQ, long>;
void accumulate(SignedTable& t, const Diagram& d, long sign);
// first nonzero entry, if any
bool signed_zero(const SignedTable& t, PQ* witness = nullptr, long* value = nullptr);
Diagram to_diagram(const SignedTable& t, const std::string& what);  // throws ConsistencyError if negative

struct NString {
    PQ top{0, 0};
    int length = 1;
    int order = 1;     // cyclotomic order d of the T^ss eigenvalue
    int exponent = 0;  // eigenvalue exp(2 pi i a/d)
    long mult = 1;

    bool operator==(const NString& o) const;
    bool operator<(const NString& o) const;  // canonical order: d, length, p, q, a
};

struct LmhsSpec {
    int degree = 0;
    std::vector<NString> strings;

    long dim() const;
    bool operator==(const LmhsSpec& o) const { return degree == o.degree && strings == o.strings; }
};

// throws InputError naming the offending string
void validate(const LmhsSpec& spec);
// sort by canonical order and merge duplicate strings; validates first
LmhsSpec canonical(const LmhsSpec& spec);

Diagram diagram(const LmhsSpec& spec);
Diagram ker_T_minus_I(const LmhsSpec& spec);
Diagram coker_T_minus_I(const LmhsSpec& spec);
Diagram ker_Tss_minus_I(const LmhsSpec& spec);

// rationality linter; empty result means balanced
std::vector<std::string> galois_balance_warnings(const LmhsSpec& spec);

}  // namespace degen
