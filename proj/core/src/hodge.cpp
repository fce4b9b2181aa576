#include "degen/hodge.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace degen {

std::string pq_string(PQ pq) {
    return "(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")";
}

Diagram::Diagram(std::initializer_list<std::pair<const PQ, long>> init) {
    for (const auto& [pq, m] : init) bump(pq.first, pq.second, m);
}

long Diagram::at(int p, int q) const {
    auto it = m_.find({p, q});
    return it == m_.end() ? 0 : it->second;
}

void Diagram::set(int p, int q, long m) {
    if (m < 0) throw InputError("negative multiplicity " + std::to_string(m) + " at " + pq_string({p, q}));
    if (m == 0)
        m_.erase({p, q});
    else
        m_[{p, q}] = m;
}

void Diagram::bump(int p, int q, long m) { set(p, q, at(p, q) + m); }

long Diagram::mass() const {
    long s = 0;
    for (const auto& [pq, m] : m_) s += m;
    return s;
}

bool Diagram::leq(const Diagram& o) const {
    return std::all_of(m_.begin(), m_.end(), [&](const auto& e) { return e.second <= o.at(e.first); });
}

std::string Diagram::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    // descending weight then descending p, matching how the grids read
    std::vector<std::pair<PQ, long>> items(m_.begin(), m_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        const int wa = a.first.first + a.first.second, wb = b.first.first + b.first.second;
        if (wa != wb) return wa > wb;
        return a.first.first > b.first.first;
    });
    for (const auto& [pq, m] : items) {
        os << (first ? "" : ",") << pq_string(pq) << ":" << m;
        first = false;
    }
    os << "}";
    return os.str();
}

Diagram twist(const Diagram& d, int m) {
    Diagram out;
    for (const auto& [pq, v] : d.entries()) out.set(pq.first + m, pq.second + m, v);
    return out;
}

Diagram dual(const Diagram& d) {
    Diagram out;
    for (const auto& [pq, v] : d.entries()) out.set(-pq.first, -pq.second, v);
    return out;
}

Diagram add(const Diagram& a, const Diagram& b) {
    Diagram out = a;
    for (const auto& [pq, v] : b.entries()) out.bump(pq.first, pq.second, v);
    return out;
}

Diagram subtract(const Diagram& a, const Diagram& b) {
    Diagram out = a;
    for (const auto& [pq, v] : b.entries()) {
        const long have = out.at(pq);
        if (have < v)
            throw ConsistencyError("subtraction underflow at " + pq_string(pq) + ": " + std::to_string(have) +
                                   " - " + std::to_string(v));
        out.set(pq.first, pq.second, have - v);
    }
    return out;
}

long grF(const Diagram& d, int p0) {
    long s = 0;
    for (const auto& [pq, v] : d.entries())
        if (pq.first == p0) s += v;
    return s;
}

std::map<int, long> weight_dims(const Diagram& d) {
    std::map<int, long> w;
    for (const auto& [pq, v] : d.entries()) w[pq.first + pq.second] += v;
    return w;
}

void accumulate(SignedTable& t, const Diagram& d, long sign) {
    for (const auto& [pq, v] : d.entries()) t[pq] += sign * v;
}

bool signed_zero(const SignedTable& t, PQ* witness, long* value) {
    for (const auto& [pq, v] : t) {
        if (v != 0) {
            if (witness) *witness = pq;
            if (value) *value = v;
            return false;
        }
    }
    return true;
}

Diagram to_diagram(const SignedTable& t, const std::string& what) {
    Diagram out;
    for (const auto& [pq, v] : t) {
        if (v < 0)
            throw ConsistencyError("no non-negative solution for " + what + ": entry " + std::to_string(v) + " at " +
                                   pq_string(pq));
        out.set(pq.first, pq.second, v);
    }
    return out;
}

bool NString::operator==(const NString& o) const {
    return top == o.top && length == o.length && order == o.order && exponent == o.exponent && mult == o.mult;
}

bool NString::operator<(const NString& o) const {
    return std::tie(order, length, top.first, top.second, exponent, mult) <
           std::tie(o.order, o.length, o.top.first, o.top.second, o.exponent, o.mult);
}

long LmhsSpec::dim() const {
    long s = 0;
    for (const auto& st : strings) s += st.length * st.mult;
    return s;
}

void validate(const LmhsSpec& spec) {
    for (std::size_t i = 0; i < spec.strings.size(); ++i) {
        const auto& s = spec.strings[i];
        const std::string where = "degree " + std::to_string(spec.degree) + " string #" + std::to_string(i) +
                                  " top " + pq_string(s.top);
        if (s.length < 1) throw InputError(where + ": length must be >= 1");
        if (s.mult < 1) throw InputError(where + ": multiplicity must be >= 1");
        if (s.order < 1) throw InputError(where + ": eigenvalue order must be >= 1");
        if (s.exponent < 0 || s.exponent >= s.order)
            throw InputError(where + ": exponent must lie in [0, order)");
        if (s.order == 1 && s.exponent != 0) throw InputError(where + ": order 1 needs exponent 0");
        if (s.order > 1 && std::gcd(s.exponent, s.order) != 1)
            throw InputError(where + ": exponent not coprime to order");
        if (s.top.first + s.top.second != spec.degree + s.length - 1)
            throw InputError(where + ": not centered (p+q must equal k+length-1 = " +
                             std::to_string(spec.degree + s.length - 1) + ")");
    }
}

LmhsSpec canonical(const LmhsSpec& spec) {
    validate(spec);
    LmhsSpec out{spec.degree, {}};
    std::vector<NString> v = spec.strings;
    std::sort(v.begin(), v.end());
    for (const auto& s : v) {
        if (!out.strings.empty()) {
            auto& b = out.strings.back();
            if (b.top == s.top && b.length == s.length && b.order == s.order && b.exponent == s.exponent) {
                b.mult += s.mult;
                continue;
            }
        }
        out.strings.push_back(s);
    }
    return out;
}

Diagram diagram(const LmhsSpec& spec) {
    Diagram d;
    for (const auto& s : spec.strings)
        for (int j = 0; j < s.length; ++j) d.bump(s.top.first - j, s.top.second - j, s.mult);
    return d;
}

Diagram ker_T_minus_I(const LmhsSpec& spec) {
    Diagram d;
    for (const auto& s : spec.strings)
        if (s.order == 1) d.bump(s.top.first - s.length + 1, s.top.second - s.length + 1, s.mult);
    return d;
}

Diagram coker_T_minus_I(const LmhsSpec& spec) {
    Diagram d;
    for (const auto& s : spec.strings)
        if (s.order == 1) d.bump(s.top.first, s.top.second, s.mult);
    return d;
}

Diagram ker_Tss_minus_I(const LmhsSpec& spec) {
    Diagram d;
    for (const auto& s : spec.strings)
        if (s.order == 1)
            for (int j = 0; j < s.length; ++j) d.bump(s.top.first - j, s.top.second - j, s.mult);
    return d;
}

std::vector<std::string> galois_balance_warnings(const LmhsSpec& spec) {
    // Galois conjugation moves Hodge types around, so the count is taken per (d, length)
    // summed over positions; complex conjugation must pair (p,q,a) with (q,p,d-a).
    std::map<std::pair<int, int>, std::map<int, long>> by_class;
    std::map<std::tuple<int, int, int, int, int>, long> by_slot;
    for (const auto& s : spec.strings) {
        if (s.order == 1) continue;
        by_class[{s.order, s.length}][s.exponent] += s.mult;
        by_slot[{s.order, s.length, s.top.first, s.top.second, s.exponent}] += s.mult;
    }
    std::vector<std::string> warn;
    for (const auto& [key, per_a] : by_class) {
        const auto [d, len] = key;
        long expect = -1;
        bool bad = false;
        for (int a = 1; a < d; ++a) {
            if (std::gcd(a, d) != 1) continue;
            auto it = per_a.find(a);
            const long m = it == per_a.end() ? 0 : it->second;
            if (expect < 0) expect = m;
            if (m != expect) bad = true;
        }
        if (bad)
            warn.push_back("degree " + std::to_string(spec.degree) + ": eigenvalue order " + std::to_string(d) +
                           ", length " + std::to_string(len) + " not balanced over primitive exponents");
    }
    for (const auto& [key, m] : by_slot) {
        const auto [d, len, p, q, a] = key;
        auto it = by_slot.find({d, len, q, p, (d - a) % d});
        const long mc = it == by_slot.end() ? 0 : it->second;
        if (mc != m)
            warn.push_back("degree " + std::to_string(spec.degree) + ": string at " + pq_string({p, q}) +
                           " with exponent " + std::to_string(a) + "/" + std::to_string(d) +
                           " lacks its complex conjugate");
    }
    return warn;
}

}  // namespace degen
