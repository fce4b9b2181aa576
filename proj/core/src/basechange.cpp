#include "degen/basechange.hpp"

#include <algorithm>
#include <numeric>

#include "degen/cyclotomic.hpp"

namespace degen {

namespace {

void require_kappa(long kappa) {
    if (kappa < 1) throw InputError("base-change degree kappa must be >= 1, got " + std::to_string(kappa));
}

// all non-negative vectors n with sum n_i * w_i == target
void compositions(const std::vector<long>& w, std::size_t i, long target, std::vector<long>& cur,
                  std::vector<std::vector<long>>& out) {
    if (i == w.size()) {
        if (target == 0) out.push_back(cur);
        return;
    }
    for (long n = 0; n * w[i] <= target; ++n) {
        cur[i] = n;
        compositions(w, i + 1, target - n * w[i], cur, out);
    }
    cur[i] = 0;
}

}  // namespace

LmhsSpec base_change_lmhs(const LmhsSpec& spec, long kappa) {
    require_kappa(kappa);
    LmhsSpec out{spec.degree, {}};
    for (NString s : spec.strings) {
        const long g = std::gcd(static_cast<long>(s.order), kappa);
        const long d = s.order / g;
        s.exponent = d == 1 ? 0 : static_cast<int>((static_cast<long>(s.exponent) * (kappa / g)) % d);
        s.order = static_cast<int>(d);
        out.strings.push_back(s);
    }
    return canonical(out);
}

Diagram invariant_gap(const LmhsSpec& spec, long kappa) {
    return subtract(ker_T_minus_I(base_change_lmhs(spec, kappa)), ker_T_minus_I(spec));
}

CyclotomicMultiset expand_after_base_change(const CyclotomicMultiset& cover_side, long kappa) {
    require_kappa(kappa);
    CyclotomicMultiset out;
    for (const auto& [l, n] : cover_side) {
        if (l < 1 || n < 0) throw InputError("cyclotomic multiset entries need order >= 1 and count >= 0");
        if (n == 0) continue;
        const long d = l / std::gcd(l, kappa);
        out[d] += n * static_cast<long>(totient(l) / totient(d));
    }
    return out;
}

std::vector<CyclotomicMultiset> cyclotomic_refinement(const CyclotomicMultiset& m, long kappa) {
    require_kappa(kappa);
    // per order d: candidate cover orders l = d*g with g | kappa and gcd(l, kappa) = g
    std::vector<std::vector<CyclotomicMultiset>> per_order;
    for (const auto& [d, md] : m) {
        if (d < 1 || md < 0) throw InputError("cyclotomic multiset entries need order >= 1 and count >= 0");
        if (md == 0) continue;
        std::vector<long> orders, weights;
        for (long g = 1; g <= kappa; ++g) {
            if (kappa % g) continue;
            const long l = d * g;
            if (std::gcd(l, kappa) != g) continue;
            orders.push_back(l);
            weights.push_back(static_cast<long>(totient(l) / totient(d)));
        }
        std::vector<std::vector<long>> sols;
        std::vector<long> cur(weights.size(), 0);
        compositions(weights, 0, md, cur, sols);
        if (sols.empty()) return {};
        std::vector<CyclotomicMultiset> options;
        for (const auto& s : sols) {
            CyclotomicMultiset t;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (s[i]) t[orders[i]] = s[i];
            options.push_back(t);
        }
        per_order.push_back(std::move(options));
    }
    std::vector<CyclotomicMultiset> out{CyclotomicMultiset{}};
    for (const auto& options : per_order) {
        std::vector<CyclotomicMultiset> next;
        for (const auto& base : out)
            for (const auto& o : options) {
                CyclotomicMultiset t = base;
                t.insert(o.begin(), o.end());
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

DegenerationFixture quotient_invariants(const DegenerationFixture& cover, const GIsotypicData& iso, long kappa) {
    require_kappa(kappa);
    if (iso.order < 1) throw InputError("group order must be >= 1");
    DegenerationFixture out = cover;
    for (const auto& [k, part] : iso.trivial_parts) {
        if (!cover.in_range(k)) throw InputError("isotypic data for degree " + std::to_string(k) + " outside 0..2n");
        const auto* d = cover.at(k);
        if (!d || !d->special_fiber)
            throw InputError("isotypic data given for H^" + std::to_string(k) + " but the cover's special fiber is unknown");
        if (!part.leq(*d->special_fiber))
            throw InputError("trivial part " + part.str() + " exceeds H^" + std::to_string(k) + " of the cover " +
                             d->special_fiber->str());
        if (iso.order == 1 && part != *d->special_fiber)
            throw InputError("trivial group must act with everything invariant in degree " + std::to_string(k));
        out.degrees[k].special_fiber = part;
    }
    for (const auto& [k, spec] : iso.quotient_lmhs) {
        if (!cover.in_range(k)) throw InputError("quotient lmhs for degree " + std::to_string(k) + " outside 0..2n");
        const auto* d = cover.at(k);
        if (!d || !d->lmhs)
            throw InputError("quotient lmhs given for degree " + std::to_string(k) + " but the cover's is unknown");
        validate(spec);
        if (base_change_lmhs(spec, kappa) != canonical(*d->lmhs))
            throw InputError("quotient lmhs in degree " + std::to_string(k) +
                             " does not pull back to the cover's limit structure under kappa=" + std::to_string(kappa));
        out.degrees[k].lmhs = spec;
    }
    if (iso.order == 1 && iso.quotient_lmhs.empty()) return out;
    // sequences for the quotient are licensed through the smooth cover
    out.flags.quotient_of_smooth_cover = cover.flags.total_space_smooth || cover.flags.quotient_of_smooth_cover;
    out.flags.total_space_smooth = false;
    for (auto& [k, d] : out.degrees) {
        d.phantom.reset();
        d.vanishing.reset();
    }
    return out;
}

}  // namespace degen
