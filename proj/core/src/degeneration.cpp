#include "degen/degeneration.hpp"

#include <functional>

namespace degen {

const char* singularity_class_name(SingularityClass c) {
    switch (c) {
        case SingularityClass::none: return "none";
        case SingularityClass::du_bois: return "duBois";
        case SingularityClass::slc: return "slc";
        case SingularityClass::rational: return "rational";
        case SingularityClass::log_terminal: return "logTerminal";
    }
    return "?";
}

SingularityClass parse_singularity_class(const std::string& s) {
    for (auto c : {SingularityClass::none, SingularityClass::du_bois, SingularityClass::slc, SingularityClass::rational,
                   SingularityClass::log_terminal})
        if (s == singularity_class_name(c)) return c;
    throw InputError("unknown singularity class '" + s + "' (expected none, duBois, slc, rational, logTerminal)");
}

const char* position_name(Position p) {
    switch (p) {
        case Position::coinvariants: return "coinvariants";
        case Position::homology: return "homology";
        case Position::special_fiber: return "special_fiber";
        case Position::invariants: return "invariants";
        case Position::vanishing: return "vanishing";
        case Position::phantom: return "phantom";
    }
    return "?";
}

Position parse_position(const std::string& s) {
    for (auto p : {Position::coinvariants, Position::homology, Position::special_fiber, Position::invariants,
                   Position::vanishing, Position::phantom})
        if (s == position_name(p)) return p;
    throw InputError("unknown position '" + s +
                     "' (expected coinvariants, homology, special_fiber, invariants, vanishing, phantom)");
}

const DegreeData* DegenerationFixture::at(int k) const {
    auto it = degrees.find(k);
    return it == degrees.end() ? nullptr : &it->second;
}

void validate(const DegenerationFixture& fx) {
    if (fx.n < 0) throw InputError("relative dimension n must be >= 0");
    if (fx.flags.d_sing < 0) throw InputError("d_sing must be >= 0");
    for (int k = 0; k <= 2 * fx.n; ++k)
        if (!fx.at(k)) throw InputError("degree " + std::to_string(k) + " missing (degrees 0..2n are required)");
    for (const auto& [k, d] : fx.degrees) {
        if (!fx.in_range(k)) throw InputError("degree " + std::to_string(k) + " outside 0..2n");
        if (d.lmhs) {
            if (d.lmhs->degree != k)
                throw InputError("lmhs in degree slot " + std::to_string(k) + " is labelled degree " +
                                 std::to_string(d.lmhs->degree));
            validate(*d.lmhs);
        }
    }
}

namespace {

bool licensed(const DegenerationFixture& fx) {
    return fx.flags.total_space_smooth || fx.flags.quotient_of_smooth_cover;
}

std::string loc(int k) { return "k=" + std::to_string(k); }

std::optional<Diagram> maybe_sf(const DegenerationFixture& fx, int k) {
    if (!fx.in_range(k)) return Diagram{};
    const auto* d = fx.at(k);
    if (!d || !d->special_fiber) return std::nullopt;
    return d->special_fiber;
}

std::optional<LmhsSpec> maybe_lmhs(const DegenerationFixture& fx, int k) {
    if (!fx.in_range(k)) return LmhsSpec{k, {}};
    const auto* d = fx.at(k);
    if (!d || !d->lmhs) return std::nullopt;
    return d->lmhs;
}

LmhsSpec need_lmhs(const DegenerationFixture& fx, int k) {
    auto s = maybe_lmhs(fx, k);
    if (!s) throw InputError("limit structure H^" + std::to_string(k) + "_lim is not supplied");
    return *s;
}

std::optional<Diagram> maybe_homology(const DegenerationFixture& fx, int k) {
    auto s = maybe_sf(fx, 2 * fx.n - k + 2);
    if (!s) return std::nullopt;
    return twist(dual(*s), fx.n + 1);
}

std::optional<Diagram> maybe_coinv(const DegenerationFixture& fx, int k) {
    auto s = maybe_lmhs(fx, k - 2);
    if (!s) return std::nullopt;
    return twist(coker_T_minus_I(*s), 1);
}

std::optional<Diagram> maybe_inv(const DegenerationFixture& fx, int k) {
    auto s = maybe_lmhs(fx, k);
    if (!s) return std::nullopt;
    return ker_T_minus_I(*s);
}

std::optional<Diagram> supplied_phantom(const DegenerationFixture& fx, int k) {
    if (!fx.in_range(k)) return Diagram{};
    const auto* d = fx.at(k);
    if (!d || !d->phantom) return std::nullopt;
    return d->phantom;
}

// phantom[k]: supplied, else H^k(X_0) minus invariants when the sequences are licensed
std::optional<Diagram> effective_phantom(const DegenerationFixture& fx, int k, std::string* note) {
    if (auto p = supplied_phantom(fx, k)) return p;
    if (licensed(fx)) {
        auto s = maybe_sf(fx, k);
        auto i = maybe_inv(fx, k);
        if (s && i) {
            if (note) *note = "phantom H^" + std::to_string(k) + " derived as H^k(X_0) - invariants";
            return subtract(*s, *i);
        }
    }
    return std::nullopt;
}

Diagram phantom_or_zero(const DegenerationFixture& fx, int k, std::vector<std::string>* notes) {
    std::string note;
    if (auto p = effective_phantom(fx, k, &note)) {
        if (notes && !note.empty()) notes->push_back(note);
        return *p;
    }
    if (notes) notes->push_back("phantom H^" + std::to_string(k) + " assumed zero");
    return {};
}

}  // namespace

Diagram homology_term(const DegenerationFixture& fx, int k) {
    const int j = 2 * fx.n - k + 2;
    auto h = maybe_homology(fx, k);
    if (!h) throw InputError("homology term for k=" + std::to_string(k) + " needs H^" + std::to_string(j) + "(X_0)");
    return *h;
}

Diagram twisted_coinvariants(const DegenerationFixture& fx, int k) {
    return twist(coker_T_minus_I(need_lmhs(fx, k - 2)), 1);
}

Diagram invariants(const DegenerationFixture& fx, int k) { return ker_T_minus_I(need_lmhs(fx, k)); }

Report check_cs(const DegenerationFixture& fx, int k) {
    Report r;
    const std::string where = loc(k);
    if (!licensed(fx)) {
        r.skip("cs.alternating", where, "total space not smooth; sequence not licensed");
        return r;
    }
    auto coinv = maybe_coinv(fx, k);
    auto hom = maybe_homology(fx, k);
    auto sf = maybe_sf(fx, k);
    auto inv = maybe_inv(fx, k);
    if (!coinv || !hom || !sf || !inv) {
        std::string miss;
        if (!coinv) miss += " lmhs[k-2]";
        if (!hom) miss += " H^{2n-k+2}(X_0)";
        if (!sf) miss += " H^k(X_0)";
        if (!inv) miss += " lmhs[k]";
        r.skip("cs.alternating", where, "unknown:" + miss);
        return r;
    }

    SignedTable t;
    accumulate(t, *coinv, +1);
    accumulate(t, *hom, -1);
    accumulate(t, *sf, +1);
    accumulate(t, *inv, -1);
    PQ w;
    long v = 0;
    if (signed_zero(t, &w, &v))
        r.pass("cs.alternating", where);
    else
        r.fail("cs.alternating", where, "alternating sum " + std::to_string(v) + " at " + pq_string(w));

    auto first_excess = [](const Diagram& small, const Diagram& big, PQ* at) {
        for (const auto& [pq, m] : small.entries())
            if (m > big.at(pq)) {
                *at = pq;
                return true;
            }
        return false;
    };
    PQ at;
    if (first_excess(*coinv, *hom, &at))
        r.fail("cs.injective", where,
               "coinvariants exceed homology at " + pq_string(at) + ": " + std::to_string(coinv->at(at)) + " > " +
                   std::to_string(hom->at(at)));
    else
        r.pass("cs.injective", where);

    if (first_excess(*inv, *sf, &at))
        r.fail("cs.surjective", where,
               "invariants exceed H^k(X_0) at " + pq_string(at) + ": " + std::to_string(inv->at(at)) + " > " +
                   std::to_string(sf->at(at)));
    else
        r.pass("cs.surjective", where);

    if (coinv->leq(*hom)) {
        const Diagram gy = subtract(*hom, *coinv);
        std::string bad;
        for (const auto& [pq, m] : gy.entries()) {
            const auto [p, q] = pq;
            if (p + q != k || p < 1 || q < 1 || p > k - 1 || q > k - 1) {
                bad = pq_string(pq) + ":" + std::to_string(m);
                break;
            }
        }
        if (bad.empty())
            r.pass("cs.gy-purity", where, gy.empty() ? "" : "image " + gy.str());
        else
            r.fail("cs.gy-purity", where, "image of gy not pure of weight k and level <= k-2 at " + bad);

        if (auto ph = supplied_phantom(fx, k); ph && fx.at(k) && fx.at(k)->phantom) {
            if (*ph == gy)
                r.pass("cs.phantom", where);
            else
                r.fail("cs.phantom", where, "supplied phantom " + ph->str() + " != image of gy " + gy.str());
        }
    } else {
        r.skip("cs.gy-purity", where, "injectivity already fails");
    }
    return r;
}

Diagram vanishing_cohomology(const DegenerationFixture& fx, int k) {
    const LmhsSpec s = need_lmhs(fx, k);
    const Diagram moving = subtract(diagram(s), ker_T_minus_I(s));
    return add(moving, phantom_or_zero(fx, k + 1, nullptr));
}

Report check_support_range(const DegenerationFixture& fx) {
    Report r;
    if (!licensed(fx)) {
        r.skip("van.support", "all", "total space not smooth");
        return r;
    }
    const int lo = fx.n - fx.flags.d_sing, hi = fx.n + fx.flags.d_sing;
    for (int k = 0; k <= 2 * fx.n; ++k) {
        if (k >= lo && k <= hi) continue;
        const std::string where = loc(k);
        const auto* d = fx.at(k);
        if (d && d->vanishing && !d->vanishing->empty()) {
            r.fail("van.support", where, "supplied vanishing cohomology " + d->vanishing->str() + " outside [" +
                                             std::to_string(lo) + "," + std::to_string(hi) + "]");
            continue;
        }
        if (!maybe_lmhs(fx, k)) {
            r.skip("van.support", where, "lmhs unknown");
            continue;
        }
        const Diagram van = vanishing_cohomology(fx, k);
        if (van.empty())
            r.pass("van.support", where);
        else
            r.fail("van.support", where, "vanishing cohomology " + van.str() + " outside [" + std::to_string(lo) + "," +
                                             std::to_string(hi) + "]");
    }
    if (fx.flags.d_sing == 0) {
        for (int k = 0; k <= 2 * fx.n; ++k) {
            if (k == fx.n || k == fx.n + 1) continue;
            const std::string where = loc(k);
            auto sf = maybe_sf(fx, k);
            auto lm = maybe_lmhs(fx, k);
            if (!sf || !lm) {
                r.skip("van.isolated-iso", where, "data unknown");
                continue;
            }
            const Diagram lim = diagram(*lm);
            if (*sf == lim && ker_T_minus_I(*lm) == lim)
                r.pass("van.isolated-iso", where);
            else
                r.fail("van.isolated-iso", where, "H^k(X_0) " + sf->str() + " vs H^k_lim " + lim.str());
        }
    }
    return r;
}

Solved solve_unknown(const DegenerationFixture& fx_in, int k, Position pos) {
    DegenerationFixture fx = fx_in;
    const int j = 2 * fx.n - k + 2;
    auto erase_sf = [&](int deg) {
        if (fx.in_range(deg)) fx.degrees[deg].special_fiber.reset();
    };
    auto erase_lmhs = [&](int deg) {
        if (fx.in_range(deg)) fx.degrees[deg].lmhs.reset();
    };
    switch (pos) {
        case Position::coinvariants: erase_lmhs(k - 2); break;
        case Position::homology: erase_sf(j); break;
        case Position::special_fiber: erase_sf(k); break;
        case Position::invariants: erase_lmhs(k); break;
        case Position::vanishing:
            if (fx.in_range(k)) fx.degrees[k].vanishing.reset();
            break;
        case Position::phantom:
            if (fx.in_range(k)) fx.degrees[k].phantom.reset();
            break;
    }

    Solved out;
    std::vector<std::pair<std::string, Diagram>> routes;
    const bool lic = licensed(fx);
    auto coinv = maybe_coinv(fx, k);
    auto hom = maybe_homology(fx, k);
    auto sf = maybe_sf(fx, k);
    auto inv = maybe_inv(fx, k);
    auto cs_route = [&](const std::string& what, long s_coinv, long s_hom, long s_sf, long s_inv) {
        // coinv - hom + sf - inv = 0 solved for the missing term with the given signs
        if (!lic) return;
        SignedTable t;
        if (s_coinv) {
            if (!coinv) return;
            accumulate(t, *coinv, s_coinv);
        }
        if (s_hom) {
            if (!hom) return;
            accumulate(t, *hom, s_hom);
        }
        if (s_sf) {
            if (!sf) return;
            accumulate(t, *sf, s_sf);
        }
        if (s_inv) {
            if (!inv) return;
            accumulate(t, *inv, s_inv);
        }
        routes.emplace_back("Clemens-Schmid at k=" + std::to_string(k), to_diagram(t, what));
    };
    // phantom[k] from the vanishing sequence one degree down
    auto phantom_from_vanishing = [&](int deg) -> std::optional<Diagram> {
        if (!fx.in_range(deg - 1)) return std::nullopt;
        const auto* d = fx.at(deg - 1);
        auto lm = maybe_lmhs(fx, deg - 1);
        if (!d || !d->vanishing || !lm) return std::nullopt;
        SignedTable t;
        accumulate(t, *d->vanishing, +1);
        accumulate(t, diagram(*lm), -1);
        accumulate(t, ker_T_minus_I(*lm), +1);
        return to_diagram(t, "phantom H^" + std::to_string(deg));
    };
    auto explicit_phantom = [&](int deg) -> std::optional<Diagram> {
        if (!fx.in_range(deg)) return Diagram{};
        const auto* d = fx.at(deg);
        if (d && d->phantom) return d->phantom;
        return phantom_from_vanishing(deg);
    };

    const std::string what = position_name(pos);
    switch (pos) {
        case Position::coinvariants: cs_route(what, 0, +1, -1, +1); break;
        case Position::homology:
            if (j != k) cs_route(what, +1, 0, +1, -1);
            if (auto ph = explicit_phantom(k); ph && coinv && lic)
                routes.emplace_back("image of gy is the phantom part", add(*coinv, *ph));
            break;
        case Position::special_fiber:
            if (j != k) cs_route(what, -1, +1, 0, +1);
            if (auto ph = explicit_phantom(k); ph && inv && (fx.at(k) && (fx.at(k)->phantom || phantom_from_vanishing(k))))
                routes.emplace_back("H^k(X_0) = invariants + phantom", add(*inv, *ph));
            break;
        case Position::invariants:
            cs_route(what, +1, -1, +1, 0);
            if (fx.at(k) && fx.at(k)->phantom && sf) {
                SignedTable t;
                accumulate(t, *sf, +1);
                accumulate(t, *fx.at(k)->phantom, -1);
                routes.emplace_back("H^k(X_0) - phantom", to_diagram(t, what));
            }
            break;
        case Position::vanishing: {
            auto lm = maybe_lmhs(fx, k);
            if (lm) {
                const Diagram moving = subtract(diagram(*lm), ker_T_minus_I(*lm));
                if (auto ph = supplied_phantom(fx, k + 1)) {
                    routes.emplace_back("lim/ker + supplied phantom", add(moving, *ph));
                } else {
                    std::string note;
                    auto eph = effective_phantom(fx, k + 1, &note);
                    if (!eph && lic) {
                        auto c1 = maybe_coinv(fx, k + 1);
                        auto h1 = maybe_homology(fx, k + 1);
                        if (c1 && h1) {
                            SignedTable t;
                            accumulate(t, *h1, +1);
                            accumulate(t, *c1, -1);
                            eph = to_diagram(t, "phantom H^" + std::to_string(k + 1));
                            note = "phantom H^" + std::to_string(k + 1) + " taken from the image of gy";
                        }
                    }
                    if (!eph) {
                        eph = Diagram{};
                        note = "phantom H^" + std::to_string(k + 1) + " assumed zero";
                    }
                    out.notes.push_back(note);
                    routes.emplace_back("lim/ker + phantom", add(moving, *eph));
                }
            }
            break;
        }
        case Position::phantom:
            if (lic && sf && inv) {
                SignedTable t;
                accumulate(t, *sf, +1);
                accumulate(t, *inv, -1);
                routes.emplace_back("H^k(X_0) - invariants", to_diagram(t, what));
            }
            if (lic && hom && coinv) {
                SignedTable t;
                accumulate(t, *hom, +1);
                accumulate(t, *coinv, -1);
                routes.emplace_back("image of gy", to_diagram(t, what));
            }
            if (auto pv = phantom_from_vanishing(k)) routes.emplace_back("vanishing sequence one degree down", *pv);
            break;
    }

    if (routes.empty())
        throw InputError("cannot solve " + what + " at k=" + std::to_string(k) +
                         ": underdetermined (the constraints that would fix it are not supplied)");
    for (std::size_t i = 1; i < routes.size(); ++i)
        if (routes[i].second != routes[0].second)
            throw ConsistencyError("over-determined and inconsistent: " + routes[0].first + " gives " +
                                   routes[0].second.str() + " but " + routes[i].first + " gives " +
                                   routes[i].second.str());
    for (const auto& [name, d] : routes) out.notes.push_back("via " + name);
    out.value = routes[0].second;
    return out;
}

CheckResult slc_grF0_predicate(const DegenerationFixture& fx, int k) {
    CheckResult c{"frontier.slc-grF0", loc(k), Verdict::skipped, ""};
    auto sf = maybe_sf(fx, k);
    auto lm = maybe_lmhs(fx, k);
    if (!sf || !lm) {
        c.witness = "data unknown";
        return c;
    }
    const long a = grF(*sf, 0), b = grF(diagram(*lm), 0), d = grF(ker_Tss_minus_I(*lm), 0);
    const std::string w = "GrF0: H^k(X_0)=" + std::to_string(a) + " lim=" + std::to_string(b) +
                          " lim^Tss=" + std::to_string(d);
    c.verdict = (a == b && b == d) ? Verdict::pass : Verdict::fail;
    c.witness = w;
    return c;
}

Report check_frontier(const DegenerationFixture& fx) {
    Report r;
    const auto cls = fx.flags.singularity;
    const bool du_bois_level = cls != SingularityClass::none && fx.flags.special_fiber_reduced;
    const bool rational_level = cls == SingularityClass::rational || cls == SingularityClass::log_terminal;
    for (int k = 0; k <= 2 * fx.n; ++k) {
        const std::string where = loc(k);
        auto sf = maybe_sf(fx, k);
        auto lm = maybe_lmhs(fx, k);
        if (!sf || !lm) {
            r.skip("frontier", where, "data unknown");
            continue;
        }
        const Diagram inv = ker_T_minus_I(*lm);
        if (fx.flags.total_space_smooth) {
            const long a = grF(*sf, 0), b = grF(inv, 0);
            if (a == b)
                r.pass("frontier.smooth-grF0", where);
            else
                r.fail("frontier.smooth-grF0", where,
                       "GrF0 H^k(X_0)=" + std::to_string(a) + " vs invariants " + std::to_string(b));
            Diagram low_sf, low_inv;
            for (const auto& [pq, m] : sf->entries())
                if (pq.first + pq.second < k) low_sf.set(pq.first, pq.second, m);
            for (const auto& [pq, m] : inv.entries())
                if (pq.first + pq.second < k) low_inv.set(pq.first, pq.second, m);
            if (low_sf == low_inv)
                r.pass("frontier.smooth-W", where);
            else
                r.fail("frontier.smooth-W", where, "W_{k-1}: H^k(X_0) " + low_sf.str() + " vs invariants " + low_inv.str());
        } else {
            r.skip("frontier.smooth-grF0", where, "total space not smooth");
        }

        CheckResult slc = slc_grF0_predicate(fx, k);
        if (du_bois_level) {
            r.add(slc.id, slc.location, slc.verdict, slc.witness);
        } else {
            const std::string why = cls == SingularityClass::none ? "singularity class not du Bois"
                                                                  : "special fiber not reduced";
            r.skip(slc.id, where, why + "; predicate would " + (slc.verdict == Verdict::pass ? "pass" : "fail") +
                                      " (" + slc.witness + ")");
        }

        if (cls == SingularityClass::log_terminal) {
            std::string bad;
            for (const auto& [pq, m] : diagram(*lm).entries())
                if (pq.first * pq.second == 0 && pq.first + pq.second < k) bad = pq_string(pq);
            if (bad.empty())
                r.pass("frontier.lt-W", where);
            else
                r.fail("frontier.lt-W", where, "W_{k-1}GrF0 of the limit is nonzero at " + bad);
        }
        if (rational_level && fx.flags.total_space_smooth) {
            const long a = grF(*sf, 1), b = grF(ker_Tss_minus_I(*lm), 1);
            if (a == b)
                r.pass("frontier.rational-grF1", where);
            else
                r.fail("frontier.rational-grF1", where,
                       "GrF1 H^k(X_0)=" + std::to_string(a) + " vs lim^Tss " + std::to_string(b));
        }
    }
    return r;
}

Report phantom_hard_lefschetz(const DegenerationFixture& fx) {
    Report r;
    for (int k = 1; k <= fx.n + 1; ++k) {
        const int lo = fx.n - k + 1, hi = fx.n + k + 1;
        const std::string where = "degrees " + std::to_string(lo) + "/" + std::to_string(hi);
        auto plo = effective_phantom(fx, lo, nullptr);
        auto phi = effective_phantom(fx, hi, nullptr);
        if (!plo || !phi) {
            r.skip("phantom.hard-lefschetz", where, "phantom unknown");
            continue;
        }
        const Diagram moved = twist(*phi, -k);
        if (*plo == moved)
            r.pass("phantom.hard-lefschetz", where);
        else
            r.fail("phantom.hard-lefschetz", where,
                   "phantom H^" + std::to_string(lo) + " " + plo->str() + " vs H^" + std::to_string(hi) + "(" +
                       std::to_string(k) + ") " + moved.str());
    }
    return r;
}

long euler_poincare_rank(const LocalSystemData& d) {
    if (d.generic_rank < 0 || d.fixed_rank < 0 || d.fixed_rank > d.generic_rank)
        throw InputError("local system ranks must satisfy 0 <= fixed <= generic");
    long s = 0;
    for (long r : d.local_ranks) {
        if (r < 0 || r > d.generic_rank) throw InputError("local rank of V/V^T out of range");
        s += r;
    }
    const long variable = d.generic_rank - d.fixed_rank;
    const long out = s - d.chi_base * variable + d.h1_base * d.fixed_rank;
    if (out < 0) throw InputError("Euler-Poincare rank is negative (" + std::to_string(out) + "): invalid data");
    return out;
}

ShiodaTable shioda_assemble(const ShiodaInputs& in) {
    ShiodaTable t;
    t.h0_next = in.h0_next.mass();
    t.ih1 = in.ih1.mass();
    t.phantom = in.phantom.mass();
    t.h0_prev = in.h0_prev.mass();
    t.total = t.h0_next + t.ih1 + t.phantom + t.h0_prev;
    t.diagram = add(add(in.h0_next, in.ih1), add(in.phantom, in.h0_prev));
    return t;
}

long milnor_number(const TailStrata& t) {
    long s = -1;
    for (long c : t.chi_open) s += c;
    return (t.n % 2 == 0) ? s : -s;
}

Diagram tail_bound(const TailStrata& t) {
    Diagram b;
    for (const auto& st : t.strata) {
        b = add(b, st.exceptional);
        for (int j = 1; j <= st.k; ++j) b = add(b, twist(st.total, j));
    }
    return b;
}

Report tail_bound_check(const TailStrata& t, const Diagram& van) {
    Report r;
    const Diagram b = tail_bound(t);
    for (const auto& [pq, m] : van.entries()) {
        if (m > b.at(pq)) {
            r.fail("tail.bound", "n=" + std::to_string(t.n),
                   "vanishing " + std::to_string(m) + " exceeds bound " + std::to_string(b.at(pq)) + " at " +
                       pq_string(pq));
            return r;
        }
    }
    r.pass("tail.bound", "n=" + std::to_string(t.n), "bound " + b.str());
    return r;
}

Report check_all(const DegenerationFixture& fx) {
    validate(fx);
    Report r;
    for (int k = 0; k <= 2 * fx.n + 2; ++k) r.append(check_cs(fx, k));
    for (int k = 0; k <= 2 * fx.n; ++k) {
        const auto* d = fx.at(k);
        if (!d) continue;
        if (d->lmhs) {
            const auto warn = galois_balance_warnings(*d->lmhs);
            if (warn.empty())
                r.pass("lint.galois", loc(k));
            else
                r.skip("lint.galois", loc(k), "warning: " + warn.front());
        }
        if (d->vanishing && d->lmhs) {
            const Diagram got = vanishing_cohomology(fx, k);
            if (got == *d->vanishing)
                r.pass("van.agreement", loc(k));
            else
                r.fail("van.agreement", loc(k), "supplied " + d->vanishing->str() + " vs computed " + got.str());
        }
    }
    r.append(check_support_range(fx));
    r.append(check_frontier(fx));
    r.append(phantom_hard_lefschetz(fx));
    return r;
}

}  // namespace degen
