// One line per acceptance criterion; exit status is nonzero if any line fails.
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "generators.hpp"

#include "degen/basechange.hpp"
#include "degen/checks.hpp"
#include "degen/degeneration.hpp"
#include "degen/fixture_io.hpp"
#include "degen/polydisk.hpp"
#include "degen/quiver.hpp"

using namespace degen;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

template <class T>
T body(const std::string& name) {
    return std::get<T>(load_fixture(fixture(name)).body);
}

// collects the first mismatch; `detail` ends up on the criterion line
struct Tally {
    bool ok = true;
    std::ostringstream detail;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail << "mismatch: " << what;
        }
    }
};

Tally criterion_kodaira() {
    Tally t;
    const std::pair<const char*, long> fibres[] = {
        {"kodaira-I1", 1}, {"kodaira-I6star", 11}, {"kodaira-II", 1}, {"kodaira-IVstar", 7}};
    for (const auto& [name, components] : fibres) {
        auto fx = body<DegenerationFixture>(std::string(name) + ".json");
        const long mass = solve_unknown(fx, 2, Position::phantom).value.mass();
        t.expect(mass == components - 1, std::string(name) + " phantom mass " + std::to_string(mass));
        t.detail << name << "=" << mass << " ";
    }
    auto ls = body<LocalSystemFixture>("elliptic-k3-local-system.json");
    const long rank = euler_poincare_rank(ls.data);
    const auto shioda = shioda_assemble(*ls.shioda);
    t.expect(rank == 4, "parabolic H^1 rank " + std::to_string(rank));
    t.expect(shioda.h0_next == 1 && shioda.ih1 == 4 && shioda.phantom == 16 && shioda.h0_prev == 1,
             "Shioda blocks");
    t.expect(shioda.total == 22, "Shioda total " + std::to_string(shioda.total));
    t.detail << "rank=" << rank << " shioda=" << shioda.h0_next << "+" << shioda.ih1 << "+" << shioda.phantom << "+"
             << shioda.h0_prev << "=" << shioda.total;
    return t;
}

Tally criterion_k3() {
    Tally t;
    auto fx = body<DegenerationFixture>("k3-E8tilde.json");
    t.expect(check_cs(fx, 2).ok(), "sequence at k=2");
    t.expect(fx.at(2)->special_fiber == invariants(fx, 2), "H^2(X_0) vs invariants");
    const Diagram gap = invariant_gap(*fx.at(2)->lmhs, 6);
    t.expect(gap == Diagram{{{1, 1}, 8}}, "invariant gap " + gap.str());
    auto q = body<QuiverFixture>("quiver/E8tilde-basechange-quiver.json");
    const bool splits = decomposes(q.rep);
    t.expect(!splits, "quiver decomposes");
    t.detail << "cs(k=2) exact, gap=" << gap.str() << ", decomposes=" << (splits ? "true" : "false");
    return t;
}

Tally criterion_milnor() {
    Tally t;
    auto tail = body<TailFixture>("e12-tail.json");
    const long mu = milnor_number(tail.strata);
    t.expect(mu == 12, "Milnor number " + std::to_string(mu));
    const Diagram van{{{2, 0}, 1}, {{1, 1}, 10}, {{0, 2}, 1}};
    t.expect(tail_bound_check(tail.strata, van).ok(), "tail bound");
    t.detail << "mu=" << mu << ", bound holds for " << van.str();
    return t;
}

Tally criterion_koszul() {
    Tally t;
    const std::pair<const char*, long> families[] = {{"ex19c.json", 0}, {"ex19c-family2.json", 1}};
    for (const auto& [file, ih1] : families) {
        auto fx = body<MultiParameterFixture>(file);
        const auto& h = *fx.strata.strata.at({}).at(3).lmhs;
        const auto k = koszul_complex(h, {});
        const std::size_t r0 = rank(k.differentials[0]), r1 = rank(k.differentials[1]);
        t.expect(r0 == 5 && r1 == 2, std::string(file) + " ranks");
        const Diagram local = ih_local(h, {}, 1);
        const Diagram want = ih1 ? Diagram{{{2, 2}, 1}} : Diagram{};
        t.expect(local == want, std::string(file) + " IH^1 " + local.str());
        for (const auto& c : fx.cases) {
            const auto dec = ih_decomposition(c.m, fx.strata);
            t.expect(dec.checks.ok() && polydisk_cs(dec, c.invariants, c.special_fiber).ok(),
                     std::string(file) + " polydisk sequence");
        }
        t.detail << file << ": ranks " << r0 << "," << r1 << " IH^1=" << local.str() << "  ";
    }
    return t;
}

Tally criterion_a4() {
    Tally t;
    testing::Rng rng(0xA4A4);
    int agree = 0, split = 0;
    for (int i = 0; i < 1000; ++i) {
        auto m = testing::random_multiset(rng, 8, true);
        QuiverRep rep = build(m);
        rep = change_basis(rep, testing::random_invertible(rng, rep.psi_dim()),
                           testing::random_invertible(rng, rep.phi_dim()));
        const auto v = a4_verdicts(rep);
        t.expect(v.agree(), "verdicts differ on " + multiset_string(m));
        t.expect(self_dual(decompose_indecomposables(rep)), "not self-dual: " + multiset_string(m));
        agree += v.agree();
        split += v.decomposes;
    }
    int round_trips = 0;
    for (int i = 0; i < 500; ++i) {
        auto m = testing::random_multiset(rng, 8, false);
        QuiverRep rep = build(m);
        rep = change_basis(rep, testing::random_invertible(rng, rep.psi_dim()),
                           testing::random_invertible(rng, rep.phi_dim()));
        const bool same = decompose_indecomposables(rep) == m;
        t.expect(same, "round trip on " + multiset_string(m));
        round_trips += same;
    }
    t.detail << agree << "/1000 self-dual reps agree (" << split << " split), " << round_trips
             << "/500 round trips exact";
    return t;
}

Tally criterion_cross_module() {
    Tally t;
    testing::Rng rng(0xC6C6);
    int good = 0;
    for (int i = 0; i < 100; ++i) {
        const auto spec = testing::random_spec(rng, 1 + i % 4, 5);
        const Diagram inv = ker_T_minus_I(spec);
        const auto mass = static_cast<std::size_t>(inv.mass());
        const QuiverRep rep = realize(spec, {});
        const std::size_t fixed =
            rep.psi_dim() == 0 ? 0 : kernel(rep.T_psi - Matrix::identity(rep.psi_dim())).dim();
        const bool quiver_ok = stalk(rep).h_minus1 == mass && fixed == mass;
        const bool polydisk_ok = ih_local(testing::multi_from_spec(spec), {}, 0) == inv;
        t.expect(quiver_ok, "quiver invariants on spec " + std::to_string(i));
        t.expect(polydisk_ok, "polydisk invariants on spec " + std::to_string(i));
        good += quiver_ok && polydisk_ok;
    }
    t.detail << good << "/100 specs agree across quiver, polydisk and diagram";
    return t;
}

Tally criterion_frontier() {
    Tally t;
    auto k3 = body<DegenerationFixture>("k3-E8tilde.json");
    for (int k = 0; k <= 2 * k3.n; ++k)
        t.expect(slc_grF0_predicate(k3, k).verdict == Verdict::pass, "K3 at k=" + std::to_string(k));
    t.expect(check_frontier(k3).ok(), "K3 frontier report");
    auto n16 = body<DegenerationFixture>("n16.json");
    const auto c = slc_grF0_predicate(n16, 2);
    t.expect(c.verdict == Verdict::fail, "N16 predicate did not fail");
    t.detail << "K3 passes; N16 fails as expected at k=2 (" << c.witness << ")";
    return t;
}

Tally criterion_katz() {
    Tally t;
    auto katz = body<LocalSystemFixture>("katz-family.json");
    const long rank = euler_poincare_rank(katz.data);
    t.expect(rank == 7, "rank " + std::to_string(rank));
    const auto s = shioda_assemble(*katz.shioda);
    t.expect(s.h0_next == 1 && s.phantom == 8 && s.h0_prev == 1 && s.total == 10, "graded pieces");
    t.detail << "rank=" << rank << ", pieces " << s.h0_next << "+" << s.phantom << "+" << s.h0_prev << "=" << s.total;
    return t;
}

}  // namespace

int main() {
    const std::function<Tally()> criteria[] = {criterion_kodaira, criterion_k3,       criterion_milnor,
                                               criterion_koszul,  criterion_a4,       criterion_cross_module,
                                               criterion_frontier, criterion_katz};
    int failures = 0;
    for (int i = 0; i < 8; ++i) {
        Tally t;
        try {
            t = criteria[i]();
        } catch (const std::exception& e) {
            t.ok = false;
            t.detail << "exception: " << e.what();
        }
        std::printf("criterion %d: %s  %s\n", i + 1, t.ok ? "PASS" : "FAIL", t.detail.str().c_str());
        failures += !t.ok;
    }
    return failures == 0 ? 0 : 1;
}
