#include <unistd.h>

#include <cstdlib>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "degen/basechange.hpp"
#include "degen/checks.hpp"
#include "degen/fixture_io.hpp"
#include "degen/polydisk.hpp"
#include "degen/quiver.hpp"
#include "degen/render.hpp"

using namespace degen;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInputError = 2 };

bool use_color() {
    const char* env = std::getenv("DEGENKIT_COLOR");
    const std::string mode = env ? env : "auto";
    if (mode == "always") return true;
    if (mode == "never") return false;
    if (std::getenv("NO_COLOR")) return false;
    return isatty(STDOUT_FILENO);
}

template <class T>
const T& expect_kind(const FixtureFile& f, const char* want) {
    if (!std::holds_alternative<T>(f.body))
        throw InputError(f.name + ": expected a " + want + " fixture, got " + fixture_kind(f));
    return std::get<T>(f.body);
}

ParamSubset parse_subset(const std::string& s) {
    ParamSubset out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw InputError("bad subset entry '" + tok + "'");
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct Outcome {
    std::string text;
    int code = kOk;
};

Outcome run_check(const std::string& path, bool full, bool machine, const RenderOptions& opt) {
    Outcome o;
    try {
        const auto f = load_fixture(path);
        const Report r = check_fixture(f);
        o.code = r.ok() ? kOk : kCheckFailed;
        if (machine) {
            o.text = "{\"fixture\": \"" + path + "\", \"report\": " + report_json(r) + "}\n";
        } else {
            std::string head = path + " (" + fixture_kind(f) + "): " + (r.ok() ? "ok" : "FAILED") + "\n";
            RenderOptions ro = opt;
            ro.failures_only = !full;
            o.text = head + render_report(r, ro);
        }
    } catch (const InputError& e) {
        o.code = kInputError;
        o.text = std::string("error: ") + e.what() + "\n";
    } catch (const ConsistencyError& e) {
        o.code = kCheckFailed;
        o.text = std::string("inconsistent: ") + e.what() + "\n";
    }
    return o;
}

int batch(const std::vector<std::string>& paths, int jobs, bool full, bool machine) {
    const RenderOptions opt{use_color()};
    std::vector<Outcome> results(paths.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < paths.size(); ++i) results[i] = run_check(paths[i], full, machine, opt);
    } else {
        for (std::size_t start = 0; start < paths.size(); start += static_cast<std::size_t>(jobs)) {
            std::vector<std::future<Outcome>> fs;
            for (std::size_t i = start; i < std::min(paths.size(), start + static_cast<std::size_t>(jobs)); ++i)
                fs.push_back(std::async(std::launch::async, run_check, paths[i], full, machine, opt));
            for (std::size_t i = 0; i < fs.size(); ++i) results[start + i] = fs[i].get();
        }
    }
    int code = kOk;
    for (const auto& o : results) {
        std::cout << o.text;
        code = std::max(code, o.code);
    }
    return code;
}

int cmd_solve(const std::string& path, int k, const std::string& position) {
    const auto f = load_fixture(path);
    const auto& fx = expect_kind<DegenerationFixture>(f, "degeneration");
    const Position pos = parse_position(position);
    const Solved s = solve_unknown(fx, k, pos);
    std::cout << position << " at k=" << k << ":\n" << render_diagram(s.value, {use_color()});
    for (const auto& n : s.notes) std::cout << "note: " << n << "\n";
    std::cout << "solution: " << diagram_json(s.value) << "\n";
    std::cout << "mass: " << s.value.mass() << "\n";
    return kOk;
}

int cmd_render(const std::string& path, const std::string& inline_diagram, int degree) {
    const RenderOptions opt{use_color()};
    if (!inline_diagram.empty()) {
        std::cout << render_diagram(parse_diagram(inline_diagram), opt);
        return kOk;
    }
    if (path.empty()) throw InputError("render needs a fixture path or --diagram");
    const auto f = load_fixture(path);
    if (const auto* fx = std::get_if<DegenerationFixture>(&f.body)) {
        for (const auto& [k, d] : fx->degrees) {
            if (degree >= 0 && k != degree) continue;
            if (d.special_fiber) std::cout << "H^" << k << "(X_0)\n" << render_diagram(*d.special_fiber, opt) << "\n";
            if (d.lmhs) std::cout << "H^" << k << "_lim\n" << render_lmhs(*d.lmhs, opt) << "\n";
            if (d.vanishing) std::cout << "vanishing H^" << k << "\n" << render_diagram(*d.vanishing, opt) << "\n";
        }
    } else if (const auto* t = std::get_if<TailFixture>(&f.body)) {
        if (t->strata.vanishing) std::cout << "vanishing\n" << render_diagram(*t->strata.vanishing, opt);
        for (const auto& s : t->strata.strata)
            std::cout << "stratum k=" << s.k << " exceptional\n" << render_diagram(s.exceptional, opt);
    } else if (const auto* m = std::get_if<MultiParameterFixture>(&f.body)) {
        for (const auto& [I, per] : m->strata.strata)
            for (const auto& [deg, d] : per) {
                if (degree >= 0 && deg != degree) continue;
                std::string label = "{";
                for (std::size_t i = 0; i < I.size(); ++i) label += (i ? "," : "") + std::to_string(I[i]);
                label += "}";
                std::cout << "stratum " << label << " degree " << deg << "\n"
                          << render_diagram(d.lmhs ? diagram(*d.lmhs) : *d.invariants, opt) << "\n";
            }
    } else {
        throw InputError(std::string("nothing to render for a ") + fixture_kind(f) + " fixture");
    }
    return kOk;
}

int cmd_quiver(const std::string& path) {
    const auto f = load_fixture(path);
    const auto& rep = expect_kind<QuiverFixture>(f, "quiver").rep;
    const auto ms = decompose_indecomposables(rep);
    const auto v = a4_verdicts(rep);
    const auto st = stalk(rep);
    const auto co = costalk(rep);
    auto yn = [](bool b) { return b ? "true" : "false"; };
    std::cout << "summands: " << multiset_string(ms) << "\n"
              << "self-dual: " << yn(self_dual(ms)) << "\n"
              << "decomposes: " << yn(v.decomposes) << "\n"
              << "cs-exact: " << yn(v.cs_exact) << "\n"
              << "local-invariant-cycle: " << yn(v.lic) << "\n"
              << "stalk: H^-1=" << st.h_minus1 << " H^0=" << st.h0 << "\n"
              << "costalk: H^0=" << co.h0 << " H^1=" << co.h1 << "\n"
              << "sequence:";
    for (const auto& s : cs_sequence(rep).slots) {
        std::cout << " " << s.term;
        if (s.twist) std::cout << "(" << -s.twist << ")";
        std::cout << "[" << s.dim << (s.exact ? "" : ",not exact") << "]";
    }
    std::cout << "\n";
    return kOk;
}

int cmd_base_change(const std::string& path, long kappa_flag) {
    const auto f = load_fixture(path);
    const RenderOptions opt{use_color()};
    if (const auto* c = std::get_if<CyclotomicFixture>(&f.body)) {
        const long kappa = kappa_flag > 0 ? kappa_flag : c->kappa;
        const auto sols = cyclotomic_refinement(c->multiset, kappa);
        std::cout << sols.size() << " refinement(s) for kappa=" << kappa << "\n";
        for (const auto& s : sols) {
            std::cout << " ";
            for (const auto& [l, n] : s) std::cout << " V" << l << "^" << n;
            std::cout << "\n";
        }
        return sols.empty() ? kCheckFailed : kOk;
    }
    const auto& fx = expect_kind<DegenerationFixture>(f, "degeneration");
    if (kappa_flag < 1) throw InputError("--kappa is required and must be >= 1");
    for (const auto& [k, d] : fx.degrees) {
        if (!d.lmhs) continue;
        const auto bc = base_change_lmhs(*d.lmhs, kappa_flag);
        std::cout << "H^" << k << "_lim after kappa=" << kappa_flag << "\n" << render_lmhs(bc, opt);
        const auto gap = invariant_gap(*d.lmhs, kappa_flag);
        std::cout << "invariant gap: " << gap.str() << " (mass " << gap.mass() << ")\n\n";
    }
    return kOk;
}

int cmd_koszul(const std::string& path, const std::string& subset, int slot, int degree) {
    const auto f = load_fixture(path);
    const auto& m = expect_kind<MultiParameterFixture>(f, "multi_parameter");
    const ParamSubset I = parse_subset(subset);
    auto it = m.strata.strata.find(I);
    if (it == m.strata.strata.end()) throw InputError("no stratum data for subset '" + subset + "'");
    const MultiLmhs* h = nullptr;
    for (const auto& [deg, d] : it->second) {
        if (!d.lmhs || (degree >= 0 && deg != degree)) continue;
        if (h) throw InputError("several degrees carry limit data for this subset; pass --degree");
        h = &*d.lmhs;
    }
    if (!h) throw InputError("no limit structure for that subset/degree");
    const auto k = koszul_complex(*h, I);
    const auto coh = koszul_cohomology_dims(k);
    std::cout << "degree " << h->degree << ", terms:";
    for (std::size_t s = 0; s < k.dims.size(); ++s) {
        std::cout << " C^" << s << "=";
        for (std::size_t j = 0; j < k.summand_dims[s].size(); ++j)
            std::cout << (j ? "+" : "") << k.summand_dims[s][j];
    }
    std::cout << "\nranks:";
    for (const auto& d : k.differentials) std::cout << " " << rank(d);
    std::cout << "\ncohomology:";
    for (auto c : coh) std::cout << " " << c;
    const Diagram ih = ih_local(*h, I, slot);
    std::cout << "\nIH^" << slot << ": " << ih.str() << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degenkit: Hodge-theoretic bookkeeping for degenerations"};
    app.require_subcommand(1);

    std::vector<std::string> check_paths;
    int jobs = 1;
    bool machine = false;
    auto* check = app.add_subcommand("check", "run every applicable check on fixtures");
    check->add_option("fixtures", check_paths, "fixture files")->required();
    check->add_option("-j,--jobs", jobs, "fixtures checked in parallel")->check(CLI::PositiveNumber);

    std::vector<std::string> report_paths;
    auto* report = app.add_subcommand("report", "full report for fixtures");
    report->add_option("fixtures", report_paths, "fixture files")->required();
    report->add_flag("--machine-readable", machine, "emit JSON");
    report->add_option("-j,--jobs", jobs, "fixtures checked in parallel")->check(CLI::PositiveNumber);

    std::string path, position, diagram_text, subset;
    int degree = -1, slot = 0;
    long kappa = 0;
    auto* solve = app.add_subcommand("solve", "solve one term of the degree-k sequences");
    solve->add_option("fixture", path)->required();
    solve->add_option("-k,--degree", degree, "degree k")->required();
    solve->add_option("-p,--position", position,
                      "coinvariants|homology|special_fiber|invariants|vanishing|phantom")
        ->required();

    auto* render = app.add_subcommand("render", "draw Hodge-Deligne diagrams");
    render->add_option("fixture", path);
    render->add_option("--diagram", diagram_text, "inline diagram [[p,q,m],...]");
    render->add_option("-k,--degree", degree, "only this degree");

    auto* quiver = app.add_subcommand("quiver-decompose", "indecomposable summands and verdicts");
    quiver->add_option("fixture", path)->required();

    auto* bc = app.add_subcommand("base-change", "cyclic base change and refinements");
    bc->add_option("fixture", path)->required();
    bc->add_option("--kappa", kappa, "base-change degree");

    auto* kz = app.add_subcommand("koszul", "Koszul complex and local IH");
    kz->add_option("fixture", path)->required();
    kz->add_option("--subset", subset, "fixed parameters, e.g. 1,2 (default empty)");
    kz->add_option("--slot", slot, "cohomology slot");
    kz->add_option("-k,--degree", degree, "degree of the limit structure");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*check) return batch(check_paths, jobs, false, false);
        if (*report) return batch(report_paths, jobs, true, machine);
        if (*solve) return cmd_solve(path, degree, position);
        if (*render) return cmd_render(path, diagram_text, degree);
        if (*quiver) return cmd_quiver(path);
        if (*bc) return cmd_base_change(path, kappa);
        if (*kz) return cmd_koszul(path, subset, slot, degree);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ConsistencyError& e) {
        std::cerr << "inconsistent: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}
