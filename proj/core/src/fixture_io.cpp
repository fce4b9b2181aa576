#include "degen/fixture_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace degen {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) { throw InputError(path + ": " + msg); }

const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) bad(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(path, std::string("missing field '") + key + "'");
    return *it;
}

const json* maybe_field(const json& j, const char* key) {
    if (!j.is_object()) return nullptr;
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return nullptr;
    return &*it;
}

std::string sub(const std::string& path, const char* key) { return path + "." + key; }
std::string sub(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

long as_long(const json& j, const std::string& path) {
    if (!j.is_number_integer()) bad(path, "expected an integer");
    return j.get<long>();
}

int as_int(const json& j, const std::string& path) { return static_cast<int>(as_long(j, path)); }

bool as_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) bad(path, "expected true or false");
    return j.get<bool>();
}

std::string as_string(const json& j, const std::string& path) {
    if (!j.is_string()) bad(path, "expected a string");
    return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array");
    return j;
}

Rational as_rational(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception& e) {
            bad(path, std::string("bad rational: ") + e.what());
        }
    }
    bad(path, "expected an integer or a \"num/den\" string");
}

Diagram read_diagram(const json& j, const std::string& path) {
    Diagram d;
    const auto& a = as_array(j, path);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto p = sub(path, i);
        if (!a[i].is_array() || a[i].size() != 3) bad(p, "expected [p, q, multiplicity]");
        const int pp = as_int(a[i][0], p + "[0]"), qq = as_int(a[i][1], p + "[1]");
        const long m = as_long(a[i][2], p + "[2]");
        if (m < 0) bad(p, "negative multiplicity " + std::to_string(m) + " at " + pq_string({pp, qq}));
        if (d.at(pp, qq)) bad(p, "duplicate entry for " + pq_string({pp, qq}));
        d.set(pp, qq, m);
    }
    return d;
}

json write_diagram(const Diagram& d) {
    json a = json::array();
    for (const auto& [pq, m] : d.entries()) a.push_back({pq.first, pq.second, m});
    return a;
}

PQ read_pq(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) bad(path, "expected [p, q]");
    return {as_int(j[0], path + "[0]"), as_int(j[1], path + "[1]")};
}

LmhsSpec read_lmhs(const json& j, int degree, const std::string& path) {
    LmhsSpec s{degree, {}};
    const auto& a = as_array(j, path);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto p = sub(path, i);
        NString n;
        n.top = read_pq(field(a[i], "top", p), sub(p, "top"));
        n.length = as_int(field(a[i], "length", p), sub(p, "length"));
        if (auto f = maybe_field(a[i], "order")) n.order = as_int(*f, sub(p, "order"));
        if (auto f = maybe_field(a[i], "exponent")) n.exponent = as_int(*f, sub(p, "exponent"));
        if (auto f = maybe_field(a[i], "mult")) n.mult = as_long(*f, sub(p, "mult"));
        s.strings.push_back(n);
    }
    try {
        return canonical(s);
    } catch (const InputError& e) {
        bad(path, e.what());
    }
}

json write_lmhs(const LmhsSpec& s) {
    json a = json::array();
    for (const auto& n : s.strings)
        a.push_back({{"top", {n.top.first, n.top.second}},
                     {"length", n.length},
                     {"order", n.order},
                     {"exponent", n.exponent},
                     {"mult", n.mult}});
    return a;
}

Matrix read_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& path) {
    const auto& a = as_array(j, path);
    if (a.size() != rows) bad(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(a.size()));
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto p = sub(path, r);
        const auto& row = as_array(a[r], p);
        if (row.size() != cols) bad(p, "expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = as_rational(row[c], sub(p, c));
    }
    return m;
}

json write_matrix(const Matrix& m) {
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        a.push_back(row);
    }
    return a;
}

template <class F>
auto wrap(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError& e) {
        const std::string msg = e.what();
        if (msg.rfind(path, 0) == 0) throw;
        bad(path, msg);
    }
}

DegenerationFixture read_degeneration(const json& j) {
    DegenerationFixture fx;
    fx.n = as_int(field(j, "n", "$"), "$.n");
    if (auto f = maybe_field(j, "flags")) {
        const std::string p = "$.flags";
        if (!f->is_object()) bad(p, "expected an object");
        if (auto g = maybe_field(*f, "total_space_smooth")) fx.flags.total_space_smooth = as_bool(*g, sub(p, "total_space_smooth"));
        if (auto g = maybe_field(*f, "special_fiber_reduced"))
            fx.flags.special_fiber_reduced = as_bool(*g, sub(p, "special_fiber_reduced"));
        if (auto g = maybe_field(*f, "d_sing")) fx.flags.d_sing = as_int(*g, sub(p, "d_sing"));
        if (auto g = maybe_field(*f, "singularity"))
            fx.flags.singularity = wrap(sub(p, "singularity"), [&] { return parse_singularity_class(as_string(*g, sub(p, "singularity"))); });
        if (auto g = maybe_field(*f, "quotient_of_smooth_cover"))
            fx.flags.quotient_of_smooth_cover = as_bool(*g, sub(p, "quotient_of_smooth_cover"));
    }
    const auto& degs = as_array(field(j, "degrees", "$"), "$.degrees");
    for (std::size_t i = 0; i < degs.size(); ++i) {
        const auto p = sub("$.degrees", i);
        const int k = as_int(field(degs[i], "k", p), sub(p, "k"));
        if (fx.degrees.count(k)) bad(p, "degree " + std::to_string(k) + " listed twice");
        DegreeData d;
        if (auto f = maybe_field(degs[i], "special_fiber")) d.special_fiber = read_diagram(*f, sub(p, "special_fiber"));
        if (auto f = maybe_field(degs[i], "lmhs")) d.lmhs = read_lmhs(*f, k, sub(p, "lmhs"));
        if (auto f = maybe_field(degs[i], "phantom")) d.phantom = read_diagram(*f, sub(p, "phantom"));
        if (auto f = maybe_field(degs[i], "vanishing")) d.vanishing = read_diagram(*f, sub(p, "vanishing"));
        fx.degrees[k] = d;
    }
    wrap("$", [&] {
        validate(fx);
        return 0;
    });
    return fx;
}

json write_degeneration(const DegenerationFixture& fx) {
    json j;
    j["n"] = fx.n;
    j["flags"] = {{"total_space_smooth", fx.flags.total_space_smooth},
                  {"special_fiber_reduced", fx.flags.special_fiber_reduced},
                  {"d_sing", fx.flags.d_sing},
                  {"singularity", singularity_class_name(fx.flags.singularity)},
                  {"quotient_of_smooth_cover", fx.flags.quotient_of_smooth_cover}};
    json degs = json::array();
    for (const auto& [k, d] : fx.degrees) {
        json e;
        e["k"] = k;
        if (d.special_fiber) e["special_fiber"] = write_diagram(*d.special_fiber);
        if (d.lmhs) e["lmhs"] = write_lmhs(*d.lmhs);
        if (d.phantom) e["phantom"] = write_diagram(*d.phantom);
        if (d.vanishing) e["vanishing"] = write_diagram(*d.vanishing);
        degs.push_back(e);
    }
    j["degrees"] = degs;
    return j;
}

Family read_family(const json& j, const std::string& path) {
    const auto s = as_string(j, path);
    for (auto f : {Family::A, Family::B, Family::C, Family::D, Family::E})
        if (s == family_name(f)) return f;
    bad(path, "unknown family '" + s + "' (expected A, B, C, D or E)");
}

QuiverFixture read_quiver(const json& j) {
    QuiverFixture q;
    if (auto s = maybe_field(j, "summands")) {
        SummandMultiset m;
        const auto& a = as_array(*s, "$.summands");
        for (std::size_t i = 0; i < a.size(); ++i) {
            const auto p = sub("$.summands", i);
            Summand sm;
            sm.family = read_family(field(a[i], "family", p), sub(p, "family"));
            sm.size = as_int(field(a[i], "size", p), sub(p, "size"));
            if (auto f = maybe_field(a[i], "order")) sm.order = as_int(*f, sub(p, "order"));
            long count = 1;
            if (auto f = maybe_field(a[i], "count")) count = as_long(*f, sub(p, "count"));
            if (count < 0) bad(sub(p, "count"), "negative count");
            m[sm] += count;
        }
        q.rep = wrap("$.summands", [&] { return build(m); });
    } else {
        const long psi = as_long(field(j, "psi_dim", "$"), "$.psi_dim");
        const long phi = as_long(field(j, "phi_dim", "$"), "$.phi_dim");
        if (psi < 0 || phi < 0) bad("$", "dimensions must be >= 0");
        const auto up = static_cast<std::size_t>(psi), uf = static_cast<std::size_t>(phi);
        q.rep.T_psi = read_matrix(field(j, "T_psi", "$"), up, up, "$.T_psi");
        q.rep.T_phi = read_matrix(field(j, "T_phi", "$"), uf, uf, "$.T_phi");
        q.rep.can = read_matrix(field(j, "can", "$"), uf, up, "$.can");
        q.rep.var = read_matrix(field(j, "var", "$"), up, uf, "$.var");
    }
    wrap("$", [&] {
        require_valid(q.rep);
        return 0;
    });
    return q;
}

json write_quiver(const QuiverFixture& q) {
    return {{"psi_dim", q.rep.psi_dim()},
            {"phi_dim", q.rep.phi_dim()},
            {"T_psi", write_matrix(q.rep.T_psi)},
            {"T_phi", write_matrix(q.rep.T_phi)},
            {"can", write_matrix(q.rep.can)},
            {"var", write_matrix(q.rep.var)}};
}

MultiLmhs read_multi(const json& j, int r, int degree, const std::string& path) {
    MultiLmhs h;
    h.r = r;
    h.degree = degree;
    const auto& basis = as_array(field(j, "basis", path), sub(path, "basis"));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto p = sub(sub(path, "basis"), i);
        MultiBasisElement e;
        e.label = read_pq(field(basis[i], "label", p), sub(p, "label"));
        if (auto f = maybe_field(basis[i], "eigen")) {
            const auto& a = as_array(*f, sub(p, "eigen"));
            for (std::size_t t = 0; t < a.size(); ++t) {
                const auto pe = sub(sub(p, "eigen"), t);
                if (!a[t].is_array() || a[t].size() != 2) bad(pe, "expected [exponent, order]");
                e.eigen.push_back({as_int(a[t][0], pe + "[0]"), as_int(a[t][1], pe + "[1]")});
            }
        }
        h.basis.push_back(e);
    }
    const auto& ns = as_array(field(j, "N", path), sub(path, "N"));
    for (std::size_t t = 0; t < ns.size(); ++t) h.nilpotents.push_back(read_matrix(ns[t], h.dim(), h.dim(), sub(sub(path, "N"), t)));
    wrap(path, [&] {
        validate(h);
        return 0;
    });
    return h;
}

json write_multi(const MultiLmhs& h) {
    json basis = json::array();
    for (const auto& e : h.basis) {
        json b{{"label", {e.label.first, e.label.second}}};
        if (!e.eigen.empty()) {
            json ev = json::array();
            for (const auto& z : e.eigen) ev.push_back({z.exponent, z.order});
            b["eigen"] = ev;
        }
        basis.push_back(b);
    }
    json ns = json::array();
    for (const auto& m : h.nilpotents) ns.push_back(write_matrix(m));
    return {{"basis", basis}, {"N", ns}};
}

MultiParameterFixture read_multi_parameter(const json& j) {
    MultiParameterFixture f;
    f.strata.r = as_int(field(j, "r", "$"), "$.r");
    if (f.strata.r < 1) bad("$.r", "r must be >= 1");
    const auto& st = as_array(field(j, "strata", "$"), "$.strata");
    for (std::size_t i = 0; i < st.size(); ++i) {
        const auto p = sub("$.strata", i);
        ParamSubset I;
        const auto& a = as_array(field(st[i], "subset", p), sub(p, "subset"));
        for (std::size_t t = 0; t < a.size(); ++t) {
            const int x = as_int(a[t], sub(sub(p, "subset"), t));
            if (x < 1 || x > f.strata.r) bad(sub(sub(p, "subset"), t), "parameter index out of range");
            if (!I.empty() && x <= I.back()) bad(sub(p, "subset"), "must be strictly increasing");
            I.push_back(x);
        }
        const int deg = as_int(field(st[i], "degree", p), sub(p, "degree"));
        StratumData d;
        if (auto g = maybe_field(st[i], "invariants")) d.invariants = read_diagram(*g, sub(p, "invariants"));
        if (auto g = maybe_field(st[i], "lmhs")) d.lmhs = read_multi(*g, f.strata.r, deg, sub(p, "lmhs"));
        if (!d.invariants && !d.lmhs) bad(p, "stratum needs 'invariants' or 'lmhs'");
        if (f.strata.strata[I].count(deg)) bad(p, "stratum and degree listed twice");
        f.strata.strata[I][deg] = d;
    }
    if (auto c = maybe_field(j, "cases")) {
        const auto& a = as_array(*c, "$.cases");
        for (std::size_t i = 0; i < a.size(); ++i) {
            const auto p = sub("$.cases", i);
            PolydiskCase pc;
            pc.m = as_int(field(a[i], "m", p), sub(p, "m"));
            pc.invariants = read_diagram(field(a[i], "invariants", p), sub(p, "invariants"));
            if (auto g = maybe_field(a[i], "special_fiber")) pc.special_fiber = read_diagram(*g, sub(p, "special_fiber"));
            f.cases.push_back(pc);
        }
    }
    return f;
}

json write_multi_parameter(const MultiParameterFixture& f) {
    json st = json::array();
    for (const auto& [I, per] : f.strata.strata)
        for (const auto& [deg, d] : per) {
            json e{{"subset", I}, {"degree", deg}};
            if (d.invariants) e["invariants"] = write_diagram(*d.invariants);
            if (d.lmhs) e["lmhs"] = write_multi(*d.lmhs);
            st.push_back(e);
        }
    json cases = json::array();
    for (const auto& c : f.cases) {
        json e{{"m", c.m}, {"invariants", write_diagram(c.invariants)}};
        if (c.special_fiber) e["special_fiber"] = write_diagram(*c.special_fiber);
        cases.push_back(e);
    }
    return {{"r", f.strata.r}, {"strata", st}, {"cases", cases}};
}

LocalSystemFixture read_local_system(const json& j) {
    LocalSystemFixture f;
    f.data.chi_base = as_long(field(j, "chi_base", "$"), "$.chi_base");
    f.data.h1_base = as_long(field(j, "h1_base", "$"), "$.h1_base");
    f.data.generic_rank = as_long(field(j, "generic_rank", "$"), "$.generic_rank");
    f.data.fixed_rank = as_long(field(j, "fixed_rank", "$"), "$.fixed_rank");
    const auto& a = as_array(field(j, "local_ranks", "$"), "$.local_ranks");
    for (std::size_t i = 0; i < a.size(); ++i) f.data.local_ranks.push_back(as_long(a[i], sub("$.local_ranks", i)));
    if (auto g = maybe_field(j, "expected_rank")) f.expected_rank = as_long(*g, "$.expected_rank");
    if (auto g = maybe_field(j, "shioda")) {
        ShiodaInputs s;
        s.h0_next = read_diagram(field(*g, "h0_next", "$.shioda"), "$.shioda.h0_next");
        s.ih1 = read_diagram(field(*g, "ih1", "$.shioda"), "$.shioda.ih1");
        s.phantom = read_diagram(field(*g, "phantom", "$.shioda"), "$.shioda.phantom");
        s.h0_prev = read_diagram(field(*g, "h0_prev", "$.shioda"), "$.shioda.h0_prev");
        f.shioda = s;
    }
    if (auto g = maybe_field(j, "expected_total")) f.expected_total = as_long(*g, "$.expected_total");
    return f;
}

json write_local_system(const LocalSystemFixture& f) {
    json j{{"chi_base", f.data.chi_base},
           {"h1_base", f.data.h1_base},
           {"generic_rank", f.data.generic_rank},
           {"fixed_rank", f.data.fixed_rank},
           {"local_ranks", f.data.local_ranks}};
    if (f.expected_rank) j["expected_rank"] = *f.expected_rank;
    if (f.shioda)
        j["shioda"] = {{"h0_next", write_diagram(f.shioda->h0_next)},
                       {"ih1", write_diagram(f.shioda->ih1)},
                       {"phantom", write_diagram(f.shioda->phantom)},
                       {"h0_prev", write_diagram(f.shioda->h0_prev)}};
    if (f.expected_total) j["expected_total"] = *f.expected_total;
    return j;
}

TailFixture read_tail(const json& j) {
    TailFixture f;
    f.strata.n = as_int(field(j, "n", "$"), "$.n");
    const auto& chi = as_array(field(j, "chi_open", "$"), "$.chi_open");
    for (std::size_t i = 0; i < chi.size(); ++i) f.strata.chi_open.push_back(as_long(chi[i], sub("$.chi_open", i)));
    if (auto g = maybe_field(j, "strata")) {
        const auto& a = as_array(*g, "$.strata");
        for (std::size_t i = 0; i < a.size(); ++i) {
            const auto p = sub("$.strata", i);
            TailStratum t;
            t.k = as_int(field(a[i], "k", p), sub(p, "k"));
            if (auto h = maybe_field(a[i], "exceptional")) t.exceptional = read_diagram(*h, sub(p, "exceptional"));
            if (auto h = maybe_field(a[i], "total")) t.total = read_diagram(*h, sub(p, "total"));
            f.strata.strata.push_back(t);
        }
    }
    if (auto g = maybe_field(j, "vanishing")) f.strata.vanishing = read_diagram(*g, "$.vanishing");
    if (auto g = maybe_field(j, "expected_milnor")) f.expected_milnor = as_long(*g, "$.expected_milnor");
    return f;
}

json write_tail(const TailFixture& f) {
    json strata = json::array();
    for (const auto& t : f.strata.strata)
        strata.push_back({{"k", t.k}, {"exceptional", write_diagram(t.exceptional)}, {"total", write_diagram(t.total)}});
    json j{{"n", f.strata.n}, {"chi_open", f.strata.chi_open}, {"strata", strata}};
    if (f.strata.vanishing) j["vanishing"] = write_diagram(*f.strata.vanishing);
    if (f.expected_milnor) j["expected_milnor"] = *f.expected_milnor;
    return j;
}

CyclotomicFixture read_cyclotomic(const json& j) {
    CyclotomicFixture f;
    f.kappa = as_long(field(j, "kappa", "$"), "$.kappa");
    if (f.kappa < 1) bad("$.kappa", "kappa must be >= 1");
    const auto& a = as_array(field(j, "multiset", "$"), "$.multiset");
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto p = sub("$.multiset", i);
        if (!a[i].is_array() || a[i].size() != 2) bad(p, "expected [order, multiplicity]");
        const long d = as_long(a[i][0], p + "[0]"), m = as_long(a[i][1], p + "[1]");
        if (d < 1 || m < 0) bad(p, "order must be >= 1 and multiplicity >= 0");
        if (f.multiset.count(d)) bad(p, "order listed twice");
        f.multiset[d] = m;
    }
    return f;
}

json write_cyclotomic(const CyclotomicFixture& f) {
    json a = json::array();
    for (const auto& [d, m] : f.multiset) a.push_back({d, m});
    return {{"kappa", f.kappa}, {"multiset", a}};
}

}  // namespace

const char* fixture_kind(const FixtureFile& f) {
    static const char* names[] = {"degeneration", "quiver", "multi_parameter", "local_system", "tail_strata",
                                  "cyclotomic_multiset"};
    return names[f.body.index()];
}

FixtureFile parse_fixture(const std::string& text, const std::string& source) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(source + ": schema error: " + e.what());
    }
    try {
        if (!j.is_object()) bad("$", "top level must be an object");
        FixtureFile f;
        if (auto g = maybe_field(j, "format")) f.format = as_int(*g, "$.format");
        if (f.format != 1) bad("$.format", "unsupported format version " + std::to_string(f.format));
        if (auto g = maybe_field(j, "name")) f.name = as_string(*g, "$.name");
        if (auto g = maybe_field(j, "note")) f.note = as_string(*g, "$.note");
        const std::string kind = as_string(field(j, "kind", "$"), "$.kind");
        if (kind == "degeneration")
            f.body = read_degeneration(j);
        else if (kind == "quiver")
            f.body = read_quiver(j);
        else if (kind == "multi_parameter")
            f.body = read_multi_parameter(j);
        else if (kind == "local_system")
            f.body = read_local_system(j);
        else if (kind == "tail_strata")
            f.body = read_tail(j);
        else if (kind == "cyclotomic_multiset")
            f.body = read_cyclotomic(j);
        else
            bad("$.kind", "unknown fixture kind '" + kind + "'");
        return f;
    } catch (const InputError& e) {
        throw InputError(source + ": " + e.what());
    } catch (const json::exception& e) {
        throw InputError(source + ": schema error: " + e.what());
    }
}

FixtureFile load_fixture(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path.string() + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str(), path.string());
}

std::string serialize_fixture(const FixtureFile& f) {
    json j = std::visit(
        [](const auto& b) -> json {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, DegenerationFixture>) return write_degeneration(b);
            else if constexpr (std::is_same_v<T, QuiverFixture>) return write_quiver(b);
            else if constexpr (std::is_same_v<T, MultiParameterFixture>) return write_multi_parameter(b);
            else if constexpr (std::is_same_v<T, LocalSystemFixture>) return write_local_system(b);
            else if constexpr (std::is_same_v<T, TailFixture>) return write_tail(b);
            else return write_cyclotomic(b);
        },
        f.body);
    j["format"] = f.format;
    j["kind"] = fixture_kind(f);
    if (!f.name.empty()) j["name"] = f.name;
    if (!f.note.empty()) j["note"] = f.note;
    return j.dump(2) + "\n";
}

Diagram parse_diagram(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("diagram: ") + e.what());
    }
    return read_diagram(j, "diagram");
}

std::string diagram_json(const Diagram& d) { return write_diagram(d).dump(); }
std::string lmhs_json(const LmhsSpec& s) { return write_lmhs(s).dump(); }

std::string report_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks())
        checks.push_back(
            {{"id", c.id}, {"location", c.location}, {"verdict", verdict_name(c.verdict)}, {"witness", c.witness}});
    json j{{"ok", r.ok()},
           {"counts",
            {{"pass", r.count(Verdict::pass)}, {"fail", r.count(Verdict::fail)}, {"skipped", r.count(Verdict::skipped)}}},
           {"checks", checks}};
    return j.dump(2);
}

}  // namespace degen
