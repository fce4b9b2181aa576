#include "degen/quiver.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "degen/cyclotomic.hpp"

namespace degen {

namespace {

bool shapes_ok(const QuiverRep& r, std::vector<std::string>* out) {
    const std::size_t n = r.T_psi.rows(), m = r.T_phi.rows();
    bool ok = true;
    auto bad = [&](const std::string& s) {
        ok = false;
        if (out) out->push_back(s);
    };
    if (!r.T_psi.square()) bad("T_psi is not square");
    if (!r.T_phi.square()) bad("T_phi is not square");
    if (r.can.rows() != m || r.can.cols() != n) bad("can must be phi_dim x psi_dim");
    if (r.var.rows() != n || r.var.cols() != m) bad("var must be psi_dim x phi_dim");
    return ok;
}

// unipotent pieces of both ends with the maps restricted to them
struct Unipotent {
    Subspace psi;
    Subspace phi;
    Matrix can;
    Matrix var;
    Matrix n_psi;
};

Unipotent unipotent_part(const QuiverRep& r) {
    Unipotent u;
    u.psi = cyclotomic_component(r.T_psi, 1);
    u.phi = cyclotomic_component(r.T_phi, 1);
    u.can = restrict_map(r.can, u.psi, u.phi);
    u.var = restrict_map(r.var, u.phi, u.psi);
    const auto split = quasi_unipotent_split(r.T_psi);
    u.n_psi = restrict_map(split.log_unipotent, u.psi, u.psi);
    return u;
}

std::set<unsigned> nonunipotent_orders(const QuiverRep& r) {
    std::set<unsigned> ds;
    for (const auto* t : {&r.T_psi, &r.T_phi}) {
        if (t->rows() == 0) continue;
        for (const auto& [d, m] : cyclotomic_factor(characteristic_poly(*t)).orders)
            if (d > 1) ds.insert(d);
    }
    return ds;
}

// exactness of V_0 -> V_1 -> ... -> V_k -> 0 with 0 -> V_0 on the left
std::vector<bool> exactness(const std::vector<Matrix>& maps, const std::vector<std::size_t>& dims) {
    std::vector<bool> out(dims.size(), true);
    for (std::size_t i = 0; i < dims.size(); ++i) {
        const Subspace in = i == 0 ? Subspace(dims[0]) : image(maps[i - 1]);
        const Subspace ker = i < maps.size() ? kernel(maps[i]) : Subspace::full(dims[i]);
        out[i] = in == ker;
    }
    return out;
}

Matrix companion(const Poly& p) {
    const auto n = static_cast<std::size_t>(p.degree());
    Matrix c(n, n);
    for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i);
    return c;
}

Matrix jordan_nilpotent(std::size_t n) {
    Matrix j(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) j(i + 1, i) = 1;
    return j;
}

// uniserial string of the two-vertex cycle: positions alternate psi/phi starting at `start_psi`
QuiverRep string_rep(bool start_psi, std::size_t length) {
    std::vector<int> vertex(length);
    std::vector<std::size_t> idx(length);
    std::size_t np = 0, nf = 0;
    for (std::size_t j = 0; j < length; ++j) {
        const bool at_psi = (j % 2 == 0) == start_psi;
        vertex[j] = at_psi ? 0 : 1;
        idx[j] = at_psi ? np++ : nf++;
    }
    Matrix can(nf, np), var(np, nf);
    for (std::size_t j = 0; j + 1 < length; ++j) {
        if (vertex[j] == 0)
            can(idx[j + 1], idx[j]) = 1;
        else
            var(idx[j + 1], idx[j]) = 1;
    }
    QuiverRep r;
    r.can = can;
    r.var = var;
    r.T_psi = exp_nilpotent(var * can);
    r.T_phi = exp_nilpotent(can * var);
    return r;
}

}  // namespace

std::vector<std::string> validate(const QuiverRep& r) {
    std::vector<std::string> v;
    if (!shapes_ok(r, &v)) return v;
    for (const auto& [t, name] : {std::pair{&r.T_psi, "T_psi"}, std::pair{&r.T_phi, "T_phi"}}) {
        if (!invertible(*t)) {
            v.push_back(std::string(name) + " is not invertible");
            return v;
        }
        try {
            quasi_unipotent_split(*t);
        } catch (const NotQuasiUnipotent& e) {
            v.push_back(std::string(name) + ": " + e.what());
            return v;
        }
    }
    if (r.can * r.T_psi != r.T_phi * r.can) v.push_back("can*T_psi != T_phi*can");
    if (r.var * r.T_phi != r.T_psi * r.var) v.push_back("var*T_phi != T_psi*var");
    if (!v.empty()) return v;

    const Unipotent u = unipotent_part(r);
    if (u.var * u.can != u.n_psi) v.push_back("var*can != N on the unipotent part of psi");
    const auto split_phi = quasi_unipotent_split(r.T_phi);
    const Matrix n_phi = restrict_map(split_phi.log_unipotent, u.phi, u.phi);
    if (u.can * u.var != n_phi) v.push_back("can*var != N on the unipotent part of phi");

    for (unsigned d : nonunipotent_orders(r)) {
        const Subspace ps = cyclotomic_component(r.T_psi, d);
        const Subspace ph = cyclotomic_component(r.T_phi, d);
        const std::string tag = "order-" + std::to_string(d) + " part";
        if (ps.dim() != ph.dim()) {
            v.push_back(tag + ": psi and phi dimensions differ (" + std::to_string(ps.dim()) + " vs " +
                        std::to_string(ph.dim()) + ")");
            continue;
        }
        const Matrix c = restrict_map(r.can, ps, ph);
        const Matrix w = restrict_map(r.var, ph, ps);
        if (!invertible(w * c)) v.push_back(tag + ": var*can is not invertible");
    }
    return v;
}

void require_valid(const QuiverRep& rep) {
    const auto v = validate(rep);
    if (v.empty()) return;
    std::string msg = "invalid quiver representation:";
    for (const auto& s : v) msg += "\n  " + s;
    throw InputError(msg);
}

bool decomposes(const QuiverRep& r) {
    const Subspace im_can = image(r.can);
    const Subspace ker_var = kernel(r.var);
    return intersect(im_can, ker_var).dim() == 0 && im_can.dim() + ker_var.dim() == r.phi_dim();
}

Stalk stalk(const QuiverRep& r) {
    const Unipotent u = unipotent_part(r);
    const std::size_t rk = rank(u.can);
    return {u.psi.dim() - rk, u.phi.dim() - rk};
}

Costalk costalk(const QuiverRep& r) {
    const Unipotent u = unipotent_part(r);
    const std::size_t rk = rank(u.var);
    return {u.phi.dim() - rk, u.psi.dim() - rk};
}

bool CsSequence::exact() const {
    for (const auto& s : slots)
        if (!s.exact) return false;
    return true;
}

CsSequence cs_sequence(const QuiverRep& r) {
    const Unipotent u = unipotent_part(r);
    const std::size_t a = u.psi.dim();
    CsSequence out;

    // 0 -> H^-1 i^* -> psi -N-> psi(-1) -> H^1 i^! -> 0
    const Subspace ker_can = kernel(u.can);
    const Matrix incl = ker_can.basis();
    const Matrix to_coker_var = quotient_map(image(u.var));
    const std::vector<std::size_t> dims1{ker_can.dim(), a, a, to_coker_var.rows()};
    const auto ex1 = exactness({incl, u.n_psi, to_coker_var}, dims1);
    const char* names1[] = {"H^-1 i^*", "psi", "psi", "H^1 i^!"};
    const int twists1[] = {0, 0, 1, 1};
    for (std::size_t i = 0; i < 4; ++i) out.slots.push_back({names1[i], twists1[i], dims1[i], ex1[i]});

    // 0 -> H^0 i^! -> H^0 i^* -> 0, the map being ker(var) -> phi -> coker(can)
    const Subspace ker_var = kernel(u.var);
    const Matrix to_coker_can = quotient_map(image(u.can));
    const Matrix bridge = to_coker_can * ker_var.basis();
    const std::vector<std::size_t> dims2{ker_var.dim(), to_coker_can.rows()};
    const auto ex2 = exactness({bridge}, dims2);
    out.slots.push_back({"H^0 i^!", 0, dims2[0], ex2[0]});
    out.slots.push_back({"H^0 i^*", 0, dims2[1], ex2[1]});
    return out;
}

bool local_invariant_cycle(const QuiverRep& r) {
    const Unipotent u = unipotent_part(r);
    return kernel(u.can) == kernel(u.n_psi);
}

QuiverRep dualize(const QuiverRep& r) {
    // log of T^{-T} is -N^T, so one of the two transposes picks up a sign
    QuiverRep d;
    d.T_psi = inverse(r.T_psi).transpose();
    d.T_phi = inverse(r.T_phi).transpose();
    d.can = r.var.transpose();
    d.var = -r.can.transpose();
    return d;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::E: return "E";
    }
    return "?";
}

std::string summand_string(const Summand& s) {
    std::string out = std::string(family_name(s.family)) + "(" + std::to_string(s.size);
    if (s.family == Family::E) out += ",d=" + std::to_string(s.order);
    return out + ")";
}

std::string multiset_string(const SummandMultiset& m) {
    if (m.empty()) return "{}";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [s, c] : m) {
        os << (first ? "" : ", ") << summand_string(s) << " x" << c;
        first = false;
    }
    os << "}";
    return os.str();
}

std::size_t summand_psi_dim(const Summand& s) { return static_cast<std::size_t>(s.size); }

std::size_t summand_phi_dim(const Summand& s) {
    switch (s.family) {
        case Family::C: return static_cast<std::size_t>(s.size - 1);
        case Family::D: return static_cast<std::size_t>(s.size + 1);
        default: return static_cast<std::size_t>(s.size);
    }
}

SummandMultiset decompose_indecomposables(const QuiverRep& r) {
    SummandMultiset out;
    // non-unipotent isotypic pieces: Jordan blocks of N there, counted as complex lines
    if (r.psi_dim() > 0) {
        const auto split = quasi_unipotent_split(r.T_psi);
        for (const auto& [d, mult] : split.orders) {
            if (d == 1) continue;
            const Subspace comp = cyclotomic_component(r.T_psi, d);
            const Matrix nd = restrict_map(split.log_unipotent, comp, comp);
            for (std::size_t sz : nilpotent_partition(nd))
                ++out[{Family::E, static_cast<int>(sz), static_cast<int>(d)}];
        }
    }

    // unipotent part: A = [[0, var],[can, 0]] on psi_u + phi_u is nilpotent and its
    // Jordan chains are the uniserial strings; count strings by start vertex and length via
    //   #{start at s, length >= L} = rk(A^{L-1}|X_s) - rk(A^L|X_other)
    const Unipotent u = unipotent_part(r);
    const std::size_t a = u.psi.dim(), b = u.phi.dim(), n = a + b;
    if (n == 0) return out;
    Matrix big(n, n);
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < a; ++j) big(a + i, j) = u.can(i, j);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) big(i, a + j) = u.var(i, j);
    std::vector<std::size_t> cols_psi(a), cols_phi(b);
    std::iota(cols_psi.begin(), cols_psi.end(), 0);
    std::iota(cols_phi.begin(), cols_phi.end(), a);

    // ranks[v][L] = rank(A^L restricted to vertex v)
    std::vector<std::vector<std::size_t>> ranks(2, std::vector<std::size_t>(n + 2, 0));
    Matrix power = Matrix::identity(n);
    for (std::size_t L = 0; L <= n + 1; ++L) {
        ranks[0][L] = a ? rank(power.columns(cols_psi)) : 0;
        ranks[1][L] = b ? rank(power.columns(cols_phi)) : 0;
        power = power * big;
    }
    auto at_least = [&](int v, std::size_t L) -> long {
        return static_cast<long>(ranks[v][L - 1]) - static_cast<long>(ranks[1 - v][L]);
    };
    for (int v = 0; v < 2; ++v) {
        for (std::size_t L = 1; L <= n; ++L) {
            const long exact = at_least(v, L) - at_least(v, L + 1);
            if (exact <= 0) continue;
            Summand s;
            const bool odd = L % 2 == 1;
            if (v == 0) {
                s.family = odd ? Family::C : Family::B;
                s.size = static_cast<int>(odd ? (L + 1) / 2 : L / 2);
            } else {
                s.family = odd ? Family::D : Family::A;
                s.size = static_cast<int>(odd ? (L - 1) / 2 : L / 2);
            }
            out[s] += exact;
        }
    }
    return out;
}

SummandMultiset dual_multiset(const SummandMultiset& m) {
    SummandMultiset out;
    for (const auto& [s, c] : m) {
        Summand t = s;
        if (s.family == Family::A) t.family = Family::B;
        else if (s.family == Family::B) t.family = Family::A;
        out[t] += c;
    }
    return out;
}

bool self_dual(const SummandMultiset& m) { return dual_multiset(m) == m; }

A4Verdicts a4_verdicts(const QuiverRep& r) {
    return {decomposes(r), cs_sequence(r).exact(), local_invariant_cycle(r)};
}

Report theorem_a4_check(const QuiverRep& r) {
    require_valid(r);
    const auto ms = decompose_indecomposables(r);
    if (!self_dual(ms))
        throw InputError("representation is not self-dual (summands " + multiset_string(ms) +
                         "); the equivalence needs a self-duality isomorphism");
    const A4Verdicts v = a4_verdicts(r);
    Report rep;
    auto yn = [](bool b) { return std::string(b ? "true" : "false"); };
    rep.pass("a4.decomposes", "rep", yn(v.decomposes));
    rep.pass("a4.cs-exact", "rep", yn(v.cs_exact));
    rep.pass("a4.local-invariant-cycle", "rep", yn(v.lic));
    const std::string w = "decomposes=" + yn(v.decomposes) + " cs_exact=" + yn(v.cs_exact) + " lic=" + yn(v.lic);
    if (v.agree())
        rep.pass("a4.equivalence", "rep", w);
    else
        rep.fail("a4.equivalence", "rep", w);
    return rep;
}

QuiverRep normal_form(const Summand& s) {
    switch (s.family) {
        case Family::A:
            if (s.size < 1) throw InputError("A needs size >= 1");
            return string_rep(false, 2 * static_cast<std::size_t>(s.size));
        case Family::B:
            if (s.size < 1) throw InputError("B needs size >= 1");
            return string_rep(true, 2 * static_cast<std::size_t>(s.size));
        case Family::C:
            if (s.size < 1) throw InputError("C needs size >= 1");
            return string_rep(true, 2 * static_cast<std::size_t>(s.size) - 1);
        case Family::D:
            if (s.size < 0) throw InputError("D needs size >= 0");
            return string_rep(false, 2 * static_cast<std::size_t>(s.size) + 1);
        case Family::E: {
            if (s.size < 1 || s.order < 2) throw InputError("E needs size >= 1 and order >= 2");
            const Matrix c = companion(cyclotomic_poly(static_cast<unsigned>(s.order)));
            const Matrix t = kron(c, exp_nilpotent(jordan_nilpotent(static_cast<std::size_t>(s.size))));
            const Matrix id = Matrix::identity(t.rows());
            return {t, t, id, id};
        }
    }
    throw InputError("unknown family");
}

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
    return {block_diag(a.T_psi, b.T_psi), block_diag(a.T_phi, b.T_phi), block_diag(a.can, b.can),
            block_diag(a.var, b.var)};
}

QuiverRep change_basis(const QuiverRep& r, const Matrix& p_psi, const Matrix& p_phi) {
    const Matrix ip = inverse(p_psi), iq = inverse(p_phi);
    return {p_psi * r.T_psi * ip, p_phi * r.T_phi * iq, p_phi * r.can * ip, p_psi * r.var * iq};
}

QuiverRep build(const SummandMultiset& m) {
    QuiverRep out = QuiverRep::zero();
    for (const auto& [s, count] : m) {
        long copies = count;
        if (s.family == Family::E) {
            const auto phi = static_cast<long>(totient(static_cast<unsigned long>(s.order)));
            if (count % phi != 0)
                throw InputError(summand_string(s) + " x" + std::to_string(count) +
                                 " is not a union of Galois orbits (needs a multiple of " + std::to_string(phi) + ")");
            copies = count / phi;
        }
        const QuiverRep nf = normal_form(s);
        for (long i = 0; i < copies; ++i) out = direct_sum(out, nf);
    }
    return out;
}

QuiverRep realize(const LmhsSpec& spec, const Diagram& phantom) {
    validate(spec);
    SummandMultiset m;
    std::map<std::pair<int, int>, std::map<int, long>> orbits;  // (d, len) -> exponent -> count
    for (const auto& s : spec.strings) {
        if (s.order == 1)
            m[{Family::C, s.length, 1}] += s.mult;
        else
            orbits[{s.order, s.length}][s.exponent] += s.mult;
    }
    for (const auto& [key, per_a] : orbits) {
        const auto [d, len] = key;
        long per = -1;
        for (int a = 1; a < d; ++a) {
            if (std::gcd(a, d) != 1) continue;
            auto it = per_a.find(a);
            const long c = it == per_a.end() ? 0 : it->second;
            if (per < 0) per = c;
            if (c != per)
                throw InputError("cannot realize over Q: order-" + std::to_string(d) + " strings of length " +
                                 std::to_string(len) + " are not balanced over primitive exponents");
        }
        m[{Family::E, len, d}] += per * static_cast<long>(totient(static_cast<unsigned long>(d)));
    }
    if (phantom.mass() > 0) m[{Family::D, 0, 1}] += phantom.mass();
    return build(m);
}

}  // namespace degen
