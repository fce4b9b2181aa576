#include "degen/polydisk.hpp"

#include <algorithm>
#include <numeric>

namespace degen {

namespace {

bool same_eigen(const MultiBasisElement& a, const MultiBasisElement& b, int r) {
    for (int j = 0; j < r; ++j) {
        const RootOfUnity x = a.eigen.empty() ? RootOfUnity{} : a.eigen[j];
        const RootOfUnity y = b.eigen.empty() ? RootOfUnity{} : b.eigen[j];
        if (static_cast<long>(x.exponent) * y.order != static_cast<long>(y.exponent) * x.order) return false;
    }
    return true;
}

std::string subset_string(const ParamSubset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

void subsets_rec(const std::vector<int>& pool, std::size_t from, std::size_t want, ParamSubset& cur,
                 std::vector<ParamSubset>& out) {
    if (cur.size() == want) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
        cur.push_back(pool[i]);
        subsets_rec(pool, i + 1, want, cur, out);
        cur.pop_back();
    }
}

std::vector<ParamSubset> subsets_of(const std::vector<int>& pool, std::size_t size) {
    std::vector<ParamSubset> out;
    ParamSubset cur;
    subsets_rec(pool, 0, size, cur, out);
    return out;
}

std::vector<int> free_params(int r, const ParamSubset& fixed) {
    std::vector<int> out;
    for (int j = 1; j <= r; ++j)
        if (std::find(fixed.begin(), fixed.end(), j) == fixed.end()) out.push_back(j);
    return out;
}

void check_subset(int r, const ParamSubset& fixed) {
    for (std::size_t i = 0; i < fixed.size(); ++i) {
        if (fixed[i] < 1 || fixed[i] > r)
            throw InputError("parameter index " + std::to_string(fixed[i]) + " outside 1.." + std::to_string(r));
        if (i && fixed[i] <= fixed[i - 1]) throw InputError("parameter subset must be strictly increasing");
    }
}

// Koszul complex of the commuting N_j (j free) restricted to an N-stable subspace
KoszulComplex build_on(const MultiLmhs& h, const ParamSubset& fixed, const Subspace& v) {
    const auto freep = free_params(h.r, fixed);
    const std::size_t n = h.dim();
    KoszulComplex k;
    std::vector<std::map<ParamSubset, Subspace>> images(freep.size() + 1);
    for (std::size_t s = 0; s <= freep.size(); ++s) {
        k.summands.push_back(subsets_of(freep, s));
        std::vector<std::size_t> ds;
        std::size_t total = 0;
        for (const auto& J : k.summands.back()) {
            Matrix m = v.basis();
            for (int j : J) m = h.nilpotents[j - 1] * m;
            Subspace img = Subspace::span(m.cols() ? m : Matrix(n, 0));
            ds.push_back(img.dim());
            total += img.dim();
            images[s].emplace(J, std::move(img));
        }
        k.summand_dims.push_back(ds);
        k.dims.push_back(total);
    }
    for (std::size_t s = 0; s + 1 <= freep.size(); ++s) {
        Matrix d(k.dims[s + 1], k.dims[s]);
        std::size_t col0 = 0;
        for (const auto& J : k.summands[s]) {
            const Subspace& src = images[s].at(J);
            std::size_t row0 = 0;
            for (const auto& J2 : k.summands[s + 1]) {
                const Subspace& dst = images[s + 1].at(J2);
                if (std::includes(J2.begin(), J2.end(), J.begin(), J.end())) {
                    int extra = 0;
                    for (int j : J2)
                        if (std::find(J.begin(), J.end(), j) == J.end()) extra = j;
                    const long before = std::count_if(J.begin(), J.end(), [extra](int i) { return i < extra; });
                    const Rational sign = before % 2 ? -1 : 1;
                    if (src.dim() && dst.dim()) {
                        const Matrix block = dst.coordinates(h.nilpotents[extra - 1] * src.basis());
                        for (std::size_t a = 0; a < block.rows(); ++a)
                            for (std::size_t b = 0; b < block.cols(); ++b) d(row0 + a, col0 + b) = sign * block(a, b);
                    }
                }
                row0 += dst.dim();
            }
            col0 += src.dim();
        }
        k.differentials.push_back(std::move(d));
    }
    return k;
}

Subspace coordinate_span(std::size_t n, const std::vector<std::size_t>& idx) {
    Matrix m(n, idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) m(idx[c], c) = 1;
    return Subspace::span(m);
}

bool invariant_for(const MultiBasisElement& e, const std::vector<int>& freep) {
    if (e.eigen.empty()) return true;
    for (int j : freep)
        if (!e.eigen[j - 1].trivial()) return false;
    return true;
}

}  // namespace

void validate(const MultiLmhs& h) {
    if (h.r < 1) throw InputError("multi-parameter data needs r >= 1");
    if (h.nilpotents.size() != static_cast<std::size_t>(h.r))
        throw InputError("expected " + std::to_string(h.r) + " nilpotent matrices, got " +
                         std::to_string(h.nilpotents.size()));
    const std::size_t n = h.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& e = h.basis[i];
        if (!e.eigen.empty() && e.eigen.size() != static_cast<std::size_t>(h.r))
            throw InputError("basis element " + std::to_string(i) + " has " + std::to_string(e.eigen.size()) +
                             " eigenvalue entries, expected " + std::to_string(h.r));
        for (const auto& z : e.eigen)
            if (z.order < 1 || z.exponent < 0 || z.exponent >= z.order)
                throw InputError("basis element " + std::to_string(i) + " has an invalid root of unity");
    }
    for (int j = 0; j < h.r; ++j) {
        const Matrix& nj = h.nilpotents[j];
        if (nj.rows() != n || nj.cols() != n)
            throw InputError("N_" + std::to_string(j + 1) + " must be " + std::to_string(n) + "x" + std::to_string(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (nj(a, b) == 0) continue;
                const PQ want{h.basis[b].label.first - 1, h.basis[b].label.second - 1};
                if (h.basis[a].label != want)
                    throw InputError("N_" + std::to_string(j + 1) + " sends basis " + std::to_string(b) + " " +
                                     pq_string(h.basis[b].label) + " into " + pq_string(h.basis[a].label) +
                                     "; it must lower both indices by 1");
                if (!same_eigen(h.basis[a], h.basis[b], h.r))
                    throw InputError("N_" + std::to_string(j + 1) + " mixes semisimple eigenvalues between basis " +
                                     std::to_string(b) + " and " + std::to_string(a));
            }
    }
    for (int i = 0; i < h.r; ++i)
        for (int j = i + 1; j < h.r; ++j)
            if (h.nilpotents[i] * h.nilpotents[j] != h.nilpotents[j] * h.nilpotents[i])
                throw InputError("N_" + std::to_string(i + 1) + " and N_" + std::to_string(j + 1) + " do not commute");
}

Diagram diagram(const MultiLmhs& h) {
    Diagram d;
    for (const auto& e : h.basis) d.bump(e.label.first, e.label.second);
    return d;
}

KoszulComplex koszul_complex(const MultiLmhs& h, const ParamSubset& fixed, bool invariants_only) {
    validate(h);
    check_subset(h.r, fixed);
    if (!invariants_only) return build_on(h, fixed, Subspace::full(h.dim()));
    const auto freep = free_params(h.r, fixed);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < h.dim(); ++i)
        if (invariant_for(h.basis[i], freep)) idx.push_back(i);
    return build_on(h, fixed, coordinate_span(h.dim(), idx));
}

std::vector<std::size_t> koszul_cohomology_dims(const KoszulComplex& k) {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < k.dims.size(); ++s) {
        const std::size_t out_rank = s < k.differentials.size() ? rank(k.differentials[s]) : 0;
        const std::size_t in_rank = s > 0 ? rank(k.differentials[s - 1]) : 0;
        out.push_back(k.dims[s] - out_rank - in_rank);
    }
    return out;
}

Diagram ih_local(const MultiLmhs& h, const ParamSubset& fixed, int slot) {
    validate(h);
    check_subset(h.r, fixed);
    Diagram out;
    if (slot < 0) return out;
    const auto freep = free_params(h.r, fixed);
    if (static_cast<std::size_t>(slot) > freep.size()) return out;
    // the complex splits by the Hodge label of the source vector; slot twist cancels the N shift
    std::map<PQ, std::vector<std::size_t>> by_label;
    for (std::size_t i = 0; i < h.dim(); ++i)
        if (invariant_for(h.basis[i], freep)) by_label[h.basis[i].label].push_back(i);
    for (const auto& [pq, idx] : by_label) {
        const auto k = build_on(h, fixed, coordinate_span(h.dim(), idx));
        const auto dims = koszul_cohomology_dims(k);
        if (dims[slot]) out.bump(pq.first, pq.second, static_cast<long>(dims[slot]));
    }
    return out;
}

std::vector<ParamSubset> subsets_of_size(int r, int c) {
    std::vector<int> pool(r);
    std::iota(pool.begin(), pool.end(), 1);
    return subsets_of(pool, c);
}

IhDecomposition ih_decomposition(int m, const StrataInput& strata) {
    const int r = strata.r;
    if (r < 1) throw InputError("multi-parameter data needs r >= 1");
    IhDecomposition dec;
    dec.m = m;
    dec.r = r;
    const int cmax = std::min(r, m / 2);
    for (int c = 0; c <= cmax; ++c) {
        for (int l = 0; l <= std::max(0, r - c - 1); ++l) {
            const int deg = m - l;
            Diagram cell;
            for (const auto& I : subsets_of_size(r, c)) {
                if (deg < 0 || (c > 0 && deg < 2 * c)) continue;  // these strata carry nothing below degree 2c
                const StratumData* sd = nullptr;
                if (auto it = strata.strata.find(I); it != strata.strata.end())
                    if (auto jt = it->second.find(deg); jt != it->second.end()) sd = &jt->second;
                if (!sd || (!sd->lmhs && (l > 0 || !sd->invariants)))
                    throw InputError("missing stratum data: I=" + subset_string(I) + " degree " + std::to_string(deg) +
                                     (l > 0 ? " (limit structure needed for slot " + std::to_string(l) + ")" : ""));
                Diagram piece;
                if (sd->lmhs) {
                    if (sd->lmhs->r != r)
                        throw InputError("stratum " + subset_string(I) + " degree " + std::to_string(deg) + " has r=" +
                                         std::to_string(sd->lmhs->r) + ", expected " + std::to_string(r));
                    piece = ih_local(*sd->lmhs, I, l);
                    if (l == 0 && sd->invariants) {
                        const std::string where = subset_string(I) + " deg " + std::to_string(deg);
                        if (*sd->invariants == piece)
                            dec.checks.pass("pd.invariants-agree", where);
                        else
                            dec.checks.fail("pd.invariants-agree", where,
                                            "supplied " + sd->invariants->str() + " vs computed " + piece.str());
                    }
                } else {
                    piece = *sd->invariants;
                }
                cell = add(cell, piece);
            }
            dec.cells[{c, l}] = cell;
            dec.total = add(dec.total, cell);
        }
    }
    auto coniveau_part = [&](int alpha) {
        Diagram d;
        for (const auto& [key, cell] : dec.cells)
            if (key.first >= alpha) d = add(d, cell);
        return d;
    };
    auto leray_part = [&](int alpha) {
        Diagram d;
        for (const auto& [key, cell] : dec.cells)
            if (key.second >= std::max(alpha - key.first, 0)) d = add(d, cell);
        return d;
    };
    auto both = [&](int a, int c) {
        Diagram d;
        for (const auto& [key, cell] : dec.cells)
            if (key.first >= c && key.second >= std::max(a - key.first, 0)) d = add(d, cell);
        return d;
    };
    for (int alpha = 0; alpha <= r + 1; ++alpha) {
        dec.coniveau[alpha] = coniveau_part(alpha);
        dec.leray[alpha] = leray_part(alpha);
        const std::string where = "alpha=" + std::to_string(alpha);
        if (dec.coniveau[alpha].leq(dec.leray[alpha]))
            dec.checks.pass("pd.coniveau-in-leray", where);
        else
            dec.checks.fail("pd.coniveau-in-leray", where,
                            "N " + dec.coniveau[alpha].str() + " not inside L " + dec.leray[alpha].str());
    }
    for (const auto& [key, cell] : dec.cells) {
        const auto [c, l] = key;
        const int a = l + c;
        SignedTable t;
        accumulate(t, both(a, c), +1);
        accumulate(t, both(a + 1, c), -1);
        accumulate(t, both(a, c + 1), -1);
        accumulate(t, both(a + 1, c + 1), +1);
        accumulate(t, cell, -1);
        PQ w;
        long v = 0;
        const std::string where = "c=" + std::to_string(c) + ",l=" + std::to_string(l);
        if (signed_zero(t, &w, &v))
            dec.checks.pass("pd.graded-cell", where);
        else
            dec.checks.fail("pd.graded-cell", where, "GrL GrN differs by " + std::to_string(v) + " at " + pq_string(w));
    }
    return dec;
}

Report polydisk_cs(const IhDecomposition& dec, const Diagram& invariants, const std::optional<Diagram>& special_fiber) {
    Report r;
    const std::string where = "m=" + std::to_string(dec.m);
    auto cell = [&](int c, int l) {
        auto it = dec.cells.find({c, l});
        return it == dec.cells.end() ? Diagram{} : it->second;
    };
    if (cell(0, 0) == invariants)
        r.pass("pcs.sp-invariants", where);
    else
        r.fail("pcs.sp-invariants", where, "IH^0 of the open stratum " + cell(0, 0).str() + " vs invariants " +
                                               invariants.str());

    Diagram denom;
    for (int l = 1; l <= dec.r - 1; ++l) denom = add(denom, cell(0, l));
    if (!denom.leq(dec.total)) {
        r.fail("pcs.surjective", where, "higher IH terms exceed the middle term");
        return r;
    }
    const Diagram quotient = subtract(dec.total, denom);
    if (invariants.leq(quotient)) {
        r.pass("pcs.surjective", where);
        const Diagram kernel = subtract(quotient, invariants);
        const Diagram n1 = dec.coniveau.count(1) ? dec.coniveau.at(1) : Diagram{};
        if (kernel == n1)
            r.pass("pcs.kernel", where);
        else
            r.fail("pcs.kernel", where, "kernel of sp " + kernel.str() + " vs coniveau N^1 " + n1.str());
    } else {
        r.fail("pcs.surjective", where, "invariants " + invariants.str() + " exceed quotient " + quotient.str());
    }

    const Diagram n1 = dec.coniveau.count(1) ? dec.coniveau.at(1) : Diagram{};
    const Diagram gr0 = subtract(dec.coniveau.at(0), n1);
    if (add(n1, gr0) == dec.total)
        r.pass("pcs.direct-sum", where);
    else
        r.fail("pcs.direct-sum", where, "N^1 + GrN^0 does not rebuild the total");

    if (special_fiber) {
        if (*special_fiber == dec.total)
            r.pass("pcs.special-fiber", where);
        else
            r.fail("pcs.special-fiber", where, "supplied H^m(X_0) " + special_fiber->str() + " vs decomposition " +
                                                   dec.total.str());
    }
    return r;
}

}  // namespace degen
