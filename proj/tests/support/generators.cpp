#include "generators.hpp"

#include <algorithm>

#include "degen/cyclotomic.hpp"

namespace degen::testing {

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
    return m;
}

Matrix random_invertible(Rng& rng, std::size_t n) {
    std::uniform_int_distribution<int> dist(-2, 2);
    Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (r > c) lower(r, c) = dist(rng);
            if (r < c) upper(r, c) = dist(rng);
        }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return (lower * upper).rows_subset(perm);
}

std::size_t total_dim(const SummandMultiset& m) {
    std::size_t t = 0;
    for (const auto& [s, c] : m) t += (summand_psi_dim(s) + summand_phi_dim(s)) * static_cast<std::size_t>(c);
    return t;
}

SummandMultiset random_multiset(Rng& rng, std::size_t max_total_dim, bool want_self_dual) {
    std::uniform_int_distribution<int> fam(0, 4), size(1, 3), attempts(1, 5);
    const int orders[] = {2, 3, 4, 6};
    std::uniform_int_distribution<int> ord(0, 3);
    SummandMultiset m;
    const int n = attempts(rng);
    for (int i = 0; i < n; ++i) {
        Summand s;
        s.family = static_cast<Family>(fam(rng));
        s.size = size(rng);
        long count = 1;
        if (s.family == Family::D) s.size -= 1;
        if (s.family == Family::E) {
            s.order = orders[ord(rng)];
            count = static_cast<long>(totient(static_cast<unsigned long>(s.order)));
        }
        SummandMultiset trial = m;
        trial[s] += count;
        if (want_self_dual && (s.family == Family::A || s.family == Family::B)) {
            Summand other = s;
            other.family = s.family == Family::A ? Family::B : Family::A;
            const long both = std::max(trial[other], trial[s]);
            trial[other] = both;
            trial[s] = both;
        }
        if (total_dim(trial) <= max_total_dim) m = trial;
    }
    for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
    return m;
}

LmhsSpec random_spec(Rng& rng, int degree, int max_strings) {
    LmhsSpec s{degree, {}};
    std::uniform_int_distribution<int> count(0, max_strings), len(1, degree + 1), kind(0, 3), mult(1, 2);
    const int orders[] = {2, 3, 4, 6};
    std::uniform_int_distribution<int> ord(0, 3);
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const int l = len(rng);
        const int w = degree + l - 1;  // p + q of the top
        // top (p,q) with bottom (p-l+1, q-l+1) >= 0 and p,q <= degree
        std::vector<int> ps;
        for (int p = l - 1; p <= degree; ++p)
            if (w - p >= l - 1 && w - p <= degree) ps.push_back(p);
        if (ps.empty()) continue;
        const int p = ps[std::uniform_int_distribution<std::size_t>(0, ps.size() - 1)(rng)];
        const int q = w - p;
        const long m = mult(rng);
        if (kind(rng) != 0) {
            s.strings.push_back({{p, q}, l, 1, 0, m});
            if (p != q) s.strings.push_back({{q, p}, l, 1, 0, m});
        } else {
            const int d = orders[ord(rng)];
            for (int a = 1; a < d; ++a) {
                if (std::gcd(a, d) != 1) continue;
                s.strings.push_back({{p, q}, l, d, a, m});
                s.strings.push_back({{q, p}, l, d, d - a, m});
            }
        }
    }
    return canonical(s);
}

MultiLmhs multi_from_spec(const LmhsSpec& spec) {
    MultiLmhs h;
    h.r = 1;
    h.degree = spec.degree;
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    for (const auto& s : spec.strings)
        for (long c = 0; c < s.mult; ++c)
            for (int i = 0; i < s.length; ++i) {
                if (i > 0) arrows.push_back({h.basis.size() - 1, h.basis.size()});
                h.basis.push_back({{s.top.first - i, s.top.second - i}, {{s.exponent, s.order}}});
            }
    Matrix n(h.dim(), h.dim());
    for (const auto& [from, to] : arrows) n(to, from) = 1;
    h.nilpotents.push_back(n);
    return h;
}

MultiLmhs random_commuting(Rng& rng, int r) {
    // tensor product of r Jordan strings; N_j acts on the j-th factor
    std::uniform_int_distribution<int> len(1, 3);
    std::vector<int> lens(r);
    for (auto& l : lens) l = len(rng);
    std::size_t n = 1;
    for (int l : lens) n *= static_cast<std::size_t>(l);
    MultiLmhs h;
    h.r = r;
    std::vector<std::vector<int>> idx;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<int> v(r);
        std::size_t rest = k;
        for (int j = r - 1; j >= 0; --j) {
            v[j] = static_cast<int>(rest % static_cast<std::size_t>(lens[j]));
            rest /= static_cast<std::size_t>(lens[j]);
        }
        int p = 0;
        for (int j = 0; j < r; ++j) p += lens[j] - 1 - v[j];
        h.basis.push_back({{p, p}, {}});
        idx.push_back(v);
    }
    for (int j = 0; j < r; ++j) {
        Matrix m(n, n);
        for (std::size_t a = 0; a < n; ++a) {
            if (idx[a][j] + 1 >= lens[j]) continue;
            auto v = idx[a];
            v[j] += 1;
            const auto b = static_cast<std::size_t>(std::find(idx.begin(), idx.end(), v) - idx.begin());
            m(b, a) = 1;
        }
        h.nilpotents.push_back(m);
    }
    (void)rng;
    return h;
}

}  // namespace degen::testing
