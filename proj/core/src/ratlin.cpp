#include "degen/ratlin.hpp"

#include <algorithm>
#include <sstream>

#include "degen/cyclotomic.hpp"

namespace degen {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols)
        throw DimensionError("matrix entry count " + std::to_string(a_.size()) + " does not match " +
                             std::to_string(rows) + "x" + std::to_string(cols));
    for (auto& x : a_) x.canonicalize();
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix literal");
        for (long v : r) a_.emplace_back(v);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::column(std::size_t c) const { return columns({c}); }

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
    Matrix out(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= cols_) throw DimensionError("column index out of range");
        for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, idx[j]);
    }
    return out;
}

Matrix Matrix::rows_subset(const std::vector<std::size_t>& idx) const {
    Matrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= rows_) throw DimensionError("row index out of range");
        for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(idx[i], c);
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw DimensionError("cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                             " by " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += x * o(k, j);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("shape mismatch in +");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("shape mismatch in -");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

Matrix Matrix::operator-() const { return scaled(-1); }

Matrix Matrix::scaled(const Rational& s) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix Matrix::pow(unsigned e) const {
    if (!square()) throw DimensionError("pow needs a square matrix");
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (e) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e) base = base * base;
    }
    return result;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
    Matrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        for (std::size_t r = 0; r < a.rows(); ++r) out(r, c) = a(r, c);
        for (std::size_t r = 0; r < b.rows(); ++r) out(a.rows() + r, c) = b(r, c);
    }
    return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

RowEchelon rref(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, col) == 0) ++piv;  // first nonzero pivot
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
        const Rational inv = 1 / a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            const Rational f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Rational determinant(const Matrix& m) {
    if (!m.square()) throw DimensionError("determinant of a non-square matrix");
    Matrix a = m;
    Rational det = 1;
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col) == 0) continue;
            const Rational f = a(r, col) / a(col, col);
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

bool invertible(const Matrix& m) { return m.square() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
    if (!m.square()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    auto e = rref(hstack(m, Matrix::identity(n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n)) throw std::domain_error("matrix is singular");
    std::vector<std::size_t> right(n);
    for (std::size_t i = 0; i < n; ++i) right[i] = n + i;
    return e.reduced.columns(right);
}

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}

Subspace Subspace::span(const Matrix& columns) {
    Subspace s(columns.rows());
    auto e = rref(columns);
    s.basis_ = columns.columns(e.pivots);
    return s;
}

Subspace Subspace::full(std::size_t ambient) { return span(Matrix::identity(ambient)); }

bool Subspace::contains(const Matrix& vec) const {
    if (vec.rows() != ambient_) throw DimensionError("vector not in ambient space");
    return rank(hstack(basis_, vec)) == dim();
}

bool Subspace::contains(const Subspace& other) const { return contains(other.basis()); }

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && dim() == o.dim() && contains(o);
}

Matrix Subspace::coordinates(const Matrix& v) const {
    if (v.rows() != ambient_) throw DimensionError("vector not in ambient space");
    const std::size_t k = dim();
    auto e = rref(hstack(basis_, v));
    // basis columns are independent, so pivots 0..k-1 are the basis; any later pivot means v escapes
    if (e.pivots.size() > k) throw std::domain_error("vector lies outside the subspace");
    Matrix out(k, v.cols());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < v.cols(); ++j) out(i, j) = e.reduced(i, k + j);
    return out;
}

Subspace kernel(const Matrix& m) {
    auto e = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix basis(n, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        basis(free_cols[j], j) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], j) = -e.reduced(r, free_cols[j]);
    }
    return Subspace::span(basis);
}

Subspace image(const Matrix& m) { return Subspace::span(m); }

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw DimensionError("sum of subspaces in different ambients");
    return Subspace::span(hstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw DimensionError("intersection of subspaces in different ambients");
    // x = A u = B v  <=>  [A | -B] (u,v) = 0
    const Matrix joint = hstack(a.basis(), -b.basis());
    const Subspace k = kernel(joint);
    std::vector<std::size_t> top(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) top[i] = i;
    const Matrix u = k.basis().rows_subset(top);
    return Subspace::span(a.basis() * u);
}

Matrix restrict_map(const Matrix& m, const Subspace& dom, const Subspace& cod) {
    if (m.cols() != dom.ambient() || m.rows() != cod.ambient()) throw DimensionError("restrict_map shape mismatch");
    return cod.coordinates(m * dom.basis());
}

Matrix quotient_map(const Subspace& s) { return kernel(s.basis().transpose()).basis().transpose(); }

bool is_nilpotent(const Matrix& n) {
    if (!n.square()) return false;
    return n.pow(static_cast<unsigned>(n.rows())).is_zero();
}

Partition nilpotent_partition(const Matrix& n) {
    if (!is_nilpotent(n)) throw std::domain_error("matrix is not nilpotent");
    const std::size_t dim = n.rows();
    std::vector<std::size_t> r{dim};
    Matrix p = Matrix::identity(dim);
    while (r.back() > 0) {
        p = p * n;
        r.push_back(rank(p));
    }
    r.push_back(0);
    Partition out;
    // blocks of size >= i : r[i-1] - r[i]
    for (std::size_t i = r.size() - 2; i >= 1; --i) {
        const std::size_t at_least = r[i - 1] - r[i];
        const std::size_t at_least_next = r[i] - r[i + 1];
        for (std::size_t c = 0; c < at_least - at_least_next; ++c) out.push_back(i);
    }
    return out;
}

Matrix exp_nilpotent(const Matrix& n) {
    if (!is_nilpotent(n)) throw std::domain_error("exp_nilpotent on a non-nilpotent matrix");
    Matrix acc = Matrix::identity(n.rows());
    Matrix term = acc;
    for (std::size_t k = 1; k <= n.rows(); ++k) {
        term = (term * n).scaled(Rational(1, static_cast<long>(k)));
        if (term.is_zero()) break;
        acc = acc + term;
    }
    return acc;
}

Matrix log_unipotent(const Matrix& u) {
    const Matrix x = u - Matrix::identity(u.rows());
    if (!is_nilpotent(x)) throw std::domain_error("log_unipotent on a non-unipotent matrix");
    Matrix acc = Matrix::zero(u.rows(), u.cols());
    Matrix power = Matrix::identity(u.rows());
    for (std::size_t k = 1; k <= u.rows(); ++k) {
        power = power * x;
        if (power.is_zero()) break;
        const Rational c(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
        acc = acc + power.scaled(c);
    }
    return acc;
}

QuasiUnipotentSplit quasi_unipotent_split(const Matrix& t) {
    if (!t.square()) throw DimensionError("monodromy must be square");
    const std::size_t n = t.rows();
    QuasiUnipotentSplit out;
    if (n == 0) return {Matrix(), Matrix(), Matrix(), {}};
    const auto fac = cyclotomic_factor(characteristic_poly(t));
    if (!fac.ok())
        throw NotQuasiUnipotent("characteristic polynomial has a non-cyclotomic factor of degree " +
                                std::to_string(fac.leftover.degree()));
    // squarefree part: product of the distinct cyclotomic factors
    Poly sf = Poly::monomial(0);
    for (const auto& [d, mult] : fac.orders) sf = sf * cyclotomic_poly(d);
    const Poly dsf = sf.derivative();
    // Newton iteration for the semisimple part; converges in O(log n) steps
    Matrix s = t;
    for (std::size_t it = 0; it <= 2 * n + 2; ++it) {
        const Matrix val = sf.eval(s);
        if (val.is_zero()) break;
        s = s - val * inverse(dsf.eval(s));
    }
    if (!sf.eval(s).is_zero()) throw std::logic_error("semisimple iteration failed to converge");
    out.semisimple = s;
    out.unipotent = inverse(s) * t;
    out.log_unipotent = log_unipotent(out.unipotent);
    out.orders = fac.orders;
    return out;
}

Subspace cyclotomic_component(const Matrix& t, unsigned d) {
    const Matrix phi = cyclotomic_poly(d).eval(t);
    return kernel(phi.pow(static_cast<unsigned>(t.rows())));
}

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t i = 0;
    if (s[i] == '-' || s[i] == '+') ++i;
    bool seen_digit = false, seen_slash = false, digit_after_slash = false;
    for (; i < s.size(); ++i) {
        if (s[i] >= '0' && s[i] <= '9') {
            seen_digit = true;
            if (seen_slash) digit_after_slash = true;
        } else if (s[i] == '/' && !seen_slash && seen_digit) {
            seen_slash = true;
        } else {
            throw std::invalid_argument("bad rational literal '" + s + "'");
        }
    }
    if (!seen_digit || (seen_slash && !digit_after_slash)) throw std::invalid_argument("bad rational literal '" + s + "'");
    Rational q;
    q.set_str(s[0] == '+' ? s.substr(1) : s, 10);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << to_string(m(r, c));
    }
    os << "]";
    return os.str();
}

}  // namespace degen
