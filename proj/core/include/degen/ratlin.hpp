#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace degen {

using Rational = mpq_class;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    // row-major nested initializer, handy in tests
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    const std::vector<Rational>& entries() const { return a_; }

    bool is_zero() const;
    Matrix transpose() const;
    Matrix column(std::size_t c) const;
    Matrix columns(const std::vector<std::size_t>& idx) const;
    Matrix rows_subset(const std::vector<std::size_t>& idx) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Rational& s) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix pow(unsigned e) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

struct RowEchelon {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);
bool invertible(const Matrix& m);
Matrix inverse(const Matrix& m);  // throws std::domain_error when singular

// Column span inside Q^ambient.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0);
    // columns need not be independent; they are reduced to a basis
    static Subspace span(const Matrix& columns);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const Matrix& vec) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    // coordinates of columns of v with respect to basis(); throws if outside
    Matrix coordinates(const Matrix& v) const;

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// matrix of the map m : dom -> cod in the chosen bases; m(dom) must land in cod
Matrix restrict_map(const Matrix& m, const Subspace& dom, const Subspace& cod);
// rows cut out s: a (ambient - dim s) x ambient matrix with kernel exactly s
Matrix quotient_map(const Subspace& s);

using Partition = std::vector<std::size_t>;  // descending block sizes

bool is_nilpotent(const Matrix& n);
Partition nilpotent_partition(const Matrix& n);  // throws std::domain_error if not nilpotent

Matrix exp_nilpotent(const Matrix& n);
Matrix log_unipotent(const Matrix& u);

struct QuasiUnipotentSplit {
    Matrix semisimple;
    Matrix unipotent;
    Matrix log_unipotent;
    std::map<unsigned, std::size_t> orders;  // cyclotomic order -> multiplicity in char poly
};

class NotQuasiUnipotent : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

QuasiUnipotentSplit quasi_unipotent_split(const Matrix& t);

// generalized eigenspace of t for the cyclotomic factor of order d
Subspace cyclotomic_component(const Matrix& t, unsigned d);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);  // "a" or "a/b"; throws std::invalid_argument
std::string to_string(const Matrix& m);

}  // namespace degen
