#pragma once

#include "dendra/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace dendra {

using Vector = std::vector<Rational>;

/// One row of a sparse matrix: (column, value) pairs, strictly increasing
/// columns, no stored zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Matrices with more entries than this are stored in coordinate form.
inline constexpr std::size_t kDenseEntryLimit = 1'000'000;

Vector zero_vector(std::size_t n);
bool is_zero(std::span<const Rational> v);
void axpy(Vector& y, const Rational& a, std::span<const Rational> x); // y += a x

class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, std::size_t dense_limit = kDenseEntryLimit);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_sparse() const { return std::holds_alternative<SparseStorage>(storage_); }

    Rational get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Rational& v);
    void add(std::size_t i, std::size_t j, const Rational& v);

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    SparseRow sparse_row(std::size_t i) const;

    Matrix transpose() const;
    Vector operator*(std::span<const Rational> v) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(const Rational& s) const;
    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    using DenseStorage = std::vector<Rational>;
    using SparseStorage = std::vector<std::map<std::size_t, Rational>>;

    void check_index(std::size_t i, std::size_t j) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::variant<DenseStorage, SparseStorage> storage_;
};

/// Kronecker product with the first factor's index most significant.
Matrix kron(const Matrix& a, const Matrix& b);

/// Reduced row-echelon form: leading ones, zero above and below each pivot.
struct Echelon
{
    std::size_t cols = 0;
    std::vector<SparseRow> rows;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. The pivot for each step is the leftmost column
/// carrying a nonzero among the remaining rows, taken from the topmost such
/// row, so the result is reproducible bit for bit.
Echelon row_reduce(std::vector<SparseRow> rows, std::size_t cols);
Echelon row_reduce(const Matrix& m);

/// A linear subspace of Q^n held as its canonical RREF basis.
class Subspace
{
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(std::span<const Rational> v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates with respect to basis(), or nullopt when v is outside.
    std::optional<Vector> coordinates(std::span<const Rational> v) const;
    /// Basis vectors as the columns of an ambient_dim x dim matrix.
    Matrix basis_matrix() const;
    Subspace sum(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const Matrix& m);
Subspace kernel(const Matrix& m);
/// Image (column space) of m.
Subspace image(const Matrix& m);
/// Particular solution with every free variable set to zero, or nullopt when
/// m x = b is inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b);
/// dim z - dim b; throws ContainmentViolation unless b is inside z.
std::size_t quotient_dim(const Subspace& z, const Subspace& b);

/// Canonical complement of b inside z, used for coordinates of classes in z/b.
class Quotient
{
public:
    Quotient(Subspace z, Subspace b);

    std::size_t dim() const { return complement_.size(); }
    const Subspace& numerator() const { return z_; }
    const Subspace& denominator() const { return b_; }
    /// Vectors of z whose classes form the basis used by class_vector.
    const std::vector<Vector>& representatives() const { return complement_; }
    /// Coordinates of the class of v; nullopt when v is not in z.
    std::optional<Vector> class_vector(std::span<const Rational> v) const;
    bool is_trivial_class(std::span<const Rational> v) const;

private:
    Vector reduce_mod_b(std::span<const Rational> v) const;

    Subspace z_;
    Subspace b_;
    std::vector<Vector> complement_;
    std::vector<std::size_t> complement_pivots_;
};

} // namespace dendra
