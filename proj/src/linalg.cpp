#include "dendra/linalg.hpp"

#include "dendra/errors.hpp"

#include <algorithm>
#include <set>

namespace dendra {

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

bool is_zero(std::span<const Rational> v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

void axpy(Vector& y, const Rational& a, std::span<const Rational> x)
{
    if (sgn(a) == 0)
        return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0)
            y[i] += a * x[i];
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, std::size_t dense_limit) : rows_(rows), cols_(cols)
{
    if (rows * cols > dense_limit)
        storage_ = SparseStorage(rows);
    else
        storage_ = DenseStorage(rows * cols, Rational(0));
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows)
{
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw ShapeMismatch("row length differs from column count");
        for (std::size_t j = 0; j < cols; ++j)
            if (sgn(rows[i][j]) != 0)
                m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols)
{
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw ShapeMismatch("column length differs from row count");
        for (std::size_t i = 0; i < rows; ++i)
            if (sgn(cols[j][i]) != 0)
                m.set(i, j, cols[j][i]);
    }
    return m;
}

void Matrix::check_index(std::size_t i, std::size_t j) const
{
    if (i >= rows_ || j >= cols_)
        throw IndexOutOfRange("matrix index out of range");
}

Rational Matrix::get(std::size_t i, std::size_t j) const
{
    check_index(i, j);
    if (auto* d = std::get_if<DenseStorage>(&storage_))
        return (*d)[i * cols_ + j];
    const auto& row = std::get<SparseStorage>(storage_)[i];
    auto it = row.find(j);
    return it == row.end() ? Rational(0) : it->second;
}

void Matrix::set(std::size_t i, std::size_t j, const Rational& v)
{
    check_index(i, j);
    if (auto* d = std::get_if<DenseStorage>(&storage_)) {
        (*d)[i * cols_ + j] = v;
        return;
    }
    auto& row = std::get<SparseStorage>(storage_)[i];
    if (sgn(v) == 0)
        row.erase(j);
    else
        row[j] = v;
}

void Matrix::add(std::size_t i, std::size_t j, const Rational& v)
{
    check_index(i, j);
    if (sgn(v) == 0)
        return;
    if (auto* d = std::get_if<DenseStorage>(&storage_)) {
        (*d)[i * cols_ + j] += v;
        return;
    }
    auto& row = std::get<SparseStorage>(storage_)[i];
    auto [it, inserted] = row.try_emplace(j, v);
    if (!inserted) {
        it->second += v;
        if (sgn(it->second) == 0)
            row.erase(it);
    }
}

Vector Matrix::row(std::size_t i) const
{
    Vector r = zero_vector(cols_);
    for (auto& [j, v] : sparse_row(i))
        r[j] = v;
    return r;
}

Vector Matrix::column(std::size_t j) const
{
    Vector c = zero_vector(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = get(i, j);
    return c;
}

SparseRow Matrix::sparse_row(std::size_t i) const
{
    if (i >= rows_)
        throw IndexOutOfRange("matrix row out of range");
    SparseRow out;
    if (auto* d = std::get_if<DenseStorage>(&storage_)) {
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn((*d)[i * cols_ + j]) != 0)
                out.emplace_back(j, (*d)[i * cols_ + j]);
    } else {
        for (auto& [j, v] : std::get<SparseStorage>(storage_)[i])
            out.emplace_back(j, v);
    }
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (auto& [j, v] : sparse_row(i))
            t.set(j, i, v);
    return t;
}

Vector Matrix::operator*(std::span<const Rational> v) const
{
    if (v.size() != cols_)
        throw ShapeMismatch("matrix-vector product: length mismatch");
    Vector out = zero_vector(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (auto& [j, a] : sparse_row(i))
            if (sgn(v[j]) != 0)
                out[i] += a * v[j];
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw ShapeMismatch("matrix product: inner dimensions differ");
    Matrix out(rows_, rhs.cols_);
    std::vector<SparseRow> rhs_rows(rhs.rows_);
    for (std::size_t k = 0; k < rhs.rows_; ++k)
        rhs_rows[k] = rhs.sparse_row(k);
    for (std::size_t i = 0; i < rows_; ++i)
        for (auto& [k, a] : sparse_row(i))
            for (auto& [j, b] : rhs_rows[k])
                out.add(i, j, a * b);
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ShapeMismatch("matrix sum: shapes differ");
    Matrix out = *this;
    for (std::size_t i = 0; i < rows_; ++i)
        for (auto& [j, v] : rhs.sparse_row(i))
            out.add(i, j, v);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + rhs.scaled(-1); }

Matrix Matrix::scaled(const Rational& s) const
{
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (auto& [j, v] : sparse_row(i))
            out.set(i, j, s * v);
    return out;
}

bool Matrix::is_zero() const
{
    for (std::size_t i = 0; i < rows_; ++i)
        if (!sparse_row(i).empty())
            return false;
    return true;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        return false;
    for (std::size_t i = 0; i < a.rows_; ++i)
        if (a.sparse_row(i) != b.sparse_row(i))
            return false;
    return true;
}

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (auto& [j1, x] : a.sparse_row(i1))
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (auto& [j2, y] : b.sparse_row(i2))
                    out.set(i1 * b.rows() + i2, j1 * b.cols() + j2, x * y);
    return out;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

// target -= factor * source, both sorted sparse rows.
void subtract_multiple(SparseRow& target, const Rational& factor, const SparseRow& source)
{
    SparseRow out;
    out.reserve(target.size() + source.size());
    auto t = target.begin();
    auto s = source.begin();
    while (t != target.end() || s != source.end()) {
        if (s == source.end() || (t != target.end() && t->first < s->first)) {
            out.push_back(std::move(*t));
            ++t;
        } else if (t == target.end() || s->first < t->first) {
            out.emplace_back(s->first, -factor * s->second);
            ++s;
        } else {
            Rational v = t->second - factor * s->second;
            if (sgn(v) != 0)
                out.emplace_back(t->first, std::move(v));
            ++t;
            ++s;
        }
    }
    target = std::move(out);
}

const Rational* find_entry(const SparseRow& row, std::size_t col)
{
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

SparseRow to_sparse(std::span<const Rational> v)
{
    SparseRow r;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (sgn(v[j]) != 0)
            r.emplace_back(j, v[j]);
    return r;
}

Vector to_dense(const SparseRow& r, std::size_t n)
{
    Vector v = zero_vector(n);
    for (auto& [j, x] : r)
        v[j] = x;
    return v;
}

} // namespace

Echelon row_reduce(std::vector<SparseRow> rows, std::size_t cols)
{
    // Queue of live rows keyed by (leading column, original position).
    std::set<std::pair<std::size_t, std::size_t>> queue;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].empty())
            queue.emplace(rows[i].front().first, i);

    Echelon e;
    e.cols = cols;
    while (!queue.empty()) {
        auto [lead, p] = *queue.begin();
        queue.erase(queue.begin());
        SparseRow pivot = std::move(rows[p]);
        Rational inv = 1 / pivot.front().second;
        for (auto& [j, v] : pivot)
            v *= inv;

        while (!queue.empty() && queue.begin()->first == lead) {
            auto [_, q] = *queue.begin();
            queue.erase(queue.begin());
            Rational factor = rows[q].front().second;
            subtract_multiple(rows[q], factor, pivot);
            if (!rows[q].empty())
                queue.emplace(rows[q].front().first, q);
        }
        e.pivots.push_back(lead);
        e.rows.push_back(std::move(pivot));
    }

    // Back substitution clears the entries above each pivot.
    for (std::size_t k = e.rows.size(); k-- > 0;) {
        std::size_t col = e.pivots[k];
        for (std::size_t above = 0; above < k; ++above) {
            if (const Rational* x = find_entry(e.rows[above], col)) {
                Rational factor = *x;
                subtract_multiple(e.rows[above], factor, e.rows[k]);
            }
        }
    }
    return e;
}

Echelon row_reduce(const Matrix& m)
{
    std::vector<SparseRow> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows[i] = m.sparse_row(i);
    return row_reduce(std::move(rows), m.cols());
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors)
{
    std::vector<SparseRow> rows;
    rows.reserve(vectors.size());
    for (auto& v : vectors) {
        if (v.size() != ambient_dim)
            throw ShapeMismatch("spanning vector has wrong length");
        rows.push_back(to_sparse(v));
    }
    Echelon e = row_reduce(std::move(rows), ambient_dim);
    Subspace s(ambient_dim);
    s.pivots_ = e.pivots;
    for (auto& r : e.rows)
        s.basis_.push_back(to_dense(r, ambient_dim));
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim)
{
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        Vector v = zero_vector(ambient_dim);
        v[i] = 1;
        s.basis_.push_back(std::move(v));
        s.pivots_.push_back(i);
    }
    return s;
}

std::optional<Vector> Subspace::coordinates(std::span<const Rational> v) const
{
    if (v.size() != ambient_)
        throw ShapeMismatch("vector length differs from ambient dimension");
    Vector residual(v.begin(), v.end());
    Vector coords(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        coords[k] = residual[pivots_[k]];
        axpy(residual, -coords[k], basis_[k]);
    }
    if (!dendra::is_zero(residual))
        return std::nullopt;
    return coords;
}

bool Subspace::contains(std::span<const Rational> v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_ != ambient_)
        return false;
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [&](const Vector& v) { return contains(v); });
}

Matrix Subspace::basis_matrix() const { return Matrix::from_columns(ambient_, basis_); }

Subspace Subspace::sum(const Subspace& other) const
{
    if (other.ambient_ != ambient_)
        throw ShapeMismatch("subspace sum: ambient dimensions differ");
    std::vector<Vector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
}

// ---------------------------------------------------------------------------
// Kernel, rank, solve

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Subspace kernel(const Matrix& m)
{
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector v = zero_vector(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < e.rows.size(); ++k)
            if (const Rational* x = find_entry(e.rows[k], f))
                v[e.pivots[k]] = -*x;
        basis.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), basis);
}

Subspace image(const Matrix& m)
{
    std::vector<SparseRow> cols(m.cols());
    Matrix t = m.transpose();
    for (std::size_t j = 0; j < t.rows(); ++j)
        cols[j] = t.sparse_row(j);
    Echelon e = row_reduce(std::move(cols), m.rows());
    std::vector<Vector> basis;
    for (auto& r : e.rows)
        basis.push_back(to_dense(r, m.rows()));
    return Subspace::span(m.rows(), basis);
}

std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b)
{
    if (b.size() != m.rows())
        throw ShapeMismatch("solve: right-hand side length differs from row count");
    std::vector<SparseRow> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows[i] = m.sparse_row(i);
        if (sgn(b[i]) != 0)
            rows[i].emplace_back(m.cols(), b[i]);
    }
    Echelon e = row_reduce(std::move(rows), m.cols() + 1);
    Vector x = zero_vector(m.cols());
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
        if (e.pivots[k] == m.cols())
            return std::nullopt;
        if (const Rational* rhs = find_entry(e.rows[k], m.cols()))
            x[e.pivots[k]] = *rhs;
    }
    return x;
}

std::size_t quotient_dim(const Subspace& z, const Subspace& b)
{
    if (!z.contains(b))
        throw ContainmentViolation("denominator subspace is not contained in numerator");
    return z.dim() - b.dim();
}

// ---------------------------------------------------------------------------
// Quotient

Quotient::Quotient(Subspace z, Subspace b) : z_(std::move(z)), b_(std::move(b))
{
    if (!z_.contains(b_))
        throw ContainmentViolation("denominator subspace is not contained in numerator");
    std::vector<SparseRow> reduced;
    for (auto& v : z_.basis())
        reduced.push_back(to_sparse(reduce_mod_b(v)));
    Echelon e = row_reduce(std::move(reduced), z_.ambient_dim());
    complement_pivots_ = e.pivots;
    for (auto& r : e.rows)
        complement_.push_back(to_dense(r, z_.ambient_dim()));
}

Vector Quotient::reduce_mod_b(std::span<const Rational> v) const
{
    Vector w(v.begin(), v.end());
    for (std::size_t k = 0; k < b_.dim(); ++k) {
        Rational c = w[b_.pivots()[k]];
        axpy(w, -c, b_.basis()[k]);
    }
    return w;
}

std::optional<Vector> Quotient::class_vector(std::span<const Rational> v) const
{
    if (!z_.contains(v))
        return std::nullopt;
    Vector w = reduce_mod_b(v);
    Vector coords(complement_.size());
    for (std::size_t k = 0; k < complement_.size(); ++k)
        coords[k] = w[complement_pivots_[k]];
    return coords;
}

bool Quotient::is_trivial_class(std::span<const Rational> v) const
{
    auto c = class_vector(v);
    return c && dendra::is_zero(*c);
}

} // namespace dendra
