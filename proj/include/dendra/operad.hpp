#pragma once

#include "dendra/algebra.hpp"
#include "dendra/combinatorics.hpp"

#include <cstddef>
#include <vector>

namespace dendra {

/// An element of Hom(K[C_n] (x) A^{(x)n}, M).
///
/// Coefficients are flattened in the canonical order (r, i_1, ..., i_n, j),
/// lexicographic with r most significant; colors are 1-based, basis indices
/// 0-based. Every matrix in the library uses this same flattening.
class DendCochain
{
public:
    DendCochain() = default;
    DendCochain(std::size_t arity, std::size_t in_dim, std::size_t out_dim);
    DendCochain(std::size_t arity, std::size_t in_dim, std::size_t out_dim, Vector coeffs);

    /// id([1]; a) = a
    static DendCochain identity(std::size_t d);
    /// pi([1]; a, b) = a < b, pi([2]; a, b) = a > b
    static DendCochain multiplication(const DendriformAlgebra& a);

    static std::size_t space_dim(std::size_t arity, std::size_t in_dim, std::size_t out_dim);

    std::size_t arity() const { return arity_; }
    std::size_t in_dim() const { return in_dim_; }
    std::size_t out_dim() const { return out_dim_; }
    std::size_t size() const { return coeffs_.size(); }
    const Vector& coeffs() const { return coeffs_; }
    Vector& coeffs() { return coeffs_; }

    /// Flat index of the input tuple alone (i_1 most significant).
    std::size_t tuple_index(std::span<const std::size_t> inputs) const;
    std::size_t index(int color, std::size_t tuple, std::size_t out) const
    {
        return ((static_cast<std::size_t>(color) - 1) * tuples_ + tuple) * out_dim_ + out;
    }
    std::size_t tuples() const { return tuples_; }

    Rational& at(int color, std::span<const std::size_t> inputs, std::size_t out);
    const Rational& at(int color, std::span<const std::size_t> inputs, std::size_t out) const;

    /// f(s; e_{i_1}, ..., e_{i_n}) extended linearly over the color sum.
    Vector eval(const ColorSum& s, std::span<const std::size_t> inputs) const;
    /// f([r]; v_1, ..., v_n) for arbitrary vectors.
    Vector eval(int color, const std::vector<Vector>& args) const;

    bool is_zero() const { return dendra::is_zero(coeffs_); }

    DendCochain operator+(const DendCochain& o) const;
    DendCochain operator-(const DendCochain& o) const;
    DendCochain operator*(const Rational& s) const;
    DendCochain& operator+=(const DendCochain& o);

    friend bool operator==(const DendCochain&, const DendCochain&) = default;

private:
    void require_same_shape(const DendCochain& o) const;

    std::size_t arity_ = 0;
    std::size_t in_dim_ = 0;
    std::size_t out_dim_ = 0;
    std::size_t tuples_ = 0;
    Vector coeffs_;
};

/// An element of Hom(V^{(x)n}, W); arity 0 holds a single vector of W.
class HomCochain
{
public:
    HomCochain() = default;
    HomCochain(std::size_t arity, std::size_t in_dim, std::size_t out_dim);
    HomCochain(std::size_t arity, std::size_t in_dim, std::size_t out_dim, Vector coeffs);

    static HomCochain identity(std::size_t d);
    static HomCochain multiplication(const AssociativeAlgebra& v);
    static std::size_t space_dim(std::size_t arity, std::size_t in_dim, std::size_t out_dim);

    std::size_t arity() const { return arity_; }
    std::size_t in_dim() const { return in_dim_; }
    std::size_t out_dim() const { return out_dim_; }
    std::size_t tuples() const { return tuples_; }
    const Vector& coeffs() const { return coeffs_; }
    Vector& coeffs() { return coeffs_; }

    std::size_t index(std::size_t tuple, std::size_t out) const { return tuple * out_dim_ + out; }
    Vector eval(std::span<const std::size_t> inputs) const;
    Vector eval(const std::vector<Vector>& args) const;

    bool is_zero() const { return dendra::is_zero(coeffs_); }
    HomCochain operator+(const HomCochain& o) const;
    HomCochain operator-(const HomCochain& o) const;
    HomCochain operator*(const Rational& s) const;

    friend bool operator==(const HomCochain&, const HomCochain&) = default;

private:
    std::size_t arity_ = 0;
    std::size_t in_dim_ = 0;
    std::size_t out_dim_ = 0;
    std::size_t tuples_ = 1;
    Vector coeffs_;
};

/// Iterates all tuples in [0, d)^n in lexicographic order.
bool next_tuple(std::vector<std::size_t>& t, std::size_t d);

// ---------------------------------------------------------------------------
// Operad structure on colored cochains

/// (f o_i g)([r]; a_1..a_{m+n-1})
///   = f(R_0[r]; a_1..a_{i-1}, g(R_i[r]; a_i..a_{i+n-1}), a_{i+n}..)
DendCochain partial_composition(const DendCochain& f, std::size_t i, const DendCochain& g);
/// f o g = sum_i (-1)^{(i-1)(n-1)} f o_i g
DendCochain circle_product(const DendCochain& f, const DendCochain& g);
/// [f, g] = f o g - (-1)^{(m-1)(n-1)} g o f
DendCochain gerstenhaber_bracket(const DendCochain& f, const DendCochain& g);

HomCochain partial_composition(const HomCochain& f, std::size_t i, const HomCochain& g);
HomCochain circle_product(const HomCochain& f, const HomCochain& g);
HomCochain gerstenhaber_bracket(const HomCochain& f, const HomCochain& g);

// ---------------------------------------------------------------------------
// Differentials

/// delta^n = sum_{i=0}^{n+1} (-1)^i delta_i with the theta_1 term first, the
/// pi insertions in the middle and the theta_2 term last.
DendCochain dend_coboundary(const DendRepresentation& rep, const DendCochain& f);
/// The same map assembled directly as a sparse matrix in the canonical
/// flattening: rows index C^{n+1}, columns index C^n.
Matrix dend_coboundary_matrix(const DendRepresentation& rep, std::size_t n);

/// [pi, f]
DendCochain multiplication_differential(const DendCochain& pi, const DendCochain& f);
Matrix multiplication_differential_matrix(const DendCochain& pi, std::size_t n);

/// Hochschild differential with mu inserted in the middle terms; in arity 0,
/// (delta v)(w) = mu(w, v) - mu(v, w).
HomCochain hochschild_coboundary(const AssociativeAlgebra& v, const HomCochain& f);
Matrix hochschild_coboundary_matrix(const AssociativeAlgebra& v, std::size_t n);

/// S_n(f) = f_[1] + ... + f_[n]
HomCochain comparison_map(const DendCochain& f);
Matrix comparison_matrix(std::size_t n, std::size_t d, std::size_t m);

/// f(r; M_1 x_1, ..., M_n x_n); every M_p maps the new input space into
/// f's input space.
DendCochain precompose(const DendCochain& f, const std::vector<Matrix>& maps);
/// m(f(r; x_1, ..., x_n))
DendCochain postcompose(const Matrix& m, const DendCochain& f);

/// f applied to unit vectors: one column per basis cochain.
template <class Op>
Matrix matrix_of_linear_map(std::size_t source_dim, std::size_t target_dim, Op op)
{
    std::vector<Vector> cols;
    cols.reserve(source_dim);
    for (std::size_t k = 0; k < source_dim; ++k) {
        Vector e = zero_vector(source_dim);
        e[k] = 1;
        cols.push_back(op(e));
    }
    return Matrix::from_columns(target_dim, cols);
}

} // namespace dendra
