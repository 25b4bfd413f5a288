#pragma once

#include "dendra/linalg.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace dendra {

/// Dense rank-3 rational tensor t[a][b][c], flattened row-major.
class Tensor3
{
public:
    Tensor3() = default;
    Tensor3(std::size_t n0, std::size_t n1, std::size_t n2)
        : shape_{n0, n1, n2}, data_(n0 * n1 * n2, Rational(0))
    {
    }
    /// Cube tensor d x d x d.
    static Tensor3 cube(std::size_t d) { return Tensor3(d, d, d); }

    const std::array<std::size_t, 3>& shape() const { return shape_; }
    Rational& operator()(std::size_t a, std::size_t b, std::size_t c) { return data_[index(a, b, c)]; }
    const Rational& operator()(std::size_t a, std::size_t b, std::size_t c) const { return data_[index(a, b, c)]; }
    const std::vector<Rational>& data() const { return data_; }

    Tensor3 operator+(const Tensor3& other) const;
    bool is_zero() const { return dendra::is_zero(data_); }

    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    std::size_t index(std::size_t a, std::size_t b, std::size_t c) const
    {
        return (a * shape_[1] + b) * shape_[2] + c;
    }

    std::array<std::size_t, 3> shape_{0, 0, 0};
    std::vector<Rational> data_;
};

/// Bilinear evaluation: out_c = sum_{a,b} x_a y_b t[a][b][c].
Vector apply_bilinear(const Tensor3& t, std::span<const Rational> x, std::span<const Rational> y);

/// Dimension 0 is allowed: fixed subalgebras can be the zero space.
struct DendriformAlgebra
{
    std::size_t dim = 0;
    Tensor3 prec; // (e_i < e_j) = sum_k prec(i,j,k) e_k
    Tensor3 succ;
    std::vector<std::string> basis_labels;

    DendriformAlgebra() = default;
    DendriformAlgebra(std::size_t d, Tensor3 p, Tensor3 s);
    static DendriformAlgebra zero(std::size_t d);

    Vector left(std::span<const Rational> a, std::span<const Rational> b) const { return apply_bilinear(prec, a, b); }
    Vector right(std::span<const Rational> a, std::span<const Rational> b) const { return apply_bilinear(succ, a, b); }
};

struct AssociativeAlgebra
{
    std::size_t dim = 0;
    Tensor3 mul;

    AssociativeAlgebra() = default;
    AssociativeAlgebra(std::size_t d, Tensor3 m);

    Vector product(std::span<const Rational> a, std::span<const Rational> b) const { return apply_bilinear(mul, a, b); }
    /// mu as a d x d^2 matrix acting on V (x) V.
    Matrix as_matrix() const;
};

/// A representation M of a dendriform algebra A: left actions A (x) M -> M
/// and right actions M (x) A -> M for both products.
struct DendRepresentation
{
    DendriformAlgebra algebra;
    std::size_t mdim = 0;
    Tensor3 left_prec;  // d x m x m
    Tensor3 left_succ;  // d x m x m
    Tensor3 right_prec; // m x d x m
    Tensor3 right_succ; // m x d x m

    static DendRepresentation adjoint(const DendriformAlgebra& a);
    /// M = K with all actions zero.
    static DendRepresentation trivial(const DendriformAlgebra& a);

    /// theta_1 at color [r] (r in {1,2}).
    const Tensor3& theta1(int r) const { return r == 1 ? left_prec : left_succ; }
    const Tensor3& theta2(int r) const { return r == 1 ? right_prec : right_succ; }
};

struct AssocBimodule
{
    AssociativeAlgebra algebra;
    std::size_t mdim = 0;
    Tensor3 l; // d x m x m
    Tensor3 r; // m x d x m

    static AssocBimodule adjoint(const AssociativeAlgebra& v);
    static AssocBimodule zero(const AssociativeAlgebra& v, std::size_t m);
};

struct LinearOperator
{
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    Matrix matrix; // target_dim x source_dim

    LinearOperator() = default;
    explicit LinearOperator(Matrix m);
};

// ---------------------------------------------------------------------------
// Checks

struct Violation
{
    std::string identity;            // e.g. "dend-1", "rep-2[s=3]", "assoc"
    std::vector<std::size_t> inputs; // 0-based basis indices
    Vector residual;
};

struct CheckReport
{
    std::string name;
    bool pass = true;
    std::vector<Violation> violations;

    void record(Violation v)
    {
        pass = false;
        violations.push_back(std::move(v));
    }
};

/// All three dendriform identities on every basis triple; every failure is
/// reported, tagged dend-1 / dend-2 / dend-3.
CheckReport check_dendriform_axioms(const DendriformAlgebra& a);
CheckReport check_associative(const AssociativeAlgebra& v);
CheckReport check_representation(const DendRepresentation& rep);
CheckReport check_bimodule(const AssocBimodule& m);

/// prec + succ. Throws NotDendriform if the axioms fail.
AssociativeAlgebra associated_associative(const DendriformAlgebra& a);

bool check_rota_baxter(const AssociativeAlgebra& v, const LinearOperator& r);
/// a < b = mu(a, Rb), a > b = mu(Ra, b).
DendriformAlgebra from_rota_baxter(const AssociativeAlgebra& v, const LinearOperator& r);
/// mu(a, Rb) + mu(Ra, b).
AssociativeAlgebra rota_baxter_product(const AssociativeAlgebra& v, const LinearOperator& r);

/// T(a (x) b) = a (x) Rb + Ra (x) b
LinearOperator pseudotwistor_from_rota_baxter(const LinearOperator& r);
/// tau(a (x) b (x) c) = Ra (x) Rb (x) c + Ra (x) b (x) Rc + a (x) Rb (x) Rc
LinearOperator companion_from_rota_baxter(const LinearOperator& r);
bool check_weak_pseudotwistor(const AssociativeAlgebra& v, const LinearOperator& t, const LinearOperator& tau);
/// mu o T. Throws NotPseudotwistor unless the two squares commute.
AssociativeAlgebra twisted_associative(const AssociativeAlgebra& v, const LinearOperator& t,
                                       const LinearOperator& tau);

bool check_o_operator(const AssociativeAlgebra& v, const AssocBimodule& m, const LinearOperator& t);
/// m < n = r(m, Tn), m > n = l(Tm, n).
DendriformAlgebra from_o_operator(const AssociativeAlgebra& v, const AssocBimodule& m, const LinearOperator& t);
/// The bimodule of A_ass on A with l(x, a) = x > a and r(a, x) = a < x.
AssocBimodule dendriform_bimodule(const DendriformAlgebra& a);

/// V (+) M with basis ordered V first.
AssociativeAlgebra semidirect_product(const AssociativeAlgebra& v, const AssocBimodule& m);
bool graph_is_subalgebra(const AssociativeAlgebra& v, const AssocBimodule& m, const LinearOperator& t);

/// Finite truncation of the shuffle dendriform algebra on the reduced
/// tensor module: words of length 1..max_degree over vdim letters, ordered by
/// length then lexicographically. Products of total length above
/// max_degree are not part of the structure; they are stored as zero and
/// flagged by `defined`.
struct TruncatedTensorAlgebra
{
    std::size_t vdim = 0;
    std::size_t max_degree = 0;
    std::vector<std::vector<std::size_t>> words;
    DendriformAlgebra algebra;

    std::size_t degree(std::size_t basis_index) const { return words[basis_index].size(); }
    bool defined(std::size_t a, std::size_t b) const { return degree(a) + degree(b) <= max_degree; }
    std::size_t index_of(const std::vector<std::size_t>& word) const;
};

inline constexpr std::size_t kTensorDimLimit = 4096;

TruncatedTensorAlgebra truncated_tensor_dendriform(std::size_t vdim, std::size_t max_degree,
                                                   std::size_t dim_cap = kTensorDimLimit);
/// Axioms on the triples whose total degree is within the truncation.
CheckReport check_truncated_axioms(const TruncatedTensorAlgebra& t);

} // namespace dendra
