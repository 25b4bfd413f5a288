#include "dendra/algebra.hpp"

#include "dendra/combinatorics.hpp"
#include "dendra/errors.hpp"

#include <algorithm>
#include <string>

namespace dendra {

namespace {

Vector unit(std::size_t n, std::size_t i)
{
    Vector v = zero_vector(n);
    v[i] = 1;
    return v;
}

Vector sub(const Vector& a, const Vector& b)
{
    Vector out = a;
    axpy(out, -1, b);
    return out;
}

Vector add(const Vector& a, const Vector& b)
{
    Vector out = a;
    axpy(out, 1, b);
    return out;
}

void require_square_cube(const Tensor3& t, std::size_t d, const char* what)
{
    if (t.shape() != std::array<std::size_t, 3>{d, d, d})
        throw ShapeMismatch(std::string(what) + " must be a d x d x d tensor");
}

Vector apply_matrix(const Matrix& m, const Vector& v) { return m * v; }

} // namespace

Tensor3 Tensor3::operator+(const Tensor3& other) const
{
    if (shape_ != other.shape_)
        throw ShapeMismatch("tensor sum: shapes differ");
    Tensor3 out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] += other.data_[i];
    return out;
}

Vector apply_bilinear(const Tensor3& t, std::span<const Rational> x, std::span<const Rational> y)
{
    auto [n0, n1, n2] = t.shape();
    if (x.size() != n0 || y.size() != n1)
        throw ShapeMismatch("bilinear map applied to vectors of the wrong length");
    Vector out = zero_vector(n2);
    for (std::size_t a = 0; a < n0; ++a) {
        if (sgn(x[a]) == 0)
            continue;
        for (std::size_t b = 0; b < n1; ++b) {
            if (sgn(y[b]) == 0)
                continue;
            Rational xy = x[a] * y[b];
            for (std::size_t c = 0; c < n2; ++c)
                if (sgn(t(a, b, c)) != 0)
                    out[c] += xy * t(a, b, c);
        }
    }
    return out;
}

DendriformAlgebra::DendriformAlgebra(std::size_t d, Tensor3 p, Tensor3 s) : dim(d), prec(std::move(p)), succ(std::move(s))
{
    require_square_cube(prec, d, "prec");
    require_square_cube(succ, d, "succ");
}

DendriformAlgebra DendriformAlgebra::zero(std::size_t d) { return {d, Tensor3::cube(d), Tensor3::cube(d)}; }

AssociativeAlgebra::AssociativeAlgebra(std::size_t d, Tensor3 m) : dim(d), mul(std::move(m))
{
    if (d == 0)
        throw ShapeMismatch("associative algebra must have positive dimension");
    require_square_cube(mul, d, "mul");
}

Matrix AssociativeAlgebra::as_matrix() const
{
    Matrix m(dim, dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (sgn(mul(i, j, k)) != 0)
                    m.set(k, i * dim + j, mul(i, j, k));
    return m;
}

DendRepresentation DendRepresentation::adjoint(const DendriformAlgebra& a)
{
    return {a, a.dim, a.prec, a.succ, a.prec, a.succ};
}

DendRepresentation DendRepresentation::trivial(const DendriformAlgebra& a)
{
    return {a, 1, Tensor3(a.dim, 1, 1), Tensor3(a.dim, 1, 1), Tensor3(1, a.dim, 1), Tensor3(1, a.dim, 1)};
}

AssocBimodule AssocBimodule::adjoint(const AssociativeAlgebra& v) { return {v, v.dim, v.mul, v.mul}; }

AssocBimodule AssocBimodule::zero(const AssociativeAlgebra& v, std::size_t m)
{
    return {v, m, Tensor3(v.dim, m, m), Tensor3(m, v.dim, m)};
}

LinearOperator::LinearOperator(Matrix m) : source_dim(m.cols()), target_dim(m.rows()), matrix(std::move(m)) {}

// ---------------------------------------------------------------------------

CheckReport check_dendriform_axioms(const DendriformAlgebra& a)
{
    CheckReport report{"dendriform axioms", true, {}};
    const std::size_t d = a.dim;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vector x = unit(d, i), y = unit(d, j), z = unit(d, k);
                Vector xy_l = a.left(x, y), xy_r = a.right(x, y);
                Vector yz_l = a.left(y, z), yz_r = a.right(y, z);
                Vector r1 = sub(a.left(xy_l, z), a.left(x, add(yz_l, yz_r)));
                Vector r2 = sub(a.left(xy_r, z), a.right(x, yz_l));
                Vector r3 = sub(a.right(add(xy_l, xy_r), z), a.right(x, yz_r));
                if (!is_zero(r1))
                    report.record({"dend-1", {i, j, k}, r1});
                if (!is_zero(r2))
                    report.record({"dend-2", {i, j, k}, r2});
                if (!is_zero(r3))
                    report.record({"dend-3", {i, j, k}, r3});
            }
    return report;
}

CheckReport check_associative(const AssociativeAlgebra& v)
{
    CheckReport report{"associativity", true, {}};
    const std::size_t d = v.dim;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vector x = unit(d, i), y = unit(d, j), z = unit(d, k);
                Vector r = sub(v.product(v.product(x, y), z), v.product(x, v.product(y, z)));
                if (!is_zero(r))
                    report.record({"assoc", {i, j, k}, r});
            }
    return report;
}

namespace {

// sum_c coeff_c * t_c(x, y) for a colored pair of bilinear maps.
template <class Pick>
Vector colored(const ColorSum& s, Pick pick, const Vector& x, const Vector& y)
{
    Vector out;
    for (auto& [c, coeff] : s.terms()) {
        Vector v = apply_bilinear(pick(c), x, y);
        if (out.empty())
            out = zero_vector(v.size());
        axpy(out, coeff, v);
    }
    return out;
}

} // namespace

CheckReport check_representation(const DendRepresentation& rep)
{
    CheckReport report{"representation identities", true, {}};
    const auto& alg = rep.algebra;
    const std::size_t d = alg.dim, m = rep.mdim;
    if (rep.left_prec.shape() != std::array<std::size_t, 3>{d, m, m} ||
        rep.left_succ.shape() != std::array<std::size_t, 3>{d, m, m} ||
        rep.right_prec.shape() != std::array<std::size_t, 3>{m, d, m} ||
        rep.right_succ.shape() != std::array<std::size_t, 3>{m, d, m})
        throw ShapeMismatch("representation tensors have inconsistent shapes");

    auto pi = [&](int c) -> const Tensor3& { return c == 1 ? alg.prec : alg.succ; };
    auto th1 = [&](int c) -> const Tensor3& { return rep.theta1(c); };
    auto th2 = [&](int c) -> const Tensor3& { return rep.theta2(c); };

    for (int s = 1; s <= 3; ++s) {
        // profile (2; 1, 2) on the left-hand sides, (2; 2, 1) on the right
        int outer_l = r0_map(2, 2, 2, s).r;
        ColorSum inner_l = ri_map(2, 2, 2, s);
        int outer_r = r0_map(2, 1, 2, s).r;
        ColorSum inner_r = ri_map(2, 1, 2, s);
        auto single = [](int c) { return ColorSum::single(2, c); };
        const std::string tag = "[s=" + std::to_string(s) + "]";

        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                for (std::size_t x = 0; x < m; ++x) {
                    Vector ea = unit(d, a), eb = unit(d, b), mx = unit(m, x);
                    // rep-1: inputs (a, b, m)
                    Vector l1 = colored(single(outer_l), th1, ea, colored(inner_l, th1, eb, mx));
                    Vector r1 = colored(single(outer_r), th1, colored(inner_r, pi, ea, eb), mx);
                    if (Vector res = sub(l1, r1); !is_zero(res))
                        report.record({"rep-1" + tag, {a, b, x}, res});
                    // rep-2: inputs (a, m, c) with c = b
                    Vector l2 = colored(single(outer_l), th1, ea, colored(inner_l, th2, mx, eb));
                    Vector r2 = colored(single(outer_r), th2, colored(inner_r, th1, ea, mx), eb);
                    if (Vector res = sub(l2, r2); !is_zero(res))
                        report.record({"rep-2" + tag, {a, x, b}, res});
                    // rep-3: inputs (m, a, b) playing (m, b, c)
                    Vector l3 = colored(single(outer_l), th2, mx, colored(inner_l, pi, ea, eb));
                    Vector r3 = colored(single(outer_r), th2, colored(inner_r, th2, mx, ea), eb);
                    if (Vector res = sub(l3, r3); !is_zero(res))
                        report.record({"rep-3" + tag, {x, a, b}, res});
                }
    }
    return report;
}

CheckReport check_bimodule(const AssocBimodule& bm)
{
    CheckReport report{"bimodule conditions", true, {}};
    const auto& v = bm.algebra;
    const std::size_t d = v.dim, m = bm.mdim;
    if (bm.l.shape() != std::array<std::size_t, 3>{d, m, m} || bm.r.shape() != std::array<std::size_t, 3>{m, d, m})
        throw ShapeMismatch("bimodule tensors have inconsistent shapes");
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t x = 0; x < m; ++x) {
                Vector ea = unit(d, a), eb = unit(d, b), mx = unit(m, x);
                Vector r1 = sub(apply_bilinear(bm.l, v.product(ea, eb), mx),
                                apply_bilinear(bm.l, ea, apply_bilinear(bm.l, eb, mx)));
                if (!is_zero(r1))
                    report.record({"l-assoc", {a, b, x}, r1});
                Vector r2 = sub(apply_bilinear(bm.r, apply_bilinear(bm.l, ea, mx), eb),
                                apply_bilinear(bm.l, ea, apply_bilinear(bm.r, mx, eb)));
                if (!is_zero(r2))
                    report.record({"lr-compat", {a, x, b}, r2});
                Vector r3 = sub(apply_bilinear(bm.r, apply_bilinear(bm.r, mx, ea), eb),
                                apply_bilinear(bm.r, mx, v.product(ea, eb)));
                if (!is_zero(r3))
                    report.record({"r-assoc", {x, a, b}, r3});
            }
    return report;
}

AssociativeAlgebra associated_associative(const DendriformAlgebra& a)
{
    if (!check_dendriform_axioms(a).pass)
        throw NotDendriform("dendriform axioms fail");
    return {a.dim, a.prec + a.succ};
}

// ---------------------------------------------------------------------------
// Rota-Baxter operators and pseudotwistors

namespace {

void require_endomorphism(const AssociativeAlgebra& v, const LinearOperator& r)
{
    if (r.source_dim != v.dim || r.target_dim != v.dim)
        throw ShapeMismatch("operator must be a d x d matrix");
}

} // namespace

bool check_rota_baxter(const AssociativeAlgebra& v, const LinearOperator& r)
{
    require_endomorphism(v, r);
    for (std::size_t i = 0; i < v.dim; ++i)
        for (std::size_t j = 0; j < v.dim; ++j) {
            Vector ra = r.matrix.column(i), rb = r.matrix.column(j);
            Vector a = unit(v.dim, i), b = unit(v.dim, j);
            Vector lhs = v.product(ra, rb);
            Vector rhs = apply_matrix(r.matrix, add(v.product(a, rb), v.product(ra, b)));
            if (lhs != rhs)
                return false;
        }
    return true;
}

DendriformAlgebra from_rota_baxter(const AssociativeAlgebra& v, const LinearOperator& r)
{
    if (!check_rota_baxter(v, r))
        throw NotRotaBaxter("operator fails the weight-zero Rota-Baxter identity");
    const std::size_t d = v.dim;
    DendriformAlgebra out = DendriformAlgebra::zero(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector p = v.product(unit(d, i), r.matrix.column(j));
            Vector s = v.product(r.matrix.column(i), unit(d, j));
            for (std::size_t k = 0; k < d; ++k) {
                out.prec(i, j, k) = p[k];
                out.succ(i, j, k) = s[k];
            }
        }
    return out;
}

AssociativeAlgebra rota_baxter_product(const AssociativeAlgebra& v, const LinearOperator& r)
{
    require_endomorphism(v, r);
    const std::size_t d = v.dim;
    Tensor3 mul = Tensor3::cube(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector x = add(v.product(unit(d, i), r.matrix.column(j)), v.product(r.matrix.column(i), unit(d, j)));
            for (std::size_t k = 0; k < d; ++k)
                mul(i, j, k) = x[k];
        }
    return {d, std::move(mul)};
}

LinearOperator pseudotwistor_from_rota_baxter(const LinearOperator& r)
{
    const std::size_t d = r.source_dim;
    Matrix id = Matrix::identity(d);
    return LinearOperator(kron(id, r.matrix) + kron(r.matrix, id));
}

LinearOperator companion_from_rota_baxter(const LinearOperator& r)
{
    const std::size_t d = r.source_dim;
    Matrix id = Matrix::identity(d);
    const Matrix& R = r.matrix;
    return LinearOperator(kron(kron(R, R), id) + kron(kron(R, id), R) + kron(kron(id, R), R));
}

bool check_weak_pseudotwistor(const AssociativeAlgebra& v, const LinearOperator& t, const LinearOperator& tau)
{
    const std::size_t d = v.dim;
    if (t.source_dim != d * d || t.target_dim != d * d || tau.source_dim != d * d * d || tau.target_dim != d * d * d)
        throw ShapeMismatch("pseudotwistor must be d^2 x d^2 and its companion d^3 x d^3");
    Matrix mu = v.as_matrix();
    Matrix id = Matrix::identity(d);
    Matrix mu_t = mu * t.matrix;
    bool left = t.matrix * kron(id, mu_t) == kron(id, mu) * tau.matrix;
    bool right = t.matrix * kron(mu_t, id) == kron(mu, id) * tau.matrix;
    return left && right;
}

AssociativeAlgebra twisted_associative(const AssociativeAlgebra& v, const LinearOperator& t, const LinearOperator& tau)
{
    if (!check_weak_pseudotwistor(v, t, tau))
        throw NotPseudotwistor("the two companion squares do not commute");
    const std::size_t d = v.dim;
    Matrix mu_t = v.as_matrix() * t.matrix;
    Tensor3 mul = Tensor3::cube(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                mul(i, j, k) = mu_t.get(k, i * d + j);
    return {d, std::move(mul)};
}

// ---------------------------------------------------------------------------
// O-operators

namespace {

void require_o_shape(const AssociativeAlgebra& v, const AssocBimodule& m, const LinearOperator& t)
{
    if (t.source_dim != m.mdim || t.target_dim != v.dim)
        throw ShapeMismatch("O-operator must map the bimodule into the algebra");
    if (m.algebra.dim != v.dim)
        throw ShapeMismatch("bimodule is over an algebra of another dimension");
}

} // namespace

bool check_o_operator(const AssociativeAlgebra& v, const AssocBimodule& m, const LinearOperator& t)
{
    require_o_shape(v, m, t);
    for (std::size_t i = 0; i < m.mdim; ++i)
        for (std::size_t j = 0; j < m.mdim; ++j) {
            Vector x = unit(m.mdim, i), y = unit(m.mdim, j);
            Vector tx = t.matrix.column(i), ty = t.matrix.column(j);
            Vector lhs = v.product(tx, ty);
            Vector rhs = t.matrix * add(apply_bilinear(m.r, x, ty), apply_bilinear(m.l, tx, y));
            if (lhs != rhs)
                return false;
        }
    return true;
}

DendriformAlgebra from_o_operator(const AssociativeAlgebra& v, const AssocBimodule& m, const LinearOperator& t)
{
    if (!check_o_operator(v, m, t))
        throw NotOOperator("operator fails the O-operator identity");
    const std::size_t n = m.mdim;
    DendriformAlgebra out = DendriformAlgebra::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector p = apply_bilinear(m.r, unit(n, i), t.matrix.column(j));
            Vector s = apply_bilinear(m.l, t.matrix.column(i), unit(n, j));
            for (std::size_t k = 0; k < n; ++k) {
                out.prec(i, j, k) = p[k];
                out.succ(i, j, k) = s[k];
            }
        }
    return out;
}

AssocBimodule dendriform_bimodule(const DendriformAlgebra& a)
{
    return {associated_associative(a), a.dim, a.succ, a.prec};
}

AssociativeAlgebra semidirect_product(const AssociativeAlgebra& v, const AssocBimodule& m)
{
    if (!check_bimodule(m).pass)
        throw NotBimodule("bimodule conditions fail");
    if (m.algebra.dim != v.dim || m.algebra.mul != v.mul)
        throw ShapeMismatch("bimodule is over a different algebra");
    const std::size_t d = v.dim, n = m.mdim, total = d + n;
    Tensor3 mul = Tensor3::cube(total);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                mul(a, b, c) = v.mul(a, b, c);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                mul(a, d + x, d + y) = m.l(a, x, y);
                mul(d + x, a, d + y) = m.r(x, a, y);
            }
    return {total, std::move(mul)};
}

bool graph_is_subalgebra(const AssociativeAlgebra& v, const AssocBimodule& m, const LinearOperator& t)
{
    require_o_shape(v, m, t);
    AssociativeAlgebra sd = semidirect_product(v, m);
    const std::size_t d = v.dim, n = m.mdim;
    std::vector<Vector> graph;
    for (std::size_t i = 0; i < n; ++i) {
        Vector g = zero_vector(d + n);
        Vector ti = t.matrix.column(i);
        std::copy(ti.begin(), ti.end(), g.begin());
        g[d + i] = 1;
        graph.push_back(std::move(g));
    }
    Subspace gr = Subspace::span(d + n, graph);
    for (auto& x : graph)
        for (auto& y : graph)
            if (!gr.contains(sd.product(x, y)))
                return false;
    return true;
}

// ---------------------------------------------------------------------------
// Truncated tensor module

std::size_t TruncatedTensorAlgebra::index_of(const std::vector<std::size_t>& word) const
{
    auto it = std::lower_bound(words.begin(), words.end(), word, [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    if (it == words.end() || *it != word)
        throw IndexOutOfRange("word outside the truncation");
    return static_cast<std::size_t>(it - words.begin());
}

TruncatedTensorAlgebra truncated_tensor_dendriform(std::size_t vdim, std::size_t max_degree, std::size_t dim_cap)
{
    if (vdim == 0 || max_degree == 0)
        throw ShapeMismatch("tensor module needs vdim >= 1 and max degree >= 1");
    std::size_t total = 0, layer = 1;
    for (std::size_t n = 1; n <= max_degree; ++n) {
        layer *= vdim;
        total += layer;
        if (total > dim_cap)
            throw ResourceLimit("truncated tensor module dimension exceeds cap");
    }

    TruncatedTensorAlgebra t;
    t.vdim = vdim;
    t.max_degree = max_degree;
    for (std::size_t n = 1; n <= max_degree; ++n) {
        std::vector<std::size_t> w(n, 0);
        while (true) {
            t.words.push_back(w);
            std::size_t k = n;
            while (k > 0 && w[k - 1] == vdim - 1)
                w[--k] = 0;
            if (k == 0)
                break;
            ++w[k - 1];
        }
    }
    t.algebra = DendriformAlgebra::zero(total);

    for (std::size_t a = 0; a < total; ++a)
        for (std::size_t b = 0; b < total; ++b) {
            if (!t.defined(a, b))
                continue;
            const auto& u = t.words[a];
            const auto& v = t.words[b];
            std::vector<std::size_t> x = u;
            x.insert(x.end(), v.begin(), v.end());
            ShuffleSplit split = shuffles(static_cast<int>(u.size()), static_cast<int>(v.size()));
            auto accumulate = [&](const std::vector<Shuffle>& part, Tensor3& into) {
                for (const auto& s : part) {
                    // y_{sigma(p)} = x_p, i.e. y_k = x_{sigma^{-1}(k)}
                    std::vector<std::size_t> y(x.size());
                    for (std::size_t p = 0; p < x.size(); ++p)
                        y[s.sigma[p] - 1] = x[p];
                    into(a, b, t.index_of(y)) += 1;
                }
            };
            accumulate(split.sh1, t.algebra.prec);
            accumulate(split.sh2, t.algebra.succ);
        }
    return t;
}

CheckReport check_truncated_axioms(const TruncatedTensorAlgebra& t)
{
    CheckReport report{"dendriform axioms (truncated)", true, {}};
    CheckReport full = check_dendriform_axioms(t.algebra);
    for (auto& v : full.violations)
        if (t.degree(v.inputs[0]) + t.degree(v.inputs[1]) + t.degree(v.inputs[2]) <= t.max_degree)
            report.record(v);
    return report;
}

} // namespace dendra
