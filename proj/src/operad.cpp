#include "dendra/operad.hpp"

#include "dendra/errors.hpp"

#include <string>

namespace dendra {

namespace {

std::size_t ipow(std::size_t base, std::size_t e)
{
    std::size_t r = 1;
    while (e-- > 0)
        r *= base;
    return r;
}

std::size_t flat_tuple(std::span<const std::size_t> t, std::size_t d)
{
    std::size_t k = 0;
    for (auto x : t)
        k = k * d + x;
    return k;
}

int sign(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

} // namespace

bool next_tuple(std::vector<std::size_t>& t, std::size_t d)
{
    for (std::size_t k = t.size(); k-- > 0;) {
        if (++t[k] < d)
            return true;
        t[k] = 0;
    }
    return false;
}

// ---------------------------------------------------------------------------
// DendCochain

std::size_t DendCochain::space_dim(std::size_t arity, std::size_t in_dim, std::size_t out_dim)
{
    return arity * ipow(in_dim, arity) * out_dim;
}

DendCochain::DendCochain(std::size_t arity, std::size_t in_dim, std::size_t out_dim)
    : DendCochain(arity, in_dim, out_dim, zero_vector(space_dim(arity, in_dim, out_dim)))
{
}

DendCochain::DendCochain(std::size_t arity, std::size_t in_dim, std::size_t out_dim, Vector coeffs)
    : arity_(arity), in_dim_(in_dim), out_dim_(out_dim), tuples_(ipow(in_dim, arity)), coeffs_(std::move(coeffs))
{
    if (arity == 0)
        throw ShapeMismatch("dendriform cochains have arity at least 1");
    if (coeffs_.size() != space_dim(arity, in_dim, out_dim))
        throw ShapeMismatch("cochain coefficient count does not match its shape");
}

DendCochain DendCochain::identity(std::size_t d)
{
    DendCochain id(1, d, d);
    for (std::size_t i = 0; i < d; ++i)
        id.coeffs_[id.index(1, i, i)] = 1;
    return id;
}

DendCochain DendCochain::multiplication(const DendriformAlgebra& a)
{
    const std::size_t d = a.dim;
    DendCochain pi(2, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                pi.coeffs_[pi.index(1, i * d + j, k)] = a.prec(i, j, k);
                pi.coeffs_[pi.index(2, i * d + j, k)] = a.succ(i, j, k);
            }
    return pi;
}

std::size_t DendCochain::tuple_index(std::span<const std::size_t> inputs) const
{
    if (inputs.size() != arity_)
        throw ShapeMismatch("input tuple length differs from arity");
    for (auto x : inputs)
        if (x >= in_dim_)
            throw IndexOutOfRange("basis index out of range");
    return flat_tuple(inputs, in_dim_);
}

Rational& DendCochain::at(int color, std::span<const std::size_t> inputs, std::size_t out)
{
    if (color < 1 || static_cast<std::size_t>(color) > arity_ || out >= out_dim_)
        throw IndexOutOfRange("cochain index out of range");
    return coeffs_[index(color, tuple_index(inputs), out)];
}

const Rational& DendCochain::at(int color, std::span<const std::size_t> inputs, std::size_t out) const
{
    return const_cast<DendCochain*>(this)->at(color, inputs, out);
}

Vector DendCochain::eval(const ColorSum& s, std::span<const std::size_t> inputs) const
{
    if (static_cast<std::size_t>(s.arity()) != arity_)
        throw ShapeMismatch("color sum lives over another arity");
    std::size_t t = tuple_index(inputs);
    Vector out = zero_vector(out_dim_);
    for (auto& [c, coeff] : s.terms())
        for (std::size_t j = 0; j < out_dim_; ++j) {
            const Rational& x = coeffs_[index(c, t, j)];
            if (sgn(x) != 0)
                out[j] += coeff * x;
        }
    return out;
}

Vector DendCochain::eval(int color, const std::vector<Vector>& args) const
{
    if (args.size() != arity_)
        throw ShapeMismatch("argument count differs from arity");
    for (auto& a : args)
        if (a.size() != in_dim_)
            throw ShapeMismatch("argument vector has the wrong length");
    Vector out = zero_vector(out_dim_);
    if (in_dim_ == 0)
        return out;
    std::vector<std::size_t> t(arity_, 0);
    std::size_t flat = 0;
    do {
        Rational w = 1;
        for (std::size_t p = 0; p < arity_ && sgn(w) != 0; ++p)
            w *= args[p][t[p]];
        if (sgn(w) != 0)
            for (std::size_t j = 0; j < out_dim_; ++j) {
                const Rational& x = coeffs_[index(color, flat, j)];
                if (sgn(x) != 0)
                    out[j] += w * x;
            }
        ++flat;
    } while (next_tuple(t, in_dim_));
    return out;
}

void DendCochain::require_same_shape(const DendCochain& o) const
{
    if (arity_ != o.arity_ || in_dim_ != o.in_dim_ || out_dim_ != o.out_dim_)
        throw ShapeMismatch("cochains of different shapes");
}

DendCochain DendCochain::operator+(const DendCochain& o) const
{
    DendCochain out = *this;
    out += o;
    return out;
}

DendCochain& DendCochain::operator+=(const DendCochain& o)
{
    require_same_shape(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    return *this;
}

DendCochain DendCochain::operator-(const DendCochain& o) const { return *this + o * Rational(-1); }

DendCochain DendCochain::operator*(const Rational& s) const
{
    DendCochain out = *this;
    for (auto& x : out.coeffs_)
        x *= s;
    return out;
}

// ---------------------------------------------------------------------------
// HomCochain

std::size_t HomCochain::space_dim(std::size_t arity, std::size_t in_dim, std::size_t out_dim)
{
    return ipow(in_dim, arity) * out_dim;
}

HomCochain::HomCochain(std::size_t arity, std::size_t in_dim, std::size_t out_dim)
    : HomCochain(arity, in_dim, out_dim, zero_vector(space_dim(arity, in_dim, out_dim)))
{
}

HomCochain::HomCochain(std::size_t arity, std::size_t in_dim, std::size_t out_dim, Vector coeffs)
    : arity_(arity), in_dim_(in_dim), out_dim_(out_dim), tuples_(ipow(in_dim, arity)), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != space_dim(arity, in_dim, out_dim))
        throw ShapeMismatch("cochain coefficient count does not match its shape");
}

HomCochain HomCochain::identity(std::size_t d)
{
    HomCochain id(1, d, d);
    for (std::size_t i = 0; i < d; ++i)
        id.coeffs_[id.index(i, i)] = 1;
    return id;
}

HomCochain HomCochain::multiplication(const AssociativeAlgebra& v)
{
    const std::size_t d = v.dim;
    HomCochain mu(2, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                mu.coeffs_[mu.index(i * d + j, k)] = v.mul(i, j, k);
    return mu;
}

Vector HomCochain::eval(std::span<const std::size_t> inputs) const
{
    if (inputs.size() != arity_)
        throw ShapeMismatch("input tuple length differs from arity");
    std::size_t t = flat_tuple(inputs, in_dim_);
    return Vector(coeffs_.begin() + t * out_dim_, coeffs_.begin() + (t + 1) * out_dim_);
}

Vector HomCochain::eval(const std::vector<Vector>& args) const
{
    if (args.size() != arity_)
        throw ShapeMismatch("argument count differs from arity");
    Vector out = zero_vector(out_dim_);
    if (in_dim_ == 0 && arity_ > 0)
        return out;
    std::vector<std::size_t> t(arity_, 0);
    std::size_t flat = 0;
    do {
        Rational w = 1;
        for (std::size_t p = 0; p < arity_ && sgn(w) != 0; ++p)
            w *= args[p][t[p]];
        if (sgn(w) != 0)
            for (std::size_t j = 0; j < out_dim_; ++j)
                if (sgn(coeffs_[index(flat, j)]) != 0)
                    out[j] += w * coeffs_[index(flat, j)];
        ++flat;
    } while (next_tuple(t, in_dim_));
    return out;
}

HomCochain HomCochain::operator+(const HomCochain& o) const
{
    if (arity_ != o.arity_ || in_dim_ != o.in_dim_ || out_dim_ != o.out_dim_)
        throw ShapeMismatch("cochains of different shapes");
    HomCochain out = *this;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        out.coeffs_[k] += o.coeffs_[k];
    return out;
}

HomCochain HomCochain::operator-(const HomCochain& o) const { return *this + o * Rational(-1); }

HomCochain HomCochain::operator*(const Rational& s) const
{
    HomCochain out = *this;
    for (auto& x : out.coeffs_)
        x *= s;
    return out;
}

// ---------------------------------------------------------------------------
// Partial compositions

DendCochain partial_composition(const DendCochain& f, std::size_t i, const DendCochain& g)
{
    const std::size_t m = f.arity(), n = g.arity(), d = f.in_dim();
    if (i < 1 || i > m)
        throw SlotOutOfRange("slot " + std::to_string(i) + " outside 1.." + std::to_string(m));
    if (g.in_dim() != d || g.out_dim() != d)
        throw ShapeMismatch("inner cochain must map A^{(x)n} into A");
    const std::size_t arity = m + n - 1;
    DendCochain out(arity, d, f.out_dim());
    if (d == 0)
        return out;

    std::vector<std::size_t> a(arity), inner(n), outer(m);
    for (int r = 1; r <= static_cast<int>(arity); ++r) {
        int c0 = r0_map(static_cast<int>(m), static_cast<int>(i), static_cast<int>(n), r).r;
        ColorSum cs = ri_map(static_cast<int>(m), static_cast<int>(i), static_cast<int>(n), r);
        std::fill(a.begin(), a.end(), 0);
        std::size_t flat = 0;
        do {
            for (std::size_t p = 0; p < n; ++p)
                inner[p] = a[i - 1 + p];
            Vector gv = g.eval(cs, inner);
            for (std::size_t p = 0; p + 1 < i; ++p)
                outer[p] = a[p];
            for (std::size_t p = i; p < m; ++p)
                outer[p] = a[p + n - 1];
            for (std::size_t k = 0; k < d; ++k) {
                if (sgn(gv[k]) == 0)
                    continue;
                outer[i - 1] = k;
                std::size_t ft = flat_tuple(outer, d);
                for (std::size_t j = 0; j < f.out_dim(); ++j) {
                    const Rational& x = f.coeffs()[f.index(c0, ft, j)];
                    if (sgn(x) != 0)
                        out.coeffs()[out.index(r, flat, j)] += gv[k] * x;
                }
            }
            ++flat;
        } while (next_tuple(a, d));
    }
    return out;
}

DendCochain circle_product(const DendCochain& f, const DendCochain& g)
{
    const std::size_t m = f.arity(), n = g.arity();
    DendCochain out(m + n - 1, f.in_dim(), f.out_dim());
    for (std::size_t i = 1; i <= m; ++i)
        out += partial_composition(f, i, g) * Rational(sign((i - 1) * (n - 1)));
    return out;
}

DendCochain gerstenhaber_bracket(const DendCochain& f, const DendCochain& g)
{
    const std::size_t m = f.arity(), n = g.arity();
    return circle_product(f, g) - circle_product(g, f) * Rational(sign((m - 1) * (n - 1)));
}

HomCochain partial_composition(const HomCochain& f, std::size_t i, const HomCochain& g)
{
    const std::size_t m = f.arity(), n = g.arity(), d = f.in_dim();
    if (i < 1 || i > m)
        throw SlotOutOfRange("slot " + std::to_string(i) + " outside 1.." + std::to_string(m));
    if (n == 0)
        throw ShapeMismatch("partial composition needs an inner cochain of positive arity");
    if (g.in_dim() != d || g.out_dim() != d)
        throw ShapeMismatch("inner cochain must map V^{(x)n} into V");
    const std::size_t arity = m + n - 1;
    HomCochain out(arity, d, f.out_dim());
    if (d == 0)
        return out;
    std::vector<std::size_t> a(arity), inner(n), outer(m);
    std::size_t flat = 0;
    do {
        for (std::size_t p = 0; p < n; ++p)
            inner[p] = a[i - 1 + p];
        Vector gv = g.eval(inner);
        for (std::size_t p = 0; p + 1 < i; ++p)
            outer[p] = a[p];
        for (std::size_t p = i; p < m; ++p)
            outer[p] = a[p + n - 1];
        for (std::size_t k = 0; k < d; ++k) {
            if (sgn(gv[k]) == 0)
                continue;
            outer[i - 1] = k;
            std::size_t ft = flat_tuple(outer, d);
            for (std::size_t j = 0; j < f.out_dim(); ++j) {
                const Rational& x = f.coeffs()[f.index(ft, j)];
                if (sgn(x) != 0)
                    out.coeffs()[out.index(flat, j)] += gv[k] * x;
            }
        }
        ++flat;
    } while (next_tuple(a, d));
    return out;
}

HomCochain circle_product(const HomCochain& f, const HomCochain& g)
{
    const std::size_t m = f.arity(), n = g.arity();
    HomCochain out(m + n - 1, f.in_dim(), f.out_dim());
    for (std::size_t i = 1; i <= m; ++i)
        out = out + partial_composition(f, i, g) * Rational(sign((i - 1) * (n - 1)));
    return out;
}

HomCochain gerstenhaber_bracket(const HomCochain& f, const HomCochain& g)
{
    const std::size_t m = f.arity(), n = g.arity();
    return circle_product(f, g) - circle_product(g, f) * Rational(sign((m - 1) * (n - 1)));
}

// ---------------------------------------------------------------------------
// Dendriform coboundary

namespace {

void require_over(const DendRepresentation& rep, const DendCochain& f)
{
    if (f.in_dim() != rep.algebra.dim || f.out_dim() != rep.mdim)
        throw ShapeMismatch("cochain does not live over the representation");
}

} // namespace

DendCochain dend_coboundary(const DendRepresentation& rep, const DendCochain& f)
{
    require_over(rep, f);
    const auto& alg = rep.algebra;
    const std::size_t n = f.arity(), d = alg.dim, m = rep.mdim;
    const int ni = static_cast<int>(n);
    DendCochain out(n + 1, d, m);
    if (d == 0)
        return out;

    std::vector<std::size_t> a(n + 1), head(n), tail(n), b(n);
    for (int r = 1; r <= ni + 1; ++r) {
        int c_first = r0_map(2, 2, ni, r).r;
        ColorSum s_first = ri_map(2, 2, ni, r);
        int c_last = r0_map(2, 1, ni, r).r;
        ColorSum s_last = ri_map(2, 1, ni, r);
        std::fill(a.begin(), a.end(), 0);
        std::size_t flat = 0;
        do {
            Vector acc = zero_vector(m);
            // delta_0: theta_1(R_0(2;1,n)[r]; a_1, f(R_2(2;1,n)[r]; a_2..a_{n+1}))
            std::copy(a.begin() + 1, a.end(), tail.begin());
            Vector v = f.eval(s_first, tail);
            const Tensor3& t1 = rep.theta1(c_first);
            for (std::size_t k = 0; k < m; ++k)
                if (sgn(v[k]) != 0)
                    for (std::size_t j = 0; j < m; ++j)
                        if (sgn(t1(a[0], k, j)) != 0)
                            acc[j] += v[k] * t1(a[0], k, j);
            // delta_i: f(R_0(n;..2..)[r]; .., pi(R_i(n;..2..)[r]; a_i, a_{i+1}), ..)
            for (std::size_t i = 1; i <= n; ++i) {
                int c0 = r0_map(ni, static_cast<int>(i), 2, r).r;
                ColorSum cs = ri_map(ni, static_cast<int>(i), 2, r);
                Vector p = zero_vector(d);
                for (auto& [c, coeff] : cs.terms()) {
                    const Tensor3& pt = c == 1 ? alg.prec : alg.succ;
                    for (std::size_t k = 0; k < d; ++k)
                        if (sgn(pt(a[i - 1], a[i], k)) != 0)
                            p[k] += coeff * pt(a[i - 1], a[i], k);
                }
                for (std::size_t q = 0; q + 1 < i; ++q)
                    b[q] = a[q];
                for (std::size_t q = i; q < n; ++q)
                    b[q] = a[q + 1];
                for (std::size_t k = 0; k < d; ++k) {
                    if (sgn(p[k]) == 0)
                        continue;
                    b[i - 1] = k;
                    std::size_t ft = flat_tuple(b, d);
                    Rational w = p[k] * sign(i);
                    for (std::size_t j = 0; j < m; ++j) {
                        const Rational& x = f.coeffs()[f.index(c0, ft, j)];
                        if (sgn(x) != 0)
                            acc[j] += w * x;
                    }
                }
            }
            // delta_{n+1}: theta_2(R_0(2;n,1)[r]; f(R_1(2;n,1)[r]; a_1..a_n), a_{n+1})
            std::copy(a.begin(), a.end() - 1, head.begin());
            Vector u = f.eval(s_last, head);
            const Tensor3& t2 = rep.theta2(c_last);
            Rational sg = sign(n + 1);
            for (std::size_t k = 0; k < m; ++k)
                if (sgn(u[k]) != 0)
                    for (std::size_t j = 0; j < m; ++j)
                        if (sgn(t2(k, a[n], j)) != 0)
                            acc[j] += sg * u[k] * t2(k, a[n], j);

            for (std::size_t j = 0; j < m; ++j)
                out.coeffs()[out.index(r, flat, j)] = acc[j];
            ++flat;
        } while (next_tuple(a, d));
    }
    return out;
}

Matrix dend_coboundary_matrix(const DendRepresentation& rep, std::size_t n)
{
    const auto& alg = rep.algebra;
    const std::size_t d = alg.dim, m = rep.mdim;
    const int ni = static_cast<int>(n);
    DendCochain src(n, d, m), dst(n + 1, d, m);
    Matrix mat(dst.size(), src.size());
    if (d == 0)
        return mat;

    std::vector<std::size_t> a(n + 1), b(n);
    for (int r = 1; r <= ni + 1; ++r) {
        int c_first = r0_map(2, 2, ni, r).r;
        ColorSum s_first = ri_map(2, 2, ni, r);
        int c_last = r0_map(2, 1, ni, r).r;
        ColorSum s_last = ri_map(2, 1, ni, r);
        const Tensor3& t1 = rep.theta1(c_first);
        const Tensor3& t2 = rep.theta2(c_last);
        std::fill(a.begin(), a.end(), 0);
        std::size_t flat = 0;
        do {
            std::size_t tail = flat_tuple(std::span(a).subspan(1), d);
            std::size_t head = flat_tuple(std::span(a).first(n), d);
            for (std::size_t j = 0; j < m; ++j) {
                std::size_t row = dst.index(r, flat, j);
                for (auto& [c, coeff] : s_first.terms())
                    for (std::size_t k = 0; k < m; ++k)
                        if (sgn(t1(a[0], k, j)) != 0)
                            mat.add(row, src.index(c, tail, k), coeff * t1(a[0], k, j));
                for (auto& [c, coeff] : s_last.terms())
                    for (std::size_t k = 0; k < m; ++k)
                        if (sgn(t2(k, a[n], j)) != 0)
                            mat.add(row, src.index(c, head, k), sign(n + 1) * coeff * t2(k, a[n], j));
            }
            for (std::size_t i = 1; i <= n; ++i) {
                int c0 = r0_map(ni, static_cast<int>(i), 2, r).r;
                ColorSum cs = ri_map(ni, static_cast<int>(i), 2, r);
                for (std::size_t q = 0; q + 1 < i; ++q)
                    b[q] = a[q];
                for (std::size_t q = i; q < n; ++q)
                    b[q] = a[q + 1];
                for (auto& [c, coeff] : cs.terms()) {
                    const Tensor3& pt = c == 1 ? alg.prec : alg.succ;
                    for (std::size_t k = 0; k < d; ++k) {
                        if (sgn(pt(a[i - 1], a[i], k)) == 0)
                            continue;
                        b[i - 1] = k;
                        std::size_t ft = flat_tuple(b, d);
                        Rational w = sign(i) * coeff * pt(a[i - 1], a[i], k);
                        for (std::size_t j = 0; j < m; ++j)
                            mat.add(dst.index(r, flat, j), src.index(c0, ft, j), w);
                    }
                }
            }
            ++flat;
        } while (next_tuple(a, d));
    }
    return mat;
}

DendCochain multiplication_differential(const DendCochain& pi, const DendCochain& f)
{
    if (pi.arity() != 2)
        throw ShapeMismatch("multiplication must have arity 2");
    if (f.out_dim() != f.in_dim())
        throw ShapeMismatch("bracket differential needs coefficients in the algebra itself");
    return gerstenhaber_bracket(pi, f);
}

Matrix multiplication_differential_matrix(const DendCochain& pi, std::size_t n)
{
    const std::size_t d = pi.in_dim();
    return matrix_of_linear_map(DendCochain::space_dim(n, d, d), DendCochain::space_dim(n + 1, d, d),
                                [&](const Vector& e) {
                                    return multiplication_differential(pi, DendCochain(n, d, d, e)).coeffs();
                                });
}

// ---------------------------------------------------------------------------
// Hochschild

HomCochain hochschild_coboundary(const AssociativeAlgebra& v, const HomCochain& f)
{
    const std::size_t d = v.dim, n = f.arity();
    if (f.in_dim() != d || f.out_dim() != d)
        throw ShapeMismatch("Hochschild cochain must be V-valued on V");
    if (n == 0) {
        HomCochain out(1, d, d);
        for (std::size_t w = 0; w < d; ++w) {
            Vector ew = zero_vector(d);
            ew[w] = 1;
            Vector x = v.product(ew, f.coeffs());
            axpy(x, -1, v.product(f.coeffs(), ew));
            for (std::size_t j = 0; j < d; ++j)
                out.coeffs()[out.index(w, j)] = x[j];
        }
        return out;
    }
    HomCochain out(n + 1, d, d);
    if (d == 0)
        return out;
    std::vector<std::size_t> a(n + 1), b(n);
    std::size_t flat = 0;
    do {
        Vector acc = zero_vector(d);
        Vector ea0 = zero_vector(d);
        ea0[a[0]] = 1;
        Vector ean = zero_vector(d);
        ean[a[n]] = 1;
        axpy(acc, 1, v.product(ea0, f.eval(std::span(a).subspan(1))));
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t q = 0; q + 1 < i; ++q)
                b[q] = a[q];
            for (std::size_t q = i; q < n; ++q)
                b[q] = a[q + 1];
            for (std::size_t k = 0; k < d; ++k) {
                const Rational& x = v.mul(a[i - 1], a[i], k);
                if (sgn(x) == 0)
                    continue;
                b[i - 1] = k;
                axpy(acc, sign(i) * x, f.eval(b));
            }
        }
        axpy(acc, sign(n + 1), v.product(f.eval(std::span(a).first(n)), ean));
        for (std::size_t j = 0; j < d; ++j)
            out.coeffs()[out.index(flat, j)] = acc[j];
        ++flat;
    } while (next_tuple(a, d));
    return out;
}

Matrix hochschild_coboundary_matrix(const AssociativeAlgebra& v, std::size_t n)
{
    const std::size_t d = v.dim;
    return matrix_of_linear_map(HomCochain::space_dim(n, d, d), HomCochain::space_dim(n + 1, d, d),
                                [&](const Vector& e) { return hochschild_coboundary(v, HomCochain(n, d, d, e)).coeffs(); });
}

// ---------------------------------------------------------------------------
// Comparison with the Hochschild operad

HomCochain comparison_map(const DendCochain& f)
{
    HomCochain out(f.arity(), f.in_dim(), f.out_dim());
    for (int r = 1; r <= static_cast<int>(f.arity()); ++r)
        for (std::size_t t = 0; t < f.tuples(); ++t)
            for (std::size_t j = 0; j < f.out_dim(); ++j)
                out.coeffs()[out.index(t, j)] += f.coeffs()[f.index(r, t, j)];
    return out;
}

Matrix comparison_matrix(std::size_t n, std::size_t d, std::size_t m)
{
    DendCochain shape(n, d, m);
    HomCochain target(n, d, m);
    Matrix mat(target.coeffs().size(), shape.size());
    for (int r = 1; r <= static_cast<int>(n); ++r)
        for (std::size_t t = 0; t < shape.tuples(); ++t)
            for (std::size_t j = 0; j < m; ++j)
                mat.set(target.index(t, j), shape.index(r, t, j), 1);
    return mat;
}

// ---------------------------------------------------------------------------

DendCochain precompose(const DendCochain& f, const std::vector<Matrix>& maps)
{
    if (maps.size() != f.arity())
        throw ShapeMismatch("one map per input is required");
    const std::size_t k = maps.front().cols();
    for (auto& m : maps)
        if (m.rows() != f.in_dim() || m.cols() != k)
            throw ShapeMismatch("precomposed maps have inconsistent shapes");
    DendCochain out(f.arity(), k, f.out_dim());
    if (k == 0)
        return out;
    std::vector<std::vector<Vector>> cols(maps.size());
    for (std::size_t p = 0; p < maps.size(); ++p)
        for (std::size_t j = 0; j < k; ++j)
            cols[p].push_back(maps[p].column(j));
    std::vector<std::size_t> t(f.arity(), 0);
    std::vector<Vector> args(f.arity());
    std::size_t flat = 0;
    do {
        for (std::size_t p = 0; p < t.size(); ++p)
            args[p] = cols[p][t[p]];
        for (int r = 1; r <= static_cast<int>(f.arity()); ++r) {
            Vector v = f.eval(r, args);
            for (std::size_t j = 0; j < f.out_dim(); ++j)
                out.coeffs()[out.index(r, flat, j)] = v[j];
        }
        ++flat;
    } while (next_tuple(t, k));
    return out;
}

DendCochain postcompose(const Matrix& m, const DendCochain& f)
{
    if (m.cols() != f.out_dim())
        throw ShapeMismatch("postcomposed map does not accept the cochain's outputs");
    DendCochain out(f.arity(), f.in_dim(), m.rows());
    const std::size_t blocks = f.arity() * f.tuples();
    for (std::size_t b = 0; b < blocks; ++b) {
        std::span<const Rational> v(f.coeffs().data() + b * f.out_dim(), f.out_dim());
        if (is_zero(v))
            continue;
        Vector w = m * v;
        std::copy(w.begin(), w.end(), out.coeffs().begin() + static_cast<std::ptrdiff_t>(b * m.rows()));
    }
    return out;
}

} // namespace dendra
