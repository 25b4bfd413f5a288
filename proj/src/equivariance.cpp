#include "dendra/equivariance.hpp"

#include "dendra/errors.hpp"
#include "dendra/operad.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace dendra {

namespace {

Vector unit(std::size_t n, std::size_t i)
{
    Vector v = zero_vector(n);
    v[i] = 1;
    return v;
}

Vector flatten(const Matrix& m)
{
    Vector out;
    out.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.push_back(m.get(i, j));
    return out;
}

std::string elem(std::size_t g) { return std::to_string(g); }

} // namespace

// ---------------------------------------------------------------------------
// Groups

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table) : table_(std::move(table))
{
    const std::size_t n = table_.size();
    if (n == 0)
        throw InvalidGroup("empty Cayley table");
    for (auto& row : table_) {
        if (row.size() != n)
            throw InvalidGroup("Cayley table is not square");
        std::vector<bool> seen(n, false);
        for (auto x : row) {
            if (x >= n)
                throw InvalidGroup("table entry " + elem(x) + " is not an element");
            if (seen[x])
                throw InvalidGroup("a row of the table repeats an element");
            seen[x] = true;
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        if (table_[0][a] != a || table_[a][0] != a)
            throw InvalidGroup("element 0 is not the identity");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw InvalidGroup("table is not associative at (" + elem(a) + ", " + elem(b) + ", " + elem(c) + ")");
    inverse_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        auto it = std::find(table_[a].begin(), table_[a].end(), std::size_t{0});
        inverse_[a] = static_cast<std::size_t>(it - table_[a].begin());
        if (table_[inverse_[a]][a] != 0)
            throw InvalidGroup("element " + elem(a) + " has no two-sided inverse");
    }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n)
{
    if (n == 0)
        throw InvalidGroup("cyclic group of order 0");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t));
}

std::vector<std::size_t> FiniteGroup::symmetric3_permutation(std::size_t g)
{
    static const std::vector<std::vector<std::size_t>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                                 {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    return perms.at(g);
}

FiniteGroup FiniteGroup::symmetric3()
{
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            auto pa = symmetric3_permutation(a), pb = symmetric3_permutation(b);
            std::vector<std::size_t> ab{pa[pb[0]], pa[pb[1]], pa[pb[2]]};
            for (std::size_t c = 0; c < 6; ++c)
                if (symmetric3_permutation(c) == ab)
                    t[a][b] = c;
        }
    return FiniteGroup(std::move(t));
}

GroupRepresentation GroupRepresentation::trivial(const FiniteGroup& g, std::size_t d)
{
    return {g, d, std::vector<Matrix>(g.order(), Matrix::identity(d)), {}};
}

std::vector<std::size_t> GroupRepresentation::constraint_elements() const
{
    if (!generators.empty())
        return generators;
    std::vector<std::size_t> all(group.order());
    for (std::size_t g = 0; g < all.size(); ++g)
        all[g] = g;
    return all;
}

CheckReport check_group_representation(const GroupRepresentation& rep)
{
    CheckReport report{"representation laws", true, {}};
    const auto& grp = rep.group;
    if (rep.matrices.size() != grp.order()) {
        report.record({"matrix-count", {rep.matrices.size()}, {}});
        return report;
    }
    for (std::size_t g = 0; g < grp.order(); ++g)
        if (rep.matrices[g].rows() != rep.dim || rep.matrices[g].cols() != rep.dim) {
            report.record({"shape[" + elem(g) + "]", {g}, {}});
            return report;
        }
    Matrix id = Matrix::identity(rep.dim);
    if (!(rep.matrices[0] == id))
        report.record({"unit", {0}, flatten(rep.matrices[0] - id)});
    for (std::size_t g = 0; g < grp.order(); ++g)
        for (std::size_t h = 0; h < grp.order(); ++h) {
            Matrix diff = rep.matrices[g] * rep.matrices[h] - rep.matrices[grp.mul(g, h)];
            if (!diff.is_zero())
                report.record({"hom[" + elem(g) + "," + elem(h) + "]", {g, h}, flatten(diff)});
        }
    for (auto g : rep.generators)
        if (g >= grp.order())
            report.record({"generator", {g}, {}});
    if (!rep.generators.empty()) {
        std::set<std::size_t> closure{0};
        bool grew = true;
        while (grew) {
            grew = false;
            for (auto a : std::vector<std::size_t>(closure.begin(), closure.end()))
                for (auto g : rep.generators)
                    if (g < grp.order() && closure.insert(grp.mul(a, g)).second)
                        grew = true;
        }
        if (closure.size() != grp.order())
            report.record({"generators-span", rep.generators, {}});
    }
    return report;
}

CheckReport check_action(const DendGroupAction& act)
{
    CheckReport report = check_group_representation(act.rep);
    report.name = "group action";
    if (act.rep.dim != act.algebra.dim) {
        report.record({"dimension", {act.rep.dim, act.algebra.dim}, {}});
        return report;
    }
    if (!report.pass && report.violations.front().identity.starts_with("shape"))
        return report;
    if (act.rep.matrices.size() != act.group().order())
        return report;
    const auto& a = act.algebra;
    const std::size_t d = a.dim;
    for (std::size_t g = 0; g < act.group().order(); ++g) {
        const Matrix& m = act.matrix(g);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Vector gi = m.column(i), gj = m.column(j);
                Vector p = m * a.left(unit(d, i), unit(d, j));
                axpy(p, -1, a.left(gi, gj));
                if (!is_zero(p))
                    report.record({"auto-prec[g=" + elem(g) + "]", {g, i, j}, p});
                Vector s = m * a.right(unit(d, i), unit(d, j));
                axpy(s, -1, a.right(gi, gj));
                if (!is_zero(s))
                    report.record({"auto-succ[g=" + elem(g) + "]", {g, i, j}, s});
            }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Subgroups and fixed points

bool is_subgroup(const FiniteGroup& g, const Subgroup& h)
{
    if (h.empty() || h.front() != 0)
        return false;
    std::set<std::size_t> s(h.begin(), h.end());
    for (auto a : h) {
        if (a >= g.order())
            return false;
        for (auto b : h)
            if (!s.contains(g.mul(a, b)))
                return false;
    }
    return true;
}

std::vector<Subgroup> subgroups(const FiniteGroup& g, std::size_t order_cap)
{
    if (g.order() > order_cap)
        throw ResourceLimit("subgroup enumeration is capped at order " + std::to_string(order_cap) +
                            "; list the subgroups explicitly");
    auto closure = [&](std::set<std::size_t> s) {
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::size_t> cur(s.begin(), s.end());
            for (auto a : cur)
                for (auto b : cur)
                    if (s.insert(g.mul(a, b)).second)
                        grew = true;
        }
        return s;
    };
    std::set<std::set<std::size_t>> found{{0}};
    std::vector<std::set<std::size_t>> frontier{{0}};
    while (!frontier.empty()) {
        std::vector<std::set<std::size_t>> next;
        for (auto& h : frontier)
            for (std::size_t x = 0; x < g.order(); ++x) {
                if (h.contains(x))
                    continue;
                auto s = h;
                s.insert(x);
                s = closure(std::move(s));
                if (found.insert(s).second)
                    next.push_back(s);
            }
        frontier = std::move(next);
    }
    std::vector<Subgroup> out;
    for (auto& s : found)
        out.emplace_back(s.begin(), s.end());
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

Subspace fixed_space(std::span<const Matrix> matrices, std::size_t dim)
{
    Matrix id = Matrix::identity(dim);
    Matrix stacked(matrices.size() * dim, dim);
    for (std::size_t k = 0; k < matrices.size(); ++k) {
        Matrix diff = matrices[k] - id;
        for (std::size_t i = 0; i < dim; ++i)
            for (auto& [j, v] : diff.sparse_row(i))
                stacked.set(k * dim + i, j, v);
    }
    return kernel(stacked);
}

FixedSubalgebra fixed_subalgebra(const DendGroupAction& act, const Subgroup& h)
{
    if (!is_subgroup(act.group(), h))
        throw InvalidGroup("the given element set is not a subgroup");
    std::vector<Matrix> ms;
    for (auto x : h)
        ms.push_back(act.matrix(x));
    Subspace space = fixed_space(ms, act.algebra.dim);
    const std::size_t k = space.dim();
    const auto& basis = space.basis();
    DendriformAlgebra sub = DendriformAlgebra::zero(k);
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q) {
            auto lc = space.coordinates(act.algebra.left(basis[p], basis[q]));
            auto rc = space.coordinates(act.algebra.right(basis[p], basis[q]));
            if (!lc || !rc)
                throw ExpressionFailure("a product of fixed vectors leaves the fixed subspace");
            for (std::size_t c = 0; c < k; ++c) {
                sub.prec(p, q, c) = (*lc)[c];
                sub.succ(p, q, c) = (*rc)[c];
            }
        }
    Matrix embedding = space.basis_matrix();
    return {h, std::move(space), std::move(embedding), std::move(sub)};
}

DendCochain restrict_cochain(const DendCochain& f, const FixedSubalgebra& h)
{
    if (f.in_dim() != h.space.ambient_dim() || f.out_dim() != h.space.ambient_dim())
        throw ShapeMismatch("cochain does not live on the ambient algebra");
    DendCochain on_fixed = precompose(f, std::vector<Matrix>(f.arity(), h.embedding));
    const std::size_t k = h.space.dim();
    DendCochain out(f.arity(), k, k);
    const std::size_t blocks = f.arity() * on_fixed.tuples();
    for (std::size_t b = 0; b < blocks; ++b) {
        std::span<const Rational> v(on_fixed.coeffs().data() + b * f.out_dim(), f.out_dim());
        auto c = h.space.coordinates(v);
        if (!c)
            throw ExpressionFailure("cochain value on fixed inputs leaves the fixed subspace");
        std::copy(c->begin(), c->end(), out.coeffs().begin() + static_cast<std::ptrdiff_t>(b * k));
    }
    return out;
}

std::vector<std::size_t> subconjugacy_witnesses(const FiniteGroup& g, const Subgroup& h, const Subgroup& k)
{
    std::set<std::size_t> ks(k.begin(), k.end());
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < g.order(); ++x) {
        bool inside = std::all_of(h.begin(), h.end(),
                                  [&](std::size_t y) { return ks.contains(g.mul(g.mul(g.inverse(x), y), x)); });
        if (inside)
            out.push_back(x);
    }
    return out;
}

Matrix restriction_map(const DendGroupAction& act, const FixedSubalgebra& h, const FixedSubalgebra& k, std::size_t g)
{
    std::vector<Vector> cols;
    for (auto& b : k.space.basis()) {
        auto c = h.space.coordinates(act.matrix(g) * b);
        if (!c)
            throw ContainmentViolation("psi_" + elem(g) + " does not carry A^K into A^H");
        cols.push_back(std::move(*c));
    }
    return Matrix::from_columns(h.space.dim(), cols);
}

OGDendriformAlgebra build_og_algebra(const DendGroupAction& act, std::vector<Subgroup> lattice)
{
    if (lattice.empty())
        lattice = subgroups(act.group());
    OGDendriformAlgebra og{act, {}, {}, 0, {"orbit functoriality", true, {}}};
    for (auto& h : lattice)
        og.objects.push_back(fixed_subalgebra(act, h));

    const auto& grp = act.group();
    for (std::size_t s = 0; s < lattice.size(); ++s)
        for (std::size_t t = 0; t < lattice.size(); ++t)
            for (auto g : subconjugacy_witnesses(grp, lattice[s], lattice[t])) {
                ++og.witness_count;
                Matrix p = restriction_map(act, og.objects[s], og.objects[t], g);
                auto same = std::find_if(og.morphisms.begin(), og.morphisms.end(), [&](const OrbitMorphism& m) {
                    return m.source == s && m.target == t && m.map == p;
                });
                if (same != og.morphisms.end())
                    same->witnesses.push_back(g);
                else
                    og.morphisms.push_back({s, t, {g}, std::move(p)});
            }

    auto lookup = [&](std::size_t s, std::size_t t, std::size_t g) -> const OrbitMorphism* {
        for (auto& m : og.morphisms)
            if (m.source == s && m.target == t && std::find(m.witnesses.begin(), m.witnesses.end(), g) != m.witnesses.end())
                return &m;
        return nullptr;
    };
    for (std::size_t s = 0; s < lattice.size(); ++s) {
        const OrbitMorphism* id = lookup(s, s, 0);
        if (id == nullptr || !(id->map == Matrix::identity(og.objects[s].space.dim())))
            og.functoriality.record({"identity", {s}, {}});
    }
    for (auto& m1 : og.morphisms)
        for (auto& m2 : og.morphisms) {
            if (m1.target != m2.source)
                continue;
            Matrix composite = m1.map * m2.map;
            for (auto g1 : m1.witnesses)
                for (auto g2 : m2.witnesses) {
                    const OrbitMorphism* m = lookup(m1.source, m2.target, grp.mul(g1, g2));
                    if (m == nullptr || !(m->map == composite))
                        og.functoriality.record({"compose[g1=" + elem(g1) + ",g2=" + elem(g2) + "]",
                                                 {m1.source, m1.target, m2.target, g1, g2},
                                                 {}});
                }
        }
    return og;
}

// ---------------------------------------------------------------------------
// Equivariant cochains

Matrix equivariance_constraints(const GroupRepresentation& rep, std::size_t arity, std::size_t colors)
{
    const std::size_t d = rep.dim;
    std::size_t tuples = 1;
    for (std::size_t p = 0; p < arity; ++p)
        tuples *= d;
    const std::size_t block = tuples * d;
    const auto elems = rep.constraint_elements();
    Matrix out(elems.size() * colors * block, colors * block);
    if (d == 0)
        return out;

    std::vector<std::size_t> t(arity);
    for (std::size_t e = 0; e < elems.size(); ++e) {
        const Matrix& m = rep.matrices.at(elems[e]);
        std::vector<SparseRow> col_nz(d);
        Matrix mt = m.transpose();
        for (std::size_t a = 0; a < d; ++a)
            col_nz[a] = mt.sparse_row(a);
        std::vector<SparseRow> m_rows(d);
        for (std::size_t j = 0; j < d; ++j)
            m_rows[j] = m.sparse_row(j);

        std::fill(t.begin(), t.end(), 0);
        std::size_t flat = 0;
        do {
            // (g a_1, ..., g a_n) expanded in the basis: pairs (tuple', coefficient)
            SparseRow images{{0, Rational(1)}};
            for (std::size_t p = 0; p < arity; ++p) {
                SparseRow next;
                for (auto& [prefix, c] : images)
                    for (auto& [b, v] : col_nz[t[p]])
                        next.emplace_back(prefix * d + b, c * v);
                images = std::move(next);
            }
            for (std::size_t c = 0; c < colors; ++c)
                for (std::size_t j = 0; j < d; ++j) {
                    std::size_t row = (e * colors + c) * block + flat * d + j;
                    for (auto& [tp, v] : images)
                        out.add(row, c * block + tp * d + j, v);
                    for (auto& [k, v] : m_rows[j])
                        out.add(row, c * block + flat * d + k, -v);
                }
            ++flat;
        } while (next_tuple(t, d));
    }
    return out;
}

Subspace equivariant_cochain_subspace(const DendGroupAction& act, std::size_t arity)
{
    return kernel(equivariance_constraints(act.rep, arity, arity));
}

Subspace equivariant_hom_subspace(const GroupRepresentation& rep, std::size_t arity)
{
    return kernel(equivariance_constraints(rep, arity, 1));
}

} // namespace dendra
