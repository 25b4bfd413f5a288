#include "dendra/cohomology.hpp"

#include "dendra/errors.hpp"

#include <algorithm>
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

bool is_full(const Subspace& s) { return s.dim() == s.ambient_dim(); }

/// Applies m to every basis vector of s.
Matrix restrict_to(const Matrix& m, const Subspace& s)
{
    if (is_full(s))
        return m;
    return m * s.basis_matrix();
}

bool columns_inside(const Matrix& m, const Subspace& s)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!s.contains(m.column(j)))
            return false;
    return true;
}

std::string at_degree(const std::string& what, std::size_t n) { return what + "[n=" + std::to_string(n) + "]"; }

void require_within_cap(std::size_t rows, std::size_t cols, std::size_t cap, std::size_t n)
{
    if (cols != 0 && rows > cap / cols)
        throw ResourceLimit("differential in degree " + std::to_string(n) + " has " + std::to_string(rows) + " x " +
                            std::to_string(cols) + " entries, above the cap of " + std::to_string(cap));
}

void and_check(std::vector<NamedCheck>& checks, const std::string& name, bool pass)
{
    for (auto& c : checks)
        if (c.name == name) {
            c.pass = c.pass && pass;
            return;
        }
    checks.push_back({name, pass});
}

bool all_pass(const std::vector<NamedCheck>& checks)
{
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.pass; });
}

/// Expands (E b_1, ..., E b_n) for the k-tuple `t` into (d-tuple, coefficient) pairs.
SparseRow expand_tuple(const std::vector<SparseRow>& col_nz, const std::vector<std::size_t>& t, std::size_t d)
{
    SparseRow images{{0, Rational(1)}};
    for (auto a : t) {
        SparseRow next;
        for (auto& [prefix, c] : images)
            for (auto& [b, v] : col_nz[a])
                next.emplace_back(prefix * d + b, c * v);
        images = std::move(next);
    }
    return images;
}

std::vector<SparseRow> column_entries(const Matrix& m)
{
    Matrix t = m.transpose();
    std::vector<SparseRow> out(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        out[j] = t.sparse_row(j);
    return out;
}

std::size_t trivial_object(const OGDendriformAlgebra& og)
{
    for (std::size_t s = 0; s < og.objects.size(); ++s)
        if (og.objects[s].subgroup == Subgroup{0})
            return s;
    throw InvalidGroup("the subgroup lattice does not contain the trivial subgroup");
}

} // namespace

bool ComplexReport::ok() const { return all_pass(checks); }

const DegreeReport& ComplexReport::at(std::size_t n) const
{
    for (auto& d : degrees)
        if (d.n == n)
            return d;
    throw IndexOutOfRange("degree " + std::to_string(n) + " was not computed");
}

ComplexReport compute_complex(const ComplexSpec& spec)
{
    ComplexReport report{spec.name, {}, {}};
    auto space_at = [&](std::size_t n) { return spec.space ? spec.space(n) : Subspace::full(spec.ambient_dim(n)); };

    Subspace q = space_at(spec.first);
    Subspace boundaries(spec.ambient_dim(spec.first));
    for (std::size_t n = spec.first; n <= spec.last; ++n) {
        const std::size_t rows = spec.ambient_dim(n + 1), cols = spec.ambient_dim(n);
        require_within_cap(rows, cols, spec.max_entries, n);
        Matrix k = restrict_to(spec.differential(n), q);
        Subspace coords = kernel(k);

        std::vector<Vector> zs;
        if (is_full(q))
            zs = coords.basis();
        else {
            Matrix qm = q.basis_matrix();
            for (auto& c : coords.basis())
                zs.push_back(qm * c);
        }
        DegreeReport deg;
        deg.n = n;
        deg.dim_C = q.dim();
        deg.rank_delta = q.dim() - coords.dim();
        deg.cocycles = Subspace::span(cols, zs);
        deg.coboundaries = std::move(boundaries);
        deg.dim_Z = deg.cocycles.dim();
        deg.dim_B = deg.coboundaries.dim();
        bool contained = deg.cocycles.contains(deg.coboundaries);
        and_check(report.checks, "delta_squared_zero", contained);
        if (!contained)
            and_check(report.checks, at_degree("delta_squared_zero", n), false);
        deg.dim_H = contained ? quotient_dim(deg.cocycles, deg.coboundaries) : 0;

        boundaries = image(k);
        Subspace next = (n < spec.last || spec.check_closure) ? space_at(n + 1) : Subspace(rows);
        if (spec.check_closure) {
            bool closed = next.contains(boundaries);
            and_check(report.checks, "subcomplex_closed", closed);
            if (!closed)
                and_check(report.checks, at_degree("subcomplex_closed", n), false);
        }
        deg.cochains = std::move(q);
        q = std::move(next);
        report.degrees.push_back(std::move(deg));
    }
    return report;
}

ComplexReport dend_cohomology(const DendRepresentation& rep, std::size_t n_max, std::size_t max_entries)
{
    if (!check_representation(rep).pass)
        throw NotRepresentation("representation identities fail");
    const std::size_t d = rep.algebra.dim, m = rep.mdim;
    ComplexSpec spec;
    spec.name = "dendriform";
    spec.first = 1;
    spec.last = n_max;
    spec.ambient_dim = [=](std::size_t n) { return DendCochain::space_dim(n, d, m); };
    spec.differential = [&](std::size_t n) { return dend_coboundary_matrix(rep, n); };
    spec.max_entries = max_entries;
    return compute_complex(spec);
}

ComplexReport hochschild_cohomology(const AssociativeAlgebra& v, const GroupRepresentation* rep, std::size_t n_max,
                                    std::size_t max_entries)
{
    const std::size_t d = v.dim;
    if (rep != nullptr) {
        if (rep->dim != d || !check_group_representation(*rep).pass)
            throw InvalidAction("representation does not act on the algebra");
        if (!is_zero(equivariance_constraints(*rep, 2, 1) * HomCochain::multiplication(v).coeffs()))
            throw InvalidAction("multiplication is not equivariant");
    }
    ComplexSpec spec;
    spec.name = rep != nullptr ? "hochschild (equivariant)" : "hochschild";
    spec.first = 0;
    spec.last = n_max;
    spec.ambient_dim = [=](std::size_t n) { return HomCochain::space_dim(n, d, d); };
    if (rep != nullptr) {
        spec.space = [rep](std::size_t n) { return equivariant_hom_subspace(*rep, n); };
        spec.check_closure = true;
    }
    spec.differential = [&](std::size_t n) { return hochschild_coboundary_matrix(v, n); };
    spec.max_entries = max_entries;
    return compute_complex(spec);
}

ComplexReport equivariant_dend_cohomology(const DendGroupAction& act, std::size_t n_max, std::size_t max_entries)
{
    if (!check_action(act).pass)
        throw InvalidAction("group does not act by dendriform automorphisms");
    const std::size_t d = act.algebra.dim;
    DendRepresentation rep = DendRepresentation::adjoint(act.algebra);
    ComplexSpec spec;
    spec.name = "equivariant dendriform";
    spec.first = 1;
    spec.last = n_max;
    spec.ambient_dim = [=](std::size_t n) { return DendCochain::space_dim(n, d, d); };
    spec.space = [&](std::size_t n) { return equivariant_cochain_subspace(act, n); };
    spec.differential = [&](std::size_t n) { return dend_coboundary_matrix(rep, n); };
    spec.check_closure = true;
    spec.max_entries = max_entries;
    return compute_complex(spec);
}

// ---------------------------------------------------------------------------
// Direct sum over the orbit category

std::size_t BredonLayout::offset(std::size_t object, std::size_t n) const
{
    std::size_t off = 0;
    for (std::size_t s = 0; s < object; ++s)
        off += DendCochain::space_dim(n, block_dims[s], block_dims[s]);
    return off;
}

std::size_t BredonLayout::total(std::size_t n) const { return offset(block_dims.size(), n); }

namespace {

BredonLayout layout_of(const OGDendriformAlgebra& og)
{
    BredonLayout l;
    for (auto& o : og.objects)
        l.block_dims.push_back(o.space.dim());
    return l;
}

} // namespace

Matrix bredon_differential(const OGDendriformAlgebra& og, std::size_t n)
{
    BredonLayout l = layout_of(og);
    Matrix out(l.total(n + 1), l.total(n));
    for (std::size_t s = 0; s < og.objects.size(); ++s) {
        if (l.block_dims[s] == 0)
            continue;
        Matrix block = dend_coboundary_matrix(DendRepresentation::adjoint(og.objects[s].algebra), n);
        const std::size_t r0 = l.offset(s, n + 1), c0 = l.offset(s, n);
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (auto& [j, v] : block.sparse_row(i))
                out.set(r0 + i, c0 + j, v);
    }
    return out;
}

Matrix invariance_constraints(const OGDendriformAlgebra& og, std::size_t n)
{
    BredonLayout l = layout_of(og);
    std::size_t rows = 0;
    for (auto& m : og.morphisms)
        rows += n * ipow(l.block_dims[m.target], n) * l.block_dims[m.source];
    Matrix out(rows, l.total(n));

    std::size_t row0 = 0;
    for (auto& m : og.morphisms) {
        const std::size_t kh = l.block_dims[m.source], kk = l.block_dims[m.target];
        const std::size_t th = ipow(kh, n), tk = ipow(kk, n);
        const std::size_t off_h = l.offset(m.source, n), off_k = l.offset(m.target, n);
        if (kh == 0 || kk == 0)
            continue;
        auto col_nz = column_entries(m.map);
        std::vector<SparseRow> p_rows(kh);
        for (std::size_t j = 0; j < kh; ++j)
            p_rows[j] = m.map.sparse_row(j);

        std::vector<std::size_t> t(n, 0);
        std::size_t flat = 0;
        do {
            SparseRow images = expand_tuple(col_nz, t, kh);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t j = 0; j < kh; ++j) {
                    std::size_t row = row0 + (r * tk + flat) * kh + j;
                    for (auto& [tp, v] : images)
                        out.add(row, off_h + (r * th + tp) * kh + j, v);
                    for (auto& [k, v] : p_rows[j])
                        out.add(row, off_k + (r * tk + flat) * kk + k, -v);
                }
            ++flat;
        } while (next_tuple(t, kk));
        row0 += n * tk * kh;
    }
    return out;
}

BredonComplex bredon_complex(const OGDendriformAlgebra& og, std::size_t n_max, std::size_t max_entries)
{
    BredonComplex bc;
    bc.layout = layout_of(og);
    ComplexSpec spec;
    spec.first = 1;
    spec.last = n_max;
    spec.max_entries = max_entries;
    spec.ambient_dim = [&](std::size_t n) { return bc.layout.total(n); };
    spec.differential = [&](std::size_t n) { return bredon_differential(og, n); };
    spec.name = "bredon (full direct sum)";
    bc.full = compute_complex(spec);

    spec.name = "bredon (invariant families)";
    spec.space = [&](std::size_t n) { return kernel(invariance_constraints(og, n)); };
    spec.check_closure = true;
    bc.invariant = compute_complex(spec);
    return bc;
}

Matrix restriction_to_blocks(const OGDendriformAlgebra& og, std::size_t n)
{
    BredonLayout l = layout_of(og);
    const std::size_t d = og.action.algebra.dim, td = ipow(d, n);
    Matrix out(l.total(n), DendCochain::space_dim(n, d, d));
    for (std::size_t s = 0; s < og.objects.size(); ++s) {
        const auto& obj = og.objects[s];
        const std::size_t k = l.block_dims[s], tk = ipow(k, n), off = l.offset(s, n);
        if (k == 0)
            continue;
        auto col_nz = column_entries(obj.embedding);
        const auto& pivots = obj.space.pivots();
        std::vector<std::size_t> t(n, 0);
        std::size_t flat = 0;
        do {
            SparseRow images = expand_tuple(col_nz, t, d);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < k; ++c)
                    for (auto& [sd, v] : images)
                        out.add(off + (r * tk + flat) * k + c, (r * td + sd) * d + pivots[c], v);
            ++flat;
        } while (next_tuple(t, k));
    }
    return out;
}

Matrix trivial_block_projection(const OGDendriformAlgebra& og, std::size_t n)
{
    BredonLayout l = layout_of(og);
    const std::size_t e = trivial_object(og);
    const std::size_t d = og.action.algebra.dim, size = DendCochain::space_dim(n, d, d);
    if (!(og.objects[e].embedding == Matrix::identity(d)))
        throw ExpressionFailure("the trivial subgroup must fix the whole algebra");
    Matrix out(size, l.total(n));
    const std::size_t off = l.offset(e, n);
    for (std::size_t i = 0; i < size; ++i)
        out.set(i, off + i, 1);
    return out;
}

std::size_t induced_rank(const Matrix& map, const DegreeReport& src, const DegreeReport& dst)
{
    Quotient from(src.cocycles, src.coboundaries);
    Quotient to(dst.cocycles, dst.coboundaries);
    std::vector<Vector> cols;
    for (auto& z : from.representatives()) {
        auto c = to.class_vector(map * z);
        if (!c)
            throw ContainmentViolation("induced map sends a cocycle outside the target cocycles");
        cols.push_back(std::move(*c));
    }
    if (cols.empty() || to.dim() == 0)
        return 0;
    return rank(Matrix::from_columns(to.dim(), cols));
}

bool IsomorphismReport::ok() const
{
    return all_pass(checks) && equivariant.ok() && bredon.invariant.ok() && bredon.full.ok();
}

IsomorphismReport verify_bredon_isomorphism(const DendGroupAction& act, std::size_t n_max, std::size_t max_entries)
{
    IsomorphismReport rep;
    OGDendriformAlgebra og = build_og_algebra(act);
    rep.witness_count = og.witness_count;
    rep.morphism_count = og.morphisms.size();
    and_check(rep.checks, "orbit_functoriality", og.functoriality.pass);

    rep.equivariant = equivariant_dend_cohomology(act, n_max, max_entries);
    rep.bredon = bredon_complex(og, n_max, max_entries);
    DendRepresentation adj = DendRepresentation::adjoint(act.algebra);

    Matrix f_next = restriction_to_blocks(og, 1);
    Matrix g_next = trivial_block_projection(og, 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        Matrix f = std::move(f_next), g = std::move(g_next);
        f_next = restriction_to_blocks(og, n + 1);
        g_next = trivial_block_projection(og, n + 1);
        const auto& eq = rep.equivariant.at(n);
        const auto& inv = rep.bredon.invariant.at(n);
        Matrix q = eq.cochains.basis_matrix();
        Matrix qs = inv.cochains.basis_matrix();

        Matrix fq = f * q;
        and_check(rep.checks, "F_lands_in_invariant_families", columns_inside(fq, inv.cochains));
        and_check(rep.checks, "F_chain_map", bredon_differential(og, n) * fq == f_next * (dend_coboundary_matrix(adj, n) * q));
        and_check(rep.checks, "G_after_F_is_identity", g * fq == q);

        Matrix gq = g * qs;
        and_check(rep.checks, "G_lands_in_equivariant_cochains", columns_inside(gq, eq.cochains));
        and_check(rep.checks, "G_chain_map", dend_coboundary_matrix(adj, n) * gq == g_next * (bredon_differential(og, n) * qs));
        and_check(rep.checks, "F_after_G_is_identity", f * gq == qs);

        IsomorphismDegree deg;
        deg.n = n;
        deg.dim_H_equivariant = eq.dim_H;
        deg.dim_H_invariant = inv.dim_H;
        deg.dim_H_full = rep.bredon.full.at(n).dim_H;
        deg.induced_rank = induced_rank(f, eq, inv);
        deg.bijective = deg.dim_H_equivariant == deg.dim_H_invariant && deg.induced_rank == deg.dim_H_equivariant;
        and_check(rep.checks, "induced_map_bijective", deg.bijective);
        rep.degrees.push_back(deg);
    }
    return rep;
}

bool ComparisonReport::ok() const { return all_pass(checks) && dend.ok() && hochschild.ok(); }

ComparisonReport induced_comparison(const DendGroupAction& act, std::size_t n_max, std::size_t max_entries)
{
    ComparisonReport rep;
    const std::size_t d = act.algebra.dim;
    AssociativeAlgebra v = associated_associative(act.algebra);
    rep.dend = equivariant_dend_cohomology(act, n_max, max_entries);
    rep.hochschild = hochschild_cohomology(v, &act.rep, n_max, max_entries);
    and_check(rep.checks, "multiplication_preserved",
              comparison_map(DendCochain::multiplication(act.algebra)) == HomCochain::multiplication(v));
    for (std::size_t n = 1; n <= n_max; ++n) {
        Matrix s = comparison_matrix(n, d, d);
        const auto& dd = rep.dend.at(n);
        const auto& hh = rep.hochschild.at(n);
        and_check(rep.checks, "cocycles_to_cocycles", columns_inside(restrict_to(s, dd.cocycles), hh.cocycles));
        and_check(rep.checks, "coboundaries_to_coboundaries",
                  dd.coboundaries.dim() == 0 || columns_inside(s * dd.coboundaries.basis_matrix(), hh.coboundaries));
        ComparisonDegree deg{n, dd.dim_H, hh.dim_H, 0};
        deg.induced_rank = induced_rank(s, dd, hh);
        rep.degrees.push_back(deg);
    }
    return rep;
}

} // namespace dendra
