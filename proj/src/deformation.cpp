#include "dendra/deformation.hpp"

#include "dendra/errors.hpp"

#include <algorithm>
#include <string>

namespace dendra {

namespace {

std::shared_ptr<const DeformationContext> context_for(const DendGroupAction& act,
                                                      std::shared_ptr<const DeformationContext> ctx)
{
    if (!ctx)
        return DeformationContext::build(act);
    if (!(ctx->pi == DendCochain::multiplication(act.algebra)) || !(ctx->action.group() == act.group()))
        throw ShapeMismatch("deformation context was built for another algebra");
    return ctx;
}

DendCochain sum_of_squares(const std::vector<DendCochain>& t, std::size_t k, std::size_t from)
{
    DendCochain acc(3, t.front().in_dim(), t.front().out_dim());
    for (std::size_t i = from; i + from <= k; ++i) {
        if (t[i].is_zero() || t[k - i].is_zero())
            continue;
        acc += circle_product(t[i], t[k - i]);
    }
    return acc;
}

bool commutes_with_action(const Matrix& m, const GroupRepresentation& rep)
{
    return std::all_of(rep.matrices.begin(), rep.matrices.end(), [&](const Matrix& g) { return g * m == m * g; });
}

DendCochain as_cochain(const Matrix& psi)
{
    const std::size_t d = psi.rows();
    DendCochain f(1, d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t j = 0; j < d; ++j)
            f.coeffs()[f.index(1, a, j)] = psi.get(j, a);
    return f;
}

} // namespace

FormalDeformation FormalDeformation::constant(const DendGroupAction& act, std::size_t order)
{
    const std::size_t d = act.algebra.dim;
    FormalDeformation def{act, {DendCochain::multiplication(act.algebra)}, true};
    for (std::size_t k = 1; k <= order; ++k)
        def.terms.emplace_back(2, d, d);
    return def;
}

FormalDeformation FormalDeformation::truncated(std::size_t order) const
{
    if (order > this->order())
        throw IndexOutOfRange("cannot truncate to a higher order");
    FormalDeformation out = *this;
    out.terms.resize(order + 1);
    return out;
}

GaugeTransformation GaugeTransformation::identity(std::size_t dim, std::size_t order)
{
    GaugeTransformation g{{Matrix::identity(dim)}};
    for (std::size_t k = 1; k <= order; ++k)
        g.maps.emplace_back(dim, dim);
    return g;
}

GaugeTransformation GaugeTransformation::inverse(std::size_t to_order) const
{
    const std::size_t d = maps.front().rows();
    GaugeTransformation inv{{Matrix::identity(d)}};
    for (std::size_t k = 1; k <= to_order; ++k) {
        Matrix acc(d, d);
        for (std::size_t i = 1; i <= std::min(k, order()); ++i)
            acc = acc - maps[i] * inv.maps[k - i];
        inv.maps.push_back(std::move(acc));
    }
    return inv;
}

std::shared_ptr<const DeformationContext> DeformationContext::build(const DendGroupAction& act, std::size_t max_entries)
{
    DendCochain pi = DendCochain::multiplication(act.algebra);
    ComplexReport complex = equivariant_dend_cohomology(act, 3, max_entries);
    Matrix bracket2 = multiplication_differential_matrix(pi, 2);
    Quotient h3(complex.at(3).cocycles, complex.at(3).coboundaries);
    return std::make_shared<const DeformationContext>(
        DeformationContext{act, std::move(pi), std::move(complex), std::move(bracket2), std::move(h3)});
}

// ---------------------------------------------------------------------------

bool DeformationReport::pass() const
{
    return base_matches && terms_equivariant &&
           std::all_of(orders.begin(), orders.end(), [](const OrderVerdict& v) { return v.pass; }) &&
           std::all_of(subgroups.begin(), subgroups.end(), [](const SubgroupVerdict& v) { return v.pass; });
}

std::optional<std::size_t> DeformationReport::valid_through() const
{
    std::optional<std::size_t> last;
    if (!base_matches || !terms_equivariant)
        return last;
    for (auto& v : orders) {
        if (!v.pass)
            break;
        last = v.k;
    }
    return last;
}

DeformationReport check_deformation(const FormalDeformation& def)
{
    const auto& act = def.action;
    const std::size_t d = act.algebra.dim;
    DeformationReport report;
    for (auto& t : def.terms)
        if (t.arity() != 2 || t.in_dim() != d || t.out_dim() != d)
            throw ShapeMismatch("deformation terms must be arity-2 cochains on the algebra");
    report.base_matches = def.terms.front() == DendCochain::multiplication(act.algebra);
    for (std::size_t k = 0; k <= def.order(); ++k) {
        DendCochain r = sum_of_squares(def.terms, k, 0);
        bool ok = r.is_zero();
        report.orders.push_back({k, ok, std::move(r)});
    }
    if (!def.equivariant)
        return report;

    Matrix constraints = equivariance_constraints(act.rep, 2, 2);
    for (auto& t : def.terms)
        if (!is_zero(constraints * t.coeffs()))
            report.terms_equivariant = false;
    if (!report.terms_equivariant)
        return report;

    for (auto& h : subgroups(act.group())) {
        FixedSubalgebra fs = fixed_subalgebra(act, h);
        std::vector<DendCochain> restricted;
        bool inside = true;
        try {
            for (auto& t : def.terms)
                restricted.push_back(restrict_cochain(t, fs));
        } catch (const ExpressionFailure&) {
            inside = false;
        }
        for (std::size_t k = 0; k <= def.order(); ++k) {
            bool ok = inside && sum_of_squares(restricted, k, 0).is_zero();
            if (k == 0 && inside)
                ok = ok && restricted.front() == DendCochain::multiplication(fs.algebra);
            report.subgroups.push_back({h, k, ok});
        }
    }
    return report;
}

Infinitesimal infinitesimal(const FormalDeformation& def)
{
    if (def.order() < 1)
        throw NotADeformation("an infinitesimal needs order at least 1");
    auto through = check_deformation(def.truncated(1)).valid_through();
    if (!through || *through < 1)
        throw NotADeformation("the deformation equations fail at order " + std::to_string(through ? *through + 1 : 0));
    Infinitesimal inf{def.terms[1], false, false};
    inf.bracket_closed = gerstenhaber_bracket(def.terms[0], inf.cochain).is_zero();
    inf.coboundary_closed = dend_coboundary(DendRepresentation::adjoint(def.action.algebra), inf.cochain).is_zero();
    return inf;
}

FormalDeformation apply_gauge(const FormalDeformation& def, const GaugeTransformation& psi)
{
    const std::size_t d = def.action.algebra.dim, n = def.order();
    if (psi.maps.empty() || !(psi.maps.front() == Matrix::identity(d)))
        throw NotEquivalent("a gauge transformation starts with the identity");
    for (auto& m : psi.maps) {
        if (m.rows() != d || m.cols() != d)
            throw ShapeMismatch("gauge maps must be d x d");
        if (def.equivariant && !commutes_with_action(m, def.action.rep))
            throw InvalidAction("gauge map does not commute with the group action");
    }
    auto map_at = [&](std::size_t k) -> const Matrix* { return k <= psi.order() ? &psi.maps[k] : nullptr; };

    FormalDeformation out{def.action, {}, def.equivariant};
    for (std::size_t k = 0; k <= n; ++k) {
        DendCochain acc(2, d, d);
        for (std::size_t i = 0; i <= k; ++i) {
            if (def.terms[i].is_zero())
                continue;
            for (std::size_t j = 0; i + j <= k; ++j) {
                const Matrix* a = map_at(j);
                const Matrix* b = map_at(k - i - j);
                if (a == nullptr || b == nullptr || a->is_zero() || b->is_zero())
                    continue;
                acc += precompose(def.terms[i], {*a, *b});
            }
        }
        for (std::size_t i = 1; i <= k; ++i) {
            const Matrix* m = map_at(i);
            if (m == nullptr || m->is_zero() || out.terms[k - i].is_zero())
                continue;
            acc = acc - postcompose(*m, out.terms[k - i]);
        }
        out.terms.push_back(std::move(acc));
    }
    return out;
}

CohomologousReport infinitesimals_cohomologous(const FormalDeformation& def1, const FormalDeformation& def2,
                                              const GaugeTransformation* psi,
                                              std::shared_ptr<const DeformationContext> ctx)
{
    if (def1.order() < 1 || def2.order() < 1)
        throw NotADeformation("both deformations need order at least 1");
    ctx = context_for(def1.action, std::move(ctx));
    CohomologousReport rep;
    rep.difference = def1.terms[1] - def2.terms[1];

    const Subspace& q1 = ctx->complex.at(1).cochains;
    Matrix d1 = dend_coboundary_matrix(DendRepresentation::adjoint(def1.action.algebra), 1);
    Matrix qm = q1.basis_matrix();
    auto c = q1.dim() == 0 ? (rep.difference.is_zero() ? std::optional<Vector>(Vector{}) : std::nullopt)
                           : solve(d1 * qm, rep.difference.coeffs());
    if (!c)
        throw NotEquivalent("infinitesimals differ by a class that is not an equivariant coboundary");
    rep.witness = q1.dim() == 0 ? zero_vector(q1.ambient_dim()) : qm * *c;

    if (psi != nullptr) {
        FormalDeformation expected = apply_gauge(def1, *psi);
        std::size_t common = std::min(expected.order(), def2.order());
        rep.gauge_relation = expected.truncated(common).terms == def2.truncated(common).terms;
        Matrix psi1 = psi->order() >= 1 ? psi->maps[1] : Matrix(def1.action.algebra.dim, def1.action.algebra.dim);
        DendCochain dpsi = dend_coboundary(DendRepresentation::adjoint(def1.action.algebra), as_cochain(psi1));
        rep.matches_gauge = rep.difference == dpsi * Rational(-1);
    }
    return rep;
}

ObstructionClass obstruction(const FormalDeformation& def, std::shared_ptr<const DeformationContext> ctx)
{
    if (!check_deformation(def).pass())
        throw NotADeformation("the input does not satisfy the deformation equations");
    ctx = context_for(def.action, std::move(ctx));
    ObstructionClass ob;
    ob.cochain = sum_of_squares(def.terms, def.order() + 1, 1) * Rational(-1);
    ob.is_equivariant = ctx->complex.at(3).cochains.contains(ob.cochain.coeffs());
    ob.is_cocycle = dend_coboundary(DendRepresentation::adjoint(def.action.algebra), ob.cochain).is_zero() &&
                    ctx->complex.at(3).cocycles.contains(ob.cochain.coeffs());
    if (ob.is_cocycle) {
        Vector cls = *ctx->h3.class_vector(ob.cochain.coeffs());
        if (!is_zero(cls))
            ob.class_vector = std::move(cls);
    }
    return ob;
}

ExtensionResult extend(const FormalDeformation& def, std::shared_ptr<const DeformationContext> ctx)
{
    ctx = context_for(def.action, std::move(ctx));
    ExtensionResult res{false, def, obstruction(def, ctx)};
    const Subspace& q2 = ctx->complex.at(2).cochains;
    const std::size_t d = def.action.algebra.dim;
    std::optional<Vector> x;
    if (q2.dim() == 0) {
        if (res.obstruction.cochain.is_zero())
            x = zero_vector(q2.ambient_dim());
    } else {
        Matrix qm = q2.basis_matrix();
        if (auto c = solve(ctx->bracket2 * qm, res.obstruction.cochain.coeffs()))
            x = qm * *c;
    }
    if (!x)
        return res;
    FormalDeformation next = def;
    next.terms.emplace_back(2, d, d, std::move(*x));
    if (!check_deformation(next).pass())
        throw ExpressionFailure("extension does not satisfy the deformation equations");
    res.extended = true;
    res.deformation = std::move(next);
    return res;
}

RigidityReport rigidity_report(const DendGroupAction& act, std::shared_ptr<const DeformationContext> ctx)
{
    ctx = context_for(act, std::move(ctx));
    RigidityReport r;
    r.dim_H2 = ctx->complex.at(2).dim_H;
    r.rigid = r.dim_H2 == 0;
    r.verdict = r.rigid ? "RIGID" : "INCONCLUSIVE";
    return r;
}

CocycleDeformationResult cocycle_to_deformation(const DendGroupAction& act, const DendCochain& z, std::size_t order_cap,
                                                std::shared_ptr<const DeformationContext> ctx)
{
    ctx = context_for(act, std::move(ctx));
    const std::size_t d = act.algebra.dim;
    if (z.arity() != 2 || z.in_dim() != d || z.out_dim() != d)
        throw ShapeMismatch("a 2-cochain on the algebra is required");
    if (!ctx->complex.at(2).cocycles.contains(z.coeffs()))
        throw NotACocycle("the cochain is not an equivariant 2-cocycle");
    if (order_cap < 1)
        throw IndexOutOfRange("order cap must be at least 1");

    CocycleDeformationResult res{FormalDeformation{act, {ctx->pi, z}, true}, false, std::nullopt, std::nullopt};
    while (res.deformation.order() < order_cap) {
        ExtensionResult step = extend(res.deformation, ctx);
        if (!step.extended) {
            res.failed_order = res.deformation.order() + 1;
            res.obstruction = std::move(step.obstruction);
            return res;
        }
        res.deformation = std::move(step.deformation);
    }
    res.complete = true;
    return res;
}

} // namespace dendra
