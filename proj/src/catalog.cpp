#include "dendra/catalog.hpp"

#include "dendra/errors.hpp"

#include <map>
#include <functional>
#include <tuple>

namespace dendra::catalog {

namespace {

Tensor3 tensor_from(std::size_t d, std::initializer_list<std::tuple<std::size_t, std::size_t, std::size_t, int>> entries)
{
    Tensor3 t = Tensor3::cube(d);
    for (auto [i, j, k, v] : entries)
        t(i, j, k) = v;
    return t;
}

WorkspaceDocument with_action(const DendGroupAction& act)
{
    WorkspaceDocument doc;
    doc.dendriform = act.algebra;
    doc.group = act.rep;
    return doc;
}

WorkspaceDocument e1_doc()
{
    WorkspaceDocument doc;
    doc.dendriform = e1();
    doc.options = Json{{"description", "one idempotent line, e < e = e"}};
    return doc;
}

WorkspaceDocument e2_swap_doc()
{
    auto act = e2_swap();
    auto doc = with_action(act);
    // pi + t pi + ... rescales the products, a deformation that is equivariant by construction.
    auto result = cocycle_to_deformation(act, DendCochain::multiplication(act.algebra), 2);
    doc.deformation = result.deformation.terms;
    doc.options = Json{{"description", "two idempotent lines exchanged by Z/2"}, {"max_degree", 3}};
    return doc;
}

WorkspaceDocument rota_baxter_doc()
{
    WorkspaceDocument doc;
    doc.associative = dual_numbers();
    doc.rota_baxter = dual_numbers_rb();
    doc.pseudotwistor = pseudotwistor_from_rota_baxter(*doc.rota_baxter);
    doc.companion = companion_from_rota_baxter(*doc.rota_baxter);
    doc.options = Json{{"description", "dual numbers with R(1) = x, R(x) = 0"}};
    return doc;
}

WorkspaceDocument tensor_doc()
{
    WorkspaceDocument doc;
    doc.tensor_truncation = WorkspaceDocument::Truncation{1, 3};
    doc.dendriform = doc.dendriform_algebra();
    doc.options = Json{{"description", "shuffle products on words of length at most 3 over one letter; "
                                       "longer products are set to zero"}};
    return doc;
}

WorkspaceDocument semidirect_doc()
{
    const DendriformAlgebra a = rb_induced();
    WorkspaceDocument doc;
    doc.associative = associated_associative(a);
    doc.bimodule = dendriform_bimodule(a);
    doc.o_operator = LinearOperator(Matrix::identity(a.dim));
    doc.options = Json{{"description", "identity operator of a dendriform algebra into its associated algebra"}};
    return doc;
}

WorkspaceDocument s3_doc()
{
    auto act = s3_permutation();
    act.rep.generators = {1, 3};
    auto doc = with_action(act);
    doc.subgroups = subgroups(act.group());
    doc.options = Json{{"description", "S3 permuting three idempotent lines"}, {"max_degree", 2}};
    return doc;
}

WorkspaceDocument rb_sign_doc()
{
    auto doc = with_action(rb_sign());
    doc.options = Json{{"description", "Z/2 sign action on the algebra induced by R(1) = x"}};
    return doc;
}

WorkspaceDocument zero_doc()
{
    WorkspaceDocument doc;
    doc.dendriform = DendriformAlgebra::zero(2);
    doc.options = Json{{"description", "two-dimensional algebra with zero products"}};
    return doc;
}

const std::map<std::string, std::function<WorkspaceDocument()>>& registry()
{
    static const std::map<std::string, std::function<WorkspaceDocument()>> r{
        {"e1", e1_doc},
        {"e2-swap", e2_swap_doc},
        {"rota-baxter", rota_baxter_doc},
        {"tensor-v1-n3", tensor_doc},
        {"semidirect", semidirect_doc},
        {"s3-perm", s3_doc},
        {"rb-sign", rb_sign_doc},
        {"zero-2", zero_doc},
    };
    return r;
}

} // namespace

DendriformAlgebra e1() { return DendriformAlgebra(1, tensor_from(1, {{0, 0, 0, 1}}), Tensor3::cube(1)); }

DendriformAlgebra e2()
{
    return DendriformAlgebra(2, tensor_from(2, {{0, 0, 0, 1}, {1, 1, 1, 1}}), Tensor3::cube(2));
}

AssociativeAlgebra dual_numbers()
{
    return AssociativeAlgebra(2, tensor_from(2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}));
}

LinearOperator dual_numbers_rb()
{
    Matrix r(2, 2);
    r.set(1, 0, 1);
    return LinearOperator(r);
}

DendriformAlgebra rb_induced() { return from_rota_baxter(dual_numbers(), dual_numbers_rb()); }

Matrix permutation_matrix(const std::vector<std::size_t>& image)
{
    Matrix m(image.size(), image.size());
    for (std::size_t i = 0; i < image.size(); ++i)
        m.set(image[i], i, 1);
    return m;
}

DendGroupAction e2_swap()
{
    return {e2(), {FiniteGroup::cyclic(2), 2, {Matrix::identity(2), permutation_matrix({1, 0})}, {}}};
}

DendGroupAction s3_permutation()
{
    DendriformAlgebra a(3, tensor_from(3, {{0, 0, 0, 1}, {1, 1, 1, 1}, {2, 2, 2, 1}}), Tensor3::cube(3));
    GroupRepresentation rep{FiniteGroup::symmetric3(), 3, {}, {}};
    for (std::size_t g = 0; g < 6; ++g)
        rep.matrices.push_back(permutation_matrix(FiniteGroup::symmetric3_permutation(g)));
    return {a, rep};
}

DendGroupAction rb_sign()
{
    Matrix s = Matrix::identity(2);
    s.set(0, 0, -1);
    return {rb_induced(), {FiniteGroup::cyclic(2), 2, {Matrix::identity(2), s}, {}}};
}

std::vector<std::string> example_names()
{
    std::vector<std::string> names;
    for (const auto& [name, make] : registry())
        names.push_back(name);
    return names;
}

WorkspaceDocument example_document(const std::string& name)
{
    auto it = registry().find(name);
    if (it == registry().end())
        throw SchemaError("unknown example \"" + name + "\"");
    return it->second();
}

} // namespace dendra::catalog
