#include "dendra/io.hpp"

#include "dendra/errors.hpp"

#include <set>

namespace dendra {

namespace {

const Json& member(const Json& j, const char* key, const char* where)
{
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string(where) + ": missing \"" + key + "\"");
    return j.at(key);
}

std::size_t size_value(const Json& j, const char* what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw SchemaError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

std::size_t positive_dim(const Json& j, const char* what)
{
    std::size_t d = size_value(j, what);
    if (d == 0)
        throw SchemaError(std::string(what) + " must be at least 1");
    return d;
}

const Json& array_of(const Json& j, std::size_t n, const char* what)
{
    if (!j.is_array() || j.size() != n)
        throw SchemaError(std::string(what) + ": expected an array of length " + std::to_string(n));
    return j;
}

Json index_list(const std::vector<std::size_t>& v, std::size_t shift)
{
    Json out = Json::array();
    for (auto i : v)
        out.push_back(i + shift);
    return out;
}

std::vector<std::size_t> index_list_from_json(const Json& j, std::size_t shift, std::size_t bound,
                                              const char* what)
{
    if (!j.is_array())
        throw SchemaError(std::string(what) + " must be an array");
    std::vector<std::size_t> out;
    for (const auto& x : j) {
        std::size_t i = size_value(x, what);
        if (i < shift || i - shift >= bound)
            throw SchemaError(std::string(what) + ": index " + std::to_string(i) + " out of range");
        out.push_back(i - shift);
    }
    return out;
}

Json operator_json(const LinearOperator& op) { return Json{{"matrix", to_json(op.matrix)}}; }

LinearOperator operator_from_json(const Json& j, std::size_t rows, std::size_t cols, const char* where)
{
    return LinearOperator(matrix_from_json(member(j, "matrix", where), rows, cols));
}

Json checks_json(const std::vector<NamedCheck>& checks)
{
    Json out = Json::object();
    for (const auto& c : checks)
        out[c.name] = c.pass;
    return out;
}

template <class F>
auto schema_guard(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const SchemaError&) {
        throw;
    } catch (const Json::exception& e) {
        throw SchemaError(e.what());
    } catch (const Error& e) {
        throw SchemaError(e.what());
    }
}

} // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(mpz_class(std::to_string(j.get<long long>())));
    throw SchemaError("rational must be a \"p/q\" string");
}

Json to_json(const Vector& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(to_json(x));
    return out;
}

Vector vector_from_json(const Json& j)
{
    if (!j.is_array())
        throw SchemaError("vector must be an array");
    Vector v;
    for (const auto& x : j)
        v.push_back(rational_from_json(x));
    return v;
}

Json to_json(const Matrix& m)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(to_json(m.row(i)));
    return out;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols)
{
    array_of(j, rows, "matrix rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        array_of(j[i], cols, "matrix row");
        for (std::size_t k = 0; k < cols; ++k)
            m.set(i, k, rational_from_json(j[i][k]));
    }
    return m;
}

Json to_json(const Tensor3& t)
{
    const auto& s = t.shape();
    Json out = Json::array();
    for (std::size_t a = 0; a < s[0]; ++a) {
        Json plane = Json::array();
        for (std::size_t b = 0; b < s[1]; ++b) {
            Json row = Json::array();
            for (std::size_t c = 0; c < s[2]; ++c)
                row.push_back(to_json(t(a, b, c)));
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

Tensor3 tensor_from_json(const Json& j, std::size_t n0, std::size_t n1, std::size_t n2)
{
    Tensor3 t(n0, n1, n2);
    array_of(j, n0, "tensor");
    for (std::size_t a = 0; a < n0; ++a) {
        array_of(j[a], n1, "tensor plane");
        for (std::size_t b = 0; b < n1; ++b) {
            array_of(j[a][b], n2, "tensor row");
            for (std::size_t c = 0; c < n2; ++c)
                t(a, b, c) = rational_from_json(j[a][b][c]);
        }
    }
    return t;
}

Json to_json(const DendriformAlgebra& a)
{
    Json out{{"dim", a.dim}, {"prec", to_json(a.prec)}, {"succ", to_json(a.succ)}};
    if (!a.basis_labels.empty())
        out["basis_labels"] = a.basis_labels;
    return out;
}

Json to_json(const AssociativeAlgebra& v) { return Json{{"dim", v.dim}, {"mul", to_json(v.mul)}}; }

DendriformAlgebra dendriform_from_json(const Json& j)
{
    return schema_guard([&] {
        std::size_t d = positive_dim(member(j, "dim", "algebra"), "algebra dim");
        DendriformAlgebra a(d, tensor_from_json(member(j, "prec", "algebra"), d, d, d),
                            tensor_from_json(member(j, "succ", "algebra"), d, d, d));
        if (j.contains("basis_labels")) {
            a.basis_labels = j.at("basis_labels").get<std::vector<std::string>>();
            if (a.basis_labels.size() != d)
                throw SchemaError("basis_labels must have one label per basis vector");
        }
        return a;
    });
}

AssociativeAlgebra associative_from_json(const Json& j)
{
    return schema_guard([&] {
        std::size_t d = positive_dim(member(j, "dim", "algebra"), "algebra dim");
        return AssociativeAlgebra(d, tensor_from_json(member(j, "mul", "algebra"), d, d, d));
    });
}

Json to_json(const DendCochain& f)
{
    Json entries = Json::array();
    const std::size_t n = f.arity();
    std::vector<std::size_t> t(n, 0);
    for (int r = 1; r <= static_cast<int>(n); ++r) {
        std::fill(t.begin(), t.end(), 0);
        std::size_t tuple = 0;
        do {
            for (std::size_t o = 0; o < f.out_dim(); ++o) {
                const Rational& v = f.coeffs()[f.index(r, tuple, o)];
                if (v == 0)
                    continue;
                entries.push_back(Json{{"color", r}, {"inputs", index_list(t, 1)}, {"output", o + 1},
                                       {"value", to_json(v)}});
            }
            ++tuple;
        } while (next_tuple(t, f.in_dim()));
    }
    return Json{{"arity", n}, {"entries", std::move(entries)}};
}

DendCochain cochain_from_json(const Json& j, std::size_t dim)
{
    return schema_guard([&] {
        std::size_t n = size_value(member(j, "arity", "cochain"), "cochain arity");
        if (n == 0)
            throw SchemaError("cochain arity must be at least 1");
        DendCochain f(n, dim, dim);
        std::set<std::size_t> seen;
        for (const auto& e : member(j, "entries", "cochain")) {
            std::size_t r = size_value(member(e, "color", "cochain entry"), "color");
            if (r < 1 || r > n)
                throw SchemaError("cochain color out of range");
            auto inputs = index_list_from_json(member(e, "inputs", "cochain entry"), 1, dim, "cochain input");
            if (inputs.size() != n)
                throw SchemaError("cochain entry has the wrong number of inputs");
            std::size_t out = size_value(member(e, "output", "cochain entry"), "output");
            if (out < 1 || out > dim)
                throw SchemaError("cochain output out of range");
            std::size_t flat = f.index(static_cast<int>(r), f.tuple_index(inputs), out - 1);
            if (!seen.insert(flat).second)
                throw SchemaError("duplicate cochain entry");
            f.coeffs()[flat] = rational_from_json(member(e, "value", "cochain entry"));
        }
        return f;
    });
}

Json to_json(const FiniteGroup& g)
{
    return Json{{"order", g.order()}, {"table", g.table()}};
}

FiniteGroup group_from_json(const Json& j)
{
    return schema_guard([&] {
        std::size_t k = positive_dim(member(j, "order", "group"), "group order");
        const Json& t = array_of(member(j, "table", "group"), k, "group table");
        std::vector<std::vector<std::size_t>> table;
        for (const auto& row : t) {
            array_of(row, k, "group table row");
            std::vector<std::size_t> r;
            for (const auto& x : row) {
                std::size_t v = size_value(x, "group element");
                if (v >= k)
                    throw SchemaError("group table entry out of range");
                r.push_back(v);
            }
            table.push_back(std::move(r));
        }
        try {
            return FiniteGroup(std::move(table));
        } catch (const InvalidGroup& e) {
            throw SchemaError(e.what());
        }
    });
}

// ---------------------------------------------------------------------------

std::size_t WorkspaceDocument::dim() const
{
    if (dendriform)
        return dendriform->dim;
    if (associative)
        return associative->dim;
    return 0;
}

std::optional<DendriformAlgebra> WorkspaceDocument::dendriform_algebra() const
{
    if (dendriform)
        return dendriform;
    if (tensor_truncation)
        return truncated_tensor_dendriform(tensor_truncation->vdim, tensor_truncation->max_degree).algebra;
    return std::nullopt;
}

DendGroupAction WorkspaceDocument::action() const
{
    auto a = dendriform_algebra();
    if (!a)
        throw SchemaError("document has no dendriform algebra");
    if (group)
        return DendGroupAction{*a, *group};
    return DendGroupAction{*a, GroupRepresentation::trivial(FiniteGroup::trivial(), a->dim)};
}

Json to_json(const std::vector<DendCochain>& terms)
{
    Json list = Json::array();
    for (const auto& t : terms)
        list.push_back(to_json(t));
    return Json{{"order", terms.size() - 1}, {"terms", std::move(list)}};
}

Json to_json(const GaugeTransformation& psi)
{
    Json list = Json::array();
    for (const auto& m : psi.maps)
        list.push_back(to_json(m));
    return Json{{"order", psi.order()}, {"maps", std::move(list)}};
}

Json to_json(const WorkspaceDocument& doc)
{
    Json out = Json::object();
    if (doc.dendriform)
        out["algebra"] = to_json(*doc.dendriform);
    else if (doc.associative)
        out["algebra"] = to_json(*doc.associative);
    if (doc.tensor_truncation)
        out["tensor_truncation"] = Json{{"vdim", doc.tensor_truncation->vdim},
                                        {"max_degree", doc.tensor_truncation->max_degree}};
    if (doc.group) {
        out["group"] = to_json(doc.group->group);
        Json mats = Json::object();
        for (std::size_t g = 0; g < doc.group->matrices.size(); ++g)
            mats[std::to_string(g)] = to_json(doc.group->matrices[g]);
        Json action{{"matrices", std::move(mats)}};
        if (!doc.group->generators.empty())
            action["generators"] = doc.group->generators;
        out["action"] = std::move(action);
    }
    if (!doc.subgroups.empty())
        out["subgroups"] = doc.subgroups;
    if (doc.rota_baxter)
        out["rota_baxter"] = operator_json(*doc.rota_baxter);
    if (doc.bimodule)
        out["bimodule"] = Json{{"dim", doc.bimodule->mdim}, {"l", to_json(doc.bimodule->l)},
                               {"r", to_json(doc.bimodule->r)}};
    if (doc.o_operator)
        out["o_operator"] = operator_json(*doc.o_operator);
    if (doc.pseudotwistor && doc.companion)
        out["pseudotwistor"] = Json{{"T", operator_json(*doc.pseudotwistor)}, {"tau", operator_json(*doc.companion)}};
    if (doc.deformation)
        out["deformation"] = to_json(*doc.deformation);
    if (doc.gauge)
        out["gauge"] = to_json(*doc.gauge);
    if (!doc.options.empty())
        out["options"] = doc.options;
    return out;
}

WorkspaceDocument document_from_json(const Json& j)
{
    return schema_guard([&] {
        if (!j.is_object())
            throw SchemaError("document must be a JSON object");
        static const std::set<std::string> known{"algebra", "tensor_truncation", "group", "action",
                                                 "subgroups", "rota_baxter", "bimodule", "o_operator",
                                                 "pseudotwistor", "deformation", "gauge", "options"};
        for (const auto& [key, value] : j.items())
            if (!known.contains(key))
                throw SchemaError("unknown document key \"" + key + "\"");

        WorkspaceDocument doc;
        if (j.contains("tensor_truncation")) {
            const Json& t = j.at("tensor_truncation");
            doc.tensor_truncation = WorkspaceDocument::Truncation{
                positive_dim(member(t, "vdim", "tensor_truncation"), "vdim"),
                positive_dim(member(t, "max_degree", "tensor_truncation"), "max_degree")};
        }
        if (j.contains("algebra")) {
            const Json& a = j.at("algebra");
            bool dend = a.contains("prec") || a.contains("succ");
            if (dend == a.contains("mul"))
                throw SchemaError("algebra needs either prec/succ or mul");
            if (dend)
                doc.dendriform = dendriform_from_json(a);
            else
                doc.associative = associative_from_json(a);
        } else if (doc.tensor_truncation) {
            doc.dendriform = doc.dendriform_algebra();
        } else {
            throw SchemaError("document has no algebra");
        }
        const std::size_t d = doc.dim();

        if (j.contains("group") != j.contains("action"))
            throw SchemaError("group and action must be given together");
        if (j.contains("group")) {
            GroupRepresentation rep;
            rep.group = group_from_json(j.at("group"));
            rep.dim = d;
            const Json& mats = member(j.at("action"), "matrices", "action");
            if (!mats.is_object() || mats.size() != rep.group.order())
                throw SchemaError("action needs one matrix per group element");
            for (std::size_t g = 0; g < rep.group.order(); ++g)
                rep.matrices.push_back(matrix_from_json(member(mats, std::to_string(g).c_str(), "action matrices"), d, d));
            if (j.at("action").contains("generators"))
                rep.generators = index_list_from_json(j.at("action").at("generators"), 0, rep.group.order(),
                                                      "generator");
            doc.group = std::move(rep);
        }
        if (j.contains("subgroups")) {
            if (!doc.group)
                throw SchemaError("subgroups need a group");
            for (const auto& s : j.at("subgroups"))
                doc.subgroups.push_back(index_list_from_json(s, 0, doc.group->group.order(), "subgroup element"));
        }

        auto need_associative = [&](const char* key) -> const AssociativeAlgebra& {
            if (!doc.associative)
                throw SchemaError(std::string(key) + " needs an associative algebra (\"mul\")");
            return *doc.associative;
        };
        if (j.contains("rota_baxter")) {
            need_associative("rota_baxter");
            doc.rota_baxter = operator_from_json(j.at("rota_baxter"), d, d, "rota_baxter");
        }
        if (j.contains("bimodule")) {
            const Json& b = j.at("bimodule");
            AssocBimodule m;
            m.algebra = need_associative("bimodule");
            m.mdim = positive_dim(member(b, "dim", "bimodule"), "bimodule dim");
            m.l = tensor_from_json(member(b, "l", "bimodule"), d, m.mdim, m.mdim);
            m.r = tensor_from_json(member(b, "r", "bimodule"), m.mdim, d, m.mdim);
            doc.bimodule = std::move(m);
        }
        if (j.contains("o_operator")) {
            if (!doc.bimodule)
                throw SchemaError("o_operator needs a bimodule");
            doc.o_operator = operator_from_json(j.at("o_operator"), d, doc.bimodule->mdim, "o_operator");
        }
        if (j.contains("pseudotwistor")) {
            need_associative("pseudotwistor");
            const Json& p = j.at("pseudotwistor");
            doc.pseudotwistor = operator_from_json(member(p, "T", "pseudotwistor"), d * d, d * d, "T");
            doc.companion = operator_from_json(member(p, "tau", "pseudotwistor"), d * d * d, d * d * d, "tau");
        }
        if (j.contains("deformation")) {
            if (!doc.dendriform)
                throw SchemaError("deformation needs a dendriform algebra");
            const Json& def = j.at("deformation");
            std::size_t order = size_value(member(def, "order", "deformation"), "deformation order");
            const Json& terms = array_of(member(def, "terms", "deformation"), order + 1, "deformation terms");
            std::vector<DendCochain> list;
            for (const auto& t : terms) {
                list.push_back(cochain_from_json(t, d));
                if (list.back().arity() != 2)
                    throw SchemaError("deformation terms must have arity 2");
            }
            doc.deformation = std::move(list);
        }
        if (j.contains("gauge")) {
            const Json& g = j.at("gauge");
            std::size_t order = size_value(member(g, "order", "gauge"), "gauge order");
            const Json& maps = array_of(member(g, "maps", "gauge"), order + 1, "gauge maps");
            GaugeTransformation psi;
            for (const auto& m : maps)
                psi.maps.push_back(matrix_from_json(m, d, d));
            doc.gauge = std::move(psi);
        }
        if (j.contains("options")) {
            if (!j.at("options").is_object())
                throw SchemaError("options must be an object");
            doc.options = j.at("options");
        }
        return doc;
    });
}

WorkspaceDocument parse_document(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    return document_from_json(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Reports

Json to_json(const CheckReport& r)
{
    Json violations = Json::array();
    for (const auto& v : r.violations)
        violations.push_back(Json{{"identity", v.identity}, {"inputs", index_list(v.inputs, 1)},
                                  {"residual", to_json(v.residual)}});
    return Json{{"name", r.name}, {"pass", r.pass}, {"violations", std::move(violations)}};
}

Json to_json(const ComplexReport& r)
{
    Json degrees = Json::array();
    for (const auto& d : r.degrees)
        degrees.push_back(Json{{"n", d.n}, {"dim_C", d.dim_C}, {"rank_delta", d.rank_delta},
                               {"dim_Z", d.dim_Z}, {"dim_B", d.dim_B}, {"dim_H", d.dim_H}});
    return Json{{"name", r.name}, {"degrees", std::move(degrees)}, {"checks", checks_json(r.checks)}};
}

Json to_json(const IsomorphismReport& r)
{
    Json degrees = Json::array();
    for (const auto& d : r.degrees)
        degrees.push_back(Json{{"n", d.n},
                               {"dim_H_equivariant", d.dim_H_equivariant},
                               {"dim_H_invariant", d.dim_H_invariant},
                               {"dim_H_full", d.dim_H_full},
                               {"induced_rank", d.induced_rank},
                               {"bijective", d.bijective}});
    return Json{{"equivariant", to_json(r.equivariant)},
                {"invariant_families", to_json(r.bredon.invariant)},
                {"direct_sum", to_json(r.bredon.full)},
                {"witness_count", r.witness_count},
                {"morphism_count", r.morphism_count},
                {"degrees", std::move(degrees)},
                {"checks", checks_json(r.checks)}};
}

Json to_json(const ComparisonReport& r)
{
    Json degrees = Json::array();
    for (const auto& d : r.degrees)
        degrees.push_back(Json{{"n", d.n}, {"dim_H_dend", d.dim_H_dend}, {"dim_H_hochschild", d.dim_H_hochschild},
                               {"induced_rank", d.induced_rank}});
    return Json{{"dend", to_json(r.dend)},
                {"hochschild", to_json(r.hochschild)},
                {"degrees", std::move(degrees)},
                {"checks", checks_json(r.checks)}};
}

Json to_json(const DeformationReport& r)
{
    Json orders = Json::array();
    for (const auto& o : r.orders)
        orders.push_back(Json{{"k", o.k}, {"pass", o.pass}, {"residual", to_json(o.residual)}});
    Json subs = Json::array();
    for (const auto& s : r.subgroups)
        subs.push_back(Json{{"subgroup", s.subgroup}, {"k", s.k}, {"pass", s.pass}});
    auto through = r.valid_through();
    return Json{{"pass", r.pass()},
                {"base_matches", r.base_matches},
                {"terms_equivariant", r.terms_equivariant},
                {"valid_through", through ? Json(*through) : Json(nullptr)},
                {"orders", std::move(orders)},
                {"subgroups", std::move(subs)}};
}

Json to_json(const ObstructionClass& ob)
{
    return Json{{"zero", ob.class_vector.empty()},
                {"is_equivariant", ob.is_equivariant},
                {"is_cocycle", ob.is_cocycle},
                {"class_vector", to_json(ob.class_vector)},
                {"cochain", to_json(ob.cochain)}};
}

// ---------------------------------------------------------------------------

namespace {

void require_bool(const Json& j, const char* key, const char* where)
{
    if (!member(j, key, where).is_boolean())
        throw SchemaError(std::string(where) + ": \"" + key + "\" must be a boolean");
}

void validate_checks(const Json& j)
{
    if (!j.is_object())
        throw SchemaError("checks must be an object");
    for (const auto& [name, value] : j.items())
        if (!value.is_boolean())
            throw SchemaError("check \"" + name + "\" must be a boolean");
}

void validate_complex(const Json& j)
{
    member(j, "name", "complex");
    for (const auto& d : member(j, "degrees", "complex")) {
        std::size_t c = size_value(member(d, "dim_C", "degree"), "dim_C");
        std::size_t z = size_value(member(d, "dim_Z", "degree"), "dim_Z");
        std::size_t b = size_value(member(d, "dim_B", "degree"), "dim_B");
        std::size_t h = size_value(member(d, "dim_H", "degree"), "dim_H");
        size_value(member(d, "n", "degree"), "n");
        size_value(member(d, "rank_delta", "degree"), "rank_delta");
        if (z > c || b > z || h != z - b)
            throw SchemaError("inconsistent degree dimensions");
    }
    validate_checks(member(j, "checks", "complex"));
}

void validate_cochain(const Json& j)
{
    std::size_t dim = 0;
    for (const auto& e : member(j, "entries", "cochain"))
        dim = std::max(dim, size_value(member(e, "output", "cochain entry"), "output"));
    for (const auto& e : j.at("entries"))
        for (const auto& i : member(e, "inputs", "cochain entry"))
            dim = std::max(dim, size_value(i, "input"));
    cochain_from_json(j, std::max<std::size_t>(dim, 1));
}

} // namespace

void validate_report(const Json& report)
{
    schema_guard([&] {
        const Json& cmd = member(report, "command", "report");
        if (!cmd.is_string())
            throw SchemaError("report command must be a string");
        require_bool(report, "pass", "report");
        member(report, "status", "report");
        const std::string c = cmd.get<std::string>();
        if (c == "verify") {
            for (const auto& check : member(report, "checks", "report")) {
                member(check, "name", "check");
                require_bool(check, "pass", "check");
                for (const auto& v : member(check, "violations", "check"))
                    vector_from_json(member(v, "residual", "violation"));
            }
        } else if (c == "cohomology") {
            const Json& r = member(report, "result", "report");
            std::string mode = member(report, "mode", "report").get<std::string>();
            if (mode == "isomorphism") {
                validate_complex(member(r.at("isomorphism"), "equivariant", "isomorphism"));
                validate_complex(member(r.at("isomorphism"), "invariant_families", "isomorphism"));
                validate_checks(member(r.at("isomorphism"), "checks", "isomorphism"));
                validate_complex(member(r.at("comparison"), "dend", "comparison"));
            } else if (mode == "compare") {
                validate_complex(member(r, "dend", "comparison"));
                validate_complex(member(r, "hochschild", "comparison"));
                validate_checks(member(r, "checks", "comparison"));
            } else if (mode == "bredon") {
                validate_complex(member(r, "invariant_families", "bredon"));
                validate_complex(member(r, "direct_sum", "bredon"));
            } else {
                validate_complex(r);
            }
        } else if (c == "deform") {
            if (report.contains("verdict")) {
                const Json& v = report.at("verdict");
                require_bool(v, "pass", "verdict");
                for (const auto& o : member(v, "orders", "verdict"))
                    validate_cochain(member(o, "residual", "order"));
            }
            if (report.contains("obstruction") && !report.at("obstruction").is_null()) {
                vector_from_json(member(report.at("obstruction"), "class_vector", "obstruction"));
                validate_cochain(member(report.at("obstruction"), "cochain", "obstruction"));
            }
            if (report.contains("document"))
                document_from_json(report.at("document"));
        } else {
            throw SchemaError("unknown report command \"" + c + "\"");
        }
        return 0;
    });
}

} // namespace dendra
