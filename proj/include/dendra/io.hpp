#pragma once

#include "dendra/deformation.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dendra {

using Json = nlohmann::ordered_json;

// Scalars, matrices and tensors. Readers throw SchemaError.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const Vector& v);
Vector vector_from_json(const Json& j);
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);
Json to_json(const Tensor3& t);
Tensor3 tensor_from_json(const Json& j, std::size_t n0, std::size_t n1, std::size_t n2);

Json to_json(const DendriformAlgebra& a);
Json to_json(const AssociativeAlgebra& v);
DendriformAlgebra dendriform_from_json(const Json& j);
AssociativeAlgebra associative_from_json(const Json& j);

/// Sparse entries with 1-based colors, inputs and outputs.
Json to_json(const DendCochain& f);
DendCochain cochain_from_json(const Json& j, std::size_t dim);

Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

/// One self-contained input. An algebra is either dendriform or associative;
/// a tensor truncation generates its dendriform algebra.
struct WorkspaceDocument
{
    std::optional<DendriformAlgebra> dendriform;
    std::optional<AssociativeAlgebra> associative;
    struct Truncation
    {
        std::size_t vdim = 1;
        std::size_t max_degree = 1;
    };
    std::optional<Truncation> tensor_truncation;
    std::optional<GroupRepresentation> group; // group, action matrices, generators
    std::vector<Subgroup> subgroups;
    std::optional<LinearOperator> rota_baxter;
    std::optional<AssocBimodule> bimodule;
    std::optional<LinearOperator> o_operator;
    std::optional<LinearOperator> pseudotwistor;
    std::optional<LinearOperator> companion;
    std::optional<std::vector<DendCochain>> deformation;
    std::optional<GaugeTransformation> gauge;
    Json options = Json::object(); // free-form: caps, defaults, notes

    std::size_t dim() const;
    /// The dendriform algebra, generating it from a truncation if needed.
    std::optional<DendriformAlgebra> dendriform_algebra() const;
    /// The action on the dendriform algebra; the trivial group when none is given.
    DendGroupAction action() const;
};

Json to_json(const WorkspaceDocument& doc);
WorkspaceDocument document_from_json(const Json& j);
WorkspaceDocument parse_document(const std::string& text);
/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

// Reports
Json to_json(const CheckReport& r);
Json to_json(const ComplexReport& r);
Json to_json(const IsomorphismReport& r);
Json to_json(const ComparisonReport& r);
Json to_json(const DeformationReport& r);
Json to_json(const ObstructionClass& ob);
Json to_json(const std::vector<DendCochain>& deformation_terms);
Json to_json(const GaugeTransformation& psi);

/// Structural validation of an emitted CLI report. Throws SchemaError.
void validate_report(const Json& report);

} // namespace dendra
