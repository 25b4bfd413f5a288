#pragma once

#include "dendra/io.hpp"

#include <string>
#include <vector>

namespace dendra::catalog {

/// e < e = e, e > e = 0
DendriformAlgebra e1();
/// Two orthogonal copies of e1.
DendriformAlgebra e2();
/// K[x]/x^2 on the basis (1, x).
AssociativeAlgebra dual_numbers();
/// The weight-zero Rota-Baxter operator 1 -> x, x -> 0.
LinearOperator dual_numbers_rb();
DendriformAlgebra rb_induced();

Matrix permutation_matrix(const std::vector<std::size_t>& image);
/// Z/2 exchanging the two copies in e2().
DendGroupAction e2_swap();
/// S3 permuting the three idempotent lines of e1 (+) e1 (+) e1.
DendGroupAction s3_permutation();
/// Z/2 acting on rb_induced() by 1 -> -1, x -> x.
DendGroupAction rb_sign();

std::vector<std::string> example_names();
/// Throws SchemaError for an unknown name.
WorkspaceDocument example_document(const std::string& name);

} // namespace dendra::catalog
