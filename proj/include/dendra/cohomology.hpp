#pragma once

#include "dendra/equivariance.hpp"
#include "dendra/operad.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace dendra {

/// Refusal threshold for a single differential, in rows x cols.
inline constexpr std::size_t kComplexEntryLimit = 50'000'000;

struct NamedCheck
{
    std::string name;
    bool pass = true;
};

/// Cocycles and coboundaries are held in the ambient flattened cochain space
/// of their degree.
struct DegreeReport
{
    std::size_t n = 0;
    std::size_t dim_C = 0;
    std::size_t rank_delta = 0;
    std::size_t dim_Z = 0;
    std::size_t dim_B = 0;
    std::size_t dim_H = 0;
    Subspace cochains;
    Subspace cocycles;
    Subspace coboundaries;
};

struct ComplexReport
{
    std::string name;
    std::vector<DegreeReport> degrees;
    std::vector<NamedCheck> checks;

    bool ok() const;
    const DegreeReport& at(std::size_t n) const;
    void check(std::string name, bool pass) { checks.push_back({std::move(name), pass}); }
};

/// Everything needed to describe a (sub)complex degree by degree.
struct ComplexSpec
{
    std::string name;
    std::size_t first = 1;
    std::size_t last = 1;
    std::function<std::size_t(std::size_t)> ambient_dim;
    /// Cochain subspace in degree n; full space when unset.
    std::function<Subspace(std::size_t)> space;
    std::function<Matrix(std::size_t)> differential;
    /// Whether to assert that delta maps each cochain subspace into the next.
    bool check_closure = false;
    std::size_t max_entries = kComplexEntryLimit;
};

ComplexReport compute_complex(const ComplexSpec& spec);

ComplexReport dend_cohomology(const DendRepresentation& rep, std::size_t n_max,
                              std::size_t max_entries = kComplexEntryLimit);

/// Degrees 0..n_max. With a representation, cochains are restricted to the
/// equivariant ones and degree 0 is the fixed subspace.
ComplexReport hochschild_cohomology(const AssociativeAlgebra& v, const GroupRepresentation* rep, std::size_t n_max,
                                    std::size_t max_entries = kComplexEntryLimit);

ComplexReport equivariant_dend_cohomology(const DendGroupAction& act, std::size_t n_max,
                                          std::size_t max_entries = kComplexEntryLimit);

/// Block layout of the direct sum over subgroups.
struct BredonLayout
{
    std::vector<std::size_t> block_dims; // dim A^H per object
    std::size_t offset(std::size_t object, std::size_t n) const;
    std::size_t total(std::size_t n) const;
};

struct BredonComplex
{
    BredonLayout layout;
    ComplexReport full;
    ComplexReport invariant;
};

/// Rows: every (morphism, color, tuple, output) relation
/// c_H(r; P b_1, ..., P b_n) - P c_K(r; b_1, ..., b_n) = 0.
Matrix invariance_constraints(const OGDendriformAlgebra& og, std::size_t n);
Matrix bredon_differential(const OGDendriformAlgebra& og, std::size_t n);
BredonComplex bredon_complex(const OGDendriformAlgebra& og, std::size_t n_max,
                             std::size_t max_entries = kComplexEntryLimit);

/// alpha -> {alpha restricted to each A^H}.
Matrix restriction_to_blocks(const OGDendriformAlgebra& og, std::size_t n);
/// The component at the trivial subgroup.
Matrix trivial_block_projection(const OGDendriformAlgebra& og, std::size_t n);

/// Rank of the map on cohomology induced by `map`, between the quotients
/// z_src / b_src and z_dst / b_dst.
std::size_t induced_rank(const Matrix& map, const DegreeReport& src, const DegreeReport& dst);

struct IsomorphismDegree
{
    std::size_t n = 0;
    std::size_t dim_H_equivariant = 0;
    std::size_t dim_H_invariant = 0;
    std::size_t dim_H_full = 0; // whole direct sum, reported for transparency only
    std::size_t induced_rank = 0;
    bool bijective = false;
};

struct IsomorphismReport
{
    ComplexReport equivariant;
    BredonComplex bredon;
    std::vector<IsomorphismDegree> degrees;
    std::vector<NamedCheck> checks;
    std::size_t witness_count = 0;
    std::size_t morphism_count = 0;

    bool ok() const;
};

IsomorphismReport verify_bredon_isomorphism(const DendGroupAction& act, std::size_t n_max,
                                            std::size_t max_entries = kComplexEntryLimit);

struct ComparisonDegree
{
    std::size_t n = 0;
    std::size_t dim_H_dend = 0;
    std::size_t dim_H_hochschild = 0;
    std::size_t induced_rank = 0;
};

struct ComparisonReport
{
    ComplexReport dend;
    ComplexReport hochschild;
    std::vector<ComparisonDegree> degrees;
    std::vector<NamedCheck> checks;

    bool ok() const;
};

ComparisonReport induced_comparison(const DendGroupAction& act, std::size_t n_max,
                                    std::size_t max_entries = kComplexEntryLimit);

} // namespace dendra
