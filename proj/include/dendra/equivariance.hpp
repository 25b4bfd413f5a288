#pragma once

#include "dendra/algebra.hpp"
#include "dendra/operad.hpp"

#include <cstddef>
#include <vector>

namespace dendra {

/// A finite group given by its Cayley table; element 0 is the identity.
class FiniteGroup
{
public:
    FiniteGroup() : FiniteGroup(std::vector<std::vector<std::size_t>>{{0}}) {}
    /// Validates closure, associativity, the identity at index 0 and inverses.
    explicit FiniteGroup(std::vector<std::vector<std::size_t>> table);

    static FiniteGroup trivial() { return FiniteGroup(); }
    static FiniteGroup cyclic(std::size_t n);
    /// Permutations of {0,1,2} listed lexicographically by their image arrays.
    static FiniteGroup symmetric3();
    /// Image array of element g of symmetric3().
    static std::vector<std::size_t> symmetric3_permutation(std::size_t g);

    std::size_t order() const { return table_.size(); }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

private:
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
};

struct GroupRepresentation
{
    FiniteGroup group;
    std::size_t dim = 0;
    std::vector<Matrix> matrices; // one d x d matrix per element
    /// Elements whose constraints suffice; empty means every element.
    std::vector<std::size_t> generators;

    static GroupRepresentation trivial(const FiniteGroup& g, std::size_t d);
    /// Generators if given, otherwise all elements.
    std::vector<std::size_t> constraint_elements() const;
};

CheckReport check_group_representation(const GroupRepresentation& rep);

struct DendGroupAction
{
    DendriformAlgebra algebra;
    GroupRepresentation rep;

    const FiniteGroup& group() const { return rep.group; }
    const Matrix& matrix(std::size_t g) const { return rep.matrices.at(g); }
};

/// Representation laws, invertibility and the automorphism conditions
/// g(a < b) = ga < gb, g(a > b) = ga > gb on basis pairs.
CheckReport check_action(const DendGroupAction& act);

/// Sorted element indices.
using Subgroup = std::vector<std::size_t>;

inline constexpr std::size_t kSubgroupGroupLimit = 24;

bool is_subgroup(const FiniteGroup& g, const Subgroup& h);
/// All subgroups, sorted by (order, elements).
std::vector<Subgroup> subgroups(const FiniteGroup& g, std::size_t order_cap = kSubgroupGroupLimit);

/// A^H as the column span of `embedding` (d x k) with its induced products.
struct FixedSubalgebra
{
    Subgroup subgroup;
    Subspace space;
    Matrix embedding;
    DendriformAlgebra algebra;
};

/// Common fixed space of the given matrices, as a canonical subspace.
Subspace fixed_space(std::span<const Matrix> matrices, std::size_t dim);
FixedSubalgebra fixed_subalgebra(const DendGroupAction& act, const Subgroup& h);

/// f restricted to A^H in the fixed basis. Throws ExpressionFailure if some
/// value on fixed inputs leaves A^H.
DendCochain restrict_cochain(const DendCochain& f, const FixedSubalgebra& h);

/// All g with g^{-1} H g inside K.
std::vector<std::size_t> subconjugacy_witnesses(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

/// psi_g : A^K -> A^H in the fixed bases (k_H x k_K).
Matrix restriction_map(const DendGroupAction& act, const FixedSubalgebra& h, const FixedSubalgebra& k,
                       std::size_t g);

struct OrbitMorphism
{
    std::size_t source = 0; // index of H
    std::size_t target = 0; // index of K
    /// Every witness g inducing this map; the first is the representative.
    std::vector<std::size_t> witnesses;
    Matrix map; // A^K -> A^H
};

/// The functor G/H -> A^H on the orbit category.
struct OGDendriformAlgebra
{
    DendGroupAction action;
    std::vector<FixedSubalgebra> objects; // parallel to the subgroup list
    std::vector<OrbitMorphism> morphisms; // witnesses with equal maps merged
    std::size_t witness_count = 0;
    CheckReport functoriality;
};

/// Uses act.group()'s full subgroup lattice unless `lattice` is nonempty.
OGDendriformAlgebra build_og_algebra(const DendGroupAction& act, std::vector<Subgroup> lattice = {});

/// Stacked constraints f(g a_1, ..., g a_n) - g f(a_1, ..., a_n) for each
/// constraint element g, on cochains laid out as `colors` blocks of
/// (tuple, output). colors = n gives dendriform cochains, colors = 1 gives
/// Hom-cochains; arity 0 yields the constraints of the fixed vectors.
Matrix equivariance_constraints(const GroupRepresentation& rep, std::size_t arity, std::size_t colors);

Subspace equivariant_cochain_subspace(const DendGroupAction& act, std::size_t arity);
Subspace equivariant_hom_subspace(const GroupRepresentation& rep, std::size_t arity);

} // namespace dendra
