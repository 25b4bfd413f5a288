#pragma once

#include "dendra/cohomology.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dendra {

/// pi_0 + pi_1 t + ... + pi_N t^N, all terms arity-2 cochains on A.
struct FormalDeformation
{
    DendGroupAction action;
    std::vector<DendCochain> terms;
    bool equivariant = true;

    std::size_t order() const { return terms.size() - 1; }
    /// pi_A followed by N zero terms.
    static FormalDeformation constant(const DendGroupAction& act, std::size_t order);
    /// The first order + 1 terms.
    FormalDeformation truncated(std::size_t order) const;
};

/// Psi_t = id + psi_1 t + ... + psi_N t^N.
struct GaugeTransformation
{
    std::vector<Matrix> maps; // maps[0] is the identity

    std::size_t order() const { return maps.size() - 1; }
    static GaugeTransformation identity(std::size_t dim, std::size_t order);
    /// The formal inverse series truncated at t^order.
    GaugeTransformation inverse(std::size_t order) const;
};

/// Cohomology data reused across deformation computations.
struct DeformationContext
{
    DendGroupAction action;
    DendCochain pi;
    ComplexReport complex; // equivariant, degrees 1..3
    Matrix bracket2;       // [pi, -] on arity 2
    Quotient h3;

    static std::shared_ptr<const DeformationContext> build(const DendGroupAction& act,
                                                           std::size_t max_entries = kComplexEntryLimit);
};

struct OrderVerdict
{
    std::size_t k = 0;
    bool pass = false;
    DendCochain residual; // sum_{i+j=k} pi_i o pi_j
};

struct SubgroupVerdict
{
    Subgroup subgroup;
    std::size_t k = 0;
    bool pass = false;
};

struct DeformationReport
{
    bool base_matches = false;
    std::vector<OrderVerdict> orders;
    bool terms_equivariant = true;
    std::vector<SubgroupVerdict> subgroups;

    bool pass() const;
    /// Highest k such that every order up to k passes, or nullopt when order 0 fails.
    std::optional<std::size_t> valid_through() const;
};

DeformationReport check_deformation(const FormalDeformation& def);

struct Infinitesimal
{
    DendCochain cochain;
    bool bracket_closed = false;  // [pi, pi_1] = 0
    bool coboundary_closed = false; // delta pi_1 = 0
};

/// Throws NotADeformation unless orders 0 and 1 hold.
Infinitesimal infinitesimal(const FormalDeformation& def);

/// pi' with Psi_t o pi'_t = pi_t o (Psi_t x Psi_t) modulo t^{N+1}.
FormalDeformation apply_gauge(const FormalDeformation& def, const GaugeTransformation& psi);

struct CohomologousReport
{
    DendCochain difference; // pi_1 - pi'_1
    Vector witness;         // an equivariant 1-cochain x with delta x = difference
    bool gauge_relation = true; // def2 equals apply_gauge(def1, psi) when psi is given
    bool matches_gauge = true;  // difference = -delta psi_1 when psi is given
};

/// Throws NotEquivalent when the difference of the infinitesimals is not an
/// equivariant coboundary.
CohomologousReport infinitesimals_cohomologous(const FormalDeformation& def1, const FormalDeformation& def2,
                                              const GaugeTransformation* psi = nullptr,
                                              std::shared_ptr<const DeformationContext> ctx = nullptr);

struct ObstructionClass
{
    DendCochain cochain;
    bool is_equivariant = false;
    bool is_cocycle = false;
    Vector class_vector; // coordinates in H^3_G; empty when the class is zero
};

/// -sum_{p+q=n+1, p,q>=1} pi_p o pi_q for a deformation of order n.
ObstructionClass obstruction(const FormalDeformation& def, std::shared_ptr<const DeformationContext> ctx = nullptr);

struct ExtensionResult
{
    bool extended = false;
    FormalDeformation deformation; // order n+1 when extended, the input otherwise
    ObstructionClass obstruction;
};

/// Solves [pi, pi_{n+1}] = Ob inside the equivariant 2-cochains.
ExtensionResult extend(const FormalDeformation& def, std::shared_ptr<const DeformationContext> ctx = nullptr);

struct RigidityReport
{
    bool rigid = false;
    std::size_t dim_H2 = 0;
    std::string verdict; // "RIGID" or "INCONCLUSIVE"
};

RigidityReport rigidity_report(const DendGroupAction& act, std::shared_ptr<const DeformationContext> ctx = nullptr);

inline constexpr std::size_t kDeformationOrderCap = 6;

struct CocycleDeformationResult
{
    FormalDeformation deformation;
    bool complete = false;
    std::optional<std::size_t> failed_order;
    std::optional<ObstructionClass> obstruction;
};

/// pi_1 = z, then extend until the order cap or an obstruction.
CocycleDeformationResult cocycle_to_deformation(const DendGroupAction& act, const DendCochain& z,
                                                std::size_t order_cap = kDeformationOrderCap,
                                                std::shared_ptr<const DeformationContext> ctx = nullptr);

} // namespace dendra
