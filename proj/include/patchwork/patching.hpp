#pragma once

#include <patchwork/graph_of_groups.hpp>
#include <patchwork/torsor.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace patchwork {

/// Objects are the edges at v (in incident order, the first being the base);
/// vertex group is the group at v.
auto vertex_groupoid(const GraphOfGroups & gog, std::size_t v) -> ModelGroupoid;

/// Position of edge e among the edges at v.
auto branch_position(const ReductionGraph & graph, std::size_t v, std::size_t e) -> std::size_t;

/// A functor on every vertex groupoid, recorded by its base hom and the
/// transports of the connecting arrows.
struct LocalFamily
{
    std::vector<std::vector<Element>> on_base;
    std::vector<std::vector<Element>> transports;

    friend auto operator<=>(const LocalFamily &, const LocalFamily &) = default;
};

/// Do the vertex functors at both ends of every edge agree on that edge's
/// automorphisms?
auto agrees_on_branches(const GraphOfGroups & gog, const FiniteGroup & G, const LocalFamily & family) -> bool;

/// The fiber product: all vertex-functor families agreeing on every branch.
/// Enumerated from the vertex groupoids alone.
auto fiber_product_families(const GraphOfGroups & gog, const GroupPtr & G) -> std::vector<LocalFamily>;

/**
 * A functor on the global groupoid (objects = all edges, base object edge 0),
 * recorded as a hom from the presented fundamental group for some spanning
 * tree plus the G-value of the connecting arrow to every edge.
 */
struct GlobalFunctor
{
    HomFamily pi1;
    std::vector<Element> transports;

    friend auto operator<=>(const GlobalFunctor &, const GlobalFunctor &) = default;
};

/// Restriction of a global functor to the vertex groupoids.
auto restrict_to_vertices(const GraphOfGroups & gog, const FiniteGroup & G, const GlobalFunctor & global) -> LocalFamily;

/// Inverse of restrict_to_vertices for the given tree; nullopt when the family
/// is not in the image.
auto glue_from_vertices(const GraphOfGroups & gog, const SpanningTree & tree, const FiniteGroup & G,
    const LocalFamily & family) -> std::optional<GlobalFunctor>;

struct PushoutReport
{
    std::size_t fiber_product_count;   ///< families enumerated from the vertex groupoids
    std::size_t pi1_homs;              ///< homs from the presented group
    std::size_t transport_factor;      ///< |G|^(edges - 1)
    std::size_t global_functor_count;  ///< pi1_homs * transport_factor
    bool lands_in_fiber_product;
    bool injective;
    bool surjective;
    std::size_t base_object_count;     ///< fiber-product families per transport choice

    auto bijection() const -> bool { return lands_in_fiber_product && injective && surjective; }
    auto agrees_with_presentation() const -> bool { return base_object_count == pi1_homs; }
};

auto verify_groupoid_pushout(const GraphOfGroups & gog, const GroupPtr & G, const SpanningTree & tree)
    -> PushoutReport;
auto verify_groupoid_pushout(const GraphOfGroups & gog, const GroupPtr & G) -> PushoutReport;

/// Global multipointed torsor on carrier G: left action of the fundamental
/// group through `action`, one point per edge.
struct GlobalTorsor
{
    HomFamily action;
    std::vector<CarrierPoint> points;
};

auto global_torsor_from_functor(const FiniteGroup & G, const GlobalFunctor & f) -> GlobalTorsor;
auto global_torsor_morphism(const FiniteGroup & G, const GlobalTorsor & a, const GlobalTorsor & b)
    -> std::optional<Element>;

/// Restriction of a global torsor to each vertex: the vertex group acts via
/// its component of the action; points at point-vertices are the global
/// points, points at component-vertices are moved by the edge letter.
auto restrict_global_torsor(const GraphOfGroups & gog, const GroupPtr & G, const GlobalTorsor & t)
    -> std::vector<MultipointedTorsor>;

/// Restriction of each vertex torsor to every edge, one single-pointed torsor
/// per (edge, side).
struct BranchRestrictions
{
    std::vector<MultipointedTorsor> point_side;
    std::vector<MultipointedTorsor> component_side;
};

auto restrict_to_branches(const GraphOfGroups & gog, const std::vector<MultipointedTorsor> & vertex_torsors)
    -> BranchRestrictions;

struct SetoidReport
{
    std::size_t global_classes;
    std::size_t fiber_classes;
    std::size_t transport_factor;
    bool restriction_lands;     ///< every restriction is a compatible family
    bool fully_faithful;        ///< isomorphic images only from isomorphic sources
    bool essentially_surjective;

    auto equivalence() const -> bool { return restriction_lands && fully_faithful && essentially_surjective; }
    auto normalized_global() const -> std::size_t { return global_classes / transport_factor; }
    auto normalized_fiber() const -> std::size_t { return fiber_classes / transport_factor; }
};

auto verify_setoid_equivalence(const GraphOfGroups & gog, const GroupPtr & G) -> SetoidReport;

/// Local torsor data over a graph of groups: one multipointed torsor per
/// vertex (points indexed by the edges at it) and one pointed torsor per edge.
struct PatchingProblem
{
    const GraphOfGroups * gog;
    GroupPtr G;
    std::vector<MultipointedTorsor> vertex_data;
    std::vector<MultipointedTorsor> branch_data;
};

struct PatchingSolution
{
    GlobalTorsor global;
    GlobalFunctor functor;
    std::vector<TorsorMorphism> vertex_isos;  ///< restriction of global -> vertex datum
};

/// Throws Error naming the offending edge when the data are incompatible.
auto solve_patching(const PatchingProblem & problem, const SpanningTree & tree) -> PatchingSolution;
auto solve_patching(const PatchingProblem & problem) -> PatchingSolution;

/// Vertex and branch data induced by a global torsor.
auto problem_from_global(const GraphOfGroups & gog, const GroupPtr & G, const GlobalTorsor & t) -> PatchingProblem;

} // namespace patchwork
