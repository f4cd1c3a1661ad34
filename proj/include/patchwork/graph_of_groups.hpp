#pragma once

#include <patchwork/group.hpp>
#include <patchwork/presentation.hpp>
#include <patchwork/reduction_graph.hpp>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace patchwork {

enum class EdgeMapMode {
    strict,      ///< every edge map must be injective
    permissive,  ///< non-injective edge maps accepted
};

/**
 * Finite groups on the vertices and edges of a reduction graph. Every edge
 * carries two homomorphisms from its group, into the group at its point end
 * and into the group at its component end.
 */
class GraphOfGroups
{
public:
    GraphOfGroups(ReductionGraph graph, std::vector<GroupPtr> vertex_groups, std::vector<GroupPtr> edge_groups,
        std::vector<GroupHom> to_point, std::vector<GroupHom> to_component, EdgeMapMode mode = EdgeMapMode::strict);

    /// All vertex and edge groups trivial.
    static GraphOfGroups trivial(ReductionGraph graph);

    auto graph() const -> const ReductionGraph & { return graph_; }
    auto vertex_group(std::size_t v) const -> const GroupPtr & { return vertex_groups_.at(v); }
    auto edge_group(std::size_t e) const -> const GroupPtr & { return edge_groups_.at(e); }
    auto to_point(std::size_t e) const -> const GroupHom & { return to_point_.at(e); }
    auto to_component(std::size_t e) const -> const GroupHom & { return to_component_.at(e); }
    auto mode() const -> EdgeMapMode { return mode_; }

private:
    ReductionGraph graph_;
    std::vector<GroupPtr> vertex_groups_;
    std::vector<GroupPtr> edge_groups_;
    std::vector<GroupHom> to_point_;
    std::vector<GroupHom> to_component_;
    EdgeMapMode mode_;
};

/// Vertex-group elements as generators, one letter per edge, with the group
/// tables, conjugation relations along edges, and trivialised tree letters as
/// relators.
struct VanKampenPresentation
{
    Presentation presentation;
    SpanningTree tree;
    std::vector<std::size_t> vertex_offset;  ///< generator index of element 0 of each vertex group
    std::vector<std::size_t> edge_letter;    ///< generator index of each edge letter
};

auto build_presentation(const GraphOfGroups & gog, const SpanningTree & tree) -> VanKampenPresentation;

/// Homomorphisms from every vertex group into a test group, plus one
/// conjugating element per edge.
struct HomFamily
{
    std::vector<std::vector<Element>> vertex_maps;
    std::vector<Element> conjugators;

    friend auto operator<=>(const HomFamily &, const HomFamily &) = default;
};

/// f_U(alpha_U(g)) == c f_P(alpha_P(g)) c^-1 for every edge and edge element.
auto satisfies_edge_relations(const GraphOfGroups & gog, const FiniteGroup & G, const HomFamily & family) -> bool;

/// Homomorphisms from the presented fundamental group into G, ordered by
/// generator-image tuple. Tree-edge conjugators are the identity.
auto enumerate_pi1_homs(const GraphOfGroups & gog, const SpanningTree & tree, const FiniteGroup & G)
    -> std::vector<HomFamily>;

/// Families of vertex homomorphisms that agree exactly along every edge
/// (all conjugators trivial). Computed from per-vertex hom sets, without the
/// presentation.
auto naive_limit_homs(const GraphOfGroups & gog, const GroupPtr & G) -> std::vector<HomFamily>;

/// Number of orbits of simultaneous conjugation by G on the families.
auto count_conjugacy_classes(const std::vector<HomFamily> & families, const FiniteGroup & G) -> std::size_t;

struct TreeVanKampenReport
{
    bool graph_is_tree;
    std::size_t pi1_homs;
    std::size_t naive_homs;
    std::size_t pi1_conjugacy_classes;
    bool restriction_lands_in_limit;  ///< forgetting edge letters gives exact agreement
    bool restriction_injective;
    bool restriction_surjective;
    /// set when restriction is not a bijection: a presentation hom with a
    /// nontrivial edge letter, and (if any) another hom with the same vertex maps
    std::optional<HomFamily> witness;
    std::optional<HomFamily> witness_partner;

    auto bijection() const -> bool
    {
        return restriction_lands_in_limit && restriction_injective && restriction_surjective;
    }
    /// A tree graph must give a bijection.
    auto consistent() const -> bool { return ! graph_is_tree || bijection(); }
};

auto verify_tree_vankampen(const GraphOfGroups & gog, const GroupPtr & G) -> TreeVanKampenReport;

struct TreeIndependenceReport
{
    std::vector<SpanningTree> trees;
    std::vector<std::size_t> counts;

    auto independent() const -> bool;
};

auto verify_tree_independence(const GraphOfGroups & gog, const FiniteGroup & G) -> TreeIndependenceReport;

} // namespace patchwork
