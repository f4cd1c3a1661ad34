#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace patchwork {

enum class VertexKind { point, component };

struct VertexSpec
{
    std::string label;
    VertexKind kind;
};

struct EdgeSpec
{
    std::string label;
    std::array<std::string, 2> ends;
};

/// Raw, unvalidated description of a reduction graph.
struct GraphSpec
{
    std::vector<VertexSpec> vertices;
    std::vector<EdgeSpec> edges;
};

struct ValidationReport
{
    std::vector<std::string> problems;

    auto ok() const -> bool { return problems.empty(); }
};

/// Lists every violated invariant; never throws.
auto validate(const GraphSpec & spec) -> ValidationReport;

/**
 * Connected bipartite multigraph on point vertices and component vertices,
 * one edge per branch. Only valid graphs can be constructed.
 *
 * Canonical order: vertices and edges are ordered as declared. Each edge is
 * stored with its point end and its component end resolved.
 */
class ReductionGraph
{
public:
    struct Edge
    {
        std::string label;
        std::size_t point;
        std::size_t component;
    };

    /// Throws Error carrying the validation problems if the spec is invalid.
    explicit ReductionGraph(GraphSpec spec);

    auto vertex_count() const -> std::size_t { return vertices_.size(); }
    auto edge_count() const -> std::size_t { return edges_.size(); }
    auto vertex(std::size_t v) const -> const VertexSpec & { return vertices_.at(v); }
    auto edge(std::size_t e) const -> const Edge & { return edges_.at(e); }
    auto vertices() const -> const std::vector<VertexSpec> & { return vertices_; }
    auto edges() const -> const std::vector<Edge> & { return edges_; }

    /// Edges incident to v, in edge order.
    auto incident(std::size_t v) const -> const std::vector<std::size_t> & { return incident_.at(v); }
    auto other_end(std::size_t e, std::size_t v) const -> std::size_t;

    auto vertex_index(const std::string & label) const -> std::optional<std::size_t>;
    auto edge_index(const std::string & label) const -> std::optional<std::size_t>;

    auto spec() const -> GraphSpec;

private:
    std::vector<VertexSpec> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
};

/// A set of edges spanning every vertex without cycles.
class SpanningTree
{
public:
    /// Throws unless `edges` forms a spanning tree of `graph`.
    SpanningTree(const ReductionGraph & graph, std::vector<std::size_t> edges);

    auto edges() const -> const std::vector<std::size_t> & { return edges_; }
    auto contains(std::size_t e) const -> bool { return member_.at(e); }
    auto non_tree_edges() const -> std::vector<std::size_t>;

    friend auto operator==(const SpanningTree & a, const SpanningTree & b) -> bool { return a.edges_ == b.edges_; }

private:
    std::vector<std::size_t> edges_;
    std::vector<bool> member_;
};

auto is_tree(const ReductionGraph & graph) -> bool;
auto cycle_rank(const ReductionGraph & graph) -> std::size_t;

/// Grows a tree from vertex 0, always adding the least-indexed edge that
/// reaches a new vertex.
auto maximal_tree(const ReductionGraph & graph) -> SpanningTree;

/// Every spanning tree, ordered lexicographically by sorted edge indices.
auto all_spanning_trees(const ReductionGraph & graph) -> std::vector<SpanningTree>;

/// Degree-n cover: permutation of sheets for every edge (sheet i over the
/// point end joins sheet perm[i] over the component end). Tree edges carry
/// the identity.
struct GraphCover
{
    std::size_t degree;
    std::vector<std::vector<std::uint8_t>> edge_perms;

    auto total_space(const ReductionGraph & base) const -> GraphSpec;
    auto is_connected() const -> bool;

    friend auto operator==(const GraphCover &, const GraphCover &) -> bool = default;
};

/// One representative per isomorphism class of connected degree-n covers,
/// relative to the given spanning tree. Classes are taken up to simultaneous
/// relabelling of sheets; each representative is the lexicographically least
/// tuple of non-tree permutations in its class.
auto enumerate_connected_covers(const ReductionGraph & graph, std::size_t degree, const SpanningTree & tree)
    -> std::vector<GraphCover>;
auto enumerate_connected_covers(const ReductionGraph & graph, std::size_t degree) -> std::vector<GraphCover>;

struct IndexBound
{
    std::uint64_t product;  ///< proved divisibility bound
    std::uint64_t lcm;      ///< conjectural sharp value
};

/// Throws on a nonpositive index or on 64-bit overflow.
auto index_bound(const std::map<std::string, long long> & local_indices) -> IndexBound;

/// DOT text: point vertices as boxes, component vertices as ellipses; when a
/// tree is given, tree edges are solid and the rest dashed.
auto export_dot(const ReductionGraph & graph, const SpanningTree * tree = nullptr) -> std::string;

} // namespace patchwork
