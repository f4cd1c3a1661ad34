#pragma once

#include <patchwork/graph_of_groups.hpp>

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using namespace patchwork;

inline auto graph(const std::vector<std::string> & points, const std::vector<std::string> & components,
    const std::vector<std::pair<std::string, std::string>> & edges) -> ReductionGraph
{
    GraphSpec s;
    for (auto & p : points)
        s.vertices.push_back({p, VertexKind::point});
    for (auto & u : components)
        s.vertices.push_back({u, VertexKind::component});
    for (std::size_t i = 0; i < edges.size(); ++i)
        s.edges.push_back({"b" + std::to_string(i + 1), {edges[i].first, edges[i].second}});
    return ReductionGraph(s);
}

/// one point, one component, two edges
inline auto circle() -> ReductionGraph { return graph({"P"}, {"U"}, {{"P", "U"}, {"P", "U"}}); }

/// one point, one component, three edges
inline auto theta() -> ReductionGraph { return graph({"P"}, {"U"}, {{"P", "U"}, {"P", "U"}, {"P", "U"}}); }

/// one point, one component, one edge
inline auto segment() -> ReductionGraph { return graph({"P"}, {"U"}, {{"P", "U"}}); }

inline auto Z(std::size_t n) -> GroupPtr { return share(FiniteGroup::cyclic(n)); }
inline auto S(std::size_t n) -> GroupPtr { return share(FiniteGroup::symmetric(n)); }
inline auto one() -> GroupPtr { return share(FiniteGroup::trivial()); }

/// Two vertex groups glued along trivial edge groups on the segment.
inline auto amalgam(GroupPtr point_group, GroupPtr component_group) -> GraphOfGroups
{
    auto g = segment();
    auto e = one();
    return GraphOfGroups(g, {point_group, component_group}, {e},
        {GroupHom::trivial(e, point_group)}, {GroupHom::trivial(e, component_group)});
}

inline auto injective_homs(const GroupPtr & source, const GroupPtr & target) -> std::vector<GroupHom>
{
    std::vector<GroupHom> out;
    for (auto & h : all_homs(source, target))
        if (h.is_injective())
            out.push_back(h);
    return out;
}

/// Vertex groups of order <= 8.
inline auto vertex_pool() -> std::vector<GroupPtr>
{
    return {one(), Z(2), Z(3), Z(4), share(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))),
        S(3), Z(6), share(FiniteGroup::dihedral(4)), Z(8)};
}

/// Edge groups of order <= 4.
inline auto edge_pool() -> std::vector<GroupPtr>
{
    return {one(), Z(2), Z(3), Z(4), share(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)))};
}

struct RandomShape
{
    std::size_t max_vertices = 4;
    std::size_t extra_edges = 0;  ///< edges beyond a spanning tree
};

/// Random connected bipartite graph: a random tree plus `extra_edges` more.
inline auto random_graph(std::mt19937 & rng, RandomShape shape) -> ReductionGraph
{
    std::uniform_int_distribution<std::size_t> nv(2, shape.max_vertices);
    const std::size_t n = nv(rng);
    std::vector<VertexKind> kinds{VertexKind::point, VertexKind::component};
    for (std::size_t i = 2; i < n; ++i)
        kinds.push_back(rng() % 2 ? VertexKind::point : VertexKind::component);
    GraphSpec s;
    for (std::size_t i = 0; i < n; ++i)
        s.vertices.push_back({(kinds[i] == VertexKind::point ? "P" : "U") + std::to_string(i), kinds[i]});
    auto connect = [&](std::size_t a, std::size_t b) {
        s.edges.push_back({"b" + std::to_string(s.edges.size() + 1), {s.vertices[a].label, s.vertices[b].label}});
    };
    connect(0, 1);
    for (std::size_t i = 2; i < n; ++i) {
        std::vector<std::size_t> opposite;
        for (std::size_t j = 0; j < i; ++j)
            if (kinds[j] != kinds[i])
                opposite.push_back(j);
        connect(opposite[rng() % opposite.size()], i);
    }
    for (std::size_t k = 0; k < shape.extra_edges; ++k) {
        std::size_t a, b;
        do {
            a = rng() % n;
            b = rng() % n;
        } while (kinds[a] == kinds[b]);
        connect(a, b);
    }
    return ReductionGraph(s);
}

/// Random groups on a graph with injective edge maps; an edge group that
/// does not embed in both ends is replaced by the trivial group.
inline auto random_groups(std::mt19937 & rng, const ReductionGraph & g, const std::vector<GroupPtr> & vpool,
    const std::vector<GroupPtr> & epool) -> GraphOfGroups
{
    std::vector<GroupPtr> vg, eg;
    std::vector<GroupHom> tp, tc;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        vg.push_back(vpool[rng() % vpool.size()]);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto E = epool[rng() % epool.size()];
        auto ip = injective_homs(E, vg[g.edge(e).point]);
        auto ic = injective_homs(E, vg[g.edge(e).component]);
        if (ip.empty() || ic.empty()) {
            E = one();
            ip = injective_homs(E, vg[g.edge(e).point]);
            ic = injective_homs(E, vg[g.edge(e).component]);
        }
        eg.push_back(E);
        tp.push_back(ip[rng() % ip.size()]);
        tc.push_back(ic[rng() % ic.size()]);
    }
    return GraphOfGroups(g, vg, eg, tp, tc);
}

} // namespace fixtures
