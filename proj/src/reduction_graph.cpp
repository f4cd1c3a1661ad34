#include <patchwork/reduction_graph.hpp>
#include <patchwork/error.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace patchwork {

namespace {

struct UnionFind
{
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

    auto find(std::size_t x) -> std::size_t
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }

    auto unite(std::size_t a, std::size_t b) -> bool
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[b] = a;
        return true;
    }
};

auto kind_name(VertexKind k) -> const char * { return k == VertexKind::point ? "point" : "component"; }

} // namespace

auto validate(const GraphSpec & spec) -> ValidationReport
{
    ValidationReport report;
    auto & problems = report.problems;

    std::map<std::string, std::size_t> index;
    bool has_point = false, has_component = false;
    for (std::size_t v = 0; v < spec.vertices.size(); ++v) {
        auto & vs = spec.vertices[v];
        if (! index.emplace(vs.label, v).second)
            problems.push_back("duplicate vertex label " + vs.label);
        (vs.kind == VertexKind::point ? has_point : has_component) = true;
    }
    if (! has_point)
        problems.push_back("no point vertex");
    if (! has_component)
        problems.push_back("no component vertex");

    std::set<std::string> edge_labels;
    std::vector<std::size_t> degree(spec.vertices.size(), 0);
    UnionFind components(spec.vertices.size());
    for (auto & e : spec.edges) {
        if (! edge_labels.insert(e.label).second)
            problems.push_back("duplicate edge label " + e.label);
        std::array<std::optional<std::size_t>, 2> ends;
        for (int i = 0; i < 2; ++i) {
            auto it = index.find(e.ends[i]);
            if (it == index.end())
                problems.push_back("edge " + e.label + " has dangling endpoint " + e.ends[i]);
            else
                ends[i] = it->second;
        }
        if (! ends[0] || ! ends[1])
            continue;
        auto k0 = spec.vertices[*ends[0]].kind, k1 = spec.vertices[*ends[1]].kind;
        if (k0 == k1)
            problems.push_back("edge " + e.label + " is not bipartite: it joins two " + kind_name(k0)
                + " vertices");
        ++degree[*ends[0]];
        ++degree[*ends[1]];
        components.unite(*ends[0], *ends[1]);
    }

    for (std::size_t v = 0; v < spec.vertices.size(); ++v)
        if (degree[v] == 0)
            problems.push_back("vertex " + spec.vertices[v].label + " has no incident edge");

    std::set<std::size_t> roots;
    for (std::size_t v = 0; v < spec.vertices.size(); ++v)
        roots.insert(components.find(v));
    if (roots.size() > 1)
        problems.push_back("graph is disconnected (" + std::to_string(roots.size()) + " components)");

    return report;
}

ReductionGraph::ReductionGraph(GraphSpec spec)
{
    auto report = validate(spec);
    if (! report.ok()) {
        std::string msg = "invalid reduction graph:";
        for (auto & p : report.problems)
            msg += " " + p + ";";
        throw Error(msg);
    }
    vertices_ = std::move(spec.vertices);
    incident_.resize(vertices_.size());
    for (auto & e : spec.edges) {
        std::size_t a = *vertex_index(e.ends[0]);
        std::size_t b = *vertex_index(e.ends[1]);
        if (vertices_[a].kind != VertexKind::point)
            std::swap(a, b);
        edges_.push_back({e.label, a, b});
        incident_[a].push_back(edges_.size() - 1);
        incident_[b].push_back(edges_.size() - 1);
    }
}

auto ReductionGraph::other_end(std::size_t e, std::size_t v) const -> std::size_t
{
    auto & ed = edges_.at(e);
    if (ed.point == v)
        return ed.component;
    if (ed.component == v)
        return ed.point;
    throw Error("vertex " + vertices_.at(v).label + " is not an end of edge " + ed.label);
}

auto ReductionGraph::vertex_index(const std::string & label) const -> std::optional<std::size_t>
{
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (vertices_[v].label == label)
            return v;
    return std::nullopt;
}

auto ReductionGraph::edge_index(const std::string & label) const -> std::optional<std::size_t>
{
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].label == label)
            return e;
    return std::nullopt;
}

auto ReductionGraph::spec() const -> GraphSpec
{
    GraphSpec s;
    s.vertices = vertices_;
    for (auto & e : edges_)
        s.edges.push_back({e.label, {vertices_[e.point].label, vertices_[e.component].label}});
    return s;
}

SpanningTree::SpanningTree(const ReductionGraph & graph, std::vector<std::size_t> edges) :
    edges_(std::move(edges)),
    member_(graph.edge_count(), false)
{
    std::sort(edges_.begin(), edges_.end());
    if (edges_.size() + 1 != graph.vertex_count())
        throw Error("spanning tree needs " + std::to_string(graph.vertex_count() - 1) + " edges, got "
            + std::to_string(edges_.size()));
    UnionFind uf(graph.vertex_count());
    for (auto e : edges_) {
        if (e >= graph.edge_count())
            throw Error("spanning tree references unknown edge #" + std::to_string(e));
        if (member_[e])
            throw Error("spanning tree repeats edge " + graph.edge(e).label);
        member_[e] = true;
        if (! uf.unite(graph.edge(e).point, graph.edge(e).component))
            throw Error("edge set contains a cycle through " + graph.edge(e).label);
    }
}

auto SpanningTree::non_tree_edges() const -> std::vector<std::size_t>
{
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < member_.size(); ++e)
        if (! member_[e])
            out.push_back(e);
    return out;
}

auto is_tree(const ReductionGraph & graph) -> bool { return graph.edge_count() + 1 == graph.vertex_count(); }

auto cycle_rank(const ReductionGraph & graph) -> std::size_t
{
    return graph.edge_count() + 1 - graph.vertex_count();
}

auto maximal_tree(const ReductionGraph & graph) -> SpanningTree
{
    std::vector<bool> reached(graph.vertex_count(), false);
    reached[0] = true;
    std::vector<std::size_t> chosen;
    while (chosen.size() + 1 < graph.vertex_count()) {
        for (std::size_t e = 0; e < graph.edge_count(); ++e) {
            auto & ed = graph.edge(e);
            if (reached[ed.point] != reached[ed.component]) {
                reached[ed.point] = reached[ed.component] = true;
                chosen.push_back(e);
                break;
            }
        }
    }
    return SpanningTree(graph, std::move(chosen));
}

auto all_spanning_trees(const ReductionGraph & graph) -> std::vector<SpanningTree>
{
    if (graph.edge_count() > 24)
        throw Error("spanning-tree enumeration is limited to 24 edges");
    const std::size_t need = graph.vertex_count() - 1;
    std::vector<SpanningTree> trees;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, UnionFind)> pick = [&](std::size_t next, UnionFind uf) {
        if (chosen.size() == need) {
            trees.emplace_back(graph, chosen);
            return;
        }
        for (std::size_t e = next; e + (need - chosen.size()) <= graph.edge_count(); ++e) {
            UnionFind trial = uf;
            if (! trial.unite(graph.edge(e).point, graph.edge(e).component))
                continue;
            chosen.push_back(e);
            pick(e + 1, trial);
            chosen.pop_back();
        }
    };
    pick(0, UnionFind(graph.vertex_count()));
    return trees;
}

auto GraphCover::total_space(const ReductionGraph & base) const -> GraphSpec
{
    GraphSpec s;
    for (std::size_t v = 0; v < base.vertex_count(); ++v)
        for (std::size_t i = 0; i < degree; ++i)
            s.vertices.push_back({base.vertex(v).label + "#" + std::to_string(i), base.vertex(v).kind});
    for (std::size_t e = 0; e < base.edge_count(); ++e) {
        auto & ed = base.edge(e);
        for (std::size_t i = 0; i < degree; ++i)
            s.edges.push_back({ed.label + "#" + std::to_string(i),
                {base.vertex(ed.point).label + "#" + std::to_string(i),
                    base.vertex(ed.component).label + "#" + std::to_string(edge_perms[e][i])}});
    }
    return s;
}

auto GraphCover::is_connected() const -> bool
{
    // with identity on tree edges, connectivity is transitivity of the sheet action
    std::vector<bool> seen(degree, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (! stack.empty()) {
        auto i = stack.back();
        stack.pop_back();
        for (auto & p : edge_perms) {
            for (std::size_t j : {std::size_t{p[i]}, static_cast<std::size_t>(
                                                         std::find(p.begin(), p.end(), i) - p.begin())})
                if (! seen[j]) {
                    seen[j] = true;
                    ++count;
                    stack.push_back(j);
                }
        }
    }
    return count == degree;
}

auto enumerate_connected_covers(const ReductionGraph & graph, std::size_t degree, const SpanningTree & tree)
    -> std::vector<GraphCover>
{
    if (degree < 1)
        throw Error("cover degree must be at least 1");
    if (degree > 6)
        throw Error("cover enumeration is limited to degree 6");

    using Perm = std::vector<std::uint8_t>;
    std::vector<Perm> perms;
    Perm p(degree);
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const std::size_t count = perms.size();

    std::map<Perm, std::size_t> index;
    for (std::size_t i = 0; i < count; ++i)
        index.emplace(perms[i], i);

    // conj[t][s] = t s t^-1 as perm indices
    std::vector<std::size_t> conj(count * count);
    for (std::size_t t = 0; t < count; ++t) {
        Perm inv_t(degree);
        for (std::size_t x = 0; x < degree; ++x)
            inv_t[perms[t][x]] = static_cast<std::uint8_t>(x);
        for (std::size_t s = 0; s < count; ++s) {
            Perm r(degree);
            for (std::size_t x = 0; x < degree; ++x)
                r[x] = perms[t][perms[s][inv_t[x]]];
            conj[t * count + s] = index.at(r);
        }
    }

    const auto free_edges = tree.non_tree_edges();
    const std::size_t k = free_edges.size();
    double work = static_cast<double>(count);
    for (std::size_t i = 0; i < k; ++i)
        work *= static_cast<double>(count);
    if (work > 1e8)
        throw Error("cover enumeration too large for degree " + std::to_string(degree) + " and cycle rank "
            + std::to_string(k));

    std::vector<GraphCover> covers;
    std::vector<std::size_t> tuple(k, 0);
    std::vector<std::size_t> image(k);
    while (true) {
        GraphCover cover{degree, std::vector<Perm>(graph.edge_count(), perms[0])};
        for (std::size_t i = 0; i < k; ++i)
            cover.edge_perms[free_edges[i]] = perms[tuple[i]];

        if (cover.is_connected()) {
            bool least = true;
            for (std::size_t t = 1; t < count && least; ++t) {
                for (std::size_t i = 0; i < k; ++i)
                    image[i] = conj[t * count + tuple[i]];
                if (image < tuple)
                    least = false;
            }
            if (least)
                covers.push_back(std::move(cover));
        }

        std::size_t i = k;
        while (i > 0 && ++tuple[i - 1] == count)
            tuple[--i] = 0;
        if (i == 0)
            break;
    }
    return covers;
}

auto enumerate_connected_covers(const ReductionGraph & graph, std::size_t degree) -> std::vector<GraphCover>
{
    return enumerate_connected_covers(graph, degree, maximal_tree(graph));
}

auto index_bound(const std::map<std::string, long long> & local_indices) -> IndexBound
{
    IndexBound out{1, 1};
    for (auto & [label, idx] : local_indices) {
        if (idx < 1)
            throw Error("local index at " + label + " must be positive, got " + std::to_string(idx));
        const auto u = static_cast<std::uint64_t>(idx);
        if (__builtin_mul_overflow(out.product, u, &out.product))
            throw Error("product of local indices overflows 64 bits");
        const auto g = std::gcd(out.lcm, u);
        if (__builtin_mul_overflow(out.lcm / g, u, &out.lcm))
            throw Error("lcm of local indices overflows 64 bits");
    }
    return out;
}

auto export_dot(const ReductionGraph & graph, const SpanningTree * tree) -> std::string
{
    std::ostringstream out;
    out << "graph reduction {\n";
    for (auto & v : graph.vertices())
        out << "  \"" << v.label << "\" [shape=" << (v.kind == VertexKind::point ? "box" : "ellipse") << "];\n";
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
        auto & ed = graph.edge(e);
        out << "  \"" << graph.vertex(ed.point).label << "\" -- \"" << graph.vertex(ed.component).label
            << "\" [label=\"" << ed.label << "\"";
        if (tree)
            out << ", style=" << (tree->contains(e) ? "solid" : "dashed");
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace patchwork
