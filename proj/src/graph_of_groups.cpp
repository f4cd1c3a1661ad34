#include <patchwork/graph_of_groups.hpp>
#include <patchwork/error.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace patchwork {

GraphOfGroups::GraphOfGroups(ReductionGraph graph, std::vector<GroupPtr> vertex_groups,
    std::vector<GroupPtr> edge_groups, std::vector<GroupHom> to_point, std::vector<GroupHom> to_component,
    EdgeMapMode mode) :
    graph_(std::move(graph)),
    vertex_groups_(std::move(vertex_groups)),
    edge_groups_(std::move(edge_groups)),
    to_point_(std::move(to_point)),
    to_component_(std::move(to_component)),
    mode_(mode)
{
    if (vertex_groups_.size() != graph_.vertex_count())
        throw Error("graph of groups needs one group per vertex");
    if (edge_groups_.size() != graph_.edge_count() || to_point_.size() != graph_.edge_count()
        || to_component_.size() != graph_.edge_count())
        throw Error("graph of groups needs one group and two edge maps per edge");
    for (auto & g : vertex_groups_)
        if (! g)
            throw Error("missing vertex group");
    for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
        auto & ed = graph_.edge(e);
        auto check = [&](const GroupHom & f, std::size_t v, const char * side) {
            if (! (*f.source() == *edge_groups_[e]))
                throw Error("edge map at " + ed.label + " (" + side + " side) does not start at the edge group");
            if (! (*f.target() == *vertex_groups_[v]))
                throw Error("edge map at " + ed.label + " (" + side + " side) does not land in the group of "
                    + graph_.vertex(v).label);
            if (mode_ == EdgeMapMode::strict && ! f.is_injective())
                throw Error("edge map at " + ed.label + " (" + side + " side) is not injective");
        };
        check(to_point_[e], ed.point, "point");
        check(to_component_[e], ed.component, "component");
    }
}

auto GraphOfGroups::trivial(ReductionGraph graph) -> GraphOfGroups
{
    auto one = share(FiniteGroup::trivial());
    std::vector<GroupPtr> vertex_groups(graph.vertex_count(), one);
    std::vector<GroupPtr> edge_groups(graph.edge_count(), one);
    std::vector<GroupHom> maps(graph.edge_count(), GroupHom::identity(one));
    return GraphOfGroups(std::move(graph), std::move(vertex_groups), std::move(edge_groups), maps, maps);
}

auto build_presentation(const GraphOfGroups & gog, const SpanningTree & tree) -> VanKampenPresentation
{
    const auto & graph = gog.graph();
    SpanningTree checked(graph, tree.edges());  // throws on tree/graph mismatch

    Presentation pres;
    std::vector<std::size_t> offset(graph.vertex_count());
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        const auto & Gv = *gog.vertex_group(v);
        offset[v] = pres.generators().size();
        for (Element x = 0; x < Gv.order(); ++x)
            pres.add_generator(graph.vertex(v).label + "." + Gv.label(x));
    }
    std::vector<std::size_t> letter(graph.edge_count());
    for (std::size_t e = 0; e < graph.edge_count(); ++e)
        letter[e] = pres.add_generator("e(" + graph.edge(e).label + ")");

    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        const auto & Gv = *gog.vertex_group(v);
        for (Element a = 0; a < Gv.order(); ++a)
            for (Element b = 0; b < Gv.order(); ++b)
                pres.add_relator({{offset[v] + a}, {offset[v] + b}, {offset[v] + Gv.mul(a, b), true}});
    }
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
        const auto & ed = graph.edge(e);
        const auto & Ge = *gog.edge_group(e);
        for (Element g = 0; g < Ge.order(); ++g) {
            // e alpha_P(g) e^-1 alpha_U(g)^-1
            pres.add_relator({{letter[e]}, {offset[ed.point] + gog.to_point(e)(g)}, {letter[e], true},
                {offset[ed.component] + gog.to_component(e)(g), true}});
        }
        if (checked.contains(e))
            pres.add_relator({{letter[e]}});
    }
    return {std::move(pres), std::move(checked), std::move(offset), std::move(letter)};
}

auto satisfies_edge_relations(const GraphOfGroups & gog, const FiniteGroup & G, const HomFamily & family) -> bool
{
    const auto & graph = gog.graph();
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
        const auto & ed = graph.edge(e);
        const Element c = family.conjugators[e];
        for (Element g = 0; g < gog.edge_group(e)->order(); ++g) {
            const Element lhs = family.vertex_maps[ed.component][gog.to_component(e)(g)];
            const Element rhs = G.conjugate(c, family.vertex_maps[ed.point][gog.to_point(e)(g)]);
            if (lhs != rhs)
                return false;
        }
    }
    return true;
}

auto enumerate_pi1_homs(const GraphOfGroups & gog, const SpanningTree & tree, const FiniteGroup & G)
    -> std::vector<HomFamily>
{
    const auto vk = build_presentation(gog, tree);
    const auto & graph = gog.graph();
    std::vector<HomFamily> out;
    for (auto & a : enumerate_homs(vk.presentation, G)) {
        HomFamily f;
        for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
            auto first = a.begin() + static_cast<std::ptrdiff_t>(vk.vertex_offset[v]);
            f.vertex_maps.emplace_back(first, first + static_cast<std::ptrdiff_t>(gog.vertex_group(v)->order()));
        }
        for (std::size_t e = 0; e < graph.edge_count(); ++e)
            f.conjugators.push_back(a[vk.edge_letter[e]]);
        out.push_back(std::move(f));
    }
    return out;
}

auto naive_limit_homs(const GraphOfGroups & gog, const GroupPtr & G) -> std::vector<HomFamily>
{
    const auto & graph = gog.graph();
    const std::size_t n = graph.vertex_count();
    std::vector<std::vector<GroupHom>> local;
    for (std::size_t v = 0; v < n; ++v)
        local.push_back(all_homs(gog.vertex_group(v), G));

    // edges checkable once their later endpoint is assigned
    std::vector<std::vector<std::size_t>> closing(n);
    for (std::size_t e = 0; e < graph.edge_count(); ++e)
        closing[std::max(graph.edge(e).point, graph.edge(e).component)].push_back(e);

    std::vector<const GroupHom *> chosen(n, nullptr);
    std::vector<HomFamily> out;
    std::function<void(std::size_t)> descend = [&](std::size_t v) {
        if (v == n) {
            HomFamily f;
            for (auto * h : chosen)
                f.vertex_maps.push_back(h->table());
            f.conjugators.assign(graph.edge_count(), G->identity());
            out.push_back(std::move(f));
            return;
        }
        for (auto & h : local[v]) {
            chosen[v] = &h;
            bool ok = true;
            for (auto e : closing[v]) {
                const auto & ed = graph.edge(e);
                for (Element g = 0; g < gog.edge_group(e)->order() && ok; ++g)
                    ok = (*chosen[ed.point])(gog.to_point(e)(g)) == (*chosen[ed.component])(gog.to_component(e)(g));
                if (! ok)
                    break;
            }
            if (ok)
                descend(v + 1);
        }
    };
    descend(0);
    std::sort(out.begin(), out.end());
    return out;
}

auto count_conjugacy_classes(const std::vector<HomFamily> & families, const FiniteGroup & G) -> std::size_t
{
    std::set<HomFamily> canonical;
    for (auto & f : families) {
        HomFamily best = f;
        for (Element g = 0; g < G.order(); ++g) {
            HomFamily c = f;
            for (auto & m : c.vertex_maps)
                for (auto & x : m)
                    x = G.conjugate(g, x);
            for (auto & x : c.conjugators)
                x = G.conjugate(g, x);
            best = std::min(best, c);
        }
        canonical.insert(std::move(best));
    }
    return canonical.size();
}

auto verify_tree_vankampen(const GraphOfGroups & gog, const GroupPtr & G) -> TreeVanKampenReport
{
    const auto pi1 = enumerate_pi1_homs(gog, maximal_tree(gog.graph()), *G);
    const auto naive = naive_limit_homs(gog, G);

    TreeVanKampenReport r{};
    r.graph_is_tree = is_tree(gog.graph());
    r.pi1_homs = pi1.size();
    r.naive_homs = naive.size();
    r.pi1_conjugacy_classes = count_conjugacy_classes(pi1, *G);

    std::set<std::vector<std::vector<Element>>> naive_maps;
    for (auto & f : naive)
        naive_maps.insert(f.vertex_maps);

    std::map<std::vector<std::vector<Element>>, const HomFamily *> image;
    r.restriction_lands_in_limit = true;
    r.restriction_injective = true;
    for (auto & f : pi1) {
        auto [it, fresh] = image.emplace(f.vertex_maps, &f);
        if (! fresh && r.restriction_injective) {
            r.restriction_injective = false;
            if (! r.witness) {
                r.witness = f;
                r.witness_partner = *it->second;
            }
        }
        if (! naive_maps.count(f.vertex_maps) && r.restriction_lands_in_limit) {
            r.restriction_lands_in_limit = false;
            if (! r.witness)
                r.witness = f;
        }
    }
    r.restriction_surjective = std::all_of(
        naive.begin(), naive.end(), [&](const HomFamily & f) { return image.count(f.vertex_maps) > 0; });
    return r;
}

auto TreeIndependenceReport::independent() const -> bool
{
    return std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) == counts.end();
}

auto verify_tree_independence(const GraphOfGroups & gog, const FiniteGroup & G) -> TreeIndependenceReport
{
    TreeIndependenceReport r;
    r.trees = all_spanning_trees(gog.graph());
    for (auto & t : r.trees)
        r.counts.push_back(count_homs(build_presentation(gog, t).presentation, G));
    return r;
}

} // namespace patchwork
