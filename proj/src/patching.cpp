#include <patchwork/patching.hpp>
#include <patchwork/error.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace patchwork {

namespace {

auto power(std::size_t base, std::size_t exp) -> std::size_t
{
    std::size_t r = 1;
    while (exp--)
        r *= base;
    return r;
}

// value of the vertex functor recorded in `family` on arrow (t, gamma, s) at v
auto local_value(const FiniteGroup & G, const LocalFamily & family, std::size_t v, std::size_t t, Element gamma,
    std::size_t s) -> Element
{
    const auto & h = family.transports[v];
    return G.mul(G.mul(h[t], family.on_base[v][gamma]), G.inv(h[s]));
}

// the G-value attached to edge e as seen from vertex v: transport at the point
// end, transport times inverse edge letter at the component end
auto endpoint_frame(const ReductionGraph & graph, const FiniteGroup & G, const GlobalFunctor & f, std::size_t v,
    std::size_t e) -> Element
{
    if (graph.edge(e).point == v)
        return f.transports[e];
    return G.mul(f.transports[e], G.inv(f.pi1.conjugators[e]));
}

void check_shape(const GraphOfGroups & gog, const FiniteGroup & G, const LocalFamily & family)
{
    const auto & graph = gog.graph();
    if (family.on_base.size() != graph.vertex_count() || family.transports.size() != graph.vertex_count())
        throw Error("local family has the wrong number of vertices");
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        if (family.on_base[v].size() != gog.vertex_group(v)->order()
            || family.transports[v].size() != graph.incident(v).size())
            throw Error("local family has the wrong shape at " + graph.vertex(v).label);
        for (auto x : family.on_base[v])
            if (! G.contains(x))
                throw Error("local family value outside " + G.name());
        for (auto x : family.transports[v])
            if (! G.contains(x))
                throw Error("local family value outside " + G.name());
    }
}

} // namespace

auto vertex_groupoid(const GraphOfGroups & gog, std::size_t v) -> ModelGroupoid
{
    const auto & graph = gog.graph();
    std::vector<std::string> objects;
    for (auto e : graph.incident(v))
        objects.push_back(graph.edge(e).label);
    return ModelGroupoid(std::move(objects), gog.vertex_group(v));
}

auto branch_position(const ReductionGraph & graph, std::size_t v, std::size_t e) -> std::size_t
{
    const auto & inc = graph.incident(v);
    auto it = std::find(inc.begin(), inc.end(), e);
    if (it == inc.end())
        throw Error("edge " + graph.edge(e).label + " does not meet " + graph.vertex(v).label);
    return static_cast<std::size_t>(it - inc.begin());
}

auto agrees_on_branches(const GraphOfGroups & gog, const FiniteGroup & G, const LocalFamily & family) -> bool
{
    const auto & graph = gog.graph();
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
        const auto & ed = graph.edge(e);
        const auto sp = branch_position(graph, ed.point, e);
        const auto su = branch_position(graph, ed.component, e);
        for (Element g = 0; g < gog.edge_group(e)->order(); ++g)
            if (local_value(G, family, ed.point, sp, gog.to_point(e)(g), sp)
                != local_value(G, family, ed.component, su, gog.to_component(e)(g), su))
                return false;
    }
    return true;
}

auto fiber_product_families(const GraphOfGroups & gog, const GroupPtr & G) -> std::vector<LocalFamily>
{
    const auto & graph = gog.graph();
    const std::size_t n = graph.vertex_count();

    std::vector<std::vector<std::pair<std::vector<Element>, std::vector<Element>>>> local(n);
    for (std::size_t v = 0; v < n; ++v)
        for (auto & f : enumerate_functors(vertex_groupoid(gog, v), G))
            local[v].emplace_back(f.on_base(), f.transports());

    std::vector<std::vector<std::size_t>> closing(n);
    for (std::size_t e = 0; e < graph.edge_count(); ++e)
        closing[std::max(graph.edge(e).point, graph.edge(e).component)].push_back(e);

    LocalFamily current{std::vector<std::vector<Element>>(n), std::vector<std::vector<Element>>(n)};
    std::vector<LocalFamily> out;
    std::function<void(std::size_t)> descend = [&](std::size_t v) {
        if (v == n) {
            out.push_back(current);
            return;
        }
        for (auto & [phi, h] : local[v]) {
            current.on_base[v] = phi;
            current.transports[v] = h;
            bool ok = true;
            for (auto e : closing[v]) {
                const auto & ed = graph.edge(e);
                const auto sp = branch_position(graph, ed.point, e);
                const auto su = branch_position(graph, ed.component, e);
                for (Element g = 0; g < gog.edge_group(e)->order() && ok; ++g)
                    ok = local_value(*G, current, ed.point, sp, gog.to_point(e)(g), sp)
                        == local_value(*G, current, ed.component, su, gog.to_component(e)(g), su);
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

auto restrict_to_vertices(const GraphOfGroups & gog, const FiniteGroup & G, const GlobalFunctor & global)
    -> LocalFamily
{
    const auto & graph = gog.graph();
    if (global.transports.size() != graph.edge_count() || global.pi1.conjugators.size() != graph.edge_count())
        throw Error("global functor has the wrong number of edges");
    LocalFamily out;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        const auto & inc = graph.incident(v);
        const Element base = endpoint_frame(graph, G, global, v, inc.front());
        std::vector<Element> phi;
        for (auto x : global.pi1.vertex_maps.at(v))
            phi.push_back(G.conjugate(base, x));
        std::vector<Element> h;
        for (auto e : inc)
            h.push_back(G.mul(endpoint_frame(graph, G, global, v, e), G.inv(base)));
        out.on_base.push_back(std::move(phi));
        out.transports.push_back(std::move(h));
    }
    return out;
}

auto glue_from_vertices(const GraphOfGroups & gog, const SpanningTree & tree, const FiniteGroup & G,
    const LocalFamily & family) -> std::optional<GlobalFunctor>
{
    const auto & graph = gog.graph();
    check_shape(gog, G, family);

    // frame[v][i]: value attached to the i-th edge at v, normalised so that
    // the point-end frame of edge 0 is the identity
    std::vector<std::vector<std::optional<Element>>> frame(graph.vertex_count());
    for (std::size_t v = 0; v < graph.vertex_count(); ++v)
        frame[v].resize(graph.incident(v).size());

    // connecting arrow s -> t inside the vertex groupoid
    auto connect = [&](std::size_t v, std::size_t t, std::size_t s) {
        return local_value(G, family, v, t, gog.vertex_group(v)->identity(), s);
    };

    std::vector<bool> seen(graph.vertex_count(), false);
    std::vector<std::size_t> queue;
    auto visit = [&](std::size_t v, std::size_t pos, Element value) {
        seen[v] = true;
        for (std::size_t t = 0; t < frame[v].size(); ++t)
            frame[v][t] = G.mul(connect(v, t, pos), value);
        queue.push_back(v);
    };
    const std::size_t start = graph.edge(0).point;
    visit(start, branch_position(graph, start, 0), G.identity());
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const std::size_t v = queue[i];
        for (std::size_t pos = 0; pos < graph.incident(v).size(); ++pos) {
            const std::size_t e = graph.incident(v)[pos];
            if (! tree.contains(e))
                continue;
            const std::size_t w = graph.other_end(e, v);
            if (! seen[w])
                visit(w, branch_position(graph, w, e), *frame[v][pos]);
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw Error("spanning tree does not reach every vertex");

    GlobalFunctor out;
    out.pi1.conjugators.assign(graph.edge_count(), G.identity());
    out.transports.assign(graph.edge_count(), G.identity());
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
        const auto & ed = graph.edge(e);
        const Element at_point = *frame[ed.point][branch_position(graph, ed.point, e)];
        const Element at_component = *frame[ed.component][branch_position(graph, ed.component, e)];
        out.transports[e] = at_point;
        out.pi1.conjugators[e] = G.mul(G.inv(at_component), at_point);
    }
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        const Element base = *frame[v][0];
        std::vector<Element> f;
        for (auto x : family.on_base[v])
            f.push_back(G.conjugate(G.inv(base), x));
        out.pi1.vertex_maps.push_back(std::move(f));
    }
    for (std::size_t e = 0; e < graph.edge_count(); ++e)
        if (tree.contains(e) && out.pi1.conjugators[e] != G.identity())
            return std::nullopt;
    if (! satisfies_edge_relations(gog, G, out.pi1))
        return std::nullopt;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        // vertex components must be homomorphisms
        const auto & Gv = *gog.vertex_group(v);
        for (Element a = 0; a < Gv.order(); ++a)
            for (Element b = 0; b < Gv.order(); ++b)
                if (out.pi1.vertex_maps[v][Gv.mul(a, b)]
                    != G.mul(out.pi1.vertex_maps[v][a], out.pi1.vertex_maps[v][b]))
                    return std::nullopt;
    }
    if (restrict_to_vertices(gog, G, out) != family)
        return std::nullopt;
    return out;
}

auto verify_groupoid_pushout(const GraphOfGroups & gog, const GroupPtr & G, const SpanningTree & tree)
    -> PushoutReport
{
    const auto & graph = gog.graph();
    const auto fiber = fiber_product_families(gog, G);
    const auto pi1 = enumerate_pi1_homs(gog, tree, *G);

    PushoutReport r{};
    r.fiber_product_count = fiber.size();
    r.pi1_homs = pi1.size();
    r.transport_factor = power(G->order(), graph.edge_count() - 1);
    r.global_functor_count = r.pi1_homs * r.transport_factor;
    r.base_object_count = r.fiber_product_count / r.transport_factor;

    const std::set<LocalFamily> fiber_set(fiber.begin(), fiber.end());
    std::set<LocalFamily> image;
    r.lands_in_fiber_product = true;
    r.injective = true;
    GlobalFunctor g;
    for (auto & psi : pi1) {
        g.pi1 = psi;
        g.transports.assign(graph.edge_count(), G->identity());
        while (true) {
            auto local = restrict_to_vertices(gog, *G, g);
            if (! fiber_set.count(local))
                r.lands_in_fiber_product = false;
            if (! image.insert(std::move(local)).second)
                r.injective = false;
            std::size_t i = graph.edge_count();
            while (i > 1 && ++g.transports[i - 1] == G->order())
                g.transports[--i] = 0;
            if (i <= 1)
                break;
        }
    }
    r.surjective = r.lands_in_fiber_product && image.size() == fiber_set.size();
    return r;
}

auto verify_groupoid_pushout(const GraphOfGroups & gog, const GroupPtr & G) -> PushoutReport
{
    return verify_groupoid_pushout(gog, G, maximal_tree(gog.graph()));
}

auto global_torsor_from_functor(const FiniteGroup & G, const GlobalFunctor & f) -> GlobalTorsor
{
    GlobalTorsor t{f.pi1, {}};
    for (auto x : f.transports)
        t.points.push_back(G.inv(x));
    return t;
}

auto global_torsor_morphism(const FiniteGroup & G, const GlobalTorsor & a, const GlobalTorsor & b)
    -> std::optional<Element>
{
    if (a.points.size() != b.points.size() || a.points.empty())
        return std::nullopt;
    // a G-equivariant self-map of G is left multiplication; point 0 fixes it
    const Element x = G.mul(b.points[0], G.inv(a.points[0]));
    for (std::size_t i = 0; i < a.points.size(); ++i)
        if (G.mul(x, a.points[i]) != b.points[i])
            return std::nullopt;
    if (a.action.vertex_maps.size() != b.action.vertex_maps.size())
        return std::nullopt;
    for (std::size_t v = 0; v < a.action.vertex_maps.size(); ++v)
        for (std::size_t g = 0; g < a.action.vertex_maps[v].size(); ++g)
            if (G.mul(x, a.action.vertex_maps[v][g]) != G.mul(b.action.vertex_maps[v][g], x))
                return std::nullopt;
    for (std::size_t e = 0; e < a.action.conjugators.size(); ++e)
        if (G.mul(x, a.action.conjugators[e]) != G.mul(b.action.conjugators[e], x))
            return std::nullopt;
    return x;
}

auto restrict_global_torsor(const GraphOfGroups & gog, const GroupPtr & G, const GlobalTorsor & t)
    -> std::vector<MultipointedTorsor>
{
    const auto & graph = gog.graph();
    const std::size_t n = G->order();
    std::vector<MultipointedTorsor> out;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        const auto & Gv = gog.vertex_group(v);
        std::vector<CarrierPoint> right(n * n), left(Gv->order() * n), points;
        for (Element z = 0; z < n; ++z) {
            for (Element g = 0; g < n; ++g)
                right[z * n + g] = G->mul(z, g);
            for (Element a = 0; a < Gv->order(); ++a)
                left[a * n + z] = G->mul(t.action.vertex_maps.at(v).at(a), z);
        }
        for (auto e : graph.incident(v)) {
            if (graph.edge(e).point == v)
                points.push_back(t.points.at(e));
            else
                points.push_back(G->mul(t.action.conjugators.at(e), t.points.at(e)));
        }
        out.emplace_back(G, Gv, std::move(right), std::move(left), std::move(points));
    }
    return out;
}

auto restrict_to_branches(const GraphOfGroups & gog, const std::vector<MultipointedTorsor> & vertex_torsors)
    -> BranchRestrictions
{
    const auto & graph = gog.graph();
    if (vertex_torsors.size() != graph.vertex_count())
        throw Error("need one torsor per vertex");
    BranchRestrictions out;
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
        const auto & ed = graph.edge(e);
        out.point_side.push_back(
            restrict_torsor(vertex_torsors[ed.point], gog.to_point(e), branch_position(graph, ed.point, e)));
        out.component_side.push_back(restrict_torsor(
            vertex_torsors[ed.component], gog.to_component(e), branch_position(graph, ed.component, e)));
    }
    return out;
}

namespace {

using ClassKey = std::vector<std::vector<Element>>;

// isomorphism-class key of a family of vertex torsors: their functor tables
auto family_key(const std::vector<ModelGroupoid> & groupoids, const std::vector<MultipointedTorsor> & ts) -> ClassKey
{
    ClassKey key;
    for (std::size_t v = 0; v < ts.size(); ++v)
        key.push_back(hom_from_torsor(ts[v], groupoids[v]).values());
    return key;
}

auto branches_compatible(const GraphOfGroups & gog, const std::vector<MultipointedTorsor> & ts) -> bool
{
    const auto b = restrict_to_branches(gog, ts);
    for (std::size_t e = 0; e < b.point_side.size(); ++e)
        if (! torsor_morphisms(b.point_side[e], b.component_side[e]))
            return false;
    return true;
}

} // namespace

auto verify_setoid_equivalence(const GraphOfGroups & gog, const GroupPtr & G) -> SetoidReport
{
    const auto & graph = gog.graph();
    const std::size_t n = graph.vertex_count();
    std::vector<ModelGroupoid> groupoids;
    for (std::size_t v = 0; v < n; ++v)
        groupoids.push_back(vertex_groupoid(gog, v));

    SetoidReport r{};
    r.transport_factor = power(G->order(), graph.edge_count() - 1);

    // right-hand side: compatible families of vertex torsors, built from
    // every vertex functor and filtered by isomorphic branch restrictions
    std::vector<std::vector<MultipointedTorsor>> local(n);
    for (std::size_t v = 0; v < n; ++v)
        for (auto & f : enumerate_functors(groupoids[v], G))
            local[v].push_back(torsor_from_hom(f));
    std::set<ClassKey> fiber_classes;
    std::vector<MultipointedTorsor> chosen;
    std::function<void(std::size_t)> descend = [&](std::size_t v) {
        if (v == n) {
            if (branches_compatible(gog, chosen))
                fiber_classes.insert(family_key(groupoids, chosen));
            return;
        }
        for (auto & t : local[v]) {
            chosen.push_back(t);
            descend(v + 1);
            chosen.pop_back();
        }
    };
    descend(0);
    r.fiber_classes = fiber_classes.size();

    // left-hand side: global torsors, one per global functor, grouped into
    // classes by the morphism test against earlier representatives
    std::vector<GlobalTorsor> reps;
    std::map<ClassKey, std::size_t> image_of;
    r.restriction_lands = true;
    r.fully_faithful = true;
    GlobalFunctor g;
    for (auto & psi : enumerate_pi1_homs(gog, maximal_tree(graph), *G)) {
        g.pi1 = psi;
        g.transports.assign(graph.edge_count(), G->identity());
        while (true) {
            auto t = global_torsor_from_functor(*G, g);
            bool fresh = std::none_of(reps.begin(), reps.end(),
                [&](const GlobalTorsor & u) { return global_torsor_morphism(*G, u, t).has_value(); });
            if (fresh) {
                const std::size_t id = reps.size();
                reps.push_back(t);
                auto restricted = restrict_global_torsor(gog, G, t);
                if (! branches_compatible(gog, restricted))
                    r.restriction_lands = false;
                auto key = family_key(groupoids, restricted);
                if (! fiber_classes.count(key))
                    r.restriction_lands = false;
                if (! image_of.emplace(std::move(key), id).second)
                    r.fully_faithful = false;
            }
            std::size_t i = graph.edge_count();
            while (i > 1 && ++g.transports[i - 1] == G->order())
                g.transports[--i] = 0;
            if (i <= 1)
                break;
        }
    }
    r.global_classes = reps.size();
    r.essentially_surjective = std::all_of(
        fiber_classes.begin(), fiber_classes.end(), [&](const ClassKey & k) { return image_of.count(k) > 0; });
    return r;
}

auto solve_patching(const PatchingProblem & problem, const SpanningTree & tree) -> PatchingSolution
{
    if (! problem.gog)
        throw Error("patching problem has no graph of groups");
    const auto & gog = *problem.gog;
    const auto & graph = gog.graph();
    const auto & G = problem.G;
    if (problem.vertex_data.size() != graph.vertex_count())
        throw Error("patching problem needs one torsor per vertex");
    if (problem.branch_data.size() != graph.edge_count())
        throw Error("patching problem needs one torsor per edge");

    std::vector<ModelGroupoid> groupoids;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        groupoids.push_back(vertex_groupoid(gog, v));
        const auto & t = problem.vertex_data[v];
        if (! (*t.structure_group() == *G) || ! (*t.vertex_group() == *gog.vertex_group(v))
            || t.points().size() != graph.incident(v).size())
            throw Error("torsor at " + graph.vertex(v).label + " does not match the vertex");
    }

    const auto restricted = restrict_to_branches(gog, problem.vertex_data);
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
        const auto & label = graph.edge(e).label;
        if (! torsor_morphisms(restricted.point_side[e], problem.branch_data[e]))
            throw Error("incompatible patching data at edge " + label + ": point-side restriction does not match");
        if (! torsor_morphisms(restricted.component_side[e], problem.branch_data[e]))
            throw Error("incompatible patching data at edge " + label
                + ": component-side restriction does not match");
    }

    LocalFamily family;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        auto f = hom_from_torsor(problem.vertex_data[v], groupoids[v]);
        family.on_base.push_back(f.on_base());
        family.transports.push_back(f.transports());
    }
    auto glued = glue_from_vertices(gog, tree, *G, family);
    if (! glued)
        throw Error("patching data do not glue along the chosen tree");

    PatchingSolution sol{global_torsor_from_functor(*G, *glued), *glued, {}};
    const auto induced = restrict_global_torsor(gog, G, sol.global);
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        auto m = torsor_morphisms(induced[v], problem.vertex_data[v]);
        if (! m)
            throw Error("glued torsor does not restrict to the datum at " + graph.vertex(v).label);
        sol.vertex_isos.push_back(std::move(*m));
    }
    return sol;
}

auto solve_patching(const PatchingProblem & problem) -> PatchingSolution
{
    if (! problem.gog)
        throw Error("patching problem has no graph of groups");
    return solve_patching(problem, maximal_tree(problem.gog->graph()));
}

auto problem_from_global(const GraphOfGroups & gog, const GroupPtr & G, const GlobalTorsor & t) -> PatchingProblem
{
    PatchingProblem p{&gog, G, restrict_global_torsor(gog, G, t), {}};
    p.branch_data = restrict_to_branches(gog, p.vertex_data).point_side;
    return p;
}

} // namespace patchwork
