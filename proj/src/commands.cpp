#include <patchwork/workbench.hpp>
#include <patchwork/descent.hpp>
#include <patchwork/patching.hpp>
#include <patchwork/error.hpp>

#include <chrono>
#include <fstream>
#include <functional>

namespace patchwork {

using nlohmann::json;

namespace {

struct Context
{
    const WorkbenchInput & in;
    const Flags & flags;
    Report & report;

    void verdict(const std::string & tag, bool ok, const std::string & detail)
    {
        report.verdicts.push_back({tag, ok ? "PASS" : "FAIL", detail});
        if (! ok)
            report.status = Status::fail;
    }
    void line(const std::string & s) { report.lines.push_back(s); }

    auto option_long(const std::optional<long> & flag, const char * key, long fallback) const -> long
    {
        if (flag)
            return *flag;
        if (in.options.contains(key)) {
            if (! in.options[key].is_number_integer())
                throw InputError({std::string("options.") + key + ": must be an integer"});
            return in.options[key].get<long>();
        }
        return fallback;
    }
    auto all_trees() const -> bool { return flags.all_trees || in.options.value("all_trees", false); }
    auto mode() const -> EdgeMapMode
    {
        return flags.permissive || in.options.value("permissive", false) ? EdgeMapMode::permissive : EdgeMapMode::strict;
    }
    auto test_group() const -> GroupPtr
    {
        std::string name;
        if (flags.group)
            name = *flags.group;
        else if (in.options.contains("test_group") && in.options["test_group"].is_string())
            name = in.options["test_group"].get<std::string>();
        else
            throw InputError({"test group: pass --group or set options.test_group"});
        try {
            return resolve_group(in, name);
        } catch (const Error & e) {
            throw InputError({"test group: " + std::string(e.what())});
        }
    }
};

auto edge_labels(const ReductionGraph & g, const std::vector<std::size_t> & edges) -> json
{
    json out = json::array();
    for (auto e : edges)
        out.push_back(g.edge(e).label);
    return out;
}

auto join(const json & labels) -> std::string
{
    std::string s;
    for (auto & l : labels)
        s += (s.empty() ? "" : ", ") + l.get<std::string>();
    return s.empty() ? "(none)" : s;
}

auto family_json(const GraphOfGroups & gog, const FiniteGroup & G, const HomFamily & f) -> json
{
    const auto & graph = gog.graph();
    json j;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        json m = json::object();
        const auto & Gv = *gog.vertex_group(v);
        for (auto x : Gv.generating_set())
            m[Gv.label(x)] = G.label(f.vertex_maps[v][x]);
        j["vertices"][graph.vertex(v).label] = m;
    }
    j["edges"] = json::object();
    for (std::size_t e = 0; e < graph.edge_count(); ++e)
        j["edges"][graph.edge(e).label] = G.label(f.conjugators[e]);
    return j;
}

void graph_check(Context & c)
{
    if (! c.in.graph)
        throw InputError({"graph: this command needs a graph section"});
    auto rep = validate(*c.in.graph);
    if (! rep.ok()) {
        for (auto & p : rep.problems)
            c.line("problem: " + p);
        c.report.data["problems"] = rep.problems;
        c.verdict("reduction-graph", false, std::to_string(rep.problems.size()) + " problem(s)");
        return;
    }
    ReductionGraph g(*c.in.graph);
    std::size_t points = 0;
    for (auto & v : g.vertices())
        points += v.kind == VertexKind::point;
    c.report.data["vertices"] = g.vertex_count();
    c.report.data["points"] = points;
    c.report.data["components"] = g.vertex_count() - points;
    c.report.data["edges"] = g.edge_count();
    c.report.data["is_tree"] = is_tree(g);
    c.report.data["cycle_rank"] = cycle_rank(g);
    c.verdict("reduction-graph", true,
        "connected bipartite graph with " + std::to_string(points) + " point and "
            + std::to_string(g.vertex_count() - points) + " component vertices, " + std::to_string(g.edge_count())
            + " edges");
}

void graph_tree(Context & c)
{
    auto g = build_graph(c.in);
    auto t = maximal_tree(g);
    auto tree = edge_labels(g, t.edges()), rest = edge_labels(g, t.non_tree_edges());
    c.report.data["tree"] = tree;
    c.report.data["non_tree"] = rest;
    c.line("tree edges: " + join(tree));
    c.line("non-tree edges: " + join(rest));
    bool ok = rest.size() == cycle_rank(g);
    if (c.all_trees()) {
        auto all = all_spanning_trees(g);
        json list = json::array();
        for (auto & s : all) {
            list.push_back(edge_labels(g, s.edges()));
            ok = ok && s.non_tree_edges().size() == cycle_rank(g);
        }
        c.report.data["all_trees"] = list;
        c.line(std::to_string(all.size()) + " spanning trees");
    }
    c.verdict("spanning-tree", ok, "non-tree edges equal the cycle rank " + std::to_string(cycle_rank(g)));
}

void graph_rank(Context & c)
{
    auto g = build_graph(c.in);
    c.report.data["cycle_rank"] = cycle_rank(g);
    c.report.data["is_tree"] = is_tree(g);
    c.verdict("cycle-rank", true,
        "rank " + std::to_string(cycle_rank(g)) + (is_tree(g) ? " (tree)" : " (not a tree)"));
}

void graph_covers(Context & c)
{
    auto g = build_graph(c.in);
    const long n = c.option_long(c.flags.degree, "degree", 2);
    if (n < 1)
        throw InputError({"degree: must be positive"});
    auto t = maximal_tree(g);
    auto covers = enumerate_connected_covers(g, static_cast<std::size_t>(n), t);
    json list = json::array();
    for (auto & cov : covers) {
        json perms = json::object();
        for (auto e : t.non_tree_edges()) {
            json p = json::array();
            for (auto x : cov.edge_perms[e])
                p.push_back(x + 1);
            perms[g.edge(e).label] = p;
        }
        list.push_back(perms);
        c.line("cover: " + perms.dump());
    }
    c.report.data["degree"] = n;
    c.report.data["covers"] = list;
    c.report.data["count"] = covers.size();
    c.verdict("connected-covers", true, std::to_string(covers.size()) + " connected covers of degree " + std::to_string(n));
}

void gog_presentation(Context & c)
{
    auto gog = build_graph_of_groups(c.in, c.mode());
    auto vk = build_presentation(gog, maximal_tree(gog.graph()));
    const auto & P = vk.presentation;
    c.report.data["generators"] = P.generators();
    json rel = json::array();
    for (auto & w : P.relators()) {
        rel.push_back(P.format(w));
        c.line("relator: " + P.format(w));
    }
    c.report.data["relators"] = rel;
    c.report.data["tree"] = edge_labels(gog.graph(), vk.tree.edges());
    c.verdict("van-kampen-presentation", true,
        std::to_string(P.generators().size()) + " generators, " + std::to_string(P.relators().size()) + " relators");
}

void gog_homs(Context & c)
{
    auto gog = build_graph_of_groups(c.in, c.mode());
    auto G = c.test_group();
    auto homs = enumerate_pi1_homs(gog, maximal_tree(gog.graph()), *G);
    auto naive = naive_limit_homs(gog, G);
    json list = json::array();
    for (std::size_t i = 0; i < homs.size() && i < 64; ++i)
        list.push_back(family_json(gog, *G, homs[i]));
    c.report.data["test_group"] = G->name();
    c.report.data["presentation_homs"] = homs.size();
    c.report.data["conjugacy_classes"] = count_conjugacy_classes(homs, *G);
    c.report.data["naive_limit_homs"] = naive.size();
    c.report.data["homs"] = list;
    c.report.data["listed"] = list.size();
    c.line("presentation homs: " + std::to_string(homs.size()));
    c.line("up to conjugation: " + std::to_string(count_conjugacy_classes(homs, *G)));
    c.line("naive limit homs: " + std::to_string(naive.size()));
    c.verdict("fundamental-group-homs", true, std::to_string(homs.size()) + " homs into " + G->name());
}

void gog_verify(Context & c)
{
    auto gog = build_graph_of_groups(c.in, c.mode());
    auto G = c.test_group();
    auto r = verify_tree_vankampen(gog, G);
    json d;
    d["graph_is_tree"] = r.graph_is_tree;
    d["presentation_homs"] = r.pi1_homs;
    d["naive_limit_homs"] = r.naive_homs;
    d["conjugacy_classes"] = r.pi1_conjugacy_classes;
    d["restriction_bijective"] = r.bijection();
    if (r.witness)
        d["witness"] = family_json(gog, *G, *r.witness);
    if (r.witness_partner)
        d["witness_partner"] = family_json(gog, *G, *r.witness_partner);
    c.report.data["van_kampen"] = d;
    const std::string counts =
        "presentation homs " + std::to_string(r.pi1_homs) + ", naive limit homs " + std::to_string(r.naive_homs);
    if (r.graph_is_tree)
        c.verdict("tree-van-kampen", r.bijection(),
            "tree graph; " + counts + (r.bijection() ? "; restriction is a bijection" : "; restriction is not a bijection"));
    else
        c.verdict("tree-van-kampen", r.consistent(), "non-tree detected; " + counts);
    if (c.all_trees()) {
        auto ind = verify_tree_independence(gog, *G);
        json counts_j = json::array();
        for (std::size_t i = 0; i < ind.trees.size(); ++i)
            counts_j.push_back({{"tree", edge_labels(gog.graph(), ind.trees[i].edges())}, {"homs", ind.counts[i]}});
        c.report.data["tree_independence"] = counts_j;
        c.verdict("maximal-tree-independence", ind.independent(),
            std::to_string(ind.trees.size()) + " spanning trees"
                + (ind.independent() ? ", equal hom counts" : ", hom counts differ"));
    }
}

void torsor_verify(Context & c)
{
    auto gog = build_graph_of_groups(c.in, c.mode());
    auto G = c.test_group();
    const auto & graph = gog.graph();

    // hom <-> torsor dictionary on every vertex groupoid
    bool dictionary = true;
    std::size_t functors = 0;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        auto gr = vertex_groupoid(gog, v);
        auto fs = enumerate_functors(gr, G);
        std::vector<MultipointedTorsor> ts;
        for (auto & f : fs) {
            ts.push_back(torsor_from_hom(f));
            dictionary = dictionary && hom_from_torsor(ts.back(), gr) == f;
        }
        functors += fs.size();
        if (ts.size() <= 300)
            for (std::size_t i = 0; i < ts.size(); ++i)
                for (std::size_t j = i + 1; j < ts.size(); ++j)
                    dictionary = dictionary && ! torsor_morphisms(ts[i], ts[j]);
    }
    c.verdict("torsor-dictionary", dictionary,
        std::to_string(functors) + " vertex functors, round trip " + (dictionary ? "exact" : "broken"));

    auto s = verify_setoid_equivalence(gog, G);
    c.report.data["global_classes"] = s.global_classes;
    c.report.data["fiber_classes"] = s.fiber_classes;
    c.report.data["transport_factor"] = s.transport_factor;
    c.report.data["normalized_global_classes"] = s.normalized_global();
    c.report.data["normalized_fiber_classes"] = s.normalized_fiber();
    c.line("global torsor classes: " + std::to_string(s.global_classes) + " (" + std::to_string(s.normalized_global())
        + " per choice of points)");
    c.line("fiber-product classes: " + std::to_string(s.fiber_classes) + " (" + std::to_string(s.normalized_fiber())
        + " per choice of points)");
    c.verdict("setoid-equivalence", s.equivalence() && s.global_classes == s.fiber_classes,
        std::to_string(s.normalized_global()) + " = " + std::to_string(s.normalized_fiber()));

    // patching: every global torsor is recovered from its local data
    bool patched = true;
    std::size_t solved = 0;
    for (auto & psi : enumerate_pi1_homs(gog, maximal_tree(graph), *G)) {
        if (solved >= 256)
            break;
        GlobalFunctor f{psi, std::vector<Element>(graph.edge_count(), G->identity())};
        auto t = global_torsor_from_functor(*G, f);
        auto sol = solve_patching(problem_from_global(gog, G, t));
        patched = patched && global_torsor_morphism(*G, sol.global, t).has_value();
        ++solved;
    }
    c.verdict("patching-solution", patched, std::to_string(solved) + " patching problems solved uniquely");
}

void pushout_verify(Context & c)
{
    auto gog = build_graph_of_groups(c.in, c.mode());
    auto G = c.test_group();
    auto r = verify_groupoid_pushout(gog, G);
    c.report.data["fiber_product_families"] = r.fiber_product_count;
    c.report.data["global_functors"] = r.global_functor_count;
    c.report.data["transport_factor"] = r.transport_factor;
    c.report.data["presentation_homs"] = r.pi1_homs;
    c.report.data["normalized_count"] = r.base_object_count;
    c.line("fiber-product families: " + std::to_string(r.fiber_product_count));
    c.line("global functors: " + std::to_string(r.global_functor_count) + " = " + std::to_string(r.pi1_homs) + " x "
        + std::to_string(r.transport_factor));
    c.verdict("groupoid-pushout", r.bijection() && r.agrees_with_presentation(),
        std::to_string(r.base_object_count) + " = " + std::to_string(r.pi1_homs)
            + (r.bijection() ? "; restriction is a bijection" : "; restriction is not a bijection"));
}

auto descent_section(const Context & c, const char * key) -> json
{
    if (! c.in.descent.contains(key) || ! c.in.descent[key].is_object())
        throw InputError({std::string("descent.") + key + ": this command needs this section"});
    return c.in.descent[key];
}

void descent_as(Context & c)
{
    auto j = descent_section(c, "artin_schreier");
    ASInstance inst;
    try {
        inst.k2 = CoeffField::parse_descriptor(j.value("field", ""));
        inst.k1_order = j.value("subfield", inst.k2->characteristic());
        inst.alpha = inst.k2->parse(j.value("alpha", ""));
        validate(inst);
    } catch (const InputError &) {
        throw;
    } catch (const std::exception & e) {
        throw InputError({std::string("descent.artin_schreier: ") + e.what()});
    }
    const long p = inst.p();
    const long bound = c.option_long(c.flags.support_bound, "support_bound", p * p);
    const long trunc = c.option_long(c.flags.truncation, "truncation", 50);

    auto crit = as_descends_galois(inst);
    auto oracle = as_brute_force_oracle(inst, bound, trunc);
    auto red = as_reduce(extension_datum(inst));
    c.report.data["field"] = inst.k2->descriptor();
    c.report.data["subfield_order"] = inst.k1_order;
    c.report.data["alpha"] = inst.k2->format(inst.alpha);
    c.report.data["support_bound"] = bound;
    c.report.data["truncation"] = trunc;
    c.report.data["criterion"] = verdict_label(crit.verdict);
    c.report.data["oracle"] = verdict_label(oracle.verdict, oracle.within_bounds);
    c.report.data["canonical_form"] = red.canonical.format();
    if (oracle.beta)
        c.report.data["witness"] = {{"beta", oracle.beta->format()}, {"gamma", oracle.gamma->format()}};
    c.report.verdicts.push_back({"artin-schreier-criterion", verdict_label(crit.verdict), crit.certificate});
    c.report.verdicts.push_back(
        {"artin-schreier-oracle", verdict_label(oracle.verdict, oracle.within_bounds), oracle.certificate});
    c.line("canonical form of alpha/t: " + red.canonical.format());
    if (oracle.verdict == Verdict::inconclusive) {
        c.report.verdicts.push_back({"criterion-oracle-agreement", "INCONCLUSIVE", "oracle search space empty"});
        c.report.status = Status::inconclusive;
        return;
    }
    c.verdict("criterion-oracle-agreement", crit.verdict == oracle.verdict,
        verdict_label(crit.verdict) + " vs " + verdict_label(oracle.verdict, oracle.within_bounds));
}

void descent_kummer(Context & c)
{
    auto j = descent_section(c, "kummer");
    const long trunc = c.option_long(c.flags.truncation, "truncation", j.value("truncation", 200L));
    auto inst = [&] {
        try {
            auto k = build_kummer_counterexample(j.value("p", 2u), trunc);
            if (j.contains("g") && j["g"].is_object()) {
                std::map<long, Coeff> terms;
                for (auto & [e, v] : j["g"].value("terms", json::object()).items())
                    terms.emplace(std::stol(e), k.base->parse(v.get<std::string>()));
                const bool exact = j["g"].value("exact", true);
                k.g = LaurentSeries::from_terms(
                    k.base, terms, exact ? LaurentSeries::Order{} : LaurentSeries::Order{trunc});
            } else if (j.contains("g") && j["g"] != "lacunary")
                throw Error("g must be \"lacunary\" or an object with terms");
            validate(k);
            return k;
        } catch (const std::exception & e) {
            throw InputError({std::string("descent.kummer: ") + e.what()});
        }
    }();
    const long bound = c.option_long(c.flags.search_bound, "search_bound", 4);
    if (bound < 0)
        throw InputError({"search_bound: must be nonnegative"});
    auto d = kummer_obstruction(inst, static_cast<unsigned>(bound));
    c.report.data["p"] = inst.p;
    c.report.data["g"] = inst.g.format("x");
    c.report.data["search_bound"] = bound;
    c.report.data["candidates"] = d.candidates;
    c.report.data["verdict"] = verdict_label(d.verdict, d.within_bounds);
    if (d.e)
        c.report.data["e"] = poly::format(inst.base->base(), *d.e, "x");
    c.report.verdicts.push_back({"kummer-obstruction", verdict_label(d.verdict, d.within_bounds), d.certificate});
    if (d.verdict == Verdict::inconclusive)
        c.report.status = Status::inconclusive;
}

void descent_cubic(Context & c)
{
    json j = c.in.descent.value("cubic", json::object());
    ReductionCertificate cert;
    try {
        cert = verify_cubic_identity(j.value("p", 3u), j.value("generator", std::string("Y^2")));
    } catch (const std::exception & e) {
        throw InputError({std::string("descent.cubic: ") + e.what()});
    }
    for (auto & s : cert.steps)
        c.line(s);
    c.report.data["p"] = cert.p;
    c.report.data["generator"] = cert.generator;
    c.report.data["steps"] = cert.steps;
    c.report.data["remainder"] = cert.remainder;
    c.verdict("cubic-generator-identity", cert.zero, "remainder = " + cert.remainder);
}

void index_bound_cmd(Context & c)
{
    if (! c.in.options.contains("local_indices") || ! c.in.options["local_indices"].is_object())
        throw InputError({"options.local_indices: this command needs an object of positive integers"});
    std::map<std::string, long long> idx;
    for (auto & [k, v] : c.in.options["local_indices"].items()) {
        if (! v.is_number_integer())
            throw InputError({"options.local_indices." + k + ": must be an integer"});
        if (c.in.graph && std::none_of(c.in.graph->vertices.begin(), c.in.graph->vertices.end(),
                              [&](const VertexSpec & s) { return s.label == k; }))
            throw InputError({"options.local_indices." + k + ": no vertex with this label"});
        idx[k] = v.get<long long>();
    }
    IndexBound b;
    try {
        b = index_bound(idx);
    } catch (const Error & e) {
        throw InputError({std::string("options.local_indices: ") + e.what()});
    }
    c.report.data["product"] = b.product;
    c.report.data["lcm"] = b.lcm;
    c.verdict("index-bound", b.product % b.lcm == 0,
        "product " + std::to_string(b.product) + ", lcm " + std::to_string(b.lcm));
}

void export_dot_cmd(Context & c)
{
    auto g = build_graph(c.in);
    auto t = maximal_tree(g);
    auto dot = export_dot(g, &t);
    c.report.data["dot_sha256"] = sha256_hex(dot);
    if (c.flags.dot_path) {
        std::ofstream out(*c.flags.dot_path, std::ios::binary);
        out << dot;
        if (! out)
            throw InputError({"--dot: cannot write " + *c.flags.dot_path});
        c.line("wrote " + *c.flags.dot_path);
    } else
        c.report.data["dot"] = dot;
    c.verdict("dot-export", true, std::to_string(dot.size()) + " bytes");
}

const std::vector<std::pair<std::string, std::function<void(Context &)>>> & table()
{
    static const std::vector<std::pair<std::string, std::function<void(Context &)>>> t{
        {"graph-check", graph_check},
        {"graph-tree", graph_tree},
        {"graph-rank", graph_rank},
        {"graph-covers", graph_covers},
        {"gog-presentation", gog_presentation},
        {"gog-homs", gog_homs},
        {"gog-verify", gog_verify},
        {"torsor-verify", torsor_verify},
        {"pushout-verify", pushout_verify},
        {"descent-as", descent_as},
        {"descent-kummer", descent_kummer},
        {"descent-example29", descent_cubic},
        {"index-bound", index_bound_cmd},
        {"export-dot", export_dot_cmd},
    };
    return t;
}

} // namespace

auto known_commands() -> const std::vector<std::string> &
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (auto & [k, f] : table())
            n.push_back(k);
        return n;
    }();
    return names;
}

auto run(const std::string & command, const WorkbenchInput & input, const Flags & flags) -> Report
{
    Report report;
    report.command = command;
    report.input_digest = input.digest;
    report.warnings = input.warnings;
    const auto start = std::chrono::steady_clock::now();
    Context c{input, flags, report};
    auto it = std::find_if(table().begin(), table().end(), [&](const auto & kv) { return kv.first == command; });
    try {
        if (it == table().end())
            throw InputError({"unknown command '" + command + "'"});
        it->second(c);
    } catch (const InputError & e) {
        report.status = Status::input_error;
        report.verdicts.clear();
        report.data = json::object();
        report.data["errors"] = e.problems();
        report.lines.clear();
        for (auto & p : e.problems())
            report.lines.push_back("error: " + p);
    } catch (const Error & e) {
        report.status = Status::input_error;
        report.verdicts.clear();
        report.data = json::object();
        report.data["errors"] = json::array({e.what()});
        report.lines = {std::string("error: ") + e.what()};
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

auto run_document(const std::string & command, const std::string & document, const Flags & flags) -> Report
{
    try {
        return run(command, parse_input(document), flags);
    } catch (const InputError & e) {
        Report r;
        r.command = command;
        r.input_digest = sha256_hex(document);
        r.status = Status::input_error;
        r.data["errors"] = e.problems();
        for (auto & p : e.problems())
            r.lines.push_back("error: " + p);
        return r;
    }
}

} // namespace patchwork
