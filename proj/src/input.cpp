#include <patchwork/workbench.hpp>
#include <patchwork/error.hpp>

#include <regex>
#include <set>

namespace patchwork {

using nlohmann::json;

namespace {

auto trim(const std::string & s) -> std::string
{
    const auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos)
        return "";
    return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

// split on " x " outside parentheses
auto split_product(const std::string & s) -> std::vector<std::string>
{
    std::vector<std::string> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(')
            ++depth;
        else if (s[i] == ')')
            --depth;
        else if (depth == 0 && s[i] == 'x' && i > 0 && i + 1 < s.size() && std::isspace(static_cast<unsigned char>(s[i - 1]))
            && std::isspace(static_cast<unsigned char>(s[i + 1]))) {
            parts.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    parts.push_back(trim(s.substr(start)));
    return parts;
}

auto group_from_table(const std::string & name, const json & j) -> FiniteGroup
{
    if (! j.contains("elements") || ! j["elements"].is_array() || ! j.contains("table") || ! j["table"].is_array())
        throw Error("explicit group needs 'elements' and 'table' arrays");
    std::vector<std::string> labels;
    for (auto & e : j["elements"]) {
        if (! e.is_string())
            throw Error("element labels must be strings");
        labels.push_back(e.get<std::string>());
    }
    const std::size_t n = labels.size();
    if (j["table"].size() != n)
        throw Error("table has " + std::to_string(j["table"].size()) + " rows for " + std::to_string(n) + " elements");
    std::vector<Element> table;
    for (std::size_t r = 0; r < n; ++r) {
        const auto & row = j["table"][r];
        if (! row.is_array() || row.size() != n)
            throw Error("table row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
        for (auto & x : row) {
            if (x.is_number_unsigned() && x.get<std::size_t>() < n)
                table.push_back(static_cast<Element>(x.get<std::size_t>()));
            else if (x.is_string()) {
                auto it = std::find(labels.begin(), labels.end(), x.get<std::string>());
                if (it == labels.end())
                    throw Error("table row " + std::to_string(r) + " names unknown element '" + x.get<std::string>()
                        + "'");
                table.push_back(static_cast<Element>(it - labels.begin()));
            } else
                throw Error("table row " + std::to_string(r) + " has an entry that is neither a label nor an index");
        }
    }
    return FiniteGroup(name, std::move(labels), std::move(table));
}

auto element_by_label(const FiniteGroup & G, const json & j, const std::string & what) -> Element
{
    if (j.is_number_unsigned() && j.get<std::size_t>() < G.order())
        return static_cast<Element>(j.get<std::size_t>());
    if (j.is_string()) {
        if (auto e = G.find(j.get<std::string>()))
            return *e;
        throw Error(what + ": '" + j.get<std::string>() + "' is not an element of " + G.name());
    }
    throw Error(what + ": element must be a label or an index");
}

auto map_table(const FiniteGroup & source, const FiniteGroup & target, const json & j) -> std::vector<Element>
{
    std::vector<Element> out(source.order());
    if (j.is_array()) {
        if (j.size() != source.order())
            throw Error("map lists " + std::to_string(j.size()) + " images for " + std::to_string(source.order())
                + " elements");
        for (std::size_t i = 0; i < j.size(); ++i)
            out[i] = element_by_label(target, j[i], "image of " + source.label(static_cast<Element>(i)));
        return out;
    }
    if (! j.is_object())
        throw Error("map must be an array of images or an object from element labels to images");
    std::vector<bool> seen(source.order(), false);
    for (auto & [k, v] : j.items()) {
        auto a = source.find(k);
        if (! a)
            throw Error("'" + k + "' is not an element of " + source.name());
        out[*a] = element_by_label(target, v, "image of " + k);
        seen[*a] = true;
    }
    for (Element a = 0; a < source.order(); ++a)
        if (! seen[a])
            throw Error("no image given for " + source.label(a));
    return out;
}

} // namespace

auto make_group(const std::string & descriptor) -> FiniteGroup
{
    const std::string d = trim(descriptor);
    auto parts = split_product(d);
    if (parts.size() > 1) {
        FiniteGroup g = make_group(parts[0]);
        for (std::size_t i = 1; i < parts.size(); ++i)
            g = FiniteGroup::direct_product(g, make_group(parts[i]));
        return g;
    }
    static const std::regex call(R"((cyclic|symmetric|dihedral)\s*\(\s*(\d+)\s*\))");
    static const std::regex alias(R"((Z/?|C|S|D)(\d+))");
    std::smatch m;
    std::string kind;
    std::size_t n = 0;
    if (std::regex_match(d, m, call)) {
        kind = m[1];
        n = std::stoul(m[2]);
    } else if (std::regex_match(d, m, alias)) {
        const std::string a = m[1];
        kind = a[0] == 'Z' || a == "C" ? "cyclic" : a == "S" ? "symmetric" : "dihedral";
        n = std::stoul(m[2]);
    } else if (d == "trivial" || d == "1") {
        return FiniteGroup::trivial();
    } else if (! d.empty() && d.front() == '(' && d.back() == ')') {
        return make_group(d.substr(1, d.size() - 2));
    } else
        throw Error("unrecognised group descriptor '" + d + "'");
    if (kind == "cyclic")
        return FiniteGroup::cyclic(n);
    if (kind == "symmetric")
        return FiniteGroup::symmetric(n);
    return FiniteGroup::dihedral(n);
}

InputError::InputError(std::vector<std::string> problems) :
    Error([&] {
        std::string s = "invalid input:";
        for (auto & p : problems)
            s += "\n  " + p;
        return s;
    }()),
    problems_(std::move(problems))
{
}

auto resolve_group(const WorkbenchInput & input, const std::string & name) -> GroupPtr
{
    auto it = input.groups.find(name);
    if (it != input.groups.end())
        return it->second;
    return share(make_group(name));
}

auto parse_input(const std::string & document) -> WorkbenchInput
{
    WorkbenchInput in;
    in.digest = sha256_hex(document);
    std::vector<std::string> errs;

    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error & e) {
        throw InputError({std::string("document is not valid JSON: ") + e.what()});
    }
    if (! doc.is_object())
        throw InputError({"document must be a JSON object"});

    static const std::set<std::string> top{"version", "groups", "graph", "edge_maps", "descent", "options"};
    for (auto & [k, v] : doc.items())
        if (! top.count(k))
            in.warnings.push_back("unknown key '" + k + "' ignored");

    if (! doc.contains("version"))
        errs.push_back("version: missing schema version");
    else if (! doc["version"].is_number_integer() || doc["version"].get<int>() != 1)
        errs.push_back("version: unsupported schema version " + doc["version"].dump() + " (expected 1)");
    else
        in.version = 1;

    if (doc.contains("groups")) {
        if (! doc["groups"].is_object())
            errs.push_back("groups: must be an object");
        else
            for (auto & [name, g] : doc["groups"].items()) {
                try {
                    if (g.is_string()) {
                        auto grp = make_group(g.get<std::string>());
                        in.groups[name] = share(FiniteGroup(name, grp.labels(),
                            std::vector<Element>(grp.table().begin(), grp.table().end())));
                    } else if (g.is_object())
                        in.groups[name] = share(group_from_table(name, g));
                    else
                        errs.push_back("groups." + name + ": must be a descriptor string or a table object");
                } catch (const Error & e) {
                    errs.push_back("groups." + name + ": " + e.what());
                }
            }
    }

    auto group_ref = [&](const json & owner, const std::string & path) -> GroupPtr {
        if (! owner.contains("group"))
            return share(FiniteGroup::trivial());
        if (! owner["group"].is_string()) {
            errs.push_back(path + ".group: must be a string");
            return nullptr;
        }
        try {
            return resolve_group(in, owner["group"].get<std::string>());
        } catch (const Error & e) {
            errs.push_back(path + ".group: unknown group '" + owner["group"].get<std::string>() + "' (" + e.what() + ")");
            return nullptr;
        }
    };

    if (doc.contains("graph")) {
        const auto & g = doc["graph"];
        GraphSpec spec;
        std::map<std::string, std::size_t> vindex;
        if (! g.is_object() || ! g.contains("vertices") || ! g["vertices"].is_array() || ! g.contains("edges")
            || ! g["edges"].is_array())
            errs.push_back("graph: needs 'vertices' and 'edges' arrays");
        else {
            for (std::size_t i = 0; i < g["vertices"].size(); ++i) {
                const auto & v = g["vertices"][i];
                const std::string path = "graph.vertices[" + std::to_string(i) + "]";
                if (! v.is_object() || ! v.contains("label") || ! v["label"].is_string()) {
                    errs.push_back(path + ": needs a string 'label'");
                    continue;
                }
                const std::string kind = v.value("kind", "");
                if (kind != "point" && kind != "component") {
                    errs.push_back(path + ".kind: must be 'point' or 'component'");
                    continue;
                }
                spec.vertices.push_back(
                    {v["label"].get<std::string>(), kind == "point" ? VertexKind::point : VertexKind::component});
                vindex.emplace(spec.vertices.back().label, spec.vertices.size() - 1);
                in.vertex_groups.push_back(group_ref(v, path));
            }
            for (std::size_t i = 0; i < g["edges"].size(); ++i) {
                const auto & e = g["edges"][i];
                const std::string path = "graph.edges[" + std::to_string(i) + "]";
                if (! e.is_object() || ! e.contains("label") || ! e["label"].is_string()) {
                    errs.push_back(path + ": needs a string 'label'");
                    continue;
                }
                const std::string label = e["label"].get<std::string>();
                if (! e.contains("ends") || ! e["ends"].is_array() || e["ends"].size() != 2 || ! e["ends"][0].is_string()
                    || ! e["ends"][1].is_string()) {
                    errs.push_back(path + ".ends: edge " + label + " needs two vertex labels");
                    continue;
                }
                EdgeSpec es{label, {e["ends"][0].get<std::string>(), e["ends"][1].get<std::string>()}};
                bool dangling = false;
                for (int j = 0; j < 2; ++j)
                    if (! vindex.count(es.ends[j])) {
                        errs.push_back(path + ".ends[" + std::to_string(j) + "]: edge " + label
                            + " references undeclared vertex '" + es.ends[j] + "'");
                        dangling = true;
                    }
                if (dangling)
                    continue;
                spec.edges.push_back(es);
                in.edge_groups.push_back(group_ref(e, path));
            }
            in.graph = spec;
        }

        // edge maps, resolved to element tables
        json maps = doc.value("edge_maps", json::object());
        if (! maps.is_object()) {
            errs.push_back("edge_maps: must be an object");
            maps = json::object();
        }
        for (auto & [label, m] : maps.items())
            if (std::none_of(spec.edges.begin(), spec.edges.end(), [&](const EdgeSpec & e) { return e.label == label; }))
                errs.push_back("edge_maps." + label + ": no edge with this label");
        for (std::size_t i = 0; in.graph && i < spec.edges.size(); ++i) {
            const auto & es = spec.edges[i];
            const auto Ge = in.edge_groups[i];
            std::array<GroupPtr, 2> ends{in.vertex_groups[vindex[es.ends[0]]], in.vertex_groups[vindex[es.ends[1]]]};
            std::array<VertexKind, 2> kinds{
                spec.vertices[vindex[es.ends[0]]].kind, spec.vertices[vindex[es.ends[1]]].kind};
            if (! Ge || ! ends[0] || ! ends[1] || kinds[0] == kinds[1]) {
                in.to_point.emplace_back();
                in.to_component.emplace_back();
                continue;
            }
            const int pi = kinds[0] == VertexKind::point ? 0 : 1;
            auto table_for = [&](const char * side, const GroupPtr & target) -> std::vector<Element> {
                const std::string path = "edge_maps." + es.label + "." + side;
                if (maps.contains(es.label) && maps[es.label].contains(side)) {
                    try {
                        return map_table(*Ge, *target, maps[es.label][side]);
                    } catch (const Error & e) {
                        errs.push_back(path + ": " + e.what());
                        return {};
                    }
                }
                if (Ge->order() == 1)
                    return {target->identity()};
                errs.push_back(path + ": missing map from a nontrivial edge group");
                return {};
            };
            in.to_point.push_back(table_for("point", ends[pi]));
            in.to_component.push_back(table_for("component", ends[1 - pi]));
        }
    } else if (doc.contains("edge_maps"))
        errs.push_back("edge_maps: given without a graph");

    if (doc.contains("descent")) {
        if (! doc["descent"].is_object())
            errs.push_back("descent: must be an object");
        else
            in.descent = doc["descent"];
    }
    if (doc.contains("options")) {
        static const std::set<std::string> known{"test_group", "degree", "support_bound", "truncation",
            "search_bound", "local_indices", "all_trees", "permissive"};
        if (! doc["options"].is_object())
            errs.push_back("options: must be an object");
        else {
            in.options = doc["options"];
            for (auto & [k, v] : in.options.items())
                if (! known.count(k))
                    in.warnings.push_back("unknown option 'options." + k + "' ignored");
        }
    }
    if (! errs.empty())
        throw InputError(std::move(errs));
    return in;
}

auto build_graph(const WorkbenchInput & input) -> ReductionGraph
{
    if (! input.graph)
        throw InputError({"graph: this command needs a graph section"});
    auto report = validate(*input.graph);
    if (! report.ok()) {
        std::vector<std::string> p;
        for (auto & s : report.problems)
            p.push_back("graph: " + s);
        throw InputError(std::move(p));
    }
    return ReductionGraph(*input.graph);
}

auto build_graph_of_groups(const WorkbenchInput & input, EdgeMapMode mode) -> GraphOfGroups
{
    ReductionGraph graph = build_graph(input);
    // parse order follows declaration order, which is the graph's canonical order
    std::vector<GroupHom> to_point, to_component;
    std::vector<std::string> errs;
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
        const auto & ed = graph.edge(e);
        try {
            to_point.emplace_back(input.edge_groups[e], input.vertex_groups[ed.point], input.to_point[e]);
            to_component.emplace_back(input.edge_groups[e], input.vertex_groups[ed.component], input.to_component[e]);
        } catch (const Error & ex) {
            errs.push_back("edge_maps." + ed.label + ": " + ex.what());
        }
    }
    if (! errs.empty())
        throw InputError(std::move(errs));
    try {
        return GraphOfGroups(std::move(graph), input.vertex_groups, input.edge_groups, std::move(to_point),
            std::move(to_component), mode);
    } catch (const InputError &) {
        throw;
    } catch (const Error & ex) {
        throw InputError({std::string("graph of groups: ") + ex.what()});
    }
}

} // namespace patchwork
