#include <patchwork/workbench.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

int main(int argc, char ** argv)
{
    using namespace patchwork;

    CLI::App app{"Graph-of-groups patching and descent workbench"};
    std::string command, path = "-";
    Flags flags;
    long degree = 0, support = 0, trunc = 0, search = 0;
    std::string group, dot;

    app.add_option("command", command, "command to run")->required()->check(CLI::IsMember(known_commands()));
    app.add_option("input", path, "input document (default: standard input)");
    auto * o_group = app.add_option("--group", group, "test group: name from the input or a descriptor");
    auto * o_degree = app.add_option("--degree", degree, "cover degree");
    auto * o_support = app.add_option("--support-bound", support, "support bound for the Artin-Schreier search");
    auto * o_trunc = app.add_option("--truncation", trunc, "series truncation order");
    auto * o_search = app.add_option("--search-bound", search, "degree bound for the Kummer search");
    auto * o_dot = app.add_option("--dot", dot, "write DOT output to this path");
    app.add_flag("--all-trees", flags.all_trees, "check every spanning tree");
    app.add_flag("--permissive", flags.permissive, "accept non-injective edge maps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? 0 : 3;
    }
    if (*o_group)
        flags.group = group;
    if (*o_degree)
        flags.degree = degree;
    if (*o_support)
        flags.support_bound = support;
    if (*o_trunc)
        flags.truncation = trunc;
    if (*o_search)
        flags.search_bound = search;
    if (*o_dot)
        flags.dot_path = dot;

    std::string document;
    if (path == "-") {
        document.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path, std::ios::binary);
        if (! in) {
            std::cerr << "cannot read " << path << "\n";
            return 3;
        }
        document.assign(std::istreambuf_iterator<char>(in), {});
    }

    auto report = run_document(command, document, flags);
    std::cout << report.render();
    return exit_code(report.status);
}
