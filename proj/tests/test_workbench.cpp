#include <patchwork/workbench.hpp>

#include <doctest.h>

#include <fstream>
#include <iterator>

using namespace patchwork;

namespace {

auto read_data(const std::string & name) -> std::string
{
    std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), {}};
}

auto problems_of(const std::string & doc) -> std::vector<std::string>
{
    try {
        parse_input(doc);
    } catch (const InputError & e) {
        return e.problems();
    }
    return {};
}

auto mentions(const std::vector<std::string> & ps, const std::string & needle) -> bool
{
    for (auto & p : ps)
        if (p.find(needle) != std::string::npos)
            return true;
    return false;
}

const std::string minimal = R"({"version": 1, "graph": {"vertices": [{"label": "P", "kind": "point"},
    {"label": "U", "kind": "component"}], "edges": [{"label": "b1", "ends": ["P", "U"]}]}})";

} // namespace

TEST_CASE("group descriptors")
{
    CHECK(make_group("cyclic(5)").order() == 5);
    CHECK(make_group("S3").order() == 6);
    CHECK(make_group("Z/4").order() == 4);
    CHECK(make_group("D4").order() == 8);
    CHECK(make_group("Z2 x Z3").order() == 6);
    CHECK(make_group("trivial").order() == 1);
    CHECK_THROWS(make_group("Q8"));
}

TEST_CASE("minimal document parses")
{
    auto in = parse_input(minimal);
    CHECK(in.version == 1);
    REQUIRE(in.graph.has_value());
    CHECK(in.graph->edges.size() == 1);
    CHECK(in.warnings.empty());
}

TEST_CASE("schema errors carry paths")
{
    CHECK(mentions(problems_of(R"({"graph": {"vertices": [], "edges": []}})"), "version"));

    auto dangling = problems_of(R"({"version": 1, "graph": {"vertices": [{"label": "P", "kind": "point"}],
        "edges": [{"label": "b7", "ends": ["P", "X"]}]}})");
    CHECK(mentions(dangling, "b7"));

    // a*b is not associative here
    auto bad = problems_of(R"({"version": 1, "groups": {"L": {"elements": ["e","a","b","c","d"],
        "table": [[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]}}})");
    CHECK(mentions(bad, "groups.L"));
    CHECK(mentions(bad, "("));

    auto in = parse_input(R"({"version": 1, "extras": 3})");
    CHECK(mentions(in.warnings, "extras"));
}

TEST_CASE("exit codes")
{
    CHECK(exit_code(Status::pass) == 0);
    CHECK(exit_code(Status::fail) == 1);
    CHECK(exit_code(Status::inconclusive) == 2);
    CHECK(exit_code(Status::input_error) == 3);
    CHECK(run_document("graph-check", "{", {}).status == Status::input_error);
    CHECK(run_document("graph-check", minimal, {}).status == Status::pass);
}

TEST_CASE("theta graph covers")
{
    const std::string theta = R"({"version": 1, "graph": {"vertices": [{"label": "P", "kind": "point"},
        {"label": "U", "kind": "component"}], "edges": [{"label": "b1", "ends": ["P", "U"]},
        {"label": "b2", "ends": ["P", "U"]}, {"label": "b3", "ends": ["P", "U"]}]}})";
    Flags f;
    f.degree = 2;
    auto r = run_document("graph-covers", theta, f);
    CHECK(r.status == Status::pass);
    CHECK(r.data["covers"].size() == 3);
    CHECK(r.render().find("3 connected covers") != std::string::npos);
}

TEST_CASE("every command runs on the full fixture")
{
    const auto doc = read_data("workbench.json");
    for (auto & cmd : known_commands()) {
        auto r = run_document(cmd, doc, {});
        CAPTURE(cmd);
        CHECK(r.status != Status::input_error);
        CHECK(r.digest() == run_document(cmd, doc, {}).digest());
        CHECK(r.input_digest == sha256_hex(doc));
    }
}

TEST_CASE("flags override options")
{
    const auto doc = read_data("workbench.json");
    Flags f;
    f.support_bound = 0;
    CHECK(run_document("descent-as", doc, f).status == Status::inconclusive);
    Flags g;
    g.group = "trivial";
    CHECK(run_document("gog-homs", doc, g).status == Status::pass);
}

TEST_CASE("sha256")
{
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
