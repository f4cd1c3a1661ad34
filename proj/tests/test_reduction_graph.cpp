#include <patchwork/reduction_graph.hpp>
#include <patchwork/error.hpp>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace patchwork;

TEST_CASE("validation lists every problem")
{
    GraphSpec s;
    s.vertices = {{"P", VertexKind::point}, {"Q", VertexKind::point}, {"U", VertexKind::component}};
    s.edges = {{"b1", {"P", "Q"}}, {"b2", {"P", "X"}}, {"b1", {"P", "U"}}};
    auto r = validate(s);
    CHECK(r.problems.size() >= 3);
    CHECK_THROWS_AS(ReductionGraph{s}, Error);

    GraphSpec disconnected;
    disconnected.vertices = {{"P", VertexKind::point}, {"U", VertexKind::component}, {"V", VertexKind::component}};
    disconnected.edges = {{"b1", {"P", "U"}}};
    CHECK_FALSE(validate(disconnected).ok());

    GraphSpec empty;
    CHECK_FALSE(validate(empty).ok());
}

TEST_CASE("edge ends are resolved regardless of order")
{
    auto g = fixtures::graph({"P"}, {"U"}, {{"U", "P"}});
    CHECK(g.vertex(g.edge(0).point).label == "P");
    CHECK(g.vertex(g.edge(0).component).label == "U");
}

TEST_CASE("cycle rank and spanning trees")
{
    CHECK(cycle_rank(fixtures::segment()) == 0);
    CHECK(is_tree(fixtures::segment()));
    CHECK(cycle_rank(fixtures::circle()) == 1);
    CHECK(cycle_rank(fixtures::theta()) == 2);
    CHECK(all_spanning_trees(fixtures::theta()).size() == 3);
    CHECK(all_spanning_trees(fixtures::circle()).size() == 2);
    // 4-cycle P1 U1 P2 U2
    auto square = fixtures::graph({"P1", "P2"}, {"U1", "U2"}, {{"P1", "U1"}, {"P2", "U1"}, {"P2", "U2"}, {"P1", "U2"}});
    CHECK(cycle_rank(square) == 1);
    CHECK(all_spanning_trees(square).size() == 4);
    CHECK(maximal_tree(square).edges() == std::vector<std::size_t>{0, 1, 2});
    CHECK_THROWS_AS(SpanningTree(square, {0, 1}), Error);
    CHECK_THROWS_AS(SpanningTree(square, {0, 1, 2, 3}), Error);
}

TEST_CASE("connected covers of small graphs")
{
    for (std::size_t n = 1; n <= 5; ++n)
        CHECK(enumerate_connected_covers(fixtures::circle(), n).size() == 1);
    CHECK(enumerate_connected_covers(fixtures::theta(), 2).size() == 3);
    CHECK(enumerate_connected_covers(fixtures::theta(), 3).size() == 7);
    CHECK(enumerate_connected_covers(fixtures::segment(), 1).size() == 1);
    CHECK(enumerate_connected_covers(fixtures::segment(), 2).empty());
    for (auto & c : enumerate_connected_covers(fixtures::theta(), 3)) {
        CHECK(c.is_connected());
        ReductionGraph total(c.total_space(fixtures::theta()));
        CHECK(total.vertex_count() == 6);
        CHECK(total.edge_count() == 9);
    }
}

TEST_CASE("property: cover counts match brute-force orbit counting")
{
    std::mt19937 rng(5);
    for (int round = 0; round < 12; ++round) {
        auto g = fixtures::random_graph(rng, {3, static_cast<std::size_t>(rng() % 3)});
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto expected = oracles::count_connected_covers(g, n);
            CHECK(enumerate_connected_covers(g, n).size() == expected);
            for (auto & t : all_spanning_trees(g))
                CHECK(enumerate_connected_covers(g, n, t).size() == expected);
        }
    }
}

TEST_CASE("index bound")
{
    auto b = index_bound({{"P1", 4}, {"P2", 6}});
    CHECK(b.product == 24);
    CHECK(b.lcm == 12);
    CHECK(index_bound({}).product == 1);
    CHECK_THROWS_AS(index_bound({{"P", 0}}), Error);
    CHECK_THROWS_AS(index_bound({{"P", 1LL << 40}, {"Q", 1LL << 40}}), Error);
}

TEST_CASE("dot export")
{
    auto g = fixtures::circle();
    auto t = maximal_tree(g);
    auto dot = export_dot(g, &t);
    CHECK(dot.rfind("graph", 0) == 0);
    CHECK(dot.find("shape=box") != std::string::npos);
    CHECK(dot.find("shape=ellipse") != std::string::npos);
    CHECK(dot.find("dashed") != std::string::npos);
    CHECK(export_dot(g).find("dashed") == std::string::npos);
}
