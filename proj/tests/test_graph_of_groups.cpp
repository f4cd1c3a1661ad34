#include <patchwork/graph_of_groups.hpp>
#include <patchwork/error.hpp>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace patchwork;
using fixtures::S;
using fixtures::Z;

TEST_CASE("free product on a segment")
{
    auto gog = fixtures::amalgam(Z(2), Z(3));
    auto t = maximal_tree(gog.graph());
    CHECK(enumerate_pi1_homs(gog, t, *S(3)).size() == 12);
    auto r = verify_tree_vankampen(gog, S(3));
    CHECK(r.graph_is_tree);
    CHECK(r.bijection());
    CHECK(r.naive_homs == 12);
}

TEST_CASE("amalgam over a common subgroup")
{
    auto z2 = Z(2), z4 = Z(4), z6 = Z(6);
    GraphOfGroups gog(fixtures::segment(), {z4, z6}, {z2}, {GroupHom(z2, z4, {0, 2})}, {GroupHom(z2, z6, {0, 3})});
    auto t = maximal_tree(gog.graph());
    CHECK(enumerate_pi1_homs(gog, t, *z2).size() == 2);
    CHECK(naive_limit_homs(gog, z2).size() == 2);
}

TEST_CASE("circle with trivial groups")
{
    auto gog = GraphOfGroups::trivial(fixtures::circle());
    auto t = maximal_tree(gog.graph());
    CHECK(enumerate_pi1_homs(gog, t, *S(3)).size() == 6);
    CHECK(count_conjugacy_classes(enumerate_pi1_homs(gog, t, *S(3)), *S(3)) == 3);
    auto r = verify_tree_vankampen(gog, Z(2));
    CHECK_FALSE(r.graph_is_tree);
    CHECK(r.pi1_homs == 2);
    CHECK(r.naive_homs == 1);
    CHECK_FALSE(r.bijection());
    CHECK(r.consistent());
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->conjugators[1] != 0);
}

TEST_CASE("presentation shape")
{
    auto gog = fixtures::amalgam(Z(2), Z(3));
    auto vk = build_presentation(gog, maximal_tree(gog.graph()));
    // 2 + 3 element generators and one edge letter
    CHECK(vk.presentation.generators().size() == 6);
    // 4 + 9 table relators, 1 edge relation, 1 tree relator
    CHECK(vk.presentation.relators().size() == 15);
}

TEST_CASE("strict mode rejects non-injective edge maps")
{
    auto z2 = Z(2), z4 = Z(4);
    auto bad = GroupHom(z4, z2, {0, 1, 0, 1});
    CHECK_THROWS_AS(GraphOfGroups(fixtures::segment(), {z2, z2}, {z4}, {bad}, {bad}), Error);
    CHECK_NOTHROW(GraphOfGroups(fixtures::segment(), {z2, z2}, {z4}, {bad}, {bad}, EdgeMapMode::permissive));
}

TEST_CASE("property: random trees give a bijection with the naive limit")
{
    std::mt19937 rng(2024);
    auto vpool = fixtures::vertex_pool();
    vpool.resize(6);
    auto epool = fixtures::edge_pool();
    for (int round = 0; round < 30; ++round) {
        auto g = fixtures::random_graph(rng, {4, 0});
        auto gog = fixtures::random_groups(rng, g, vpool, epool);
        for (auto & G : {Z(2), Z(3), S(3)}) {
            auto r = verify_tree_vankampen(gog, G);
            CHECK(r.bijection());
            CHECK(r.pi1_homs == oracles::count_pi1_homs(gog, maximal_tree(g), G));
        }
    }
}

TEST_CASE("property: counts do not depend on the spanning tree")
{
    std::mt19937 rng(99);
    auto vpool = fixtures::vertex_pool();
    vpool.resize(6);
    auto epool = fixtures::edge_pool();
    for (int round = 0; round < 15; ++round) {
        auto g = fixtures::random_graph(rng, {4, 1 + static_cast<std::size_t>(rng() % 2)});
        auto gog = fixtures::random_groups(rng, g, vpool, epool);
        for (auto & G : {Z(2), S(3)}) {
            auto r = verify_tree_independence(gog, *G);
            CHECK(r.independent());
            CHECK(r.counts.front() == oracles::count_pi1_homs(gog, r.trees.front(), G));
        }
    }
}

TEST_CASE("property: a non-tree with trivial groups sees the free group")
{
    std::mt19937 rng(7);
    for (int round = 0; round < 10; ++round) {
        auto g = fixtures::random_graph(rng, {4, 1 + static_cast<std::size_t>(rng() % 2)});
        auto gog = GraphOfGroups::trivial(g);
        auto r = verify_tree_vankampen(gog, Z(2));
        CHECK(r.pi1_homs == (std::size_t{1} << cycle_rank(g)));
        CHECK(r.naive_homs == 1);
    }
}
