#include <patchwork/patching.hpp>
#include <patchwork/error.hpp>

#include "support/fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace patchwork;
using fixtures::S;
using fixtures::Z;

namespace {

auto global_torsors(const GraphOfGroups & gog, const GroupPtr & G) -> std::vector<GlobalTorsor>
{
    std::vector<GlobalTorsor> out;
    for (auto & psi : enumerate_pi1_homs(gog, maximal_tree(gog.graph()), *G))
        out.push_back(global_torsor_from_functor(*G, {psi, std::vector<Element>(gog.graph().edge_count(), 0)}));
    return out;
}

} // namespace

TEST_CASE("trivial test group")
{
    auto gog = fixtures::amalgam(Z(2), Z(3));
    auto p = verify_groupoid_pushout(gog, fixtures::one());
    CHECK(p.global_functor_count == 1);
    CHECK(p.fiber_product_count == 1);
    auto s = verify_setoid_equivalence(gog, fixtures::one());
    CHECK(s.global_classes == 1);
    CHECK(s.fiber_classes == 1);
}

TEST_CASE("free product into S3")
{
    auto gog = fixtures::amalgam(Z(2), Z(3));
    auto p = verify_groupoid_pushout(gog, S(3));
    CHECK(p.bijection());
    CHECK(p.pi1_homs == 12);
    CHECK(p.fiber_product_count == 12);
    CHECK(p.agrees_with_presentation());
    auto s = verify_setoid_equivalence(gog, S(3));
    CHECK(s.equivalence());
    CHECK(s.global_classes == 12);
    CHECK(s.fiber_classes == 12);
}

TEST_CASE("circle and theta with trivial groups")
{
    auto circle = GraphOfGroups::trivial(fixtures::circle());
    auto s = verify_setoid_equivalence(circle, Z(3));
    CHECK(s.equivalence());
    CHECK(s.normalized_global() == 3);
    CHECK(s.normalized_fiber() == 3);

    auto theta = GraphOfGroups::trivial(fixtures::theta());
    auto p = verify_groupoid_pushout(theta, Z(2));
    CHECK(p.bijection());
    CHECK(p.pi1_homs == 4);
    CHECK(p.base_object_count == 4);
    CHECK(p.transport_factor == 4);
    CHECK(p.fiber_product_count == 16);
}

TEST_CASE("gluing inverts restriction")
{
    auto gog = GraphOfGroups::trivial(fixtures::theta());
    auto G = S(3);
    auto tree = maximal_tree(gog.graph());
    for (auto & fam : fiber_product_families(gog, G)) {
        auto glued = glue_from_vertices(gog, tree, *G, fam);
        REQUIRE(glued.has_value());
        CHECK(restrict_to_vertices(gog, *G, *glued) == fam);
    }
}

TEST_CASE("patching on the circle has one solution per presentation hom")
{
    auto gog = GraphOfGroups::trivial(fixtures::circle());
    auto G = Z(2);
    auto ts = global_torsors(gog, G);
    CHECK(ts.size() == 2);
    CHECK_FALSE(global_torsor_morphism(*G, ts[0], ts[1]).has_value());
    for (auto & t : ts) {
        auto sol = solve_patching(problem_from_global(gog, G, t));
        CHECK(global_torsor_morphism(*G, sol.global, t).has_value());
    }
}

TEST_CASE("incompatible branch data names the edge")
{
    auto z2 = Z(2);
    auto id = GroupHom::identity(z2);
    GraphOfGroups gog(fixtures::segment(), {z2, z2}, {z2}, {id}, {id});
    auto ts = global_torsors(gog, z2);
    REQUIRE(ts.size() == 2);
    auto good = problem_from_global(gog, z2, ts[0]);
    auto other = problem_from_global(gog, z2, ts[1]);
    auto bad = good;
    bad.branch_data[0] = other.branch_data[0];
    try {
        solve_patching(bad);
        FAIL("expected an incompatibility error");
    } catch (const Error & e) {
        CHECK(std::string(e.what()).find("b1") != std::string::npos);
    }
}

TEST_CASE("property: pushout and setoid checks on random graphs of groups")
{
    std::mt19937 rng(31);
    auto vpool = fixtures::vertex_pool();
    vpool.resize(6);
    auto epool = fixtures::edge_pool();
    epool.resize(3);
    for (int round = 0; round < 12; ++round) {
        auto g = fixtures::random_graph(rng, {3, static_cast<std::size_t>(rng() % 2)});
        auto gog = fixtures::random_groups(rng, g, vpool, epool);
        for (auto & G : {Z(2), Z(3), S(3)}) {
            auto p = verify_groupoid_pushout(gog, G);
            CHECK(p.bijection());
            CHECK(p.agrees_with_presentation());
            for (auto & t : all_spanning_trees(g))
                CHECK(verify_groupoid_pushout(gog, G, t).pi1_homs == p.pi1_homs);
            if (g.edge_count() <= 3) {
                auto s = verify_setoid_equivalence(gog, G);
                CHECK(s.equivalence());
                CHECK(s.normalized_global() == p.pi1_homs);
            }
        }
    }
}

TEST_CASE("property: patching solutions are unique up to unique isomorphism")
{
    std::mt19937 rng(17);
    auto vpool = fixtures::vertex_pool();
    vpool.resize(6);
    auto epool = fixtures::edge_pool();
    epool.resize(3);
    for (int round = 0; round < 10; ++round) {
        auto g = fixtures::random_graph(rng, {3, static_cast<std::size_t>(rng() % 2)});
        auto gog = fixtures::random_groups(rng, g, vpool, epool);
        auto G = S(3);
        for (auto & t : global_torsors(gog, G)) {
            auto problem = problem_from_global(gog, G, t);
            auto a = solve_patching(problem);
            CHECK(global_torsor_morphism(*G, a.global, t).has_value());
            for (auto & tree : all_spanning_trees(g)) {
                auto b = solve_patching(problem, tree);
                // solutions for other trees live in another presentation; compare locally
                auto la = restrict_global_torsor(gog, G, a.global);
                auto lb = restrict_global_torsor(gog, G, b.global);
                for (std::size_t v = 0; v < la.size(); ++v) {
                    CHECK(torsor_morphisms(la[v], lb[v]).has_value());
                    CHECK(torsor_morphisms(lb[v], problem.vertex_data[v]).has_value());
                }
            }
        }
    }
}
