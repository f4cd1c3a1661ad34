#include <patchwork/group.hpp>
#include <patchwork/presentation.hpp>
#include <patchwork/error.hpp>

#include "support/fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace patchwork;
using fixtures::S;
using fixtures::Z;

namespace {

auto count_of_order(const FiniteGroup & G, std::size_t k) -> std::size_t
{
    std::size_t n = 0;
    for (Element a = 0; a < G.order(); ++a)
        n += G.element_order(a) == k;
    return n;
}

auto element(const FiniteGroup & G, const std::string & label) -> Element
{
    auto e = G.find(label);
    REQUIRE(e.has_value());
    return *e;
}

} // namespace

TEST_CASE("standard groups")
{
    CHECK(FiniteGroup::cyclic(1).order() == 1);
    auto s3 = FiniteGroup::symmetric(3);
    CHECK(s3.order() == 6);
    CHECK(count_of_order(s3, 2) == 3);
    CHECK(count_of_order(s3, 3) == 2);
    CHECK_FALSE(s3.is_abelian());
    auto v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    CHECK(v4.order() == 4);
    CHECK(v4.exponent() == 2);
    auto d4 = FiniteGroup::dihedral(4);
    CHECK(d4.order() == 8);
    CHECK(count_of_order(d4, 2) == 5);
    CHECK(FiniteGroup::symmetric(4).order() == 24);
}

TEST_CASE("bad multiplication tables are rejected")
{
    // 0 1 / 1 1 is not a group: 1 has no inverse
    CHECK_THROWS_AS(FiniteGroup("bad", {"e", "a"}, {0, 1, 1, 1}), Error);
    CHECK_THROWS_AS(FiniteGroup("bad", {"e", "a"}, {0, 1, 1}), Error);
    // nonassociative loop of order 5
    std::vector<Element> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
    CHECK_THROWS_AS(FiniteGroup("loop", {"e", "a", "b", "c", "d"}, loop), Error);
}

TEST_CASE("permutation products apply the right factor first")
{
    auto s3 = FiniteGroup::symmetric(3);
    const Element c = element(s3, "(1 2 3)"), t = element(s3, "(1 2)");
    CHECK(s3.label(s3.conjugate(c, t)) == "(2 3)");
}

TEST_CASE("restriction along a monomorphism")
{
    auto z2 = Z(2), z4 = Z(4);
    GroupHom incl(z2, z4, {0, 2});
    GroupHom surj(z4, z2, {0, 1, 0, 1});
    CHECK(restrict_hom(surj, incl).is_trivial());
    CHECK(restrict_hom(surj, GroupHom::identity(z4)) == surj);
    CHECK(restrict_hom(GroupHom::trivial(z4, z2), incl).is_trivial());
    CHECK_THROWS_AS(restrict_hom(surj, GroupHom(z4, z2, {0, 1, 0, 1})), Error);
}

TEST_CASE("conjugating a hom")
{
    auto s3 = S(3);
    const Element t = element(*s3, "(1 2)"), c = element(*s3, "(1 2 3)");
    GroupHom f(Z(2), s3, {s3->identity(), t});
    CHECK(s3->label(conjugate_hom(f, c)(1)) == "(2 3)");
    CHECK(conjugate_hom(f, s3->identity()) == f);
    GroupHom g(Z(2), Z(4), {0, 2});
    for (Element x = 0; x < 4; ++x)
        CHECK(conjugate_hom(g, x) == g);
}

TEST_CASE("hom counts")
{
    CHECK(all_homs(Z(2), S(3)).size() == 4);
    CHECK(all_homs(Z(3), S(3)).size() == 3);
    CHECK(all_homs(S(3), S(3)).size() == 10);
    CHECK(all_homs(S(3), Z(2)).size() == 2);
    CHECK(all_homs(S(3), Z(3)).size() == 1);
    CHECK(all_homs(Z(6), S(3)).size() == 6);
    auto v4 = share(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
    CHECK(all_homs(v4, S(3)).size() == 10);
}

TEST_CASE("presentation hom counts")
{
    auto count = [](std::size_t gens, std::vector<Word> relators, const FiniteGroup & G) {
        Presentation p;
        for (std::size_t i = 0; i < gens; ++i)
            p.add_generator("x" + std::to_string(i));
        for (auto & w : relators)
            p.add_relator(w);
        return count_homs(p, G);
    };
    CHECK(count(1, {{{0}, {0}}}, FiniteGroup::symmetric(3)) == 4);
    CHECK(count(1, {{{0}, {0}, {0}}}, FiniteGroup::trivial()) == 1);
    CHECK(count(2, {}, FiniteGroup::cyclic(2)) == 4);
}

TEST_CASE("property: presentation enumeration agrees with generator search")
{
    // presentation from the full multiplication table of the source
    std::mt19937 rng(11);
    auto pool = fixtures::vertex_pool();
    for (int round = 0; round < 25; ++round) {
        auto A = pool[rng() % pool.size()], B = pool[rng() % pool.size()];
        Presentation p;
        for (Element a = 0; a < A->order(); ++a)
            p.add_generator(A->label(a));
        for (Element a = 0; a < A->order(); ++a)
            for (Element b = 0; b < A->order(); ++b)
                p.add_relator({{a}, {b}, {A->mul(a, b), true}});
        CHECK(count_homs(p, *B) == all_homs(A, B).size());
    }
}

TEST_CASE("property: homs respect products and are sorted")
{
    auto pool = fixtures::vertex_pool();
    for (auto & A : pool)
        for (auto & B : {Z(2), Z(3), S(3)}) {
            auto hs = all_homs(A, B);
            for (std::size_t i = 1; i < hs.size(); ++i)
                CHECK(hs[i - 1].table() < hs[i].table());
            for (auto & h : hs)
                for (Element a = 0; a < A->order(); ++a)
                    for (Element b = 0; b < A->order(); ++b)
                        CHECK(h(A->mul(a, b)) == B->mul(h(a), h(b)));
        }
}
