#include <patchwork/torsor.hpp>
#include <patchwork/error.hpp>

#include "support/fixtures.hpp"

#include <doctest.h>

using namespace patchwork;
using fixtures::S;
using fixtures::Z;

namespace {

auto objects(std::size_t n) -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back("s" + std::to_string(i));
    return out;
}

/// Every morphism t1 -> t2, found by trying each image of carrier point 0.
auto count_morphisms(const MultipointedTorsor & t1, const MultipointedTorsor & t2) -> std::size_t
{
    const auto & G = *t1.structure_group();
    std::size_t n = 0;
    for (CarrierPoint w = 0; w < t2.carrier_size(); ++w) {
        TorsorMorphism m{std::vector<CarrierPoint>(t1.carrier_size())};
        // carrier point 0 . g goes to w . g
        for (Element g = 0; g < G.order(); ++g)
            m.map[t1.act_right(0, g)] = t2.act_right(w, g);
        n += is_morphism(t1, t2, m);
    }
    return n;
}

} // namespace

TEST_CASE("trivial functor gives the trivial torsor")
{
    ModelGroupoid gr(objects(1), Z(3));
    auto f = GroupoidFunctor::from_generators(gr, Z(2), {0, 0, 0}, {0});
    auto t = torsor_from_hom(f);
    CHECK(t.point(0) == 0);
    for (Element g = 0; g < 3; ++g)
        for (CarrierPoint z = 0; z < 2; ++z)
            CHECK(t.act_left(g, z) == z);
    CHECK(hom_from_torsor(t, gr) == f);
}

TEST_CASE("identity character gives a nontrivial left action")
{
    ModelGroupoid gr(objects(1), Z(2));
    auto t = torsor_from_hom(GroupoidFunctor::from_generators(gr, Z(2), {0, 1}, {0}));
    CHECK(t.act_left(1, 0) == 1);
    CHECK(t.act_left(1, 1) == 0);
    for (Element a = 0; a < 2; ++a)
        for (Element g = 0; g < 2; ++g)
            for (CarrierPoint z = 0; z < 2; ++z)
                CHECK(t.act_left(a, t.act_right(z, g)) == t.act_right(t.act_left(a, z), g));
}

TEST_CASE("connecting arrow value moves the second point")
{
    auto s3 = S(3);
    ModelGroupoid gr(objects(2), fixtures::one());
    for (Element g = 0; g < s3->order(); ++g) {
        auto t = torsor_from_hom(GroupoidFunctor::from_generators(gr, s3, {s3->identity()}, {s3->identity(), g}));
        CHECK(t.point(0) == s3->identity());
        CHECK(t.point(1) == s3->inv(g));
    }
}

TEST_CASE("functor composition law is enforced")
{
    ModelGroupoid gr(objects(1), Z(2));
    CHECK_THROWS_AS(GroupoidFunctor(gr, Z(3), {1, 1}), Error);
    CHECK_THROWS_AS(GroupoidFunctor::from_generators(gr, Z(2), {0, 1}, {1}), Error);
}

TEST_CASE("distinct functors give non-isomorphic torsors")
{
    auto s3 = S(3);
    ModelGroupoid gr(objects(2), Z(2));
    auto fs = enumerate_functors(gr, s3);
    CHECK(fs.size() == 4 * 6);
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < fs.size(); ++j) {
            auto m = torsor_morphisms(torsor_from_hom(fs[i]), torsor_from_hom(fs[j]));
            CHECK(m.has_value() == (i == j));
        }
}

TEST_CASE("re-marking a single point breaks every morphism")
{
    auto s3 = S(3);
    ModelGroupoid gr(objects(2), Z(3));
    auto t = torsor_from_hom(enumerate_functors(gr, s3).back());
    auto moved = t.points();
    moved[1] = t.act_right(moved[1], 1);
    MultipointedTorsor u = t.transport([&] {
        std::vector<CarrierPoint> id(t.carrier_size());
        for (CarrierPoint z = 0; z < id.size(); ++z)
            id[z] = z;
        return id;
    }());
    CHECK(torsor_morphisms(t, u).has_value());
    std::vector<CarrierPoint> right, left;
    for (CarrierPoint z = 0; z < t.carrier_size(); ++z)
        for (Element g = 0; g < s3->order(); ++g)
            right.push_back(t.act_right(z, g));
    for (Element a = 0; a < 3; ++a)
        for (CarrierPoint z = 0; z < t.carrier_size(); ++z)
            left.push_back(t.act_left(a, z));
    MultipointedTorsor broken(s3, Z(3), right, left, moved);
    CHECK_FALSE(torsor_morphisms(t, broken).has_value());
}

TEST_CASE("property: round trip and re-marking on small groupoids")
{
    std::vector<GroupPtr> targets = {fixtures::one(), Z(2), Z(3), Z(4), Z(6), S(3)};
    for (auto & gamma : fixtures::vertex_pool())
        for (auto & G : targets)
            for (std::size_t n = 1; n <= 3; ++n) {
                ModelGroupoid gr(objects(n), gamma);
                auto fs = enumerate_functors(gr, G);
                CHECK(fs.size() == all_homs(gamma, G).size() * static_cast<std::size_t>(std::pow(G->order(), n - 1)));
                for (auto & f : fs) {
                    auto t = torsor_from_hom(f);
                    REQUIRE(hom_from_torsor(t, gr) == f);
                    for (Element g = 0; g < G->order(); ++g) {
                        auto h = hom_from_torsor(remark_points(t, g), gr);
                        const Element gi = G->inv(g);
                        bool conj = true;
                        for (std::size_t a = 0; a < gr.arrow_count(); ++a)
                            conj = conj && h.values()[a] == G->conjugate(gi, f.values()[a]);
                        CHECK(conj);
                    }
                }
            }
}

TEST_CASE("property: at most one morphism between multipointed torsors")
{
    auto s3 = S(3);
    ModelGroupoid gr(objects(2), Z(2));
    std::vector<MultipointedTorsor> ts;
    for (auto & f : enumerate_functors(gr, s3)) {
        ts.push_back(torsor_from_hom(f));
        ts.push_back(remark_points(ts.back(), 3));
    }
    for (auto & a : ts)
        for (auto & b : ts) {
            const auto n = count_morphisms(a, b);
            CHECK(n <= 1);
            auto m = torsor_morphisms(a, b);
            CHECK(m.has_value() == (n == 1));
            if (m) {
                auto image = m->map;
                std::sort(image.begin(), image.end());
                CHECK(std::adjacent_find(image.begin(), image.end()) == image.end());
                CHECK(torsor_morphisms(b, a).has_value());
            }
        }
}
