#pragma once

#include <patchwork/group.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace patchwork {

/**
 * Connected groupoid on finitely many objects, every automorphism group a
 * copy of one vertex group. Object 0 is the base object; each object s has a
 * connecting arrow from the base, the base's own being the identity. The
 * arrow (target, gamma, source) stands for conn(target) * gamma * conn(source)^-1.
 */
class ModelGroupoid
{
public:
    struct Arrow
    {
        std::size_t target;
        Element gamma;
        std::size_t source;

        friend auto operator==(const Arrow &, const Arrow &) -> bool = default;
    };

    ModelGroupoid(std::vector<std::string> objects, GroupPtr vertex_group);

    auto object_count() const -> std::size_t { return objects_.size(); }
    auto object(std::size_t s) const -> const std::string & { return objects_.at(s); }
    auto vertex_group() const -> const GroupPtr & { return group_; }
    auto arrow_count() const -> std::size_t { return objects_.size() * objects_.size() * group_->order(); }
    auto arrow_index(const Arrow & a) const -> std::size_t
    {
        return (a.target * objects_.size() + a.source) * group_->order() + a.gamma;
    }
    auto arrow(std::size_t index) const -> Arrow;
    /// a after b; requires a.source == b.target.
    auto compose(const Arrow & a, const Arrow & b) const -> Arrow;

private:
    std::vector<std::string> objects_;
    GroupPtr group_;
};

/// A functor from a model groupoid to the one-object groupoid of G: a G-value
/// on every arrow, multiplicative under composition.
class GroupoidFunctor
{
public:
    /// Throws unless the table respects composition.
    GroupoidFunctor(const ModelGroupoid & groupoid, GroupPtr G, std::vector<Element> values);

    /// arrow (t, gamma, s) -> transport[t] * on_base[gamma] * transport[s]^-1;
    /// transport[0] must be the identity.
    static auto from_generators(const ModelGroupoid & groupoid, GroupPtr G, const std::vector<Element> & on_base,
        const std::vector<Element> & transport) -> GroupoidFunctor;

    auto operator()(const ModelGroupoid::Arrow & a) const -> Element { return values_[groupoid_->arrow_index(a)]; }
    auto groupoid() const -> const ModelGroupoid & { return *groupoid_; }
    auto target_group() const -> const GroupPtr & { return G_; }
    auto values() const -> const std::vector<Element> & { return values_; }
    /// Values on the automorphisms of the base object.
    auto on_base() const -> std::vector<Element>;
    /// Values on the connecting arrows.
    auto transports() const -> std::vector<Element>;

    friend auto operator==(const GroupoidFunctor & a, const GroupoidFunctor & b) -> bool
    {
        return a.values_ == b.values_;
    }

private:
    std::shared_ptr<const ModelGroupoid> groupoid_;
    GroupPtr G_;
    std::vector<Element> values_;
};

/// Every functor to G, ordered by (base hom table, transports).
auto enumerate_functors(const ModelGroupoid & groupoid, const GroupPtr & G) -> std::vector<GroupoidFunctor>;

using CarrierPoint = std::uint32_t;

/**
 * Finite model of a multipointed G-torsor: a carrier with a free transitive
 * right G-action and a commuting left action of the vertex group, plus one
 * marked carrier point per object of the indexing set.
 */
class MultipointedTorsor
{
public:
    /// right[z * |G| + g] = z.g, left[gamma * |carrier| + z] = gamma.z
    MultipointedTorsor(GroupPtr G, GroupPtr vertex_group, std::vector<CarrierPoint> right,
        std::vector<CarrierPoint> left, std::vector<CarrierPoint> points);

    auto structure_group() const -> const GroupPtr & { return G_; }
    auto vertex_group() const -> const GroupPtr & { return gamma_; }
    auto carrier_size() const -> std::size_t { return G_->order(); }
    auto act_right(CarrierPoint z, Element g) const -> CarrierPoint { return right_[z * G_->order() + g]; }
    auto act_left(Element gamma, CarrierPoint z) const -> CarrierPoint { return left_[gamma * carrier_size() + z]; }
    auto point(std::size_t s) const -> CarrierPoint { return points_.at(s); }
    auto points() const -> const std::vector<CarrierPoint> & { return points_; }
    /// The unique g with z.g == w.
    auto difference(CarrierPoint z, CarrierPoint w) const -> Element;

    /// Same torsor with carrier relabelled by the bijection `relabel`.
    auto transport(const std::vector<CarrierPoint> & relabel) const -> MultipointedTorsor;

private:
    GroupPtr G_;
    GroupPtr gamma_;
    std::vector<CarrierPoint> right_;
    std::vector<CarrierPoint> left_;
    std::vector<CarrierPoint> points_;
};

/// Point-preserving, G- and vertex-group-equivariant carrier map.
struct TorsorMorphism
{
    std::vector<CarrierPoint> map;
};

/// Carrier = G with right translation, left action through the functor's
/// base hom, point s at transport(s)^-1.
auto torsor_from_hom(const GroupoidFunctor & f) -> MultipointedTorsor;

/// The functor sending (t, gamma, s) to the unique g with gamma.point(s) == point(t).g.
auto hom_from_torsor(const MultipointedTorsor & t, const ModelGroupoid & groupoid) -> GroupoidFunctor;

/// The unique morphism t1 -> t2 if one exists.
auto torsor_morphisms(const MultipointedTorsor & t1, const MultipointedTorsor & t2) -> std::optional<TorsorMorphism>;

auto is_morphism(const MultipointedTorsor & t1, const MultipointedTorsor & t2, const TorsorMorphism & m) -> bool;

/// Pull the left action back along `mono` and keep only the point at `object`.
auto restrict_torsor(const MultipointedTorsor & t, const GroupHom & mono, std::size_t object) -> MultipointedTorsor;

/// Every point re-marked by right translation by g.
auto remark_points(const MultipointedTorsor & t, Element g) -> MultipointedTorsor;

} // namespace patchwork
