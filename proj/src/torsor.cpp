#include <patchwork/torsor.hpp>
#include <patchwork/error.hpp>

#include <algorithm>

namespace patchwork {

ModelGroupoid::ModelGroupoid(std::vector<std::string> objects, GroupPtr vertex_group) :
    objects_(std::move(objects)),
    group_(std::move(vertex_group))
{
    if (objects_.empty())
        throw Error("model groupoid needs at least one object");
    if (! group_)
        throw Error("model groupoid needs a vertex group");
}

auto ModelGroupoid::arrow(std::size_t index) const -> Arrow
{
    const std::size_t m = group_->order(), n = objects_.size();
    const Element gamma = static_cast<Element>(index % m);
    index /= m;
    return {index / n, gamma, index % n};
}

auto ModelGroupoid::compose(const Arrow & a, const Arrow & b) const -> Arrow
{
    if (a.source != b.target)
        throw Error("arrows are not composable: " + objects_.at(a.source) + " vs " + objects_.at(b.target));
    return {a.target, group_->mul(a.gamma, b.gamma), b.source};
}

GroupoidFunctor::GroupoidFunctor(const ModelGroupoid & groupoid, GroupPtr G, std::vector<Element> values) :
    groupoid_(std::make_shared<const ModelGroupoid>(groupoid)),
    G_(std::move(G)),
    values_(std::move(values))
{
    const auto & gr = *groupoid_;
    if (values_.size() != gr.arrow_count())
        throw Error("functor table has " + std::to_string(values_.size()) + " values, expected "
            + std::to_string(gr.arrow_count()));
    for (Element x : values_)
        if (! G_->contains(x))
            throw Error("functor value outside " + G_->name());
    const std::size_t n = gr.object_count();
    const std::size_t m = gr.vertex_group()->order();
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t mid = 0; mid < n; ++mid)
            for (std::size_t s = 0; s < n; ++s)
                for (Element a = 0; a < m; ++a)
                    for (Element b = 0; b < m; ++b) {
                        ModelGroupoid::Arrow x{t, a, mid}, y{mid, b, s};
                        if ((*this)(gr.compose(x, y)) != G_->mul((*this)(x), (*this)(y)))
                            throw Error("functor fails the composition law at arrows into " + gr.object(t)
                                + " through " + gr.object(mid));
                    }
}

auto GroupoidFunctor::from_generators(const ModelGroupoid & groupoid, GroupPtr G, const std::vector<Element> & on_base,
    const std::vector<Element> & transport) -> GroupoidFunctor
{
    if (transport.size() != groupoid.object_count() || on_base.size() != groupoid.vertex_group()->order())
        throw Error("functor data has the wrong shape");
    if (transport[0] != G->identity())
        throw Error("the base object's connecting arrow must map to the identity");
    std::vector<Element> values(groupoid.arrow_count());
    for (std::size_t i = 0; i < values.size(); ++i) {
        auto a = groupoid.arrow(i);
        values[i] = G->mul(G->mul(transport[a.target], on_base.at(a.gamma)), G->inv(transport[a.source]));
    }
    return GroupoidFunctor(groupoid, std::move(G), std::move(values));
}

auto GroupoidFunctor::on_base() const -> std::vector<Element>
{
    std::vector<Element> out(groupoid_->vertex_group()->order());
    for (Element g = 0; g < out.size(); ++g)
        out[g] = (*this)({0, g, 0});
    return out;
}

auto GroupoidFunctor::transports() const -> std::vector<Element>
{
    std::vector<Element> out(groupoid_->object_count());
    const Element e = groupoid_->vertex_group()->identity();
    for (std::size_t s = 0; s < out.size(); ++s)
        out[s] = (*this)({s, e, 0});
    return out;
}

auto enumerate_functors(const ModelGroupoid & groupoid, const GroupPtr & G) -> std::vector<GroupoidFunctor>
{
    std::vector<GroupoidFunctor> out;
    const std::size_t n = groupoid.object_count();
    for (auto & phi : all_homs(groupoid.vertex_group(), G)) {
        std::vector<Element> transport(n, G->identity());
        while (true) {
            out.push_back(GroupoidFunctor::from_generators(groupoid, G, phi.table(), transport));
            std::size_t i = n;
            while (i > 1 && ++transport[i - 1] == G->order())
                transport[--i] = 0;
            if (i <= 1)
                break;
        }
    }
    return out;
}

MultipointedTorsor::MultipointedTorsor(GroupPtr G, GroupPtr vertex_group, std::vector<CarrierPoint> right,
    std::vector<CarrierPoint> left, std::vector<CarrierPoint> points) :
    G_(std::move(G)),
    gamma_(std::move(vertex_group)),
    right_(std::move(right)),
    left_(std::move(left)),
    points_(std::move(points))
{
    const std::size_t n = G_->order();
    const std::size_t m = gamma_->order();
    if (right_.size() != n * n || left_.size() != m * n)
        throw Error("torsor action tables have the wrong size");
    if (points_.empty())
        throw Error("multipointed torsor needs at least one point");
    for (auto z : right_)
        if (z >= n)
            throw Error("right action leaves the carrier");
    for (auto z : left_)
        if (z >= n)
            throw Error("left action leaves the carrier");
    for (auto z : points_)
        if (z >= n)
            throw Error("marked point outside the carrier");

    for (CarrierPoint z = 0; z < n; ++z) {
        if (act_right(z, G_->identity()) != z)
            throw Error("right action: identity does not act trivially");
        std::vector<bool> hit(n, false);
        for (Element g = 0; g < n; ++g) {
            for (Element h = 0; h < n; ++h)
                if (act_right(act_right(z, g), h) != act_right(z, G_->mul(g, h)))
                    throw Error("right action is not an action");
            hit[act_right(z, g)] = true;
        }
        // |carrier| == |G|, so hitting everything means free and transitive
        if (std::find(hit.begin(), hit.end(), false) != hit.end())
            throw Error("right action is not free and transitive");
        if (act_left(gamma_->identity(), z) != z)
            throw Error("left action: identity does not act trivially");
        for (Element a = 0; a < m; ++a) {
            for (Element b = 0; b < m; ++b)
                if (act_left(a, act_left(b, z)) != act_left(gamma_->mul(a, b), z))
                    throw Error("left action is not an action");
            for (Element g = 0; g < n; ++g)
                if (act_left(a, act_right(z, g)) != act_right(act_left(a, z), g))
                    throw Error("left and right actions do not commute");
        }
    }
}

auto MultipointedTorsor::difference(CarrierPoint z, CarrierPoint w) const -> Element
{
    for (Element g = 0; g < G_->order(); ++g)
        if (act_right(z, g) == w)
            return g;
    throw Error("carrier points are not related by the right action");
}

auto MultipointedTorsor::transport(const std::vector<CarrierPoint> & relabel) const -> MultipointedTorsor
{
    const std::size_t n = carrier_size();
    if (relabel.size() != n)
        throw Error("relabelling has the wrong size");
    std::vector<CarrierPoint> right(right_.size()), left(left_.size()), points;
    for (CarrierPoint z = 0; z < n; ++z) {
        for (Element g = 0; g < n; ++g)
            right[relabel[z] * n + g] = relabel[act_right(z, g)];
        for (Element a = 0; a < gamma_->order(); ++a)
            left[a * n + relabel[z]] = relabel[act_left(a, z)];
    }
    for (auto p : points_)
        points.push_back(relabel[p]);
    return MultipointedTorsor(G_, gamma_, std::move(right), std::move(left), std::move(points));
}

auto torsor_from_hom(const GroupoidFunctor & f) -> MultipointedTorsor
{
    const auto & G = *f.target_group();
    const auto & gamma = *f.groupoid().vertex_group();
    const std::size_t n = G.order();
    const auto phi = f.on_base();
    const auto transport = f.transports();

    std::vector<CarrierPoint> right(n * n), left(gamma.order() * n), points;
    for (Element z = 0; z < n; ++z) {
        for (Element g = 0; g < n; ++g)
            right[z * n + g] = G.mul(z, g);
        for (Element a = 0; a < gamma.order(); ++a)
            left[a * n + z] = G.mul(phi[a], z);
    }
    for (auto h : transport)
        points.push_back(G.inv(h));
    return MultipointedTorsor(f.target_group(), f.groupoid().vertex_group(), std::move(right), std::move(left),
        std::move(points));
}

auto hom_from_torsor(const MultipointedTorsor & t, const ModelGroupoid & groupoid) -> GroupoidFunctor
{
    if (! (*t.vertex_group() == *groupoid.vertex_group()))
        throw Error("torsor's vertex group does not match the groupoid");
    if (t.points().size() != groupoid.object_count())
        throw Error("torsor has " + std::to_string(t.points().size()) + " points but the groupoid has "
            + std::to_string(groupoid.object_count()) + " objects");
    std::vector<Element> values(groupoid.arrow_count());
    for (std::size_t i = 0; i < values.size(); ++i) {
        auto a = groupoid.arrow(i);
        values[i] = t.difference(t.point(a.target), t.act_left(a.gamma, t.point(a.source)));
    }
    return GroupoidFunctor(groupoid, t.structure_group(), std::move(values));
}

auto is_morphism(const MultipointedTorsor & t1, const MultipointedTorsor & t2, const TorsorMorphism & m) -> bool
{
    const std::size_t n = t1.carrier_size();
    if (m.map.size() != n)
        return false;
    for (CarrierPoint z = 0; z < n; ++z) {
        for (Element g = 0; g < n; ++g)
            if (m.map[t1.act_right(z, g)] != t2.act_right(m.map[z], g))
                return false;
        for (Element a = 0; a < t1.vertex_group()->order(); ++a)
            if (m.map[t1.act_left(a, z)] != t2.act_left(a, m.map[z]))
                return false;
    }
    for (std::size_t s = 0; s < t1.points().size(); ++s)
        if (m.map[t1.point(s)] != t2.point(s))
            return false;
    return true;
}

auto torsor_morphisms(const MultipointedTorsor & t1, const MultipointedTorsor & t2) -> std::optional<TorsorMorphism>
{
    if (! (*t1.structure_group() == *t2.structure_group()) || ! (*t1.vertex_group() == *t2.vertex_group())
        || t1.points().size() != t2.points().size())
        return std::nullopt;
    // G-equivariance and point 0 pin the map down: point0.g -> point0'.g
    TorsorMorphism m{std::vector<CarrierPoint>(t1.carrier_size())};
    for (Element g = 0; g < t1.carrier_size(); ++g)
        m.map[t1.act_right(t1.point(0), g)] = t2.act_right(t2.point(0), g);
    if (! is_morphism(t1, t2, m))
        return std::nullopt;
    return m;
}

auto restrict_torsor(const MultipointedTorsor & t, const GroupHom & mono, std::size_t object) -> MultipointedTorsor
{
    if (! (*mono.target() == *t.vertex_group()))
        throw Error("restriction map does not land in the torsor's vertex group");
    const std::size_t n = t.carrier_size();
    std::vector<CarrierPoint> right(n * n), left(mono.source()->order() * n);
    for (CarrierPoint z = 0; z < n; ++z) {
        for (Element g = 0; g < n; ++g)
            right[z * n + g] = t.act_right(z, g);
        for (Element a = 0; a < mono.source()->order(); ++a)
            left[a * n + z] = t.act_left(mono(a), z);
    }
    return MultipointedTorsor(t.structure_group(), mono.source(), std::move(right), std::move(left), {t.point(object)});
}

auto remark_points(const MultipointedTorsor & t, Element g) -> MultipointedTorsor
{
    const std::size_t n = t.carrier_size();
    std::vector<CarrierPoint> right(n * n), left(t.vertex_group()->order() * n), points;
    for (CarrierPoint z = 0; z < n; ++z) {
        for (Element h = 0; h < n; ++h)
            right[z * n + h] = t.act_right(z, h);
        for (Element a = 0; a < t.vertex_group()->order(); ++a)
            left[a * n + z] = t.act_left(a, z);
    }
    for (auto p : t.points())
        points.push_back(t.act_right(p, g));
    return MultipointedTorsor(t.structure_group(), t.vertex_group(), std::move(right), std::move(left), std::move(points));
}

} // namespace patchwork
