#include <patchwork/group.hpp>
#include <patchwork/error.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace patchwork {

namespace {

auto cycle_notation(const std::vector<std::size_t> & perm) -> std::string
{
    std::vector<bool> seen(perm.size(), false);
    std::string out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == i)
            continue;
        out += '(';
        std::size_t j = i;
        bool first = true;
        while (! seen[j]) {
            seen[j] = true;
            if (! first)
                out += ' ';
            out += std::to_string(j + 1);
            first = false;
            j = perm[j];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

auto group_from_permutations(std::string name, const std::vector<std::vector<std::size_t>> & perms) -> FiniteGroup
{
    std::map<std::vector<std::size_t>, Element> index;
    for (std::size_t i = 0; i < perms.size(); ++i)
        index.emplace(perms[i], static_cast<Element>(i));

    const std::size_t n = perms.size();
    const std::size_t degree = perms.front().size();
    std::vector<Element> table(n * n);
    std::vector<std::size_t> product(degree);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            // (a*b)(x) = a(b(x))
            for (std::size_t x = 0; x < degree; ++x)
                product[x] = perms[a][perms[b][x]];
            auto it = index.find(product);
            if (it == index.end())
                throw Error("permutation set for " + name + " is not closed under composition");
            table[a * n + b] = it->second;
        }

    std::vector<std::string> labels;
    labels.reserve(n);
    for (auto & p : perms)
        labels.push_back(cycle_notation(p));
    return FiniteGroup(std::move(name), std::move(labels), std::move(table));
}

} // namespace

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<Element> table) :
    name_(std::move(name)),
    labels_(std::move(labels)),
    table_(std::move(table))
{
    const std::size_t n = labels_.size();
    if (n == 0)
        throw Error("group " + name_ + ": empty element list");
    if (n > max_group_order)
        throw Error("group " + name_ + ": order " + std::to_string(n) + " exceeds the supported maximum of "
            + std::to_string(max_group_order));
    if (table_.size() != n * n)
        throw Error("group " + name_ + ": multiplication table has " + std::to_string(table_.size())
            + " entries, expected " + std::to_string(n * n));
    {
        auto sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error("group " + name_ + ": duplicate element label");
    }
    for (std::size_t i = 0; i < table_.size(); ++i)
        if (table_[i] >= n)
            throw Error("group " + name_ + ": product (" + labels_[i / n] + ", " + labels_[i % n]
                + ") is not an element");

    auto triple = [&](Element a, Element b, Element c) {
        return "(" + labels_[a] + ", " + labels_[b] + ", " + labels_[c] + ")";
    };

    std::optional<Element> id;
    for (Element e = 0; e < n && ! id; ++e) {
        bool ok = true;
        for (Element a = 0; a < n && ok; ++a)
            ok = mul(e, a) == a && mul(a, e) == a;
        if (ok)
            id = e;
    }
    if (! id)
        throw Error("group " + name_ + ": no two-sided identity");
    identity_ = *id;

    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element ab = mul(a, b);
            for (Element c = 0; c < n; ++c)
                if (mul(ab, c) != mul(a, mul(b, c)))
                    throw Error("group " + name_ + ": associativity fails at " + triple(a, b, c));
        }

    inverse_.assign(n, 0);
    for (Element a = 0; a < n; ++a) {
        bool found = false;
        for (Element b = 0; b < n && ! found; ++b)
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inverse_[a] = b;
                found = true;
            }
        if (! found)
            throw Error("group " + name_ + ": element " + labels_[a] + " has no inverse");
    }
}

auto FiniteGroup::trivial() -> FiniteGroup { return FiniteGroup("trivial", {"1"}, {0}); }

auto FiniteGroup::cyclic(std::size_t n) -> FiniteGroup
{
    if (n < 1)
        throw Error("cyclic(n) requires n >= 1");
    if (n > max_group_order)
        throw Error("cyclic(" + std::to_string(n) + ") exceeds the supported maximum order");
    std::vector<std::string> labels;
    std::vector<Element> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(std::to_string(a));
        for (std::size_t b = 0; b < n; ++b)
            table[a * n + b] = static_cast<Element>((a + b) % n);
    }
    return FiniteGroup("cyclic(" + std::to_string(n) + ")", std::move(labels), std::move(table));
}

auto FiniteGroup::symmetric(std::size_t n) -> FiniteGroup
{
    if (n < 1)
        throw Error("symmetric(n) requires n >= 1");
    if (n > 5)
        throw Error("symmetric(" + std::to_string(n) + ") exceeds the supported maximum order");
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::vector<std::vector<std::size_t>> perms;
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return group_from_permutations("symmetric(" + std::to_string(n) + ")", perms);
}

auto FiniteGroup::dihedral(std::size_t n) -> FiniteGroup
{
    // symmetries of the n-gon, order 2n, as permutations of the vertices
    if (n < 3)
        throw Error("dihedral(n) requires n >= 3");
    if (2 * n > max_group_order)
        throw Error("dihedral(" + std::to_string(n) + ") exceeds the supported maximum order");
    std::vector<std::vector<std::size_t>> perms;
    for (std::size_t r = 0; r < n; ++r)
        for (int flip = 0; flip < 2; ++flip) {
            std::vector<std::size_t> p(n);
            for (std::size_t x = 0; x < n; ++x)
                p[x] = flip ? (r + n - x) % n : (r + x) % n;
            perms.push_back(p);
        }
    std::sort(perms.begin(), perms.end());
    return group_from_permutations("dihedral(" + std::to_string(n) + ")", perms);
}

auto FiniteGroup::direct_product(const FiniteGroup & left, const FiniteGroup & right) -> FiniteGroup
{
    const std::size_t n = left.order(), m = right.order();
    if (n * m > max_group_order)
        throw Error("direct product of " + left.name() + " and " + right.name()
            + " exceeds the supported maximum order");
    std::vector<std::string> labels;
    std::vector<Element> table(n * m * n * m);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < m; ++b)
            labels.push_back("(" + left.label(a) + "," + right.label(b) + ")");
    for (Element a1 = 0; a1 < n; ++a1)
        for (Element b1 = 0; b1 < m; ++b1)
            for (Element a2 = 0; a2 < n; ++a2)
                for (Element b2 = 0; b2 < m; ++b2)
                    table[(a1 * m + b1) * n * m + a2 * m + b2]
                        = static_cast<Element>(left.mul(a1, a2) * m + right.mul(b1, b2));
    return FiniteGroup(left.name() + " x " + right.name(), std::move(labels), std::move(table));
}

auto FiniteGroup::pow(Element a, long long k) const -> Element
{
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    Element result = identity_;
    while (k > 0) {
        if (k & 1)
            result = mul(result, a);
        a = mul(a, a);
        k >>= 1;
    }
    return result;
}

auto FiniteGroup::element_order(Element a) const -> std::size_t
{
    std::size_t k = 1;
    for (Element x = a; x != identity_; x = mul(x, a))
        ++k;
    return k;
}

auto FiniteGroup::exponent() const -> std::size_t
{
    std::size_t e = 1;
    for (Element a = 0; a < order(); ++a)
        e = std::lcm(e, element_order(a));
    return e;
}

auto FiniteGroup::is_abelian() const -> bool
{
    for (Element a = 0; a < order(); ++a)
        for (Element b = a + 1; b < order(); ++b)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

auto FiniteGroup::find(const std::string & label) const -> std::optional<Element>
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        return std::nullopt;
    return static_cast<Element>(it - labels_.begin());
}

auto FiniteGroup::generating_set() const -> std::vector<Element>
{
    std::vector<bool> in_subgroup(order(), false);
    in_subgroup[identity_] = true;
    std::vector<Element> members{identity_};
    std::vector<Element> gens;
    for (Element a = 0; a < order(); ++a) {
        if (in_subgroup[a])
            continue;
        gens.push_back(a);
        // close under right multiplication by all generators
        std::vector<Element> frontier = members;
        while (! frontier.empty()) {
            std::vector<Element> next;
            for (Element x : frontier)
                for (Element g : gens) {
                    Element y = mul(x, g);
                    if (! in_subgroup[y]) {
                        in_subgroup[y] = true;
                        members.push_back(y);
                        next.push_back(y);
                    }
                }
            frontier = std::move(next);
        }
    }
    return gens;
}

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<Element> map) :
    source_(std::move(source)),
    target_(std::move(target)),
    map_(std::move(map))
{
    if (! source_ || ! target_)
        throw Error("homomorphism with missing source or target");
    if (map_.size() != source_->order())
        throw Error("homomorphism table from " + source_->name() + " has " + std::to_string(map_.size())
            + " entries, expected " + std::to_string(source_->order()));
    for (Element x : map_)
        if (! target_->contains(x))
            throw Error("homomorphism image outside " + target_->name());
    const auto & S = *source_;
    const auto & T = *target_;
    for (Element a = 0; a < S.order(); ++a)
        for (Element b = 0; b < S.order(); ++b)
            if (map_[S.mul(a, b)] != T.mul(map_[a], map_[b]))
                throw Error("map " + S.name() + " -> " + T.name() + " is not a homomorphism at ("
                    + S.label(a) + ", " + S.label(b) + ")");
}

auto GroupHom::identity(GroupPtr group) -> GroupHom
{
    std::vector<Element> map(group->order());
    std::iota(map.begin(), map.end(), Element{0});
    auto target = group;
    return GroupHom(std::move(group), std::move(target), std::move(map));
}

auto GroupHom::trivial(GroupPtr source, GroupPtr target) -> GroupHom
{
    std::vector<Element> map(source->order(), target->identity());
    return GroupHom(std::move(source), std::move(target), std::move(map));
}

auto GroupHom::is_injective() const -> bool
{
    auto sorted = map_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

auto GroupHom::is_trivial() const -> bool
{
    return std::all_of(map_.begin(), map_.end(), [&](Element x) { return x == target_->identity(); });
}

auto restrict_hom(const GroupHom & f, const GroupHom & mono) -> GroupHom
{
    if (! (*mono.target() == *f.source()))
        throw Error("cannot restrict: " + mono.target()->name() + " is not the source " + f.source()->name());
    if (! mono.is_injective())
        throw Error("cannot restrict along a non-injective map " + mono.source()->name() + " -> "
            + mono.target()->name());
    std::vector<Element> map(mono.source()->order());
    for (Element a = 0; a < map.size(); ++a)
        map[a] = f(mono(a));
    return GroupHom(mono.source(), f.target(), std::move(map));
}

auto conjugate_hom(const GroupHom & f, Element g) -> GroupHom
{
    const auto & T = *f.target();
    if (! T.contains(g))
        throw Error("conjugating element is not in " + T.name());
    std::vector<Element> map(f.source()->order());
    for (Element a = 0; a < map.size(); ++a)
        map[a] = T.conjugate(g, f(a));
    return GroupHom(f.source(), f.target(), std::move(map));
}

auto all_homs(const GroupPtr & source, const GroupPtr & target) -> std::vector<GroupHom>
{
    const auto & S = *source;
    const auto & T = *target;
    const auto gens = S.generating_set();

    // every element as a word in the generators, found by breadth-first search
    std::vector<std::vector<std::size_t>> word(S.order());
    std::vector<bool> reached(S.order(), false);
    reached[S.identity()] = true;
    std::vector<Element> order_reached{S.identity()};
    for (std::size_t i = 0; i < order_reached.size(); ++i) {
        const Element x = order_reached[i];
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const Element y = S.mul(x, gens[g]);
            if (! reached[y]) {
                reached[y] = true;
                word[y] = word[x];
                word[y].push_back(g);
                order_reached.push_back(y);
            }
        }
    }

    std::vector<GroupHom> result;
    std::vector<Element> images(gens.size(), 0);
    auto try_extend = [&] {
        std::vector<Element> map(S.order());
        for (Element x = 0; x < S.order(); ++x) {
            Element y = T.identity();
            for (auto g : word[x])
                y = T.mul(y, images[g]);
            map[x] = y;
        }
        for (Element a = 0; a < S.order(); ++a)
            for (Element b = 0; b < S.order(); ++b)
                if (map[S.mul(a, b)] != T.mul(map[a], map[b]))
                    return;
        result.emplace_back(source, target, std::move(map));
    };

    // odometer over generator images
    while (true) {
        try_extend();
        std::size_t i = 0;
        while (i < images.size() && ++images[i] == T.order())
            images[i++] = 0;
        if (i == images.size())
            break;
    }
    std::sort(result.begin(), result.end(),
        [](const GroupHom & a, const GroupHom & b) { return a.table() < b.table(); });
    return result;
}

} // namespace patchwork
