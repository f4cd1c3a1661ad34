#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace patchwork {

/// Index of an element inside a FiniteGroup's canonical element list.
using Element = std::uint32_t;

/// Largest group order accepted; the associativity check is cubic in the order.
inline constexpr std::size_t max_group_order = 256;

/**
 * A finite group given by an explicit multiplication table over a canonically
 * ordered element list. The group axioms are verified exhaustively on
 * construction, so every instance is a valid group.
 *
 * Products compose right to left for permutation groups: mul(a, b) applies b
 * first, then a.
 */
class FiniteGroup
{
public:
    FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<Element> table);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup symmetric(std::size_t n);
    static FiniteGroup dihedral(std::size_t n);
    static FiniteGroup direct_product(const FiniteGroup & left, const FiniteGroup & right);

    auto order() const -> std::size_t { return labels_.size(); }
    auto identity() const -> Element { return identity_; }
    auto name() const -> const std::string & { return name_; }

    auto mul(Element a, Element b) const -> Element { return table_[a * order() + b]; }
    auto inv(Element a) const -> Element { return inverse_[a]; }
    auto pow(Element a, long long k) const -> Element;
    /// g a g^-1
    auto conjugate(Element g, Element a) const -> Element { return mul(mul(g, a), inv(g)); }

    auto element_order(Element a) const -> std::size_t;
    auto exponent() const -> std::size_t;
    auto is_abelian() const -> bool;

    auto label(Element a) const -> const std::string & { return labels_.at(a); }
    auto labels() const -> const std::vector<std::string> & { return labels_; }
    auto find(const std::string & label) const -> std::optional<Element>;
    auto contains(Element a) const -> bool { return a < order(); }

    /// Greedy generating set: walks elements in canonical order, keeping each
    /// one not already in the subgroup generated so far.
    auto generating_set() const -> std::vector<Element>;

    auto table() const -> std::span<const Element> { return table_; }

    friend auto operator==(const FiniteGroup & a, const FiniteGroup & b) -> bool
    {
        return a.labels_ == b.labels_ && a.table_ == b.table_;
    }

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<Element> table_;
    std::vector<Element> inverse_;
    Element identity_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline auto share(FiniteGroup g) -> GroupPtr { return std::make_shared<const FiniteGroup>(std::move(g)); }

/// A homomorphism between finite groups, stored as an element table.
/// The homomorphism law is checked on construction.
class GroupHom
{
public:
    GroupHom(GroupPtr source, GroupPtr target, std::vector<Element> map);

    static GroupHom identity(GroupPtr group);
    static GroupHom trivial(GroupPtr source, GroupPtr target);

    auto operator()(Element a) const -> Element { return map_[a]; }
    auto source() const -> const GroupPtr & { return source_; }
    auto target() const -> const GroupPtr & { return target_; }
    auto table() const -> const std::vector<Element> & { return map_; }
    auto is_injective() const -> bool;
    auto is_trivial() const -> bool;

    friend auto operator==(const GroupHom & a, const GroupHom & b) -> bool
    {
        return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.map_ == b.map_;
    }

private:
    GroupPtr source_;
    GroupPtr target_;
    std::vector<Element> map_;
};

/// f composed with mono; mono must be injective with target equal to f's source.
auto restrict_hom(const GroupHom & f, const GroupHom & mono) -> GroupHom;

/// x -> g f(x) g^-1
auto conjugate_hom(const GroupHom & f, Element g) -> GroupHom;

/// Every homomorphism source -> target, found by assigning images to a
/// generating set and extending. Ordered lexicographically by image table.
/// Independent of the presentation-based enumerator.
auto all_homs(const GroupPtr & source, const GroupPtr & target) -> std::vector<GroupHom>;

} // namespace patchwork
