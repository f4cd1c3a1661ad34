#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace patchwork {

/// F_q with q = p^e <= 1024. Elements are indices 0..q-1: the base-p digits
/// are the coefficients of the residue polynomial in the generator w, modulo
/// the lexicographically least monic irreducible of degree e.
class FiniteField
{
public:
    using Element = std::uint32_t;

    FiniteField(unsigned p, unsigned e);

    auto characteristic() const -> unsigned { return p_; }
    auto degree() const -> unsigned { return e_; }
    auto order() const -> std::size_t { return q_; }
    /// Coefficients of the modulus, constant term first.
    auto modulus() const -> const std::vector<unsigned> & { return modulus_; }

    auto add(Element a, Element b) const -> Element { return add_[a * q_ + b]; }
    auto neg(Element a) const -> Element { return neg_[a]; }
    auto sub(Element a, Element b) const -> Element { return add(a, neg(b)); }
    auto mul(Element a, Element b) const -> Element;
    auto inv(Element a) const -> Element;
    auto div(Element a, Element b) const -> Element { return mul(a, inv(b)); }
    auto pow(Element a, unsigned long long k) const -> Element;
    auto frobenius(Element a) const -> Element { return pow(a, p_); }
    /// Unique p-th root (the field is perfect).
    auto pth_root(Element a) const -> Element { return pow(a, q_ / p_); }
    /// Class of the integer n.
    auto from_integer(long long n) const -> Element;
    /// The class of w; only for e > 1.
    auto generator() const -> Element;
    /// Does a lie in the subfield with q1 elements?
    auto in_subfield(Element a, std::size_t q1) const -> bool;
    /// Is q1 the order of a subfield?
    auto has_subfield(std::size_t q1) const -> bool;

    auto format(Element a, const std::string & var = "w") const -> std::string;

private:
    unsigned p_, e_;
    std::size_t q_;
    std::vector<unsigned> modulus_;
    std::vector<std::uint16_t> add_;
    std::vector<Element> neg_;
    std::vector<Element> exp_;
    std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

auto is_prime(unsigned long long n) -> bool;

/// Polynomial over F_q, constant term first, no trailing zeros.
using FieldPoly = std::vector<FiniteField::Element>;

namespace poly {
auto trim(FieldPoly a) -> FieldPoly;
auto degree(const FieldPoly & a) -> long;
auto add(const FiniteField & F, const FieldPoly & a, const FieldPoly & b) -> FieldPoly;
auto sub(const FiniteField & F, const FieldPoly & a, const FieldPoly & b) -> FieldPoly;
auto mul(const FiniteField & F, const FieldPoly & a, const FieldPoly & b) -> FieldPoly;
auto scale(const FiniteField & F, const FieldPoly & a, FiniteField::Element c) -> FieldPoly;
/// quotient and remainder; b nonzero
auto divmod(const FiniteField & F, const FieldPoly & a, const FieldPoly & b) -> std::pair<FieldPoly, FieldPoly>;
auto gcd(const FiniteField & F, FieldPoly a, FieldPoly b) -> FieldPoly;
auto format(const FiniteField & F, const FieldPoly & a, const std::string & var, const std::string & coeff_var = "w")
    -> std::string;
} // namespace poly

/// Element of a coefficient field: a reduced fraction with monic denominator.
/// Over a finite field both parts are constants and the denominator is 1.
struct Coeff
{
    FieldPoly num;
    FieldPoly den;

    friend auto operator==(const Coeff &, const Coeff &) -> bool = default;
    friend auto operator<=>(const Coeff &, const Coeff &) = default;
};

/// F_q or the rational function field F_q(s).
class CoeffField
{
public:
    enum class Kind { finite, rational };

    CoeffField(FieldPtr base, Kind kind);
    /// "F4", "F_9", "GF(8)", "F3(s)", "F_2(s)"
    static auto parse_descriptor(const std::string & text) -> std::shared_ptr<const CoeffField>;

    auto kind() const -> Kind { return kind_; }
    auto base() const -> const FiniteField & { return *base_; }
    auto base_ptr() const -> const FieldPtr & { return base_; }
    auto characteristic() const -> unsigned { return base_->characteristic(); }
    auto descriptor() const -> std::string;

    auto zero() const -> Coeff { return {{}, {1}}; }
    auto one() const -> Coeff { return {{1}, {1}}; }
    auto constant(FiniteField::Element c) const -> Coeff;
    /// s; only in the rational kind
    auto variable() const -> Coeff;

    auto is_zero(const Coeff & a) const -> bool { return a.num.empty(); }
    auto add(const Coeff & a, const Coeff & b) const -> Coeff;
    auto neg(const Coeff & a) const -> Coeff;
    auto sub(const Coeff & a, const Coeff & b) const -> Coeff { return add(a, neg(b)); }
    auto mul(const Coeff & a, const Coeff & b) const -> Coeff;
    auto inv(const Coeff & a) const -> Coeff;
    auto div(const Coeff & a, const Coeff & b) const -> Coeff { return mul(a, inv(b)); }
    auto pow(const Coeff & a, unsigned long long k) const -> Coeff;
    auto frobenius(const Coeff & a) const -> Coeff;
    /// nullopt when a is not a p-th power
    auto pth_root(const Coeff & a) const -> std::optional<Coeff>;

    auto is_constant(const Coeff & a) const -> bool { return a.num.size() <= 1 && a.den.size() == 1; }
    /// a lies in the finite subfield with q1 elements of the constants
    auto in_subfield(const Coeff & a, std::size_t q1) const -> bool;
    /// Every constant of the subfield with q1 elements, in index order.
    auto subfield_elements(std::size_t q1) const -> std::vector<Coeff>;
    /// Every element of a finite coefficient field, in index order.
    auto elements() const -> std::vector<Coeff>;

    auto format(const Coeff & a) const -> std::string;
    /// Expression in integers, w (generator of F_q) and s (rational kind):
    /// + - * / ^ and parentheses.
    auto parse(const std::string & text) const -> Coeff;

    friend auto operator==(const CoeffField & a, const CoeffField & b) -> bool
    {
        return a.kind_ == b.kind_ && a.base_->order() == b.base_->order();
    }

private:
    auto normalize(FieldPoly num, FieldPoly den) const -> Coeff;

    FieldPtr base_;
    Kind kind_;
};

using CoeffFieldPtr = std::shared_ptr<const CoeffField>;

} // namespace patchwork
