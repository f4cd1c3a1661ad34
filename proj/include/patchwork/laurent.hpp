#pragma once

#include <patchwork/field.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace patchwork {

/**
 * Laurent series in one variable over a coefficient field, known up to and
 * including the exponent order() (nullopt: known exactly, finitely many
 * terms). Coefficients past the order are never stored or reported.
 */
class LaurentSeries
{
public:
    using Order = std::optional<long>;

    explicit LaurentSeries(CoeffFieldPtr field, Order order = std::nullopt);

    static auto monomial(CoeffFieldPtr field, Coeff c, long exponent, Order order = std::nullopt) -> LaurentSeries;
    static auto from_terms(CoeffFieldPtr field, const std::map<long, Coeff> & terms, Order order = std::nullopt)
        -> LaurentSeries;

    auto field() const -> const CoeffField & { return *field_; }
    auto field_ptr() const -> const CoeffFieldPtr & { return field_; }
    auto order() const -> Order { return order_; }
    auto is_exact() const -> bool { return ! order_; }
    auto is_zero() const -> bool { return coeffs_.empty(); }
    /// Lowest exponent with a nonzero coefficient; throws on a zero series.
    auto valuation() const -> long;
    /// Throws if the exponent lies past the known order.
    auto coeff(long exponent) const -> Coeff;
    /// Nonzero terms in increasing exponent order.
    auto terms() const -> std::vector<std::pair<long, Coeff>>;

    auto principal_part() const -> LaurentSeries;
    auto nonnegative_part() const -> LaurentSeries;
    /// Forget everything past exponent n.
    auto truncate(long n) const -> LaurentSeries;
    /// Multiply by t^k.
    auto shift(long k) const -> LaurentSeries;

    auto format(const std::string & var = "t") const -> std::string;

    /// Same known coefficients and same order.
    friend auto operator==(const LaurentSeries & a, const LaurentSeries & b) -> bool
    {
        return a.val_ == b.val_ && a.coeffs_ == b.coeffs_ && a.order_ == b.order_;
    }

private:
    void normalize();

    CoeffFieldPtr field_;
    long val_ = 0;
    std::vector<Coeff> coeffs_;  // coefficient of t^(val_ + i)
    Order order_;

    friend auto add(const LaurentSeries &, const LaurentSeries &) -> LaurentSeries;
    friend auto mul(const LaurentSeries &, const LaurentSeries &) -> LaurentSeries;
    friend auto div(const LaurentSeries &, const LaurentSeries &, LaurentSeries::Order) -> LaurentSeries;
};

auto add(const LaurentSeries & a, const LaurentSeries & b) -> LaurentSeries;
auto neg(const LaurentSeries & a) -> LaurentSeries;
auto sub(const LaurentSeries & a, const LaurentSeries & b) -> LaurentSeries;
auto scale(const LaurentSeries & a, const Coeff & c) -> LaurentSeries;
auto mul(const LaurentSeries & a, const LaurentSeries & b) -> LaurentSeries;
/// a / b known to the propagated precision, capped at `order`. An order is
/// required when the quotient would otherwise be an infinite exact series.
auto div(const LaurentSeries & a, const LaurentSeries & b, LaurentSeries::Order order = std::nullopt)
    -> LaurentSeries;
auto pow(const LaurentSeries & a, unsigned k) -> LaurentSeries;
/// a^p in characteristic p: coefficientwise Frobenius, exponents times p.
auto frobenius(const LaurentSeries & a) -> LaurentSeries;

/// Do a and b agree on every exponent both know?
auto agree(const LaurentSeries & a, const LaurentSeries & b) -> bool;

struct PthRootResult
{
    std::optional<LaurentSeries> root;
    std::string witness;             ///< reason when there is no root
    std::optional<long> exponent;    ///< offending exponent, if any
};

auto pth_power_test(const LaurentSeries & a) -> PthRootResult;

} // namespace patchwork
