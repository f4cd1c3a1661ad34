#include <patchwork/laurent.hpp>
#include <patchwork/error.hpp>

#include <algorithm>
#include <limits>

namespace patchwork {

namespace {

constexpr long unbounded = std::numeric_limits<long>::max() / 4;

auto bound(LaurentSeries::Order n) -> long { return n ? *n : unbounded; }
auto as_order(long n) -> LaurentSeries::Order
{
    return n >= unbounded / 2 ? LaurentSeries::Order{} : LaurentSeries::Order{n};
}

// lowest exponent that could be nonzero; for a truncated zero series this is
// one past the known order
auto effective_valuation(const LaurentSeries & a) -> long
{
    if (! a.is_zero())
        return a.valuation();
    return a.order() ? *a.order() + 1 : unbounded;
}

void same_field(const LaurentSeries & a, const LaurentSeries & b)
{
    if (! (a.field() == b.field()))
        throw Error("series over different coefficient fields: " + a.field().descriptor() + " and "
            + b.field().descriptor());
}

auto floor_div(long a, long b) -> long
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

} // namespace

LaurentSeries::LaurentSeries(CoeffFieldPtr field, Order order) : field_(std::move(field)), order_(order)
{
    if (! field_)
        throw Error("series needs a coefficient field");
}

auto LaurentSeries::monomial(CoeffFieldPtr field, Coeff c, long exponent, Order order) -> LaurentSeries
{
    LaurentSeries s(std::move(field), order);
    s.val_ = exponent;
    s.coeffs_.push_back(std::move(c));
    s.normalize();
    return s;
}

auto LaurentSeries::from_terms(CoeffFieldPtr field, const std::map<long, Coeff> & terms, Order order)
    -> LaurentSeries
{
    LaurentSeries s(std::move(field), order);
    if (terms.empty())
        return s;
    s.val_ = terms.begin()->first;
    s.coeffs_.assign(static_cast<std::size_t>(terms.rbegin()->first - s.val_ + 1), s.field_->zero());
    for (auto & [e, c] : terms)
        s.coeffs_[static_cast<std::size_t>(e - s.val_)] = c;
    s.normalize();
    return s;
}

void LaurentSeries::normalize()
{
    if (order_) {
        if (*order_ < val_)
            coeffs_.clear();
        else if (static_cast<long>(coeffs_.size()) > *order_ - val_ + 1)
            coeffs_.resize(static_cast<std::size_t>(*order_ - val_ + 1));
    }
    while (! coeffs_.empty() && field_->is_zero(coeffs_.back()))
        coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && field_->is_zero(coeffs_[lead]))
        ++lead;
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    val_ = coeffs_.empty() ? 0 : val_ + static_cast<long>(lead);
}

auto LaurentSeries::valuation() const -> long
{
    if (coeffs_.empty())
        throw Error("valuation of a zero series");
    return val_;
}

auto LaurentSeries::coeff(long exponent) const -> Coeff
{
    if (order_ && exponent > *order_)
        throw Error("coefficient of t^" + std::to_string(exponent) + " lies past the known order "
            + std::to_string(*order_));
    if (coeffs_.empty() || exponent < val_ || exponent >= val_ + static_cast<long>(coeffs_.size()))
        return field_->zero();
    return coeffs_[static_cast<std::size_t>(exponent - val_)];
}

auto LaurentSeries::terms() const -> std::vector<std::pair<long, Coeff>>
{
    std::vector<std::pair<long, Coeff>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (! field_->is_zero(coeffs_[i]))
            out.emplace_back(val_ + static_cast<long>(i), coeffs_[i]);
    return out;
}

auto LaurentSeries::principal_part() const -> LaurentSeries
{
    std::map<long, Coeff> t;
    for (auto & [e, c] : terms())
        if (e < 0)
            t.emplace(e, c);
    Order o = order_ && *order_ < -1 ? order_ : Order{};
    return from_terms(field_, t, o);
}

auto LaurentSeries::nonnegative_part() const -> LaurentSeries
{
    std::map<long, Coeff> t;
    for (auto & [e, c] : terms())
        if (e >= 0)
            t.emplace(e, c);
    return from_terms(field_, t, order_);
}

auto LaurentSeries::truncate(long n) const -> LaurentSeries
{
    LaurentSeries s = *this;
    s.order_ = order_ ? std::min(*order_, n) : n;
    s.normalize();
    return s;
}

auto LaurentSeries::shift(long k) const -> LaurentSeries
{
    LaurentSeries s = *this;
    if (! s.coeffs_.empty())
        s.val_ += k;
    if (s.order_)
        *s.order_ += k;
    return s;
}

auto LaurentSeries::format(const std::string & var) const -> std::string
{
    std::string out;
    for (auto & [e, c] : terms()) {
        std::string cs = field_->format(c);
        const bool compound = cs.find_first_of(" /") != std::string::npos;
        if (! out.empty())
            out += " + ";
        if (e == 0) {
            out += cs;
            continue;
        }
        if (cs != "1")
            out += (compound ? "(" + cs + ")" : cs) + "*";
        out += var;
        if (e != 1)
            out += "^" + std::to_string(e);
    }
    if (order_) {
        if (! out.empty())
            out += " + ";
        out += "O(" + var + "^" + std::to_string(*order_ + 1) + ")";
    }
    return out.empty() ? "0" : out;
}

auto add(const LaurentSeries & a, const LaurentSeries & b) -> LaurentSeries
{
    same_field(a, b);
    const auto & K = a.field();
    LaurentSeries::Order order = as_order(std::min(bound(a.order()), bound(b.order())));
    std::map<long, Coeff> t;
    for (auto & [e, c] : a.terms())
        t[e] = c;
    for (auto & [e, c] : b.terms()) {
        auto it = t.find(e);
        if (it == t.end())
            t.emplace(e, c);
        else
            it->second = K.add(it->second, c);
    }
    return LaurentSeries::from_terms(a.field_ptr(), t, order);
}

auto neg(const LaurentSeries & a) -> LaurentSeries
{
    return scale(a, a.field().neg(a.field().one()));
}

auto sub(const LaurentSeries & a, const LaurentSeries & b) -> LaurentSeries { return add(a, neg(b)); }

auto scale(const LaurentSeries & a, const Coeff & c) -> LaurentSeries
{
    std::map<long, Coeff> t;
    for (auto & [e, x] : a.terms())
        t.emplace(e, a.field().mul(x, c));
    return LaurentSeries::from_terms(a.field_ptr(), t, a.order());
}

auto mul(const LaurentSeries & a, const LaurentSeries & b) -> LaurentSeries
{
    same_field(a, b);
    const auto & K = a.field();
    if ((a.is_zero() && a.is_exact()) || (b.is_zero() && b.is_exact()))
        return LaurentSeries(a.field_ptr());
    const long va = effective_valuation(a), vb = effective_valuation(b);
    long n = unbounded;
    if (a.order())
        n = std::min(n, *a.order() + vb);
    if (b.order())
        n = std::min(n, *b.order() + va);
    LaurentSeries out(a.field_ptr(), as_order(n));
    if (a.is_zero() || b.is_zero())
        return out;
    out.val_ = a.val_ + b.val_;
    std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
    if (n < unbounded / 2)
        len = static_cast<std::size_t>(std::max(0L, std::min(static_cast<long>(len), n - out.val_ + 1)));
    out.coeffs_.assign(len, K.zero());
    for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
        if (K.is_zero(a.coeffs_[i]))
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j)
            if (! K.is_zero(b.coeffs_[j]))
                out.coeffs_[i + j] = K.add(out.coeffs_[i + j], K.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    out.normalize();
    return out;
}

auto div(const LaurentSeries & a, const LaurentSeries & b, LaurentSeries::Order order) -> LaurentSeries
{
    same_field(a, b);
    const auto & K = a.field();
    if (b.is_zero())
        throw Error("division by a zero series");
    const long vb = b.valuation();
    const long va = effective_valuation(a);
    long n = bound(order);
    if (a.order())
        n = std::min(n, *a.order() - vb);
    if (b.order())
        n = std::min(n, *b.order() + va - 2 * vb);
    const bool b_monomial = b.is_exact() && b.coeffs_.size() == 1;
    if (n >= unbounded / 2) {
        if (! b_monomial)
            throw Error("quotient by a non-monomial exact series needs a truncation order");
        if (a.is_zero())
            return LaurentSeries(a.field_ptr());
        n = a.val_ + static_cast<long>(a.coeffs_.size()) - 1 - vb;  // exact: the quotient is a shifted copy
        auto out = div(a, b, n);
        LaurentSeries exact(a.field_ptr());
        exact.val_ = out.val_;
        exact.coeffs_ = out.coeffs_;
        exact.normalize();
        return exact;
    }
    LaurentSeries out(a.field_ptr(), as_order(n));
    if (a.is_zero() || va - vb > n)
        return out;
    const Coeff lead_inv = K.inv(b.coeffs_[0]);
    out.val_ = va - vb;
    out.coeffs_.assign(static_cast<std::size_t>(n - out.val_ + 1), K.zero());
    for (std::size_t k = 0; k < out.coeffs_.size(); ++k) {
        Coeff acc = a.coeff(out.val_ + static_cast<long>(k) + vb);
        for (std::size_t j = 1; j <= k && j < b.coeffs_.size(); ++j)
            if (! K.is_zero(b.coeffs_[j]) && ! K.is_zero(out.coeffs_[k - j]))
                acc = K.sub(acc, K.mul(b.coeffs_[j], out.coeffs_[k - j]));
        out.coeffs_[k] = K.mul(acc, lead_inv);
    }
    out.normalize();
    return out;
}

auto pow(const LaurentSeries & a, unsigned k) -> LaurentSeries
{
    LaurentSeries result = LaurentSeries::monomial(a.field_ptr(), a.field().one(), 0);
    LaurentSeries base = a;
    while (k) {
        if (k & 1)
            result = mul(result, base);
        k >>= 1;
        if (k)
            base = mul(base, base);
    }
    return result;
}

auto frobenius(const LaurentSeries & a) -> LaurentSeries
{
    const auto & K = a.field();
    const long p = K.characteristic();
    std::map<long, Coeff> t;
    for (auto & [e, c] : a.terms())
        t.emplace(e * p, K.frobenius(c));
    // (x + O(t^(n+1)))^p = x^p + O(t^(p(n+1))) in characteristic p
    LaurentSeries::Order order;
    if (a.order())
        order = p * (*a.order() + 1) - 1;
    return LaurentSeries::from_terms(a.field_ptr(), t, order);
}

auto agree(const LaurentSeries & a, const LaurentSeries & b) -> bool
{
    same_field(a, b);
    const long n = std::min(bound(a.order()), bound(b.order()));
    auto d = sub(a, b);
    if (d.is_zero())
        return true;
    return d.valuation() > n;
}

auto pth_power_test(const LaurentSeries & a) -> PthRootResult
{
    if (a.is_zero())
        throw Error("p-th power test of a zero series");
    const auto & K = a.field();
    const long p = K.characteristic();
    PthRootResult r;
    if (a.valuation() % p != 0) {
        r.witness = "valuation " + std::to_string(a.valuation()) + " is not divisible by " + std::to_string(p);
        r.exponent = a.valuation();
        return r;
    }
    std::map<long, Coeff> t;
    for (auto & [e, c] : a.terms()) {
        if (e % p != 0) {
            r.witness = "exponent " + std::to_string(e) + " carries a nonzero coefficient and is not divisible by "
                + std::to_string(p);
            r.exponent = e;
            return r;
        }
        auto root = K.pth_root(c);
        if (! root) {
            r.witness = "coefficient " + K.format(c) + " of t^" + std::to_string(e) + " is not a p-th power in "
                + K.descriptor();
            r.exponent = e;
            return r;
        }
        t.emplace(e / p, std::move(*root));
    }
    LaurentSeries::Order order;
    if (a.order())
        order = floor_div(*a.order(), p);
    r.root = LaurentSeries::from_terms(a.field_ptr(), t, order);
    return r;
}

} // namespace patchwork
