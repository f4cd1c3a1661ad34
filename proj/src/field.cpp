#include <patchwork/field.hpp>
#include <patchwork/error.hpp>

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

namespace patchwork {

auto is_prime(unsigned long long n) -> bool
{
    if (n < 2)
        return false;
    for (unsigned long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

namespace {

using Digits = std::vector<unsigned>;

auto to_digits(std::size_t a, unsigned p, unsigned e) -> Digits
{
    Digits d(e);
    for (unsigned i = 0; i < e; ++i, a /= p)
        d[i] = static_cast<unsigned>(a % p);
    return d;
}

auto from_digits(const Digits & d, unsigned p) -> std::size_t
{
    std::size_t a = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it)
        a = a * p + *it;
    return a;
}

// remainder of a modulo the monic polynomial m over F_p
auto reduce(Digits a, const Digits & m, unsigned p) -> Digits
{
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = a.size(); i-- > dm;) {
        const unsigned c = a[i];
        if (! c)
            continue;
        for (std::size_t j = 0; j <= dm; ++j)
            a[i - dm + j] = (a[i - dm + j] + (p - c) * m[j]) % p;
    }
    a.resize(dm);
    return a;
}

auto prime_poly_mul(const Digits & a, const Digits & b, unsigned p) -> Digits
{
    Digits c(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return c;
}

auto divides(const Digits & m, Digits a, unsigned p) -> bool
{
    // does the monic m divide a?
    auto r = reduce(std::move(a), m, p);
    return std::all_of(r.begin(), r.end(), [](unsigned x) { return x == 0; });
}

// lexicographically least monic irreducible of degree e, comparing the
// coefficient tuples as base-p numbers with the constant term least significant
auto least_irreducible(unsigned p, unsigned e) -> Digits
{
    std::size_t count = 1;
    for (unsigned i = 0; i < e; ++i)
        count *= p;
    for (std::size_t low = 0; low < count; ++low) {
        Digits m = to_digits(low, p, e);
        m.push_back(1);
        bool irreducible = true;
        for (unsigned d = 1; d <= e / 2 && irreducible; ++d) {
            std::size_t cnt = 1;
            for (unsigned i = 0; i < d; ++i)
                cnt *= p;
            for (std::size_t l2 = 0; l2 < cnt && irreducible; ++l2) {
                Digits f = to_digits(l2, p, d);
                f.push_back(1);
                if (divides(f, m, p))
                    irreducible = false;
            }
        }
        if (irreducible)
            return m;
    }
    throw Error("no irreducible polynomial found");
}

} // namespace

FiniteField::FiniteField(unsigned p, unsigned e) : p_(p), e_(e)
{
    if (! is_prime(p))
        throw Error("field characteristic " + std::to_string(p) + " is not prime");
    if (e == 0)
        throw Error("field degree must be positive");
    q_ = 1;
    for (unsigned i = 0; i < e; ++i) {
        q_ *= p;
        if (q_ > 1024)
            throw Error("finite fields are limited to 1024 elements");
    }
    modulus_ = least_irreducible(p, e);

    add_.resize(q_ * q_);
    neg_.resize(q_);
    for (std::size_t a = 0; a < q_; ++a) {
        auto da = to_digits(a, p, e);
        Digits dn(e);
        for (unsigned i = 0; i < e; ++i)
            dn[i] = (p - da[i]) % p;
        neg_[a] = static_cast<Element>(from_digits(dn, p));
        for (std::size_t b = 0; b < q_; ++b) {
            auto db = to_digits(b, p, e);
            for (unsigned i = 0; i < e; ++i)
                db[i] = (db[i] + da[i]) % p;
            add_[a * q_ + b] = static_cast<std::uint16_t>(from_digits(db, p));
        }
    }

    // exp/log tables from a primitive element
    auto slow_mul = [&](std::size_t a, std::size_t b) {
        return from_digits(reduce(prime_poly_mul(to_digits(a, p, e), to_digits(b, p, e), p), modulus_, p), p);
    };
    for (std::size_t g = 1; g < q_; ++g) {
        std::vector<Element> powers{1};
        std::size_t x = g;
        while (x != 1) {
            powers.push_back(static_cast<Element>(x));
            x = slow_mul(x, g);
        }
        if (powers.size() == q_ - 1 || q_ == 2) {
            exp_ = std::move(powers);
            break;
        }
    }
    log_.assign(q_, 0);
    for (std::size_t k = 0; k < exp_.size(); ++k)
        log_[exp_[k]] = static_cast<std::uint32_t>(k);
}

auto FiniteField::mul(Element a, Element b) const -> Element
{
    if (a == 0 || b == 0)
        return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

auto FiniteField::inv(Element a) const -> Element
{
    if (a == 0)
        throw Error("division by zero in F_" + std::to_string(q_));
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

auto FiniteField::pow(Element a, unsigned long long k) const -> Element
{
    if (k == 0)
        return 1;
    if (a == 0)
        return 0;
    return exp_[(log_[a] * (k % (q_ - 1))) % (q_ - 1)];
}

auto FiniteField::from_integer(long long n) const -> Element
{
    long long r = n % static_cast<long long>(p_);
    if (r < 0)
        r += p_;
    return static_cast<Element>(r);
}

auto FiniteField::generator() const -> Element
{
    if (e_ == 1)
        throw Error("F_" + std::to_string(q_) + " is a prime field and has no generator w");
    return p_;
}

auto FiniteField::has_subfield(std::size_t q1) const -> bool
{
    std::size_t x = 1;
    for (unsigned d = 0; d <= e_; ++d, x *= p_)
        if (x == q1)
            return d > 0 && e_ % d == 0;
    return false;
}

auto FiniteField::in_subfield(Element a, std::size_t q1) const -> bool
{
    if (! has_subfield(q1))
        throw Error("F_" + std::to_string(q_) + " has no subfield with " + std::to_string(q1) + " elements");
    return pow(a, q1) == a;
}

auto FiniteField::format(Element a, const std::string & var) const -> std::string
{
    if (a == 0)
        return "0";
    auto d = to_digits(a, p_, e_);
    std::string out;
    for (unsigned i = e_; i-- > 0;) {
        if (! d[i])
            continue;
        if (! out.empty())
            out += " + ";
        if (i == 0)
            out += std::to_string(d[i]);
        else {
            if (d[i] != 1)
                out += std::to_string(d[i]) + "*";
            out += var;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace poly {

auto trim(FieldPoly a) -> FieldPoly
{
    while (! a.empty() && a.back() == 0)
        a.pop_back();
    return a;
}

auto degree(const FieldPoly & a) -> long { return static_cast<long>(a.size()) - 1; }

auto add(const FiniteField & F, const FieldPoly & a, const FieldPoly & b) -> FieldPoly
{
    FieldPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return trim(std::move(c));
}

auto sub(const FiniteField & F, const FieldPoly & a, const FieldPoly & b) -> FieldPoly
{
    FieldPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return trim(std::move(c));
}

auto mul(const FiniteField & F, const FieldPoly & a, const FieldPoly & b) -> FieldPoly
{
    if (a.empty() || b.empty())
        return {};
    FieldPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j)
                c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    return trim(std::move(c));
}

auto scale(const FiniteField & F, const FieldPoly & a, FiniteField::Element c) -> FieldPoly
{
    FieldPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = F.mul(a[i], c);
    return trim(std::move(out));
}

auto divmod(const FiniteField & F, const FieldPoly & a, const FieldPoly & b) -> std::pair<FieldPoly, FieldPoly>
{
    if (b.empty())
        throw Error("polynomial division by zero");
    FieldPoly r = a;
    FieldPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    const auto lead_inv = F.inv(b.back());
    while (r.size() >= b.size()) {
        const std::size_t shift = r.size() - b.size();
        const auto c = F.mul(r.back(), lead_inv);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[shift + j] = F.sub(r[shift + j], F.mul(c, b[j]));
        r = trim(std::move(r));
    }
    return {trim(std::move(q)), r};
}

auto gcd(const FiniteField & F, FieldPoly a, FieldPoly b) -> FieldPoly
{
    while (! b.empty()) {
        auto r = divmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (! a.empty())
        a = scale(F, a, F.inv(a.back()));
    return a;
}

auto format(const FiniteField & F, const FieldPoly & a, const std::string & var, const std::string & coeff_var)
    -> std::string
{
    if (a.empty())
        return "0";
    std::string out;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (! a[i])
            continue;
        std::string c = F.format(a[i], coeff_var);
        const bool compound = c.find(' ') != std::string::npos;
        if (! out.empty())
            out += " + ";
        if (i == 0) {
            out += compound && a.size() > 1 ? "(" + c + ")" : c;
            continue;
        }
        if (c != "1")
            out += (compound ? "(" + c + ")" : c) + "*";
        out += var;
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out;
}

} // namespace poly

CoeffField::CoeffField(FieldPtr base, Kind kind) : base_(std::move(base)), kind_(kind)
{
    if (! base_)
        throw Error("coefficient field needs a base field");
}

auto CoeffField::parse_descriptor(const std::string & text) -> std::shared_ptr<const CoeffField>
{
    static const std::regex re(R"(\s*(?:F_?|GF\()(\d+)\)?\s*(\(\s*s\s*\))?\s*)");
    std::smatch m;
    if (! std::regex_match(text, m, re))
        throw Error("unrecognised coefficient field '" + text + "' (expected e.g. F4 or F3(s))");
    const unsigned long long q = std::stoull(m[1]);
    unsigned p = 0, e = 0;
    for (unsigned long long d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = static_cast<unsigned>(d);
            break;
        }
    unsigned long long x = 1;
    while (p && x < q) {
        x *= p;
        ++e;
    }
    if (! p || x != q)
        throw Error("coefficient field '" + text + "': " + std::to_string(q) + " is not a prime power");
    auto base = std::make_shared<const FiniteField>(p, e);
    return std::make_shared<const CoeffField>(base, m[2].matched ? Kind::rational : Kind::finite);
}

auto CoeffField::descriptor() const -> std::string
{
    return "F" + std::to_string(base_->order()) + (kind_ == Kind::rational ? "(s)" : "");
}

auto CoeffField::constant(FiniteField::Element c) const -> Coeff
{
    if (c >= base_->order())
        throw Error("constant outside " + descriptor());
    return {c ? FieldPoly{c} : FieldPoly{}, {1}};
}

auto CoeffField::variable() const -> Coeff
{
    if (kind_ != Kind::rational)
        throw Error("s is not an element of " + descriptor());
    return {{0, 1}, {1}};
}

auto CoeffField::normalize(FieldPoly num, FieldPoly den) const -> Coeff
{
    const auto & F = *base_;
    num = poly::trim(std::move(num));
    den = poly::trim(std::move(den));
    if (den.empty())
        throw Error("division by zero in " + descriptor());
    if (num.empty())
        return zero();
    auto g = poly::gcd(F, num, den);
    if (g.size() > 1) {
        num = poly::divmod(F, num, g).first;
        den = poly::divmod(F, den, g).first;
    }
    const auto lead = F.inv(den.back());
    return {poly::scale(F, num, lead), poly::scale(F, den, lead)};
}

auto CoeffField::add(const Coeff & a, const Coeff & b) const -> Coeff
{
    const auto & F = *base_;
    if (a.den == b.den) {
        auto n = poly::add(F, a.num, b.num);
        if (a.den.size() == 1)
            return {std::move(n), a.den};
        return normalize(std::move(n), a.den);
    }
    return normalize(poly::add(F, poly::mul(F, a.num, b.den), poly::mul(F, b.num, a.den)), poly::mul(F, a.den, b.den));
}

auto CoeffField::neg(const Coeff & a) const -> Coeff
{
    return {poly::scale(*base_, a.num, base_->neg(1)), a.den};
}

auto CoeffField::mul(const Coeff & a, const Coeff & b) const -> Coeff
{
    const auto & F = *base_;
    if (a.den.size() == 1 && b.den.size() == 1)
        return {poly::mul(F, a.num, b.num), {1}};
    return normalize(poly::mul(F, a.num, b.num), poly::mul(F, a.den, b.den));
}

auto CoeffField::inv(const Coeff & a) const -> Coeff
{
    if (is_zero(a))
        throw Error("division by zero in " + descriptor());
    return normalize(a.den, a.num);
}

auto CoeffField::pow(const Coeff & a, unsigned long long k) const -> Coeff
{
    Coeff result = one(), base = a;
    while (k) {
        if (k & 1)
            result = mul(result, base);
        k >>= 1;
        if (k)
            base = mul(base, base);
    }
    return result;
}

auto CoeffField::frobenius(const Coeff & a) const -> Coeff
{
    // (sum c_i s^i)^p = sum c_i^p s^(ip)
    const auto & F = *base_;
    const unsigned p = F.characteristic();
    auto lift = [&](const FieldPoly & f) {
        FieldPoly out(f.empty() ? 0 : (f.size() - 1) * p + 1, 0);
        for (std::size_t i = 0; i < f.size(); ++i)
            out[i * p] = F.frobenius(f[i]);
        return out;
    };
    return {lift(a.num), lift(a.den)};
}

auto CoeffField::pth_root(const Coeff & a) const -> std::optional<Coeff>
{
    // the fraction is reduced with monic denominator, so a is a p-th power
    // exactly when both parts only involve powers s^(pi)
    const auto & F = *base_;
    const unsigned p = F.characteristic();
    auto root = [&](const FieldPoly & f) -> std::optional<FieldPoly> {
        FieldPoly out;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i % p) {
                if (f[i])
                    return std::nullopt;
                continue;
            }
            out.push_back(F.pth_root(f[i]));
        }
        return poly::trim(std::move(out));
    };
    auto n = root(a.num), d = root(a.den);
    if (! n || ! d)
        return std::nullopt;
    return Coeff{std::move(*n), std::move(*d)};
}

auto CoeffField::in_subfield(const Coeff & a, std::size_t q1) const -> bool
{
    if (! is_constant(a))
        return false;
    return base_->in_subfield(a.num.empty() ? 0 : a.num[0], q1);
}

auto CoeffField::subfield_elements(std::size_t q1) const -> std::vector<Coeff>
{
    std::vector<Coeff> out;
    for (FiniteField::Element c = 0; c < base_->order(); ++c)
        if (base_->in_subfield(c, q1))
            out.push_back(constant(c));
    return out;
}

auto CoeffField::elements() const -> std::vector<Coeff>
{
    if (kind_ != Kind::finite)
        throw Error(descriptor() + " is infinite");
    return subfield_elements(base_->order());
}

auto CoeffField::format(const Coeff & a) const -> std::string
{
    const auto & F = *base_;
    if (a.den.size() == 1)
        return kind_ == Kind::rational ? poly::format(F, a.num, "s") : F.format(a.num.empty() ? 0 : a.num[0]);
    auto wrap = [&](const FieldPoly & f) {
        auto s = poly::format(F, f, "s");
        return s.find(' ') != std::string::npos || s.find('*') != std::string::npos ? "(" + s + ")" : s;
    };
    return wrap(a.num) + "/" + wrap(a.den);
}

namespace {

class CoeffParser
{
public:
    CoeffParser(const CoeffField & K, const std::string & text) : K_(K), s_(text) {}

    auto run() -> Coeff
    {
        auto v = expr();
        skip();
        if (i_ != s_.size())
            fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string & why) const
    {
        throw Error("cannot parse coefficient '" + s_ + "' at position " + std::to_string(i_) + ": " + why);
    }
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    auto peek() -> char
    {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    auto expr() -> Coeff
    {
        Coeff v;
        if (peek() == '-') {
            ++i_;
            v = K_.neg(term());
        } else
            v = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++i_;
                v = K_.add(v, term());
            } else if (c == '-') {
                ++i_;
                v = K_.sub(v, term());
            } else
                return v;
        }
    }
    auto term() -> Coeff
    {
        Coeff v = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++i_;
                v = K_.mul(v, factor());
            } else if (c == '/') {
                ++i_;
                v = K_.div(v, factor());
            } else if (c == 'w' || c == 's' || c == '(' || std::isdigit(static_cast<unsigned char>(c)))
                v = K_.mul(v, factor());
            else
                return v;
        }
    }
    auto factor() -> Coeff
    {
        Coeff v = atom();
        if (peek() == '^') {
            ++i_;
            skip();
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                ++i_;
            if (start == i_)
                fail("exponent expected");
            v = K_.pow(v, std::stoull(s_.substr(start, i_ - start)));
        }
        return v;
    }
    auto atom() -> Coeff
    {
        char c = peek();
        if (c == '(') {
            ++i_;
            auto v = expr();
            if (peek() != ')')
                fail("')' expected");
            ++i_;
            return v;
        }
        if (c == 'w') {
            ++i_;
            return K_.constant(K_.base().generator());
        }
        if (c == 's') {
            ++i_;
            return K_.variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                ++i_;
            return K_.constant(K_.base().from_integer(std::stoll(s_.substr(start, i_ - start))));
        }
        fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end");
    }

    const CoeffField & K_;
    std::string s_;
    std::size_t i_ = 0;
};

} // namespace

auto CoeffField::parse(const std::string & text) const -> Coeff
{
    try {
        return CoeffParser(*this, text).run();
    } catch (const std::out_of_range &) {
        throw Error("number too large in coefficient '" + text + "'");
    }
}

} // namespace patchwork
