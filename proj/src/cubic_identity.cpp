#include <patchwork/descent.hpp>
#include <patchwork/error.hpp>

#include <array>
#include <map>
#include <regex>

namespace patchwork {

namespace {

// polynomial over F_p in Y, u and z = t^-1; monomial key (deg Y, deg u, deg z)
class CubicPoly
{
public:
    using Key = std::array<unsigned, 3>;

    explicit CubicPoly(unsigned p) : p_(p) {}

    static auto monomial(unsigned p, long c, Key k) -> CubicPoly
    {
        CubicPoly f(p);
        f.add_term(k, c);
        return f;
    }

    void add_term(const Key & k, long c)
    {
        long v = ((c % static_cast<long>(p_)) + p_) % p_;
        auto & slot = terms_[k];
        slot = (slot + static_cast<unsigned>(v)) % p_;
        if (! slot)
            terms_.erase(k);
    }

    auto operator+(const CubicPoly & o) const -> CubicPoly
    {
        CubicPoly r = *this;
        for (auto & [k, c] : o.terms_)
            r.add_term(k, c);
        return r;
    }

    auto operator*(const CubicPoly & o) const -> CubicPoly
    {
        CubicPoly r(p_);
        for (auto & [a, x] : terms_)
            for (auto & [b, y] : o.terms_)
                r.add_term({a[0] + b[0], a[1] + b[1], a[2] + b[2]}, static_cast<long>(x) * y);
        return r;
    }

    auto y_degree() const -> unsigned
    {
        unsigned d = 0;
        for (auto & [k, c] : terms_)
            d = std::max(d, k[0]);
        return d;
    }

    /// Replace Y^3 by Y + u z until every Y-degree is below 3.
    auto reduce() const -> CubicPoly
    {
        CubicPoly cur = *this;
        while (cur.y_degree() >= 3) {
            CubicPoly next(p_);
            for (auto & [k, c] : cur.terms_) {
                if (k[0] < 3) {
                    next.add_term(k, c);
                    continue;
                }
                next.add_term({k[0] - 2, k[1], k[2]}, c);
                next.add_term({k[0] - 3, k[1] + 1, k[2] + 1}, c);
            }
            cur = std::move(next);
        }
        return cur;
    }

    auto is_zero() const -> bool { return terms_.empty(); }

    auto format() const -> std::string
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            auto & [k, c] = *it;
            std::string m;
            auto factor = [&](const std::string & v, unsigned e) {
                if (! e)
                    return;
                if (! m.empty())
                    m += "*";
                m += v;
                if (e > 1)
                    m += "^" + std::to_string(e);
            };
            factor("u", k[1]);
            if (k[2])
                m += (m.empty() ? "" : "*") + std::string("t^-") + std::to_string(k[2]);
            factor("Y", k[0]);
            if (! out.empty())
                out += " + ";
            if (m.empty())
                out += std::to_string(c);
            else
                out += (c == 1 ? "" : std::to_string(c) + "*") + m;
        }
        return out;
    }

private:
    unsigned p_;
    std::map<Key, unsigned> terms_;
};

} // namespace

auto verify_cubic_identity(unsigned p, const std::string & generator) -> ReductionCertificate
{
    if (! is_prime(p))
        throw Error("characteristic " + std::to_string(p) + " is not prime");
    static const std::regex re(R"(\s*Y\s*(?:\^\s*(\d+))?\s*)");
    std::smatch m;
    if (! std::regex_match(generator, m, re))
        throw Error("generator must have the form Y or Y^k, got '" + generator + "'");
    const unsigned k = m[1].matched ? static_cast<unsigned>(std::stoul(m[1])) : 1;
    if (k == 0 || k > 64)
        throw Error("generator exponent must lie in 1..64");

    ReductionCertificate cert{p, "Y^" + std::to_string(k), {}, "", false};
    const CubicPoly W = CubicPoly::monomial(p, 1, {k, 0, 0});
    const CubicPoly W2 = W * W, W3 = W2 * W;
    const auto r3 = W3.reduce(), r2 = W2.reduce(), r1 = W.reduce();
    const CubicPoly tail = CubicPoly::monomial(p, -1, {0, 2, 2});

    cert.steps.push_back("relation: Y^3 = Y + u*t^-1 over F_" + std::to_string(p));
    cert.steps.push_back("W = " + cert.generator);
    cert.steps.push_back("W^3 = " + W3.format() + " -> " + r3.format());
    cert.steps.push_back("W^2 = " + W2.format() + " -> " + r2.format());
    cert.steps.push_back("W = " + W.format() + " -> " + r1.format());
    const auto total = (r3 + r2 + r1 + tail).reduce();
    cert.steps.push_back("W^3 + W^2 + W - u^2*t^-2 -> " + total.format());
    cert.remainder = total.format();
    cert.zero = total.is_zero();
    return cert;
}

} // namespace patchwork
