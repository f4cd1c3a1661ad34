#include <patchwork/descent.hpp>
#include <patchwork/error.hpp>

#include <algorithm>

namespace patchwork {

void validate(const KummerInstance & inst)
{
    if (! is_prime(inst.p))
        throw Error("Kummer exponent " + std::to_string(inst.p) + " is not prime");
    if (! inst.base || inst.base->kind() != CoeffField::Kind::finite)
        throw Error("Kummer residue data need a finite coefficient field");
    if (inst.base->characteristic() != inst.p)
        throw Error("residue characteristic " + std::to_string(inst.base->characteristic()) + " differs from p = "
            + std::to_string(inst.p));
    if (! (inst.g.field() == *inst.base))
        throw Error("residue series lives over the wrong field");
    if (! inst.g.is_zero() && inst.g.valuation() < 0)
        throw Error("residue of g must be a power series");
}

auto kummer_residue(const KummerInstance & inst) -> LaurentSeries
{
    validate(inst);
    return add(frobenius(inst.g), LaurentSeries::monomial(inst.base, inst.base->one(), 1));
}

auto lacunary_series(const CoeffFieldPtr & base, long truncation) -> LaurentSeries
{
    std::map<long, Coeff> t;
    for (long i = 1; i * i <= truncation; ++i)
        t.emplace(i * i, base->one());
    return LaurentSeries::from_terms(base, t, truncation);
}

namespace {

using E = FiniteField::Element;

// some nonzero kernel vector of the matrix, or nullopt when it has full column rank
auto kernel_vector(const FiniteField & F, std::vector<std::vector<E>> rows, std::size_t cols)
    -> std::optional<std::vector<E>>
{
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[r], rows[piv]);
        const E inv = F.inv(rows[r][c]);
        for (auto & x : rows[r])
            x = F.mul(x, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            const E f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() == cols)
        return std::nullopt;
    std::size_t free = 0;
    while (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end())
        ++free;
    std::vector<E> x(cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        x[pivot_col[i]] = F.neg(rows[i][free]);
    return x;
}

} // namespace

auto find_algebraic_relation(const LaurentSeries & h, unsigned degree, unsigned coeff_degree) -> AlgebraicSearch
{
    const auto & K = h.field();
    if (K.kind() != CoeffField::Kind::finite)
        throw Error("algebraicity search needs a finite coefficient field");
    const auto & F = K.base();
    AlgebraicSearch out;
    auto constant_of = [](const Coeff & c) -> E { return c.num.empty() ? 0 : c.num[0]; };

    if (h.is_exact()) {
        // polynomial (or Laurent polynomial times a power of x): P_1 = x^k, P_0 = -x^k h
        FieldPoly minus_h;
        long low = h.is_zero() ? 0 : std::min(0L, h.valuation());
        for (auto & [e, c] : h.terms()) {
            const auto at = static_cast<std::size_t>(e - low);
            if (minus_h.size() <= at)
                minus_h.resize(at + 1, 0);
            minus_h[at] = F.neg(constant_of(c));
        }
        FieldPoly lead(static_cast<std::size_t>(-low) + 1, 0);
        lead.back() = 1;
        out.relation = AlgebraicRelation{{poly::trim(minus_h), lead}};
        return out;
    }
    if (! h.is_zero() && h.valuation() < 0)
        throw Error("algebraicity search expects a power series");

    const long n = *h.order();
    std::vector<LaurentSeries> powers{LaurentSeries::monomial(h.field_ptr(), K.one(), 0, n)};
    for (unsigned i = 1; i <= degree; ++i)
        powers.push_back(mul(powers.back(), h).truncate(n));
    long known = n;
    for (auto & s : powers)
        known = std::min(known, *s.order());

    out.unknowns = static_cast<std::size_t>(degree + 1) * (coeff_degree + 1);
    out.equations = static_cast<std::size_t>(known + 1);
    if (known < 0 || out.equations <= out.unknowns) {
        out.inconclusive = true;
        return out;
    }
    std::vector<std::vector<E>> rows(out.equations, std::vector<E>(out.unknowns, 0));
    for (long j = 0; j <= known; ++j)
        for (unsigned i = 0; i <= degree; ++i)
            for (unsigned l = 0; l <= coeff_degree && static_cast<long>(l) <= j; ++l)
                rows[static_cast<std::size_t>(j)][i * (coeff_degree + 1) + l]
                    = constant_of(powers[i].coeff(j - static_cast<long>(l)));
    auto x = kernel_vector(F, std::move(rows), out.unknowns);
    if (! x)
        return out;
    AlgebraicRelation rel;
    for (unsigned i = 0; i <= degree; ++i)
        rel.coefficients.push_back(poly::trim(
            FieldPoly(x->begin() + i * (coeff_degree + 1), x->begin() + (i + 1) * (coeff_degree + 1))));
    out.relation = std::move(rel);
    return out;
}

auto kummer_obstruction(const KummerInstance & inst, unsigned search_bound) -> KummerDecision
{
    validate(inst);
    KummerDecision d;
    if (search_bound < 1) {
        d.verdict = Verdict::inconclusive;
        d.certificate = "search bound 0 leaves no algebraic relations to test";
        return d;
    }
    const auto & K = *inst.base;
    const auto & F = K.base();
    const auto f = kummer_residue(inst);
    const std::size_t q = F.order();

    std::size_t count = 1;
    for (unsigned i = 0; i <= search_bound; ++i)
        count *= q;
    // e runs through nonzero polynomials of degree <= bound, base-q digits as coefficients
    for (std::size_t code = 1; code < count; ++code) {
        std::map<long, Coeff> terms;
        FieldPoly e;
        for (std::size_t x = code; x; x /= q)
            e.push_back(static_cast<E>(x % q));
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i])
                terms.emplace(static_cast<long>(i), K.constant(e[i]));
        auto ep = frobenius(LaurentSeries::from_terms(inst.base, terms));
        auto h = mul(f, ep);
        ++d.candidates;
        auto search = find_algebraic_relation(h, search_bound, search_bound);
        if (search.inconclusive) {
            d.verdict = Verdict::inconclusive;
            d.certificate = "truncation too short: " + std::to_string(search.equations) + " equations for "
                + std::to_string(search.unknowns) + " unknowns";
            return d;
        }
        if (search.relation) {
            d.verdict = Verdict::descends;
            d.within_bounds = ! h.is_exact();
            d.e = poly::trim(e);
            d.relation = search.relation;
            d.certificate = "e = " + poly::format(F, *d.e, "x") + " makes f*e^p "
                + (h.is_exact() ? std::string("a polynomial") : "satisfy a relation of degree <= "
                    + std::to_string(search_bound) + " through x^" + std::to_string(*h.order()));
            return d;
        }
    }
    d.verdict = Verdict::obstructed;
    d.within_bounds = true;
    d.certificate = "no nonzero e of degree <= " + std::to_string(search_bound) + " makes f*e^p algebraic of degree <= "
        + std::to_string(search_bound) + " with coefficients of degree <= " + std::to_string(search_bound)
        + " through x^" + std::to_string(*f.order());
    return d;
}

auto build_kummer_counterexample(unsigned p, long truncation) -> KummerInstance
{
    auto base = std::make_shared<const CoeffField>(std::make_shared<const FiniteField>(p, 1), CoeffField::Kind::finite);
    return KummerInstance{p, base, lacunary_series(base, truncation)};
}

} // namespace patchwork
