#include <patchwork/descent.hpp>
#include <patchwork/error.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace patchwork {

auto verdict_label(Verdict v, bool within_bounds) -> std::string
{
    std::string s;
    switch (v) {
    case Verdict::descends: s = "DESCENDS"; break;
    case Verdict::fails: s = "FAILS"; break;
    case Verdict::obstructed: s = "OBSTRUCTED"; break;
    case Verdict::inconclusive: return "INCONCLUSIVE";
    }
    return within_bounds ? s + "-within-bounds" : s;
}

void validate(const ASInstance & inst)
{
    if (! inst.k2)
        throw Error("Artin-Schreier instance needs a coefficient field");
    if (! inst.k2->base().has_subfield(inst.k1_order))
        throw Error(inst.k2->descriptor() + " has no constant subfield with " + std::to_string(inst.k1_order)
            + " elements");
    if (inst.k2->is_zero(inst.alpha))
        throw Error("Artin-Schreier datum alpha must be nonzero");
}

auto extension_datum(const ASInstance & inst) -> LaurentSeries
{
    return LaurentSeries::monomial(inst.k2, inst.alpha, -1);
}

auto as_reduce(const LaurentSeries & beta) -> ASReduction
{
    const auto & K = beta.field();
    const long p = K.characteristic();
    std::map<long, Coeff> work, gamma;
    for (auto & [e, c] : beta.terms())
        if (e < 0)
            work.emplace(e, c);
    ASReduction r{LaurentSeries(beta.field_ptr()), LaurentSeries(beta.field_ptr()), beta.nonnegative_part(), true, ""};

    // most negative exponent first; replacements only move terms upward
    std::map<long, Coeff> stuck;
    while (! work.empty()) {
        auto [e, c] = *work.begin();
        work.erase(work.begin());
        if (-e % p != 0) {
            stuck.emplace(e, c);
            continue;
        }
        auto root = K.pth_root(c);
        if (! root) {
            r.complete = false;
            if (r.note.empty())
                r.note = "coefficient " + K.format(c) + " of t^" + std::to_string(e) + " is not a p-th power";
            stuck.emplace(e, c);
            continue;
        }
        // c t^e = (r t^(e/p))^p - r t^(e/p) + r t^(e/p)
        const long f = e / p;
        auto g = gamma.find(f);
        if (g == gamma.end())
            gamma.emplace(f, *root);
        else
            g->second = K.add(g->second, *root);
        auto w = work.find(f);
        if (w == work.end())
            work.emplace(f, *root);
        else {
            w->second = K.add(w->second, *root);
            if (K.is_zero(w->second))
                work.erase(w);
        }
    }
    std::erase_if(gamma, [&](const auto & kv) { return K.is_zero(kv.second); });
    r.canonical = LaurentSeries::from_terms(beta.field_ptr(), stuck);
    r.gamma = LaurentSeries::from_terms(beta.field_ptr(), gamma);
    return r;
}

auto as_descends_galois(const ASInstance & inst) -> ASDecision
{
    validate(inst);
    const auto & K = *inst.k2;
    ASDecision d;
    const std::string k1 = "F" + std::to_string(inst.k1_order);
    if (K.in_subfield(inst.alpha, inst.k1_order)) {
        d.verdict = Verdict::descends;
        d.beta = extension_datum(inst);
        d.gamma = LaurentSeries(inst.k2);
        d.certificate = "alpha = " + K.format(inst.alpha) + " lies in " + k1 + "; beta = alpha/t";
        return d;
    }
    d.verdict = Verdict::fails;
    if (! K.is_constant(inst.alpha))
        d.certificate = "alpha = " + K.format(inst.alpha) + " is not constant, hence not in " + k1;
    else {
        const auto a = inst.alpha.num.empty() ? 0u : inst.alpha.num[0];
        d.certificate = "alpha^" + std::to_string(inst.k1_order) + " = "
            + K.base().format(K.base().pow(a, inst.k1_order)) + " differs from alpha = " + K.format(inst.alpha)
            + ", so alpha is not in " + k1;
    }
    return d;
}

auto check_as_witness(const ASInstance & inst, const LaurentSeries & beta, const LaurentSeries & gamma,
    long truncation) -> bool
{
    auto lhs = sub(frobenius(gamma), gamma).truncate(truncation);
    auto rhs = sub(extension_datum(inst), beta).truncate(truncation);
    return lhs == rhs;
}

auto as_brute_force_oracle(const ASInstance & inst, long support_bound, long truncation) -> ASDecision
{
    validate(inst);
    ASDecision d;
    if (support_bound < 1 || truncation < 1) {
        d.verdict = Verdict::inconclusive;
        d.certificate = "search space empty: support bound " + std::to_string(support_bound) + ", truncation "
            + std::to_string(truncation);
        return d;
    }
    const auto & K = *inst.k2;
    const long p = inst.p();
    const long M = support_bound;
    const auto k1 = K.subfield_elements(inst.k1_order);

    // gamma's principal part is c_{-1} .. c_{-M/p}; deeper terms would give
    // gamma^p a pole of order > M. At exponent -k the equation reads
    // [p | k] c_{-k/p}^p - c_{-k} = delta_{-k}, delta = alpha/t - beta.
    std::vector<Coeff> b(static_cast<std::size_t>(M + 1), K.zero()), c(b);
    std::optional<std::vector<Coeff>> best_b, best_c;
    auto colex_less = [&](const std::vector<Coeff> & x, const std::vector<Coeff> & y) {
        return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
    };
    std::function<void(long)> descend = [&](long k) {
        ++d.searched;
        if (k > M) {
            if (! best_b || colex_less(b, *best_b)) {
                best_b = b;
                best_c = c;
            }
            return;
        }
        const Coeff forced_frob = (k % p == 0) ? K.frobenius(c[static_cast<std::size_t>(k / p)]) : K.zero();
        const Coeff datum = k == 1 ? inst.alpha : K.zero();
        for (auto & bk : k1) {
            const Coeff delta = K.sub(datum, bk);
            if (k * p <= M) {
                c[static_cast<std::size_t>(k)] = K.sub(forced_frob, delta);
            } else {
                if (forced_frob != delta)
                    continue;
                c[static_cast<std::size_t>(k)] = K.zero();
            }
            b[static_cast<std::size_t>(k)] = bk;
            descend(k + 1);
        }
        b[static_cast<std::size_t>(k)] = K.zero();
        c[static_cast<std::size_t>(k)] = K.zero();
    };
    descend(1);

    d.within_bounds = true;
    if (! best_b) {
        d.verdict = Verdict::fails;
        d.certificate = "no beta with " + ("F" + std::to_string(inst.k1_order)) + "-coefficients on t^-1..t^-"
            + std::to_string(M) + " makes alpha/t - beta an Artin-Schreier value";
        return d;
    }
    std::map<long, Coeff> bt, ct;
    for (long k = 1; k <= M; ++k) {
        if (! K.is_zero((*best_b)[static_cast<std::size_t>(k)]))
            bt.emplace(-k, (*best_b)[static_cast<std::size_t>(k)]);
        if (! K.is_zero((*best_c)[static_cast<std::size_t>(k)]))
            ct.emplace(-k, (*best_c)[static_cast<std::size_t>(k)]);
    }
    d.beta = LaurentSeries::from_terms(inst.k2, bt);
    d.gamma = LaurentSeries::from_terms(inst.k2, ct, truncation);
    if (! check_as_witness(inst, *d.beta, *d.gamma, truncation))
        throw Error("internal: Artin-Schreier witness fails its own equation");
    d.verdict = Verdict::descends;
    d.certificate = "beta = " + d.beta->format() + ", gamma = " + d.gamma->format();
    return d;
}

auto build_as_counterexample(CoeffFieldPtr k2, std::size_t k1_order, const Coeff & alpha) -> ASInstance
{
    ASInstance inst{std::move(k2), k1_order, alpha};
    validate(inst);
    auto d = as_descends_galois(inst);
    if (d.verdict == Verdict::descends)
        throw Error("alpha is a member of the base field: " + d.certificate);
    return inst;
}

} // namespace patchwork
