#pragma once

#include <patchwork/laurent.hpp>

#include <optional>
#include <string>
#include <vector>

namespace patchwork {

enum class Verdict { descends, fails, obstructed, inconclusive };

/// "DESCENDS", "FAILS", "OBSTRUCTED", "INCONCLUSIVE"; the bounded variants
/// carry a "-within-bounds" suffix.
auto verdict_label(Verdict v, bool within_bounds = false) -> std::string;

/// Y^p - Y - alpha/t over k2((t)), asking whether it comes from k1((t)).
/// k1 is the subfield with k1_order elements of the constants of k2.
struct ASInstance
{
    CoeffFieldPtr k2;
    std::size_t k1_order;
    Coeff alpha;

    auto p() const -> unsigned { return k2->characteristic(); }
};

/// Throws on a zero alpha or a missing subfield.
void validate(const ASInstance & inst);

/// alpha * t^-1, exact.
auto extension_datum(const ASInstance & inst) -> LaurentSeries;

/// beta == canonical + (gamma^p - gamma) + nonnegative.
struct ASReduction
{
    LaurentSeries canonical;
    LaurentSeries gamma;
    LaurentSeries nonnegative;
    /// false when a term with p | m stayed because its coefficient has no p-th root
    bool complete;
    std::string note;
};

/// Replace c t^-m (p | m, c = r^p) by r t^(-m/p) until no such term remains,
/// and split off the terms of nonnegative valuation. Over a perfect field the
/// result is supported on exponents prime to p.
auto as_reduce(const LaurentSeries & beta) -> ASReduction;

struct ASDecision
{
    Verdict verdict;
    bool within_bounds = false;
    std::optional<LaurentSeries> beta;   ///< k1-coefficient datum inducing the extension
    std::optional<LaurentSeries> gamma;  ///< gamma^p - gamma = alpha/t - beta
    std::string certificate;
    std::size_t searched = 0;            ///< candidate prefixes visited by the search
};

/// Descends exactly when alpha lies in k1.
auto as_descends_galois(const ASInstance & inst) -> ASDecision;

/// Exhaustive search over beta with k1 coefficients on t^-1 .. t^-support_bound.
/// Among all witnesses the least one is returned, comparing coefficient
/// tuples from the most negative exponent down.
auto as_brute_force_oracle(const ASInstance & inst, long support_bound, long truncation) -> ASDecision;

/// gamma^p - gamma == alpha/t - beta through exponent `truncation`.
auto check_as_witness(const ASInstance & inst, const LaurentSeries & beta, const LaurentSeries & gamma,
    long truncation) -> bool;

/// Instance for alpha over the subfield of order k1_order; throws with the
/// membership certificate when alpha lies in k1.
auto build_as_counterexample(CoeffFieldPtr k2, std::size_t k1_order, const Coeff & alpha) -> ASInstance;

/// Y^p - g^p - x with residue data over F_q[[x]]: f = g^p + x.
struct KummerInstance
{
    unsigned p;
    CoeffFieldPtr base;   ///< finite F_q
    LaurentSeries g;      ///< residue of g, nonnegative valuation
};

void validate(const KummerInstance & inst);

auto kummer_residue(const KummerInstance & inst) -> LaurentSeries;

/// sum_{i >= 1} x^(i^2), known through exponent `truncation`.
auto lacunary_series(const CoeffFieldPtr & base, long truncation) -> LaurentSeries;

struct AlgebraicRelation
{
    std::vector<FieldPoly> coefficients;  ///< P_0 .. P_d with sum P_i h^i = 0
};

struct AlgebraicSearch
{
    bool inconclusive = false;
    std::optional<AlgebraicRelation> relation;
    std::size_t equations = 0;
    std::size_t unknowns = 0;
};

/// Nonzero P_0..P_degree, each of degree <= coeff_degree, with sum P_i h^i
/// vanishing through the known order of h. Exact polynomials count as
/// algebraic of degree 1.
auto find_algebraic_relation(const LaurentSeries & h, unsigned degree, unsigned coeff_degree) -> AlgebraicSearch;

struct KummerDecision
{
    Verdict verdict;
    bool within_bounds = false;
    std::optional<FieldPoly> e;                 ///< witness multiplier
    std::optional<AlgebraicRelation> relation;
    std::string certificate;
    std::size_t candidates = 0;
};

/// Search nonzero e in F_q[x] of degree <= search_bound for f e^p algebraic
/// of degree <= search_bound with coefficients of degree <= search_bound.
auto kummer_obstruction(const KummerInstance & inst, unsigned search_bound) -> KummerDecision;

/// p-th power Kummer instance over F_p with the lacunary residue.
auto build_kummer_counterexample(unsigned p, long truncation) -> KummerInstance;

/// Reduction of W^3 + W^2 + W - u^2 t^-2 modulo Y^3 = Y + u t^-1 over F_p.
struct ReductionCertificate
{
    unsigned p;
    std::string generator;
    std::vector<std::string> steps;
    std::string remainder;
    bool zero;
};

/// `generator` is Y^k for some k >= 1, written "Y" or "Y^k".
auto verify_cubic_identity(unsigned p = 3, const std::string & generator = "Y^2") -> ReductionCertificate;

} // namespace patchwork
