#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triesmooth/pfa.hpp"
#include "triesmooth/polynomial.hpp"

namespace triesmooth {

enum class Verdict {
    Logarithmic,  // smoothed trie height grows like log n
    Unbounded,    // some symbol pair survives perturbation unchanged
    Degenerate,   // some symbol is deleted with certainty
};

std::string_view to_string(Verdict v);

struct DeltaResult {
    double value;
    Symbol witness_a;
    Symbol witness_b;
};

/// One-step coincidence contraction
///   delta = max_{a,b} ( rho_a + sum_q r_{a,q} * (loop_{q,b} + ret_{q,b}) ),
/// the largest probability mass a single consumed symbol can put on one fixed
/// output symbol (or on deletion). Ties broken by the lexicographically
/// smallest (a, b). Runs in O(r^2 * |W|).
DeltaResult compute_delta(const StarLikePfa& pfa);

struct DichotomyVerdict {
    double delta;
    Verdict verdict;
    Symbol witness_a;  // meaningful for Unbounded
    Symbol witness_b;
    bool boundary;  // delta landed inside [1 - kProbTol, 1]
};

/// Logarithmic iff delta < 1 (strictly, with a declared cut of kProbTol);
/// Degenerate if some deletion probability reaches 1.
DichotomyVerdict check_dichotomy(const StarLikePfa& pfa);

/*
 * The coincidence mass of output length m decays like gamma^m, where
 * gamma = 1/z~ and z~ is the smallest positive pole of the per-symbol
 * product
 *
 *   prod_a ( 1 - delta*rho_a - sum_q delta*r_{a,q}*eta_q*z / (1-(1-eta_q)z) )^-1 .
 *
 * Poles of the product are the union of the factors' denominator roots, so z~
 * is computed factor-wise. Output states sharing the same loop mass (1-eta)
 * are merged before clearing denominators, and states unread on a symbol are
 * dropped, so the cleared polynomial has no spurious roots to cancel.
 */

/// Cleared denominator polynomial of symbol a's factor. Requires a
/// Logarithmic verdict (delta < 1); degree at most the output-state count.
Polynomial factor_denominator(const StarLikePfa& pfa, Symbol a);

struct FactorRoot {
    Symbol symbol;
    double root;  // smallest positive denominator root of this factor
};

struct GammaResult {
    double gamma;  // in (0, 1)
    double pole;   // z~ > 1
    std::vector<FactorRoot> per_factor_roots;
    Symbol factor_of_min;
};

/// Companion-matrix candidates polished by bisection on the bracket
/// (1, 1/(1 - eta_max)), where each factor denominator is provably positive
/// at z = 1 and strictly decreasing. Absolute tolerance 1e-10 on the pole.
GammaResult compute_gamma(const StarLikePfa& pfa);

/// 2 * ceil((1 + epsilon) * log_{1/gamma} n). Asymptotic main term only.
double upper_bound_height(double gamma, std::uint64_t n, double epsilon);

/// P = max_a sum_b (loop_{q_a,b} + ret_{q_a,b})^2: the chance two independent
/// one-symbol outputs coincide, maximized over symbols. Hypothesis:
/// read-semi-deterministic (a unique output state per symbol).
double collision_probability(const StarLikePfa& pfa);

/// 2 * (1 - epsilon) * log_{1/P} n. Requires P in (0, 1).
double lower_bound_height(double collision_prob, std::uint64_t n, double epsilon);

struct EntropyResult {
    double value;
    bool degenerate;  // a single symbol carries all mass
};

/// Second-order Renyi entropy of a memoryless source: -ln(sum p_i^2)/2.
EntropyResult renyi_entropy_memoryless(const std::vector<double>& probs);

/// Per-symbol output distribution Q_a[b] = loop_{q_a,b} + ret_{q_a,b}; the
/// perturbed output of a constant input a...a is a memoryless source with
/// this parameter vector. Same hypothesis as collision_probability.
std::vector<double> output_vector(const StarLikePfa& pfa, Symbol a);

struct BoundReport {
    std::uint64_t n;
    double epsilon;
    std::optional<double> upper;
    std::optional<double> lower;
};

struct AnalysisReport {
    double delta;
    Verdict verdict;
    Symbol witness_a;
    Symbol witness_b;
    bool boundary;
    std::optional<GammaResult> gamma;
    std::optional<double> collision_prob;  // P
    std::optional<EntropyResult> entropy;  // of the P-attaining output vector
    std::optional<BoundReport> bounds;
};

/// Full analysis; quantities whose hypotheses fail are simply absent. Bounds
/// are attached only when n and epsilon are both given (epsilon never has a
/// default).
AnalysisReport analyze(const StarLikePfa& pfa, std::optional<std::uint64_t> n = std::nullopt,
                       std::optional<double> epsilon = std::nullopt);

std::string analysis_report_json(const AnalysisReport& report, const Alphabet& alphabet);

}  // namespace triesmooth
