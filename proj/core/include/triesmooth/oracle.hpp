#pragma once

#include <cstdint>
#include <span>

#include "triesmooth/pfa.hpp"
#include "triesmooth/string_spec.hpp"

namespace triesmooth {

/// Truncated probability with explicit unresolved mass: the true value lies
/// in [lower, lower + residual]. Truncation is reported, never dropped.
struct ProbabilityInterval {
    double lower;
    double residual;
};

/// P[one computation on input symbol a outputs exactly beta]:
/// rho_a for empty beta, else sum_q r_{a,q} * prod(loops) * final return.
double symbol_output_exact(const StarLikePfa& pfa, Symbol a, std::span<const Symbol> beta);

/// P[beta is a prefix of one computation's output on input symbol a]; the
/// last symbol may be written by a loop or by the return step. beta nonempty.
double symbol_prefix_exact(const StarLikePfa& pfa, Symbol a, std::span<const Symbol> beta);

/// Default input truncation for prefix probabilities of length m; keeps the
/// residual below ~1e-8 for the edit channels at moderate m.
std::uint64_t default_truncation(const StarLikePfa& pfa, std::uint64_t m);

/*
 * P[alpha is a prefix of the perturbed output of t], by dynamic programming
 * over per-symbol computations: f(i, j) is the probability that the first i
 * input symbols were consumed writing exactly alpha[1..j], the automaton back
 * at the input state. Each step may complete alpha by writing its remaining
 * tail as a prefix of that one computation; completion is attributed to the
 * consuming step, so no realization is counted twice. Input truncated at L;
 * the unresolved mass sum_j f(L, j) becomes the residual.
 */
ProbabilityInterval prefix_probability(const StarLikePfa& pfa, const StringSpec& t,
                                       std::span<const Symbol> alpha, std::uint64_t truncation);

/// P[two independent perturbations of t agree on their first m symbols]
/// = sum over all words alpha of length m of prefix_probability(alpha)^2,
/// enumerated iteratively. Throws EnumerationCapError when r^m exceeds the
/// cap (Monte Carlo is the fallback at that size).
ProbabilityInterval coincidence_probability(const StarLikePfa& pfa, const StringSpec& t,
                                            std::uint32_t m, std::uint64_t truncation,
                                            std::uint64_t enumeration_cap = 2'000'000);

struct McCoincidence {
    double estimate;
    double std_error;  // binomial
    std::uint64_t trials;
    std::uint64_t exhausted_trials;
    bool exhaustion_warning;  // more than 1% of trials exhausted
};

/// Stochastic cross-check of the DP: fraction of trial pairs (two independent
/// perturbations of t) whose outputs agree on the first m symbols.
McCoincidence mc_coincidence(const StarLikePfa& pfa, const StringSpec& t, std::uint32_t m,
                             std::uint64_t trials, std::uint64_t seed);

}  // namespace triesmooth
