#pragma once

#include <cstdint>
#include <vector>

#include "triesmooth/pfa.hpp"
#include "triesmooth/string_spec.hpp"

namespace triesmooth {

struct SampleBudget {
    std::uint64_t target_output_len;  // m
    std::uint64_t max_input_len;      // L
};

/// Default input allowance for m output symbols: expected inputs per output
/// symbol are bounded by 1/(1 - max deletion prob); the x8 headroom makes
/// exhaustion negligible for healthy PFAs while pathological ones still
/// terminate.
SampleBudget default_budget(const StarLikePfa& pfa, std::uint64_t target_output_len);

struct PerturbedPrefix {
    std::vector<Symbol> output;     // |output| <= m
    std::uint64_t consumed_inputs;  // <= L
    bool exhausted;                 // L inputs consumed before m outputs appeared
};

/// Samples a prefix of the perturbed output of `pfa` on input `t`:
/// symbol-by-symbol computations, stopped the moment the m-th output symbol
/// is written (mid-computation; only the output prefix matters) or the L-th
/// input symbol has been consumed. Deterministic in (pfa, t, budget, seed).
PerturbedPrefix perturb_prefix(const StarLikePfa& pfa, const StringSpec& t, SampleBudget budget,
                               std::uint64_t seed);

/// Perturbs each string independently; string i uses the substream
/// derive_stream(master_seed, i).
std::vector<PerturbedPrefix> sample_perturbed_set(const StarLikePfa& pfa,
                                                  const std::vector<StringSpec>& strings,
                                                  SampleBudget budget, std::uint64_t master_seed);

}  // namespace triesmooth
