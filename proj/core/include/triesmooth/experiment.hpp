#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "triesmooth/analysis.hpp"
#include "triesmooth/family.hpp"
#include "triesmooth/perturb.hpp"
#include "triesmooth/pfa.hpp"
#include "triesmooth/rng.hpp"

namespace triesmooth {

struct ExperimentConfig {
    std::string pfa_path;
    FamilySpec family;
    std::uint64_t n = 0;
    std::uint32_t trials = 0;
    double epsilon = 0.1;
    std::optional<std::uint32_t> depth_cap;   // default 16*log2(n) + 64
    std::optional<std::uint64_t> output_len;  // m, default depth_cap
    std::optional<std::uint64_t> input_len;   // L, default via default_budget
    std::uint64_t seed = kDefaultSeed;
    std::string out_path;  // optional CSV destination
};

/// Parses the JSON config format (see README); the PFA itself is loaded
/// separately from config.pfa_path.
ExperimentConfig load_experiment_config(const std::string& path);

struct TrialHeight {
    std::uint32_t height;
    bool saturated;
};

struct HeightStats {
    std::uint64_t n = 0;
    std::uint32_t trials = 0;
    std::uint32_t depth_cap = 0;
    std::vector<TrialHeight> per_trial;

    // aggregates over non-saturated trials
    std::uint32_t valid_trials = 0;
    double mean = 0.0;
    double stddev = 0.0;
    std::uint32_t min = 0;
    std::uint32_t max = 0;
    std::uint32_t saturation_count = 0;
    bool mean_unreliable = false;  // saturation above 5%

    AnalysisReport analysis{};
};

/// Runs `trials` independent rounds: perturb all n family strings (fresh
/// derived seeds per trial and per string), build the trie, record height or
/// saturation. Trials run in parallel; aggregation is an ordered reduction by
/// trial index, so parallelism cannot change the output. Analytic bounds are
/// attached when their hypotheses hold; an Unbounded verdict still runs and
/// is stamped on the stats.
HeightStats run_height_experiment(const StarLikePfa& pfa, const ExperimentConfig& cfg);

/// One HeightStats row per n value; row i uses the derived seed
/// derive_stream(cfg.seed, i).
std::vector<HeightStats> sweep_n(const StarLikePfa& pfa, const ExperimentConfig& cfg,
                                 const std::vector<std::uint64_t>& n_values);

/// CSV schema (fixed order, floats at 12 significant digits):
/// n,mean_height,max_height,stddev,saturated,gamma,upper_bound,P,lower_bound,delta,verdict
void write_height_csv(std::ostream& out, const std::vector<HeightStats>& rows);

}  // namespace triesmooth
