#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "triesmooth/alphabet.hpp"

namespace triesmooth {

/// Absolute tolerance for probability-row normalization checks. Inputs are
/// human-authored decimals; tighter would reject legitimate tables.
inline constexpr double kProbTol = 1e-12;

/*
 * Mealy-type PFA with disjoint input (reading) and output (writing) states.
 * In an input state the automaton consumes one symbol and moves on; in an
 * output state it emits one symbol per transition. Rows are stored densely
 * over the global state list, input states first.
 *
 * Normalization: each (input state, symbol) read row sums to one over all
 * targets; each output state's write mass sums to one over all
 * (symbol, target) pairs; the initial distribution sums to one.
 */
class Pfa {
public:
    Pfa(Alphabet alphabet, std::vector<std::string> input_states,
        std::vector<std::string> output_states);

    std::uint32_t input_count() const { return static_cast<std::uint32_t>(input_names_.size()); }
    std::uint32_t output_count() const { return static_cast<std::uint32_t>(output_names_.size()); }
    std::uint32_t state_count() const { return input_count() + output_count(); }
    std::uint32_t r() const { return alphabet_.size(); }

    /// Global index of input state i / output state q.
    std::uint32_t input_global(std::uint32_t i) const { return i; }
    std::uint32_t output_global(std::uint32_t q) const { return input_count() + q; }

    double read_prob(std::uint32_t input_state, Symbol a, std::uint32_t target_global) const;
    void set_read_prob(std::uint32_t input_state, Symbol a, std::uint32_t target_global,
                       double p);

    double write_prob(std::uint32_t output_state, Symbol b, std::uint32_t target_global) const;
    void set_write_prob(std::uint32_t output_state, Symbol b, std::uint32_t target_global,
                        double p);

    double initial_prob(std::uint32_t global) const { return initial_.at(global); }
    void set_initial_prob(std::uint32_t global, double p) { initial_.at(global) = p; }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& input_name(std::uint32_t i) const { return input_names_.at(i); }
    const std::string& output_name(std::uint32_t q) const { return output_names_.at(q); }
    const std::vector<std::string>& input_names() const { return input_names_; }
    const std::vector<std::string>& output_names() const { return output_names_; }

private:
    std::size_t read_index(std::uint32_t i, Symbol a, std::uint32_t target) const;
    std::size_t write_index(std::uint32_t q, Symbol b, std::uint32_t target) const;

    Alphabet alphabet_;
    std::vector<std::string> input_names_;
    std::vector<std::string> output_names_;
    std::vector<double> read_;     // input_count * r * state_count
    std::vector<double> write_;    // output_count * r * state_count
    std::vector<double> initial_;  // state_count
};

struct Violation {
    std::string location;  // e.g. "read row (s, 0)" or "initial"
    std::string detail;
};

std::string to_string(const Violation& v);

/// Stochasticity check. Reports every row whose mass deviates from one by
/// more than kProbTol, every negative entry, and initial-distribution errors.
/// Bad probabilities are reported, never thrown.
std::vector<Violation> validate(const Pfa& pfa);

struct Classification {
    bool is_star_like = false;
    bool is_canonical = false;              // initial mass concentrated on the input state
    bool is_read_semi_deterministic = false;
    bool is_read_deterministic = false;
    bool has_certain_deletion = false;      // some symbol is consumed silently with probability 1
};

/// Structural classification; expects a Pfa that passed validate.
Classification classify(const Pfa& pfa);

/*
 * Star-like PFA in canonical form, reduced to its derived tables:
 *
 *   deletion_prob(a)        chance symbol a is consumed with no output
 *   read_prob(a, q)         chance reading a enters output state q
 *   loop_write_prob(q, b)   q writes b and stays at q
 *   return_write_prob(q, b) q writes b and returns to the input state
 *   return_prob(q)          total write-and-return mass of q; positive for
 *                           every output state (no state loops forever)
 *
 * Per symbol, deletion_prob(a) + sum_q read_prob(a, q) = 1; per output state,
 * sum_b (loop + return) = 1. Immutable and freely shareable across threads.
 */
class StarLikePfa {
public:
    std::uint32_t r() const { return alphabet_.size(); }
    std::uint32_t output_count() const { return v_; }

    double deletion_prob(Symbol a) const { return rho_[a]; }
    double read_prob(Symbol a, std::uint32_t q) const { return read_[a * v_ + q]; }
    double loop_write_prob(std::uint32_t q, Symbol b) const { return loop_[q * r() + b]; }
    double return_write_prob(std::uint32_t q, Symbol b) const { return ret_[q * r() + b]; }
    double return_prob(std::uint32_t q) const { return eta_[q]; }

    double max_deletion_prob() const;

    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& input_name() const { return input_name_; }
    const std::string& output_name(std::uint32_t q) const { return output_names_.at(q); }

    /// Sampling support, precomputed at construction. Read events: index 0 is
    /// deletion, index 1+q enters state q. Write events: (symbol, return?).
    std::uint32_t sample_read_event(Symbol a, double u) const;
    struct WriteEvent {
        Symbol symbol;
        bool returns;
    };
    WriteEvent sample_write_event(std::uint32_t q, double u) const;

private:
    friend StarLikePfa to_star_like(const Pfa& pfa);

    StarLikePfa() : alphabet_(Alphabet::binary()) {}
    void build_sampling_tables();

    Alphabet alphabet_;
    std::string input_name_;
    std::vector<std::string> output_names_;
    std::uint32_t v_ = 0;
    std::vector<double> rho_;   // r
    std::vector<double> read_;  // r * v
    std::vector<double> loop_;  // v * r
    std::vector<double> ret_;   // v * r
    std::vector<double> eta_;   // v
    std::vector<double> read_cum_;   // r * (v + 1)
    std::vector<double> write_cum_;  // v * 2r, loop events then return events
};

/// Reduces a validated star-like canonical Pfa to its derived tables; all
/// derived rows are re-checked. Throws ConversionError naming the violated
/// property otherwise.
StarLikePfa to_star_like(const Pfa& pfa);

}  // namespace triesmooth
