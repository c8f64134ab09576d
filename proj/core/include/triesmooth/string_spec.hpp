#pragma once

#include <cstdint>
#include <vector>

#include "triesmooth/alphabet.hpp"

namespace triesmooth {

/// A finite or eventually periodic infinite string over an alphabet of size r,
/// represented as prefix . period . period . ... (period absent for finite
/// strings). Immutable after construction.
class StringSpec {
public:
    static StringSpec finite(std::vector<Symbol> prefix, std::uint32_t alphabet_size);
    static StringSpec periodic(std::vector<Symbol> prefix, std::vector<Symbol> period,
                               std::uint32_t alphabet_size);

    bool is_infinite() const { return !period_.empty(); }

    /// Length of a finite string; throws for infinite ones.
    std::uint64_t finite_length() const;

    std::uint32_t alphabet_size() const { return alphabet_size_; }

    /// 1-based access to the represented string. Out-of-range positions of a
    /// finite string throw std::out_of_range.
    Symbol symbol_at(std::uint64_t i) const;

    /// True if position i (1-based) exists.
    bool has_position(std::uint64_t i) const {
        return is_infinite() || i <= prefix_.size();
    }

    /// The first min(count, length) symbols.
    std::vector<Symbol> materialize(std::uint64_t count) const;

    const std::vector<Symbol>& prefix() const { return prefix_; }
    const std::vector<Symbol>& period() const { return period_; }

private:
    StringSpec(std::vector<Symbol> prefix, std::vector<Symbol> period,
               std::uint32_t alphabet_size);

    std::vector<Symbol> prefix_;
    std::vector<Symbol> period_;
    std::uint32_t alphabet_size_;
};

struct LcpResult {
    std::uint64_t length;  // <= cap
    bool capped;           // the strings agree on all of the first `cap` symbols
    std::uint64_t cap;
};

/// Length of the longest common prefix of s and t, probed up to `cap`
/// positions. A capped result means no mismatch was found within the window;
/// it is never silently reported as a plain length.
LcpResult lcp(const StringSpec& s, const StringSpec& t, std::uint64_t cap);

}  // namespace triesmooth
