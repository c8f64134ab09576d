#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "triesmooth/string_spec.hpp"

namespace triesmooth {

/*
 * Adversarial input families: deterministic constructions of n pairwise
 * distinct infinite strings that act as near-worst-case probes.
 *
 * CommonPrefix builds s_i = w^K . digits(i) . w^infinity, all strings
 * indistinguishable within the first K*|w| symbols. Periodic is an explicit
 * list of specs (Explicit at the CLI level is the same list read from file).
 */
struct FamilySpec {
    enum class Kind { CommonPrefix, Periodic };

    Kind kind = Kind::CommonPrefix;

    // CommonPrefix parameters
    std::vector<Symbol> block;           // w, nonempty
    std::uint64_t repetitions = 0;       // K
    std::optional<std::uint32_t> tail_width;  // digits per tail; default ceil(log_r n)
    std::uint32_t alphabet_size = 2;

    // Periodic parameters
    std::vector<StringSpec> strings;
};

/// Deterministic list of n distinct strings. Throws std::invalid_argument if
/// the family cannot yield n distinct strings (tail too narrow, list too
/// short, or duplicate entries in a Periodic list).
std::vector<StringSpec> generate_family(const FamilySpec& family, std::uint64_t n);

}  // namespace triesmooth
