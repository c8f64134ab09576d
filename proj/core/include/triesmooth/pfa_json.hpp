#pragma once

#include <string>

#include "triesmooth/pfa.hpp"
#include "triesmooth/string_spec.hpp"

namespace triesmooth {

/*
 * PFA file format (JSON):
 *
 *   {"alphabet": ["0", "1"],
 *    "input_states": ["s"],
 *    "output_states": ["q0", "q1"],
 *    "initial": {"s": 1.0},
 *    "read":  [{"from": "s",  "symbol": "0", "to": "q0", "p": 1.0}, ...],
 *    "write": [{"from": "q0", "symbol": "0", "to": "s",  "p": 0.7}, ...]}
 *
 * Absent transitions have probability zero. Structural problems (malformed
 * JSON, unknown state or symbol names, duplicate entries) throw
 * std::runtime_error naming the offending entry; stochasticity is checked
 * separately with validate().
 */

Pfa pfa_from_json(const std::string& text);
Pfa load_pfa_file(const std::string& path);

/// Loads, validates and throws with the full violation list unless clean.
Pfa load_valid_pfa(const std::string& path);

std::string pfa_to_json(const Pfa& pfa);

/// String spec textual form: {"prefix": "ab", "period": "c"}; period omitted
/// for finite strings. Characters are resolved against single-character
/// alphabet symbol names.
StringSpec string_spec_from_json(const std::string& text, const Alphabet& alphabet);
std::string string_spec_to_json(const StringSpec& spec, const Alphabet& alphabet);

}  // namespace triesmooth
