#pragma once

#include "triesmooth/pfa.hpp"

namespace triesmooth {

/// Substitution channel over a binary alphabet: each input symbol is replaced
/// by its opposite with probability p, kept otherwise. Exactly one output
/// symbol per input symbol.
Pfa make_sub(double p, const Alphabet& alphabet = Alphabet::binary());

/// Insertion channel: before each input symbol, a geometrically distributed
/// number of random symbols is inserted. While in the per-symbol output
/// state, with probability p a random symbol is written (0 with probability
/// q, 1 otherwise) and the state loops; with probability 1-p the input symbol
/// itself is written and the state returns.
Pfa make_ins(double p, double q, const Alphabet& alphabet = Alphabet::binary());

/// Deletion channel: each input symbol is consumed silently with probability
/// p, copied through otherwise.
Pfa make_del(double p, const Alphabet& alphabet = Alphabet::binary());

/// Convex combination of the three edit channels with weights (v_sub, v_ins,
/// v_del) summing to one. Per input symbol an operation class is chosen with
/// these weights and its semantics applied. Zero-weight components are left
/// out of the table; a degenerate weight vector yields exactly the pure
/// constructor's table.
Pfa make_convex(double v_sub, double v_ins, double v_del, double p_sub, double p_ins,
                double q_ins, double p_del, const Alphabet& alphabet = Alphabet::binary());

}  // namespace triesmooth
