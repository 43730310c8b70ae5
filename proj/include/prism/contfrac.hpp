#pragma once

#include "prism/core.hpp"

namespace prism {

// Minus (Hirzebruch-Jung) continued fractions:
//   [a_1,...,a_n]^- = a_1 - 1/(a_2 - 1/(... - 1/a_n))
// and plus continued fractions:
//   [b_1,...,b_m]^+ = b_1 + 1/(b_2 + 1/(... + 1/b_m)).
using NegCF = std::vector<Int>;
using PosCF = std::vector<Int>;

// Unique expansion with every coefficient >= 2. Requires x > 1.
NegCF neg_expand(const Rat& x);
Rat neg_eval(const NegCF& cf);

// Expansion with b_1 >= 0 and b_i > 0 for i > 1. Requires x > 0.
PosCF pos_expand(const Rat& x);
Rat pos_eval(const PosCF& cf);

// Rewriting identities for minus fractions (value-preserving):
//   [..., r, 2^[s], t, ...]^-  =  [..., r-1, -(s+1), t-1, ...]^-
//   [..., s, 2^[t]]^-          =  [..., s-1, -(t+1)]^-
// `position` is the 0-based index of the coefficient r preceding the run;
// `run_length` is the number of consecutive 2's.
NegCF hj_rewrite_interior(const NegCF& cf, size_t position, size_t run_length);
NegCF hj_rewrite_tail(const NegCF& cf, size_t run_length);

// Montesinos band conversion: given the plus expansion b of p/(q-p) for
// coprime q > p > 1, produce the minus expansion of p/(q-p) + 2 = (2q-p)/(q-p).
// Odd-position bands map to b_i + 2 (+1 at the front, -1 at an odd-length
// tail); even-position bands map to runs 2^[b_i - 1]; empty runs are dropped.
NegCF montesinos_coeffs(const PosCF& b);

}  // namespace prism
