#pragma once

#include "prism/changemaker.hpp"

namespace prism {

// Torsion coefficients t_0..t_{2q} attached to a changemaker sigma with
// |sigma|^2 = 4q: t_i is the minimum of (|c|^2 - len(sigma)) / 8 over
// all-odd integer vectors c with <c, sigma> + 4q = 2i (mod 8q).
struct TorsionSequence {
  Int q;
  std::vector<Int> t;  // indices 0..2q
  // Largest per-coordinate box edge at which the minima provably stabilized
  // (0 when the sequence was not produced by the minimization).
  Int stabilization_bound = 0;
};

// Exact evaluation: per-coordinate boxes starting at max(3, 2 sigma_i + 1),
// enlarged by 2 until every residue class is hit and any vector outside the
// box provably exceeds every current minimum. The two coordinate halves are
// enumerated separately and combined through per-residue minima.
TorsionSequence torsion_coefficients(const Sigma& sigma);

// Symmetric Laurent polynomial b_0 + sum_{i>=1} b_i (T^i + T^-i) recovered
// from second differences b_i = t_{i-1} - 2 t_i + t_{i+1}; b_0 is fixed by
// the normalization value 1 at T = 1.
struct AlexanderPolynomial {
  std::vector<Int> b;  // b[i] is the coefficient of T^i + T^-i (b[0] once)
};

AlexanderPolynomial alexander_polynomial(const TorsionSequence& ts);

// Inverse transform t_k = sum_{j>=1} j * b_{k+j}.
TorsionSequence torsion_from_polynomial(const AlexanderPolynomial& a,
                                        const Int& q);

// Diagnostic shape test: every coefficient in {-1, 0, 1}.
bool coefficients_in_unit_range(const AlexanderPolynomial& a);

}  // namespace prism
