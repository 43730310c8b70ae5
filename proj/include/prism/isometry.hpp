#pragma once

#include <optional>

#include "prism/lattice.hpp"

namespace prism {

// Witness of a lattice isometry L1 -> L2: column j holds the L2-coordinates
// of the image of L1's j-th basis vector, so M^T * G2 * M = G1, det M = +-1.
struct Isometry {
  Mat matrix;
};

bool verify_isometry(const GramLattice& L1, const GramLattice& L2,
                     const Isometry& iso);

// Decision with witness: quick rejections (rank, determinant, counts of
// vectors per norm up to the larger diagonal), then backtracking assignment
// of L1's basis vectors (most-constrained first) to equal-norm vectors of L2
// with matching partial pairings. Exhaustive, hence definitive negatives.
std::optional<Isometry> are_isometric(const GramLattice& L1,
                                      const GramLattice& L2);

}  // namespace prism
