#pragma once

#include "prism/lattice.hpp"

namespace prism {

// A changemaker vector is a nondecreasing tuple of nonnegative integers in
// which every 0 <= k <= sum(sigma) is a subset sum. Equivalent prefix
// criterion: sigma_0 <= 1 and sigma_i <= 1 + sigma_0 + ... + sigma_{i-1}.
using Sigma = std::vector<Int>;

// Rejects unsorted or negative input (callers must not rely on auto-sorting).
bool is_changemaker(const Sigma& sigma);

// All changemakers of the given length with sigma_0 = 1 and |sigma|^2 <=
// norm_bound, in lexicographic order.
std::vector<Sigma> enumerate_changemakers(int length, const Int& norm_bound);

enum class BasisKind { tight, just_right, gappy };

struct StandardBasis {
  // vectors[j] is v_{j+1} in ambient Z^{n+2} coordinates (v_1..v_{n+1});
  // each is orthogonal to sigma.
  std::vector<Vec> vectors;
  std::vector<BasisKind> kinds;
  std::vector<std::vector<int>> gappy_indices;  // per vector
};

// The distinguished basis of the orthogonal complement of sigma:
//   v_j = 2e_0 + e_1 + ... + e_{j-1} - e_j          when sigma_j hits the
//                                                    prefix bound (tight)
//   v_j = sum_{i in A} e_i - e_j                     otherwise, with
//     A subset of {0..j-1}, sum_{i in A} sigma_i = sigma_j, A maximizing
//     sum_{i in A} 2^i; gappy when some i in A has i < j-1 and i+1 not in A.
StandardBasis standard_basis(const Sigma& sigma);

// Gram matrix of the standard basis; rank = len(sigma)-1, det = |sigma|^2.
GramLattice complement_gram(const Sigma& sigma);

std::vector<int> supp(const Vec& v);

Int sigma_norm(const Sigma& sigma);

}  // namespace prism
