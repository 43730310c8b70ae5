#pragma once

#include <map>
#include <optional>

#include "prism/core.hpp"

namespace prism {

// --- integer matrix helpers -------------------------------------------------

Int det_bareiss(Mat m);  // exact determinant, fraction-free elimination
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& a);
Mat mat_identity(size_t n);

// Row-echelon basis of the integer row span (Hermite-style elimination).
// The returned rows form a lattice basis of the span of the input rows.
Mat row_span_basis(Mat rows);
// Membership of v in the integer span of an echelon basis from row_span_basis.
bool in_row_span(const Mat& echelon, Vec v);

// Inverse of an integer matrix with determinant +-1.
Mat unimodular_inverse(const Mat& m);

// --- positive-definite lattices ---------------------------------------------

// A lattice presented by the Gram matrix of a basis. Entries are exact
// integers; the matrix must be symmetric positive definite. Practical rank
// bound: enumeration is intended for rank <= ~16 and the small norm bounds
// arising from chain-shaped forms.
class GramLattice {
 public:
  explicit GramLattice(Mat gram);

  int rank() const { return rank_; }
  const Mat& gram() const { return gram_; }
  Int det() const { return det_; }

  Int pairing(const Vec& v, const Vec& w) const;
  Int norm(const Vec& v) const { return pairing(v, v); }

  // All v with 0 < |v| <= bound (both signs), lexicographically sorted.
  // Exhaustive depth-first enumeration with exact rational Cholesky bounds.
  std::vector<Vec> vectors_of_norm_at_most(const Int& bound) const;
  // Same set with norms attached (shared cache; sorted lexicographically).
  const std::vector<std::pair<Vec, Int>>& short_vectors(const Int& bound) const;

  // v is reducible when v = x + y with x,y nonzero and <x,y> >= 0; the
  // search is finite because such a splitting forces |x|,|y| <= |v|.
  bool is_irreducible(const Vec& v) const;
  // v = x + y with |x|,|y| >= 3 and <x,y> = -1 (so |x| + |y| = |v| + 2).
  bool is_breakable(const Vec& v) const;

 private:
  void enumerate(const Int& bound) const;

  int rank_;
  Mat gram_;
  Int det_;
  mutable Int cached_bound_{-1};
  mutable std::vector<std::pair<Vec, Int>> cache_;       // full cached list
  mutable std::map<Int, std::vector<std::pair<Vec, Int>>> views_;
};

}  // namespace prism
