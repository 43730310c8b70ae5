#pragma once

#include <array>
#include <optional>

#include "prism/contfrac.hpp"
#include "prism/lattice.hpp"

namespace prism {

// The chain lattice C(p,q) for coprime q > p > 1: vertex basis x_0..x_n with
// |x_0| = 4, |x_i| = a_i, <x_0,x_1> = -2, <x_i,x_{i+1}> = -1 (i > 0), all
// other pairings zero, where (a_1..a_n) is the minus expansion of
// (2q-p)/(q-p).
struct CTypeLattice {
  Int p, q;
  std::vector<Int> norms;        // (4, a_1, ..., a_n)
  std::vector<bool> high_weight;  // per vertex: i > 0 and |x_i| > 2
  GramLattice gram;
};

CTypeLattice build_ctype(const Int& p, const Int& q);

// A signed vertex interval: sign * (x_left + ... + x_right).
struct Interval {
  int left;
  int right;
  int sign;  // +1 or -1
};

Vec interval_vector(const CTypeLattice& L, const Interval& I);
// Closed form: |[{x_0}]| = 4; otherwise 2 + sum over contained x_i, i > 0,
// of (|x_i| - 2). Checked against the Gram quadratic form.
Int interval_norm(const CTypeLattice& L, const Interval& I);

// Dangling-edge count on the chain multigraph (doubled edge x_0--x_1): edges
// with one end in I, the other in J, at least one end outside the
// intersection. Satisfies <[I],[J]> = |[I cap J]| - delta (checked).
int delta(const CTypeLattice& L, const Interval& I, const Interval& J);

// Irreducible vectors with norm <= bound; checked against the interval
// characterization (every irreducible vector is a signed interval).
std::vector<Vec> irreducible_elements(const CTypeLattice& L, const Int& bound);

struct GraphDiagnostics {
  std::vector<Interval> intervals;            // interval form of each input
  std::vector<std::vector<bool>> pairing_adj;      // nonzero pairing
  std::vector<std::vector<bool>> intersection_adj; // intervals abut
  std::vector<std::array<int, 4>> claws;           // (centre, w1, w2, w3)
  std::vector<std::array<int, 3>> heavy_triples;
};

// Every element of T must be irreducible (vertex-basis coordinates).
GraphDiagnostics graph_diagnostics(const CTypeLattice& L,
                                   const std::vector<Vec>& T);

// Recovers the unique (p,q) with L isometric to C(p,q), if any, by
// reconstructing the ordered norm sequence: locate x_0 (unique unbreakable
// irreducible norm-4 vector with all pairings even), split off the sublattice
// R spanned by x_0 and the norm-2 vectors, classify the remaining unbreakable
// irreducibles of norm >= 3 modulo R, and read the norms off the adjacency
// path of classes and R-components starting at x_0's component. Any failed
// uniqueness or structure condition yields an empty result (not C-type).
// Note: rejection is not proven complete for arbitrary input; callers that
// need a definitive verdict confirm positives with the isometry module.
std::optional<std::pair<Int, Int>> recover_pq(const GramLattice& L);

}  // namespace prism
