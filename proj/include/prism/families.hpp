#pragma once

#include <string>

#include "prism/changemaker.hpp"
#include "prism/ctype.hpp"

namespace prism {

// A membership certificate: (p, q) satisfies the closed-form criterion of
// the named family, with parameter r when the family has one.
struct FamilyRecord {
  std::string family;  // "1A", "1B", "2", "3A", "3B", "4", "5", "SP"
  bool has_r = false;
  Int r = 0;
};

// All families containing P(p, q). Requires p odd, 1 < p < q, gcd(p,q) = 1.
// Families with a free parameter are scanned over the full range allowed by
// their defining identity (the scan bound is derived from the identity, not
// heuristic). `widen` enlarges every scan bound, for cross-checking that the
// bounds lose nothing.
std::vector<FamilyRecord> classify(const Int& p, const Int& q, long widen = 0);

// A fully expanded certified-row instance: a changemaker sigma together with
// a vertex basis (x_0 first, then x_1..x_n, in ambient coordinates of
// Z^len(sigma)) of its orthogonal complement realizing the chain lattice
// C(p, q), and the family the pair belongs to.
struct RowInstance {
  std::string row_id;
  Sigma sigma;
  std::vector<Vec> vertex_basis;  // x_0, x_1, ..., x_n
  std::vector<Int> vertex_norms;  // norms of x_1..x_n (x_0 has norm 4)
  Int p, q;
  std::string family;
};

struct RowMeta {
  std::string id;
  std::string family;
  bool uses_s, uses_t;
  long s_min, t_min;
};

// The 22 certified parametric rows.
const std::vector<RowMeta>& certified_rows();

RowInstance make_row(const std::string& id, long s = 0, long t = 0);

// Empty string on success, otherwise the first failed condition:
// changemaker validity, |sigma|^2 = 4q, vertex basis orthogonal to sigma and
// Gram-identical to C(p,q), norm sequence match, family membership.
std::string verify_row(const RowInstance& row);

struct CensusRecord {
  Sigma sigma;
  Int norm;          // |sigma|^2
  bool is_ctype;     // complement isometric to some C(p, q)
  Int p, q;          // set when is_ctype
  std::vector<Int> vertex_norms;  // (4, a_1..a_n) when is_ctype
  std::vector<FamilyRecord> families;
};

// Every changemaker of length 1..max_len with |sigma|^2 <= norm_bound,
// decided: complements recognized via structural recovery, positives
// confirmed with an isometry witness, and the remaining candidates settled
// by exhausting the (finitely many) possible C(p, q) of matching rank and
// determinant.
std::vector<CensusRecord> exhaustive_search(int max_len, const Int& norm_bound);

}  // namespace prism
