#include "prism/isometry.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace prism {

bool verify_isometry(const GramLattice& L1, const GramLattice& L2,
                     const Isometry& iso) {
  const int n = L1.rank();
  if (L2.rank() != n) return false;
  const Mat& M = iso.matrix;
  if ((int)M.size() != n) return false;
  for (const auto& row : M)
    if ((int)row.size() != n) return false;
  Mat G2M = mat_mul(L2.gram(), M);
  Mat MtG2M = mat_mul(mat_transpose(M), G2M);
  return MtG2M == L1.gram();
}

namespace {

// Count of vectors per norm value, up to `bound` (vectors come in +-pairs;
// both are counted, which is fine for comparison purposes).
std::map<Int, long> norm_histogram(const GramLattice& L, const Int& bound) {
  std::map<Int, long> h;
  for (const auto& [v, nv] : L.short_vectors(bound)) ++h[nv];
  return h;
}

}  // namespace

std::optional<Isometry> are_isometric(const GramLattice& L1,
                                      const GramLattice& L2) {
  const int n = L1.rank();
  if (L2.rank() != n) return std::nullopt;
  if (L1.det() != L2.det()) return std::nullopt;

  Int maxdiag = 0;
  for (int i = 0; i < n; ++i) maxdiag = std::max(maxdiag, L1.gram()[i][i]);
  for (int i = 0; i < n; ++i) maxdiag = std::max(maxdiag, L2.gram()[i][i]);

  // Cheap fingerprint first: vector counts for small norms, then the full
  // range needed for candidate generation.
  Int small = std::min(Int(6), maxdiag);
  if (norm_histogram(L1, small) != norm_histogram(L2, small))
    return std::nullopt;
  if (norm_histogram(L1, maxdiag) != norm_histogram(L2, maxdiag))
    return std::nullopt;

  // Candidates in L2 for each basis vector of L1, keyed by norm.
  std::map<Int, std::vector<const Vec*>> by_norm;
  for (const auto& [v, nv] : L2.short_vectors(maxdiag))
    by_norm[nv].push_back(&v);

  std::vector<const std::vector<const Vec*>*> cands(n);
  for (int i = 0; i < n; ++i) {
    auto it = by_norm.find(L1.gram()[i][i]);
    if (it == by_norm.end()) return std::nullopt;
    cands[i] = &it->second;
  }

  // Assign most-constrained basis vectors first.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return cands[a]->size() < cands[b]->size();
  });

  std::vector<const Vec*> chosen(n, nullptr);

  auto backtrack = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    int i = order[depth];
    for (const Vec* v : *cands[i]) {
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        int j = order[d];
        if (L2.pairing(*v, *chosen[j]) != L1.gram()[i][j]) ok = false;
      }
      if (!ok) continue;
      chosen[i] = v;
      if (self(self, depth + 1)) return true;
      chosen[i] = nullptr;
    }
    return false;
  };

  if (!backtrack(backtrack, 0)) return std::nullopt;

  Isometry iso;
  iso.matrix.assign(n, Vec(n, 0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) iso.matrix[i][j] = (*chosen[j])[i];
  check(verify_isometry(L1, L2, iso), "isometry witness failed verification");
  return iso;
}

}  // namespace prism
