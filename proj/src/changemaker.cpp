#include "prism/changemaker.hpp"

#include <algorithm>

namespace prism {

Int sigma_norm(const Sigma& sigma) {
  Int s = 0;
  for (const Int& x : sigma) s += x * x;
  return s;
}

bool is_changemaker(const Sigma& sigma) {
  require(!sigma.empty(), "is_changemaker: empty tuple");
  for (size_t i = 0; i < sigma.size(); ++i) {
    require(sigma[i] >= 0, "is_changemaker: negative entry");
    if (i > 0) require(sigma[i] >= sigma[i - 1], "is_changemaker: not sorted");
  }
  Int prefix = 0;
  for (const Int& s : sigma) {
    if (s > prefix + 1) return false;
    prefix += s;
  }
  return true;
}

std::vector<Sigma> enumerate_changemakers(int length, const Int& norm_bound) {
  require(length >= 1, "enumerate_changemakers: length must be >= 1");
  std::vector<Sigma> out;
  Sigma cur;
  auto rec = [&](auto&& self, Int prefix, Int norm) -> void {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    Int lo = cur.empty() ? Int(1) : cur.back();
    for (Int v = lo; v <= prefix + 1; ++v) {
      Int nn = norm + v * v;
      if (nn > norm_bound) break;
      cur.push_back(v);
      self(self, prefix + v, nn);
      cur.pop_back();
    }
  };
  if (norm_bound >= 1) {
    cur.push_back(1);
    rec(rec, 1, 1);
  }
  return out;
}

StandardBasis standard_basis(const Sigma& sigma) {
  require(is_changemaker(sigma), "standard_basis: not a changemaker");
  require(sigma[0] == 1, "standard_basis: sigma_0 must be 1");
  size_t len = sigma.size();
  StandardBasis sb;
  Int prefix = sigma[0];
  for (size_t j = 1; j < len; ++j) {
    Vec v(len, 0);
    if (sigma[j] == prefix + 1) {
      v[0] = 2;
      for (size_t i = 1; i < j; ++i) v[i] = 1;
      v[j] = -1;
      sb.vectors.push_back(v);
      sb.kinds.push_back(BasisKind::tight);
      sb.gappy_indices.push_back({});
    } else {
      // greedy from the top index maximizes sum 2^i over valid subsets
      Int target = sigma[j];
      std::vector<int> a;
      for (size_t i = j; i-- > 0;) {
        if (sigma[i] <= target) {
          a.push_back(static_cast<int>(i));
          target -= sigma[i];
        }
      }
      check(target == 0, "standard_basis: greedy subset selection failed");
      for (int i : a) v[i] = 1;
      v[j] = -1;
      std::vector<int> gaps;
      for (int i : a)
        if (i < static_cast<int>(j) - 1 && v[i + 1] != 1) gaps.push_back(i);
      std::sort(gaps.begin(), gaps.end());
      sb.vectors.push_back(v);
      sb.kinds.push_back(gaps.empty() ? BasisKind::just_right
                                      : BasisKind::gappy);
      sb.gappy_indices.push_back(gaps);
    }
    prefix += sigma[j];
  }
  // orthogonality sanity check
  for (const Vec& v : sb.vectors) {
    Int dot = 0;
    for (size_t i = 0; i < len; ++i) dot += v[i] * sigma[i];
    check(dot == 0, "standard_basis: vector not orthogonal to sigma");
  }
  return sb;
}

GramLattice complement_gram(const Sigma& sigma) {
  StandardBasis sb = standard_basis(sigma);
  size_t n = sb.vectors.size();
  Mat g(n, Vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Int dot = 0;
      for (size_t k = 0; k < sigma.size(); ++k)
        dot += sb.vectors[i][k] * sb.vectors[j][k];
      g[i][j] = dot;
    }
  return GramLattice(std::move(g));
}

std::vector<int> supp(const Vec& v) {
  std::vector<int> s;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

}  // namespace prism
