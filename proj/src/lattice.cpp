#include "prism/lattice.hpp"

#include <algorithm>

namespace prism {

Int det_bareiss(Mat m) {
  size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  Mat r(n, Vec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

Mat mat_transpose(const Mat& a) {
  size_t n = a.size(), m = a[0].size();
  Mat r(m, Vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) r[j][i] = a[i][j];
  return r;
}

Mat mat_identity(size_t n) {
  Mat r(n, Vec(n, 0));
  for (size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

Mat row_span_basis(Mat rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const Vec& v) { return is_zero(v); }),
             rows.end());
  if (rows.empty()) return {};
  size_t cols = rows[0].size();
  Mat out;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    // gather rows (from r on) with nonzero entry in column c and reduce
    // them against each other until one pivot remains
    while (true) {
      size_t best = rows.size();
      for (size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() ||
            abs(rows[i][c]) < abs(rows[best][c]))
          best = i;
      }
      if (best == rows.size()) break;  // column already clear
      std::swap(rows[r], rows[best]);
      bool others = false;
      for (size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Int f = floor_div(rows[i][c], rows[r][c]);
        for (size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        if (rows[i][c] != 0) others = true;
      }
      if (!others) {
        ++r;
        break;
      }
    }
  }
  for (size_t i = 0; i < r; ++i) out.push_back(rows[i]);
  return out;
}

bool in_row_span(const Mat& echelon, Vec v) {
  for (const Vec& row : echelon) {
    size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    if (v[c] % row[c] != 0) {
      return false;
    }
    Int f = v[c] / row[c];
    for (size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
  }
  return is_zero(v);
}

Mat unimodular_inverse(const Mat& m) {
  size_t n = m.size();
  // Gauss-Jordan over the rationals, then check integrality.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    a[i][n + i] = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv >= n) throw domain_error("unimodular_inverse: singular matrix");
    std::swap(a[c], a[piv]);
    Rat d = a[c][c];
    for (size_t j = 0; j < 2 * n; ++j) a[c][j] /= d;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  Mat inv(n, Vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (rat_den(a[i][n + j]) != 1)
        throw domain_error("unimodular_inverse: non-integer inverse");
      inv[i][j] = rat_num(a[i][n + j]);
    }
  return inv;
}

// ---------------------------------------------------------------------------

GramLattice::GramLattice(Mat gram) : gram_(std::move(gram)) {
  rank_ = static_cast<int>(gram_.size());
  require(rank_ >= 1, "GramLattice: empty Gram matrix");
  for (int i = 0; i < rank_; ++i) {
    require(static_cast<int>(gram_[i].size()) == rank_,
            "GramLattice: Gram matrix not square");
    for (int j = 0; j < i; ++j)
      require(gram_[i][j] == gram_[j][i], "GramLattice: Gram not symmetric");
  }
  // positive definiteness: all leading principal minors > 0
  for (int k = 1; k <= rank_; ++k) {
    Mat lead(k, Vec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead[i][j] = gram_[i][j];
    require(det_bareiss(lead) > 0, "GramLattice: Gram not positive definite");
  }
  Mat full = gram_;
  det_ = det_bareiss(full);
}

Int GramLattice::pairing(const Vec& v, const Vec& w) const {
  require(static_cast<int>(v.size()) == rank_ &&
              static_cast<int>(w.size()) == rank_,
          "pairing: dimension mismatch");
  Int acc = 0;
  for (int i = 0; i < rank_; ++i) {
    if (v[i] == 0) continue;
    Int row = 0;
    for (int j = 0; j < rank_; ++j) row += gram_[i][j] * w[j];
    acc += v[i] * row;
  }
  return acc;
}

void GramLattice::enumerate(const Int& bound) const {
  if (cached_bound_ >= bound) return;
  int n = rank_;
  // quadratic-form completion: Q(x) = sum_i q[i] * (x_i + sum_{j>i} u[i][j] x_j)^2
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(gram_[i][j]);
  std::vector<Rat> q(n);
  std::vector<std::vector<Rat>> u(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    q[i] = a[i][i];
    check(q[i] > 0, "enumerate: non-positive pivot");
    for (int j = i + 1; j < n; ++j) u[i][j] = a[i][j] / q[i];
    for (int k = i + 1; k < n; ++k)
      for (int l = k; l < n; ++l) {
        a[k][l] -= a[i][k] * a[i][l] / q[i];
        a[l][k] = a[k][l];
      }
  }
  std::vector<std::pair<Vec, Int>> found;
  Vec x(n, 0);
  Rat limit(bound);
  // choose coordinates from the last index down; at each level the allowed
  // range is an interval around the completion centre, scanned outward
  auto rec = [&](auto&& self, int i, const Rat& budget) -> void {
    if (i < 0) {
      if (!is_zero(x)) {
        Vec v = x;
        Int nv = norm(v);
        if (nv >= 1 && nv <= bound) found.emplace_back(std::move(v), nv);
      }
      return;
    }
    Rat c(0);
    for (int j = i + 1; j < n; ++j)
      if (x[j] != 0) c += u[i][j] * Rat(x[j]);
    Int start = rat_floor(-c);
    for (Int xi = start;; --xi) {
      Rat term = q[i] * (Rat(xi) + c) * (Rat(xi) + c);
      if (term > budget) break;
      x[i] = xi;
      self(self, i - 1, budget - term);
    }
    for (Int xi = start + 1;; ++xi) {
      Rat term = q[i] * (Rat(xi) + c) * (Rat(xi) + c);
      if (term > budget) break;
      x[i] = xi;
      self(self, i - 1, budget - term);
    }
    x[i] = 0;
  };
  if (bound >= 1) rec(rec, n - 1, limit);
  std::sort(found.begin(), found.end(), [](const auto& l, const auto& r) {
    if (l.second != r.second) return l.second < r.second;
    return lex_less(l.first, r.first);
  });
  cache_ = std::move(found);
  cached_bound_ = bound;
  views_.clear();
}

const std::vector<std::pair<Vec, Int>>& GramLattice::short_vectors(
    const Int& bound) const {
  Int b = bound < 0 ? Int(0) : bound;
  enumerate(b);
  if (b == cached_bound_) return cache_;
  auto it = views_.find(b);
  if (it != views_.end()) return it->second;
  std::vector<std::pair<Vec, Int>> view;
  for (const auto& pr : cache_)
    if (pr.second <= b) view.push_back(pr);
  return views_.emplace(b, std::move(view)).first->second;
}

std::vector<Vec> GramLattice::vectors_of_norm_at_most(const Int& bound) const {
  std::vector<Vec> out;
  if (bound < 1) return out;
  for (const auto& pr : short_vectors(bound)) out.push_back(pr.first);
  return out;
}

bool GramLattice::is_irreducible(const Vec& v) const {
  Int nv = norm(v);
  require(nv > 0, "is_irreducible: zero vector");
  if (nv == 1) return true;
  // v = x + y with <x,y> >= 0 and y != 0 forces |x| <= |v| - 1; precompute
  // G*v so each candidate costs one sparse dot product, scanning small norms
  // first so reducible vectors are dispatched quickly
  Vec gv(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (v[j] != 0) gv[i] += gram_[i][j] * v[j];
  for (const auto& [x, nx] : short_vectors(nv - 1)) {
    Int dot = 0;
    for (int i = 0; i < rank_; ++i)
      if (x[i] != 0) dot += x[i] * gv[i];
    if (dot >= nx) return false;  // <x, v - x> >= 0
  }
  return true;
}

bool GramLattice::is_breakable(const Vec& v) const {
  Int nv = norm(v);
  require(nv > 0, "is_breakable: zero vector");
  if (nv < 4) return false;  // |x| + |y| = |v| + 2 with both >= 3
  Vec gv(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (v[j] != 0) gv[i] += gram_[i][j] * v[j];
  // <x, v - x> = -1 makes |v - x| = |v| - |x| + 2, so |x| <= |v| - 1 is
  // exactly the condition |v - x| >= 3
  for (const auto& [x, nx] : short_vectors(nv - 1)) {
    if (nx < 3) continue;
    Int dot = 0;
    for (int i = 0; i < rank_; ++i)
      if (x[i] != 0) dot += x[i] * gv[i];
    if (dot == nx - 1) return true;
  }
  return false;
}

}  // namespace prism
