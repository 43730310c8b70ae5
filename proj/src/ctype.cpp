#include "prism/ctype.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace prism {

CTypeLattice build_ctype(const Int& p, const Int& q) {
  require(p > 1 && q > p, "build_ctype: need q > p > 1");
  require(gcd(p, q) == 1, "build_ctype: p, q must be coprime");
  NegCF a = neg_expand(Rat(2 * q - p, q - p));
  check(a[0] >= 3, "build_ctype: leading coefficient must be >= 3");
  size_t n = a.size();
  std::vector<Int> norms;
  norms.push_back(4);
  for (const Int& ai : a) norms.push_back(ai);
  Mat g(n + 1, Vec(n + 1, 0));
  for (size_t i = 0; i <= n; ++i) g[i][i] = norms[i];
  if (n >= 1) g[0][1] = g[1][0] = -2;
  for (size_t i = 1; i < n; ++i) g[i][i + 1] = g[i + 1][i] = -1;
  std::vector<bool> hw(n + 1, false);
  for (size_t i = 1; i <= n; ++i) hw[i] = norms[i] > 2;
  CTypeLattice L{p, q, std::move(norms), std::move(hw),
                 GramLattice(std::move(g))};
  check(L.gram.det() == 4 * q, "build_ctype: determinant is not 4q");
  return L;
}

Vec interval_vector(const CTypeLattice& L, const Interval& I) {
  int n = L.gram.rank();
  require(0 <= I.left && I.left <= I.right && I.right < n,
          "interval_vector: index out of range");
  require(I.sign == 1 || I.sign == -1, "interval_vector: sign must be +-1");
  Vec v(n, 0);
  for (int i = I.left; i <= I.right; ++i) v[i] = I.sign;
  return v;
}

Int interval_norm(const CTypeLattice& L, const Interval& I) {
  Int closed;
  if (I.left == 0 && I.right == 0) {
    closed = 4;
  } else {
    closed = 2;
    for (int i = std::max(I.left, 1); i <= I.right; ++i)
      closed += L.norms[i] - 2;
  }
  check(closed == L.gram.norm(interval_vector(L, I)),
        "interval_norm: closed form disagrees with Gram form");
  return closed;
}

int delta(const CTypeLattice& L, const Interval& I, const Interval& J) {
  int n = L.gram.rank();
  auto in = [](const Interval& K, int v) {
    return K.left <= v && v <= K.right;
  };
  // chain multigraph edges: (0,1) twice, (i,i+1) once for i >= 1
  int count = 0;
  auto consider = [&](int u, int w, int mult) {
    bool dangling = (in(I, u) && in(J, w) && (!(in(I, u) && in(J, u)) ||
                                              !(in(I, w) && in(J, w)))) ||
                    (in(I, w) && in(J, u) && (!(in(I, u) && in(J, u)) ||
                                              !(in(I, w) && in(J, w))));
    if (dangling) count += mult;
  };
  if (n >= 2) consider(0, 1, 2);
  for (int i = 1; i + 1 < n; ++i) consider(i, i + 1, 1);
  // Identity check against the bilinear form (for positive signs).
  Interval Ip{I.left, I.right, 1}, Jp{J.left, J.right, 1};
  Int pair = L.gram.pairing(interval_vector(L, Ip), interval_vector(L, Jp));
  Int inorm = 0;
  int il = std::max(I.left, J.left), ir = std::min(I.right, J.right);
  if (il <= ir) inorm = interval_norm(L, Interval{il, ir, 1});
  check(pair == inorm - count, "delta: dangling-edge identity failed");
  check(0 <= count && count <= 3, "delta: count out of range");
  return count;
}

std::vector<Vec> irreducible_elements(const CTypeLattice& L,
                                      const Int& bound) {
  require(bound >= 2, "irreducible_elements: bound must be >= 2");
  std::vector<Vec> out;
  for (const auto& [v, nv] : L.gram.short_vectors(bound))
    if (L.gram.is_irreducible(v)) out.push_back(v);
  // interval characterization check
  std::set<Vec> expected;
  int n = L.gram.rank();
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int s : {1, -1}) {
        Interval I{a, b, s};
        if (interval_norm(L, Interval{a, b, 1}) <= bound)
          expected.insert(interval_vector(L, I));
      }
  std::set<Vec> got(out.begin(), out.end());
  check(got == expected,
        "irreducible_elements: interval characterization failed");
  return out;
}

namespace {

std::optional<Interval> find_interval_form(const CTypeLattice& L,
                                           const Vec& v) {
  int n = L.gram.rank();
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int s : {1, -1}) {
        Interval I{a, b, s};
        if (interval_vector(L, I) == v) return I;
      }
  return std::nullopt;
}

bool abut(const Interval& I, const Interval& J) {
  bool consecutive = (I.right + 1 == J.left) || (J.right + 1 == I.left);
  bool common_end = (I.left == J.left) || (I.right == J.right);
  return consecutive || common_end;
}

}  // namespace

GraphDiagnostics graph_diagnostics(const CTypeLattice& L,
                                   const std::vector<Vec>& T) {
  GraphDiagnostics d;
  size_t m = T.size();
  for (const Vec& v : T) {
    require(L.gram.norm(v) > 0, "graph_diagnostics: zero vector");
    auto I = find_interval_form(L, v);
    require(I.has_value(),
            "graph_diagnostics: input vector is not a signed interval "
            "(not irreducible)");
    d.intervals.push_back(*I);
  }
  d.pairing_adj.assign(m, std::vector<bool>(m, false));
  d.intersection_adj.assign(m, std::vector<bool>(m, false));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      bool pr = L.gram.pairing(T[i], T[j]) != 0;
      bool ab = abut(d.intervals[i], d.intervals[j]);
      d.pairing_adj[i][j] = d.pairing_adj[j][i] = pr;
      d.intersection_adj[i][j] = d.intersection_adj[j][i] = ab;
    }
  // claws: centre adjacent to three pairwise non-adjacent vertices
  for (size_t v = 0; v < m; ++v) {
    std::vector<int> nb;
    for (size_t w = 0; w < m; ++w)
      if (w != v && d.intersection_adj[v][w]) nb.push_back((int)w);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        for (size_t k = j + 1; k < nb.size(); ++k)
          if (!d.intersection_adj[nb[i]][nb[j]] &&
              !d.intersection_adj[nb[i]][nb[k]] &&
              !d.intersection_adj[nb[j]][nb[k]])
            d.claws.push_back({(int)v, nb[i], nb[j], nb[k]});
  }
  // heavy triples: norm >= 3, not +-x_0, pairwise connected avoiding the third
  Vec x0(L.gram.rank(), 0);
  x0[0] = 1;
  std::vector<bool> heavy(m, false);
  for (size_t i = 0; i < m; ++i)
    heavy[i] = L.gram.norm(T[i]) >= 3 && T[i] != x0 && T[i] != vec_neg(x0);
  auto connected_avoiding = [&](int a, int b, int avoid) {
    std::vector<bool> seen(m, false);
    std::vector<int> stack{a};
    seen[a] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (u == b) return true;
      for (size_t w = 0; w < m; ++w)
        if (!seen[w] && (int)w != avoid && d.intersection_adj[u][w]) {
          seen[w] = true;
          stack.push_back((int)w);
        }
    }
    return false;
  };
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      for (size_t k = j + 1; k < m; ++k) {
        if (!(heavy[i] && heavy[j] && heavy[k])) continue;
        if (connected_avoiding((int)i, (int)j, (int)k) &&
            connected_avoiding((int)i, (int)k, (int)j) &&
            connected_avoiding((int)j, (int)k, (int)i))
          d.heavy_triples.push_back({(int)i, (int)j, (int)k});
      }
  return d;
}

// --- recovery ---------------------------------------------------------------

namespace {

Vec canonical_sign(const Vec& v) {
  for (const Int& x : v) {
    if (x > 0) return v;
    if (x < 0) return vec_neg(v);
  }
  return v;
}

struct RComponent {
  std::vector<Vec> vectors;  // generators lying in this component
  bool has_x0 = false;
  int rank = 0;
};

std::optional<std::pair<Int, Int>> recover_with_root(const GramLattice& L,
                                                     const Vec& x0);

}  // namespace

std::optional<std::pair<Int, Int>> recover_pq(const GramLattice& L) {
  int n = L.rank();
  if (n < 2) return std::nullopt;
  Int d = L.det();
  if (d % 4 != 0) return std::nullopt;
  // no norm-1 vectors exist in any chain lattice
  const auto& small = L.short_vectors(4);
  for (const auto& [v, nv] : small)
    if (nv == 1) return std::nullopt;

  if (n == 2 && d == 12) {
    // the one Gram shape the x_0 test cannot separate: both basis norms 4
    std::vector<Vec> norm4;
    for (const auto& [v, nv] : small)
      if (nv == 4) norm4.push_back(v);
    for (const Vec& u : norm4)
      for (const Vec& w : norm4) {
        Int uw = L.pairing(u, w);
        if (uw != -2) continue;
        // det of the pair's Gram = 4*4 - 4 = 12 = det(L): a basis
        return std::make_pair(Int(2), Int(3));
      }
    return std::nullopt;
  }

  // locate x_0 candidates: irreducible norm-4 vectors pairing evenly with
  // everything and trivially with every norm-2 vector.  (x_0 itself may be
  // "breakable" when the first chain norm is 3, so that filter cannot be
  // used; instead every candidate is run through the full path recovery and
  // all successes must agree.)
  std::vector<Vec> candidates;
  for (const auto& [v, nv] : small) {
    if (nv != 4) continue;
    bool even = true;
    for (int i = 0; i < n && even; ++i) {
      Vec e(n, 0);
      e[i] = 1;
      if (L.pairing(v, e) % 2 != 0) even = false;
    }
    if (!even) continue;
    bool clean = true;
    for (const auto& [w, nw] : small)
      if (nw == 2 && L.pairing(v, w) != 0) {
        clean = false;
        break;
      }
    if (!clean) continue;
    if (!L.is_irreducible(v)) continue;
    Vec c = canonical_sign(v);
    if (std::find(candidates.begin(), candidates.end(), c) ==
        candidates.end())
      candidates.push_back(c);
  }
  if (candidates.empty()) return std::nullopt;

  std::optional<std::pair<Int, Int>> result;
  for (const Vec& x0 : candidates) {
    auto r = recover_with_root(L, x0);
    if (!r) continue;
    if (result && *result != *r) return std::nullopt;  // ambiguous
    result = r;
  }
  return result;
}

namespace {

std::optional<std::pair<Int, Int>> recover_with_root(const GramLattice& L,
                                                     const Vec& x0) {
  int n = L.rank();
  Int d = L.det();
  const auto& small = L.short_vectors(4);

  // R = span(x_0, norm-2 vectors); its pairing-connected components are
  // x_0 alone plus one component per run of 2's
  std::vector<Vec> rgens{x0};
  for (const auto& [v, nv] : small)
    if (nv == 2) rgens.push_back(v);
  size_t m = rgens.size();
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (size_t i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = ncomp;
    std::vector<size_t> stack{i};
    while (!stack.empty()) {
      size_t u = stack.back();
      stack.pop_back();
      for (size_t w = 0; w < m; ++w)
        if (comp[w] < 0 && L.pairing(rgens[u], rgens[w]) != 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  std::vector<RComponent> comps(ncomp);
  for (size_t i = 0; i < m; ++i) {
    comps[comp[i]].vectors.push_back(rgens[i]);
    if (rgens[i] == x0) comps[comp[i]].has_x0 = true;
  }
  int rkR = 0;
  int w0_index = -1;
  for (int c = 0; c < ncomp; ++c) {
    comps[c].rank = (int)row_span_basis(Mat(comps[c].vectors.begin(),
                                            comps[c].vectors.end()))
                        .size();
    rkR += comps[c].rank;
    if (comps[c].has_x0) w0_index = c;
  }
  if (w0_index < 0) return std::nullopt;
  if (comps[w0_index].rank != 1 || comps[w0_index].vectors.size() != 1)
    return std::nullopt;  // x_0 must pair trivially with every norm-2 vector
  Mat rbasis = row_span_basis(Mat(rgens.begin(), rgens.end()));
  if ((int)rbasis.size() != rkR) return std::nullopt;

  int expected_classes = n - rkR;
  if (expected_classes < 1) return std::nullopt;

  // grow the norm bound until every class of unbreakable irreducibles of
  // norm >= 3 (mod R, up to sign) has appeared; class count caps the search
  std::vector<std::vector<Vec>> classes;   // representatives found so far
  std::vector<Int> class_min;
  Int cap = d / 2;
  size_t processed = 0;
  std::vector<std::pair<Vec, Int>> pool;  // nondecreasing norm order
  for (Int B = 3; B <= cap; ++B) {
    {
      const auto& sv = L.short_vectors(B);
      pool.clear();
      for (const auto& pr : sv)
        if (pr.second >= 3) pool.push_back(pr);
      std::stable_sort(pool.begin(), pool.end(),
                       [](const auto& a, const auto& b) {
                         return a.second < b.second;
                       });
    }
    for (size_t idx = processed; idx < pool.size(); ++idx) {
      const Vec& v = pool[idx].first;
      if (v == x0 || vec_neg(v) == x0) continue;
      if (!L.is_irreducible(v) || L.is_breakable(v)) continue;
      bool placed = false;
      for (size_t c = 0; c < classes.size() && !placed; ++c) {
        const Vec& rep = classes[c][0];
        if (in_row_span(rbasis, vec_sub(v, rep)) ||
            in_row_span(rbasis, vec_add(v, rep))) {
          classes[c].push_back(v);
          if (pool[idx].second < class_min[c]) class_min[c] = pool[idx].second;
          placed = true;
        }
      }
      if (!placed) {
        classes.push_back({v});
        class_min.push_back(pool[idx].second);
      }
      if ((int)classes.size() > expected_classes) return std::nullopt;
    }
    processed = pool.size();
    if ((int)classes.size() == expected_classes) break;
  }
  if ((int)classes.size() != expected_classes) return std::nullopt;

  // adjacency between classes, R-components, and the two kinds mixed:
  //  * class--component: a representative pairs to +-1 with a norm-2 vector
  //    of the component, or to +-2 with x_0 for x_0's component
  //  * class--class: representatives pair to +-1 and the two classes have no
  //    common component neighbour (a common neighbour means the run of 2's
  //    lies between them and the +-1 pairing is a chord across it)
  int nv = expected_classes, nw = ncomp;
  int total = nv + nw;  // nodes: classes 0..nv-1, components nv..nv+nw-1
  std::vector<std::vector<bool>> adj(total, std::vector<bool>(total, false));
  for (int c = 0; c < nv; ++c)
    for (int k = 0; k < nw; ++k) {
      bool edge = false;
      for (const Vec& rep : classes[c]) {
        for (const Vec& w : comps[k].vectors) {
          Int pr = L.pairing(rep, w);
          if (w == x0 ? (pr == 2 || pr == -2) : (pr == 1 || pr == -1)) {
            edge = true;
            break;
          }
        }
        if (edge) break;
      }
      if (edge) adj[c][nv + k] = adj[nv + k][c] = true;
    }
  for (int c = 0; c < nv; ++c)
    for (int c2 = c + 1; c2 < nv; ++c2) {
      bool pairs_one = false;
      for (const Vec& r1 : classes[c]) {
        for (const Vec& r2 : classes[c2]) {
          Int pr = L.pairing(r1, r2);
          if (pr == 1 || pr == -1) {
            pairs_one = true;
            break;
          }
        }
        if (pairs_one) break;
      }
      if (!pairs_one) continue;
      bool common = false;
      for (int k = 0; k < nw; ++k)
        if (adj[c][nv + k] && adj[c2][nv + k]) common = true;
      if (!common) adj[c][c2] = adj[c2][c] = true;
    }

  // the graph must be a simple path with x_0's component at one end
  std::vector<int> deg(total, 0);
  int edges = 0;
  for (int i = 0; i < total; ++i)
    for (int j = i + 1; j < total; ++j)
      if (adj[i][j]) {
        ++deg[i];
        ++deg[j];
        ++edges;
      }
  if (edges != total - 1) return std::nullopt;
  for (int i = 0; i < total; ++i)
    if (deg[i] > 2) return std::nullopt;
  int w0_node = nv + w0_index;
  if (deg[w0_node] != 1) return std::nullopt;
  // walk the path from x_0's end and read the norm sequence
  std::vector<Int> seq;
  std::vector<bool> visited(total, false);
  int cur = w0_node;
  visited[cur] = true;
  int steps = 1;
  while (true) {
    int next = -1;
    for (int j = 0; j < total; ++j)
      if (adj[cur][j] && !visited[j]) next = j;
    if (next < 0) break;
    visited[next] = true;
    ++steps;
    if (next < nv) {
      seq.push_back(class_min[next]);
    } else {
      for (int r = 0; r < comps[next - nv].rank; ++r) seq.push_back(2);
    }
    cur = next;
  }
  if (steps != total) return std::nullopt;  // disconnected

  if (seq.empty() || seq[0] < 3) return std::nullopt;
  for (const Int& a : seq)
    if (a < 2) return std::nullopt;
  if ((int)seq.size() + 1 != n) return std::nullopt;
  Rat val = neg_eval(seq);
  Int N = rat_num(val), D = rat_den(val);
  Int q = N - D, p = N - 2 * D;
  if (!(p > 1 && q > p)) return std::nullopt;
  if (gcd(p, q) != 1) return std::nullopt;
  if (d != 4 * q) return std::nullopt;
  if (neg_expand(Rat(N, D)) != seq) return std::nullopt;
  return std::make_pair(p, q);
}

}  // namespace

}  // namespace prism
