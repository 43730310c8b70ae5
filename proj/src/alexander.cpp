#include "prism/alexander.hpp"

#include <algorithm>
#include <limits>

namespace prism {

namespace {

// Per-residue minimum of |c|^2 over all-odd vectors c indexed by coords
// [lo, hi), coordinate j ranging over odd values in [-box[j], box[j]].
// missing entries are -1.
std::vector<Int> half_minima(const Sigma& sigma, const std::vector<Int>& box,
                             size_t lo, size_t hi, const Int& modulus) {
  std::vector<Int> best(static_cast<size_t>(modulus.convert_to<long>()), -1);
  auto rec = [&](auto&& self, size_t j, const Int& dot, const Int& nrm) -> void {
    if (j == hi) {
      Int r = dot % modulus;
      if (r < 0) r += modulus;
      size_t idx = static_cast<size_t>(r.convert_to<long>());
      if (best[idx] < 0 || nrm < best[idx]) best[idx] = nrm;
      return;
    }
    for (Int c = 1; c <= box[j]; c += 2) {
      self(self, j + 1, dot + c * sigma[j], nrm + c * c);
      self(self, j + 1, dot - c * sigma[j], nrm + c * c);
    }
  };
  rec(rec, lo, 0, 0);
  return best;
}

}  // namespace

TorsionSequence torsion_coefficients(const Sigma& sigma) {
  require(is_changemaker(sigma) && sigma[0] == 1,
          "torsion_coefficients: not a changemaker with sigma_0 = 1");
  require(sigma.size() >= 2, "torsion_coefficients: need length >= 2");
  Int norm = sigma_norm(sigma);
  require(norm % 4 == 0, "torsion_coefficients: |sigma|^2 must be 4q");
  Int q = norm / 4;
  Int modulus = 8 * q;
  size_t len = sigma.size();
  long nt = 2 * q.convert_to<long>() + 1;

  std::vector<Int> box(len);
  for (size_t j = 0; j < len; ++j)
    box[j] = std::max(Int(3), Int(2 * sigma[j] + 1));

  std::vector<Int> t;
  for (;;) {
    size_t mid = len / 2;
    std::vector<Int> a = half_minima(sigma, box, 0, mid, modulus);
    std::vector<Int> b = half_minima(sigma, box, mid, len, modulus);
    size_t m = a.size();
    std::vector<Int> full(m, -1);
    for (size_t ra = 0; ra < m; ++ra) {
      if (a[ra] < 0) continue;
      for (size_t rb = 0; rb < m; ++rb) {
        if (b[rb] < 0) continue;
        size_t r = ra + rb;
        if (r >= m) r -= m;
        Int nrm = a[ra] + b[rb];
        if (full[r] < 0 || nrm < full[r]) full[r] = nrm;
      }
    }

    t.assign(nt, -1);
    bool complete = true;
    Int tmax = 0;
    for (long i = 0; i < nt && complete; ++i) {
      Int r = (2 * i - 4 * q) % modulus;
      if (r < 0) r += modulus;
      const Int& c2 = full[static_cast<size_t>(r.convert_to<long>())];
      if (c2 < 0) {
        complete = false;
        break;
      }
      check((c2 - Int(len)) % 8 == 0, "odd vector norm residue violated");
      t[i] = (c2 - Int(len)) / 8;
      tmax = std::max(tmax, t[i]);
    }

    if (complete) {
      // Any vector leaving the box through coordinate j picks up norm at
      // least (box_j + 2)^2 + (len - 1); if that already exceeds every
      // minimum found, the values are final.
      Int floor_outside = -1;
      for (size_t j = 0; j < len; ++j) {
        Int v = ((box[j] + 2) * (box[j] + 2) - 1) / 8;
        if (floor_outside < 0 || v < floor_outside) floor_outside = v;
      }
      if (floor_outside > tmax) break;
    }
    for (size_t j = 0; j < len; ++j) box[j] += 2;
  }

  TorsionSequence ts;
  ts.q = q;
  ts.t = std::move(t);
  for (const Int& bj : box) ts.stabilization_bound = std::max(ts.stabilization_bound, bj);
  return ts;
}

AlexanderPolynomial alexander_polynomial(const TorsionSequence& ts) {
  long nt = static_cast<long>(ts.t.size());
  require(nt >= 2 && Int(nt) == 2 * ts.q + 1,
          "alexander_polynomial: bad sequence length");
  AlexanderPolynomial a;
  a.b.assign(nt - 1, 0);
  Int tail = 0;
  for (long i = nt - 2; i >= 1; --i) {
    a.b[i] = ts.t[i - 1] - 2 * ts.t[i] + ts.t[i + 1];
    tail += a.b[i];
  }
  a.b[0] = 1 - 2 * tail;  // evaluation at T = 1 equals 1
  while (a.b.size() > 1 && a.b.back() == 0) a.b.pop_back();
  return a;
}

TorsionSequence torsion_from_polynomial(const AlexanderPolynomial& a,
                                        const Int& q) {
  long nt = 2 * q.convert_to<long>() + 1;
  TorsionSequence ts;
  ts.q = q;
  ts.t.assign(nt, 0);
  long deg = static_cast<long>(a.b.size()) - 1;
  for (long k = 0; k < nt; ++k) {
    Int acc = 0;
    for (long j = 1; k + j <= deg; ++j) acc += Int(j) * a.b[k + j];
    ts.t[k] = acc;
  }
  return ts;
}

bool coefficients_in_unit_range(const AlexanderPolynomial& a) {
  return std::all_of(a.b.begin(), a.b.end(),
                     [](const Int& x) { return x >= -1 && x <= 1; });
}

}  // namespace prism
