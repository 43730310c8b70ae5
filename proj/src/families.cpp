#include "prism/families.hpp"

#include <algorithm>

#include "prism/isometry.hpp"

namespace prism {

namespace {

Int fmod(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

std::vector<FamilyRecord> classify(const Int& p, const Int& q, long widen) {
  require(p > 1 && q > p, "classify: need 1 < p < q");
  require(p % 2 == 1, "classify: p must be odd");
  require(gcd(p, q) == 1, "classify: p and q must be coprime");

  std::vector<FamilyRecord> out;
  auto add = [&](const char* fam, bool has_r, const Int& r) {
    for (const auto& f : out)
      if (f.family == fam && f.has_r == has_r && f.r == r) return;
    out.push_back({fam, has_r, r});
  };

  Int disc = p * p + 3 * p + 4;
  if (2 * q == disc) add("1A", false, 0);
  if (22 * q == disc && p != 3 && p != 5) {
    check(p % 22 == 3 || p % 22 == 5, "1B residue violated by its identity");
    add("1B", false, 0);
  }

  // Family 2: q|4r+2| = r^2 p - 1 with r = 3 (mod 4), r not in {-5,-1,3},
  // p = -2r+3 (mod |4r+2|). The identity forces r^2 <= q|4r+2|/p + 1, so
  // |r| <= 4q/p + 2 bounds the scan.
  Int b2 = 4 * q / p + 2 + widen;
  for (Int a = 2; a <= b2; ++a) {
    for (const Int& r : {Int(a), Int(-a)}) {
      if (fmod(r, 4) != 3 || r == -5 || r == 3) continue;
      Int m = abs(4 * r + 2);
      if (q * m == r * r * p - 1 && fmod(p + 2 * r - 3, m) == 0)
        add("2", true, r);
    }
  }

  // Families 3A/3B share r = (p-1)(p-4)/(2q) when it is a positive odd
  // integer (r is odd in every family).
  Int num = (p - 1) * (p - 4);
  if (num > 0 && num % (2 * q) == 0 && (num / (2 * q)) % 2 == 1) {
    Int r = num / (2 * q);
    if (r >= 5 && fmod(p - 1, 2 * r) == 0 && p != 2 * r + 1) add("3A", true, r);
    if (r >= 1 && fmod(p - r - 4, 2 * r) == 0 && p > r + 4) add("3B", true, r);
  }

  // Family 4: 2r^2 q = (2r+1)^2 p - 1, r odd, r != +-1, p = -4r+1 (mod 2r^2).
  // Since q > p, the identity forces (2r+1)^2 > 2r^2, always true, but also
  // 2r^2 < (2r+1)^2 p / q < 9p/2 + ...; |r| <= 2p+1 is a safe scan bound.
  Int b4 = 2 * p + 1 + widen;
  for (Int a = 3; a <= b4; a += 2) {
    for (const Int& r : {Int(a), Int(-a)}) {
      Int m = 2 * r * r;
      if (m * q == (2 * r + 1) * (2 * r + 1) * p - 1 &&
          fmod(p + 4 * r - 1, m) == 0)
        add("4", true, r);
    }
  }

  // Family 5: q(r^2-2r-1) = r^2 p - 1 with r odd, r > 1,
  // p = -2r+5 (mod r^2-2r-1).
  // Rearranged: r^2 (q - p) = 2rq + q - 1 < (2r+1)q, so r < 3q/(q-p) + 2.
  Int b5 = 3 * q / (q - p) + 2 + widen;
  for (Int r = 3; r <= b5; r += 2) {
    Int m = r * r - 2 * r - 1;
    if (m <= 0) continue;
    if (q * m == r * r * p - 1 && fmod(p + 2 * r - 5, m) == 0)
      add("5", true, r);
  }

  if ((p == 11 && q == 19) || (p == 13 && q == 34)) add("SP", false, 0);
  return out;
}

namespace {

// Assembles one row: sigma (with runs), then the vertex basis as signed
// standard-basis combinations, the expected chain norms (where a run of
// length -1 swallows the entry before it), and x_0 directly in ambient
// coordinates.
struct RowBuild {
  Sigma sig;
  StandardBasis sb;
  size_t len = 0;
  std::vector<Vec> verts;
  std::vector<Int> norms;

  void s_push(const Int& v, long k = 1) {
    for (long i = 0; i < k; ++i) sig.push_back(v);
  }
  void finish_sigma() {
    sb = standard_basis(sig);
    len = sig.size();
  }
  Vec V(long i) const { return sb.vectors[i - 1]; }
  Vec vsum(long a, long b) const {
    Vec v(len, 0);
    for (long i = a; i <= b; ++i) v = vec_add(v, V(i));
    return v;
  }
  void add(const Vec& v) { verts.push_back(v); }
  void add_up(long a, long b, int sign) {  // empty when a > b
    for (long i = a; i <= b; ++i) add(sign > 0 ? V(i) : vec_neg(V(i)));
  }
  void add_down(long a, long b, int sign) {  // empty when a < b
    for (long i = a; i >= b; --i) add(sign > 0 ? V(i) : vec_neg(V(i)));
  }
  Vec x0(long i1, long i2, long i3) const {
    Vec v(len, 0);
    v[0] = 1;
    v[i1] += 1;
    v[i2] += 1;
    v[i3] -= 1;
    return v;
  }
  void n_push(const Int& x) { norms.push_back(x); }
  void n_two(long k) {
    if (k >= 0) {
      for (long i = 0; i < k; ++i) norms.push_back(2);
    } else {
      check(k == -1 && !norms.empty(), "row norm run underflow");
      norms.pop_back();
    }
  }
};

const std::vector<RowMeta> kRows = {
    {"1A.1", "1A", true, false, 2, 0},  {"1B.1", "1B", true, false, 1, 0},
    {"1B.2", "1B", true, false, 1, 0},  {"1B.3", "1B", false, false, 0, 0},
    {"1B.4", "1B", false, false, 0, 0}, {"2.1", "2", true, true, 1, 0},
    {"2.2", "2", true, true, 1, 0},     {"2.3", "2", false, true, 0, 0},
    {"3A.1", "3A", true, true, 1, 1},   {"3A.2", "3A", false, true, 0, 0},
    {"3B.1", "3B", true, true, 1, 1},   {"3B.2", "3B", true, false, 1, 0},
    {"3B.3", "3B", false, true, 0, 1},  {"3B.4", "3B", false, false, 0, 0},
    {"4.1", "4", true, true, 1, 0},     {"4.2", "4", false, true, 0, 0},
    {"4.3", "4", true, true, 1, 0},     {"4.4", "4", false, true, 0, 0},
    {"5.1", "5", true, true, 0, 0},     {"5.2", "5", false, true, 0, 1},
    {"SP.A", "SP", false, false, 0, 0}, {"SP.B", "SP", false, false, 0, 0},
};

}  // namespace

const std::vector<RowMeta>& certified_rows() { return kRows; }

RowInstance make_row(const std::string& id, long s, long t) {
  const RowMeta* meta = nullptr;
  for (const auto& m : kRows)
    if (m.id == id) meta = &m;
  require(meta != nullptr, "make_row: unknown row id");
  require(meta->uses_s ? s >= meta->s_min : s == 0,
          "make_row: s out of range");
  require(meta->uses_t ? t >= meta->t_min : t == 0,
          "make_row: t out of range");

  RowBuild b;
  Vec x0;
  Int p, q, r = 0;

  if (id == "1A.1") {
    b.s_push(1, 2), b.s_push(2, s), b.s_push(2 * s - 1), b.s_push(2 * s + 1);
    b.finish_sigma();
    b.add_up(2, s + 1, -1), b.add(b.vsum(3, s + 2)), b.add(b.V(1));
    b.n_push(3), b.n_two(s - 1), b.n_push(s + 1), b.n_push(2);
    x0 = b.x0(1, s + 2, s + 3);
    p = 2 * s - 1, q = Int(2) * s * s + s + 1;
  } else if (id == "1B.1") {
    b.s_push(1, 2), b.s_push(2, s), b.s_push(2 * s + 1), b.s_push(2 * s + 3);
    b.s_push(4 * s + 4), b.s_push(8 * s + 10);
    b.finish_sigma();
    b.add_up(2, s + 1, -1), b.add(vec_neg(b.V(s + 5)));
    b.add(b.V(s + 4)), b.add(b.V(s + 2)), b.add(b.V(1));
    b.n_push(3), b.n_two(s - 1), b.n_push(5), b.n_push(3);
    b.n_push(s + 2), b.n_push(2);
    x0 = b.x0(1, s + 2, s + 3);
    p = 22 * s + 25, q = Int(22) * s * s + 53 * s + 32;
  } else if (id == "1B.2") {
    b.s_push(1, 2), b.s_push(2, s), b.s_push(2 * s + 1), b.s_push(2 * s + 3);
    b.s_push(4 * s + 6), b.s_push(8 * s + 10);
    b.finish_sigma();
    b.add_up(2, s + 1, -1), b.add(vec_neg(b.V(s + 4)));
    b.add(b.V(s + 5)), b.add(b.V(s + 2)), b.add(b.V(1));
    b.n_push(3), b.n_two(s - 1), b.n_push(4), b.n_push(4);
    b.n_push(s + 2), b.n_push(2);
    x0 = b.x0(1, s + 2, s + 3);
    p = 22 * s + 27, q = Int(22) * s * s + 57 * s + 37;
  } else if (id == "1B.3") {
    b.s_push(1, 3), b.s_push(3), b.s_push(4), b.s_push(10);
    b.finish_sigma();
    b.add(vec_neg(b.V(5))), b.add(b.V(4)), b.add(b.V(2)), b.add(b.V(1));
    b.n_push(6), b.n_push(3), b.n_push(2), b.n_push(2);
    x0 = b.x0(1, 2, 3);
    p = 25, q = 32;
  } else if (id == "1B.4") {
    b.s_push(1, 3), b.s_push(3), b.s_push(6), b.s_push(10);
    b.finish_sigma();
    b.add(vec_neg(b.V(4))), b.add(b.V(5)), b.add(b.V(2)), b.add(b.V(1));
    b.n_push(5), b.n_push(4), b.n_push(2), b.n_push(2);
    x0 = b.x0(1, 2, 3);
    p = 27, q = 37;
  } else if (id == "2.1") {
    r = -5 - 4 * s;
    b.s_push(1), b.s_push(2), b.s_push(3), b.s_push(4, s);
    b.s_push(4 * s + 3), b.s_push(4 * s + 7), b.s_push(8 * s + 10, t);
    b.finish_sigma();
    b.add_up(3, s + 2, -1), b.add(vec_sub(b.vsum(3, s + 2), b.V(1)));
    b.add(b.V(2)), b.add(b.V(s + 3)), b.add_up(s + 5, s + t + 4, 1);
    b.n_push(3), b.n_two(s - 1), b.n_push(4), b.n_push(3);
    b.n_push(s + 2), b.n_push(3), b.n_two(t - 1);
    x0 = b.x0(2, s + 3, s + 4);
    p = (-4 * r - 2) * t - 2 * r + 3, q = r * r * t + (r * r - 2 * r + 1) / 2;
  } else if (id == "2.2") {
    r = 7 + 4 * s;
    b.s_push(1), b.s_push(2, 2), b.s_push(3), b.s_push(4, s);
    b.s_push(4 * s + 5), b.s_push(4 * s + 9), b.s_push(8 * s + 14, t);
    b.finish_sigma();
    b.add_up(4, s + 3, -1), b.add(vec_sub(b.vsum(3, s + 3), b.V(1)));
    b.add(vec_neg(b.V(3))), b.add(vec_neg(b.V(2)));
    b.add(vec_neg(b.V(s + 4))), b.add_up(s + 6, s + t + 5, -1);
    b.n_push(3), b.n_two(s - 1), b.n_push(3), b.n_push(3), b.n_push(2);
    b.n_push(s + 3), b.n_push(3), b.n_two(t - 1);
    x0 = b.x0(3, s + 4, s + 5);
    p = (4 * r + 2) * t + 2 * r + 5, q = r * r * t + (r * r + 2 * r - 1) / 2;
  } else if (id == "2.3") {
    r = 7;
    b.s_push(1), b.s_push(2, 2), b.s_push(3), b.s_push(5), b.s_push(9);
    b.s_push(14, t);
    b.finish_sigma();
    b.add(vec_sub(b.V(3), b.V(1))), b.add(vec_neg(b.V(3)));
    b.add(vec_neg(b.V(2))), b.add(vec_neg(b.V(4)));
    b.add_up(6, t + 5, -1);
    b.n_push(4), b.n_push(3), b.n_push(2), b.n_push(3), b.n_push(3);
    b.n_two(t - 1);
    x0 = b.x0(3, 4, 5);
    p = 30 * t + 19, q = 49 * t + 31;
  } else if (id == "3A.1") {
    r = 2 * t + 3;
    b.s_push(1, 2), b.s_push(2, s), b.s_push(2 * s + 3), b.s_push(2 * s + 5);
    b.s_push(4 * s + 6), b.s_push(4 * s + 8, t);
    b.finish_sigma();
    b.add_up(2, s + 1, -1), b.add_up(s + 5, s + t + 4, -1);
    b.add(vec_sub(vec_add(b.vsum(1, s + 1), b.vsum(s + 4, s + t + 4)),
                  b.V(s + 2)));
    b.add(vec_neg(b.V(s + 4))), b.add(vec_neg(b.V(1)));
    b.n_push(3), b.n_two(s - 1), b.n_push(3), b.n_two(t - 1);
    b.n_push(3), b.n_push(s + 3), b.n_push(2);
    x0 = b.x0(1, s + 2, s + 3);
    p = 2 * r * (s + 2) + 1, q = (s + 2) * (2 * r * (s + 2) - 3);
  } else if (id == "3A.2") {
    r = 2 * t + 5;
    b.s_push(1, 2), b.s_push(3), b.s_push(5), b.s_push(6), b.s_push(8, t + 1);
    b.finish_sigma();
    b.add_up(5, t + 5, -1);
    b.add(vec_sub(vec_add(b.V(1), b.vsum(4, t + 5)), b.V(2)));
    b.add(vec_neg(b.V(4))), b.add(vec_neg(b.V(1)));
    b.n_push(4), b.n_two(t), b.n_push(3), b.n_push(3), b.n_push(2);
    x0 = b.x0(1, 2, 3);
    p = 8 * t + 21, q = 16 * t + 34;
  } else if (id == "3B.1") {
    r = 2 * t + 1;
    b.s_push(1, 2), b.s_push(2, s), b.s_push(2 * s + 3), b.s_push(2 * s + 5);
    b.s_push(4 * s + 6, t);
    b.finish_sigma();
    b.add_up(2, s + 1, -1);
    b.add(vec_sub(vec_add(b.vsum(1, s + 1), b.vsum(s + 4, s + t + 3)),
                  b.V(s + 2)));
    b.add_down(s + t + 3, s + 4, -1), b.add(vec_neg(b.V(1)));
    b.n_push(3), b.n_two(s - 1), b.n_push(4), b.n_two(t - 1);
    b.n_push(s + 3), b.n_push(2);
    x0 = b.x0(1, s + 2, s + 3);
    p = 2 * r * (s + 1) + r + 4;
    q = (2 * r * s + 3 * (r + 1)) * (2 * s + 3) / 2;
  } else if (id == "3B.2") {
    r = 1;
    b.s_push(1, 2), b.s_push(2, s), b.s_push(2 * s + 3), b.s_push(2 * s + 5);
    b.finish_sigma();
    b.add_up(2, s + 1, -1);
    b.add(vec_sub(b.vsum(1, s + 1), b.V(s + 2))), b.add(vec_neg(b.V(1)));
    b.n_push(3), b.n_two(s - 1), b.n_push(s + 5), b.n_push(2);
    x0 = b.x0(1, s + 2, s + 3);
    p = 2 * s + 7, q = (Int(s) + 3) * (2 * s + 3);
  } else if (id == "3B.3") {
    r = 2 * t + 1;
    b.s_push(1, 2), b.s_push(3), b.s_push(5), b.s_push(6, t);
    b.finish_sigma();
    b.add(vec_sub(vec_add(b.V(1), b.vsum(4, t + 3)), b.V(2)));
    b.add_down(t + 3, 4, -1), b.add(vec_neg(b.V(1)));
    b.n_push(5), b.n_two(t - 1), b.n_push(3), b.n_push(2);
    x0 = b.x0(1, 2, 3);
    p = 6 * t + 7, q = 9 * t + 9;
  } else if (id == "3B.4") {
    r = 1;
    b.s_push(1, 2), b.s_push(3), b.s_push(5);
    b.finish_sigma();
    b.add(vec_neg(b.V(2))), b.add(b.V(1));
    b.n_push(6), b.n_push(2);
    x0 = b.x0(1, 2, 3);
    p = 7, q = 9;
  } else if (id == "4.1") {
    r = 2 * s + 3;
    b.s_push(1, 2), b.s_push(2), b.s_push(3), b.s_push(5), b.s_push(8, s);
    b.s_push(8 * s + 6), b.s_push(8 * s + 14, t);
    b.finish_sigma();
    b.add(vec_neg(b.V(2))), b.add(b.V(s + 5)), b.add(b.V(1));
    b.add(vec_neg(vec_add(b.V(3), b.V(1))));
    b.add_up(5, s + 4, -1), b.add_up(s + 6, s + t + 5, -1);
    b.n_push(3), b.n_push(s + 3), b.n_push(2), b.n_push(3), b.n_push(3);
    b.n_two(s - 1), b.n_push(3), b.n_two(t - 1);
    x0 = b.x0(1, 3, 4);
    p = 2 * r * r * (t + 1) - 4 * r + 1;
    q = (2 * r + 1) * (2 * r + 1) * (t + 1) - 8 * r - 6;
  } else if (id == "4.2") {
    r = 3;
    b.s_push(1, 2), b.s_push(2), b.s_push(3), b.s_push(5), b.s_push(6);
    b.s_push(14, t);
    b.finish_sigma();
    b.add(vec_neg(b.V(2))), b.add(vec_add(b.V(1), b.V(5)));
    b.add(vec_neg(b.V(1))), b.add(vec_neg(b.V(3)));
    b.add_up(6, t + 5, -1);
    b.n_push(3), b.n_push(3), b.n_push(2), b.n_push(3), b.n_push(4);
    b.n_two(t - 1);
    x0 = b.x0(1, 3, 4);
    p = 18 * t + 7, q = 49 * t + 19;
  } else if (id == "4.3") {
    r = -3 - 2 * s;
    b.s_push(1), b.s_push(2), b.s_push(3, 2), b.s_push(7), b.s_push(8, s);
    b.s_push(8 * s + 10, t);
    b.finish_sigma();
    b.add(vec_sub(b.vsum(5, s + 4), b.V(1))), b.add_down(s + 4, 5, -1);
    b.add(b.V(2)), b.add(b.V(3)), b.add_up(s + 5, s + t + 4, 1);
    b.n_push(4), b.n_two(s - 1), b.n_push(3), b.n_push(3), b.n_push(2);
    b.n_push(s + 3), b.n_two(t - 1);
    x0 = b.x0(2, 3, 4);
    p = 2 * r * r * t - 4 * r + 1;
    q = (2 * r + 1) * (2 * r + 1) * t - 8 * r - 6;
  } else if (id == "4.4") {
    r = -3;
    b.s_push(1), b.s_push(2), b.s_push(3, 2), b.s_push(7), b.s_push(10, t);
    b.finish_sigma();
    b.add(vec_neg(b.V(1))), b.add(b.V(2)), b.add(b.V(3));
    b.add_up(5, t + 4, 1);
    b.n_push(5), b.n_push(3), b.n_push(2), b.n_push(3), b.n_two(t - 1);
    x0 = b.x0(2, 3, 4);
    p = 18 * t + 13, q = 25 * t + 18;
  } else if (id == "5.1") {
    r = 2 * t + 5;
    b.s_push(1, 3), b.s_push(3), b.s_push(4, t + 1), b.s_push(4 * t + 6);
    b.s_push(4 * t + 10, s);
    b.finish_sigma();
    b.add(vec_neg(b.V(t + 5))), b.add(vec_neg(b.V(1))), b.add(vec_neg(b.V(2)));
    b.add_up(4, t + 4, -1), b.add_up(t + 6, t + s + 5, -1);
    b.n_push(t + 4), b.n_push(2), b.n_push(2), b.n_push(3), b.n_two(t);
    b.n_push(3), b.n_two(s - 1);
    x0 = b.x0(1, 2, 3);
    p = (r * r - 2 * r - 1) * (s + 1) - 2 * r + 5;
    q = r * r * (s + 1) - 2 * r + 1;
  } else if (id == "5.2") {
    r = 3;
    b.s_push(1, 3), b.s_push(2), b.s_push(3), b.s_push(6, t);
    b.finish_sigma();
    b.add(vec_neg(b.V(3))), b.add(vec_neg(b.V(1))), b.add(vec_neg(b.V(2)));
    b.add_up(5, t + 4, -1);
    b.n_push(3), b.n_push(2), b.n_push(2), b.n_push(4), b.n_two(t - 1);
    x0 = b.x0(1, 2, 4);
    p = 2 * t + 1, q = 9 * t + 4;
  } else if (id == "SP.A") {
    b.s_push(1), b.s_push(2), b.s_push(3), b.s_push(4), b.s_push(5);
    b.s_push(9);
    b.finish_sigma();
    b.add(vec_neg(b.V(3))), b.add(vec_sub(b.vsum(3, 4), b.V(1)));
    b.add(vec_neg(b.V(4))), b.add(b.V(2));
    b.n_push(3), b.n_push(3), b.n_push(3), b.n_push(3);
    x0 = b.x0(2, 4, 5);
    p = 13, q = 34;
  } else {  // SP.B
    b.s_push(1), b.s_push(2, 2), b.s_push(3, 2), b.s_push(7);
    b.finish_sigma();
    b.add(vec_sub(b.vsum(3, 4), b.V(1))), b.add(vec_neg(b.V(4)));
    b.add(vec_neg(b.V(3))), b.add(vec_neg(b.V(2)));
    b.n_push(4), b.n_push(2), b.n_push(3), b.n_push(2);
    x0 = b.x0(3, 4, 5);
    p = 11, q = 19;
  }

  RowInstance row;
  row.row_id = id;
  row.sigma = b.sig;
  row.vertex_basis.push_back(x0);
  for (auto& v : b.verts) row.vertex_basis.push_back(std::move(v));
  row.vertex_norms = b.norms;
  row.p = p;
  row.q = q;
  row.family = meta->family;
  return row;
}

std::string verify_row(const RowInstance& row) {
  if (!is_changemaker(row.sigma) || row.sigma[0] != 1)
    return "sigma is not a changemaker";
  if (sigma_norm(row.sigma) != 4 * row.q) return "|sigma|^2 != 4q";

  CTypeLattice L = build_ctype(row.p, row.q);
  if (static_cast<int>(row.vertex_basis.size()) != L.gram.rank())
    return "vertex count != rank of C(p,q)";
  std::vector<Int> expect(L.norms.begin() + 1, L.norms.end());
  if (row.vertex_norms != expect) return "norm sequence mismatch";

  // Orthogonal to sigma, and Gram-identical to the chain lattice. Equal
  // determinants (4q on both sides) then make this a basis of the full
  // orthogonal complement, not just a finite-index sublattice.
  for (const Vec& v : row.vertex_basis) {
    require(v.size() == row.sigma.size(), "verify_row: dimension mismatch");
    Int dot = 0;
    for (size_t i = 0; i < v.size(); ++i) dot += v[i] * row.sigma[i];
    if (dot != 0) return "vertex not orthogonal to sigma";
  }
  for (size_t i = 0; i < row.vertex_basis.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      Int dot = 0;
      for (size_t k = 0; k < row.sigma.size(); ++k)
        dot += row.vertex_basis[i][k] * row.vertex_basis[j][k];
      if (dot != L.gram.gram()[i][j]) return "Gram matrix mismatch";
    }

  for (const auto& f : classify(row.p, row.q))
    if (f.family == row.family) return "";
  return "family membership failed";
}

std::vector<CensusRecord> exhaustive_search(int max_len,
                                            const Int& norm_bound) {
  require(max_len >= 1, "exhaustive_search: max_len must be >= 1");
  std::vector<CensusRecord> out;
  for (int len = 1; len <= max_len; ++len) {
    for (const Sigma& sig : enumerate_changemakers(len, norm_bound)) {
      CensusRecord rec;
      rec.sigma = sig;
      rec.norm = sigma_norm(sig);
      rec.is_ctype = false;
      rec.p = 0;
      rec.q = 0;
      // A chain lattice has rank >= 2 and determinant 4q with q >= 3.
      if (rec.norm % 4 == 0 && len >= 3 && rec.norm >= 12) {
        Int q = rec.norm / 4;
        GramLattice G = complement_gram(sig);
        if (auto pq = recover_pq(G)) {
          CTypeLattice L = build_ctype(pq->first, pq->second);
          check(pq->second == q, "recovered q inconsistent with determinant");
          check(are_isometric(L.gram, G).has_value(),
                "recovered (p,q) failed isometry confirmation");
          rec.is_ctype = true;
          rec.p = pq->first;
          rec.q = q;
          rec.vertex_norms = L.norms;
        } else {
          // Recovery is conservative; settle the negatives by exhausting
          // the finitely many chain lattices of this determinant and rank.
          for (Int p = 2; p < q && !rec.is_ctype; ++p) {
            if (gcd(p, q) != 1) continue;
            CTypeLattice L = build_ctype(p, q);
            if (L.gram.rank() != G.rank()) continue;
            if (are_isometric(L.gram, G)) {
              rec.is_ctype = true;
              rec.p = p;
              rec.vertex_norms = L.norms;
            }
          }
          if (rec.is_ctype) rec.q = q;
        }
      }
      if (rec.is_ctype && rec.p % 2 == 1 && rec.p > 1)
        rec.families = classify(rec.p, rec.q);
      out.push_back(rec);
    }
  }
  return out;
}

}  // namespace prism
