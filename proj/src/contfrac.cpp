#include "prism/contfrac.hpp"

namespace prism {

NegCF neg_expand(const Rat& x) {
  require(x > 1, "neg_expand: argument must be > 1");
  Int num = rat_num(x), den = rat_den(x);
  NegCF out;
  while (den != 0) {
    Int a = ceil_div(num, den);
    out.push_back(a);
    Int nden = a * den - num;
    num = den;
    den = nden;
  }
  return out;
}

Rat neg_eval(const NegCF& cf) {
  require(!cf.empty(), "neg_eval: empty coefficient list");
  Rat acc = cf.back();
  for (size_t i = cf.size() - 1; i-- > 0;) {
    require(acc != 0, "neg_eval: degenerate expansion (zero denominator)");
    acc = Rat(cf[i]) - 1 / acc;
  }
  return acc;
}

PosCF pos_expand(const Rat& x) {
  require(x > 0, "pos_expand: argument must be > 0");
  Int num = rat_num(x), den = rat_den(x);
  PosCF out;
  while (den != 0) {
    Int b = floor_div(num, den);
    out.push_back(b);
    Int nden = num - b * den;
    num = den;
    den = nden;
  }
  return out;
}

Rat pos_eval(const PosCF& cf) {
  require(!cf.empty(), "pos_eval: empty coefficient list");
  Rat acc = cf.back();
  for (size_t i = cf.size() - 1; i-- > 0;) {
    require(acc != 0, "pos_eval: degenerate expansion (zero denominator)");
    acc = Rat(cf[i]) + 1 / acc;
  }
  return acc;
}

static void check_run(const NegCF& cf, size_t first, size_t run_length) {
  require(first + run_length <= cf.size(), "rewrite: run exceeds sequence");
  for (size_t i = 0; i < run_length; ++i)
    require(cf[first + i] == 2, "rewrite: indicated entries are not all 2");
}

NegCF hj_rewrite_interior(const NegCF& cf, size_t position,
                          size_t run_length) {
  require(position < cf.size(), "rewrite: position out of range");
  size_t tpos = position + 1 + run_length;
  require(tpos < cf.size(), "rewrite: no entry after the run");
  check_run(cf, position + 1, run_length);
  NegCF out(cf.begin(), cf.begin() + position);
  out.push_back(cf[position] - 1);
  out.push_back(-Int(run_length + 1));
  out.push_back(cf[tpos] - 1);
  out.insert(out.end(), cf.begin() + tpos + 1, cf.end());
  check(neg_eval(out) == neg_eval(cf), "rewrite_interior: value changed");
  return out;
}

NegCF hj_rewrite_tail(const NegCF& cf, size_t run_length) {
  require(run_length + 1 <= cf.size(), "rewrite: run exceeds sequence");
  size_t spos = cf.size() - run_length - 1;
  check_run(cf, spos + 1, run_length);
  NegCF out(cf.begin(), cf.begin() + spos);
  out.push_back(cf[spos] - 1);
  out.push_back(-Int(run_length + 1));
  check(neg_eval(out) == neg_eval(cf), "rewrite_tail: value changed");
  return out;
}

NegCF montesinos_coeffs(const PosCF& b) {
  size_t m = b.size();
  require(m >= 1, "montesinos_coeffs: empty expansion");
  require(b[0] >= 0, "montesinos_coeffs: b_1 must be >= 0");
  for (size_t i = 1; i < m; ++i)
    require(b[i] > 0, "montesinos_coeffs: b_i must be > 0 for i > 1");
  NegCF out;
  for (size_t i = 0; i < m; ++i) {
    if (i % 2 == 0) {
      // band coefficient: +2, one extra half-twist at the front, one fewer
      // at an odd-length tail (the m = 1 band is both, giving b_1 + 2)
      Int c = b[i] + 2;
      if (i == 0) c += 1;
      if (i + 1 == m && m % 2 == 1) c -= 1;
      out.push_back(c);
    } else {
      for (Int k = 0; k < b[i] - 1; ++k) out.push_back(2);
    }
  }
  check(neg_eval(out) == pos_eval(b) + 2,
        "montesinos_coeffs: evaluation identity failed");
  return out;
}

}  // namespace prism
