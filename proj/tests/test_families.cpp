#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "prism/families.hpp"

using namespace prism;

namespace {

std::set<std::string> family_names(const Int& p, const Int& q) {
  std::set<std::string> s;
  for (const auto& f : classify(p, q)) s.insert(f.family);
  return s;
}

}  // namespace

TEST_CASE("classification oracle values") {
  CHECK(family_names(5, 22) == std::set<std::string>{"1A", "5"});
  CHECK(family_names(13, 34) == std::set<std::string>{"SP"});
  CHECK(family_names(11, 19) == std::set<std::string>{"SP"});
  CHECK(family_names(7, 9) == std::set<std::string>{"3B"});
  CHECK(family_names(3, 11) == std::set<std::string>{"1A"});
  CHECK(family_names(25, 32) == std::set<std::string>{"1B"});
  CHECK(family_names(19, 31).count("2") == 1);
  CHECK(family_names(21, 34).count("3A") == 1);
  CHECK(family_names(9, 16).count("5") == 1);
  CHECK(family_names(7, 19).count("4") == 1);
  CHECK(family_names(3, 5).empty());
  CHECK_THROWS_AS(classify(4, 7), domain_error);  // even p
  CHECK_THROWS_AS(classify(3, 9), domain_error);  // not coprime
}

TEST_CASE("parameter values are reported") {
  auto fams = classify(19, 31);
  bool found = false;
  for (const auto& f : fams)
    if (f.family == "2") {
      CHECK(f.has_r);
      CHECK(f.r == 7);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("scan bounds lose nothing") {
  // widening the search windows must not discover extra certificates
  for (Int q = 3; q <= 60; ++q)
    for (Int p = 3; p < q; p += 2) {
      if (gcd(p, q) != 1) continue;
      CHECK(classify(p, q).size() == classify(p, q, 40).size());
    }
}

TEST_CASE("all certified rows verify at small parameters") {
  for (const RowMeta& m : certified_rows()) {
    long s_hi = m.uses_s ? m.s_min + 3 : m.s_min;
    long t_hi = m.uses_t ? m.t_min + 3 : m.t_min;
    for (long s = m.s_min; s <= s_hi; ++s)
      for (long t = m.t_min; t <= t_hi; ++t) {
        RowInstance row = make_row(m.id, s, t);
        INFO(m.id, " s=", s, " t=", t);
        CHECK(verify_row(row) == "");
      }
  }
}

TEST_CASE("named anchor rows") {
  RowInstance r1 = make_row("3B.4");
  CHECK(r1.sigma == Sigma{1, 1, 3, 5});
  CHECK(r1.p == 7);
  CHECK(r1.q == 9);

  RowInstance r2 = make_row("SP.B");
  CHECK(r2.sigma == Sigma{1, 2, 2, 3, 3, 7});
  CHECK(r2.p == 11);
  CHECK(r2.q == 19);

  RowInstance r3 = make_row("SP.A");
  CHECK(r3.sigma == Sigma{1, 2, 3, 4, 5, 9});
  CHECK(r3.p == 13);
  CHECK(r3.q == 34);

  RowInstance r4 = make_row("1A.1", 2, 0);
  CHECK(r4.p == 3);
  CHECK(r4.q == 11);

  CHECK_THROWS_AS(make_row("1A.1", 1, 0), domain_error);  // s below range
  CHECK_THROWS_AS(make_row("nope"), domain_error);
}

TEST_CASE("small census") {
  auto census = exhaustive_search(4, 100);
  bool found_3b4 = false;
  for (const auto& rec : census) {
    if (rec.sigma == Sigma{1, 1, 3, 5}) {
      found_3b4 = true;
      CHECK(rec.is_ctype);
      CHECK(rec.p == 7);
      CHECK(rec.q == 9);
      CHECK(rec.vertex_norms == std::vector<Int>{4, 6, 2});
      REQUIRE(rec.families.size() == 1);
      CHECK(rec.families[0].family == "3B");
    }
    if (rec.sigma == Sigma{1, 1, 1, 3}) CHECK(!rec.is_ctype);
    if (rec.is_ctype) CHECK(rec.norm == 4 * rec.q);
  }
  CHECK(found_3b4);
}
