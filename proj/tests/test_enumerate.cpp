#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "latcap/cache.hpp"
#include "latcap/enumerate.hpp"
#include "latcap/errors.hpp"
#include "latcap/region.hpp"
#include "latcap/trapezoids.hpp"

using namespace latcap;

namespace {

BigCount binom(int n, int k) {
  BigCount r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

RegionSpec rect_spec(int m, int n, bool forbid = false) {
  RegionSpec s;
  s.kind = RegionKind::rectangle;
  s.m = m;
  s.n = n;
  s.forbid_side_to_side = forbid;
  return s;
}

RegionSpec trap4_spec(int a, int e, bool forbid) {
  RegionSpec s;
  s.kind = RegionKind::trapezoid4;
  s.profile = {a, e};
  s.forbid_side_to_side = forbid;
  return s;
}

RegionSpec trap5_spec(int lam, int a0, int a5, bool forbid) {
  RegionSpec s;
  s.kind = RegionKind::trapezoid5;
  s.profile = {lam, a0, a5};
  s.forbid_side_to_side = forbid;
  return s;
}

} // namespace

TEST_CASE("point primitives") {
  CHECK(det({1, 0}, {0, 1}) == 1);
  CHECK(orient({0, 0}, {2, 0}, {1, 5}) == 10);
  CHECK(properly_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  CHECK(!properly_cross({0, 0}, {2, 2}, {0, 2}, {1, 1}));   // endpoint touch
  CHECK(!properly_cross({0, 0}, {1, 1}, {2, 2}, {3, 3}));   // collinear, disjoint
  CHECK(lex_less({1, 9}, {2, 0}));
  CHECK(lex_less({1, 0}, {1, 1}));
}

TEST_CASE("region construction") {
  Region sq = Region::rectangle(1, 1);
  CHECK(sq.cycle().size() == 4);
  CHECK(sq.area2() == 2);

  Region r21 = Region::rectangle(2, 1);
  CHECK(r21.cycle().size() == 6); // bottom and top sides subdivided

  CHECK(Region::trapezoid4(0, 0).empty());
  CHECK(Region::trapezoid5(1, 0, 0).empty());
  CHECK(Region::trapezoid4(2, 0).area2() == 8);
  CHECK(Region::trapezoid5(1, 1, 1).area2() == 10);

  CHECK_THROWS_AS(Region::from_corners({{0, 0}, {0, 1}, {1, 1}, {1, 0}}),
                  std::invalid_argument); // clockwise

  Region r22 = Region::rectangle(2, 2);
  CHECK(r22.contains({1, 1}));
  CHECK(r22.contains({0, 1}));
  CHECK(r22.contains({2, 2}));
  CHECK(!r22.contains({3, 1}));
  CHECK(!r22.contains({-1, 0}));
  CHECK(sq.contains_scaled({1, 1}, 2));  // midpoint (1/2, 1/2)
  CHECK(!sq.contains_scaled({3, 1}, 2)); // (3/2, 1/2)
}

TEST_CASE("strip shapes assemble") {
  // One-column shape of height 4 with straight upper chain.
  Region s = Region::strip_shape(4, 1, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(s.area2() == 4);
  CHECK(poly_contains(s.cycle(), {-1, 0}));
}

TEST_CASE("tiny rectangle counts by both engines") {
  CHECK(enumerate_brute(rect_spec(1, 1)) == 2);
  CHECK(enumerate_brute(rect_spec(1, 2)) == 6);
  CHECK(enumerate_brute(rect_spec(1, 3)) == 20);
  CHECK(count_rectangle(1, 1) == 2);
  CHECK(count_rectangle(1, 2) == 6);
  CHECK(count_rectangle(1, 3) == 20);
  CHECK(count_rectangle(0, 5) == 1);
  CHECK(count_rectangle(2, 0) == 1);
}

TEST_CASE("width-1 counts are central binomials") {
  for (int n = 0; n <= 9; ++n) {
    CHECK(count_rectangle(1, n) == binom(2 * n, n));
  }
}

TEST_CASE("transpose invariance as explicit regions") {
  BigCount a = count_region_dp(Region::rectangle(5, 2), false, 2);
  BigCount b = count_region_dp(Region::rectangle(2, 5), false, 5);
  CHECK(a == b);
  CHECK(count_rectangle(2, 5) == a);
  CHECK(count_rectangle(5, 2) == a);
}

TEST_CASE("dp equals brute on small rectangles") {
  for (int n = 1; n <= 7; ++n)
    CHECK(count_rectangle(1, n) == enumerate_brute(rect_spec(1, n)));
  for (int n = 1; n <= 4; ++n)
    CHECK(count_rectangle(2, n) == enumerate_brute(rect_spec(2, n)));
}

// count_rectangle routes through the compact hashed memo; the explicit-region
// entry point keeps exact keys.  The two must agree everywhere both run.
TEST_CASE("compact and exact rectangle engines agree") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(count_rectangle(2, n) == count_region_dp(Region::rectangle(n, 2), false, 2));
  }
  for (int n = 1; n <= 7; ++n) {
    CHECK(count_rectangle(3, n) == count_region_dp(Region::rectangle(n, 3), false, 3));
  }
  CHECK(count_rectangle(4, 4) == count_region_dp(Region::rectangle(4, 4), false, 4));
  CHECK(count_rectangle(3, 8) == BigCount("58591381296256"));
  CHECK(count_rectangle(3, 10) == BigCount("295372308876234428"));
}

TEST_CASE("dp equals brute on the 3x3 square") {
  CHECK(count_rectangle(3, 3) == enumerate_brute(rect_spec(3, 3)));
}

TEST_CASE("dp equals brute on width-4 trapezoids") {
  for (int n = 0; n <= 4; n += 2) {
    for (int a = 0; a <= n; ++a) {
      for (bool forbid : {false, true}) {
        INFO("a=", a, " e=", n - a, " forbid=", forbid);
        CHECK(count_trapezoid(trap4_spec(a, n - a, forbid)) ==
              enumerate_brute(trap4_spec(a, n - a, forbid)));
      }
    }
  }
}

TEST_CASE("dp equals brute on width-5 trapezoids") {
  for (int n = 0; n <= 3; ++n) {
    for (int lam = 1; lam <= 2; ++lam) {
      for (int a0 = 0; a0 <= n; ++a0) {
        for (bool forbid : {false, true}) {
          INFO("lam=", lam, " a0=", a0, " a5=", n - a0, " forbid=", forbid);
          CHECK(count_trapezoid(trap5_spec(lam, a0, n - a0, forbid)) ==
                enumerate_brute(trap5_spec(lam, a0, n - a0, forbid)));
        }
      }
    }
  }
}

TEST_CASE("side-to-side exclusion in a width-1 strip leaves nothing") {
  CHECK(enumerate_brute(rect_spec(1, 2, true)) == 0);
  CHECK(count_spec(rect_spec(1, 2, true)) == 0);
}

TEST_CASE("width-4 trapezoid series") {
  auto all = trapezoid4_coeffs(6, true);
  auto strict = trapezoid4_coeffs(6, false);
  std::vector<BigCount> all_want = {1, 0, 6, 0, 750, 0, 189121};
  std::vector<BigCount> strict_want = {0, 0, 6, 0, 714, 0, 180337};
  CHECK(all == all_want);
  CHECK(strict == strict_want);

  // J* and 1/(1-J) agree: (1 - J) J* = 1 through degree 6.
  for (int n = 0; n <= 6; ++n) {
    BigCount conv = all[(std::size_t)n];
    for (int k = 0; k <= n; ++k)
      conv -= strict[(std::size_t)k] * all[(std::size_t)(n - k)];
    CHECK(conv == (n == 0 ? 1 : 0));
  }

  CHECK(count_trapezoid(trap4_spec(0, 0, false)) == 1);
  CHECK(count_trapezoid(trap4_spec(0, 0, true)) == 0);
  CHECK(count_trapezoid(trap4_spec(1, 0, false)) == 0); // odd a+e
  CHECK(count_trapezoid(trap4_spec(0, 3, true)) == 0);
}

TEST_CASE("width-5 right-edge classes") {
  CHECK(trapezoid5_mu(1, 0, 0) == 1);
  CHECK(trapezoid5_mu(2, 0, 0) == 2);
  CHECK(trapezoid5_mu(1, 1, 0) == 0); // imprimitive right edge
  CHECK(trapezoid5_mu(1, 2, 0) == 1);
  CHECK(trapezoid5_mu(1, 3, 0) == 2);
  CHECK(trapezoid5_mu(1, 0, 1) == 2);
  CHECK(trapezoid5_mu(1, 0, 2) == 2);
  CHECK(trapezoid5_mu(2, 1, 0) == 1);
  CHECK(trapezoid5_mu(2, 0, 1) == 2);
  CHECK(count_trapezoid(trap5_spec(1, 1, 0, false)) == 0);
}

TEST_CASE("width-5 trapezoid series") {
  auto all = trapezoid5_coeffs(4, true);
  auto strict = trapezoid5_coeffs(4, false);

  auto entry = [](const std::vector<LMat>& v, int n, int lam, int mu) {
    return v[(std::size_t)n][lam - 1][mu - 1];
  };

  // star series, identity at degree 0
  CHECK(entry(all, 0, 1, 1) == 1);
  CHECK(entry(all, 0, 1, 2) == 0);
  CHECK(entry(all, 0, 2, 1) == 0);
  CHECK(entry(all, 0, 2, 2) == 1);

  std::vector<BigCount> want_all_11 = {1, 0, 3, 90, 1296};
  std::vector<BigCount> want_all_12 = {0, 1, 6, 101, 2469};
  std::vector<BigCount> want_all_22 = {1, 1, 10, 140, 3965};
  std::vector<BigCount> want_strict_11 = {0, 0, 2, 79, 1075};
  std::vector<BigCount> want_strict_12 = {0, 1, 5, 84, 2104};
  std::vector<BigCount> want_strict_22 = {0, 1, 8, 111, 3419};
  for (int n = 0; n <= 4; ++n) {
    INFO("degree ", n);
    CHECK(entry(all, n, 1, 1) == want_all_11[(std::size_t)n]);
    CHECK(entry(all, n, 1, 2) == want_all_12[(std::size_t)n]);
    CHECK(entry(all, n, 2, 2) == want_all_22[(std::size_t)n]);
    CHECK(entry(strict, n, 1, 1) == want_strict_11[(std::size_t)n]);
    CHECK(entry(strict, n, 1, 2) == want_strict_12[(std::size_t)n]);
    CHECK(entry(strict, n, 2, 2) == want_strict_22[(std::size_t)n]);
    // symmetry and the coefficientwise bound
    CHECK(entry(all, n, 1, 2) == entry(all, n, 2, 1));
    CHECK(entry(strict, n, 1, 2) == entry(strict, n, 2, 1));
    for (int lam = 1; lam <= 2; ++lam)
      for (int mu = 1; mu <= 2; ++mu)
        CHECK(entry(strict, n, lam, mu) <= entry(all, n, lam, mu));
  }
}

TEST_CASE("convexity checker") {
  std::vector<BigCount> vals;
  for (int n = 0; n <= 11; ++n) vals.push_back(count_rectangle(1, n));
  auto rep = check_convexity(1, 1, 10, vals);
  CHECK(rep.violations.empty());
  REQUIRE(rep.capacity_lower.size() == 10);
  for (std::size_t i = 1; i < rep.capacity_lower.size(); ++i)
    CHECK(rep.capacity_lower[i] >= rep.capacity_lower[i - 1]);
  CHECK(rep.capacity_lower.back() < 2.0); // approaches c_1 = 2 from below
  CHECK(rep.capacity_lower.back() > 1.8);

  std::vector<BigCount> flat = {1, 1, 1};
  auto rep2 = check_convexity(3, 1, 1, flat);
  CHECK(rep2.violations.empty());
}

TEST_CASE("budget guard reports the high-water mark") {
  CountBudget tiny;
  tiny.max_nodes = 3;
  CHECK_THROWS_AS(count_rectangle(3, 6, tiny), BudgetExceeded);
}

TEST_CASE("deterministic recount") {
  CHECK(count_rectangle(2, 6) == count_rectangle(2, 6));
}

TEST_CASE("cache round trip") {
  auto path = std::filesystem::temp_directory_path() /
              "latcap-test-cache.txt";
  std::filesystem::remove(path);

  RegionSpec spec = rect_spec(2, 3);
  BigCount direct = count_rectangle(2, 3);
  {
    CountCache cache(path.string());
    CHECK(!cache.lookup(spec).has_value());
    CHECK(cache.get_or_compute(spec) == direct);
    CHECK(cache.get_or_compute(spec) == direct);
    cache.store(trap4_spec(1, 3, true), BigCount(12345));
  }
  {
    CountCache reread(path.string());
    CHECK(reread.size() == 2);
    auto hit = reread.lookup(spec);
    REQUIRE(hit.has_value());
    CHECK(*hit == direct);
    auto hit2 = reread.lookup(trap4_spec(1, 3, true));
    REQUIRE(hit2.has_value());
    CHECK(hit2->str() == "12345");
    CHECK_THROWS(reread.store(spec, direct + 1));
  }
  {
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    CHECK(first == "#latcap-cache v1");
  }
  CHECK(CountCache::key_for(rect_spec(2, 3)) == "rect 2 3 - -");
  CHECK(CountCache::key_for(trap4_spec(1, 3, true)) == "trap4 4 4 1,3 x");
  CHECK(CountCache::key_for(trap5_spec(2, 1, 0, false)) == "trap5 5 1 2,1,0 -");
  std::filesystem::remove(path);
}

TEST_CASE("log2 of big counts") {
  CHECK(log2_big(BigCount(1)) == doctest::Approx(0.0));
  CHECK(log2_big(BigCount(1) << 100) == doctest::Approx(100.0));
  CHECK(log2_big(BigCount(3)) == doctest::Approx(1.5849625007));
  BigCount big = (BigCount(1) << 200) + 12345;
  CHECK(log2_big(big) == doctest::Approx(200.0));
}
