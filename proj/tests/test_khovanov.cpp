#include "linkdet/khovanov.hpp"

#include <set>

#include "doctest.h"
#include "linkdet/diagram.hpp"
#include "linkdet/invariants.hpp"

using namespace linkdet;

namespace {

LinkDiagram from_dt(const std::string& text) { return dt_to_pd(parse_dt(text)); }

LaurentPoly1 unnormalized_jones(const LinkDiagram& d) {
  auto qq = LaurentPoly1::monomial(1, 1, "q") + LaurentPoly1::monomial(1, -1, "q");
  return qq * jones(d).reexpress("q", 2, false);
}

}  // namespace

TEST_CASE("unknot homology") {
  auto b = khovanov_f2(parse_pd(""));
  BigradedDims expect{{{0, -1}, 1}, {{0, 1}, 1}};
  CHECK(b == expect);
  CHECK(poincare_poly(b).canonical_string() == "1*t^0*q^-1+1*t^0*q^1");
  CHECK(specialize_t(b, -1).canonical_string() == "1*q^-1+1*q^1");
  CHECK(specialize_t(b, 1) == specialize_t(b, -1));
}

TEST_CASE("trefoil homology tables") {
  BigradedDims right{{{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1},
                     {{2, 7}, 1}, {{3, 7}, 1}, {{3, 9}, 1}};
  auto tref = from_dt("4 6 2");
  CHECK(khovanov_f2(tref) == right);
  BigradedDims left;
  for (const auto& [ij, dim] : right) left[{-ij.first, -ij.second}] = dim;
  CHECK(khovanov_f2(mirror(tref)) == left);
}

TEST_CASE("figure-eight homology table") {
  BigradedDims expect{{{-2, -5}, 1}, {{-2, -3}, 1}, {{-1, -3}, 1}, {{-1, -1}, 1},
                      {{0, -1}, 1},  {{0, 1}, 1},   {{1, 1}, 1},   {{1, 3}, 1},
                      {{2, 3}, 1},   {{2, 5}, 1}};
  CHECK(khovanov_f2(from_dt("4 6 8 2")) == expect);
}

TEST_CASE("graded Euler characteristic is the unnormalized Jones polynomial") {
  for (const char* dt : {"4 6 2", "4 6 8 2", "4 8 10 2 6", "6 8 10 2 4",
                         "4 8 10 12 2 6", "8 10 12 14 2 4 6",
                         "4 8 -12 2 -14 -16 6 -10"}) {
    auto d = from_dt(dt);
    auto b = khovanov_f2(d);
    CHECK(specialize_t(b, -1) == unnormalized_jones(d));
    // total dimension dominates the Euler characteristic at q = 1
    long tot = 0;
    for (const auto& [ij, dim] : b) tot += dim;
    Int chi1 = specialize_t(b, -1).evaluate_sign(1);
    CHECK(Int(tot) >= (chi1 >= 0 ? chi1 : -chi1));
    // the t = 1 specialization has nonnegative coefficients
    auto kt1 = specialize_t(b, 1);
    for (const auto& [e, c] : kt1.terms()) CHECK(c > 0);
  }
}

TEST_CASE("reidemeister-one invariance smoke test") {
  // the hand-written PD realizes the left trefoil plus one positive kink
  auto kinked = parse_pd("X(1,4,2,5);X(3,6,4,1);X(5,7,6,3);X(2,7,8,8)");
  CHECK(kinked.size() == 4);
  CHECK(khovanov_f2(kinked) == khovanov_f2(mirror(from_dt("4 6 2"))));
}

TEST_CASE("cube differential squares to zero and shifts gradings correctly") {
  for (const char* dt : {"4 6 2", "4 6 8 2", "4 8 10 2 6", "4 8 10 12 2 6",
                         "8 10 12 14 2 4 6", "4 8 -12 2 -14 -16 6 -10"}) {
    auto cube = khovanov_cube(from_dt(dt));
    for (long g = 0; g < cube.total(); ++g) {
      auto [i, j] = cube.grading[g];
      std::set<long> parity;
      for (long h : cube.diff[g]) {
        CHECK(cube.grading[h].first == i + 1);
        CHECK(cube.grading[h].second == j);
        for (long h2 : cube.diff[h]) {
          auto [it, fresh] = parity.insert(h2);
          if (!fresh) parity.erase(it);
        }
      }
      CHECK(parity.empty());
    }
  }
}

TEST_CASE("cube edges are merges or splits") {
  auto cube = khovanov_cube(from_dt("4 6 8 2"));
  for (std::size_t s = 0; s < (std::size_t{1} << cube.n); ++s)
    for (std::size_t c = 0; c < cube.n; ++c) {
      if ((s >> c) & 1) continue;
      int dk = cube.n_circles[s | (std::size_t{1} << c)] - cube.n_circles[s];
      CHECK(std::abs(dk) == 1);
    }
}

TEST_CASE("crossing cap is enforced") {
  InvariantCaps tight;
  tight.khovanov = 2;
  CHECK_THROWS_AS(khovanov_f2(from_dt("4 6 2"), tight), CrossingCapExceeded);
}
