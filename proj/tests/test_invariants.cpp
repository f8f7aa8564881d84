#include "linkdet/invariants.hpp"

#include <cstdlib>

#include "doctest.h"
#include "linkdet/diagram.hpp"

using namespace linkdet;

namespace linkdet::detail {
GoeritzData goeritz_colored(const LinkDiagram& d, bool flip_colors);
}

namespace {

LinkDiagram from_dt(const std::string& text) { return dt_to_pd(parse_dt(text)); }

int sig_colored(const LinkDiagram& d, bool flip) {
  GoeritzData g = detail::goeritz_colored(d, flip);
  return symmetric_signature(g.matrix) - g.correction;
}

}  // namespace

TEST_CASE("bracket anchors: unknot and kinks") {
  CHECK(kauffman_bracket(parse_pd("")).canonical_string() == "1*A^0");
  CHECK(kauffman_bracket(parse_pd("X(2,2,1,1)")).canonical_string() == "-1*A^3");
  CHECK(kauffman_bracket(parse_pd("X(1,2,2,1)")).canonical_string() == "-1*A^-3");
}

TEST_CASE("jones normalization kills kinks") {
  auto one = LaurentPoly1::constant(1, "t");
  CHECK(jones(parse_pd("")) == one);
  CHECK(jones(parse_pd("X(2,2,1,1)")) == one);
  CHECK(jones(parse_pd("X(1,2,2,1)")) == one);
}

TEST_CASE("jones anchors") {
  CHECK(jones(from_dt("4 6 2")).canonical_string() == "1*t^1+1*t^3-1*t^4");
  CHECK(jones(mirror(from_dt("4 6 2"))).canonical_string() == "-1*t^-4+1*t^-3+1*t^-1");
  CHECK(jones(from_dt("4 6 8 2")).canonical_string() ==
        "1*t^-2-1*t^-1+1*t^0-1*t^1+1*t^2");
  CHECK(jones(from_dt("6 8 10 2 4")).canonical_string() ==
        "1*t^2+1*t^4-1*t^5+1*t^6-1*t^7");
}

TEST_CASE("jones of a link lands in the half-integer variable") {
  auto hopf = parse_pd("X(1,3,2,4);X(3,1,4,2)");
  auto v = jones(hopf);
  CHECK(v.var() == "r");
  // V = -t^(1/2) - t^(5/2) for the positive Hopf link, mirrored otherwise
  if (hopf.writhe > 0)
    CHECK(v.canonical_string() == "-1*r^1-1*r^5");
  else
    CHECK(v.canonical_string() == "-1*r^-5-1*r^-1");
}

TEST_CASE("jones mirror symmetry and unit evaluation") {
  for (const char* dt : {"4 6 2", "4 6 8 2", "4 8 10 2 6", "6 8 10 2 4",
                         "4 8 -12 2 -14 -16 6 -10"}) {
    auto d = from_dt(dt);
    auto v = jones(d);
    CHECK(v.evaluate_sign(1) == 1);
    CHECK(jones(mirror(d)) == v.invert_var());
  }
}

TEST_CASE("alexander anchors") {
  CHECK(alexander(parse_pd("")).canonical_string() == "1*t^0");
  CHECK(alexander(from_dt("4 6 2")).canonical_string() == "1*t^-1-1*t^0+1*t^1");
  CHECK(alexander(from_dt("4 6 8 2")).canonical_string() == "-1*t^-1+3*t^0-1*t^1");
  CHECK(alexander(from_dt("6 8 10 2 4")).canonical_string() ==
        "1*t^-2-1*t^-1+1*t^0-1*t^1+1*t^2");
  CHECK_THROWS_AS(alexander(parse_pd("X(1,3,2,4);X(3,1,4,2)")), MultiComponentUnsupported);
}

TEST_CASE("alexander is mirror-invariant and symmetric") {
  for (const char* dt : {"4 6 2", "4 6 8 2", "4 8 10 2 6", "8 10 12 14 2 4 6",
                         "4 8 -12 2 -14 -16 6 -10"}) {
    auto d = from_dt(dt);
    auto a = alexander(d);
    CHECK(a == a.invert_var());
    CHECK(a.evaluate_sign(1) == 1);
    CHECK(alexander(mirror(d)) == a);
  }
}

TEST_CASE("signature anchors") {
  CHECK(signature(parse_pd("")) == 0);
  CHECK(signature(from_dt("4 6 2")) == -2);
  CHECK(signature(from_dt("4 6 8 2")) == 0);
  CHECK(signature(from_dt("6 8 10 2 4")) == -4);
  CHECK(signature(from_dt("8 10 12 14 2 4 6")) == -6);
}

TEST_CASE("signature is independent of the checkerboard coloring") {
  for (const char* dt : {"4 6 2", "4 6 8 2", "4 8 10 2 6", "6 8 10 2 4",
                         "4 8 10 12 2 6", "4 8 -12 2 -14 -16 6 -10"}) {
    auto d = from_dt(dt);
    int s = sig_colored(d, false);
    CHECK(sig_colored(d, true) == s);
    CHECK(signature(mirror(d)) == -s);
  }
}

TEST_CASE("determinant and double-cover homology anchors") {
  CHECK(determinant(parse_pd("")) == 1);
  CHECK(dbc_homology(parse_pd("")).empty());
  CHECK(determinant(from_dt("4 6 2")) == 3);
  CHECK(determinant(from_dt("4 6 8 2")) == 5);
  CHECK(determinant(from_dt("6 8 10 2 4")) == 5);
  CHECK(determinant(from_dt("8 10 12 14 2 4 6")) == 7);
  CHECK(dbc_homology(from_dt("4 6 2")) == std::vector<Int>{3});
  CHECK(dbc_homology(from_dt("4 6 8 2")) == std::vector<Int>{5});
  CHECK(dbc_homology(from_dt("6 8 10 2 4")) == std::vector<Int>{5});
}

TEST_CASE("determinant agrees with |Delta(-1)| and |V(-1)|") {
  for (const char* dt : {"4 6 2", "4 6 8 2", "4 8 10 2 6", "6 8 10 2 4",
                         "4 8 10 12 2 6", "8 10 12 14 2 4 6",
                         "4 8 -12 2 -14 -16 6 -10"}) {
    auto d = from_dt(dt);
    Int det = determinant(d);
    CHECK(det > 0);
    Int da = alexander(d).evaluate_sign(-1);
    Int dv = jones(d).evaluate_sign(-1);
    CHECK((da >= 0 ? da : -da) == det);
    CHECK((dv >= 0 ? dv : -dv) == det);
    // sigma and det are congruent mod 4: det = 1 mod 4 iff sigma = 0 mod 4
    int s = signature(d);
    CHECK(((s % 4 + 4) % 4 == 0) == (det % 4 == 1));
    // det is the product of the homology invariant factors
    Int prod = 1;
    for (const auto& f : dbc_homology(d)) prod *= f;
    CHECK(prod == det);
  }
}

TEST_CASE("homflypt anchors") {
  CHECK(homflypt(parse_pd("")).canonical_string() == "1*a^0*q^0");
  CHECK(homflypt(from_dt("4 6 2")).canonical_string() ==
        "-1*a^-4*q^0+1*a^-2*q^-2+1*a^-2*q^2");
  CHECK(homflypt(from_dt("4 6 8 2")).canonical_string() ==
        "1*a^-2*q^0-1*a^0*q^-2+1*a^0*q^0-1*a^0*q^2+1*a^2*q^0");
}

TEST_CASE("homflypt of the positive Hopf link, times one smoothing factor") {
  auto hopf = parse_pd("X(1,3,2,4);X(3,1,4,2)");
  if (hopf.writhe < 0) hopf = mirror(hopf);
  auto p = homflypt(hopf);
  // z*(a^-2*(a - a^-1)/z + a^-1*z) with z = q - q^-1
  CHECK(p.canonical_string() ==
        "-1*a^-3*q^0+1*a^-1*q^-2-1*a^-1*q^0+1*a^-1*q^2");
}

TEST_CASE("homflypt mirror symmetry swaps a and a^-1 with a sign pattern") {
  // P(mirror)(a, q) = P(a^-1, q^-1); our coefficients are symmetric in q
  for (const char* dt : {"4 6 2", "4 6 8 2", "6 8 10 2 4"}) {
    auto d = from_dt(dt);
    auto p = homflypt(d);
    auto pm = homflypt(mirror(d));
    LaurentPoly2 flipped("a", "q");
    for (const auto& [e, c] : p.terms()) flipped.set_coeff(-e.first, -e.second, c);
    CHECK(pm == flipped);
  }
}

TEST_CASE("sl_n specializations line up with jones and alexander") {
  for (const char* dt : {"4 6 2", "4 6 8 2", "4 8 10 2 6", "6 8 10 2 4",
                         "4 8 -12 2 -14 -16 6 -10"}) {
    auto d = from_dt(dt);
    // sl_2 is jones with t -> q^-2
    CHECK(sl_n(d, 2) == jones(d).reexpress("q", -2, false));
    // a -> q^0 = 1 gives alexander with t -> q^2
    CHECK(sl_n(d, 0) == alexander(d).reexpress("q", 2, false));
    // sl_1 is trivial
    CHECK(sl_n(d, 1) == LaurentPoly1::constant(1, "q"));
  }
}

TEST_CASE("crossing caps are enforced") {
  LinkDiagram big;
  // chain of 17 positive kinks, disconnected: cap check fires first
  for (int i = 0; i < 17; ++i)
    big.crossings.push_back({{4 * i + 2, 4 * i + 2, 4 * i + 1, 4 * i + 1}, 1});
  big.n_components = 17;
  big.writhe = 17;
  CHECK_THROWS_AS(kauffman_bracket(big), CrossingCapExceeded);
  InvariantCaps tight;
  tight.homflypt = 2;
  CHECK_THROWS_AS(homflypt(from_dt("4 6 2"), tight), CrossingCapExceeded);
}

TEST_CASE("symmetric matrix helpers") {
  std::vector<std::vector<Int>> m = {{2, 1}, {1, 2}};
  CHECK(symmetric_det(m) == 3);
  CHECK(symmetric_signature(m) == 2);
  CHECK(smith_invariant_factors(m) == std::vector<Int>{1, 3});
  std::vector<std::vector<Int>> z = {{0, 1}, {1, 0}};
  CHECK(symmetric_det(z) == -1);
  CHECK(symmetric_signature(z) == 0);
  std::vector<std::vector<Int>> s = {{0, 2}, {2, 0}};
  CHECK(smith_invariant_factors(s) == std::vector<Int>{2, 2});
}
