#include "linkdet/series.hpp"

#include "doctest.h"

using linkdet::BivariateSeries;
using linkdet::Rat;
using linkdet::TruncatedSeries;

TEST_CASE("geometric series reciprocal") {
  auto one = TruncatedSeries::constant(1, 4);
  auto z = TruncatedSeries::var(4);
  auto g = (one - z).reciprocal();
  for (std::size_t i = 0; i <= 4; ++i) CHECK(g[i] == 1);
}

TEST_CASE("composition") {
  auto one = TruncatedSeries::constant(1, 5);
  auto z = TruncatedSeries::var(5);
  auto f = z * (one - z).reciprocal();  // z + z^2 + ...
  auto g = z * z;
  auto c = f.compose(g);
  CHECK(c[0] == 0);
  CHECK(c[1] == 0);
  CHECK(c[2] == 1);
  CHECK(c[3] == 0);
  CHECK(c[4] == 1);
  CHECK(c[5] == 0);
  CHECK_THROWS_AS(f.compose(one), linkdet::CompositionNeedsZeroConstantTerm);
}

TEST_CASE("binomial square root of 1-4z") {
  auto one = TruncatedSeries::constant(1, 3);
  auto z = TruncatedSeries::var(3);
  auto s = linkdet::sqrt_binomial(one - z.scalar_mul(4));
  CHECK(s[0] == 1);
  CHECK(s[1] == -2);
  CHECK(s[2] == -2);
  CHECK(s[3] == -4);
  auto sq = s * s;
  CHECK(sq[0] == 1);
  CHECK(sq[1] == -4);
  CHECK(sq[2] == 0);
}

TEST_CASE("basic-template series starts at order 2 with counting coefficients") {
  auto bt = linkdet::bt_series(60);
  CHECK(bt[0] == 0);
  CHECK(bt[1] == 0);
  for (std::size_t i = 0; i <= 60; ++i) {
    CHECK(bt[i].get_den() == 1);
    CHECK(bt[i] >= 0);
  }
  // the smallest basic template has five slots
  for (std::size_t i = 2; i <= 4; ++i) CHECK(bt[i] == 0);
  CHECK(bt[5] == 1);
}

TEST_CASE("rational-template series shape") {
  auto rt = linkdet::rt_series(10, 10);
  CHECK(rt.at(0, 0) == 0);
  CHECK(rt.at(0, 1) == 1);
  CHECK(rt.at(1, 0) == 1);
  for (std::size_t m = 0; m <= 10; ++m)
    for (std::size_t n = 0; n <= 10; ++n) {
      CHECK(rt.at(m, n).get_den() == 1);
      CHECK(rt.at(m, n) >= 0);
    }
}

TEST_CASE("permutation-reduced rational templates are dominated by the full count") {
  auto rt = linkdet::rt_series(10, 10);
  auto rtp = linkdet::rtp_series(10, 10);
  CHECK(rtp.at(0, 0) == 0);
  bool strict_somewhere = false;
  for (std::size_t m = 0; m <= 10; ++m)
    for (std::size_t n = 0; n <= 10; ++n) {
      CHECK(rtp.at(m, n) >= 0);
      CHECK(rtp.at(m, n) <= rt.at(m, n));
      if (rtp.at(m, n) < rt.at(m, n)) strict_somewhere = true;
    }
  CHECK(strict_somewhere);
}

TEST_CASE("univariate slot substitution matches the bivariate expansion") {
  auto rt = linkdet::rt_series(8, 8);
  auto z = TruncatedSeries::var(8);
  auto g = z * z + z * z * z;  // toy argument with valuation 2
  auto direct = linkdet::rt_apply(g);
  TruncatedSeries expected(8);
  for (std::size_t m = 0; m <= 8; ++m) {
    TruncatedSeries gm = TruncatedSeries::constant(1, 8);
    for (std::size_t k = 0; k < m; ++k) gm = gm * g;
    for (std::size_t n = 0; n <= 8; ++n) {
      if (rt.at(m, n) == 0) continue;
      for (std::size_t d = 0; d + n <= 8; ++d) expected[d + n] += rt.at(m, n) * gm[d];
    }
  }
  for (std::size_t i = 0; i <= 8; ++i) CHECK(direct[i] == expected[i]);
}

TEST_CASE("alternating-template fixed point is a counting series") {
  auto at = linkdet::solve_at(40);
  CHECK(at[0] == 0);
  for (std::size_t i = 0; i <= 40; ++i) {
    CHECK(at[i].get_den() == 1);
    CHECK(at[i] >= 0);
  }
  auto at2 = linkdet::solve_at(80);
  for (std::size_t i = 0; i <= 40; ++i) CHECK(at[i] == at2[i]);
}

TEST_CASE("growth constants") {
  auto c = linkdet::singularity_constants();
  CHECK(c.inv_z1 > 6.1479);
  CHECK(c.inv_z1 < 6.1480);
  CHECK(c.inv_z2 > 6.1432);
  CHECK(c.inv_z2 < 6.1433);
  // quadratic-formula cross-check: (40*inv_z1 - 101)^2 == 21001
  double t = 40 * c.inv_z1 - 101;
  CHECK(t * t == doctest::Approx(21001).epsilon(1e-12));
  CHECK(c.inv_z1_decimal.substr(0, 7) == "6.14793");
  CHECK(c.inv_z2_decimal.substr(0, 7) == "6.14327");
}

TEST_CASE("sandwich and decay") {
  CHECK(linkdet::sandwich_gamma(2, 4, 0.5) == doctest::Approx(2.5 / 3.5));
  CHECK_THROWS_AS(linkdet::sandwich_gamma(1, 1.1, 0.2), linkdet::SlackTooLarge);
  auto d = linkdet::decay_bound();
  CHECK(d.certified);
  CHECK(d.delta < 0.9993);
  CHECK(d.delta > 0.999);
  CHECK(d.sup_ratio > 0.999);
  CHECK(d.sup_ratio < 0.9993);
}

TEST_CASE("density curves") {
  std::vector<mpz_class> amb{4, 16, 64}, sub{2, 4, 8};
  auto c = linkdet::density_curve(amb, sub);
  CHECK(c.pointwise[0] == Rat(1, 2));
  CHECK(c.pointwise[1] == Rat(1, 4));
  CHECK(c.pointwise[2] == Rat(1, 8));
  CHECK(c.cumulative[2] == Rat(1, 6));
  std::vector<mpz_class> same{3, 5};
  auto eq = linkdet::density_curve(same, same);
  CHECK(eq.pointwise[0] == 1);
  CHECK(eq.cumulative[1] == 1);
  CHECK_THROWS_AS(linkdet::density_curve(amb, same), linkdet::LengthMismatch);
}
