#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace linkdet {

using Rat = mpq_class;

struct ReciprocalNeedsUnitConstant : std::runtime_error {
  ReciprocalNeedsUnitConstant() : std::runtime_error("reciprocal needs nonzero constant term") {}
};
struct CompositionNeedsZeroConstantTerm : std::runtime_error {
  CompositionNeedsZeroConstantTerm()
      : std::runtime_error("composition needs zero constant term") {}
};
struct SqrtNeedsUnitConstant : std::runtime_error {
  SqrtNeedsUnitConstant() : std::runtime_error("square root needs constant term 1") {}
};
struct BranchSelectionFailed : std::runtime_error {
  BranchSelectionFailed() : std::runtime_error("no quadratic branch yields a counting series") {}
};
struct NoStabilization : std::runtime_error {
  NoStabilization() : std::runtime_error("fixed-point iteration did not stabilize") {}
};
struct SlackTooLarge : std::runtime_error {
  SlackTooLarge() : std::runtime_error("need alpha + epsilon < beta - epsilon") {}
};
struct LengthMismatch : std::runtime_error {
  LengthMismatch() : std::runtime_error("sequence lengths differ") {}
};

// Power series in one variable truncated at a fixed order, exact rational coefficients.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
  TruncatedSeries(std::size_t order, std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rat& operator[](std::size_t i) const { return coeffs_[i]; }
  Rat& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  static TruncatedSeries var(std::size_t order);  // z
  static TruncatedSeries constant(const Rat& c, std::size_t order);

  TruncatedSeries truncated(std::size_t new_order) const;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator-() const;
  bool operator==(const TruncatedSeries& o) const = default;

  TruncatedSeries scalar_mul(const Rat& c) const;
  TruncatedSeries reciprocal() const;
  // sqrt of a series with constant term 1
  TruncatedSeries sqrt1() const;
  // f(g) for g with g(0) = 0
  TruncatedSeries compose(const TruncatedSeries& g) const;

 private:
  std::vector<Rat> coeffs_;  // coeffs_[n] is the z^n coefficient
};

// sqrt(1 + u) for u = s - 1; named for its use on binomial arguments like 1 - 4z.
TruncatedSeries sqrt_binomial(const TruncatedSeries& s);

// Power series in y and z, truncated at orders (M, N).
class BivariateSeries {
 public:
  BivariateSeries(std::size_t order_y, std::size_t order_z)
      : coeffs_(order_y + 1, std::vector<Rat>(order_z + 1)) {}

  std::size_t order_y() const { return coeffs_.size() - 1; }
  std::size_t order_z() const { return coeffs_[0].size() - 1; }
  const Rat& at(std::size_t m, std::size_t n) const { return coeffs_[m][n]; }
  Rat& at(std::size_t m, std::size_t n) { return coeffs_[m][n]; }

  static BivariateSeries var_y(std::size_t my, std::size_t nz);
  static BivariateSeries var_z(std::size_t my, std::size_t nz);
  static BivariateSeries constant(const Rat& c, std::size_t my, std::size_t nz);

  BivariateSeries operator+(const BivariateSeries& o) const;
  BivariateSeries operator-(const BivariateSeries& o) const;
  BivariateSeries operator*(const BivariateSeries& o) const;
  BivariateSeries operator-() const;
  bool operator==(const BivariateSeries& o) const = default;

  BivariateSeries scalar_mul(const Rat& c) const;
  BivariateSeries reciprocal() const;
  BivariateSeries sqrt1() const;

 private:
  std::vector<std::vector<Rat>> coeffs_;
};

// Generating function of basic templates; integer coefficients, valuation 2.
TruncatedSeries bt_series(std::size_t order);

// Generating function of rational templates by slots (y) and crossings (z).
BivariateSeries rt_series(std::size_t order_y, std::size_t order_z);

// Rational templates counted up to summand permutation; series root of a quadratic,
// branch fixed by nonnegativity of the leading coefficients.
BivariateSeries rtp_series(std::size_t order_y, std::size_t order_z);

// Substitute a univariate series with zero constant term into the y slot of rt.
TruncatedSeries rt_apply(const TruncatedSeries& g);

// Fixed point of f -> rt(bt(f), z) with f(0) = 0.
TruncatedSeries solve_at(std::size_t order);

struct SingularityConstants {
  // positive roots of 135 z^2 + 101 z - 20 and 145530 z^2 + 109417 z - 21667
  std::string inv_z1_surd;     // "(sqrt(21001)+101)/40"
  std::string inv_z2_surd;     // "7*(15631+sqrt(501732121))/43334"
  std::string inv_z1_decimal;  // 15 significant digits
  std::string inv_z2_decimal;
  double inv_z1;
  double inv_z2;
};

SingularityConstants singularity_constants();

double sandwich_gamma(double alpha, double beta, double epsilon);

struct DecayBound {
  Rat delta_rational;  // 61433/61479
  double delta;
  bool certified;       // delta < 0.9993, checked exactly
  double sup_ratio;     // inv_z2 / inv_z1
};

DecayBound decay_bound();

struct DensityCurve {
  std::vector<Rat> pointwise;
  std::vector<Rat> cumulative;
};

DensityCurve density_curve(const std::vector<mpz_class>& counts_ambient,
                           const std::vector<mpz_class>& counts_sub);

}  // namespace linkdet
