#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace linkdet {

using Int = mpz_class;

struct VariableMismatch : std::runtime_error {
  explicit VariableMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Exact Laurent polynomial in one variable with bigint coefficients.
// Zero coefficients are never stored; equal values have equal term maps.
class LaurentPoly1 {
 public:
  explicit LaurentPoly1(std::string var = "q") : var_(std::move(var)) {}

  static LaurentPoly1 constant(const Int& c, std::string var = "q");
  static LaurentPoly1 monomial(const Int& c, long exp, std::string var = "q");

  const std::string& var() const { return var_; }
  const std::map<long, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(long exp) const;
  long min_exp() const;  // requires nonzero
  long max_exp() const;

  void set_coeff(long exp, const Int& c);

  LaurentPoly1 operator+(const LaurentPoly1& o) const;
  LaurentPoly1 operator-(const LaurentPoly1& o) const;
  LaurentPoly1 operator*(const LaurentPoly1& o) const;
  LaurentPoly1 operator-() const;
  bool operator==(const LaurentPoly1& o) const = default;

  LaurentPoly1 scalar_mul(const Int& c) const;
  LaurentPoly1 shifted(long k) const;  // multiply by var^k

  // x -> x^k in a new variable; with negate_var, x -> -(new^k).
  LaurentPoly1 reexpress(const std::string& new_var, long k, bool negate_var = false) const;
  // Substitute x -> s (s = +1 or -1).
  Int evaluate_sign(int s) const;
  // p(x) -> p(1/x).
  LaurentPoly1 invert_var() const;

  // Exact division; throws std::domain_error when the remainder is nonzero.
  LaurentPoly1 divide_exact(const LaurentPoly1& d) const;

  std::string canonical_string() const;
  std::string to_json() const;

 private:
  std::string var_;
  std::map<long, Int> terms_;
  void check_var(const LaurentPoly1& o) const;
};

// Exact Laurent polynomial in two variables (exponent pairs).
class LaurentPoly2 {
 public:
  using Exp = std::pair<long, long>;

  explicit LaurentPoly2(std::string var1 = "a", std::string var2 = "q")
      : var1_(std::move(var1)), var2_(std::move(var2)) {}

  static LaurentPoly2 constant(const Int& c, std::string v1 = "a", std::string v2 = "q");
  static LaurentPoly2 monomial(const Int& c, long e1, long e2, std::string v1 = "a",
                               std::string v2 = "q");

  const std::string& var1() const { return var1_; }
  const std::string& var2() const { return var2_; }
  const std::map<Exp, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(long e1, long e2) const;
  void set_coeff(long e1, long e2, const Int& c);

  LaurentPoly2 operator+(const LaurentPoly2& o) const;
  LaurentPoly2 operator-(const LaurentPoly2& o) const;
  LaurentPoly2 operator*(const LaurentPoly2& o) const;
  LaurentPoly2 operator-() const;
  bool operator==(const LaurentPoly2& o) const = default;

  LaurentPoly2 scalar_mul(const Int& c) const;
  LaurentPoly2 shifted(long k1, long k2) const;

  // var1 -> sign * var2^k, recanonicalized into one variable.
  LaurentPoly1 substitute_var1(long k, bool negate = false) const;
  // var2 -> s with s = +1 or -1, leaving a polynomial in var1.
  LaurentPoly1 specialize_var2_sign(int s, const std::string& out_var = "") const;

  std::string canonical_string() const;
  std::string to_json() const;

 private:
  std::string var1_, var2_;
  std::map<Exp, Int> terms_;
  void check_var(const LaurentPoly2& o) const;
};

}  // namespace linkdet
