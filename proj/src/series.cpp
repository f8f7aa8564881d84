#include "linkdet/series.hpp"

#include <algorithm>
#include <sstream>

namespace linkdet {

TruncatedSeries TruncatedSeries::var(std::size_t order) {
  TruncatedSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::constant(const Rat& c, std::size_t order) {
  TruncatedSeries s(order);
  s[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
  TruncatedSeries s(new_order);
  for (std::size_t i = 0; i <= std::min(new_order, order()); ++i) s[i] = coeffs_[i];
  return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  std::size_t n = std::min(order(), o.order());
  TruncatedSeries s(n);
  for (std::size_t i = 0; i <= n; ++i) s[i] = coeffs_[i] + o.coeffs_[i];
  return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  std::size_t n = std::min(order(), o.order());
  TruncatedSeries s(n);
  for (std::size_t i = 0; i <= n; ++i) s[i] = coeffs_[i] - o.coeffs_[i];
  return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  std::size_t n = std::min(order(), o.order());
  TruncatedSeries s(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (o.coeffs_[j] == 0) continue;
      s[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s(order());
  for (std::size_t i = 0; i <= order(); ++i) s[i] = -coeffs_[i];
  return s;
}

TruncatedSeries TruncatedSeries::scalar_mul(const Rat& c) const {
  TruncatedSeries s(order());
  for (std::size_t i = 0; i <= order(); ++i) s[i] = coeffs_[i] * c;
  return s;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (coeffs_[0] == 0) throw ReciprocalNeedsUnitConstant();
  TruncatedSeries r(order());
  r[0] = 1 / coeffs_[0];
  for (std::size_t n = 1; n <= order(); ++n) {
    Rat acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * r[n - k];
    r[n] = -acc / coeffs_[0];
  }
  return r;
}

TruncatedSeries TruncatedSeries::sqrt1() const {
  if (coeffs_[0] != 1) throw SqrtNeedsUnitConstant();
  TruncatedSeries s(order());
  s[0] = 1;
  for (std::size_t n = 1; n <= order(); ++n) {
    Rat acc = 0;
    for (std::size_t k = 1; k < n; ++k) acc += s[k] * s[n - k];
    s[n] = (coeffs_[n] - acc) / 2;
  }
  return s;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& g) const {
  if (g.coeffs_[0] != 0) throw CompositionNeedsZeroConstantTerm();
  std::size_t n = std::min(order(), g.order());
  TruncatedSeries res = constant(coeffs_[order()], n);
  for (std::size_t i = order(); i-- > 0;) {
    res = res * g.truncated(n);
    res[0] += coeffs_[i];
  }
  return res;
}

TruncatedSeries sqrt_binomial(const TruncatedSeries& s) { return s.sqrt1(); }

BivariateSeries BivariateSeries::var_y(std::size_t my, std::size_t nz) {
  BivariateSeries s(my, nz);
  if (my >= 1) s.at(1, 0) = 1;
  return s;
}

BivariateSeries BivariateSeries::var_z(std::size_t my, std::size_t nz) {
  BivariateSeries s(my, nz);
  if (nz >= 1) s.at(0, 1) = 1;
  return s;
}

BivariateSeries BivariateSeries::constant(const Rat& c, std::size_t my, std::size_t nz) {
  BivariateSeries s(my, nz);
  s.at(0, 0) = c;
  return s;
}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& o) const {
  std::size_t my = std::min(order_y(), o.order_y()), nz = std::min(order_z(), o.order_z());
  BivariateSeries s(my, nz);
  for (std::size_t m = 0; m <= my; ++m)
    for (std::size_t n = 0; n <= nz; ++n) s.at(m, n) = coeffs_[m][n] + o.coeffs_[m][n];
  return s;
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& o) const {
  return *this + (-o);
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& o) const {
  std::size_t my = std::min(order_y(), o.order_y()), nz = std::min(order_z(), o.order_z());
  BivariateSeries s(my, nz);
  for (std::size_t m1 = 0; m1 <= my; ++m1)
    for (std::size_t n1 = 0; n1 <= nz; ++n1) {
      if (coeffs_[m1][n1] == 0) continue;
      for (std::size_t m2 = 0; m1 + m2 <= my; ++m2)
        for (std::size_t n2 = 0; n1 + n2 <= nz; ++n2) {
          if (o.coeffs_[m2][n2] == 0) continue;
          s.at(m1 + m2, n1 + n2) += coeffs_[m1][n1] * o.coeffs_[m2][n2];
        }
    }
  return s;
}

BivariateSeries BivariateSeries::operator-() const {
  BivariateSeries s(order_y(), order_z());
  for (std::size_t m = 0; m <= order_y(); ++m)
    for (std::size_t n = 0; n <= order_z(); ++n) s.at(m, n) = -coeffs_[m][n];
  return s;
}

BivariateSeries BivariateSeries::scalar_mul(const Rat& c) const {
  BivariateSeries s(order_y(), order_z());
  for (std::size_t m = 0; m <= order_y(); ++m)
    for (std::size_t n = 0; n <= order_z(); ++n) s.at(m, n) = coeffs_[m][n] * c;
  return s;
}

namespace {

std::size_t newton_steps(std::size_t my, std::size_t nz) {
  std::size_t steps = 1, reach = 1;
  while (reach < my + nz + 1) {
    reach *= 2;
    ++steps;
  }
  return steps + 1;
}

}  // namespace

BivariateSeries BivariateSeries::reciprocal() const {
  if (coeffs_[0][0] == 0) throw ReciprocalNeedsUnitConstant();
  BivariateSeries r = constant(1 / coeffs_[0][0], order_y(), order_z());
  BivariateSeries two = constant(2, order_y(), order_z());
  for (std::size_t i = 0, s = newton_steps(order_y(), order_z()); i < s; ++i)
    r = r * (two - *this * r);
  return r;
}

BivariateSeries BivariateSeries::sqrt1() const {
  if (coeffs_[0][0] != 1) throw SqrtNeedsUnitConstant();
  BivariateSeries x = constant(1, order_y(), order_z());
  for (std::size_t i = 0, s = newton_steps(order_y(), order_z()); i < s; ++i)
    x = (x + *this * x.reciprocal()).scalar_mul(Rat(1, 2));
  return x;
}

namespace {

// Evaluate the basic-template closed form at an argument series f with f(0) = 0.
TruncatedSeries bt_apply(const TruncatedSeries& f) {
  std::size_t n = f.order();
  auto one = TruncatedSeries::constant(1, n);
  auto u = one - f.scalar_mul(4);                       // 1 - 4f
  auto pow32 = u * u.sqrt1();                           // (1 - 4f)^(3/2)
  auto f2 = f * f;
  auto f3 = f2 * f;
  auto f4 = f3 * f;
  auto f5 = f4 * f;
  auto num = pow32 * (f + one) - f5.scalar_mul(2) - f4.scalar_mul(10) - f3.scalar_mul(10) +
             f.scalar_mul(5) - one;
  auto fp2 = f + TruncatedSeries::constant(2, n);
  auto den = (f + one) * fp2 * fp2 * fp2;
  return num * den.reciprocal().scalar_mul(Rat(1, 2));
}

}  // namespace

TruncatedSeries bt_series(std::size_t order) { return bt_apply(TruncatedSeries::var(order)); }

TruncatedSeries rt_apply(const TruncatedSeries& g) {
  std::size_t n = g.order();
  auto one = TruncatedSeries::constant(1, n);
  auto z = TruncatedSeries::var(n);
  auto inner = (one - z + g) * (one - z + g) -
               (z * z - g * z + g).scalar_mul(8) * (one - z).reciprocal();
  return (one + z - g - inner.sqrt1()).scalar_mul(Rat(1, 2));
}

BivariateSeries rt_series(std::size_t order_y, std::size_t order_z) {
  auto one = BivariateSeries::constant(1, order_y, order_z);
  auto y = BivariateSeries::var_y(order_y, order_z);
  auto z = BivariateSeries::var_z(order_y, order_z);
  auto inner = (one - z + y) * (one - z + y) -
               (z * z - y * z + y).scalar_mul(8) * (one - z).reciprocal();
  return (one + z - y - inner.sqrt1()).scalar_mul(Rat(1, 2));
}

BivariateSeries rtp_series(std::size_t order_y, std::size_t order_z) {
  auto one = BivariateSeries::constant(1, order_y, order_z);
  auto y = BivariateSeries::var_y(order_y, order_z);
  auto z = BivariateSeries::var_z(order_y, order_z);
  auto ym1 = y - one;
  auto a = -ym1.scalar_mul(2);
  auto b = ym1 * (y.scalar_mul(3) - z + one);
  auto c = -(y * y * y) + y * y * (z + one) + y + z * z * (one - z).reciprocal();
  auto disc = b * b - a * c.scalar_mul(4);
  auto inv2a = a.scalar_mul(2).reciprocal();
  for (int sign : {-1, 1}) {
    auto root = (-b + disc.sqrt1().scalar_mul(sign)) * inv2a;
    bool counting = root.at(0, 0) == 0;
    for (std::size_t m = 0; m <= std::min<std::size_t>(root.order_y(), 10) && counting; ++m)
      for (std::size_t n = 0; n <= std::min<std::size_t>(root.order_z(), 10) && counting; ++n)
        if (root.at(m, n) < 0) counting = false;
    if (counting) return root;
  }
  throw BranchSelectionFailed();
}

TruncatedSeries solve_at(std::size_t order) {
  // One fixed-point pass gains at least one correct order, so grow the
  // truncation with the iteration count instead of iterating at full width.
  TruncatedSeries f = TruncatedSeries::var(std::max<std::size_t>(order, 1));
  if (order <= 1) return f.truncated(order);
  for (std::size_t j = 2; j <= order; ++j) {
    TruncatedSeries cur = f.truncated(j);
    f = rt_apply(bt_apply(cur));
    // keep width `order` available for the final check
    TruncatedSeries widened(order);
    for (std::size_t i = 0; i <= j; ++i) widened[i] = f[i];
    f = widened;
  }
  TruncatedSeries again = rt_apply(bt_apply(f));
  if (!(again == f)) throw NoStabilization();
  return f;
}

namespace {

std::string mpf_to_sig_digits(const mpf_class& v, std::size_t digits) {
  mp_exp_t exp;
  std::string mant = v.get_str(exp, 10, digits);
  std::ostringstream out;
  bool neg = !mant.empty() && mant[0] == '-';
  if (neg) mant = mant.substr(1);
  if (neg) out << '-';
  if (exp >= 1 && static_cast<std::size_t>(exp) <= mant.size()) {
    out << mant.substr(0, exp);
    if (static_cast<std::size_t>(exp) < mant.size()) out << '.' << mant.substr(exp);
  } else {
    out << "0." << std::string(exp < 0 ? -exp : 0, '0') << mant;
  }
  return out.str();
}

}  // namespace

SingularityConstants singularity_constants() {
  const int prec = 256;
  mpf_class s1(21001, prec), s2(501732121, prec);
  s1 = sqrt(s1);
  s2 = sqrt(s2);
  mpf_class w1 = (s1 + 101) / 40;
  mpf_class w2 = (s2 + 15631) * 7 / 43334;

  SingularityConstants c;
  c.inv_z1_surd = "(sqrt(21001)+101)/40";
  c.inv_z2_surd = "7*(15631+sqrt(501732121))/43334";
  c.inv_z1_decimal = mpf_to_sig_digits(w1, 15);
  c.inv_z2_decimal = mpf_to_sig_digits(w2, 15);
  c.inv_z1 = w1.get_d();
  c.inv_z2 = w2.get_d();

  // Exact bracketing.
  // inv_z1 > 6.1479 iff sqrt(21001) > 144.916 iff 21001*1000^2 > 144916^2.
  if (!(mpz_class(21001) * 1000000 > mpz_class(144916) * 144916))
    throw std::logic_error("growth constant lower bound failed");
  // inv_z2 < 6.1433 iff 70000*sqrt(501732121) < 61433*43334 - 15631*70000.
  mpz_class rhs = mpz_class(61433) * 43334 - mpz_class(15631) * 70000;
  if (!(mpz_class(501732121) * 70000 * 70000 < rhs * rhs))
    throw std::logic_error("growth constant upper bound failed");
  return c;
}

double sandwich_gamma(double alpha, double beta, double epsilon) {
  if (!(alpha + epsilon < beta - epsilon)) throw SlackTooLarge();
  return (alpha + epsilon) / (beta - epsilon);
}

DecayBound decay_bound() {
  DecayBound d;
  d.delta_rational = Rat(61433, 61479);
  d.delta = d.delta_rational.get_d();
  d.certified = mpz_class(61433) * 10000 < mpz_class(9993) * 61479;
  auto c = singularity_constants();
  d.sup_ratio = c.inv_z2 / c.inv_z1;
  return d;
}

DensityCurve density_curve(const std::vector<mpz_class>& counts_ambient,
                           const std::vector<mpz_class>& counts_sub) {
  if (counts_ambient.size() != counts_sub.size()) throw LengthMismatch();
  DensityCurve out;
  mpz_class amb_sum = 0, sub_sum = 0;
  for (std::size_t i = 0; i < counts_ambient.size(); ++i) {
    Rat p(counts_sub[i], counts_ambient[i]);
    p.canonicalize();
    out.pointwise.push_back(p);
    amb_sum += counts_ambient[i];
    sub_sum += counts_sub[i];
    Rat cum(sub_sum, amb_sum);
    cum.canonicalize();
    out.cumulative.push_back(cum);
  }
  return out;
}

}  // namespace linkdet
