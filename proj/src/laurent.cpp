#include "linkdet/laurent.hpp"

#include <sstream>

namespace linkdet {

namespace {

void append_term(std::ostringstream& out, bool first, const Int& c, const std::string& body) {
  Int a = c;
  if (first) {
    if (a < 0) {
      out << '-';
      a = -a;
    }
  } else {
    if (a < 0) {
      out << '-';
      a = -a;
    } else {
      out << '+';
    }
  }
  out << a.get_str() << '*' << body;
}

}  // namespace

LaurentPoly1 LaurentPoly1::constant(const Int& c, std::string var) {
  return monomial(c, 0, std::move(var));
}

LaurentPoly1 LaurentPoly1::monomial(const Int& c, long exp, std::string var) {
  LaurentPoly1 p(std::move(var));
  if (c != 0) p.terms_[exp] = c;
  return p;
}

Int LaurentPoly1::coeff(long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

long LaurentPoly1::min_exp() const { return terms_.begin()->first; }
long LaurentPoly1::max_exp() const { return terms_.rbegin()->first; }

void LaurentPoly1::set_coeff(long exp, const Int& c) {
  if (c == 0)
    terms_.erase(exp);
  else
    terms_[exp] = c;
}

void LaurentPoly1::check_var(const LaurentPoly1& o) const {
  if (var_ != o.var_)
    throw VariableMismatch("variable mismatch: " + var_ + " vs " + o.var_);
}

LaurentPoly1 LaurentPoly1::operator+(const LaurentPoly1& o) const {
  check_var(o);
  LaurentPoly1 r(var_);
  r.terms_ = terms_;
  for (const auto& [e, c] : o.terms_) {
    Int s = r.coeff(e) + c;
    r.set_coeff(e, s);
  }
  return r;
}

LaurentPoly1 LaurentPoly1::operator-(const LaurentPoly1& o) const { return *this + (-o); }

LaurentPoly1 LaurentPoly1::operator*(const LaurentPoly1& o) const {
  check_var(o);
  LaurentPoly1 r(var_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Int s = r.coeff(e1 + e2) + c1 * c2;
      r.set_coeff(e1 + e2, s);
    }
  return r;
}

LaurentPoly1 LaurentPoly1::operator-() const {
  LaurentPoly1 r(var_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly1 LaurentPoly1::scalar_mul(const Int& c) const {
  LaurentPoly1 r(var_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

LaurentPoly1 LaurentPoly1::shifted(long k) const {
  LaurentPoly1 r(var_);
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

LaurentPoly1 LaurentPoly1::reexpress(const std::string& new_var, long k, bool negate_var) const {
  LaurentPoly1 r(new_var);
  for (const auto& [e, c] : terms_) {
    Int v = c;
    if (negate_var && (e % 2 != 0)) v = -v;
    Int s = r.coeff(e * k) + v;
    r.set_coeff(e * k, s);
  }
  return r;
}

Int LaurentPoly1::evaluate_sign(int s) const {
  Int total = 0;
  for (const auto& [e, c] : terms_) {
    if (s == 1 || e % 2 == 0)
      total += c;
    else
      total -= c;
  }
  return total;
}

LaurentPoly1 LaurentPoly1::invert_var() const {
  LaurentPoly1 r(var_);
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

LaurentPoly1 LaurentPoly1::divide_exact(const LaurentPoly1& d) const {
  check_var(d);
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return LaurentPoly1(var_);
  // Shift both operands to ordinary polynomials; the unit var^k moves to the quotient.
  long shift = min_exp() - d.min_exp();
  LaurentPoly1 rem = shifted(-min_exp());
  LaurentPoly1 dd = d.shifted(-d.min_exp());
  LaurentPoly1 quot(var_);
  const long dtop = dd.max_exp();
  const Int dlead = dd.coeff(dtop);
  while (!rem.is_zero() && rem.max_exp() >= dtop) {
    long rtop = rem.max_exp();
    Int lead = rem.coeff(rtop);
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(), dlead.get_mpz_t());
    if (r != 0) throw std::domain_error("inexact polynomial division");
    LaurentPoly1 term = monomial(q, rtop - dtop, var_);
    quot = quot + term;
    rem = rem - term * dd;
  }
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return quot.shifted(shift);
}

std::string LaurentPoly1::canonical_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_term(out, first, c, var_ + "^" + std::to_string(e));
    first = false;
  }
  return out.str();
}

std::string LaurentPoly1::to_json() const {
  std::ostringstream out;
  out << "{\"var\":\"" << var_ << "\",\"terms\":[";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << ',';
    out << '[' << e << ",\"" << c.get_str() << "\"]";
    first = false;
  }
  out << "]}";
  return out.str();
}

LaurentPoly2 LaurentPoly2::constant(const Int& c, std::string v1, std::string v2) {
  return monomial(c, 0, 0, std::move(v1), std::move(v2));
}

LaurentPoly2 LaurentPoly2::monomial(const Int& c, long e1, long e2, std::string v1,
                                    std::string v2) {
  LaurentPoly2 p(std::move(v1), std::move(v2));
  if (c != 0) p.terms_[{e1, e2}] = c;
  return p;
}

Int LaurentPoly2::coeff(long e1, long e2) const {
  auto it = terms_.find({e1, e2});
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly2::set_coeff(long e1, long e2, const Int& c) {
  if (c == 0)
    terms_.erase({e1, e2});
  else
    terms_[{e1, e2}] = c;
}

void LaurentPoly2::check_var(const LaurentPoly2& o) const {
  if (var1_ != o.var1_ || var2_ != o.var2_)
    throw VariableMismatch("variable mismatch: (" + var1_ + "," + var2_ + ") vs (" + o.var1_ +
                           "," + o.var2_ + ")");
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
  check_var(o);
  LaurentPoly2 r(var1_, var2_);
  r.terms_ = terms_;
  for (const auto& [e, c] : o.terms_) {
    Int s = r.coeff(e.first, e.second) + c;
    r.set_coeff(e.first, e.second, s);
  }
  return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const { return *this + (-o); }

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
  check_var(o);
  LaurentPoly2 r(var1_, var2_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      long a = e1.first + e2.first, b = e1.second + e2.second;
      Int s = r.coeff(a, b) + c1 * c2;
      r.set_coeff(a, b, s);
    }
  return r;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r(var1_, var2_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly2 LaurentPoly2::scalar_mul(const Int& c) const {
  LaurentPoly2 r(var1_, var2_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

LaurentPoly2 LaurentPoly2::shifted(long k1, long k2) const {
  LaurentPoly2 r(var1_, var2_);
  for (const auto& [e, c] : terms_) r.terms_[{e.first + k1, e.second + k2}] = c;
  return r;
}

LaurentPoly1 LaurentPoly2::substitute_var1(long k, bool negate) const {
  LaurentPoly1 r(var2_);
  for (const auto& [e, c] : terms_) {
    Int v = c;
    if (negate && (e.first % 2 != 0)) v = -v;
    long exp = e.first * k + e.second;
    Int s = r.coeff(exp) + v;
    r.set_coeff(exp, s);
  }
  return r;
}

LaurentPoly1 LaurentPoly2::specialize_var2_sign(int s, const std::string& out_var) const {
  LaurentPoly1 r(out_var.empty() ? var1_ : out_var);
  for (const auto& [e, c] : terms_) {
    Int v = c;
    if (s == -1 && e.second % 2 != 0) v = -v;
    Int t = r.coeff(e.first) + v;
    r.set_coeff(e.first, t);
  }
  return r;
}

std::string LaurentPoly2::canonical_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_term(out, first, c,
                var1_ + "^" + std::to_string(e.first) + "*" + var2_ + "^" +
                    std::to_string(e.second));
    first = false;
  }
  return out.str();
}

std::string LaurentPoly2::to_json() const {
  std::ostringstream out;
  out << "{\"var\":[\"" << var1_ << "\",\"" << var2_ << "\"],\"terms\":[";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << ',';
    out << "[[" << e.first << ',' << e.second << "],\"" << c.get_str() << "\"]";
    first = false;
  }
  out << "]}";
  return out.str();
}

}  // namespace linkdet
