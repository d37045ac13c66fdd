#include "apollonius/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace apo {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  std::string s(text);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty()) throw std::invalid_argument("malformed fraction: " + s);
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
      throw std::invalid_argument("malformed fraction: " + s);
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
      throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (frac.find_first_not_of("0123456789") != std::string::npos || frac.empty())
      throw std::invalid_argument("malformed decimal: " + s);
    bool neg = !head.empty() && head[0] == '-';
    if (neg || (!head.empty() && head[0] == '+')) head = head.substr(1);
    if (head.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed decimal: " + s);
    if (head.empty()) head = "0";
    mpz_class digits(head + frac, 10);  // base fixed: leading zeros are not octal
    mpz_class den(1);
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational q(digits, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }
  if (s.find_first_not_of("0123456789+-") != std::string::npos ||
      s.find_first_of("0123456789") == std::string::npos)
    throw std::invalid_argument("malformed integer: " + s);
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("malformed integer: " + s);
  q.canonicalize();
  return q;
}

int DegreeLog::max_degree() const {
  int m = 0;
  for (const auto& e : entries_)
    if (e.degree > m) m = e.degree;
  return m;
}

int DegreeLog::max_degree(std::string_view tag_prefix) const {
  int m = 0;
  for (const auto& e : entries_) {
    std::string_view tag(e.tag);
    if (tag.substr(0, tag_prefix.size()) == tag_prefix && e.degree > m) m = e.degree;
  }
  return m;
}

Sign sign_of(const QuadExt& x, DegreeLog* log, const char* tag) {
  if (sgn(x.disc.value) < 0) throw std::invalid_argument("negative discriminant");
  Sign sa = sign_of(x.a, log, tag);
  if (x.b.value == 0 || x.disc.value == 0) return sa;
  Sign sb = sign_of(x.b, log, tag);
  if (sa == Sign::Zero) return sb;
  if (sa == sb) return sa;
  Quantity norm = x.a * x.a - x.b * x.b * x.disc;
  Sign sn = sign_of(norm, log, tag);
  return sn == Sign::Zero ? Sign::Zero : (sn == Sign::Positive ? sa : sb);
}

double Ext::to_double() const {
  return a.get_d() + b.get_d() * std::sqrt(disc.get_d());
}

namespace {
void require_same_field(const Ext& x, const Ext& y) {
  if (x.b != 0 && y.b != 0 && x.disc != y.disc)
    throw std::invalid_argument("mixed quadratic extensions");
}
}  // namespace

Ext operator+(const Ext& x, const Ext& y) {
  require_same_field(x, y);
  Rational d = x.b != 0 ? x.disc : y.disc;
  return {x.a + y.a, x.b + y.b, d};
}

Ext operator-(const Ext& x, const Ext& y) { return x + Ext{-y.a, -y.b, y.disc}; }

Ext operator-(const Ext& x) { return {-x.a, -x.b, x.disc}; }

Ext operator*(const Ext& x, const Ext& y) {
  require_same_field(x, y);
  if (x.b != 0 && y.b != 0) {
    return {x.a * y.a + x.b * y.b * x.disc, x.a * y.b + x.b * y.a, x.disc};
  }
  Rational d = x.b != 0 ? x.disc : y.disc;
  return {x.a * y.a, x.a * y.b + x.b * y.a, d};
}

Ext operator/(const Ext& x, const Ext& y) {
  Rational n = y.a * y.a - y.b * y.b * y.disc;
  if (n == 0) throw std::invalid_argument("division by zero extension element");
  Ext inv{y.a / n, -y.b / n, y.disc};
  return x * inv;
}

Sign sign_of(const Ext& x) {
  Sign sa = sign_of(x.a);
  if (x.b == 0 || x.disc == 0) return sa;
  Sign sb = sign_of(x.b);
  if (sa == Sign::Zero) return sb;
  if (sa == sb) return sa;
  Sign sn = sign_of(Rational(x.a * x.a - x.b * x.b * x.disc));
  return sn == Sign::Zero ? Sign::Zero : (sn == Sign::Positive ? sa : sb);
}

bool operator==(const Ext& x, const Ext& y) {
  Ext d = x - y;
  return d.a == 0 && d.b == 0;
}

}  // namespace apo
