#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace apo {

// Exact rational scalar. GMP keeps values canonical (positive denominator,
// reduced); construction from a num/den pair goes through make_rational.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Parses "p/q", integers, or finite decimals ("0.25" -> 1/4) exactly.
// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_of(const Rational& q) { return static_cast<Sign>(sgn(q)); }
inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
inline int sign_int(Sign s) { return static_cast<int>(s); }

// A rational value tagged with its formal algebraic degree in the input
// quantities. Products add degrees, sums take the max; the degree is a
// property of the expression, not of the runtime value.
struct Quantity {
  Rational value;
  int degree = 0;

  Quantity() = default;
  Quantity(Rational v, int d) : value(std::move(v)), degree(d) {}
  static Quantity constant(long c) { return {Rational(c), 0}; }
  static Quantity input(Rational v) { return {std::move(v), 1}; }
};

inline Quantity operator+(const Quantity& a, const Quantity& b) {
  return {a.value + b.value, a.degree > b.degree ? a.degree : b.degree};
}
inline Quantity operator-(const Quantity& a, const Quantity& b) {
  return {a.value - b.value, a.degree > b.degree ? a.degree : b.degree};
}
inline Quantity operator*(const Quantity& a, const Quantity& b) {
  return {a.value * b.value, a.degree + b.degree};
}
inline Quantity operator-(const Quantity& a) { return {-a.value, a.degree}; }
inline Quantity operator*(long c, const Quantity& a) {
  return {c * a.value, a.degree};
}

// Per-invocation record of the sign tests a predicate performed, with the
// formal degree of every tested quantity. Advisory output only; never used
// to influence a predicate's answer.
class DegreeLog {
 public:
  struct Entry {
    int degree;
    const char* tag;
  };

  void record(int degree, const char* tag) { entries_.push_back({degree, tag}); }
  void clear() { entries_.clear(); }

  int max_degree() const;
  // Max over entries whose tag starts with the given prefix.
  int max_degree(std::string_view tag_prefix) const;
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

inline Sign sign_of(const Quantity& q, DegreeLog* log, const char* tag) {
  if (log) log->record(q.degree, tag);
  return sign_of(q.value);
}

// a + b*sqrt(disc) with disc >= 0, kept in exact degree-tagged form.
// Division never appears on this path.
struct QuadExt {
  Quantity a;
  Quantity b;
  Quantity disc;
};

// Exact sign via the three-sign rule: sign(a), sign(b), and when they
// disagree the sign of the norm a^2 - b^2*disc. Records only the tests it
// actually performs.
Sign sign_of(const QuadExt& x, DegreeLog* log, const char* tag);

// Value-level one-square-root field element for computed outputs (plane
// coefficients, residual checks in tests). Supports division; carries no
// degree information.
struct Ext {
  Rational a;
  Rational b;
  Rational disc;  // meaningful only when b != 0

  Ext() : a(0), b(0), disc(0) {}
  explicit Ext(Rational r) : a(std::move(r)), b(0), disc(0) {}
  Ext(Rational a_, Rational b_, Rational disc_)
      : a(std::move(a_)), b(std::move(b_)), disc(std::move(disc_)) {
    if (b == 0) disc = 0;
  }

  bool is_rational() const { return b == 0; }
  double to_double() const;
};

Ext operator+(const Ext& x, const Ext& y);
Ext operator-(const Ext& x, const Ext& y);
Ext operator-(const Ext& x);
Ext operator*(const Ext& x, const Ext& y);
Ext operator/(const Ext& x, const Ext& y);
Sign sign_of(const Ext& x);
bool operator==(const Ext& x, const Ext& y);

}  // namespace apo
