#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chomfly/qpoly.hpp"

namespace chomfly {

struct NonVanishingRadical : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sqrt(sign * intpart * body). sign = -1 is a formal sqrt(-1).
// intpart is a squarefree positive integer; body is squarefree with
// min exponent 0 and lowest coefficient 1. All trivial: the rational key.
struct Radicand {
  int sign = 1;
  mpz_class intpart = 1;
  LaurentQ body = LaurentQ(1);

  bool is_rational() const { return sign == 1 && intpart == 1 && body.is_one(); }
  std::string str() const;
};

bool operator<(const Radicand& a, const Radicand& b);
bool operator==(const Radicand& a, const Radicand& b);

class RadicalScalar {
 public:
  using Parts = std::map<Radicand, RationalQ>;

  RadicalScalar() = default;
  RadicalScalar(long c) : RadicalScalar(RationalQ(c)) {}
  RadicalScalar(const RationalQ& c);
  RadicalScalar(const LaurentQ& c) : RadicalScalar(RationalQ(c)) {}
  static RadicalScalar term(const RationalQ& c, const Radicand& r);

  const Parts& parts() const { return p_; }
  bool is_zero() const { return p_.empty(); }
  bool is_rational() const { return p_.empty() || (p_.size() == 1 && p_.begin()->first.is_rational()); }
  RationalQ rational_part() const;

  RadicalScalar operator-() const;
  RadicalScalar& operator+=(const RadicalScalar& o);
  RadicalScalar& operator-=(const RadicalScalar& o);
  friend RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) { return a += b; }
  friend RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) { return a -= b; }
  friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b);
  friend RadicalScalar operator*(const RadicalScalar& a, const RationalQ& b);
  friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) { return a.p_ == b.p_; }
  // square of the value, useful when comparing magnitudes of single-part entries
  RadicalScalar squared() const { return *this * *this; }
  std::string str() const;

 private:
  Parts p_;
  void add(const Radicand& r, const RationalQ& c);
};

RadicalScalar sqrt_of(const RationalQ& r);
RationalQ assert_rational(const RadicalScalar& a);

}  // namespace chomfly
