#include <stdexcept>

#include "chomfly/qpoly.hpp"
#include "lattice.hpp"
#include "zpoly.hpp"

namespace chomfly {

namespace {

struct Cancelled {
  LaurentQ x, y;
  LaurentQ g;  // removed common factor, min exponent 0
};

Cancelled cancel_common(const LaurentQ& x, const LaurentQ& y) {
  if (x.is_monomial() || y.is_monomial() || x.is_zero() || y.is_zero()) return {x, y, LaurentQ(1)};
  const int s = lattice::common_stride(x, y);
  lattice::Split sx = lattice::split(x, s), sy = lattice::split(y, s);
  zpoly::GcdResult g = zpoly::gcd(sx.prim, sy.prim);
  if (g.g.size() == 1) return {x, y, LaurentQ(1)};
  return {lattice::from_dense(g.ca, sx.base, s, sx.scale), lattice::from_dense(g.cb, sy.base, s, sy.scale),
          lattice::from_dense(g.g, 0, s, 1)};
}

// n/d coprime; moves the unit so that d has min exponent 0 and lowest coefficient 1
void make_monic(LaurentQ& n, LaurentQ& d) {
  const mpq_class inv = 1 / d.coeff(0);
  const int e0 = d.min_exp6();
  n = n.scaled(inv).shifted(-e0);
  d = d.is_monomial() ? LaurentQ(1) : d.scaled(inv).shifted(-e0);
}

}  // namespace

RationalQ::RationalQ(const LaurentQ& n, const LaurentQ& d) {
  if (d.is_zero()) throw std::domain_error("RationalQ: zero denominator");
  if (n.is_zero()) {
    num_ = LaurentQ();
    den_ = LaurentQ(1);
    return;
  }
  Cancelled c = cancel_common(n, d);
  num_ = std::move(c.x);
  den_ = std::move(c.y);
  make_monic(num_, den_);
}

RationalQ RationalQ::operator-() const { return RationalQ(Raw{}, -num_, den_); }

RationalQ operator*(const RationalQ& a, const RationalQ& b) {
  if (a.is_zero() || b.is_zero()) return RationalQ();
  if (a.den_.is_one() && b.den_.is_one()) return RationalQ(RationalQ::Raw{}, a.num_ * b.num_, LaurentQ(1));
  Cancelled c1 = cancel_common(a.num_, b.den_);
  Cancelled c2 = cancel_common(b.num_, a.den_);
  LaurentQ n = c1.x * c2.x;
  LaurentQ d = c2.y * c1.y;
  make_monic(n, d);
  return RationalQ(RationalQ::Raw{}, std::move(n), std::move(d));
}

RationalQ operator+(const RationalQ& a, const RationalQ& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RationalQ(RationalQ::Raw{}, a.num_ + b.num_, LaurentQ(1));
  if (a.den_ == b.den_) return RationalQ(a.num_ + b.num_, a.den_);
  Cancelled c = cancel_common(a.den_, b.den_);
  LaurentQ n = a.num_ * c.y + b.num_ * c.x;
  if (n.is_zero()) return RationalQ();
  LaurentQ d = a.den_ * c.y;
  if (!c.g.is_one()) {
    Cancelled h = cancel_common(n, c.g);
    if (!h.g.is_one()) {
      n = std::move(h.x);
      d = divexact(d, h.g);
    }
  }
  make_monic(n, d);
  return RationalQ(RationalQ::Raw{}, std::move(n), std::move(d));
}

RationalQ RationalQ::inverse() const {
  if (is_zero()) throw std::domain_error("RationalQ: inverse of zero");
  LaurentQ n = den_, d = num_;
  make_monic(n, d);
  return RationalQ(Raw{}, std::move(n), std::move(d));
}

RationalQ operator/(const RationalQ& a, const RationalQ& b) { return a * b.inverse(); }

RationalQ RationalQ::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RationalQ r(1), b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

std::string RationalQ::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace chomfly
