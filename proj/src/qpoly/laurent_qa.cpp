#include <stdexcept>

#include "chomfly/qpoly.hpp"

namespace chomfly {

LaurentQA LaurentQA::monomial(const mpq_class& c, int a_exp, int q_exp6) {
  return LaurentQA(LaurentQ::monomial(c, q_exp6), a_exp);
}

LaurentQ LaurentQA::coeff_of_A(int a) const {
  auto it = t_.find(a);
  return it == t_.end() ? LaurentQ() : it->second;
}

std::size_t LaurentQA::term_count() const {
  std::size_t n = 0;
  for (const auto& [a, c] : t_) n += c.size();
  return n;
}

void LaurentQA::add_term(int a, const LaurentQ& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(a, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

LaurentQA LaurentQA::operator-() const {
  LaurentQA r;
  for (const auto& [a, c] : t_) r.t_.emplace(a, -c);
  return r;
}

LaurentQA& LaurentQA::operator+=(const LaurentQA& o) {
  for (const auto& [a, c] : o.t_) add_term(a, c);
  return *this;
}

LaurentQA& LaurentQA::operator-=(const LaurentQA& o) {
  for (const auto& [a, c] : o.t_) add_term(a, -c);
  return *this;
}

LaurentQA operator*(const LaurentQA& x, const LaurentQA& y) {
  LaurentQA r;
  for (const auto& [a, c] : x.t_)
    for (const auto& [b, d] : y.t_) r.add_term(a + b, c * d);
  return r;
}

LaurentQA operator*(const LaurentQA& x, const LaurentQ& y) {
  LaurentQA r;
  if (y.is_zero()) return r;
  for (const auto& [a, c] : x.t_) r.t_.emplace(a, c * y);
  return r;
}

LaurentQA LaurentQA::pow(unsigned n) const {
  LaurentQA r(1), b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

LaurentQA curly_bracket(const LaurentQA& x) {
  if (!x.is_monomial()) throw std::invalid_argument("curly_bracket: argument must be a monomial");
  const auto& [a, c] = *x.terms().begin();
  const mpq_class k = c.coeff(0);
  return x - LaurentQA::monomial(1 / k, -a, -c.exp6(0));
}

LaurentQA substitute(const LaurentQA& p, Subst rule) {
  LaurentQA r;
  for (const auto& [a, c] : p.terms()) {
    switch (rule) {
      case Subst::AtoQ2:
        r += LaurentQA(c.shifted(2 * kQDen * a));
        break;
      case Subst::QtoMinusQinv:
        r += LaurentQA(c.mirror_q(), a);
        break;
      case Subst::QtoOne:
        r += LaurentQA(LaurentQ(c.at_one()), a);
        break;
      case Subst::InvertBoth:
        r += LaurentQA(c.dilated(-1), -a);
        break;
    }
  }
  return r;
}

RationalQA::RationalQA(const LaurentQA& n, const LaurentQ& d) {
  if (d.is_zero()) throw std::domain_error("RationalQA: zero denominator");
  if (n.is_zero()) {
    den_ = LaurentQ(1);
    return;
  }
  LaurentQ g = d;
  for (const auto& [a, c] : n.terms()) {
    if (g.is_monomial()) break;
    g = gcd(g, c);
  }
  LaurentQ dd = g.is_monomial() ? d : divexact(d, g);
  const mpq_class inv = 1 / dd.coeff(0);
  const int e0 = dd.min_exp6();
  LaurentQ unit = LaurentQ::monomial(inv, -e0);
  if (!g.is_monomial()) {
    for (const auto& [a, c] : n.terms()) num_ += LaurentQA(divexact(c, g) * unit, a);
  } else {
    num_ = n * unit;
  }
  den_ = dd * unit;
}

RationalQA operator+(const RationalQA& x, const RationalQA& y) {
  if (x.den_ == y.den_) return RationalQA(x.num_ + y.num_, x.den_);
  return RationalQA(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RationalQA operator*(const RationalQA& x, const RationalQA& y) {
  return RationalQA(x.num_ * y.num_, x.den_ * y.den_);
}

RationalQA RationalQA::divided_by(const LaurentQ& d) const { return RationalQA(num_, den_ * d); }

std::string RationalQA::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace chomfly
