#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "chomfly/qpoly.hpp"
#include "lattice.hpp"
#include "zpoly.hpp"

namespace chomfly {

LaurentQ::LaurentQ(long c) {
  if (c) {
    e_.push_back(0);
    c_.emplace_back(c);
  }
}

LaurentQ::LaurentQ(const mpz_class& c) {
  if (c != 0) {
    e_.push_back(0);
    c_.push_back(c);
  }
}

LaurentQ::LaurentQ(const mpq_class& c) : LaurentQ(monomial(c, 0)) {}

LaurentQ LaurentQ::monomial(const mpq_class& c, int e6) {
  LaurentQ r;
  if (c == 0) return r;
  r.e_.push_back(e6);
  r.c_.push_back(c.get_num());
  r.d_ = c.get_den();
  return r;
}

LaurentQ LaurentQ::from_terms(std::vector<int> e6, std::vector<mpz_class> nums, mpz_class den) {
  if (e6.size() != nums.size()) throw std::invalid_argument("from_terms: size mismatch");
  for (std::size_t i = 1; i < e6.size(); ++i)
    if (e6[i] <= e6[i - 1]) throw std::invalid_argument("from_terms: exponents must ascend");
  if (den == 0) throw std::domain_error("from_terms: zero denominator");
  LaurentQ r;
  r.e_ = std::move(e6);
  r.c_ = std::move(nums);
  r.d_ = std::move(den);
  r.normalize();
  return r;
}

void LaurentQ::normalize() {
  std::size_t k = 0;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (k != i) {
      e_[k] = e_[i];
      c_[k].swap(c_[i]);
    }
    ++k;
  }
  e_.resize(k);
  c_.resize(k);
  if (k == 0) {
    d_ = 1;
    return;
  }
  if (d_ < 0) {
    d_ = -d_;
    for (auto& c : c_) c = -c;
  }
  if (d_ == 1) return;
  mpz_class g = d_;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  mpz_divexact(d_.get_mpz_t(), d_.get_mpz_t(), g.get_mpz_t());
  for (auto& c : c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

bool LaurentQ::is_one() const { return e_.size() == 1 && e_[0] == 0 && c_[0] == 1 && d_ == 1; }

mpq_class LaurentQ::coeff(std::size_t i) const {
  mpq_class r(c_[i], d_);
  r.canonicalize();
  return r;
}

mpq_class LaurentQ::coeff_at(int e6) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), e6);
  if (it == e_.end() || *it != e6) return 0;
  return coeff(static_cast<std::size_t>(it - e_.begin()));
}

int LaurentQ::stride6() const {
  int g = 0;
  for (std::size_t i = 1; i < e_.size(); ++i) g = std::gcd(g, e_[i] - e_[0]);
  return g;
}

bool LaurentQ::integer_exponents() const {
  for (int e : e_)
    if (e % kQDen) return false;
  return true;
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

namespace {

// a += s * b where s scales numerators; result denominators must already agree
void merge_add(std::vector<int>& ea, std::vector<mpz_class>& ca, const std::vector<int>& eb,
               const std::vector<mpz_class>& cb, const mpz_class& sa, const mpz_class& sb, bool neg) {
  std::vector<int> e;
  std::vector<mpz_class> c;
  e.reserve(ea.size() + eb.size());
  c.reserve(ea.size() + eb.size());
  std::size_t i = 0, j = 0;
  auto push_b = [&](std::size_t jj) {
    mpz_class v = cb[jj] * sb;
    if (neg) v = -v;
    return v;
  };
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i] < eb[j])) {
      e.push_back(ea[i]);
      c.push_back(sa == 1 ? ca[i] : ca[i] * sa);
      ++i;
    } else if (i == ea.size() || eb[j] < ea[i]) {
      e.push_back(eb[j]);
      c.push_back(push_b(j));
      ++j;
    } else {
      mpz_class v = sa == 1 ? ca[i] : ca[i] * sa;
      v += push_b(j);
      if (v != 0) {
        e.push_back(ea[i]);
        c.push_back(std::move(v));
      }
      ++i;
      ++j;
    }
  }
  ea.swap(e);
  ca.swap(c);
}

}  // namespace

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (d_ == o.d_) {
    merge_add(e_, c_, o.e_, o.c_, 1, 1, false);
  } else {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), d_.get_mpz_t(), o.d_.get_mpz_t());
    merge_add(e_, c_, o.e_, o.c_, l / d_, l / o.d_, false);
    d_ = l;
  }
  normalize();
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
  if (o.is_zero()) return *this;
  if (d_ == o.d_) {
    merge_add(e_, c_, o.e_, o.c_, 1, 1, true);
  } else {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), d_.get_mpz_t(), o.d_.get_mpz_t());
    merge_add(e_, c_, o.e_, o.c_, l / d_, l / o.d_, true);
    d_ = l;
  }
  normalize();
  return *this;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.size() == 1 && b.size() < a.size()) return b * a;
  LaurentQ r;
  r.d_ = a.d_ * b.d_;
  if (a.size() == 1) {
    r.e_.reserve(b.size());
    r.c_.reserve(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
      r.e_.push_back(a.e_[0] + b.e_[j]);
      r.c_.push_back(a.c_[0] * b.c_[j]);
    }
    r.normalize();
    return r;
  }
  const int g = std::gcd(a.stride6(), b.stride6());
  const int lo = a.e_.front() + b.e_.front();
  const int hi = a.e_.back() + b.e_.back();
  const std::size_t n = static_cast<std::size_t>((hi - lo) / g) + 1;
  std::vector<mpz_class> buf(n);
  std::vector<std::size_t> ib(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) ib[j] = static_cast<std::size_t>((b.e_[j] - b.e_[0]) / g);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t ia = static_cast<std::size_t>((a.e_[i] - a.e_[0]) / g);
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(buf[ia + ib[j]].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (buf[k] == 0) continue;
    r.e_.push_back(lo + static_cast<int>(k) * g);
    r.c_.push_back(std::move(buf[k]));
  }
  r.normalize();
  return r;
}

LaurentQ LaurentQ::scaled(const mpq_class& s) const {
  if (s == 0 || is_zero()) return {};
  LaurentQ r = *this;
  for (auto& c : r.c_) c *= s.get_num();
  r.d_ *= s.get_den();
  r.normalize();
  return r;
}

LaurentQ LaurentQ::shifted(int e6) const {
  LaurentQ r = *this;
  for (auto& e : r.e_) e += e6;
  return r;
}

LaurentQ LaurentQ::pow(unsigned n) const {
  LaurentQ r(1), b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

LaurentQ LaurentQ::dilated(int k) const {
  if (k == 0) return LaurentQ(at_one());
  LaurentQ r = *this;
  for (auto& e : r.e_) e *= k;
  if (k < 0) {
    std::reverse(r.e_.begin(), r.e_.end());
    std::reverse(r.c_.begin(), r.c_.end());
  }
  return r;
}

LaurentQ LaurentQ::mirror_q() const {
  if (!integer_exponents()) throw FractionalExponent("q -> -1/q needs integer exponents: " + str());
  LaurentQ r = dilated(-1);
  for (std::size_t i = 0; i < r.size(); ++i)
    if ((r.e_[i] / kQDen) % 2) r.c_[i] = -r.c_[i];
  return r;
}

mpq_class LaurentQ::at_one() const {
  mpz_class s = 0;
  for (const auto& c : c_) s += c;
  mpq_class r(s, d_);
  r.canonicalize();
  return r;
}

LaurentQ quantum_int(int n) {
  if (n == 0) return {};
  if (n < 0) return -quantum_int(-n);
  std::vector<int> e;
  std::vector<mpz_class> c;
  for (int k = 1 - n; k <= n - 1; k += 2) {
    e.push_back(kQDen * k);
    c.emplace_back(1);
  }
  return LaurentQ::from_terms(std::move(e), std::move(c));
}

namespace lattice {

zpoly::ZPoly to_dense(const LaurentQ& f, int stride) {
  zpoly::ZPoly p(static_cast<std::size_t>((f.max_exp6() - f.min_exp6()) / stride) + 1);
  for (std::size_t i = 0; i < f.size(); ++i) p[static_cast<std::size_t>((f.exp6(i) - f.min_exp6()) / stride)] = f.num(i);
  return p;
}

LaurentQ from_dense(const zpoly::ZPoly& p, int base, int stride, const mpq_class& scale) {
  std::vector<int> e;
  std::vector<mpz_class> c;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    e.push_back(base + static_cast<int>(i) * stride);
    c.push_back(p[i] * scale.get_num());
  }
  return LaurentQ::from_terms(std::move(e), std::move(c), scale.get_den());
}

int common_stride(const LaurentQ& a, const LaurentQ& b) {
  int g = std::gcd(a.stride6(), b.stride6());
  return g == 0 ? 1 : g;
}

Split split(const LaurentQ& f, int stride) {
  Split s;
  zpoly::ZPoly p = to_dense(f, stride);
  mpz_class c = zpoly::content(p);
  if (p.back() < 0) c = -c;
  s.scale = mpq_class(c, f.den());
  s.scale.canonicalize();
  s.prim = zpoly::primitive(p);
  s.base = f.min_exp6();
  return s;
}

}  // namespace lattice

LaurentQ gcd(const LaurentQ& a, const LaurentQ& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero() || b.is_zero()) {
    const LaurentQ& f = a.is_zero() ? b : a;
    if (f.is_monomial()) return LaurentQ(1);
    const int s = f.stride6();
    lattice::Split sf = lattice::split(f, s);
    return lattice::from_dense(sf.prim, 0, s, 1);
  }
  if (a.is_monomial() || b.is_monomial()) return LaurentQ(1);
  const int s = lattice::common_stride(a, b);
  lattice::Split sa = lattice::split(a, s), sb = lattice::split(b, s);
  zpoly::GcdResult g = zpoly::gcd(sa.prim, sb.prim);
  return lattice::from_dense(g.g, 0, s, 1);
}

LaurentQ divexact(const LaurentQ& a, const LaurentQ& b) {
  if (b.is_zero()) throw std::domain_error("divexact: division by zero");
  if (a.is_zero()) return {};
  if (b.is_monomial()) {
    mpq_class inv = 1 / b.coeff(0);
    return a.scaled(inv).shifted(-b.exp6(0));
  }
  const int s = lattice::common_stride(a, b);
  if (a.is_monomial()) throw std::domain_error("divexact: not divisible");
  lattice::Split sa = lattice::split(a, s), sb = lattice::split(b, s);
  auto q = zpoly::divexact(sa.prim, sb.prim);
  if (!q) throw std::domain_error("divexact: not divisible");
  return lattice::from_dense(*q, sa.base - sb.base, s, sa.scale / sb.scale);
}

SquarefreeSplit squarefree_split(const LaurentQ& a) {
  if (a.is_zero()) throw std::domain_error("squarefree_split of zero");
  SquarefreeSplit out;
  if (a.is_monomial()) {
    out.unit = a.coeff(0);
    out.shift6 = a.exp6(0);
    out.square_root_part = LaurentQ(1);
    out.squarefree_part = LaurentQ(1);
    return out;
  }
  const int s = a.stride6();
  lattice::Split sp = lattice::split(a, s);
  // Yun's algorithm over Z[x] with primitive normalization
  using zpoly::ZPoly;
  const ZPoly& f = sp.prim;
  ZPoly df = zpoly::derivative(f);
  zpoly::GcdResult g0 = zpoly::gcd(f, zpoly::primitive(df));
  ZPoly w = g0.ca;
  ZPoly y = *zpoly::divexact(df, g0.g);
  std::vector<ZPoly> factors;
  while (zpoly::degree(w) > 0) {
    ZPoly z = zpoly::sub(y, zpoly::derivative(w));
    if (z.empty()) {
      factors.push_back(w);
      break;
    }
    zpoly::GcdResult g = zpoly::gcd(w, zpoly::primitive(z));
    factors.push_back(g.g);
    w = g.ca;
    y = *zpoly::divexact(z, g.g);
  }
  ZPoly sq{1}, sf{1};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::size_t mult = i + 1;
    for (std::size_t k = 0; k < mult / 2; ++k) sq = zpoly::mul(sq, factors[i]);
    if (mult % 2) sf = zpoly::mul(sf, factors[i]);
  }
  ZPoly rebuilt = zpoly::mul(zpoly::mul(sq, sq), sf);
  // f = c * rebuilt with c a rational scalar; compare leading coefficients
  mpq_class c(f.back(), rebuilt.back());
  c.canonicalize();
  out.unit = sp.scale * c;
  out.shift6 = sp.base;
  out.square_root_part = lattice::from_dense(sq, 0, s, 1);
  out.squarefree_part = lattice::from_dense(sf, 0, s, 1);
  return out;
}

}  // namespace chomfly
