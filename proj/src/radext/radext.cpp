#include "chomfly/radext.hpp"

#include <tuple>

namespace chomfly {

namespace {

int compare(const LaurentQ& a, const LaurentQ& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.exp6(i) != b.exp6(i)) return a.exp6(i) < b.exp6(i) ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (int c = cmp(a.num(i), b.num(i))) return c < 0 ? -1 : 1;
  if (int c = cmp(a.den(), b.den())) return c < 0 ? -1 : 1;
  return 0;
}

// n = k^2 * s with s squarefree (trial division; large leftovers are kept whole unless square)
void split_square(const mpz_class& n, mpz_class& k, mpz_class& s) {
  k = 1;
  s = 1;
  mpz_class m = n;
  for (unsigned long p = 2; p < 1000000 && mpz_cmp_ui(m.get_mpz_t(), p * p) >= 0; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) k *= p;
    if (e % 2) s *= p;
  }
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    k *= r;
  } else {
    s *= m;
  }
}

struct ScalarRoot {
  mpq_class coeff;
  int sign;
  mpz_class intpart;
};

// sqrt(c) = coeff * sqrt(sign * intpart)
ScalarRoot scalar_sqrt(const mpq_class& c) {
  ScalarRoot r;
  r.sign = c < 0 ? -1 : 1;
  mpz_class n = abs(c.get_num()) * c.get_den();
  mpz_class k;
  split_square(n, k, r.intpart);
  r.coeff = mpq_class(k, c.get_den());
  r.coeff.canonicalize();
  return r;
}

// builds the radicand of sign * intpart * P for squarefree P with min exponent 0
RadicalScalar make_term(RationalQ coeff, int sign, const mpz_class& intpart, const LaurentQ& p) {
  const mpq_class low = p.coeff(0);
  ScalarRoot sr = scalar_sqrt(low * sign * intpart);
  Radicand key;
  key.sign = sr.sign;
  key.intpart = sr.intpart;
  key.body = p.scaled(1 / low);
  return RadicalScalar::term(coeff * RationalQ(LaurentQ(sr.coeff)), key);
}

}  // namespace

bool operator<(const Radicand& a, const Radicand& b) {
  if (a.is_rational() != b.is_rational()) return a.is_rational();
  if (a.sign != b.sign) return a.sign > b.sign;
  if (int c = cmp(a.intpart, b.intpart)) return c < 0;
  return compare(a.body, b.body) < 0;
}

bool operator==(const Radicand& a, const Radicand& b) {
  return a.sign == b.sign && a.intpart == b.intpart && a.body == b.body;
}

std::string Radicand::str() const {
  std::string s;
  if (sign < 0) s += "-";
  if (intpart != 1) s += intpart.get_str();
  if (!body.is_one()) {
    if (intpart != 1) s += "*";
    s += "(" + body.str() + ")";
  } else if (intpart == 1) {
    s += "1";
  }
  return "sqrt(" + s + ")";
}

RadicalScalar::RadicalScalar(const RationalQ& c) {
  if (!c.is_zero()) p_.emplace(Radicand{}, c);
}

RadicalScalar RadicalScalar::term(const RationalQ& c, const Radicand& r) {
  RadicalScalar s;
  if (!c.is_zero()) s.p_.emplace(r, c);
  return s;
}

RationalQ RadicalScalar::rational_part() const {
  auto it = p_.find(Radicand{});
  return it == p_.end() ? RationalQ() : it->second;
}

void RadicalScalar::add(const Radicand& r, const RationalQ& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = p_.try_emplace(r, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) p_.erase(it);
}

RadicalScalar RadicalScalar::operator-() const {
  RadicalScalar r;
  for (const auto& [k, c] : p_) r.p_.emplace(k, -c);
  return r;
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& o) {
  for (const auto& [k, c] : o.p_) add(k, c);
  return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& o) {
  for (const auto& [k, c] : o.p_) add(k, -c);
  return *this;
}

RadicalScalar operator*(const RadicalScalar& a, const RationalQ& b) {
  RadicalScalar r;
  if (b.is_zero()) return r;
  for (const auto& [k, c] : a.p_) r.p_.emplace(k, c * b);
  return r;
}

RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
  RadicalScalar r;
  for (const auto& [ka, ca] : a.p_) {
    for (const auto& [kb, cb] : b.p_) {
      RationalQ c = ca * cb;
      if (ka.is_rational() || kb.is_rational()) {
        r.add(ka.is_rational() ? kb : ka, c);
        continue;
      }
      // sqrt(-1)^2 = -1
      int sign = ka.sign * kb.sign;
      if (ka.sign < 0 && kb.sign < 0) c = -c;
      mpz_class gi;
      mpz_gcd(gi.get_mpz_t(), ka.intpart.get_mpz_t(), kb.intpart.get_mpz_t());
      mpz_class ip = (ka.intpart / gi) * (kb.intpart / gi);
      c *= RationalQ(LaurentQ(gi));
      LaurentQ body;
      if (ka.body.is_one() || kb.body.is_one()) {
        body = ka.body * kb.body;
      } else {
        LaurentQ g = gcd(ka.body, kb.body);
        if (g.is_one()) {
          body = ka.body * kb.body;
        } else {
          body = divexact(ka.body, g) * divexact(kb.body, g);
          c *= RationalQ(g);
        }
      }
      if (sign == 1 && ip == 1 && body.is_one()) {
        r.add(Radicand{}, c);
      } else {
        RadicalScalar t = make_term(c, sign, ip, body);
        for (const auto& [k, v] : t.p_) r.add(k, v);
      }
    }
  }
  return r;
}

std::string RadicalScalar::str() const {
  if (p_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : p_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    if (!k.is_rational()) s += "*" + k.str();
  }
  return s;
}

RadicalScalar sqrt_of(const RationalQ& r) {
  if (r.is_zero()) return {};
  LaurentQ n = r.num() * r.den();
  SquarefreeSplit sp = squarefree_split(n);
  if (sp.shift6 % 2) throw FractionalExponent("sqrt_of: odd q-power below the 1/6 lattice");
  RationalQ coeff(sp.square_root_part.shifted(sp.shift6 / 2), r.den());
  ScalarRoot u = scalar_sqrt(sp.unit);
  coeff *= RationalQ(LaurentQ(u.coeff));
  if (sp.squarefree_part.is_one() && u.sign == 1 && u.intpart == 1) return RadicalScalar(coeff);
  return make_term(coeff, u.sign, u.intpart, sp.squarefree_part);
}

RationalQ assert_rational(const RadicalScalar& a) {
  if (!a.is_rational()) throw NonVanishingRadical("radical part does not vanish: " + a.str());
  return a.rational_part();
}

}  // namespace chomfly
