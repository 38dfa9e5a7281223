#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chomfly {

// q-exponents live on a lattice of step 1/6; an exponent e is stored as 6e.
inline constexpr int kQDen = 6;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FractionalExponent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Laurent polynomial in q with rational coefficients.
// Stored as integer numerators over one positive common denominator.
class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(long c);
  explicit LaurentQ(const mpz_class& c);
  explicit LaurentQ(const mpq_class& c);

  static LaurentQ monomial(const mpq_class& c, int e6);
  static LaurentQ q_pow(int n) { return monomial(1, kQDen * n); }
  static LaurentQ from_terms(std::vector<int> e6, std::vector<mpz_class> nums, mpz_class den = 1);

  bool is_zero() const { return e_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return e_.size() == 1; }
  std::size_t size() const { return e_.size(); }
  int exp6(std::size_t i) const { return e_[i]; }
  const mpz_class& num(std::size_t i) const { return c_[i]; }
  const mpz_class& den() const { return d_; }
  mpq_class coeff(std::size_t i) const;
  mpq_class coeff_at(int e6) const;
  int min_exp6() const { return e_.front(); }
  int max_exp6() const { return e_.back(); }
  // gcd of the gaps between consecutive exponents; 0 for a monomial
  int stride6() const;
  bool integer_exponents() const;

  LaurentQ operator-() const;
  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o);
  LaurentQ& operator*=(const LaurentQ& o) { return *this = *this * o; }
  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
  friend bool operator==(const LaurentQ& a, const LaurentQ& b) {
    return a.d_ == b.d_ && a.e_ == b.e_ && a.c_ == b.c_;
  }

  LaurentQ scaled(const mpq_class& s) const;
  LaurentQ shifted(int e6) const;
  LaurentQ pow(unsigned n) const;
  // q -> q^k for integer k (k = -1 inverts)
  LaurentQ dilated(int k) const;
  // q -> -q^-1; requires integer exponents
  LaurentQ mirror_q() const;
  mpq_class at_one() const;
  std::string str() const;

 private:
  std::vector<int> e_;
  std::vector<mpz_class> c_;
  mpz_class d_ = 1;
  void normalize();
  friend class LaurentQA;
};

LaurentQ quantum_int(int n);

// gcd over the Laurent ring: primitive integer polynomial, min exponent 0,
// lowest coefficient positive.
LaurentQ gcd(const LaurentQ& a, const LaurentQ& b);

// exact quotient a/b; throws std::domain_error if b does not divide a
LaurentQ divexact(const LaurentQ& a, const LaurentQ& b);

struct SquarefreeSplit {
  mpq_class unit;             // scalar factor
  int shift6 = 0;             // q-power factor
  LaurentQ square_root_part;  // S
  LaurentQ squarefree_part;   // P, primitive, min exponent 0
};
// a = unit * q^shift * S^2 * P with P squarefree
SquarefreeSplit squarefree_split(const LaurentQ& a);

class RationalQ {
 public:
  RationalQ() : num_(0), den_(1) {}
  RationalQ(long c) : num_(c), den_(1) {}
  RationalQ(const LaurentQ& p) : num_(p), den_(1) {}
  RationalQ(const LaurentQ& n, const LaurentQ& d);

  const LaurentQ& num() const { return num_; }
  const LaurentQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }

  RationalQ operator-() const;
  friend RationalQ operator+(const RationalQ& a, const RationalQ& b);
  friend RationalQ operator-(const RationalQ& a, const RationalQ& b) { return a + (-b); }
  friend RationalQ operator*(const RationalQ& a, const RationalQ& b);
  friend RationalQ operator/(const RationalQ& a, const RationalQ& b);
  RationalQ& operator+=(const RationalQ& o) { return *this = *this + o; }
  RationalQ& operator-=(const RationalQ& o) { return *this = *this - o; }
  RationalQ& operator*=(const RationalQ& o) { return *this = *this * o; }
  friend bool operator==(const RationalQ& a, const RationalQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  RationalQ inverse() const;
  RationalQ pow(int n) const;
  std::string str() const;

 private:
  LaurentQ num_, den_;
  struct Raw {};
  RationalQ(Raw, LaurentQ n, LaurentQ d) : num_(std::move(n)), den_(std::move(d)) {}
};

// Laurent polynomial in A (integer exponents) and q (1/6 lattice).
class LaurentQA {
 public:
  using Map = std::map<int, LaurentQ>;

  LaurentQA() = default;
  LaurentQA(long c) { if (c) t_[0] = LaurentQ(c); }
  LaurentQA(const LaurentQ& p, int a_exp = 0) { if (!p.is_zero()) t_[a_exp] = p; }

  static LaurentQA monomial(const mpq_class& c, int a_exp, int q_exp6);

  bool is_zero() const { return t_.empty(); }
  const Map& terms() const { return t_; }
  LaurentQ coeff_of_A(int a) const;
  std::size_t term_count() const;
  bool is_monomial() const { return t_.size() == 1 && t_.begin()->second.is_monomial(); }

  LaurentQA operator-() const;
  LaurentQA& operator+=(const LaurentQA& o);
  LaurentQA& operator-=(const LaurentQA& o);
  friend LaurentQA operator+(LaurentQA a, const LaurentQA& b) { return a += b; }
  friend LaurentQA operator-(LaurentQA a, const LaurentQA& b) { return a -= b; }
  friend LaurentQA operator*(const LaurentQA& a, const LaurentQA& b);
  friend LaurentQA operator*(const LaurentQA& a, const LaurentQ& b);
  friend bool operator==(const LaurentQA& a, const LaurentQA& b) { return a.t_ == b.t_; }

  LaurentQA pow(unsigned n) const;
  std::string str() const;
  static LaurentQA parse(std::string_view s);

 private:
  Map t_;
  void add_term(int a, const LaurentQ& c);
};

// {x} = x - 1/x for a monomial x
LaurentQA curly_bracket(const LaurentQA& x);

enum class Subst { AtoQ2, QtoMinusQinv, QtoOne, InvertBoth };
LaurentQA substitute(const LaurentQA& p, Subst rule);

// Element N(A,q)/D(q) of the fraction field; D depends on q only.
// Normalized: gcd(content of N, D) trivial, D monic at its lowest term.
class RationalQA {
 public:
  RationalQA() : den_(1) {}
  RationalQA(const LaurentQA& n) : num_(n), den_(1) {}
  RationalQA(const LaurentQA& n, const LaurentQ& d);

  const LaurentQA& num() const { return num_; }
  const LaurentQ& den() const { return den_; }
  bool is_laurent() const { return den_.is_one(); }

  friend RationalQA operator+(const RationalQA& a, const RationalQA& b);
  friend RationalQA operator*(const RationalQA& a, const RationalQA& b);
  RationalQA divided_by(const LaurentQ& d) const;
  friend bool operator==(const RationalQA& a, const RationalQA& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  std::string str() const;

 private:
  LaurentQA num_;
  LaurentQ den_;
};

std::string format_q_exponent(int e6);
std::string format_rational(const mpq_class& c);

}  // namespace chomfly
