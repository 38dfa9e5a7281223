#include <cctype>
#include <numeric>
#include <vector>

#include "chomfly/qpoly.hpp"

namespace chomfly {

std::string format_rational(const mpq_class& c) { return c.get_str(); }

std::string format_q_exponent(int e6) {
  if (e6 % kQDen == 0) return std::to_string(e6 / kQDen);
  const int g = std::gcd(e6, kQDen);
  return "(" + std::to_string(e6 / g) + "/" + std::to_string(kQDen / g) + ")";
}

namespace {

void append_term(std::string& out, const mpq_class& c, int a, int e6) {
  const bool neg = c < 0;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  const mpq_class m = abs(c);
  std::vector<std::string> f;
  if (m != 1 || (a == 0 && e6 == 0)) f.push_back(m.get_str());
  if (a == 1) f.push_back("A");
  else if (a != 0) f.push_back("A^" + std::to_string(a));
  if (e6 == kQDen) f.push_back("q");
  else if (e6 != 0) f.push_back("q^" + format_q_exponent(e6));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += "*";
    out += f[i];
  }
}

class Parser {
 public:
  explicit Parser(std::string_view s) {
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  LaurentQA run() {
    LaurentQA r = expr();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  int small_int() {
    const bool neg = eat('-');
    if (!neg) eat('+');
    mpz_class v = integer();
    if (!v.fits_sint_p()) fail("exponent out of range");
    return neg ? -static_cast<int>(v.get_si()) : static_cast<int>(v.get_si());
  }

  // exponent in units of 1/6
  int exponent6() {
    if (eat('(')) {
      const int n = small_int();
      int d = 1;
      if (eat('/')) d = small_int();
      if (!eat(')')) fail("expected ')'");
      if (d <= 0 || (n * kQDen) % d) fail("exponent not on the 1/6 lattice");
      return n * kQDen / d;
    }
    return small_int() * kQDen;
  }

  LaurentQA expr() {
    LaurentQA r;
    bool first = true;
    for (;;) {
      bool neg = false;
      if (eat('-')) neg = true;
      else if (!eat('+') && !first) break;
      LaurentQA t = term();
      r += neg ? -t : t;
      first = false;
      if (peek() != '+' && peek() != '-') break;
    }
    return r;
  }

  LaurentQA term() {
    LaurentQA r = factor();
    while (eat('*')) r = r * factor();
    return r;
  }

  LaurentQA factor() {
    LaurentQA base;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class n = integer();
      mpz_class d = 1;
      if (eat('/')) d = integer();
      if (d == 0) fail("zero denominator");
      mpq_class v(n, d);
      v.canonicalize();
      return LaurentQA::monomial(v, 0, 0);
    }
    if (eat('A')) {
      int e = 1;
      if (eat('^')) e = eat('(') ? paren_int() : small_int();
      return LaurentQA::monomial(1, e, 0);
    }
    if (eat('q')) {
      int e6 = kQDen;
      if (eat('^')) e6 = exponent6();
      return LaurentQA::monomial(1, 0, e6);
    }
    if (eat('(')) {
      base = expr();
      if (!eat(')')) fail("expected ')'");
      if (eat('^')) {
        const int e = eat('(') ? paren_int() : small_int();
        if (e < 0) {
          if (!base.is_monomial()) fail("negative power of a non-monomial");
          const auto& [a, cq] = *base.terms().begin();
          return LaurentQA::monomial(1 / cq.coeff(0), a, cq.exp6(0)).pow(static_cast<unsigned>(-e));
        }
        return base.pow(static_cast<unsigned>(e));
      }
      return base;
    }
    fail("expected factor");
  }

  int paren_int() {
    const int e = small_int();
    if (!eat(')')) fail("expected ')'");
    return e;
  }
};

}  // namespace

std::string LaurentQ::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = size(); i-- > 0;) append_term(out, coeff(i), 0, e_[i]);
  return out;
}

std::string LaurentQA::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const LaurentQ& c = it->second;
    for (std::size_t i = c.size(); i-- > 0;) append_term(out, c.coeff(i), it->first, c.exp6(i));
  }
  return out;
}

LaurentQA LaurentQA::parse(std::string_view s) { return Parser(s).run(); }

}  // namespace chomfly
