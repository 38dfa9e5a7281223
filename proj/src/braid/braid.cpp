#include "chomfly/braid.hpp"

#include <array>
#include <cctype>
#include <numeric>

namespace chomfly {

namespace {

RationalQ power(const SignedMonomial& x, int n) {
  const int sign = (x.sign < 0 && n % 2) ? -1 : 1;
  return RationalQ(LaurentQ::monomial(sign, x.exp6 * n));
}

// columns of m scaled by xi_j^n
void scale_columns(RadMatrix& m, const std::vector<SignedMonomial>& xi, int n) {
  if (n == 0) return;
  for (std::size_t j = 0; j < xi.size(); ++j) {
    const RationalQ f = power(xi[j], n);
    for (auto& row : m) row[j] = row[j] * f;
  }
}

LaurentQ block_trace(const MixingBlock& b, const Braid3Word& word, const std::vector<int>& flips) {
  const int n = b.size();
  if (n == 1) {
    int w = 0;
    for (const auto& [a, c] : word.blocks) w += a + c;
    return power(b.eigenvalues[0], w).num();
  }
  RadMatrix u = b.U;
  if (!flips.empty()) u = conjugate_by_signs(u, std::vector<int>(flips.begin(), flips.begin() + n));
  const RadMatrix ut = transpose(u);
  std::map<int, RadMatrix> v;  // U R^b U^T
  RadMatrix m = identity_matrix(n);
  for (const auto& [a, c] : word.blocks) {
    auto it = v.find(c);
    if (it == v.end()) {
      RadMatrix t = u;
      scale_columns(t, b.eigenvalues, c);
      it = v.emplace(c, t * ut).first;
    }
    scale_columns(m, b.eigenvalues, a);
    m = m * it->second;
  }
  RadicalScalar tr;
  for (int i = 0; i < n; ++i) tr += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  const RationalQ c = assert_rational(tr);
  if (!c.is_laurent()) throw NonPolynomialResult("trace for " + b.spec.q.str() + " is not a Laurent polynomial");
  return c.num();
}

// S_Q* / S_[r]* as a fraction; the first r cells of row 0 cancel
RationalQA locus_ratio(const YoungDiagram& q, int r) {
  LaurentQA num(1);
  LaurentQ den(1);
  for (int i = 0; i < q.length(); ++i)
    for (int j = 0; j < q.row(i); ++j) {
      if (i > 0 || j >= r) num = num * curly_bracket(LaurentQA::monomial(1, 1, kQDen * (j - i)));
      const int h = q.hook(i, j);
      den *= LaurentQ::q_pow(h) - LaurentQ::q_pow(-h);
    }
  for (int j = 1; j <= r; ++j) num = num * LaurentQA(LaurentQ::q_pow(j) - LaurentQ::q_pow(-j));
  return RationalQA(num, den);
}

}  // namespace

int Braid3Word::writhe() const {
  int w = 0;
  for (const auto& [a, b] : blocks) w += a + b;
  return w;
}

int Braid3Word::crossings() const {
  int c = 0;
  for (const auto& [a, b] : blocks) c += std::abs(a) + std::abs(b);
  return c;
}

int Braid3Word::components() const {
  std::array<int, 3> perm{0, 1, 2};
  for (const auto& [a, b] : blocks) {
    if (a % 2) std::swap(perm[0], perm[1]);
    if (b % 2) std::swap(perm[1], perm[2]);
  }
  std::array<bool, 3> seen{};
  int cycles = 0;
  for (int i = 0; i < 3; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) seen[static_cast<std::size_t>(j)] = true;
  }
  return cycles;
}

Braid3Word Braid3Word::mirrored() const {
  Braid3Word m;
  for (const auto& [a, b] : blocks) m.blocks.emplace_back(-a, -b);
  return m;
}

std::string Braid3Word::str() const {
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += "|";
    s += std::to_string(blocks[i].first) + "," + std::to_string(blocks[i].second);
  }
  return s;
}

Braid3Word Braid3Word::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  Braid3Word w;
  std::size_t pos = 0;
  auto number = [&]() {
    const std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits || pos - digits > 6) throw ParseError("bad braid word '" + text + "'");
    return std::stoi(s.substr(start, pos - start));
  };
  for (;;) {
    const int a = number();
    if (pos >= s.size() || s[pos] != ',') throw ParseError("expected ',' in braid word '" + text + "'");
    ++pos;
    const int b = number();
    w.blocks.emplace_back(a, b);
    if (pos == s.size()) break;
    if (s[pos] != '|') throw ParseError("expected '|' in braid word '" + text + "'");
    ++pos;
  }
  return w;
}

CharacterExpansion character_coefficients(const Braid3Word& word, int r) { return character_coefficients(word, r, {}); }

CharacterExpansion character_coefficients(const Braid3Word& word, int r, const std::vector<int>& sign_flips) {
  if (word.blocks.empty()) throw std::invalid_argument("character_coefficients: empty braid word");
  if (!sign_flips.empty() && sign_flips.size() < static_cast<std::size_t>(kMaxMultiplicity))
    throw std::invalid_argument("character_coefficients: need one sign per multiplicity slot");
  CharacterExpansion out;
  out.r = r;
  for (const BlockSpec& spec : cube_blocks(r)) out.coefficients.emplace(spec.q, block_trace(build_block(spec), word, sign_flips));
  return out;
}

PowerSumL extended_homfly(const CharacterExpansion& c) {
  PowerSumL f;
  for (const auto& [q, coeff] : c.coefficients) {
    const PowerSumQ sq = schur_in_powersums(q);
    for (const auto& [mu, s] : sq.terms()) f.add(mu, coeff.scaled(s));
  }
  return f;
}

PowerSumL extended_homfly(const Braid3Word& word, int r) { return extended_homfly(character_coefficients(word, r)); }

RationalQA reduced_homfly_fraction(const CharacterExpansion& c, int writhe) {
  RationalQA sum;
  for (const auto& [q, coeff] : c.coefficients) {
    if (coeff.is_zero()) continue;
    sum = sum + locus_ratio(q, c.r) * RationalQA(LaurentQA(coeff));
  }
  const int kr = c.r * (c.r - 1) / 2;
  return sum * RationalQA(LaurentQA::monomial(1, -c.r * writhe, -4 * kr * writhe * kQDen));
}

LaurentQA reduced_homfly(const CharacterExpansion& c, int writhe) {
  const RationalQA sum = reduced_homfly_fraction(c, writhe);
  if (!sum.is_laurent()) throw NonPolynomialResult("reduced polynomial keeps denominator " + sum.den().str());
  return sum.num();
}

LaurentQA reduced_homfly(const Braid3Word& word, int r) {
  return reduced_homfly(character_coefficients(word, r), word.writhe());
}

LaurentQA antisymmetric_dual(const LaurentQA& h) { return substitute(h, Subst::QtoMinusQinv); }

LaurentQA special_polynomial(const LaurentQA& h) { return substitute(h, Subst::QtoOne); }

LaurentQ jones_polynomial(const LaurentQA& h) { return substitute(h, Subst::AtoQ2).coeff_of_A(0); }

}  // namespace chomfly
