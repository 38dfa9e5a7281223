#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chomfly/qpoly.hpp"
#include "chomfly/racah.hpp"
#include "chomfly/symfun.hpp"
#include "chomfly/young.hpp"

namespace chomfly {

struct NonPolynomialResult : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 3-strand braid sigma_1^a1 sigma_2^b1 sigma_1^a2 sigma_2^b2 ...
struct Braid3Word {
  std::vector<std::pair<int, int>> blocks;

  int writhe() const;
  int crossings() const;
  // number of components of the closure
  int components() const;
  Braid3Word mirrored() const;
  // "a1,b1|a2,b2|..."
  std::string str() const;
  static Braid3Word parse(const std::string& s);
  friend bool operator==(const Braid3Word&, const Braid3Word&) = default;
};

struct CharacterExpansion {
  int r = 0;
  std::map<YoungDiagram, LaurentQ> coefficients;
};

// C_Q = Tr prod_i R^a_i U R^b_i U^T for every Q in [r]^3; sign_flips conjugates each U by D = diag(flips)
CharacterExpansion character_coefficients(const Braid3Word& word, int r);
CharacterExpansion character_coefficients(const Braid3Word& word, int r, const std::vector<int>& sign_flips);

// sum_Q C_Q S_Q in the power sums
PowerSumL extended_homfly(const CharacterExpansion& c);
PowerSumL extended_homfly(const Braid3Word& word, int r);

// framed and divided by the quantum dimension of [r]; throws NonPolynomialResult
// unless the result is Laurent, which is guaranteed for knots only
LaurentQA reduced_homfly(const CharacterExpansion& c, int writhe);
RationalQA reduced_homfly_fraction(const CharacterExpansion& c, int writhe);
LaurentQA reduced_homfly(const Braid3Word& word, int r);

LaurentQA antisymmetric_dual(const LaurentQA& h);
LaurentQA special_polynomial(const LaurentQA& h);
LaurentQ jones_polynomial(const LaurentQA& h);

}  // namespace chomfly
