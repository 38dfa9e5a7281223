#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

// Dense univariate integer polynomials, coefficient i of x^i.
namespace chomfly::zpoly {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& a);
inline int degree(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }
mpz_class content(const ZPoly& a);
ZPoly primitive(const ZPoly& a);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly derivative(const ZPoly& a);

// quotient if b divides a exactly in Z[x]
std::optional<ZPoly> divexact(const ZPoly& a, const ZPoly& b);

struct GcdResult {
  ZPoly g;   // primitive, positive leading coefficient
  ZPoly ca;  // a / g
  ZPoly cb;  // b / g
};

// a, b nonzero and primitive
GcdResult gcd(const ZPoly& a, const ZPoly& b);

}  // namespace chomfly::zpoly
