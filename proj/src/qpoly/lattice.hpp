#pragma once

#include "chomfly/qpoly.hpp"
#include "zpoly.hpp"

// Conversion between Laurent polynomials and dense integer polynomials in x = q^(stride/6).
namespace chomfly::lattice {

zpoly::ZPoly to_dense(const LaurentQ& f, int stride);
LaurentQ from_dense(const zpoly::ZPoly& p, int base, int stride, const mpq_class& scale);
int common_stride(const LaurentQ& a, const LaurentQ& b);

// f = scale * q^base * prim(q^stride), prim primitive with positive leading coefficient
struct Split {
  mpq_class scale;
  int base = 0;
  zpoly::ZPoly prim;
};
Split split(const LaurentQ& f, int stride);

}  // namespace chomfly::lattice
