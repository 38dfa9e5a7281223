#include "doctest.h"

#include <random>

#include "chomfly/radext.hpp"

using namespace chomfly;

namespace {

RationalQ Q(int n) { return RationalQ(quantum_int(n)); }

RadicalScalar random_scalar(std::mt19937& g) {
  std::uniform_int_distribution<int> n(2, 5), c(-3, 3);
  RadicalScalar s = RadicalScalar(RationalQ(c(g)));
  for (int i = 0; i < 2; ++i) s += sqrt_of(Q(n(g))) * RationalQ(LaurentQ::monomial(c(g), kQDen * c(g)));
  return s;
}

}  // namespace

TEST_CASE("square roots") {
  const RadicalScalar s = sqrt_of(Q(3) * Q(3));
  CHECK(s.is_rational());
  CHECK(s.rational_part() == Q(3));

  const RadicalScalar r3 = sqrt_of(Q(3));
  CHECK_FALSE(r3.is_rational());
  CHECK(r3.parts().size() == 1);
  CHECK(r3.parts().begin()->first.body.min_exp6() == 0);
  CHECK(r3.parts().begin()->first.body.coeff(0) == 1);

  CHECK(sqrt_of(Q(2) * Q(2) * Q(3)) == r3 * Q(2));
  CHECK(sqrt_of(RationalQ()).is_zero());
}

TEST_CASE("products") {
  const RadicalScalar r3 = sqrt_of(Q(3));
  CHECK(r3 * r3 == RadicalScalar(Q(3)));
  const RationalQ inv2 = Q(2).inverse();
  const RadicalScalar a = RadicalScalar(inv2) + r3 * inv2;
  const RadicalScalar b = RadicalScalar(inv2) - r3 * inv2;
  CHECK(assert_rational(a * b) == (RationalQ(1) - Q(3)) * inv2 * inv2);
  CHECK((r3 * RadicalScalar()).is_zero());
  CHECK((sqrt_of(Q(2)) * sqrt_of(Q(6))) == sqrt_of(Q(2) * Q(6)));
}

TEST_CASE("radical-freeness certificate") {
  CHECK(assert_rational(RadicalScalar(5)) == RationalQ(5));
  const RadicalScalar r3 = sqrt_of(Q(3));
  CHECK(assert_rational(r3 * RationalQ(0) + RadicalScalar(7)) == RationalQ(7));
  CHECK_THROWS_AS(assert_rational(r3 + RadicalScalar(1)), NonVanishingRadical);
}

TEST_CASE("ring laws on random elements") {
  std::mt19937 g(17);
  for (int i = 0; i < 25; ++i) {
    const RadicalScalar a = random_scalar(g), b = random_scalar(g), c = random_scalar(g);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}
