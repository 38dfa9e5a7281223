#include "doctest.h"

#include <map>

#include "chomfly/young.hpp"

using namespace chomfly;

namespace {

struct Triple {
  int j_min, j_max, n;
  friend bool operator==(const Triple&, const Triple&) = default;
};

std::map<std::string, Triple> blocks(int r) {
  std::map<std::string, Triple> m;
  for (const auto& b : cube_blocks(r)) m[b.q.str()] = {b.j_min, b.j_max, b.multiplicity()};
  return m;
}

}  // namespace

TEST_CASE("kappa anchors") {
  CHECK(kappa({2}) == 1);
  CHECK(kappa({1, 1}) == -1);
  CHECK(kappa({4, 2}) == 5);
  CHECK(kappa({6}) == 15);
}

TEST_CASE("kappa is odd under transposition") {
  for (int n = 1; n <= 12; ++n)
    for (const auto& t : partitions(n)) CHECK(kappa(t) + kappa(t.transpose()) == 0);
}

TEST_CASE("diagram text format") {
  const YoungDiagram d = YoungDiagram::parse("[4,2,1]");
  CHECK(d == YoungDiagram{4, 2, 1});
  CHECK(d.str() == "[4,2,1]");
  CHECK(d.hook(0, 0) == 6);
  CHECK(d.transpose() == YoungDiagram{3, 2, 1, 1});
  CHECK_THROWS_AS(YoungDiagram::parse("4,2"), ParseError);
  CHECK_THROWS(YoungDiagram({1, 2}));
}

TEST_CASE("pair decomposition") {
  auto r1 = pair_decomposition(1);
  REQUIRE(r1.size() == 2);
  CHECK(r1[0].t == YoungDiagram{2});
  CHECK(r1[0].sign == 1);
  CHECK(r1[0].exponent == 1);
  CHECK(r1[1].t == YoungDiagram{1, 1});
  CHECK(r1[1].sign == -1);
  CHECK(r1[1].exponent == -1);
  const std::vector<int> e2{6, 2, 0}, e3{15, 9, 5, 3};
  for (auto [r, want] : {std::pair{2, e2}, std::pair{3, e3}}) {
    auto d = pair_decomposition(r);
    REQUIRE(d.size() == want.size());
    for (std::size_t j = 0; j < d.size(); ++j) {
      CHECK(d[j].exponent == want[j]);
      CHECK(d[j].sign == (j % 2 ? -1 : 1));
      CHECK(d[j].exponent == kappa(d[j].t));
      CHECK(d[j].exponent == channel_exponent(r, static_cast<int>(j)));
    }
  }
}

TEST_CASE("cube blocks r=2") {
  const std::map<std::string, Triple> want = {
      {"[6]", {0, 0, 1}}, {"[5,1]", {0, 1, 2}}, {"[4,2]", {0, 2, 3}}, {"[4,1,1]", {1, 1, 1}},
      {"[3,3]", {1, 1, 1}}, {"[3,2,1]", {1, 2, 2}}, {"[2,2,2]", {2, 2, 1}}};
  CHECK(blocks(2) == want);
}

TEST_CASE("cube blocks r=3") {
  const std::map<std::string, Triple> want = {
      {"[9]", {0, 0, 1}}, {"[8,1]", {0, 1, 2}}, {"[7,2]", {0, 2, 3}}, {"[7,1,1]", {1, 1, 1}},
      {"[6,3]", {0, 3, 4}}, {"[6,2,1]", {1, 2, 2}}, {"[5,4]", {1, 2, 2}}, {"[5,3,1]", {1, 3, 3}},
      {"[5,2,2]", {2, 2, 1}}, {"[4,4,1]", {2, 2, 1}}, {"[4,3,2]", {2, 3, 2}}, {"[3,3,3]", {3, 3, 1}}};
  CHECK(blocks(3) == want);
}

TEST_CASE("cube blocks r=4") {
  const std::map<std::string, Triple> want = {
      {"[12]", {0, 0, 1}}, {"[11,1]", {0, 1, 2}}, {"[10,2]", {0, 2, 3}}, {"[10,1,1]", {1, 1, 1}},
      {"[9,3]", {0, 3, 4}}, {"[9,2,1]", {1, 2, 2}}, {"[8,4]", {0, 4, 5}}, {"[8,3,1]", {1, 3, 3}},
      {"[8,2,2]", {2, 2, 1}}, {"[7,5]", {1, 3, 3}}, {"[7,4,1]", {1, 4, 4}}, {"[7,3,2]", {2, 3, 2}},
      {"[6,6]", {2, 2, 1}}, {"[6,5,1]", {2, 3, 2}}, {"[6,4,2]", {2, 4, 3}}, {"[6,3,3]", {3, 3, 1}},
      {"[5,5,2]", {3, 3, 1}}, {"[5,4,3]", {3, 4, 2}}, {"[4,4,4]", {4, 4, 1}}};
  CHECK(blocks(4) == want);
  CHECK_THROWS_AS(cube_blocks(5), UnsupportedRepresentation);
  CHECK_THROWS_AS(cube_blocks(0), UnsupportedRepresentation);
}

TEST_CASE("eigenvalue exponents decrease along each block") {
  for (int r = 1; r <= kMaxRep; ++r)
    for (const auto& b : cube_blocks(r))
      for (int j = b.j_min; j < b.j_max; ++j) CHECK(channel_exponent(r, j) > channel_exponent(r, j + 1));
}

TEST_CASE("hook-content dimension") {
  const LaurentQ qq = LaurentQ::q_pow(1) - LaurentQ::q_pow(-1);
  const LocusFraction one = hook_content_dimension({1});
  CHECK(one.num == curly_bracket(LaurentQA::monomial(1, 1, 0)));
  CHECK(one.den == qq);
  const LocusFraction f = hook_content_dimension({2, 1});
  auto c = [](int k) { return curly_bracket(LaurentQA::monomial(1, 1, kQDen * k)); };
  CHECK(f.num == c(-1) * c(0) * c(1));
  CHECK(f.den == qq * qq * (LaurentQ::q_pow(3) - LaurentQ::q_pow(-3)));
}

TEST_CASE("kappa row formula with 0-based rows") {
  for (int n = 1; n <= 10; ++n)
    for (const auto& t : partitions(n)) {
      int twice = 0;
      for (int a = 0; a < t.length(); ++a) twice += t.row(a) * (t.row(a) - 2 * a - 1);
      CHECK(twice == 2 * kappa(t));
    }
}
