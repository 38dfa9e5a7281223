#include "doctest.h"

#include "chomfly/symfun.hpp"

using namespace chomfly;

namespace {

mpq_class frac(long a, long b) { return mpq_class(a) / b; }

PowerSumQ p(const Partition& mu, const mpq_class& c = 1) { return PowerSumQ::monomial(mu, c); }

PowerSumQ cube_of_row(int r) {
  const PowerSumQ s = schur_in_powersums(YoungDiagram{r});
  return s * s * s;
}

}  // namespace

TEST_CASE("centralizer orders") {
  CHECK(z_mu({1, 1, 1}) == 6);
  CHECK(z_mu({3}) == 3);
  CHECK(z_mu({2, 1}) == 2);
  CHECK(z_mu({2, 2, 1}) == 8);
}

TEST_CASE("characters") {
  for (const auto& mu : partitions_of(5)) CHECK(murnaghan_nakayama(YoungDiagram{5}, mu) == 1);
  CHECK(murnaghan_nakayama({1, 1, 1}, {3}) == 1);
  CHECK(murnaghan_nakayama({2, 1}, {3}) == -1);
  CHECK(murnaghan_nakayama({2, 1}, {1, 1, 1}) == 2);
  CHECK(murnaghan_nakayama({3, 2, 1}, {1, 1, 1, 1, 1, 1}) == 16);
  CHECK_THROWS_AS(murnaghan_nakayama({2, 1}, {2}), std::invalid_argument);
}

TEST_CASE("column orthogonality of characters") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : partitions_of(n))
      for (const auto& nu : partitions_of(n)) {
        mpz_class s = 0;
        for (const auto& t : partitions(n)) s += murnaghan_nakayama(t, mu) * murnaghan_nakayama(t, nu);
        CHECK(s == (mu == nu ? z_mu(mu) : mpz_class(0)));
      }
}

TEST_CASE("schur polynomials in power sums") {
  CHECK(schur_in_powersums({1}) == p({1}));
  CHECK(schur_in_powersums({2}) == p({1, 1}, frac(1, 2)) + p({2}, frac(1, 2)));
  CHECK(schur_in_powersums({2, 1}) == p({1, 1, 1}, frac(1, 3)) - p({3}, frac(1, 3)));
  CHECK(schur_in_powersums({3}) == p({1, 1, 1}, frac(1, 6)) + p({2, 1}, frac(1, 2)) + p({3}, frac(1, 3)));
  CHECK(schur_in_powersums({1, 1, 1}) == p({1, 1, 1}, frac(1, 6)) - p({2, 1}, frac(1, 2)) + p({3}, frac(1, 3)));
}

TEST_CASE("adams operation") {
  CHECK(adams(p({1}), 3) == p({3}));
  const auto e = expand_in_schur(adams(schur_in_powersums({1}), 3), 3);
  CHECK(e == std::map<YoungDiagram, mpq_class>{{{3}, 1}, {{2, 1}, -1}, {{1, 1, 1}, 1}});
  const auto c = expand_in_schur(p({1, 1, 1}), 3);
  CHECK(c == std::map<YoungDiagram, mpq_class>{{{3}, 1}, {{2, 1}, 2}, {{1, 1, 1}, 1}});
  CHECK(expand_in_schur(schur_in_powersums({3}), 3) == std::map<YoungDiagram, mpq_class>{{{3}, 1}});
  for (int r = 1; r <= 2; ++r)
    for (const auto& [q, k] : expand_in_schur(adams(schur_in_powersums(YoungDiagram{r}), 3), 3 * r))
      CHECK((k == -1 || k == 0 || k == 1 || k == 2));
  CHECK_THROWS_AS(expand_in_schur(p({1}) + p({2}), 2), std::invalid_argument);
  CHECK_THROWS_AS(adams(p({1}), 0), std::invalid_argument);
}

TEST_CASE("cube identity matches the block decomposition") {
  for (int r = 1; r <= 4; ++r) {
    std::map<YoungDiagram, mpq_class> want;
    for (const auto& b : cube_blocks(r)) want[b.q] = b.multiplicity();
    CHECK(expand_in_schur(cube_of_row(r), 3 * r) == want);
  }
}

TEST_CASE("cut-and-join") {
  CHECK(cut_and_join(p({2})) == p({1, 1}));
  CHECK(cut_and_join(p({1, 1})) == p({2}));
  CHECK(cut_and_join(schur_in_powersums({2})) == schur_in_powersums({2}));
  CHECK(cut_and_join(schur_in_powersums({4, 2})) == schur_in_powersums({4, 2}).scaled(mpq_class(5)));
}

TEST_CASE("schur functions are cut-and-join eigenvectors") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& t : partitions(n)) {
      const PowerSumQ s = schur_in_powersums(t);
      CHECK(cut_and_join(s) == s.scaled(mpq_class(kappa(t))));
    }
}

TEST_CASE("topological locus") {
  const LaurentQ qq = LaurentQ::q_pow(1) - LaurentQ::q_pow(-1);
  const LaurentQA a = curly_bracket(LaurentQA::monomial(1, 1, 0));
  CHECK(topological_locus(p({1})) == RationalQA(a, qq));
  auto c = [](int k) { return curly_bracket(LaurentQA::monomial(1, 1, kQDen * k)); };
  auto br = [](int k) { return LaurentQ::q_pow(k) - LaurentQ::q_pow(-k); };
  CHECK(topological_locus(schur_in_powersums({2, 1})) == RationalQA(c(-1) * c(0) * c(1), br(1) * br(1) * br(3)));
  CHECK(topological_locus(schur_in_powersums({1, 1, 1})) == RationalQA(c(-2) * c(-1) * c(0), br(1) * br(2) * br(3)));
}

TEST_CASE("locus substitution agrees with the hook-content product") {
  for (int n = 1; n <= 12; ++n)
    for (const auto& t : partitions(n)) {
      INFO(t.str());
      const LocusFraction f = hook_content_dimension(t);
      CHECK(topological_locus(schur_in_powersums(t)) == RationalQA(f.num, f.den));
    }
}
