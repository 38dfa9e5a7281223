#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>

#include "chomfly/knotdb.hpp"

using namespace chomfly;
namespace fs = std::filesystem;

namespace {

LaurentQA P(const char* s) { return LaurentQA::parse(s); }

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("chomfly_knotdb_" + std::to_string(std::random_device{}()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct DirGuard {
  fs::path saved = fixture_dir();
  ~DirGuard() { set_fixture_dir(saved); }
};

}  // namespace

TEST_CASE("catalog") {
  const std::vector<std::string> want = {"3_1", "4_1", "5_2", "6_2", "6_3", "7_3", "7_5", "8_2", "8_5", "8_7",
                                         "8_9", "8_10", "8_16", "8_17", "8_18", "8_19", "8_20", "8_21", "10_139"};
  CHECK(knot_names() == want);
  CHECK(lookup("3_1").word == Braid3Word::parse("-1,-1|-1,-1"));
  CHECK(lookup("10_139").word == Braid3Word::parse("2,3|1,4"));
  const KnotEntry k = lookup("8_19");
  CHECK(k.word == Braid3Word::parse("1,3|1,3"));
  REQUIRE(k.equivalent_words.size() == 1);
  CHECK(k.equivalent_words[0] == Braid3Word::parse("1,1|1,1|1,1|1,1"));
  CHECK(lookup("8_16").word.blocks.size() == 3);
  CHECK(lookup("8_17").word.blocks.size() == 3);
  CHECK(lookup("8_18").word.blocks.size() == 4);
  CHECK_THROWS_AS(lookup("9_42"), UnknownKnot);
  for (const auto& name : knot_names()) CHECK(lookup(name).word.components() == 1);
}

TEST_CASE("fixtures") {
  CHECK(golden("4_1", 1) == P("A^-2 - q^2 + 1 - q^-2 + A^2"));
  CHECK(golden("3_1", 1) == P("A^4*((q^2 + q^-2)*A^-2 - 1)"));
  CHECK(golden("8_19", 1) == P("A^-8*(A^-2 + (-q^4 - q^2 - 1 - q^-2 - q^-4) + (q^6 + q^2 + 1 + q^-2 + q^-6)*A^2)"));
  for (const auto& name : knot_names()) {
    const KnotEntry e = lookup(name);
    CHECK(e.golden.size() == 4);
    for (const auto& [r, h] : e.golden) {
      const Fixture f = read_fixture(fixture_dir() / (name + "_r" + std::to_string(r) + ".txt"));
      CHECK(f.knot == name);
      CHECK(f.r == r);
      CHECK(h.str() == f.body);
      CHECK(LaurentQA::parse(f.body).str() == f.body);
    }
  }
  CHECK_THROWS_AS(golden("4_1", 5), MissingFixture);
  CHECK_THROWS_AS(golden("nope", 1), UnknownKnot);
}

TEST_CASE("corrupted and missing fixtures are rejected") {
  DirGuard guard;
  TempDir tmp;
  const std::string body = "A^2 - q^2 + 1 - q^-2 + A^-2";
  {
    std::ofstream(tmp.path / "4_1_r1.txt") << "4_1 1\n" << body << "\nsha256 " << sha256_hex(body) << "\n";
    std::ofstream(tmp.path / "4_1_r2.txt") << "4_1 2\n" << "A^2 - q^2 + 2 - q^-2 + A^-2" << "\nsha256 " << sha256_hex(body) << "\n";
    std::ofstream(tmp.path / "4_1_r3.txt") << "4_1 1\n" << body << "\nsha256 " << sha256_hex(body) << "\n";
    const std::string messy = "A^2 + 1 - q^2 - q^-2 + A^-2";
    std::ofstream(tmp.path / "4_1_r4.txt") << "4_1 4\n" << messy << "\nsha256 " << sha256_hex(messy) << "\n";
  }
  set_fixture_dir(tmp.path);
  CHECK(golden("4_1", 1) == P(body.c_str()));
  CHECK_THROWS_AS(golden("4_1", 2), CorruptFixture);
  CHECK_THROWS_AS(golden("4_1", 3), CorruptFixture);
  CHECK_THROWS_AS(golden("4_1", 4), CorruptFixture);
  CHECK_THROWS_AS(golden("3_1", 1), MissingFixture);
  CHECK(quarantine().empty());
}

TEST_CASE("equivalent words of 8_19 agree") {
  const KnotEntry k = lookup("8_19");
  for (int r = 1; r <= kMaxRep; ++r) CHECK(reduced_homfly(k.word, r) == reduced_homfly(k.equivalent_words[0], r));
}

TEST_CASE("computed values against fixtures, quarantine list is exact") {
  for (const auto& name : knot_names()) {
    const KnotEntry e = lookup(name);
    for (const auto& [r, h] : e.golden) {
      INFO(name << " r=" << r);
      const bool match = reduced_homfly(e.word, r) == h;
      CHECK(match != is_quarantined(name, r));
    }
  }
  CHECK(quarantine().size() == 6);
}

TEST_CASE("quarantined fixtures fail the special-polynomial law, computed values satisfy it") {
  for (const auto& q : quarantine()) {
    INFO(q.knot << " r=" << q.r);
    const LaurentQA h1 = special_polynomial(reduced_homfly(lookup(q.knot).word, 1));
    const LaurentQA computed = special_polynomial(reduced_homfly(lookup(q.knot).word, q.r));
    CHECK(computed == h1.pow(static_cast<unsigned>(q.r)));
    if (q.r > 1) CHECK_FALSE(special_polynomial(golden(q.knot, q.r)) == h1.pow(static_cast<unsigned>(q.r)));
  }
}
