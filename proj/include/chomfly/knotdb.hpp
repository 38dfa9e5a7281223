#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chomfly/braid.hpp"
#include "chomfly/qpoly.hpp"

namespace chomfly {

struct UnknownKnot : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct MissingFixture : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// checksum or header does not match the fixture body
struct CorruptFixture : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KnotEntry {
  std::string name;  // Rolfsen label, e.g. "8_19"
  Braid3Word word;
  std::vector<Braid3Word> equivalent_words;
  std::map<int, LaurentQA> golden;
};

// golden entry known to disagree with the computed value
struct QuarantineEntry {
  std::string knot;
  int r = 0;
  std::string reason;
};

// directory holding <knot>_r<r>.txt fixtures; defaults to the source tree's data/golden
std::filesystem::path fixture_dir();
void set_fixture_dir(const std::filesystem::path& dir);

// catalog names in table order
const std::vector<std::string>& knot_names();

// throws UnknownKnot
KnotEntry lookup(const std::string& name);

// throws UnknownKnot, MissingFixture, CorruptFixture
LaurentQA golden(const std::string& name, int r);

struct Fixture {
  std::string knot;
  int r = 0;
  std::string body;
  std::string sha256;
};
Fixture read_fixture(const std::filesystem::path& file);
std::string sha256_hex(const std::string& s);

// entries listed in quarantine.txt next to the fixtures
std::vector<QuarantineEntry> quarantine();
bool is_quarantined(const std::string& name, int r);

}  // namespace chomfly
