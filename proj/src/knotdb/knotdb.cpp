#include "chomfly/knotdb.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <mutex>
#include <sstream>

#ifndef CHOMFLY_FIXTURE_DIR
#define CHOMFLY_FIXTURE_DIR "data/golden"
#endif

namespace chomfly {

namespace {

struct CatalogRow {
  const char* name;
  const char* word;
  std::vector<const char*> equivalent;
};

const std::vector<CatalogRow>& catalog() {
  static const std::vector<CatalogRow> rows = {
      {"3_1", "-1,-1|-1,-1", {}},
      {"4_1", "1,-1|1,-1", {}},
      {"5_2", "1,-1|1,3", {}},
      {"6_2", "1,-1|1,-3", {}},
      {"6_3", "2,-1|1,-2", {}},
      {"7_3", "1,-1|1,5", {}},
      {"7_5", "-2,1|-1,-4", {}},
      {"8_2", "1,-1|1,-5", {}},
      {"8_5", "-1,3|-1,3", {}},
      {"8_7", "-2,1|-1,4", {}},
      {"8_9", "3,-1|1,-3", {}},
      {"8_10", "-2,2|-1,3", {}},
      {"8_16", "1,-1|1,-2|1,-2", {}},
      {"8_17", "2,-1|1,-1|1,-2", {}},
      {"8_18", "1,-1|1,-1|1,-1|1,-1", {}},
      {"8_19", "1,3|1,3", {"1,1|1,1|1,1|1,1"}},
      {"8_20", "-1,-3|-1,3", {}},
      {"8_21", "-2,2|-1,-3", {}},
      {"10_139", "2,3|1,4", {}},
  };
  return rows;
}

const CatalogRow& row(const std::string& name) {
  for (const auto& r : catalog())
    if (name == r.name) return r;
  throw UnknownKnot("unknown knot '" + name + "'");
}

std::mutex dir_mutex;
std::filesystem::path& dir_ref() {
  static std::filesystem::path d = CHOMFLY_FIXTURE_DIR;
  return d;
}

}  // namespace

std::filesystem::path fixture_dir() {
  std::lock_guard lock(dir_mutex);
  return dir_ref();
}

void set_fixture_dir(const std::filesystem::path& dir) {
  std::lock_guard lock(dir_mutex);
  dir_ref() = dir;
}

const std::vector<std::string>& knot_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& r : catalog()) v.emplace_back(r.name);
    return v;
  }();
  return names;
}

std::string sha256_hex(const std::string& s) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (!EVP_Digest(s.data(), s.size(), md.data(), &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

Fixture read_fixture(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw MissingFixture("cannot open " + file.string());
  std::string header, body, sum;
  std::getline(in, header);
  std::getline(in, body);
  std::getline(in, sum);
  Fixture f;
  std::istringstream hs(header);
  if (!(hs >> f.knot >> f.r)) throw CorruptFixture(file.string() + ": bad header");
  f.body = body;
  const std::string tag = "sha256 ";
  if (sum.rfind(tag, 0) != 0) throw CorruptFixture(file.string() + ": missing checksum");
  f.sha256 = sum.substr(tag.size());
  if (sha256_hex(f.body) != f.sha256) throw CorruptFixture(file.string() + ": checksum mismatch");
  return f;
}

LaurentQA golden(const std::string& name, int r) {
  row(name);
  const auto file = fixture_dir() / (name + "_r" + std::to_string(r) + ".txt");
  if (!std::filesystem::exists(file)) throw MissingFixture("no fixture for " + name + " r=" + std::to_string(r));
  const Fixture f = read_fixture(file);
  if (f.knot != name || f.r != r) throw CorruptFixture(file.string() + ": header names " + f.knot + " r=" + std::to_string(f.r));
  LaurentQA h = LaurentQA::parse(f.body);
  if (h.str() != f.body) throw CorruptFixture(file.string() + ": not in canonical form");
  return h;
}

KnotEntry lookup(const std::string& name) {
  const CatalogRow& c = row(name);
  KnotEntry e;
  e.name = c.name;
  e.word = Braid3Word::parse(c.word);
  for (const char* w : c.equivalent) e.equivalent_words.push_back(Braid3Word::parse(w));
  for (int r = 1; r <= kMaxRep; ++r) {
    try {
      e.golden.emplace(r, golden(name, r));
    } catch (const MissingFixture&) {
    }
  }
  return e;
}

std::vector<QuarantineEntry> quarantine() {
  std::vector<QuarantineEntry> out;
  std::ifstream in(fixture_dir() / "quarantine.txt");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    QuarantineEntry q;
    if (!(ls >> q.knot >> q.r)) continue;
    std::getline(ls >> std::ws, q.reason);
    out.push_back(std::move(q));
  }
  return out;
}

bool is_quarantined(const std::string& name, int r) {
  const auto q = quarantine();
  return std::any_of(q.begin(), q.end(), [&](const QuarantineEntry& e) { return e.knot == name && e.r == r; });
}

}  // namespace chomfly
