#include "chomfly/young.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace chomfly {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw std::invalid_argument("YoungDiagram: rows must be positive");
    if (i && rows_[i] > rows_[i - 1]) throw std::invalid_argument("YoungDiagram: rows must not increase");
  }
}

int YoungDiagram::size() const {
  int s = 0;
  for (int r : rows_) s += r;
  return s;
}

YoungDiagram YoungDiagram::transpose() const {
  std::vector<int> cols;
  for (int j = 0; j < row(0); ++j) {
    int c = 0;
    while (row(c) > j) ++c;
    cols.push_back(c);
  }
  return YoungDiagram(std::move(cols));
}

int YoungDiagram::hook(int i, int j) const {
  int below = 0;
  while (row(i + below + 1) > j) ++below;
  return row(i) - j + below;
}

std::string YoungDiagram::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rows_[i]);
  }
  return s + "]";
}

YoungDiagram YoungDiagram::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("diagram must look like [l,m,n]: " + text);
  std::vector<int> rows;
  std::stringstream in(s.substr(1, s.size() - 2));
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) throw ParseError("bad row in " + text);
    rows.push_back(std::stoi(part));
  }
  try {
    return YoungDiagram(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

int kappa(const YoungDiagram& t) {
  int k = 0;
  for (int i = 0; i < t.length(); ++i)
    for (int j = 0; j < t.row(i); ++j) k += j - i;
  return k;
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<YoungDiagram>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> partitions(int n) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

int channel_exponent(int r, int j) { return 2 * r * r - (2 * j + 1) * r + j * (j - 1); }

std::vector<PairChannel> pair_decomposition(int r) {
  if (r < 1) throw std::invalid_argument("pair_decomposition: r must be positive");
  std::vector<PairChannel> out;
  for (int j = 0; j <= r; ++j) {
    std::vector<int> rows{2 * r - j};
    if (j) rows.push_back(j);
    out.push_back({YoungDiagram(rows), j % 2 ? -1 : 1, channel_exponent(r, j)});
  }
  return out;
}

std::vector<BlockSpec> cube_blocks(int r) {
  if (r < 1 || r > kMaxRep) throw UnsupportedRepresentation("cube_blocks: r must be in 1.." + std::to_string(kMaxRep));
  std::vector<BlockSpec> out;
  for (const YoungDiagram& q : partitions(3 * r)) {
    if (q.length() > 3) continue;
    const int l = q.row(0), m = q.row(1), n = q.row(2);
    const int jmin = std::max({2 * r - l, n, 0});
    const int jmax = std::min({m, r, 2 * r - m});
    if (jmin > jmax) continue;
    out.push_back({q, r, jmin, jmax});
  }
  return out;
}

LocusFraction hook_content_dimension(const YoungDiagram& q) {
  LocusFraction f{LaurentQA(1), LaurentQ(1)};
  for (int i = 0; i < q.length(); ++i) {
    for (int j = 0; j < q.row(i); ++j) {
      f.num = f.num * curly_bracket(LaurentQA::monomial(1, 1, kQDen * (j - i)));
      const int h = q.hook(i, j);
      f.den = f.den * (LaurentQ::q_pow(h) - LaurentQ::q_pow(-h));
    }
  }
  return f;
}

}  // namespace chomfly
