#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "chomfly/qpoly.hpp"

namespace chomfly {

struct UnsupportedRepresentation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class YoungDiagram {
 public:
  YoungDiagram() = default;
  YoungDiagram(std::vector<int> rows);
  YoungDiagram(std::initializer_list<int> rows) : YoungDiagram(std::vector<int>(rows)) {}

  const std::vector<int>& rows() const { return rows_; }
  int size() const;
  int length() const { return static_cast<int>(rows_.size()); }
  int row(int i) const { return i < length() ? rows_[static_cast<std::size_t>(i)] : 0; }
  YoungDiagram transpose() const;
  // hook length of the 0-based cell (i, j)
  int hook(int i, int j) const;
  std::string str() const;
  static YoungDiagram parse(const std::string& s);

  friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) { return a.rows_ <=> b.rows_; }

 private:
  std::vector<int> rows_;
};

int kappa(const YoungDiagram& t);

std::vector<YoungDiagram> partitions(int n);

struct PairChannel {
  YoungDiagram t;
  int sign;
  int exponent;
};
std::vector<PairChannel> pair_decomposition(int r);

struct BlockSpec {
  YoungDiagram q;
  int r = 0;
  int j_min = 0;
  int j_max = 0;
  int multiplicity() const { return j_max - j_min + 1; }
};

inline constexpr int kMaxRep = 4;

std::vector<BlockSpec> cube_blocks(int r);

// exponent of the eigenvalue (-1)^j q^e attached to channel j of [r] x [r]
int channel_exponent(int r, int j);

struct LocusFraction {
  LaurentQA num;
  LaurentQ den;
};
LocusFraction hook_content_dimension(const YoungDiagram& q);

}  // namespace chomfly
