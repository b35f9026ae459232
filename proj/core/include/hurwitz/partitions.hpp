#pragma once

#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Integer partition; parts weakly decreasing and positive.  The empty
// partition labels the vacuum.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }  // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;

  // Twice the i-th shifted half-integer lambda_i - i + 1/2 (1-based i,
  // parts beyond the length count as zero).
  long beta2(int i) const {
    int li = i <= length() ? parts_[i - 1] : 0;
    return 2L * li - 2L * i + 1;
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator<(const Partition& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    return parts_ < o.parts_;
  }

  std::string str() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of d, largest-first ordering, e.g. (3), (2,1), (1,1,1).
std::vector<Partition> enumerate_partitions(int d);

// A single border-strip move realizing one step of the alpha_n action.
struct RibbonMove {
  Partition result;
  int sign;          // (-1)^(rows spanned - 1)
  long beta2_from;   // twice the shifted half-integer that moved
  long beta2_to;
};

// All ways to act with alpha_n on the basis vector of `p`: for n > 0 remove a
// border strip of n cells, for n < 0 add one of |n| cells.
std::vector<RibbonMove> ribbon_moves(const Partition& p, int n);

// Eigenvalue of the second diagonal operator: sum_i ((l_i - i + 1/2)^2 - (-i + 1/2)^2)/2.
Rat f2_eigenvalue(const Partition& p);

}  // namespace hurwitz
