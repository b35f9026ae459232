#include "hurwitz/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> t(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++t[j];
  return Partition(std::move(t));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i)
    os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

namespace {
void gen_parts(int rest, int max_part, std::vector<int>& cur,
               std::vector<Partition>& out) {
  if (rest == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(rest, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_parts(rest - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int d) {
  if (d < 0) throw std::invalid_argument("enumerate_partitions: d >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_parts(d, d == 0 ? 1 : d, cur, out);
  return out;
}

std::vector<RibbonMove> ribbon_moves(const Partition& p, int n) {
  if (n == 0) throw std::invalid_argument("ribbon_moves: n must be nonzero");
  std::vector<RibbonMove> out;
  const int len = p.length();
  // Removal (n > 0) can only move one of the first len betas; addition can
  // also lift a beta from up to |n| positions inside the vacuum tail.
  const int span = n > 0 ? len : len - n;
  std::set<long> occupied;
  for (int i = 1; i <= span + std::abs(n) + 2; ++i) occupied.insert(p.beta2(i));

  for (int i = 1; i <= span; ++i) {
    long from = p.beta2(i);
    long to = from - 2L * n;
    if (occupied.count(to)) continue;
    // ribbon height = occupied betas strictly between the endpoints
    long lo = std::min(from, to), hi = std::max(from, to);
    int crossings = 0;
    for (long b : occupied)
      if (b > lo && b < hi) ++crossings;

    std::vector<long> betas;
    for (int j = 1; j <= span + 1; ++j) betas.push_back(p.beta2(j));
    std::replace(betas.begin(), betas.end(), from, to);
    std::sort(betas.rbegin(), betas.rend());
    std::vector<int> parts;
    for (size_t j = 0; j < betas.size(); ++j) {
      long lj = (betas[j] - 1) / 2 + static_cast<long>(j + 1);
      if (lj > 0) parts.push_back(static_cast<int>(lj));
    }
    out.push_back(RibbonMove{Partition(std::move(parts)),
                             crossings % 2 == 0 ? 1 : -1, from, to});
  }
  return out;
}

Rat f2_eigenvalue(const Partition& p) {
  Rat acc = 0;
  for (int i = 1; i <= p.length(); ++i) {
    long a = p.beta2(i);      // 2(l_i - i) + 1
    long b = -2L * i + 1;     // vacuum counterpart
    acc += Rat(a * a - b * b, 8);
  }
  return acc;
}

}  // namespace hurwitz
