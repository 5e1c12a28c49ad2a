#include "hilb/partitions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hilb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] <= 0) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (j + 1 < parts_.size() && parts_[j] < parts_[j + 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ += parts_[j];
  }
}

bool Partition::contains(int row, int col) const noexcept {
  return row >= 0 && col >= 0 && row < length() && col < parts_[row];
}

int Partition::arm(int row, int col) const {
  if (!contains(row, col)) throw std::out_of_range("cell outside diagram");
  return parts_[row] - col - 1;
}

int Partition::leg(int row, int col) const {
  if (!contains(row, col)) throw std::out_of_range("cell outside diagram");
  int leg = 0;
  for (int r = row + 1; r < length() && parts_[r] > col; ++r) ++leg;
  return leg;
}

Partition Partition::transpose() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    for (int c = 0; c < parts_.front(); ++c) cols.push_back(leg(0, c) + 1);
  }
  return Partition(std::move(cols));
}

std::vector<Cell> cells(const Partition& p) {
  std::vector<Cell> out;
  out.reserve(p.size());
  for (int r = 0; r < p.length(); ++r) {
    for (int c = 0; c < p.parts()[r]; ++c) {
      out.push_back(Cell{r, c, p.arm(r, c), p.leg(r, c)});
    }
  }
  return out;
}

namespace {

void extend(int remaining, int max_part, std::vector<int>& prefix,
            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    extend(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int m) {
  if (m < 0) throw std::invalid_argument("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend(m, m, prefix, out);
  return out;
}

std::vector<FixedPoint> enumerate_fixed_points(int m) {
  if (m < 0) throw std::invalid_argument("negative subscheme length");
  std::vector<std::vector<Partition>> by_size;
  by_size.reserve(m + 1);
  for (int s = 0; s <= m; ++s) by_size.push_back(enumerate_partitions(s));

  std::vector<FixedPoint> out;
  for (int a = 0; a <= m; ++a) {
    for (int b = 0; a + b <= m; ++b) {
      const int c = m - a - b;
      for (const auto& p0 : by_size[a]) {
        for (const auto& p1 : by_size[b]) {
          for (const auto& p2 : by_size[c]) {
            out.push_back(FixedPoint{{p0, p1, p2}});
          }
        }
      }
    }
  }
  return out;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t j = 0; j < p.parts().size(); ++j) {
    if (j) s += ',';
    s += std::to_string(p.parts()[j]);
  }
  return s + ")";
}

std::string to_string(const FixedPoint& fp) {
  return "[" + to_string(fp.mu[0]) + " " + to_string(fp.mu[1]) + " " +
         to_string(fp.mu[2]) + "]";
}

}  // namespace hilb
