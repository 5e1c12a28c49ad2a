#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace hilb {

// Integer partition stored as a weakly decreasing list of positive parts.
// Row r of the Young diagram has parts()[r] boxes; cells are (row, col).
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts is weakly decreasing and
  // strictly positive.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  bool contains(int row, int col) const noexcept;
  int arm(int row, int col) const;
  int leg(int row, int col) const;
  Partition transpose() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Cell {
  int row = 0;
  int col = 0;
  int arm = 0;
  int leg = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

// Cells in row-major order.
std::vector<Cell> cells(const Partition& p);

// All partitions of m in reverse-lexicographic order: (m), (m-1,1), ...,
// (1,...,1). The empty partition is the only partition of 0.
std::vector<Partition> enumerate_partitions(int m);

// Torus-fixed subscheme of P^2: one monomial ideal per coordinate chart.
struct FixedPoint {
  std::array<Partition, 3> mu;

  int size() const noexcept {
    return mu[0].size() + mu[1].size() + mu[2].size();
  }
  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

// Every fixed point of Hilb^m(P^2) exactly once. Chart sizes (a, b, c) with
// a + b + c = m run lexicographically, and within one size triple the charts
// run through enumerate_partitions() in nested order (chart 2 fastest).
std::vector<FixedPoint> enumerate_fixed_points(int m);

std::string to_string(const Partition& p);
std::string to_string(const FixedPoint& fp);

}  // namespace hilb
