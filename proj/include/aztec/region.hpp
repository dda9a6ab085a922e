#pragma once

#include <compare>
#include <vector>

namespace aztec {

// Parameters (p, q, n) of the expanded Aztec diamond: p extra middle
// columns, q extra middle rows, order n.
class RegionSpec {
 public:
  // Throws std::invalid_argument when any parameter is negative.
  RegionSpec(int p, int q, int n);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int n() const noexcept { return n_; }

  // Longest bar state met while stacking the rows (p + 2n).
  int widest_state() const noexcept { return p_ + 2 * n_; }

  // The region rotated by a quarter turn.
  RegionSpec transposed() const noexcept { return RegionSpec(q_, p_, n_); }

  friend bool operator==(const RegionSpec&, const RegionSpec&) = default;

 private:
  int p_;
  int q_;
  int n_;
};

// A unit square addressed by 1-based column (left to right) and row (bottom
// to top). The widest rows span columns 1..2n+p.
struct Cell {
  int col = 0;
  int row = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct RegionGeometry {
  std::vector<int> row_lengths;  // bottom to top
  std::vector<Cell> cells;       // row-major, bottom row first
  long long square_count = 0;
};

// Row lengths bottom to top. Empty when the region has no squares; for n = 0
// the region is the p x q rectangle.
std::vector<int> row_lengths(const RegionSpec& spec);

// 2n(n+p+q+1) + pq.
long long square_count(const RegionSpec& spec);

// Cells ordered by row, then column.
std::vector<Cell> cells(const RegionSpec& spec);

RegionGeometry geometry(const RegionSpec& spec);

// True when pq is odd, i.e. the region has an odd number of squares and
// admits no tiling.
bool has_odd_area(const RegionSpec& spec) noexcept;

}  // namespace aztec
