#include "aztec/oracle.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "aztec/errors.hpp"

namespace aztec::oracle {

namespace {

constexpr int kNoCell = -1;

// Region cells with neighbour lookup by index.
class CellGrid {
 public:
  explicit CellGrid(const RegionSpec& spec) : cells_(cells(spec)) {
    width_ = spec.widest_state() + 2;
    height_ = static_cast<int>(row_lengths(spec).size()) + 2;
    index_.assign(static_cast<std::size_t>(width_ * height_), kNoCell);
    for (std::size_t i = 0; i < cells_.size(); ++i) slot(cells_[i]) = static_cast<int>(i);
  }

  int size() const { return static_cast<int>(cells_.size()); }
  const Cell& cell(int i) const { return cells_[i]; }

  int find(int col, int row) const {
    if (col < 0 || row < 0 || col >= width_ || row >= height_) return kNoCell;
    return index_[static_cast<std::size_t>(row * width_ + col)];
  }
  int right_of(int i) const { return find(cells_[i].col + 1, cells_[i].row); }
  int left_of(int i) const { return find(cells_[i].col - 1, cells_[i].row); }
  int above(int i) const { return find(cells_[i].col, cells_[i].row + 1); }
  int below(int i) const { return find(cells_[i].col, cells_[i].row - 1); }

 private:
  int& slot(const Cell& c) { return index_[static_cast<std::size_t>(c.row * width_ + c.col)]; }

  std::vector<Cell> cells_;
  std::vector<int> index_;
  int width_ = 0;
  int height_ = 0;
};

void check_squares(const RegionSpec& spec, int cap, const char* what) {
  const long long squares = square_count(spec);
  if (squares > cap) throw CapacityError(what, squares, cap);
}

// Depth-first search over covers; `emit` receives the dominoes placed so far
// (as index pairs) at each complete cover.
void search_covers(const CellGrid& grid, std::uint64_t covered,
                   std::vector<std::pair<int, int>>& placed,
                   const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
  const int total = grid.size();
  int first = 0;
  while (first < total && ((covered >> first) & 1U)) ++first;
  if (first == total) {
    emit(placed);
    return;
  }
  const std::uint64_t bit = std::uint64_t{1} << first;
  for (const int partner : {grid.right_of(first), grid.above(first)}) {
    if (partner == kNoCell || ((covered >> partner) & 1U)) continue;
    placed.emplace_back(first, partner);
    search_covers(grid, covered | bit | (std::uint64_t{1} << partner), placed, emit);
    placed.pop_back();
  }
}

}  // namespace

std::vector<Tiling> enumerate_tilings(const RegionSpec& spec, const Limits& limits) {
  check_squares(spec, std::min(limits.oracle_squares, 64), "oracle squares");
  const CellGrid grid(spec);
  std::vector<Tiling> out;
  std::vector<std::pair<int, int>> placed;
  search_covers(grid, 0, placed, [&](const std::vector<std::pair<int, int>>& pairs) {
    Tiling tiling;
    tiling.reserve(pairs.size());
    for (const auto& [a, b] : pairs) tiling.push_back({grid.cell(a), grid.cell(b)});
    std::sort(tiling.begin(), tiling.end());
    out.push_back(std::move(tiling));
  });
  return out;
}

BigCount count_tilings(const RegionSpec& spec, const Limits& limits) {
  check_squares(spec, std::min(limits.oracle_squares, 64), "oracle squares");
  const CellGrid grid(spec);
  std::uint64_t count = 0;
  std::vector<std::pair<int, int>> placed;
  search_covers(grid, 0, placed, [&](const auto&) { ++count; });
  return static_cast<unsigned long>(count);
}

Mosaic tiling_to_mosaic(const Tiling& tiling) {
  Mosaic mosaic;
  for (const Domino& d : tiling) {
    if (d.first.row == d.second.row) {
      mosaic.placement[d.first] = TileKind::T4;
      mosaic.placement[d.second] = TileKind::T1;
    } else {
      mosaic.placement[d.first] = TileKind::T2;
      mosaic.placement[d.second] = TileKind::T3;
    }
  }
  return mosaic;
}

namespace {

std::optional<TileKind> lookup(const Mosaic& m, int col, int row) {
  const auto it = m.placement.find({col, row});
  if (it == m.placement.end()) return std::nullopt;
  return it->second;
}

// Checks every edge of every tile; when `boundary` is set, edges without a
// neighbour must be a.
bool check_edges(const Mosaic& mosaic, bool boundary) {
  for (const auto& [cell, kind] : mosaic.placement) {
    const Tile t = tile(kind);
    const auto right = lookup(mosaic, cell.col + 1, cell.row);
    const auto up = lookup(mosaic, cell.col, cell.row + 1);
    if (right ? tile(*right).left != t.right : boundary && t.right != Letter::a) return false;
    if (up ? tile(*up).bottom != t.top : boundary && t.top != Letter::a) return false;
    if (boundary) {
      if (!lookup(mosaic, cell.col - 1, cell.row) && t.left != Letter::a) return false;
      if (!lookup(mosaic, cell.col, cell.row - 1) && t.bottom != Letter::a) return false;
    }
  }
  return true;
}

}  // namespace

bool is_suitably_adjacent(const Mosaic& mosaic) { return check_edges(mosaic, false); }

bool is_domino_mosaic(const Mosaic& mosaic) { return check_edges(mosaic, true); }

std::vector<Mosaic> enumerate_domino_mosaics(const RegionSpec& spec, const Limits& limits) {
  check_squares(spec, std::min(limits.mosaic_squares, 64), "mosaic squares");
  const CellGrid grid(spec);
  const int total = grid.size();
  std::vector<TileKind> chosen(static_cast<std::size_t>(total));
  std::vector<Mosaic> out;

  // Cells are assigned row-major, so left and lower neighbours are already
  // fixed; right and upper edges are only checked against the boundary here
  // and against neighbours once those are assigned.
  const std::function<void(int)> assign = [&](int i) {
    if (i == total) {
      Mosaic m;
      for (int c = 0; c < total; ++c) m.placement.emplace(grid.cell(c), chosen[c]);
      out.push_back(std::move(m));
      return;
    }
    for (const TileKind kind : kAllTiles) {
      const Tile t = tile(kind);
      const int left = grid.left_of(i);
      const int down = grid.below(i);
      if ((left == kNoCell ? Letter::a : tile(chosen[left]).right) != t.left) continue;
      if ((down == kNoCell ? Letter::a : tile(chosen[down]).top) != t.bottom) continue;
      if (grid.right_of(i) == kNoCell && t.right != Letter::a) continue;
      if (grid.above(i) == kNoCell && t.top != Letter::a) continue;
      chosen[i] = kind;
      assign(i + 1);
    }
  };
  assign(0);
  return out;
}

BigCount count_mosaics_bruteforce(const RegionSpec& spec, const Limits& limits) {
  return static_cast<unsigned long>(enumerate_domino_mosaics(spec, limits).size());
}

std::uint64_t bar_mosaic_count(Letter left, Letter right, const BarState& bottom,
                               const BarState& top) {
  const int k = bottom.length();
  if (top.length() != k) throw std::invalid_argument("bar states differ in length");
  if (k > 12) throw CapacityError("bar mosaic length", k, 12);
  std::uint64_t count = 0;
  std::vector<TileKind> bar(static_cast<std::size_t>(k));
  const std::uint64_t combos = std::uint64_t{1} << (2 * k);
  for (std::uint64_t code = 0; code < combos; ++code) {
    for (int c = 0; c < k; ++c) bar[c] = kAllTiles[(code >> (2 * c)) & 3U];
    bool ok = true;
    Letter carry = left;
    for (int c = 0; c < k && ok; ++c) {
      const Tile t = tile(bar[c]);
      ok = t.left == carry && t.bottom == bottom.at_column(c) && t.top == top.at_column(c);
      carry = t.right;
    }
    if (ok && carry == right) ++count;
  }
  return count;
}

StateMatrix bar_matrix_bruteforce(int k, Letter right) {
  StateMatrix out(k, k);
  for (std::uint64_t i = 0; i < out.rows(); ++i)
    for (std::uint64_t j = 0; j < out.cols(); ++j)
      out.at(i, j) = static_cast<unsigned long>(
          bar_mosaic_count(Letter::a, right, BarState(i, k), BarState(j, k)));
  return out;
}

StateMatrix lower_bar_bruteforce(int m) {
  if (m < 2) throw std::invalid_argument("lower_bar_bruteforce requires m >= 2");
  StateMatrix out(m - 2, m);
  for (std::uint64_t inner = 0; inner < out.rows(); ++inner)
    for (std::uint64_t j = 0; j < out.cols(); ++j)
      out.at(inner, j) = static_cast<unsigned long>(
          bar_mosaic_count(Letter::a, Letter::a, BarState(inner << 1, m), BarState(j, m)));
  return out;
}

}  // namespace aztec::oracle
