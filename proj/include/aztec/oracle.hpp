#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "aztec/bar_state.hpp"
#include "aztec/big_count.hpp"
#include "aztec/limits.hpp"
#include "aztec/region.hpp"
#include "aztec/state_matrix.hpp"

// Brute-force ground truth: exhaustive domino tilings of region cells and the
// tile-mosaic formalism they correspond to. Nothing here shares code with the
// transfer matrices.
namespace aztec::oracle {

enum class TileKind : std::uint8_t { T1, T2, T3, T4 };

// A square holding half a domino. Exactly one edge is b: the edge the domino
// crosses into its other half.
struct Tile {
  TileKind kind;
  Letter left;
  Letter right;
  Letter top;
  Letter bottom;
};

// T1: b on the left, T2: b on top, T3: b on the bottom, T4: b on the right.
constexpr Tile tile(TileKind kind) {
  switch (kind) {
    case TileKind::T1: return {kind, Letter::b, Letter::a, Letter::a, Letter::a};
    case TileKind::T2: return {kind, Letter::a, Letter::a, Letter::b, Letter::a};
    case TileKind::T3: return {kind, Letter::a, Letter::a, Letter::a, Letter::b};
    case TileKind::T4: return {kind, Letter::a, Letter::b, Letter::a, Letter::a};
  }
  return {kind, Letter::a, Letter::a, Letter::a, Letter::a};
}

inline constexpr TileKind kAllTiles[] = {TileKind::T1, TileKind::T2, TileKind::T3, TileKind::T4};

// An unordered pair of edge-adjacent cells, stored with first < second.
struct Domino {
  Cell first;
  Cell second;

  friend auto operator<=>(const Domino&, const Domino&) = default;
};

// Dominoes sorted ascending.
using Tiling = std::vector<Domino>;

// Tile per cell. The key set is taken as the region: an edge with no
// neighbouring key is a boundary edge.
struct Mosaic {
  std::map<Cell, TileKind> placement;

  friend bool operator==(const Mosaic&, const Mosaic&) = default;
  friend auto operator<=>(const Mosaic& lhs, const Mosaic& rhs) {
    return lhs.placement <=> rhs.placement;
  }
};

// Every perfect domino cover of the region, once each. Search branches on the
// first uncovered cell (row-major from the bottom), horizontal before
// vertical. Throws CapacityError above limits.oracle_squares.
std::vector<Tiling> enumerate_tilings(const RegionSpec& spec, const Limits& limits = {});

// Same search without materializing tilings.
BigCount count_tilings(const RegionSpec& spec, const Limits& limits = {});

// Horizontal dominoes become (T4, T1) left to right; vertical ones (T2, T3)
// bottom to top.
Mosaic tiling_to_mosaic(const Tiling& tiling);

// Abutting edges of neighbouring tiles carry equal letters.
bool is_suitably_adjacent(const Mosaic& mosaic);

// Suitably adjacent and every boundary edge is a.
bool is_domino_mosaic(const Mosaic& mosaic);

// All tile placements on the region passing is_domino_mosaic, found by a
// pruned 4^cells search. Throws CapacityError above limits.mosaic_squares.
std::vector<Mosaic> enumerate_domino_mosaics(const RegionSpec& spec, const Limits& limits = {});
BigCount count_mosaics_bruteforce(const RegionSpec& spec, const Limits& limits = {});

// Number of suitably adjacent single-row bars with the given side and
// bottom/top states, over all 4^k tile choices (k = bottom.length()).
std::uint64_t bar_mosaic_count(Letter left, Letter right, const BarState& bottom,
                               const BarState& top);

// Dense matrix of bar_mosaic_count(a, right, i, j) for k-tile bars.
StateMatrix bar_matrix_bruteforce(int k, Letter right);

// Lower-row matrix by enumeration: rows are inner bottom states of length
// m-2 (the outer two bottom letters forced to a), columns full top states.
StateMatrix lower_bar_bruteforce(int m);

}  // namespace aztec::oracle
