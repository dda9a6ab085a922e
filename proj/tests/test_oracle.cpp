#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "aztec/errors.hpp"
#include "aztec/oracle.hpp"

using aztec::Cell;
using aztec::RegionSpec;
namespace oracle = aztec::oracle;
using oracle::TileKind;

TEST_CASE("each tile has exactly one b edge") {
  for (const TileKind kind : oracle::kAllTiles) {
    const oracle::Tile t = oracle::tile(kind);
    const int bs = (t.left == aztec::Letter::b) + (t.right == aztec::Letter::b) +
                   (t.top == aztec::Letter::b) + (t.bottom == aztec::Letter::b);
    CHECK(bs == 1);
  }
  CHECK(oracle::tile(TileKind::T1).left == aztec::Letter::b);
  CHECK(oracle::tile(TileKind::T2).top == aztec::Letter::b);
  CHECK(oracle::tile(TileKind::T3).bottom == aztec::Letter::b);
  CHECK(oracle::tile(TileKind::T4).right == aztec::Letter::b);
}

TEST_CASE("tiling enumeration on small regions") {
  CHECK(oracle::enumerate_tilings({0, 0, 1}).size() == 2);
  CHECK(oracle::enumerate_tilings({2, 3, 0}).size() == 3);
  CHECK(oracle::enumerate_tilings({1, 1, 0}).empty());
  CHECK(oracle::enumerate_tilings({0, 0, 0}).size() == 1);
  CHECK(oracle::count_tilings({1, 0, 1}) == 3);
  CHECK(oracle::count_tilings({0, 0, 2}) == 8);
  CHECK(oracle::count_tilings({4, 4, 0}) == 36);
}

TEST_CASE("enumeration order is deterministic and tilings are canonical") {
  const auto tilings = oracle::enumerate_tilings({0, 0, 1});
  REQUIRE(tilings.size() == 2);
  // Horizontal before vertical at the first uncovered cell.
  const oracle::Tiling horizontal{{{1, 1}, {2, 1}}, {{1, 2}, {2, 2}}};
  const oracle::Tiling vertical{{{1, 1}, {1, 2}}, {{2, 1}, {2, 2}}};
  CHECK(tilings[0] == horizontal);
  CHECK(tilings[1] == vertical);

  for (const auto& t : oracle::enumerate_tilings({2, 2, 1})) {
    CHECK(std::is_sorted(t.begin(), t.end()));
    std::set<Cell> covered;
    for (const auto& d : t) {
      CHECK(d.first < d.second);
      const int distance = std::abs(d.first.col - d.second.col) + std::abs(d.first.row - d.second.row);
      CHECK(distance == 1);
      covered.insert(d.first);
      covered.insert(d.second);
    }
    CHECK(covered.size() == 2 * t.size());
    CHECK(static_cast<long long>(covered.size()) == aztec::square_count({2, 2, 1}));
  }
}

TEST_CASE("tiling to mosaic conversion") {
  const oracle::Tiling horizontal{{{1, 1}, {2, 1}}};
  const auto h = oracle::tiling_to_mosaic(horizontal);
  CHECK(h.placement.at({1, 1}) == TileKind::T4);
  CHECK(h.placement.at({2, 1}) == TileKind::T1);

  const oracle::Tiling vertical{{{1, 1}, {1, 2}}};
  const auto v = oracle::tiling_to_mosaic(vertical);
  CHECK(v.placement.at({1, 1}) == TileKind::T2);
  CHECK(v.placement.at({1, 2}) == TileKind::T3);

  std::set<oracle::Mosaic> images;
  for (const auto& t : oracle::enumerate_tilings({0, 0, 1})) {
    const auto m = oracle::tiling_to_mosaic(t);
    CHECK(oracle::is_domino_mosaic(m));
    images.insert(m);
  }
  CHECK(images.size() == 2);
}

TEST_CASE("mosaic validation") {
  oracle::Mosaic all_t1;
  for (const Cell& c : aztec::cells({0, 0, 1})) all_t1.placement[c] = TileKind::T1;
  CHECK_FALSE(oracle::is_domino_mosaic(all_t1));

  // T4 beside T2: b meets a.
  oracle::Mosaic mismatch;
  mismatch.placement[{1, 1}] = TileKind::T4;
  mismatch.placement[{2, 1}] = TileKind::T2;
  CHECK_FALSE(oracle::is_suitably_adjacent(mismatch));
  CHECK_FALSE(oracle::is_domino_mosaic(mismatch));

  // Suitably adjacent but with b on the boundary.
  oracle::Mosaic open;
  open.placement[{1, 1}] = TileKind::T2;
  CHECK(oracle::is_suitably_adjacent(open));
  CHECK_FALSE(oracle::is_domino_mosaic(open));
}

TEST_CASE("mosaic brute force counts") {
  CHECK(oracle::count_mosaics_bruteforce({0, 0, 1}) == 2);
  CHECK(oracle::count_mosaics_bruteforce({1, 0, 1}) == 3);
  CHECK(oracle::count_mosaics_bruteforce({1, 1, 0}) == 0);
}

TEST_CASE("bijection between tilings and domino mosaics") {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q)
      for (int n = 0; n <= 2; ++n) {
        const RegionSpec spec(p, q, n);
        if (aztec::square_count(spec) > 16) continue;
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(n);
        const auto tilings = oracle::enumerate_tilings(spec);
        const auto mosaics = oracle::enumerate_domino_mosaics(spec);
        CHECK(tilings.size() == mosaics.size());
        std::set<oracle::Mosaic> images;
        for (const auto& t : tilings) {
          const auto m = oracle::tiling_to_mosaic(t);
          images.insert(m);
          // Each b edge faces a b edge on a neighbouring tile.
          for (const auto& [cell, kind] : m.placement) {
            const oracle::Tile tile = oracle::tile(kind);
            Cell partner = cell;
            if (tile.left == aztec::Letter::b) partner.col -= 1;
            if (tile.right == aztec::Letter::b) partner.col += 1;
            if (tile.top == aztec::Letter::b) partner.row += 1;
            if (tile.bottom == aztec::Letter::b) partner.row -= 1;
            REQUIRE(m.placement.count(partner) == 1);
            const oracle::Tile other = oracle::tile(m.placement.at(partner));
            const int facing = (other.left == aztec::Letter::b && partner.col > cell.col) +
                               (other.right == aztec::Letter::b && partner.col < cell.col) +
                               (other.bottom == aztec::Letter::b && partner.row > cell.row) +
                               (other.top == aztec::Letter::b && partner.row < cell.row);
            CHECK(facing == 1);
          }
        }
        CHECK(images.size() == tilings.size());
        CHECK(images == std::set<oracle::Mosaic>(mosaics.begin(), mosaics.end()));
      }
}

TEST_CASE("bar mosaic counts") {
  using aztec::BarState;
  using aztec::Letter;
  // Only T3 has bottom b, top a and sides a.
  CHECK(oracle::bar_mosaic_count(Letter::a, Letter::a, BarState::parse("b"), BarState::parse("a")) == 1);
  // Bar of the form s_l = a, s_r = b, s_b = aaaaab, s_t = aaabba.
  CHECK(oracle::bar_mosaic_count(Letter::a, Letter::b, BarState::parse("aaaaab"),
                                 BarState::parse("aaabba")) == 1);
  CHECK(oracle::bar_mosaic_count(Letter::a, Letter::a, BarState::parse("aa"), BarState::parse("aa")) == 1);
  CHECK(oracle::bar_mosaic_count(Letter::b, Letter::b, BarState::parse("a"), BarState::parse("a")) == 0);
}

TEST_CASE("oracle caps") {
  CHECK_THROWS_AS(oracle::enumerate_tilings({3, 2, 4}), aztec::CapacityError);
  CHECK_THROWS_AS(oracle::count_tilings({0, 0, 5}), aztec::CapacityError);
  CHECK_THROWS_AS(oracle::count_mosaics_bruteforce({2, 0, 2}), aztec::CapacityError);
  aztec::Limits wide;
  wide.mosaic_squares = 24;
  CHECK(oracle::count_mosaics_bruteforce({2, 0, 2}, wide) == oracle::count_tilings({2, 0, 2}));
}
