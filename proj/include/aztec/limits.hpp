#pragma once

namespace aztec {

// Resource caps. Dense and vector caps bound the longest bar state (p + 2n);
// the oracle caps bound the number of region squares.
struct Limits {
  static constexpr int kDefaultDenseCap = 12;
  static constexpr int kDefaultVectorCap = 26;
  static constexpr int kDefaultOracleSquares = 40;
  static constexpr int kDefaultMosaicSquares = 16;

  int dense_cap = kDefaultDenseCap;
  int vector_cap = kDefaultVectorCap;
  int oracle_squares = kDefaultOracleSquares;
  int mosaic_squares = kDefaultMosaicSquares;

  // Defaults overridden by AZTEC_DENSE_CAP, AZTEC_VECTOR_CAP,
  // AZTEC_ORACLE_SQUARES and AZTEC_MOSAIC_SQUARES when set. Malformed values
  // throw std::invalid_argument.
  static Limits from_environment();
};

}  // namespace aztec
