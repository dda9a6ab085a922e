#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "aztec/big_count.hpp"

namespace aztec {

// Dense row-major matrix of exact nonnegative integers. Rows and columns are
// indexed by bar states in ab-order (0-based here: row i is state index i+1);
// the state lengths are carried alongside so products can be checked for
// matching boundaries.
class StateMatrix {
 public:
  StateMatrix() = default;
  // Zero matrix of size 2^row_state_len x 2^col_state_len.
  StateMatrix(int row_state_len, int col_state_len);
  // From literal 0/1 (or small) entries; dimensions must be powers of two.
  StateMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  int row_state_len() const noexcept { return row_state_len_; }
  int col_state_len() const noexcept { return col_state_len_; }

  BigCount& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const BigCount& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  StateMatrix transpose() const;

  // [[X, 0], [0, 0]]: doubles both dimensions, X in the top-left block.
  StateMatrix padded() const;

  // Places `block` with its top-left corner at (row, col).
  void set_block(std::size_t row, std::size_t col, const StateMatrix& block);

  // Rows listed in `row_ids`, relabelled with the given row state length.
  StateMatrix select_rows(const std::vector<std::size_t>& row_ids, int row_state_len) const;

  // [left | right]; both must have the same number of rows.
  static StateMatrix hconcat(const StateMatrix& left, const StateMatrix& right);

  bool is_binary() const;
  bool is_symmetric() const;

  // Throws std::invalid_argument on mismatched inner dimensions.
  friend StateMatrix operator*(const StateMatrix& lhs, const StateMatrix& rhs);
  friend bool operator==(const StateMatrix& lhs, const StateMatrix& rhs);
  friend std::ostream& operator<<(std::ostream& os, const StateMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int row_state_len_ = 0;
  int col_state_len_ = 0;
  std::vector<BigCount> entries_;
};

}  // namespace aztec
