#include "aztec/state_matrix.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace aztec {

namespace {

int log2_exact(std::size_t size) {
  if (size == 0 || !std::has_single_bit(size)) {
    throw std::invalid_argument("state matrix dimension must be a power of two, got " +
                                std::to_string(size));
  }
  return std::countr_zero(size);
}

}  // namespace

StateMatrix::StateMatrix(int row_state_len, int col_state_len)
    : rows_(std::size_t{1} << row_state_len),
      cols_(std::size_t{1} << col_state_len),
      row_state_len_(row_state_len),
      col_state_len_(col_state_len),
      entries_(rows_ * cols_) {}

StateMatrix::StateMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
  row_state_len_ = log2_exact(rows_);
  col_state_len_ = log2_exact(cols_);
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (const long v : row) entries_.emplace_back(v);
  }
}

StateMatrix StateMatrix::transpose() const {
  StateMatrix t(col_state_len_, row_state_len_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

StateMatrix StateMatrix::padded() const {
  StateMatrix out(row_state_len_ + 1, col_state_len_ + 1);
  out.set_block(0, 0, *this);
  return out;
}

void StateMatrix::set_block(std::size_t row, std::size_t col, const StateMatrix& block) {
  if (row + block.rows_ > rows_ || col + block.cols_ > cols_) {
    throw std::invalid_argument("block does not fit");
  }
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (std::size_t j = 0; j < block.cols_; ++j) at(row + i, col + j) = block.at(i, j);
}

StateMatrix StateMatrix::select_rows(const std::vector<std::size_t>& row_ids,
                                     int row_state_len) const {
  StateMatrix out(row_state_len, col_state_len_);
  if (out.rows_ != row_ids.size()) throw std::invalid_argument("row selection size mismatch");
  for (std::size_t r = 0; r < row_ids.size(); ++r)
    for (std::size_t j = 0; j < cols_; ++j) out.at(r, j) = at(row_ids[r], j);
  return out;
}

StateMatrix StateMatrix::hconcat(const StateMatrix& left, const StateMatrix& right) {
  if (left.rows_ != right.rows_ || left.cols_ != right.cols_) {
    throw std::invalid_argument("hconcat needs equally sized blocks");
  }
  StateMatrix out(left.row_state_len_, left.col_state_len_ + 1);
  out.set_block(0, 0, left);
  out.set_block(0, left.cols_, right);
  return out;
}

bool StateMatrix::is_binary() const {
  for (const auto& v : entries_)
    if (v != 0 && v != 1) return false;
  return true;
}

bool StateMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

StateMatrix operator*(const StateMatrix& lhs, const StateMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) {
    throw std::invalid_argument("state matrix product: inner dimensions " +
                                std::to_string(lhs.cols_) + " and " + std::to_string(rhs.rows_) +
                                " differ");
  }
  StateMatrix out(lhs.row_state_len_, rhs.col_state_len_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t s = 0; s < lhs.cols_; ++s) {
      const BigCount& weight = lhs.at(i, s);
      if (weight == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const BigCount& f = rhs.at(s, j);
        if (f != 0) out.at(i, j) += weight * f;
      }
    }
  }
  return out;
}

bool operator==(const StateMatrix& lhs, const StateMatrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.entries_ == rhs.entries_;
}

std::ostream& operator<<(std::ostream& os, const StateMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows_; ++i) {
    os << (i == 0 ? "[" : ", [");
    for (std::size_t j = 0; j < m.cols_; ++j) os << (j == 0 ? "" : ",") << m.at(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace aztec
