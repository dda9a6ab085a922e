#include "aztec/transfer.hpp"

#include <stdexcept>
#include <string>

#include "aztec/errors.hpp"

namespace aztec::transfer {

namespace {

void check_cap(int length, int dense_cap) {
  if (length > dense_cap) throw CapacityError("dense state length", length, dense_cap);
}

void check_min(const char* what, int value, int minimum) {
  if (value < minimum) {
    throw std::invalid_argument(std::string(what) + " requires length >= " +
                                std::to_string(minimum) + ", got " + std::to_string(value));
  }
}

// [[top_left, top_right], [bottom_left, 0]] for equally sized blocks.
StateMatrix assemble(const StateMatrix& top_left, const StateMatrix& top_right,
                     const StateMatrix& bottom_left) {
  StateMatrix out(top_left.row_state_len() + 1, top_left.col_state_len() + 1);
  out.set_block(0, 0, top_left);
  out.set_block(0, top_left.cols(), top_right);
  out.set_block(top_left.rows(), 0, bottom_left);
  return out;
}

// Shared by central_C and restricted_A: X_k = [[pad(X_{k-2}), X_{k-1}], [X_{k-1}, 0]].
StateMatrix two_step(StateMatrix older, StateMatrix old, int from, int to) {
  for (int k = from; k <= to; ++k) {
    StateMatrix next = assemble(older.padded(), old, old);
    older = std::move(old);
    old = std::move(next);
  }
  return old;
}

}  // namespace

BarSeeds BarSeeds::standard() {
  return {StateMatrix{{0, 1}, {1, 0}}, StateMatrix{{1, 0}, {0, 0}}};
}

std::pair<StateMatrix, StateMatrix> bar_pair(int k, const BarSeeds& seeds, int dense_cap) {
  check_min("bar_pair", k, 0);
  check_cap(k, dense_cap);
  if (k == 0) return {StateMatrix{{1}}, StateMatrix{{0}}};
  StateMatrix a = seeds.a1;
  StateMatrix b = seeds.b1;
  for (int level = 2; level <= k; ++level) {
    StateMatrix next_a = assemble(b, a, a);
    StateMatrix next_b = a.padded();
    a = std::move(next_a);
    b = std::move(next_b);
  }
  return {std::move(a), std::move(b)};
}

StateMatrix bar_A(int k, int dense_cap) {
  check_min("bar_A", k, 1);
  return bar_pair(k, BarSeeds::standard(), dense_cap).first;
}

StateMatrix bar_B(int k, int dense_cap) {
  check_min("bar_B", k, 1);
  return bar_pair(k, BarSeeds::standard(), dense_cap).second;
}

StateMatrix central_C(int k, int dense_cap) {
  check_min("central_C", k, 0);
  check_cap(k, dense_cap);
  StateMatrix c0{{1}};
  if (k == 0) return c0;
  StateMatrix c1{{0, 1}, {1, 0}};
  if (k == 1) return c1;
  return two_step(std::move(c0), std::move(c1), 2, k);
}

StateMatrix restricted_A(int k, int dense_cap) {
  check_min("restricted_A", k, 1);
  check_cap(k, dense_cap);
  StateMatrix a1{{0, 1}};
  if (k == 1) return a1;
  StateMatrix a2{{1, 0, 0, 1}, {0, 1, 0, 0}};
  if (k == 2) return a2;
  return two_step(std::move(a1), std::move(a2), 3, k);
}

StateMatrix lower_L(int m, int dense_cap) {
  check_min("lower_L", m, 2);
  check_cap(m, dense_cap);
  StateMatrix left = m == 2 ? StateMatrix{{1, 0}} : restricted_A(m - 2, dense_cap).padded();
  return StateMatrix::hconcat(left, restricted_A(m - 1, dense_cap));
}

StateMatrix upper_U(int m, int dense_cap) { return lower_L(m, dense_cap).transpose(); }

}  // namespace aztec::transfer
