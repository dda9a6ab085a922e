#pragma once

#include <utility>

#include "aztec/limits.hpp"
#include "aztec/state_matrix.hpp"

namespace aztec::transfer {

// Bar state matrices for a single row of k tiles whose left side is a.
//
// Entry (i, j) of bar_A(k) (resp. bar_B(k)) counts the suitably adjacent bars
// with bottom state i, top state j and right side a (resp. b). Both families
// follow the block recurrence
//
//   A_k = [[B_{k-1}, A_{k-1}], [A_{k-1}, 0]],   B_k = [[A_{k-1}, 0], [0, 0]]
//
// split on the rightmost tile's letters.
//
// All builders throw CapacityError when the state length exceeds `dense_cap`
// and std::invalid_argument below their minimum length.

// Seeds of the A/B recurrence at k = 1. Overridable for fault injection.
struct BarSeeds {
  StateMatrix a1;
  StateMatrix b1;

  static BarSeeds standard();
};

// {A_k, B_k}; k = 0 gives {[1], [0]}.
std::pair<StateMatrix, StateMatrix> bar_pair(int k, const BarSeeds& seeds,
                                             int dense_cap = Limits::kDefaultDenseCap);

StateMatrix bar_A(int k, int dense_cap = Limits::kDefaultDenseCap);
StateMatrix bar_B(int k, int dense_cap = Limits::kDefaultDenseCap);

// Central rows: C_k = [[pad(C_{k-2}), C_{k-1}], [C_{k-1}, 0]] from C_0 = [1]
// and C_1 = [[0,1],[1,0]]. Coincides with bar_A(k) for k >= 1.
StateMatrix central_C(int k, int dense_cap = Limits::kDefaultDenseCap);

// The 2^(k-1) x 2^k family used inside lower rows: the rows of bar_A(k) whose
// leftmost-tile bottom letter is a. Built from its own recurrence with seeds
// [0 1] and [[1,0,0,1],[0,1,0,0]].
StateMatrix restricted_A(int k, int dense_cap = Limits::kDefaultDenseCap);

// Lower rows of length m >= 2: [pad(restricted_A(m-2)) | restricted_A(m-1)],
// with [1 0] standing in for the padded block when m = 2. Rows are indexed by
// the m-2 inner bottom letters (both end tiles overhang the row below and see
// a), columns by the full top state.
StateMatrix lower_L(int m, int dense_cap = Limits::kDefaultDenseCap);

// Upper rows: the transpose of lower_L(m).
StateMatrix upper_U(int m, int dense_cap = Limits::kDefaultDenseCap);

}  // namespace aztec::transfer
