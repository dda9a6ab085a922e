#pragma once

#include <vector>

#include "aztec/big_count.hpp"
#include "aztec/limits.hpp"
#include "aztec/region.hpp"
#include "aztec/state_matrix.hpp"

namespace aztec {

// N_m: product of the first m row factors, bottom up.
struct StateProduct {
  StateMatrix matrix;
  int rows_consumed = 0;
};

// Row factors bottom to top: lower_L(p+2k) for k = 1..n, central_C(p+2n)
// q times, then upper_U(p+2n+2-2k) for k = 1..n. Column states of each
// factor chain into the row states of the next.
std::vector<StateMatrix> factor_sequence(const RegionSpec& spec, const Limits& limits = {});

// N_1 .. N_{2n+q}. Empty when the region has no rows to stack.
std::vector<StateProduct> partial_products(const RegionSpec& spec, const Limits& limits = {});

// Tiling count as the (1,1) entry of the full dense product.
BigCount count_dense(const RegionSpec& spec, const Limits& limits = {});

// Same count, carrying only the first row of the product through the factors
// and applying every factor through its block recurrence without
// materializing it. Memory is O(2^(p+2n)) counts.
BigCount count_vector(const RegionSpec& spec, const Limits& limits = {});

// 2^(n(n+1)/2), the tiling count of the order-n Aztec diamond.
BigCount aztec_closed_form(int n);

// sum_k C(n,k) C(n+k,k), the tiling count of the (1,0) expanded diamond.
BigCount delannoy_closed_form(int n);

namespace detail {

// out = v * bar_A(k) for a row vector v of length 2^k. bar_A is symmetric, so
// this is also the column action bar_A(k) * v.
std::vector<BigCount> apply_bar_A(const std::vector<BigCount>& v, int k);

}  // namespace detail

}  // namespace aztec
