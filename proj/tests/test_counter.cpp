#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "aztec/counter.hpp"
#include "aztec/errors.hpp"
#include "aztec/oracle.hpp"
#include "aztec/transfer.hpp"

using aztec::BigCount;
using aztec::RegionSpec;
using aztec::StateMatrix;

TEST_CASE("closed forms") {
  CHECK(aztec::aztec_closed_form(0) == 1);
  CHECK(aztec::aztec_closed_form(1) == 2);
  CHECK(aztec::aztec_closed_form(3) == 64);
  CHECK(aztec::aztec_closed_form(10) == BigCount("36028797018963968"));
  CHECK(aztec::delannoy_closed_form(0) == 1);
  CHECK(aztec::delannoy_closed_form(1) == 3);
  CHECK(aztec::delannoy_closed_form(2) == 13);
  CHECK(aztec::delannoy_closed_form(3) == 63);
}

TEST_CASE("factor sequences") {
  namespace t = aztec::transfer;
  const auto aztec1 = aztec::factor_sequence({0, 0, 1});
  REQUIRE(aztec1.size() == 2);
  CHECK(aztec1[0] == StateMatrix{{1, 0, 0, 1}});
  CHECK(aztec1[1] == StateMatrix{{1}, {0}, {0}, {1}});

  const auto rect = aztec::factor_sequence({2, 2, 0});
  REQUIRE(rect.size() == 2);
  CHECK(rect[0] == t::central_C(2));
  CHECK(rect[1] == t::central_C(2));

  const auto augmented = aztec::factor_sequence({1, 0, 1});
  REQUIRE(augmented.size() == 2);
  CHECK(augmented[0] == t::lower_L(3));
  CHECK(augmented[1] == t::upper_U(3));

  CHECK(aztec::factor_sequence({3, 0, 0}).empty());
}

TEST_CASE("factor dimensions chain") {
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      for (int n = 0; n <= 3; ++n) {
        const auto factors = aztec::factor_sequence({p, q, n});
        CHECK(factors.size() == static_cast<std::size_t>(2 * n + q));
        if (factors.empty()) continue;
        CHECK(factors.front().row_state_len() == p);
        CHECK(factors.back().col_state_len() == p);
        for (std::size_t i = 0; i + 1 < factors.size(); ++i)
          CHECK(factors[i].cols() == factors[i + 1].rows());
      }
}

TEST_CASE("partial products") {
  const auto aztec1 = aztec::partial_products({0, 0, 1});
  REQUIRE(aztec1.size() == 2);
  CHECK(aztec1[0].rows_consumed == 1);
  CHECK(aztec1[0].matrix == StateMatrix{{1, 0, 0, 1}});
  CHECK(aztec1[1].matrix == StateMatrix{{2}});

  const auto augmented = aztec::partial_products({1, 0, 1});
  REQUIRE(augmented.size() == 2);
  CHECK(augmented[1].matrix.rows() == 2);
  CHECK(augmented[1].matrix.cols() == 2);
  CHECK(augmented[1].matrix.at(0, 0) == 3);

  const auto rect = aztec::partial_products({2, 1, 0});
  REQUIRE(rect.size() == 1);
  CHECK(rect[0].matrix == aztec::transfer::central_C(2));

  // Every N_m has 2^p rows and nonnegative entries; the last is square.
  const auto big = aztec::partial_products({2, 2, 2});
  for (const auto& product : big) {
    CHECK(product.matrix.rows() == 4);
    for (std::size_t i = 0; i < product.matrix.rows(); ++i)
      for (std::size_t j = 0; j < product.matrix.cols(); ++j) CHECK(sgn(product.matrix.at(i, j)) >= 0);
  }
  CHECK(big.back().matrix.cols() == 4);
}

TEST_CASE("dense counts of small regions") {
  CHECK(aztec::count_dense({0, 0, 1}) == 2);
  CHECK(aztec::count_dense({1, 0, 1}) == 3);
  CHECK(aztec::count_dense({1, 1, 1}) == 0);
  CHECK(aztec::count_dense({2, 2, 0}) == 2);
  CHECK(aztec::count_dense({0, 0, 0}) == 1);
  CHECK(aztec::count_dense({5, 0, 0}) == 1);
  CHECK(aztec::count_dense({0, 7, 0}) == 1);
}

TEST_CASE("vector counts") {
  CHECK(aztec::count_vector({0, 0, 4}) == 1024);
  CHECK(aztec::count_vector({0, 0, 0}) == 1);
  CHECK(aztec::count_vector({3, 2, 4}) == aztec::count_dense({3, 2, 4}));
  // Frozen after the dense and vector routes agreed on it.
  CHECK(aztec::count_vector({3, 2, 4}) == 1167603);
}

TEST_CASE("vector engine matches dense bar_A products") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(0, 50);
  for (int k = 0; k <= 7; ++k) {
    const StateMatrix a = k == 0 ? StateMatrix{{1}} : aztec::transfer::bar_A(k);
    StateMatrix row(0, k);
    std::vector<BigCount> v(std::size_t{1} << k);
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = entry(rng);
      row.at(0, i) = v[i];
    }
    const StateMatrix expected = row * a;
    const auto got = aztec::detail::apply_bar_A(v, k);
    for (std::size_t j = 0; j < v.size(); ++j) CHECK(got[j] == expected.at(0, j));
  }
}

TEST_CASE("dense and vector agree on the dense domain") {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q)
      for (int n = 0; n <= 3; ++n) {
        const RegionSpec spec(p, q, n);
        if (spec.widest_state() > 10) continue;
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(n);
        CHECK(aztec::count_dense(spec) == aztec::count_vector(spec));
      }
}

TEST_CASE("parity vanishing comes out of the product") {
  for (int p = 1; p <= 5; p += 2)
    for (int q = 1; q <= 5; q += 2)
      for (int n = 0; n <= 3; ++n) {
        const RegionSpec spec(p, q, n);
        CHECK(aztec::has_odd_area(spec));
        if (spec.widest_state() <= 12) CHECK(aztec::count_dense(spec) == 0);
        CHECK(aztec::count_vector(spec) == 0);
      }
}

TEST_CASE("known sequences") {
  for (int n = 1; n <= 8; ++n) CHECK(aztec::count_vector({0, 0, n}) == aztec::aztec_closed_form(n));
  for (int n = 1; n <= 6; ++n) CHECK(aztec::count_vector({1, 0, n}) == aztec::delannoy_closed_form(n));
  BigCount prev = 1;
  BigCount cur = 1;
  for (int q = 1; q <= 10; ++q) {
    CHECK(aztec::count_vector({2, q, 0}) == cur);
    BigCount next = prev + cur;
    prev = cur;
    cur = next;
  }
}

TEST_CASE("rotating the region keeps the count") {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q)
      for (int n = 0; n <= 3; ++n) {
        const RegionSpec spec(p, q, n);
        CHECK(aztec::count_vector(spec) == aztec::count_vector(spec.transposed()));
      }
}

TEST_CASE("caps are enforced before any work") {
  CHECK_THROWS_AS(aztec::count_dense({0, 0, 7}), aztec::CapacityError);
  CHECK_THROWS_AS(aztec::factor_sequence({13, 0, 0}), aztec::CapacityError);
  CHECK_THROWS_AS(aztec::count_vector({0, 0, 14}), aztec::CapacityError);
  aztec::Limits tight;
  tight.vector_cap = 6;
  CHECK_THROWS_AS(aztec::count_vector({2, 0, 3}, tight), aztec::CapacityError);
  CHECK(aztec::count_vector({2, 0, 2}, tight) == aztec::count_dense({2, 0, 2}));
  try {
    aztec::count_dense({4, 0, 5});
    FAIL("expected CapacityError");
  } catch (const aztec::CapacityError& e) {
    CHECK(e.requested() == 14);
    CHECK(e.limit() == 12);
  }
}
