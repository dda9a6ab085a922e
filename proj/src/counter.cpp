#include "aztec/counter.hpp"

#include <span>
#include <stdexcept>

#include "aztec/errors.hpp"
#include "aztec/transfer.hpp"

namespace aztec {

namespace {

void check_dense(const RegionSpec& spec, const Limits& limits) {
  if (spec.widest_state() > limits.dense_cap) {
    throw CapacityError("dense state length", spec.widest_state(), limits.dense_cap);
  }
}

// Computes in * A_k into out_a and, when out_b is non-empty, in * B_k into
// out_b, using
//
//   [v0 | v1] A_k = [v0 B_{k-1} + v1 A_{k-1} | v0 A_{k-1}]
//   [v0 | v1] B_k = [v0 A_{k-1} | 0]
//
// where v0/v1 are the halves whose rightmost-tile letter is a/b. Scratch holds
// one pair of half-length buffers per level.
class BarApplier {
 public:
  explicit BarApplier(int k) : scratch_a_(k + 1), scratch_b_(k + 1) {
    for (int level = 1; level <= k; ++level) {
      scratch_a_[level].resize(std::size_t{1} << (level - 1));
      scratch_b_[level].resize(std::size_t{1} << (level - 1));
    }
  }

  void apply(std::span<const BigCount> in, std::span<BigCount> out_a, std::span<BigCount> out_b,
             int k) {
    const bool want_b = !out_b.empty();
    if (k == 0) {
      out_a[0] = in[0];
      if (want_b) out_b[0] = 0;
      return;
    }
    const std::size_t half = std::size_t{1} << (k - 1);
    const auto v0 = in.first(half);
    const auto v1 = in.subspan(half);

    // v0 * A_{k-1} lands in the lower half of out_a; v0 * B_{k-1} in scratch.
    std::span<BigCount> b0 = scratch_b_[k];
    apply(v0, out_a.subspan(half), b0, k - 1);

    std::span<BigCount> a1 = scratch_a_[k];
    if (is_zero(v1)) {
      for (std::size_t i = 0; i < half; ++i) out_a[i] = b0[i];
    } else {
      apply(v1, a1, {}, k - 1);
      for (std::size_t i = 0; i < half; ++i) mpz_add(out_a[i].get_mpz_t(), b0[i].get_mpz_t(), a1[i].get_mpz_t());
    }
    if (want_b) {
      for (std::size_t i = 0; i < half; ++i) out_b[i] = out_a[half + i];
      for (std::size_t i = half; i < 2 * half; ++i) out_b[i] = 0;
    }
  }

 private:
  static bool is_zero(std::span<const BigCount> v) {
    for (const auto& x : v)
      if (sgn(x) != 0) return false;
    return true;
  }

  std::vector<std::vector<BigCount>> scratch_a_;
  std::vector<std::vector<BigCount>> scratch_b_;
};

// Drops the two end letters of a length-m state (both must be a): the inner
// m-2 letters are bits 1..m-2.
std::vector<BigCount> inner_states(const std::vector<BigCount>& full, int m) {
  std::vector<BigCount> out(std::size_t{1} << (m - 2));
  for (std::size_t mid = 0; mid < out.size(); ++mid) out[mid] = full[mid << 1];
  return out;
}

std::vector<BigCount> embed_inner(const std::vector<BigCount>& inner, int m) {
  std::vector<BigCount> out(std::size_t{1} << m);
  for (std::size_t mid = 0; mid < inner.size(); ++mid) out[mid << 1] = inner[mid];
  return out;
}

}  // namespace

namespace detail {

std::vector<BigCount> apply_bar_A(const std::vector<BigCount>& v, int k) {
  if (v.size() != (std::size_t{1} << k)) throw std::invalid_argument("apply_bar_A: size mismatch");
  std::vector<BigCount> out(v.size());
  BarApplier(k).apply(v, out, {}, k);
  return out;
}

}  // namespace detail

std::vector<StateMatrix> factor_sequence(const RegionSpec& spec, const Limits& limits) {
  check_dense(spec, limits);
  const int p = spec.p();
  const int n = spec.n();
  std::vector<StateMatrix> factors;
  factors.reserve(2 * n + spec.q());
  for (int k = 1; k <= n; ++k) factors.push_back(transfer::lower_L(p + 2 * k, limits.dense_cap));
  if (spec.q() > 0) {
    const StateMatrix central = transfer::central_C(p + 2 * n, limits.dense_cap);
    for (int k = 0; k < spec.q(); ++k) factors.push_back(central);
  }
  for (int k = 1; k <= n; ++k)
    factors.push_back(transfer::upper_U(p + 2 * n + 2 - 2 * k, limits.dense_cap));
  return factors;
}

std::vector<StateProduct> partial_products(const RegionSpec& spec, const Limits& limits) {
  std::vector<StateProduct> products;
  int consumed = 0;
  for (auto& factor : factor_sequence(spec, limits)) {
    ++consumed;
    StateMatrix next = products.empty() ? std::move(factor) : products.back().matrix * factor;
    products.push_back({std::move(next), consumed});
  }
  return products;
}

BigCount count_dense(const RegionSpec& spec, const Limits& limits) {
  const std::vector<StateProduct> products = partial_products(spec, limits);
  if (products.empty()) return 1;  // empty product: identity
  return products.back().matrix.at(0, 0);
}

BigCount count_vector(const RegionSpec& spec, const Limits& limits) {
  const int p = spec.p();
  const int n = spec.n();
  const int widest = spec.widest_state();
  if (widest > limits.vector_cap) throw CapacityError("vector state length", widest, limits.vector_cap);

  BarApplier applier(widest);
  std::vector<BigCount> row(std::size_t{1} << p);
  row[0] = 1;
  std::vector<BigCount> next;
  const auto step = [&](const std::vector<BigCount>& in, int m) {
    next.assign(in.size(), BigCount{});
    applier.apply(in, next, {}, m);
    return std::move(next);
  };

  // lower_L(m) is the inner-bottom-state slice of bar_A(m).
  for (int k = 1; k <= n; ++k) {
    const int m = p + 2 * k;
    row = step(embed_inner(row, m), m);
  }
  for (int k = 0; k < spec.q(); ++k) row = step(row, widest);
  // v * upper_U(m) = (lower_L(m) * v^T)^T, the inner-top slice of bar_A(m) * v^T.
  for (int k = 1; k <= n; ++k) {
    const int m = widest + 2 - 2 * k;
    row = inner_states(step(row, m), m);
  }
  return row[0];
}

BigCount aztec_closed_form(int n) {
  if (n < 0) throw std::invalid_argument("aztec_closed_form: n must be nonnegative");
  BigCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(n) * (n + 1) / 2);
  return out;
}

BigCount delannoy_closed_form(int n) {
  if (n < 0) throw std::invalid_argument("delannoy_closed_form: n must be nonnegative");
  BigCount total = 0;
  BigCount left;
  BigCount right;
  for (int k = 0; k <= n; ++k) {
    mpz_bin_uiui(left.get_mpz_t(), n, k);
    mpz_bin_uiui(right.get_mpz_t(), n + k, k);
    total += left * right;
  }
  return total;
}

}  // namespace aztec
