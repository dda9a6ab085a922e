#include "aztec/region.hpp"

#include <stdexcept>
#include <string>

namespace aztec {

RegionSpec::RegionSpec(int p, int q, int n) : p_(p), q_(q), n_(n) {
  if (p < 0 || q < 0 || n < 0) {
    throw std::invalid_argument("region parameters must be nonnegative, got (" +
                                std::to_string(p) + "," + std::to_string(q) + "," +
                                std::to_string(n) + ")");
  }
}

std::vector<int> row_lengths(const RegionSpec& spec) {
  const int p = spec.p();
  const int q = spec.q();
  const int n = spec.n();
  std::vector<int> lengths;
  if (n == 0) {
    if (p > 0) lengths.assign(q, p);
    return lengths;
  }
  lengths.reserve(2 * n + q);
  for (int k = 1; k <= n; ++k) lengths.push_back(p + 2 * k);
  for (int k = 0; k < q; ++k) lengths.push_back(p + 2 * n);
  for (int k = n; k >= 1; --k) lengths.push_back(p + 2 * k);
  return lengths;
}

long long square_count(const RegionSpec& spec) {
  const long long p = spec.p();
  const long long q = spec.q();
  const long long n = spec.n();
  return 2 * n * (n + p + q + 1) + p * q;
}

std::vector<Cell> cells(const RegionSpec& spec) {
  const std::vector<int> lengths = row_lengths(spec);
  const int widest = spec.widest_state();
  std::vector<Cell> out;
  int row = 0;
  for (const int length : lengths) {
    ++row;
    const int inset = (widest - length) / 2;
    for (int c = 1; c <= length; ++c) out.push_back({inset + c, row});
  }
  return out;
}

RegionGeometry geometry(const RegionSpec& spec) {
  RegionGeometry g;
  g.row_lengths = row_lengths(spec);
  g.cells = cells(spec);
  g.square_count = square_count(spec);
  return g;
}

bool has_odd_area(const RegionSpec& spec) noexcept {
  return (spec.p() % 2 == 1) && (spec.q() % 2 == 1);
}

}  // namespace aztec
