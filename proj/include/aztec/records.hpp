#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aztec/big_count.hpp"
#include "aztec/limits.hpp"
#include "aztec/region.hpp"

namespace aztec {

enum class Method { dense, vector, oracle };

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view text);

// One computed cell. `count` is an exact decimal string; on a per-cell
// capacity failure it is empty and `error` holds the reason.
struct OutputRecord {
  int p = 0;
  int q = 0;
  int n = 0;
  std::string count;
  Method method = Method::vector;
  long long elapsed_ms = 0;
  std::string error;

  bool ok() const noexcept { return error.empty(); }
  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

BigCount count_with(const RegionSpec& spec, Method method, const Limits& limits);

// Times one count. CapacityError propagates.
OutputRecord compute_record(const RegionSpec& spec, Method method, const Limits& limits);

// Every (p, q, n) in [0, p_max] x [0, q_max] x [0, n_max], each method in
// turn, ordered by p, then q, then n, then method. Capacity errors are
// recorded in-row and the sweep continues.
std::vector<OutputRecord> sweep(int p_max, int q_max, int n_max,
                                const std::vector<Method>& methods, const Limits& limits);

// CSV: header "p,q,n,count,method,elapsed_ms". Failed cells carry
// "error:<reason>" in the count column.
std::string_view csv_header();
std::string to_csv(const OutputRecord& record);
// Throws std::invalid_argument on malformed rows.
OutputRecord parse_csv_row(std::string_view line);
// Skips the header line.
std::vector<OutputRecord> parse_csv(std::istream& in);

// One JSON object per line; failed cells have "count": null and "error".
std::string to_jsonl(const OutputRecord& record);
OutputRecord parse_jsonl_line(std::string_view line);
std::vector<OutputRecord> parse_jsonl(std::istream& in);

}  // namespace aztec
