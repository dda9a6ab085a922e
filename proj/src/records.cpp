#include "aztec/records.hpp"

#include <charconv>
#include <chrono>
#include <stdexcept>

#include "json.hpp"

#include "aztec/counter.hpp"
#include "aztec/errors.hpp"
#include "aztec/oracle.hpp"

namespace aztec {

namespace {

constexpr std::string_view kErrorPrefix = "error:";

template <typename Int>
Int parse_int(std::string_view field, const char* what) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(field) + "'");
  }
  return value;
}

bool is_decimal(std::string_view text) {
  if (text.empty()) return false;
  for (const char c : text)
    if (c < '0' || c > '9') return false;
  return true;
}

Method require_method(std::string_view text) {
  const auto method = parse_method(text);
  if (!method) throw std::invalid_argument("unknown method '" + std::string(text) + "'");
  return *method;
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::dense: return "dense";
    case Method::vector: return "vector";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view text) {
  if (text == "dense") return Method::dense;
  if (text == "vector") return Method::vector;
  if (text == "oracle") return Method::oracle;
  return std::nullopt;
}

BigCount count_with(const RegionSpec& spec, Method method, const Limits& limits) {
  switch (method) {
    case Method::dense: return count_dense(spec, limits);
    case Method::vector: return count_vector(spec, limits);
    case Method::oracle: return oracle::count_tilings(spec, limits);
  }
  throw std::invalid_argument("unknown method");
}

OutputRecord compute_record(const RegionSpec& spec, Method method, const Limits& limits) {
  const auto start = std::chrono::steady_clock::now();
  const BigCount count = count_with(spec, method, limits);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  return {spec.p(), spec.q(), spec.n(), to_decimal(count), method,
          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count(), {}};
}

std::vector<OutputRecord> sweep(int p_max, int q_max, int n_max,
                                const std::vector<Method>& methods, const Limits& limits) {
  std::vector<OutputRecord> out;
  for (int p = 0; p <= p_max; ++p)
    for (int q = 0; q <= q_max; ++q)
      for (int n = 0; n <= n_max; ++n)
        for (const Method method : methods) {
          try {
            out.push_back(compute_record(RegionSpec(p, q, n), method, limits));
          } catch (const CapacityError& e) {
            out.push_back({p, q, n, {}, method, 0, e.what()});
          }
        }
  return out;
}

std::string_view csv_header() { return "p,q,n,count,method,elapsed_ms"; }

std::string to_csv(const OutputRecord& r) {
  std::string count = r.ok() ? r.count : std::string(kErrorPrefix) + r.error;
  return std::to_string(r.p) + ',' + std::to_string(r.q) + ',' + std::to_string(r.n) + ',' +
         count + ',' + std::string(to_string(r.method)) + ',' + std::to_string(r.elapsed_ms);
}

OutputRecord parse_csv_row(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t pos = 0; pos <= line.size(); ++pos) {
    if (pos == line.size() || line[pos] == ',') {
      fields.push_back(line.substr(start, pos - start));
      start = pos + 1;
    }
  }
  if (fields.size() != 6) throw std::invalid_argument("CSV row needs 6 fields: " + std::string(line));
  OutputRecord r;
  r.p = parse_int<int>(fields[0], "p");
  r.q = parse_int<int>(fields[1], "q");
  r.n = parse_int<int>(fields[2], "n");
  if (fields[3].starts_with(kErrorPrefix)) {
    r.error = std::string(fields[3].substr(kErrorPrefix.size()));
  } else if (is_decimal(fields[3])) {
    r.count = std::string(fields[3]);
  } else {
    throw std::invalid_argument("count is not a decimal integer: " + std::string(fields[3]));
  }
  r.method = require_method(fields[4]);
  r.elapsed_ms = parse_int<long long>(fields[5], "elapsed_ms");
  return r;
}

std::vector<OutputRecord> parse_csv(std::istream& in) {
  std::vector<OutputRecord> out;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      if (line.starts_with(csv_header())) continue;
    }
    if (!line.empty()) out.push_back(parse_csv_row(line));
  }
  return out;
}

std::string to_jsonl(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["p"] = r.p;
  j["q"] = r.q;
  j["n"] = r.n;
  j["count"] = r.ok() ? nlohmann::ordered_json(r.count) : nlohmann::ordered_json(nullptr);
  j["method"] = to_string(r.method);
  j["elapsed_ms"] = r.elapsed_ms;
  if (!r.ok()) j["error"] = r.error;
  return j.dump();
}

OutputRecord parse_jsonl_line(std::string_view line) {
  const auto j = nlohmann::json::parse(line);
  OutputRecord r;
  r.p = j.at("p").get<int>();
  r.q = j.at("q").get<int>();
  r.n = j.at("n").get<int>();
  if (j.at("count").is_null()) {
    r.error = j.at("error").get<std::string>();
  } else {
    r.count = j.at("count").get<std::string>();
    if (!is_decimal(r.count)) throw std::invalid_argument("count is not a decimal integer");
  }
  r.method = require_method(j.at("method").get<std::string>());
  r.elapsed_ms = j.at("elapsed_ms").get<long long>();
  return r;
}

std::vector<OutputRecord> parse_jsonl(std::istream& in) {
  std::vector<OutputRecord> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(parse_jsonl_line(line));
  return out;
}

}  // namespace aztec
