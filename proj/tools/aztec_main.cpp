// aztec: exact domino tiling counts for expanded Aztec diamonds.
//
//   aztec compute --p 3 --q 2 --n 4 --method vector
//   aztec sweep --p 2 --q 2 --n 3 --method all --format jsonl
//   aztec verify --max-squares 36
//
// Exit codes: 0 success, 1 usage error, 2 capacity exceeded, 3 verification
// failure. Caps may be raised through AZTEC_DENSE_CAP, AZTEC_VECTOR_CAP,
// AZTEC_ORACLE_SQUARES and AZTEC_MOSAIC_SQUARES.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "aztec/errors.hpp"
#include "aztec/records.hpp"
#include "aztec/verify.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitVerify = 3;

void report_error(const std::string& kind, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = kind;
  j["message"] = message;
  std::cerr << j.dump() << '\n';
}

void report_capacity(const aztec::CapacityError& e) {
  nlohmann::ordered_json j;
  j["error"] = "capacity";
  j["resource"] = e.resource();
  j["requested"] = e.requested();
  j["limit"] = e.limit();
  j["message"] = e.what();
  std::cerr << j.dump() << '\n';
}

void emit(std::ostream& out, const std::vector<aztec::OutputRecord>& records, bool jsonl) {
  if (!jsonl) out << aztec::csv_header() << '\n';
  for (const auto& r : records) out << (jsonl ? aztec::to_jsonl(r) : aztec::to_csv(r)) << '\n';
}

std::vector<aztec::Method> methods_for(const std::string& name) {
  if (name == "all" || name == "*") {
    return {aztec::Method::dense, aztec::Method::vector, aztec::Method::oracle};
  }
  return {*aztec::parse_method(name)};
}

int run_verify(int max_squares, const std::string& fault, const aztec::Limits& limits) {
  aztec::VerifyOptions options;
  options.max_squares = max_squares;
  options.limits = limits;
  if (fault == "bar-seed") {
    options.seeds.a1.at(0, 0) = 1;
  }
  std::vector<std::string> failed;
  for (const auto& suite : aztec::run_verification(options)) {
    if (suite.passed()) {
      std::cout << "PASS " << suite.name << " (" << suite.checks << " checks)\n";
      continue;
    }
    failed.push_back(suite.name);
    std::cout << "FAIL " << suite.name << " (" << suite.failures.size() << " of " << suite.checks
              << " checks)\n";
    for (const auto& f : suite.failures) std::cout << "  " << f << '\n';
  }
  if (failed.empty()) {
    std::cout << "all suites pass\n";
    return 0;
  }
  std::cout << "verification failed:";
  for (const auto& name : failed) std::cout << ' ' << name;
  std::cout << '\n';
  return kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact domino tiling counts for the expanded (p,q)-Aztec diamond"};
  app.require_subcommand(1);

  const std::vector<std::string> method_names{"dense", "vector", "oracle"};
  const std::vector<std::string> format_names{"csv", "jsonl"};

  int p = 0;
  int q = 0;
  int n = 0;
  std::string method = "vector";
  std::string format = "csv";
  std::string output;
  int max_squares = 36;
  std::string fault;

  auto* compute = app.add_subcommand("compute", "Count tilings of one region");
  compute->add_option("p,--p", p, "Extra middle columns")->required()->check(CLI::NonNegativeNumber);
  compute->add_option("q,--q", q, "Extra middle rows")->required()->check(CLI::NonNegativeNumber);
  compute->add_option("n,--n", n, "Order")->required()->check(CLI::NonNegativeNumber);
  compute->add_option("method,--method", method, "Counting engine")
      ->check(CLI::IsMember(method_names));
  compute->add_option("--format", format, "Output format")->check(CLI::IsMember(format_names));

  auto* sweep = app.add_subcommand("sweep", "Count every region up to the given maxima");
  sweep->add_option("p,--p", p, "Maximum p")->required()->check(CLI::NonNegativeNumber);
  sweep->add_option("q,--q", q, "Maximum q")->required()->check(CLI::NonNegativeNumber);
  sweep->add_option("n,--n", n, "Maximum n")->required()->check(CLI::NonNegativeNumber);
  sweep->add_option("method,--method", method, "Counting engine, or 'all'")
      ->check(CLI::IsMember({"dense", "vector", "oracle", "all", "*"}));
  sweep->add_option("--format", format, "Output format")->check(CLI::IsMember(format_names));
  sweep->add_option("--output", output, "Write records to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run the self-verification suites");
  verify->add_option("--max-squares", max_squares, "Largest region compared against the oracle")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--inject-fault", fault)->group("")->check(CLI::IsMember({"bar-seed"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const aztec::Limits limits = aztec::Limits::from_environment();
    const bool jsonl = format == "jsonl";
    if (*compute) {
      const auto record =
          aztec::compute_record(aztec::RegionSpec(p, q, n), *aztec::parse_method(method), limits);
      emit(std::cout, {record}, jsonl);
      return 0;
    }
    if (*sweep) {
      const auto records = aztec::sweep(p, q, n, methods_for(method), limits);
      if (output.empty()) {
        emit(std::cout, records, jsonl);
      } else {
        std::ofstream file(output);
        if (!file) {
          report_error("io", "cannot open " + output);
          return kExitUsage;
        }
        emit(file, records, jsonl);
      }
      return 0;
    }
    return run_verify(max_squares, fault, limits);
  } catch (const aztec::CapacityError& e) {
    report_capacity(e);
    return kExitCapacity;
  } catch (const std::invalid_argument& e) {
    report_error("usage", e.what());
    return kExitUsage;
  }
}
