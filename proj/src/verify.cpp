#include "aztec/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "aztec/counter.hpp"
#include "aztec/oracle.hpp"
#include "aztec/region.hpp"

namespace aztec {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  template <typename... Parts>
  void expect(bool ok, const Parts&... parts) {
    ++result_.checks;
    if (ok) return;
    std::ostringstream msg;
    (msg << ... << parts);
    result_.failures.push_back(msg.str());
  }

  SuiteResult finish() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string label(const RegionSpec& s) {
  return "(" + std::to_string(s.p()) + "," + std::to_string(s.q()) + "," + std::to_string(s.n()) + ")";
}

// Regions compared against the oracle: p, q <= 6, n <= 3, bounded area and
// within the dense cap.
std::vector<RegionSpec> oracle_regions(const VerifyOptions& o) {
  std::vector<RegionSpec> out;
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; q <= 6; ++q)
      for (int n = 0; n <= 3; ++n) {
        const RegionSpec spec(p, q, n);
        if (square_count(spec) <= std::min(o.max_squares, o.limits.oracle_squares) &&
            spec.widest_state() <= o.limits.dense_cap)
          out.push_back(spec);
      }
  return out;
}

SuiteResult bar_recurrence(const VerifyOptions& o) {
  Suite suite("bar-recurrence");
  for (int k = 1; k <= 4; ++k) {
    const auto [a, b] = transfer::bar_pair(k, o.seeds, o.limits.dense_cap);
    suite.expect(a == oracle::bar_matrix_bruteforce(k, Letter::a), "A_", k, " differs from enumerated bars");
    suite.expect(b == oracle::bar_matrix_bruteforce(k, Letter::b), "B_", k, " differs from enumerated bars");
  }
  return suite.finish();
}

SuiteResult structure(const VerifyOptions& o) {
  Suite suite("structure");
  const int top = std::min(8, o.limits.dense_cap);
  for (int k = 0; k <= top; ++k) {
    const StateMatrix c = transfer::central_C(k, o.limits.dense_cap);
    suite.expect(c.is_binary(), "C_", k, " has a non-binary entry");
    suite.expect(c.is_symmetric(), "C_", k, " is not symmetric");
    if (k == 0) continue;
    const auto [a, b] = transfer::bar_pair(k, o.seeds, o.limits.dense_cap);
    suite.expect(a.is_binary() && b.is_binary(), "A_", k, "/B_", k, " has a non-binary entry");
    suite.expect(c == a, "C_", k, " != A_", k);

    // restricted_A(k): rows of A_k whose leftmost-tile bottom letter is a.
    std::vector<std::size_t> even;
    for (std::size_t r = 0; r < a.rows(); r += 2) even.push_back(r);
    const StateMatrix ra = transfer::restricted_A(k, o.limits.dense_cap);
    suite.expect(ra.is_binary(), "restricted A_", k, " has a non-binary entry");
    suite.expect(ra == a.select_rows(even, k - 1), "restricted A_", k, " is not a row selection of A_", k);

    if (k >= 2) {
      const StateMatrix lower = transfer::lower_L(k, o.limits.dense_cap);
      const StateMatrix upper = transfer::upper_U(k, o.limits.dense_cap);
      suite.expect(lower.is_binary(), "L_", k, " has a non-binary entry");
      suite.expect(upper == lower.transpose(), "U_", k, " != L_", k, "^t");
      std::vector<std::size_t> inner;
      for (std::size_t mid = 0; mid < (std::size_t{1} << (k - 2)); ++mid) inner.push_back(mid << 1);
      suite.expect(lower == a.select_rows(inner, k - 2), "L_", k, " is not the inner-state slice of A_", k);
    }
  }
  return suite.finish();
}

SuiteResult closed_form(const VerifyOptions& o) {
  Suite suite("closed-form");
  for (int n = 1; n <= 8; ++n) {
    const BigCount got = count_vector(RegionSpec(0, 0, n), o.limits);
    suite.expect(got == aztec_closed_form(n), "Aztec diamond n=", n, ": ", got, " != ", aztec_closed_form(n));
  }
  for (int n = 1; n <= 6; ++n) {
    const BigCount got = count_vector(RegionSpec(1, 0, n), o.limits);
    suite.expect(got == delannoy_closed_form(n), "(1,0,", n, "): ", got, " != ", delannoy_closed_form(n));
  }
  return suite.finish();
}

SuiteResult oracle_equivalence(const VerifyOptions& o) {
  Suite suite("oracle-equivalence");
  for (const RegionSpec& spec : oracle_regions(o)) {
    const BigCount dense = count_dense(spec, o.limits);
    const BigCount vec = count_vector(spec, o.limits);
    const BigCount truth = oracle::count_tilings(spec, o.limits);
    suite.expect(dense == truth && vec == truth, label(spec), ": dense ", dense, ", vector ", vec,
                 ", oracle ", truth);
  }
  return suite.finish();
}

SuiteResult parity(const VerifyOptions& o) {
  Suite suite("parity");
  for (int p = 1; p <= 5; p += 2)
    for (int q = 1; q <= 5; q += 2)
      for (int n = 0; n <= 3; ++n) {
        const RegionSpec spec(p, q, n);
        if (spec.widest_state() > o.limits.dense_cap) continue;
        const BigCount got = count_dense(spec, o.limits);
        suite.expect(got == 0, label(spec), ": product gave ", got);
      }
  return suite.finish();
}

SuiteResult symmetry(const VerifyOptions& o) {
  Suite suite("symmetry");
  for (int p = 0; p <= 4; ++p)
    for (int q = p + 1; q <= 4; ++q)
      for (int n = 0; n <= 3; ++n) {
        const RegionSpec spec(p, q, n);
        const BigCount lhs = count_vector(spec, o.limits);
        const BigCount rhs = count_vector(spec.transposed(), o.limits);
        suite.expect(lhs == rhs, label(spec), " gives ", lhs, " but ", label(spec.transposed()), " gives ", rhs);
      }
  return suite.finish();
}

SuiteResult rectangle(const VerifyOptions& o) {
  Suite suite("rectangle");
  BigCount prev = 1;  // F_1
  BigCount cur = 1;   // F_2
  for (int q = 1; q <= 10; ++q) {
    const RegionSpec spec(2, q, 0);
    const BigCount got = count_vector(spec, o.limits);
    suite.expect(got == cur, label(spec), ": ", got, " != F_", q + 1, " = ", cur);
    if (q <= 6) {
      const BigCount truth = oracle::count_tilings(spec, o.limits);
      suite.expect(truth == cur, label(spec), ": oracle ", truth, " != ", cur);
    }
    BigCount next = prev + cur;
    prev = cur;
    cur = next;
  }
  return suite.finish();
}

SuiteResult bijection(const VerifyOptions& o) {
  Suite suite("bijection");
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q)
      for (int n = 0; n <= 2; ++n) {
        const RegionSpec spec(p, q, n);
        if (square_count(spec) > o.limits.mosaic_squares) continue;
        const auto tilings = oracle::enumerate_tilings(spec, o.limits);
        const auto mosaics = oracle::enumerate_domino_mosaics(spec, o.limits);
        std::set<oracle::Mosaic> images;
        for (const auto& t : tilings) images.insert(oracle::tiling_to_mosaic(t));
        const std::set<oracle::Mosaic> valid(mosaics.begin(), mosaics.end());
        suite.expect(tilings.size() == mosaics.size(), label(spec), ": ", tilings.size(), " tilings vs ",
                     mosaics.size(), " mosaics");
        suite.expect(images.size() == tilings.size(), label(spec), ": conversion is not injective");
        suite.expect(images == valid, label(spec), ": converted tilings differ from the valid mosaics");
      }
  return suite.finish();
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  return {bar_recurrence(options), structure(options), closed_form(options),
          oracle_equivalence(options), parity(options), symmetry(options),
          rectangle(options), bijection(options)};
}

}  // namespace aztec
