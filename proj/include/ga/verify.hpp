#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ga {

// Sweep configuration. Sampling checks draw `samples` elements per case
// (some checks use a fixed multiple of it); per-case seeds derive from the
// master seed by stable hashing of the case key, so reports replay exactly.
struct VerifyConfig {
  int max_n = 6;
  int samples = 100;
  std::uint64_t seed = 42;
  int coeff_bound = 3;
  int threads = 0;  // 0 = auto
};

struct CheckResult {
  std::string check_id;
  std::string signature;  // "p,q,r" or "-" for signature-free checks
  std::string subject;    // group, target or property name
  std::string status;     // "pass" | "fail" | "no_table_row"
  std::string detail;     // counterexample or context; replayable via the CLI
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<CheckResult> results;  // ordered by (check_id, signature, subject)
  double seconds = 0.0;

  std::map<std::string, int> summary() const;             // status -> count
  std::map<std::string, std::map<std::string, int>> by_check() const;
  bool all_passed() const;
};

// Runs every structural check up to config.max_n: centralizer closed forms,
// stabilizer/norm membership agreement, norm codomains, representation
// kernels, factorization round-trips, Lie algebra tables, dimension
// formulas, the Cl(p,q,1) and Grassmann fixtures, inclusion relations and
// the core algebra property suite.
VerifyReport run_verify(const VerifyConfig& config);

std::string report_to_json(const VerifyReport& report, bool include_timing = true);
std::string report_to_text(const VerifyReport& report);

// All (p,q,r) with p+q+r = n.
std::vector<std::array<int, 3>> signature_splits(int n);

}  // namespace ga
