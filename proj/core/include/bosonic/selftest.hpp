#ifndef BOSONIC_SELFTEST_HPP
#define BOSONIC_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bosonic {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct SelftestOptions {
  int dim = 1;
  int truncation = 8;  // polynomial degree; kernels are built at twice this
  std::uint64_t seed = 1;
  double tolerance = 1e-10;
  // Negative control: breaks the symmetry of the kernel's Z so that
  // "z_symmetry" must fail.
  bool force_failure = false;
};

/// Runs the invariant suite on seeded random inputs, one entry per invariant.
std::vector<CheckResult> run_selftest(const SelftestOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace bosonic

#endif  // BOSONIC_SELFTEST_HPP
