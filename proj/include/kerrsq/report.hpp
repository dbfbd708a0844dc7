#pragma once

#include <string>
#include <vector>

namespace kerrsq {

// One line of a verification report. For two-sided checks pass means
// |observed - expected| <= tolerance; for one-sided bounds (tolerance 0)
// pass means observed <= expected.
struct CheckLine {
  std::string name;
  double observed;
  double expected;
  double tolerance;
  bool pass;
};

struct VerificationReport {
  std::vector<CheckLine> checks;

  void add_close(std::string name, double observed, double expected, double tolerance);
  void add_leq(std::string name, double observed, double bound);
  void merge(const VerificationReport& other, const std::string& prefix);
  bool all_pass() const;
};

}  // namespace kerrsq
