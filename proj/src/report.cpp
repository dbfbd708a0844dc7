#include "kerrsq/report.hpp"

#include <cmath>

namespace kerrsq {

void VerificationReport::add_close(std::string name, double observed, double expected,
                                   double tolerance) {
  const bool ok = std::isfinite(observed) && std::fabs(observed - expected) <= tolerance;
  checks.push_back({std::move(name), observed, expected, tolerance, ok});
}

void VerificationReport::add_leq(std::string name, double observed, double bound) {
  const bool ok = std::isfinite(observed) && observed <= bound;
  checks.push_back({std::move(name), observed, bound, 0.0, ok});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    CheckLine line = c;
    line.name = prefix + line.name;
    checks.push_back(std::move(line));
  }
}

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace kerrsq
