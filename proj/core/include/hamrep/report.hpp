#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hamrep {

struct Check {
  std::string name;
  bool passed = false;
  std::string witness;  // failure data or informational note; may be empty
};

/// Outcome of one verification run: an ordered list of named checks.
/// The report passes exactly when every check passes. Construction is
/// deterministic for a fixed seed, so serialized reports are reproducible.
struct Report {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  std::optional<double> timing_ms;  // filled only when timing is requested

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  int failed_count() const {
    int n = 0;
    for (const auto& c : checks) n += c.passed ? 0 : 1;
    return n;
  }

  void add_pass(std::string name, std::string witness = {});
  void add_fail(std::string name, std::string witness);
  /// Appends the other report's checks, keeping their order.
  void merge(const Report& other);

  /// One line per check plus a PASS/FAIL trailer; for human eyes (stderr).
  void summarize(std::ostream& os) const;
};

}  // namespace hamrep
