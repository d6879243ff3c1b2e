#include "hamrep/report.hpp"

#include <utility>

namespace hamrep {

void Report::add_pass(std::string name, std::string witness) {
  checks.push_back({std::move(name), true, std::move(witness)});
}

void Report::add_fail(std::string name, std::string witness) {
  checks.push_back({std::move(name), false, std::move(witness)});
}

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

void Report::summarize(std::ostream& os) const {
  for (const auto& c : checks) {
    os << (c.passed ? "  ok   " : "  FAIL ") << c.name;
    if (!c.witness.empty()) os << "  [" << c.witness << "]";
    os << '\n';
  }
  os << (passed() ? "PASS" : "FAIL") << ": " << command << " (" << checks.size()
     << " checks, " << failed_count() << " failed)\n";
}

}  // namespace hamrep
