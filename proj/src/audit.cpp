#include "hyfac/audit.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace hyfac {

void AuditReport::add(std::string check, std::string location, std::string expected,
                      std::string actual) {
  violations_.push_back({std::move(check), std::move(location), std::move(expected),
                         std::move(actual)});
}

void AuditReport::merge(const AuditReport& other) {
  violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
}

bool AuditReport::failed(const std::string& check) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [&](const Violation& v) { return v.check == check; });
}

std::ostream& operator<<(std::ostream& os, const AuditReport& report) {
  if (report.passed()) return os << "PASS\n";
  os << "FAIL (" << report.violations().size() << " violation"
     << (report.violations().size() == 1 ? "" : "s") << ")\n";
  for (const auto& v : report.violations())
    os << "  [" << v.check << "] " << v.location << ": expected " << v.expected << ", got "
       << v.actual << "\n";
  return os;
}

ConditionError::ConditionError(AuditReport report)
    : std::invalid_argument([&] {
        std::ostringstream os;
        os << "conditions fail: " << report;
        return os.str();
      }()),
      report_(std::move(report)) {}

} // namespace hyfac
