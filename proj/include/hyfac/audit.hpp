#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyfac {

struct Violation {
  std::string check;    // e.g. "S1", "C4", "regularity"
  std::string location; // vertex, color, or shape the check failed at
  std::string expected;
  std::string actual;
};

/// Outcome of a gate or audit. passed() <=> no violations.
class AuditReport {
public:
  bool passed() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }

  void add(std::string check, std::string location, std::string expected, std::string actual);
  template <class T, class U>
  void expect_eq(const std::string& check, const std::string& location, const T& expected,
                 const U& actual) {
    if (!(expected == actual)) add(check, location, std::to_string(expected), std::to_string(actual));
  }
  void merge(const AuditReport& other);

  /// True if any violation carries the given check id.
  bool failed(const std::string& check) const;

private:
  std::vector<Violation> violations_;
};

std::ostream& operator<<(std::ostream& os, const AuditReport& report);

/// Input conditions (S1)-(S3) or Corollary (i)-(iii) do not hold.
class ConditionError : public std::invalid_argument {
public:
  explicit ConditionError(AuditReport report);
  const AuditReport& report() const { return report_; }

private:
  AuditReport report_;
};

} // namespace hyfac
