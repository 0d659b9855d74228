#pragma once

#include <stdexcept>
#include <string>

namespace hyfac {

/// Bad argument to an accessor (unknown vertex, color out of range, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A construction invariant failed. Always a defect in this library.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// An input exceeds a hard size cap.
class SizeError : public std::length_error {
public:
  using std::length_error::length_error;
};

} // namespace hyfac
