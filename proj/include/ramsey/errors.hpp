#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Parameters outside a family's admissible range, or a moment pair no
// member of the family can reproduce.
class InvalidSpec : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// The requested quantity does not exist for this shock law
// (e.g. perpetuity moments when E log eps <= 0).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Malformed configuration text or flags; carries the offending location.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace ramsey
