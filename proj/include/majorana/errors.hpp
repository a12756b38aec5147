#pragma once

#include <stdexcept>
#include <string>

namespace majorana {

/// Precondition violations: bad indices, singular maps, mismatched qubit counts.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative numerical routine failed to reach its acceptance criterion.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request exceeds a resource guard (exponential dense expansions).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A JSON document does not follow its schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace majorana
