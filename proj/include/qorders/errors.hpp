#pragma once

#include <stdexcept>
#include <string>

namespace qorders {

// Exceeded a configured enumeration or search limit.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// External input data is inconsistent (e.g. a class-number formula that does
// not evaluate to an integer).
class data_error : public std::runtime_error {
 public:
  explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural invariant that the theory guarantees was violated at runtime.
// This always indicates a bug (or an oracle mismatch) and is never ignored.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qorders
