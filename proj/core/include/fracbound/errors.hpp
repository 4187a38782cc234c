#pragma once

#include <stdexcept>
#include <string>

namespace fracbound {

// Malformed textual input (JSON files, rational literals, CLI specs).
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input that fails a mathematical precondition
// (wrong weighting class, non-positive-definite matrix, bad permutation, ...).
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Input is fine but the requested computation exceeds a resource guard
// (enumeration too large, count search space too big, ...).
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fracbound
