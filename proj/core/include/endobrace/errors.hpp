#pragma once

#include <stdexcept>
#include <string>

namespace endobrace {

// Unusable input: malformed tables, out-of-range element ids, unknown names.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A stated hypothesis of a construction does not hold for the given data.
// Carries the name of the hypothesis that failed.
class hypothesis_error : public std::runtime_error {
 public:
  explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace endobrace
