#pragma once

#include <stdexcept>
#include <string>

namespace sfc {

// Resource ceiling hit during enumeration / facet expansion / shelling search.
// Distinct from a refutation: the question was not answered.
struct CeilingExceeded : std::runtime_error {
  explicit CeilingExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Node budget of the decomposability search exhausted.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sfc
