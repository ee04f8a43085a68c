#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latcap {

// Thrown by the counting DP when the state map outgrows its configured
// budget.  Carries the high-water mark so callers can report how far the
// computation got.
struct BudgetExceeded : std::runtime_error {
  std::size_t peak_states;
  BudgetExceeded(const std::string& msg, std::size_t peak)
      : std::runtime_error(msg), peak_states(peak) {}
};

} // namespace latcap
