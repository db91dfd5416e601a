#pragma once

#include <cstdint>

namespace sigma {

// Size bounds shared by every algorithm that can switch strategy. The values
// are process-wide; set them once before doing work on several threads.
struct Limits {
  // Largest group whose elements may be materialised (element filters).
  std::uint64_t iteration_cap = 100000;
  // Largest group on which exhaustive subgroup enumeration is attempted.
  std::uint64_t enumeration_cap = 2000;
  // Largest coset count for a quotient action.
  std::uint64_t quotient_degree_cap = 20000;
  // Node budget for chain backtracking above the iteration cap.
  std::uint64_t search_budget = 20000000;
  // Restarts of the seeded randomised Hall search.
  std::uint64_t random_restarts = 400;
};

Limits const& limits();
void set_limits(Limits const& l);

/// Overrides the limits for the lifetime of the object (tests).
class ScopedLimits {
 public:
  explicit ScopedLimits(Limits const& l);
  ~ScopedLimits();
  ScopedLimits(ScopedLimits const&) = delete;
  ScopedLimits& operator=(ScopedLimits const&) = delete;

 private:
  Limits saved_;
};

}  // namespace sigma
