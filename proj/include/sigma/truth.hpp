#pragma once

#include <string>

namespace sigma {

/// Outcome of a predicate that may depend on an incomplete search.
enum class Truth { False, True, Inconclusive };

inline Truth truth(bool b) { return b ? Truth::True : Truth::False; }

/// Kleene conjunction: False dominates, then Inconclusive.
inline Truth operator&&(Truth a, Truth b) {
  if (a == Truth::False || b == Truth::False) return Truth::False;
  if (a == Truth::Inconclusive || b == Truth::Inconclusive) return Truth::Inconclusive;
  return Truth::True;
}

inline Truth operator!(Truth a) {
  if (a == Truth::Inconclusive) return a;
  return a == Truth::True ? Truth::False : Truth::True;
}

inline bool decisive(Truth a) { return a != Truth::Inconclusive; }

inline std::string to_string(Truth t) {
  switch (t) {
    case Truth::False: return "false";
    case Truth::True: return "true";
    default: return "inconclusive";
  }
}

}  // namespace sigma
