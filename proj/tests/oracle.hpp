#pragma once

// Naive set-based reference implementations. They share nothing with the
// library beyond Permutation arithmetic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "sigma/perm.hpp"

namespace oracle {

using sigma::Permutation;
using Set = std::set<Permutation>;

inline Set closure(std::size_t degree, std::vector<Permutation> const& gens) {
  Set seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (auto const& x : frontier) {
      for (auto const& g : gens) {
        auto y = x * g;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline Set product(Set const& a, Set const& b) {
  Set out;
  for (auto const& x : a) {
    for (auto const& y : b) out.insert(x * y);
  }
  return out;
}

inline Set intersect(Set const& a, Set const& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline bool is_closed(Set const& s) {
  for (auto const& x : s) {
    for (auto const& y : s) {
      if (!s.count(x * y)) return false;
    }
  }
  return true;
}

inline Set conjugate(Set const& s, Permutation const& g) {
  Set out;
  for (auto const& x : s) out.insert(x ^ g);
  return out;
}

inline bool is_normal(Set const& g, Set const& h) {
  for (auto const& x : g) {
    if (conjugate(h, x) != h) return false;
  }
  return true;
}

inline Set normal_closure(Set const& g, Set const& h) {
  std::size_t degree = g.begin()->degree();
  std::vector<Permutation> gens;
  for (auto const& x : g) {
    for (auto const& y : h) gens.push_back(y ^ x);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return closure(degree, gens);
}

inline Set filter(Set const& g, std::function<bool(Permutation const&)> const& pred) {
  Set out;
  for (auto const& x : g) {
    if (pred(x)) out.insert(x);
  }
  return out;
}

inline Set centralizer(Set const& g, Set const& h) {
  return filter(g, [&](auto const& x) {
    return std::all_of(h.begin(), h.end(), [&](auto const& y) { return x * y == y * x; });
  });
}

inline Set normalizer(Set const& g, Set const& h) {
  return filter(g, [&](auto const& x) { return conjugate(h, x) == h; });
}

inline bool is_pi_number(std::uint64_t n, std::function<bool(std::uint64_t)> const& pi) {
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    if (!pi(p)) return false;
    while (n % p == 0) n /= p;
  }
  return n == 1 || pi(n);
}

/// Largest normal pi-subgroup: the elements whose normal closure is a pi-group.
inline Set pi_core(Set const& g, std::function<bool(std::uint64_t)> const& pi) {
  return filter(g, [&](auto const& x) { return is_pi_number(normal_closure(g, Set{x}).size(), pi); });
}

/// Every subgroup, as element sets.
inline std::vector<Set> all_subgroups(Set const& g) {
  std::size_t degree = g.begin()->degree();
  std::set<Set> found{Set{Permutation::identity(degree)}};
  std::vector<Set> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Set> next;
    for (auto const& h : frontier) {
      std::vector<Permutation> gens(h.begin(), h.end());
      for (auto const& x : g) {
        if (h.count(x)) continue;
        gens.push_back(x);
        auto k = closure(degree, gens);
        gens.pop_back();
        if (found.insert(k).second) next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

inline std::vector<Set> normal_subgroups(Set const& g) {
  std::vector<Set> out;
  for (auto& h : all_subgroups(g)) {
    if (is_normal(g, h)) out.push_back(std::move(h));
  }
  return out;
}

/// { x : [x, h] in K for all h in H }
inline Set factor_centralizer(Set const& g, Set const& h, Set const& k) {
  return filter(g, [&](auto const& x) {
    return std::all_of(h.begin(), h.end(), [&](auto const& y) { return k.count(x.inverse() * y.inverse() * x * y) > 0; });
  });
}

}  // namespace oracle
