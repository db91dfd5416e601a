#pragma once

#include <random>
#include <vector>

#include "oracle.hpp"
#include "sigma/catalog.hpp"
#include "sigma/subgroup.hpp"

namespace testing {

using namespace sigma;

inline Permutation P(std::size_t n, std::vector<std::vector<Point>> const& cycles) {
  return Permutation::from_cycles(n, cycles);
}

inline PermGroup group(std::size_t n, std::vector<std::vector<std::vector<Point>>> const& gens) {
  std::vector<Permutation> ps;
  for (auto const& c : gens) ps.push_back(P(n, c));
  return group_from_generators(n, ps);
}

inline oracle::Set elements_of(PermGroup const& g) {
  auto const& e = g.elements(1u << 20);
  return {e.begin(), e.end()};
}

inline oracle::Set elements_of(Subgroup const& h) { return elements_of(h.group()); }

inline oracle::Set closure_of(PermGroup const& g) { return oracle::closure(g.degree(), g.generators()); }

inline Subgroup from_set(PermGroup const& g, oracle::Set const& s) {
  return Subgroup::generated(g, std::vector<Permutation>(s.begin(), s.end()));
}

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i + 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(img);
}

inline PermGroup s4() { return build_group(GroupSpec::symmetric(4)); }
inline PermGroup a5() { return build_group(GroupSpec::alternating(5)); }

}  // namespace testing
