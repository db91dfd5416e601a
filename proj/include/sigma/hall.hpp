#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sigma/partition.hpp"
#include "sigma/subgroup.hpp"

namespace sigma {

/// One Hall sigma_i-subgroup for every class i in sigma(G).
struct HallSet {
  std::map<ClassId, Subgroup> members;
};

enum class SearchStatus { Found, Absent, Inconclusive };

struct HallSearch {
  SearchStatus status = SearchStatus::Inconclusive;
  std::optional<Subgroup> subgroup;
  std::string strategy;  // "hint", "trivial", "enumeration", "random"
};

struct HallOptions {
  /// Candidate generators tried before any search.
  std::vector<std::vector<Permutation>> hints;
  std::uint64_t seed = 0;
};

/// True when |H| is a Pi-number and |G:H| a Pi'-number.
bool is_hall(PermGroup const& g, Subgroup const& h, PrimeFilter const& pi);

/// Strategy ladder: hints, trivial cases, exhaustive enumeration when |G| is
/// under the enumeration cap, seeded random generation otherwise. Absence is
/// only reported after exhaustive enumeration.
HallSearch find_hall_subgroup(PermGroup const& g, PrimeFilter const& pi, HallOptions const& options = {});

/// As find_hall_subgroup, but throws Inconclusive instead of returning it.
std::optional<Subgroup> hall_subgroup(PermGroup const& g, SigmaPartition const& sigma, ClassSet const& classes,
                                      HallOptions const& options = {});

/// Every Hall Pi-subgroup, grouped by conjugacy class. Requires |G| under the
/// enumeration cap.
std::vector<std::vector<Subgroup>> hall_subgroup_classes(PermGroup const& g, PrimeFilter const& pi);

/// Every subgroup of G (or every Pi-subgroup when `pi` is given), by
/// extending subgroups with cyclic subgroups layer by layer. Requires |G|
/// under the enumeration cap.
std::vector<Subgroup> enumerate_subgroups(PermGroup const& g, PrimeFilter const& pi = nullptr);

enum class HallMode { One, All };

/// Mode One returns at most one set; mode All every complete Hall sigma-set.
/// Throws Inconclusive (mode One) or CapExceeded (mode All above the cap).
std::vector<HallSet> complete_hall_sigma_sets(PermGroup const& g, SigmaPartition const& sigma, HallMode mode,
                                              HallOptions const& options = {});

}  // namespace sigma
