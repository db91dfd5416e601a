#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigma/perm_group.hpp"

namespace sigma {

/// Recipe for a permutation group.
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Symmetric, Alternating, DirectProduct, Explicit };

  Kind kind = Kind::Explicit;
  std::uint64_t n = 0;               // family parameter
  std::vector<GroupSpec> factors;    // direct products
  std::size_t degree = 1;            // explicit groups
  std::vector<Permutation> generators;
  std::string name;                  // overrides the derived name when set

  static GroupSpec cyclic(std::uint64_t n);
  /// Symmetries of the regular n-gon, order 2n on n points (n >= 3).
  static GroupSpec dihedral(std::uint64_t n);
  static GroupSpec symmetric(std::uint64_t n);
  static GroupSpec alternating(std::uint64_t n);
  static GroupSpec direct_product(std::vector<GroupSpec> factors);
  static GroupSpec explicit_group(std::size_t degree, std::vector<Permutation> gens, std::string name = {});
  /// C_p extended by the multiplications of order k, on p points (k | p - 1).
  static GroupSpec cyclic_extension(std::uint64_t p, std::uint64_t k);
  static GroupSpec holomorph(std::uint64_t p) { return cyclic_extension(p, p - 1); }
};

/// Throws InvalidArgument for bad parameters.
void validate(GroupSpec const& spec);
std::string group_name(GroupSpec const& spec);
std::size_t group_degree(GroupSpec const& spec);
/// Closed-form order; nullopt for explicit groups.
std::optional<BigInt> expected_order(GroupSpec const& spec);

/// Direct products act on consecutive disjoint blocks of points.
PermGroup build_group(GroupSpec const& spec);

struct CatalogEntry {
  GroupSpec spec;
  /// Named generator lists offered to the searches as hints.
  std::vector<std::pair<std::string, std::vector<Permutation>>> hints;
};

/// A5 x Hol(C11) with generators of a pairwise permutable triple of Hall
/// subgroups for {2,3}|{5}|* as hints.
CatalogEntry flagship_entry();

/// Generated families and their binary direct products of order at most
/// `max_order`, sorted by name, followed by the named instances (the
/// flagship group, A5 and S4) when not already present.
std::vector<CatalogEntry> catalog(std::uint64_t max_order, bool include_named = true);

}  // namespace sigma
