#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sigma/bigint.hpp"
#include "sigma/subgroup.hpp"

namespace sigma {

/// Identifier of a class of a partition. Explicit classes are numbered
/// 0..k-1 in the order given; the complement class is k; under singleton
/// completion an unlisted prime p is the class k + p.
using ClassId = std::uint64_t;
using ClassSet = std::set<ClassId>;

enum class Completion {
  ComplementClass,  // every unlisted prime in one extra class
  Singletons,       // every unlisted prime on its own
};

/// A partition of the set of all primes: finitely many explicit classes plus
/// a completion policy for the rest.
///
/// Text form: brace-delimited comma separated primes joined by `|`, with an
/// optional trailing `*` (complement class) or `~` (singletons, the
/// default). `~` alone is the finest partition.
class SigmaPartition {
 public:
  /// The finest partition: every prime on its own.
  SigmaPartition() = default;

  /// Throws InvalidArgument for empty classes, non-primes or overlaps.
  SigmaPartition(std::vector<std::set<std::uint64_t>> classes, Completion completion);

  /// Throws ParseError.
  static SigmaPartition parse(std::string_view text);

  ClassId classify(std::uint64_t prime) const;
  std::set<std::uint64_t> const* explicit_class(ClassId id) const;
  std::vector<std::set<std::uint64_t>> const& classes() const noexcept { return classes_; }
  Completion completion() const noexcept { return completion_; }

  /// Primes whose class lies in `ids`.
  PrimeFilter filter(ClassSet const& ids) const;

  std::string label(ClassId id) const;
  std::string label(ClassSet const& ids) const;
  std::string to_string() const;

 private:
  std::vector<std::set<std::uint64_t>> classes_;
  Completion completion_ = Completion::Singletons;
};

/// The classes met by the prime divisors of n.
ClassSet sigma_of(BigInt const& n, SigmaPartition const& sigma);

/// |sigma(n)| <= 1
bool is_sigma_primary(BigInt const& n, SigmaPartition const& sigma);

/// sigma(n) and sigma(m) are disjoint.
bool sigma_coprime(BigInt const& n, BigInt const& m, SigmaPartition const& sigma);

}  // namespace sigma
