#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "sigma/bigint.hpp"
#include "sigma/perm.hpp"

namespace sigma {

/// One level of a stabilizer chain: the stabilizer of the earlier base points
/// acting on the orbit of `base`.
struct ChainLevel {
  std::uint32_t base = 0;                 // 0-based
  std::vector<Permutation> generators;    // strong generators fixing earlier base points
  std::vector<std::uint32_t> orbit;       // 0-based points in discovery order
  std::vector<std::int32_t> slot;         // point -> index into orbit, -1 if absent
  std::vector<Permutation> transversal;   // transversal[k] maps base to orbit[k]
  std::vector<Permutation> inverse_transversal;
  // Schreier generators for orbit[0..checked_points) x generators[0..checked_gens)
  // are known to sift through the deeper levels.
  std::size_t checked_points = 0;
  std::size_t checked_gens = 0;
};

/// Deterministic Schreier-Sims. New base points are the smallest point moved
/// by the element that needs them, after an optional prescribed prefix.
class StabChain {
 public:
  explicit StabChain(std::size_t degree, std::span<std::uint32_t const> base_prefix = {});

  /// Adds g to the group; returns false when g was already a member.
  bool add_generator(Permutation const& g);

  bool contains(Permutation const& g) const;

  /// Sifts g from `from` downward. Returns the residue and the level at which
  /// sifting stopped (levels().size() if it passed every level).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from = 0) const;

  BigInt order() const;
  std::size_t degree() const noexcept { return degree_; }
  std::vector<ChainLevel> const& levels() const noexcept { return levels_; }

 private:
  void append_level(std::uint32_t base);
  void extend_orbit(ChainLevel& level);
  void complete_from(std::size_t start);

  std::size_t degree_;
  std::vector<ChainLevel> levels_;
};

/// A permutation group given by generators, certified by a stabilizer chain.
/// Immutable; copies share state and are safe to read concurrently.
class PermGroup {
 public:
  /// Trivial group of degree 1.
  PermGroup();

  /// Throws InvalidArgument on a generator whose degree differs.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept;
  std::vector<Permutation> const& generators() const noexcept;
  BigInt const& order() const noexcept;
  /// Order as a machine integer; throws CapExceeded when it does not fit.
  std::uint64_t order_u64() const;
  bool is_trivial() const noexcept;

  /// Throws InvalidArgument on a degree mismatch.
  bool contains(Permutation const& p) const;
  bool contains(PermGroup const& other) const;

  StabChain const& chain() const noexcept;
  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;

  /// Same group with a chain whose base starts with `prefix` (1-based).
  PermGroup with_base(std::span<Point const> prefix) const;

  /// Every element once, ordered lexicographically by base images. Throws
  /// CapExceeded when the order exceeds `cap`. The list is cached.
  std::vector<Permutation> const& elements(std::uint64_t cap) const;

  /// Depth-first traversal of the chain without materialising elements.
  /// `prune(level, partial)` sees a partial product fixing the images of base
  /// points 0..level and may return false to skip the subtree; `visit`
  /// returns false to stop. Each visited node counts against `budget`;
  /// exhausting it throws CapExceeded.
  void backtrack(std::function<bool(std::size_t, Permutation const&)> const& prune,
                 std::function<bool(Permutation const&)> const& visit, std::uint64_t budget) const;

  Permutation random_element(std::mt19937_64& rng) const;

  Permutation identity() const { return Permutation::identity(degree()); }

  /// True when both handles share one underlying object.
  bool shares_state_with(PermGroup const& other) const noexcept { return rep_ == other.rep_; }

  /// Equality as sets of permutations.
  friend bool operator==(PermGroup const& a, PermGroup const& b);

 private:
  struct Rep;
  explicit PermGroup(std::shared_ptr<Rep const> rep) : rep_(std::move(rep)) {}
  friend PermGroup group_from_chain(std::size_t, std::vector<Permutation>, StabChain);

  std::shared_ptr<Rep const> rep_;
};

/// Builds a group from generators; the generator list is kept verbatim.
PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens);

/// Wraps an already completed chain.
PermGroup group_from_chain(std::size_t degree, std::vector<Permutation> gens, StabChain chain);

/// Mutable accumulator used by closure algorithms: keeps a chain and only the
/// generators that enlarged it.
class GroupBuilder {
 public:
  explicit GroupBuilder(std::size_t degree);
  explicit GroupBuilder(PermGroup const& start);

  bool add(Permutation const& g);
  bool contains(Permutation const& g) const { return chain_.contains(g); }
  BigInt order() const { return chain_.order(); }
  std::vector<Permutation> const& generators() const noexcept { return gens_; }
  PermGroup build() const;

 private:
  std::size_t degree_;
  StabChain chain_;
  std::vector<Permutation> gens_;
};

}  // namespace sigma
