#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sigma/perm_group.hpp"

namespace sigma {

/// Predicate selecting a set of primes (a Pi in the sense of Pi-numbers).
using PrimeFilter = std::function<bool(std::uint64_t)>;

/// True when every prime divisor of n passes `pi`. 1 is a Pi-number.
bool is_pi_number(BigInt const& n, PrimeFilter const& pi);

/// The largest divisor of n that is a Pi-number.
BigInt pi_part(BigInt const& n, PrimeFilter const& pi);

/// A group together with the ambient group it lives in.
class Subgroup {
 public:
  /// Throws InvalidArgument unless every generator of `group` lies in `ambient`.
  Subgroup(PermGroup ambient, PermGroup group);

  static Subgroup whole(PermGroup const& ambient);
  static Subgroup trivial(PermGroup const& ambient);
  static Subgroup generated(PermGroup const& ambient, std::vector<Permutation> gens);

  PermGroup const& ambient() const noexcept { return ambient_; }
  PermGroup const& group() const noexcept { return group_; }
  BigInt const& order() const noexcept { return group_.order(); }
  std::vector<Permutation> const& generators() const noexcept { return group_.generators(); }
  bool is_trivial() const noexcept { return group_.is_trivial(); }

  bool contains(Permutation const& g) const { return group_.contains(g); }
  /// other <= this
  bool contains(Subgroup const& other) const { return group_.contains(other.group_); }

  /// Equality by mutual generator membership.
  friend bool operator==(Subgroup const& a, Subgroup const& b) { return a.group_ == b.group_; }

 private:
  PermGroup ambient_;
  PermGroup group_;
};

bool same_ambient(Subgroup const& a, Subgroup const& b);

/// H^g
Subgroup conjugate(Subgroup const& h, Permutation const& g);

/// Calls `fn` on every element of G: a cached element list when |G| is under
/// the iteration cap, a budgeted chain traversal otherwise. `fn` returns false
/// to stop early.
void for_each_element(PermGroup const& g, std::function<bool(Permutation const&)> const& fn);

/// Subgroup of G consisting of the elements satisfying `pred`, which must
/// define a subgroup containing `start`. Element filter under the iteration
/// cap, chain backtracking above it; `prune(level, partial)` may cut subtrees
/// whose base images already rule out every completion.
Subgroup filter_subgroup(PermGroup const& g, Subgroup const& start,
                         std::function<bool(Permutation const&)> const& pred,
                         std::function<bool(std::size_t, Permutation const&)> const& prune = nullptr);

/// One representative per conjugacy class, in increasing element order.
/// Requires |G| <= iteration cap.
std::vector<Permutation> conjugacy_class_representatives(PermGroup const& g);

/// <A u B>
Subgroup join(Subgroup const& a, Subgroup const& b);

/// AB = BA, decided by |<A u B>| = |A||B| / |A n B|.
bool permutes(Subgroup const& a, Subgroup const& b);

Subgroup intersection(Subgroup const& a, Subgroup const& b);

/// Smallest normal subgroup of G containing H. Requires H <= G.
Subgroup normal_closure(PermGroup const& g, Subgroup const& h);

bool is_normal(PermGroup const& g, Subgroup const& h);

Subgroup normalizer(PermGroup const& g, Subgroup const& h);

/// Elements of G commuting with every generator of H.
Subgroup centralizer(PermGroup const& g, Subgroup const& h);

/// [A, B]
Subgroup commutator_subgroup(Subgroup const& a, Subgroup const& b);

/// Largest normal Pi-subgroup of G.
Subgroup pi_core(PermGroup const& g, PrimeFilter const& pi);

/// Smallest normal subgroup of G with a Pi-group quotient.
Subgroup pi_residual(PermGroup const& g, PrimeFilter const& pi);

bool is_soluble(PermGroup const& g);

/// A Sylow p-subgroup of G.
Subgroup sylow_subgroup(PermGroup const& g, std::uint64_t p);

/// The distinct conjugates H^x, x in G, in discovery order (H first).
std::vector<Subgroup> conjugates(PermGroup const& g, Subgroup const& h);

/// Canonical generating sequence: scan the elements in increasing order and
/// keep each one not yet generated. Depends only on the element set.
std::vector<Permutation> canonical_generators(Subgroup const& h);

/// Hash of the element set, independent of the generators.
std::size_t subgroup_hash(Subgroup const& h);

}  // namespace sigma
