#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sigma/subgroup.hpp"

namespace sigma {

/// G/N acting faithfully on the right cosets of N, with the projection.
///
/// A trivial N is represented by G itself in its given action.
class Quotient {
 public:
  PermGroup const& group() const noexcept { return image_; }
  PermGroup const& source() const noexcept { return source_; }
  Subgroup const& kernel() const noexcept { return kernel_; }
  std::size_t index() const { return natural_ ? image_.order_u64() : reps_.size(); }

  Permutation project(Permutation const& g) const;

  /// Some element of G mapping to q.
  Permutation lift(Permutation const& q) const;

  /// HN/N for H <= G.
  Subgroup image(Subgroup const& h) const;

  /// The full preimage of a subgroup of the quotient; contains N.
  Subgroup preimage(Subgroup const& s) const;

 private:
  friend Quotient quotient(PermGroup const& g, Subgroup const& n);
  Quotient(PermGroup source, Subgroup kernel) : source_(source), kernel_(std::move(kernel)), image_(source) {}

  Permutation canonical(Permutation const& x) const;
  std::size_t coset_of(Permutation const& x) const;

  PermGroup source_;
  Subgroup kernel_;
  PermGroup image_;
  bool natural_ = true;
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, std::size_t> slot_;
};

/// Throws NotNormal, or CapExceeded when |G:N| exceeds the quotient-degree cap.
Quotient quotient(PermGroup const& g, Subgroup const& n);

/// All minimal normal subgroups, ordered by canonical generators.
std::vector<Subgroup> minimal_normal_subgroups(PermGroup const& g);

/// H/K with its centraliser data.
struct ChiefFactorData {
  Subgroup below;    // K
  Subgroup above;    // H
  BigInt factor_order;
  Subgroup centralizer;  // C_G(H/K)
  BigInt induced_order;  // |G / C_G(H/K)|
};

struct ChiefSeries {
  std::vector<Subgroup> terms;  // 1 = terms[0] < ... < terms.back() = G
  std::vector<ChiefFactorData> factors;
};

struct ChiefSeriesOptions {
  /// Without a seed the minimal normal subgroup with the least canonical
  /// generators is taken at each step; with one, a seeded random choice.
  std::optional<std::uint64_t> seed;
};

ChiefSeries chief_series(PermGroup const& g, ChiefSeriesOptions const& options = {});

/// { x in G : [x, h] in K for every generator h of H }, for K <= H both normal.
Subgroup chief_factor_centralizer(PermGroup const& g, Subgroup const& h, Subgroup const& k);

}  // namespace sigma
