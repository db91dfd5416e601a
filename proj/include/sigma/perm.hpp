#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace sigma {

/// A point of the permuted set. The public API is 1-based throughout.
using Point = std::uint32_t;

/// A bijection of {1, ..., degree}.
///
/// Products act on the right, as in cycle-notation input: for the product
/// `p * q` the permutation `p` is applied first, so that `(x)(p * q) =
/// ((x)p)q`. Conjugation `p ^ q` is `q^-1 * p * q`.
class Permutation {
 public:
  /// The identity of degree 1.
  Permutation() : img_{0} {}

  static Permutation identity(std::size_t degree);

  /// `images[i - 1]` is the image of point i. Throws InvalidArgument unless
  /// the sequence is a bijection of {1..n}.
  static Permutation from_images(std::span<Point const> images);

  /// Disjoint cycles, 1-based. Fixed points may be omitted.
  static Permutation from_cycles(std::size_t degree, std::vector<std::vector<Point>> const& cycles);

  std::size_t degree() const noexcept { return img_.size(); }

  /// Image of the 1-based point p.
  Point operator[](Point p) const { return img_[p - 1] + 1; }

  /// 0-based image table, for hot loops.
  std::span<std::uint32_t const> table() const noexcept { return img_; }

  bool is_identity() const noexcept;

  Permutation operator*(Permutation const& rhs) const;
  Permutation& operator*=(Permutation const& rhs);
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;

  /// q^-1 * this * q
  Permutation operator^(Permutation const& q) const;

  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const;

  /// Smallest moved point (1-based), or 0 for the identity.
  Point first_moved() const noexcept;

  std::vector<std::vector<Point>> cycles() const;

  /// Disjoint-cycle notation with comma separated points, e.g. "(1,2,3)(4,5)";
  /// the identity prints as "()".
  std::string to_string() const;

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend std::strong_ordering operator<=>(Permutation const& a, Permutation const& b) {
    return a.img_ <=> b.img_;
  }

  std::size_t hash() const noexcept;

 private:
  explicit Permutation(std::vector<std::uint32_t> img) : img_(std::move(img)) {}

  std::vector<std::uint32_t> img_;
};

/// [a, b] = a^-1 b^-1 a b
Permutation commutator(Permutation const& a, Permutation const& b);

}  // namespace sigma

template <>
struct std::hash<sigma::Permutation> {
  std::size_t operator()(sigma::Permutation const& p) const noexcept { return p.hash(); }
};
