#include "sigma/perm.hpp"

#include <numeric>
#include <sstream>

#include "sigma/errors.hpp"

namespace sigma {

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) throw InvalidArgument("permutation degree must be at least 1");
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::span<Point const> images) {
  std::size_t const n = images.size();
  if (n == 0) throw InvalidArgument("permutation degree must be at least 1");
  std::vector<std::uint32_t> img(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    Point const p = images[i];
    if (p < 1 || p > n) {
      throw InvalidArgument("image " + std::to_string(p) + " out of range 1.." + std::to_string(n));
    }
    if (seen[p - 1]) throw InvalidArgument("image " + std::to_string(p) + " repeated; not a bijection");
    seen[p - 1] = true;
    img[i] = p - 1;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::size_t degree, std::vector<std::vector<Point>> const& cycles) {
  Permutation result = identity(degree);
  std::vector<bool> used(degree, false);
  for (auto const& cyc : cycles) {
    for (Point p : cyc) {
      if (p < 1 || p > degree) {
        throw InvalidArgument("point " + std::to_string(p) + " out of range 1.." + std::to_string(degree));
      }
      if (used[p - 1]) throw InvalidArgument("point " + std::to_string(p) + " occurs twice in cycles");
      used[p - 1] = true;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      result.img_[cyc[i] - 1] = cyc[(i + 1) % cyc.size()] - 1;
    }
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::operator*(Permutation const& rhs) const {
  if (rhs.degree() != degree()) throw InvalidArgument("degree mismatch in permutation product");
  std::vector<std::uint32_t> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) img[i] = rhs.img_[img_[i]];
  return Permutation(std::move(img));
}

Permutation& Permutation::operator*=(Permutation const& rhs) {
  if (rhs.degree() != degree()) throw InvalidArgument("degree mismatch in permutation product");
  for (auto& x : img_) x = rhs.img_[x];
  return *this;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) img[img_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(img));
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Permutation result = identity(degree());
  while (k > 0) {
    if (k & 1) result *= base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Permutation Permutation::operator^(Permutation const& q) const {
  if (q.degree() != degree()) throw InvalidArgument("degree mismatch in conjugation");
  // (x)(q^-1 p q) at point (y)q equals ((y)p)q.
  std::vector<std::uint32_t> img(img_.size());
  for (std::size_t y = 0; y < img_.size(); ++y) img[q.img_[y]] = q.img_[img_[y]];
  return Permutation(std::move(img));
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Point Permutation::first_moved() const noexcept {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != i) return static_cast<Point>(i + 1);
  }
  return 0;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<Point> cyc;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      cyc.push_back(static_cast<Point>(j + 1));
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto const cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (auto const& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
  }
  return os.str();
}

std::size_t Permutation::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : img_) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

Permutation commutator(Permutation const& a, Permutation const& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace sigma
