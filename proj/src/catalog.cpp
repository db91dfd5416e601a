#include "sigma/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sigma/errors.hpp"

namespace sigma {

namespace {

using Cycles = std::vector<std::vector<Point>>;

Permutation cycle_on(std::size_t degree, std::vector<Point> points) {
  if (points.size() < 2) return Permutation::identity(degree);
  return Permutation::from_cycles(degree, {std::move(points)});
}

std::uint64_t power_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  for (; e; e >>= 1, a = a * a % m) {
    if (e & 1) r = r * a % m;
  }
  return r;
}

std::uint64_t primitive_root(std::uint64_t p) {
  auto const primes = prime_divisors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = std::all_of(primes.begin(), primes.end(), [&](auto q) { return power_mod(g, (p - 1) / q, p) != 1; });
    if (ok) return g;
  }
  return 1;
}

std::vector<Permutation> family_generators(GroupSpec const& s) {
  auto const n = static_cast<std::size_t>(s.n);
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point{1});
  switch (s.kind) {
    case GroupSpec::Kind::Cyclic:
      return {cycle_on(n, all)};
    case GroupSpec::Kind::Dihedral: {
      std::vector<Point> img(n);
      for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((n - i) % n + 1);
      return {cycle_on(n, all), Permutation::from_images(img)};
    }
    case GroupSpec::Kind::Symmetric:
      return {cycle_on(n, all), cycle_on(n, {1, 2})};
    case GroupSpec::Kind::Alternating: {
      std::vector<Permutation> gens;
      for (Point k = 3; k <= n; ++k) gens.push_back(cycle_on(n, {1, 2, k}));
      return gens;
    }
    default:
      return s.generators;
  }
}

Permutation shifted(Permutation const& p, std::size_t offset, std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{1});
  for (std::size_t i = 1; i <= p.degree(); ++i) img[offset + i - 1] = static_cast<Point>(offset + p[i]);
  return Permutation::from_images(img);
}

}  // namespace

GroupSpec GroupSpec::cyclic(std::uint64_t n) {
  GroupSpec s;
  s.kind = Kind::Cyclic;
  s.n = n;
  validate(s);
  return s;
}

GroupSpec GroupSpec::dihedral(std::uint64_t n) {
  GroupSpec s;
  s.kind = Kind::Dihedral;
  s.n = n;
  validate(s);
  return s;
}

GroupSpec GroupSpec::symmetric(std::uint64_t n) {
  GroupSpec s;
  s.kind = Kind::Symmetric;
  s.n = n;
  validate(s);
  return s;
}

GroupSpec GroupSpec::alternating(std::uint64_t n) {
  GroupSpec s;
  s.kind = Kind::Alternating;
  s.n = n;
  validate(s);
  return s;
}

GroupSpec GroupSpec::direct_product(std::vector<GroupSpec> factors) {
  GroupSpec s;
  s.kind = Kind::DirectProduct;
  s.factors = std::move(factors);
  validate(s);
  return s;
}

GroupSpec GroupSpec::explicit_group(std::size_t degree, std::vector<Permutation> gens, std::string name) {
  GroupSpec s;
  s.kind = Kind::Explicit;
  s.degree = degree;
  s.generators = std::move(gens);
  s.name = std::move(name);
  validate(s);
  return s;
}

GroupSpec GroupSpec::cyclic_extension(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p) || k == 0 || (p - 1) % k != 0) {
    throw InvalidArgument("cyclic extension needs a prime p and k dividing p - 1");
  }
  auto const a = power_mod(primitive_root(p), (p - 1) / k, p);
  std::vector<Point> shift(p), img(p);
  std::iota(shift.begin(), shift.end(), Point{1});
  for (std::uint64_t x = 0; x < p; ++x) img[x] = static_cast<Point>(a * x % p + 1);
  std::vector<Permutation> gens{cycle_on(p, shift)};
  if (k > 1) gens.push_back(Permutation::from_images(img));
  auto name = k == p - 1 ? "Hol(C" + std::to_string(p) + ")"
                         : "C" + std::to_string(p) + ":C" + std::to_string(k);
  return explicit_group(p, std::move(gens), name);
}

void validate(GroupSpec const& s) {
  switch (s.kind) {
    case GroupSpec::Kind::Cyclic:
    case GroupSpec::Kind::Symmetric:
    case GroupSpec::Kind::Alternating:
      if (s.n < 1 || s.n > 5000) throw InvalidArgument("family parameter must lie in 1..5000");
      break;
    case GroupSpec::Kind::Dihedral:
      if (s.n < 3 || s.n > 5000) throw InvalidArgument("dihedral parameter must lie in 3..5000");
      break;
    case GroupSpec::Kind::DirectProduct:
      if (s.factors.size() < 2) throw InvalidArgument("a direct product needs at least two factors");
      for (auto const& f : s.factors) validate(f);
      break;
    case GroupSpec::Kind::Explicit:
      if (s.degree < 1) throw InvalidArgument("degree must be at least 1");
      for (auto const& g : s.generators) {
        if (g.degree() != s.degree) throw InvalidArgument("generator degree does not match the group degree");
      }
      break;
  }
}

std::string group_name(GroupSpec const& s) {
  if (!s.name.empty()) return s.name;
  auto n = std::to_string(s.n);
  switch (s.kind) {
    case GroupSpec::Kind::Cyclic: return "C" + n;
    case GroupSpec::Kind::Dihedral: return "Dih" + n;
    case GroupSpec::Kind::Symmetric: return "S" + n;
    case GroupSpec::Kind::Alternating: return "A" + n;
    case GroupSpec::Kind::DirectProduct: {
      std::string out;
      for (auto const& f : s.factors) out += (out.empty() ? "" : "x") + group_name(f);
      return out;
    }
    default: return "G" + std::to_string(s.degree);
  }
}

std::size_t group_degree(GroupSpec const& s) {
  switch (s.kind) {
    case GroupSpec::Kind::DirectProduct: {
      std::size_t d = 0;
      for (auto const& f : s.factors) d += group_degree(f);
      return d;
    }
    case GroupSpec::Kind::Explicit: return s.degree;
    default: return static_cast<std::size_t>(s.n);
  }
}

std::optional<BigInt> expected_order(GroupSpec const& s) {
  BigInt f = 1;
  switch (s.kind) {
    case GroupSpec::Kind::Cyclic: return BigInt(s.n);
    case GroupSpec::Kind::Dihedral: return BigInt(2 * s.n);
    case GroupSpec::Kind::Symmetric:
    case GroupSpec::Kind::Alternating:
      for (std::uint64_t i = 2; i <= s.n; ++i) f *= i;
      if (s.kind == GroupSpec::Kind::Alternating && s.n >= 2) f /= 2;
      return f;
    case GroupSpec::Kind::DirectProduct:
      for (auto const& x : s.factors) {
        auto o = expected_order(x);
        if (!o) return std::nullopt;
        f *= *o;
      }
      return f;
    default: return std::nullopt;
  }
}

PermGroup build_group(GroupSpec const& s) {
  validate(s);
  if (s.kind == GroupSpec::Kind::Explicit) return group_from_generators(s.degree, s.generators);
  if (s.kind != GroupSpec::Kind::DirectProduct) return group_from_generators(group_degree(s), family_generators(s));
  auto const degree = group_degree(s);
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (auto const& f : s.factors) {
    auto const factor = build_group(f);
    for (auto const& g : factor.generators()) gens.push_back(shifted(g, offset, degree));
    offset += group_degree(f);
  }
  return group_from_generators(degree, std::move(gens));
}

CatalogEntry flagship_entry() {
  auto spec = GroupSpec::direct_product({GroupSpec::alternating(5), GroupSpec::holomorph(11)});
  auto const d = group_degree(spec);
  // Points 6..16 carry Z/11 as x -> x + 6.
  auto affine = [&](std::uint64_t a) {
    std::vector<Point> img(d);
    std::iota(img.begin(), img.end(), Point{1});
    for (std::uint64_t x = 0; x < 11; ++x) img[5 + x] = static_cast<Point>(6 + a * x % 11);
    return Permutation::from_images(img);
  };
  std::vector<Point> eleven(11);
  std::iota(eleven.begin(), eleven.end(), Point{6});
  CatalogEntry e{spec, {}};
  e.hints.push_back({"H1", {cycle_on(d, {1, 2, 3}), Permutation::from_cycles(d, {{1, 2}, {3, 4}}), affine(10)}});
  e.hints.push_back({"H2", {cycle_on(d, {1, 2, 3, 4, 5}), affine(4)}});
  e.hints.push_back({"H3", {cycle_on(d, eleven)}});
  return e;
}

std::vector<CatalogEntry> catalog(std::uint64_t max_order, bool include_named) {
  std::vector<GroupSpec> base;
  for (std::uint64_t n = 2; n <= std::min<std::uint64_t>(max_order, 60); ++n) base.push_back(GroupSpec::cyclic(n));
  for (std::uint64_t n = 3; 2 * n <= max_order && n <= 60; ++n) base.push_back(GroupSpec::dihedral(n));
  for (std::uint64_t n = 4; n <= 6; ++n) base.push_back(GroupSpec::symmetric(n));
  for (std::uint64_t n = 4; n <= 7; ++n) base.push_back(GroupSpec::alternating(n));
  for (auto [p, k] : {std::pair{5, 4}, {7, 3}, {7, 6}, {11, 5}, {11, 10}, {13, 3}, {13, 4}, {13, 6}, {13, 12}}) {
    base.push_back(GroupSpec::cyclic_extension(p, k));
  }
  std::erase_if(base, [&](auto const& s) {
    auto o = expected_order(s);
    return o ? *o > max_order : build_group(s).order() > max_order;
  });
  std::vector<BigInt> orders;
  for (auto const& s : base) orders.push_back(expected_order(s) ? *expected_order(s) : build_group(s).order());

  std::map<std::string, CatalogEntry> out;
  if (max_order >= 1) out.emplace("C1", CatalogEntry{GroupSpec::cyclic(1), {}});
  for (auto const& s : base) out.emplace(group_name(s), CatalogEntry{s, {}});
  for (std::size_t a = 0; a < base.size(); ++a) {
    for (std::size_t b = a; b < base.size(); ++b) {
      if (orders[a] * orders[b] > max_order) continue;
      bool both_cyclic = base[a].kind == GroupSpec::Kind::Cyclic && base[b].kind == GroupSpec::Kind::Cyclic;
      if (both_cyclic && std::gcd(base[a].n, base[b].n) == 1) continue;
      auto prod = GroupSpec::direct_product({base[a], base[b]});
      out.emplace(group_name(prod), CatalogEntry{prod, {}});
    }
  }
  std::vector<CatalogEntry> entries;
  for (auto& [name, e] : out) entries.push_back(std::move(e));
  if (include_named) {
    for (auto e : {flagship_entry(), CatalogEntry{GroupSpec::alternating(5), {}},
                   CatalogEntry{GroupSpec::symmetric(4), {}}}) {
      if (!out.count(group_name(e.spec))) entries.push_back(std::move(e));
    }
  }
  return entries;
}

}  // namespace sigma
