#include "sigma/series.hpp"

#include <algorithm>
#include <random>

#include "sigma/config.hpp"
#include "sigma/errors.hpp"

namespace sigma {

// Coset Nx is represented by the element of Nx whose images of the base of N
// are lexicographically least; the greedy choice level by level finds it
// because those images determine the element of N.
Permutation Quotient::canonical(Permutation const& x) const {
  Permutation s = x;
  for (auto const& level : kernel_.group().chain().levels()) {
    auto const img = s.table();
    std::size_t best = 0;
    for (std::size_t a = 1; a < level.orbit.size(); ++a) {
      if (img[level.orbit[a]] < img[level.orbit[best]]) best = a;
    }
    if (best != 0) s = level.transversal[best] * s;
  }
  return s;
}

std::size_t Quotient::coset_of(Permutation const& x) const {
  auto it = slot_.find(canonical(x));
  if (it == slot_.end()) throw Error("quotient: element outside the source group");
  return it->second;
}

Permutation Quotient::project(Permutation const& g) const {
  if (natural_) return g;
  std::vector<Point> images(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) images[i] = static_cast<Point>(coset_of(reps_[i] * g) + 1);
  return Permutation::from_images(images);
}

Permutation Quotient::lift(Permutation const& q) const {
  if (natural_) return q;
  return reps_[q[1] - 1];
}

Subgroup Quotient::image(Subgroup const& h) const {
  std::vector<Permutation> gens;
  for (auto const& x : h.generators()) gens.push_back(project(x));
  return Subgroup::generated(image_, std::move(gens));
}

Subgroup Quotient::preimage(Subgroup const& s) const {
  GroupBuilder builder(kernel_.group());
  for (auto const& q : s.generators()) builder.add(lift(q));
  return Subgroup(source_, builder.build());
}

Quotient quotient(PermGroup const& g, Subgroup const& n) {
  if (n.group().degree() != g.degree() || !g.contains(n.group())) {
    throw InvalidArgument("quotient: N is not a subgroup of G");
  }
  if (!is_normal(g, n)) throw NotNormal("quotient: subgroup is not normal");
  Quotient q(g, Subgroup(g, n.group()));
  if (n.is_trivial()) return q;

  BigInt const index = g.order() / n.order();
  if (index > limits().quotient_degree_cap) {
    throw CapExceeded("quotient: index " + to_string(index) + " exceeds quotient-degree cap " +
                      std::to_string(limits().quotient_degree_cap));
  }
  q.natural_ = false;
  auto const cosets = static_cast<std::size_t>(index);
  q.reps_.reserve(cosets);
  auto add = [&](Permutation rep) {
    auto [it, inserted] = q.slot_.emplace(rep, q.reps_.size());
    if (inserted) q.reps_.push_back(std::move(rep));
    return it->second;
  };
  add(q.canonical(g.identity()));
  std::vector<std::vector<Point>> action(g.generators().size());
  for (std::size_t i = 0; i < q.reps_.size(); ++i) {
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      auto const j = add(q.canonical(q.reps_[i] * g.generators()[s]));
      action[s].push_back(static_cast<Point>(j + 1));
    }
  }
  std::vector<Permutation> gens;
  for (auto const& images : action) gens.push_back(Permutation::from_images(images));
  q.image_ = PermGroup(cosets, std::move(gens));
  return q;
}

std::vector<Subgroup> minimal_normal_subgroups(PermGroup const& g) {
  if (g.is_trivial()) return {};
  std::vector<Subgroup> closures;
  // A minimal normal subgroup is the normal closure of any of its elements of
  // prime order, so prime-order class representatives suffice.
  for (auto const& x : conjugacy_class_representatives(g)) {
    if (x.is_identity() || !is_prime(x.order())) continue;
    auto c = normal_closure(g, Subgroup::generated(g, {x}));
    if (std::none_of(closures.begin(), closures.end(), [&](Subgroup const& y) { return y == c; })) {
      closures.push_back(std::move(c));
    }
  }
  std::vector<Subgroup> minimal;
  for (auto const& c : closures) {
    bool const has_smaller = std::any_of(closures.begin(), closures.end(), [&](Subgroup const& d) {
      return d.order() < c.order() && c.contains(d);
    });
    if (!has_smaller) minimal.push_back(c);
  }
  std::vector<std::pair<std::vector<Permutation>, std::size_t>> keyed;
  for (std::size_t i = 0; i < minimal.size(); ++i) keyed.emplace_back(canonical_generators(minimal[i]), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Subgroup> out;
  for (auto const& [key, i] : keyed) out.push_back(minimal[i]);
  return out;
}

Subgroup chief_factor_centralizer(PermGroup const& g, Subgroup const& h, Subgroup const& k) {
  if (!h.contains(k)) throw InvalidArgument("chief_factor_centralizer: K is not contained in H");
  if (!is_normal(g, h) || !is_normal(g, k)) throw NotNormal("chief_factor_centralizer: H and K must be normal");
  auto const& gens = h.generators();
  return filter_subgroup(g, Subgroup(g, k.group()), [&](Permutation const& x) {
    return std::all_of(gens.begin(), gens.end(), [&](Permutation const& y) { return k.contains(commutator(x, y)); });
  });
}

ChiefSeries chief_series(PermGroup const& g, ChiefSeriesOptions const& options) {
  ChiefSeries series;
  series.terms.push_back(Subgroup::trivial(g));
  std::mt19937_64 rng(options.seed.value_or(0));
  while (series.terms.back().order() < g.order()) {
    auto const q = quotient(g, series.terms.back());
    auto const candidates = minimal_normal_subgroups(q.group());
    std::size_t pick = 0;
    if (options.seed) pick = std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng);
    series.terms.push_back(q.preimage(candidates[pick]));
  }
  for (std::size_t i = 1; i < series.terms.size(); ++i) {
    auto const& below = series.terms[i - 1];
    auto const& above = series.terms[i];
    auto cent = chief_factor_centralizer(g, above, below);
    BigInt const induced = g.order() / cent.order();
    series.factors.push_back(ChiefFactorData{below, above, above.order() / below.order(), std::move(cent), induced});
  }
  return series;
}

}  // namespace sigma
