#include "sigma/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "sigma/errors.hpp"

namespace sigma {

// ---------------------------------------------------------------------------
// StabChain
// ---------------------------------------------------------------------------

StabChain::StabChain(std::size_t degree, std::span<std::uint32_t const> base_prefix) : degree_(degree) {
  if (degree == 0) throw InvalidArgument("group degree must be at least 1");
  for (auto b : base_prefix) {
    if (b >= degree) throw InvalidArgument("base point out of range");
    append_level(b);
  }
}

void StabChain::append_level(std::uint32_t base) {
  ChainLevel level;
  level.base = base;
  level.orbit = {base};
  level.slot.assign(degree_, -1);
  level.slot[base] = 0;
  level.transversal = {Permutation::identity(degree_)};
  level.inverse_transversal = {Permutation::identity(degree_)};
  levels_.push_back(std::move(level));
}

void StabChain::extend_orbit(ChainLevel& level) {
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (auto const& s : level.generators) {
      auto const q = s.table()[level.orbit[k]];
      if (level.slot[q] >= 0) continue;
      level.slot[q] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(q);
      Permutation t = level.transversal[k] * s;
      level.inverse_transversal.push_back(t.inverse());
      level.transversal.push_back(std::move(t));
    }
  }
}

std::pair<Permutation, std::size_t> StabChain::strip(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    auto const& level = levels_[i];
    auto const k = level.slot[g.table()[level.base]];
    if (k < 0) return {std::move(g), i};
    if (k > 0) g *= level.inverse_transversal[static_cast<std::size_t>(k)];
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(Permutation const& g) const {
  if (g.degree() != degree_) throw InvalidArgument("degree mismatch in membership test");
  auto [h, j] = strip(g);
  return j == levels_.size() && h.is_identity();
}

bool StabChain::add_generator(Permutation const& g) {
  if (g.degree() != degree_) throw InvalidArgument("generator degree does not match group degree");
  auto [h, j] = strip(g);
  if (j == levels_.size() && h.is_identity()) return false;
  if (j == levels_.size()) append_level(h.first_moved() - 1);
  for (std::size_t l = 0; l <= j; ++l) {
    levels_[l].generators.push_back(h);
    extend_orbit(levels_[l]);
  }
  complete_from(j);
  return true;
}

void StabChain::complete_from(std::size_t start) {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);
  while (i >= 0) {
    auto const li = static_cast<std::size_t>(i);
    bool restarted = false;
    for (std::size_t a = 0; a < levels_[li].orbit.size() && !restarted; ++a) {
      std::size_t const first_gen = a < levels_[li].checked_points ? levels_[li].checked_gens : 0;
      for (std::size_t s = first_gen; s < levels_[li].generators.size(); ++s) {
        auto const& level = levels_[li];
        auto const image = level.generators[s].table()[level.orbit[a]];
        auto const k = static_cast<std::size_t>(level.slot[image]);
        Permutation schreier = level.transversal[a] * level.generators[s];
        schreier *= level.inverse_transversal[k];
        if (schreier.is_identity()) continue;
        auto [h, j] = strip(std::move(schreier), li + 1);
        if (j == levels_.size() && h.is_identity()) continue;
        if (j == levels_.size()) append_level(h.first_moved() - 1);
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels_[l].generators.push_back(h);
          extend_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) {
      levels_[li].checked_points = levels_[li].orbit.size();
      levels_[li].checked_gens = levels_[li].generators.size();
      --i;
    }
  }
}

BigInt StabChain::order() const {
  BigInt n = 1;
  for (auto const& level : levels_) n *= level.orbit.size();
  return n;
}

// ---------------------------------------------------------------------------
// PermGroup
// ---------------------------------------------------------------------------

struct PermGroup::Rep {
  Rep(std::size_t d, std::vector<Permutation> g, StabChain c)
      : degree(d), generators(std::move(g)), chain(std::move(c)), order(chain.order()) {}

  std::size_t degree;
  std::vector<Permutation> generators;
  StabChain chain;
  BigInt order;
  mutable std::once_flag elements_once;
  mutable std::vector<Permutation> elements;
};

PermGroup group_from_chain(std::size_t degree, std::vector<Permutation> gens, StabChain chain) {
  return PermGroup(std::make_shared<PermGroup::Rep>(degree, std::move(gens), std::move(chain)));
}

PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens) {
  return PermGroup(degree, std::move(gens));
}

PermGroup::PermGroup() : PermGroup(1, {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators) {
  StabChain chain(degree);
  for (auto const& g : generators) {
    if (g.degree() != degree) {
      throw InvalidArgument("generator of degree " + std::to_string(g.degree()) +
                            " in a group of degree " + std::to_string(degree));
    }
    chain.add_generator(g);
  }
  *this = group_from_chain(degree, std::move(generators), std::move(chain));
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

std::size_t PermGroup::degree() const noexcept { return rep_->degree; }

std::vector<Permutation> const& PermGroup::generators() const noexcept { return rep_->generators; }

BigInt const& PermGroup::order() const noexcept { return rep_->order; }

std::uint64_t PermGroup::order_u64() const { return to_u64(rep_->order); }

bool PermGroup::is_trivial() const noexcept { return rep_->order == 1; }

bool PermGroup::contains(Permutation const& p) const { return rep_->chain.contains(p); }

bool PermGroup::contains(PermGroup const& other) const {
  if (other.degree() != degree()) return false;
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](Permutation const& g) { return contains(g); });
}

bool operator==(PermGroup const& a, PermGroup const& b) {
  if (a.rep_ == b.rep_) return true;
  return a.degree() == b.degree() && a.order() == b.order() && a.contains(b);
}

StabChain const& PermGroup::chain() const noexcept { return rep_->chain; }

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (auto const& level : rep_->chain.levels()) b.push_back(level.base + 1);
  return b;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  // Level 0 holds every strong generator.
  auto const& levels = rep_->chain.levels();
  if (levels.empty()) return {};
  return levels.front().generators;
}

PermGroup PermGroup::with_base(std::span<Point const> prefix) const {
  std::vector<std::uint32_t> zero_based;
  for (auto p : prefix) {
    if (p < 1 || p > degree()) throw InvalidArgument("base point out of range");
    zero_based.push_back(p - 1);
  }
  StabChain chain(degree(), zero_based);
  for (auto const& g : generators()) chain.add_generator(g);
  return group_from_chain(degree(), generators(), std::move(chain));
}

void PermGroup::backtrack(std::function<bool(std::size_t, Permutation const&)> const& prune,
                          std::function<bool(Permutation const&)> const& visit, std::uint64_t budget) const {
  auto const& levels = rep_->chain.levels();
  std::uint64_t nodes = 0;
  std::function<bool(std::size_t, Permutation const&)> rec = [&](std::size_t i, Permutation const& partial) {
    if (i == levels.size()) return visit(partial);
    auto const& level = levels[i];
    std::vector<std::size_t> order(level.orbit.size());
    std::iota(order.begin(), order.end(), 0);
    auto const img = partial.table();
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return img[level.orbit[a]] < img[level.orbit[b]]; });
    for (auto k : order) {
      if (++nodes > budget) throw CapExceeded("backtrack search budget exhausted");
      Permutation next = level.transversal[k] * partial;
      if (prune && !prune(i, next)) continue;
      if (!rec(i + 1, next)) return false;
    }
    return true;
  };
  rec(0, identity());
}

std::vector<Permutation> const& PermGroup::elements(std::uint64_t cap) const {
  if (rep_->order > cap) {
    throw CapExceeded("group of order " + to_string(rep_->order) + " exceeds element cap " + std::to_string(cap));
  }
  std::call_once(rep_->elements_once, [this] {
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(rep_->order));
    backtrack(nullptr,
              [&](Permutation const& g) {
                out.push_back(g);
                return true;
              },
              UINT64_MAX);
    rep_->elements = std::move(out);
  });
  return rep_->elements;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation g = identity();
  auto const& levels = rep_->chain.levels();
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    std::uniform_int_distribution<std::size_t> pick(0, it->orbit.size() - 1);
    g *= it->transversal[pick(rng)];
  }
  return g;
}

// ---------------------------------------------------------------------------
// GroupBuilder
// ---------------------------------------------------------------------------

GroupBuilder::GroupBuilder(std::size_t degree) : degree_(degree), chain_(degree) {}

GroupBuilder::GroupBuilder(PermGroup const& start) : degree_(start.degree()), chain_(start.chain()) {
  for (auto const& g : start.generators()) {
    if (!g.is_identity()) gens_.push_back(g);
  }
}

bool GroupBuilder::add(Permutation const& g) {
  if (!chain_.add_generator(g)) return false;
  gens_.push_back(g);
  return true;
}

PermGroup GroupBuilder::build() const { return group_from_chain(degree_, gens_, chain_); }

}  // namespace sigma
