#include "sigma/hall.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "sigma/config.hpp"
#include "sigma/errors.hpp"

namespace sigma {

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(Bits const& b) const noexcept {
    std::size_t h = 0;
    for (auto w : b) h = h * 0x9e3779b97f4a7c15ULL + (w ^ (w >> 29));
    return h;
  }
};

// Elements of a small group indexed once, with subgroups as bit sets.
class ElementTable {
 public:
  explicit ElementTable(PermGroup const& g) : group_(g), elems_(g.elements(limits().iteration_cap)) {
    index_.reserve(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], static_cast<std::uint32_t>(i));
    identity_ = index_.at(g.identity());
  }

  std::size_t size() const { return elems_.size(); }
  std::size_t words() const { return (elems_.size() + 63) / 64; }
  Permutation const& at(std::uint32_t i) const { return elems_[i]; }
  std::uint32_t index_of(Permutation const& x) const { return index_.at(x); }
  std::uint32_t identity() const { return identity_; }

  std::vector<std::uint32_t> const& right_mult(std::uint32_t s) {
    auto it = right_.find(s);
    if (it != right_.end()) return it->second;
    std::vector<std::uint32_t> map(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) map[i] = index_.at(elems_[i] * elems_[s]);
    return right_.emplace(s, std::move(map)).first->second;
  }

  std::vector<std::uint32_t> conjugation(Permutation const& s) const {
    std::vector<std::uint32_t> map(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) map[i] = index_.at(elems_[i] ^ s);
    return map;
  }

  PermGroup const& group() const { return group_; }

 private:
  PermGroup group_;
  std::vector<Permutation> const& elems_;
  std::unordered_map<Permutation, std::uint32_t> index_;
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> right_;
  std::uint32_t identity_ = 0;
};

bool test(Bits const& b, std::uint32_t i) { return (b[i >> 6] >> (i & 63)) & 1; }
void set(Bits& b, std::uint32_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

struct SetSubgroup {
  Bits bits;
  std::vector<std::uint32_t> gens;
  std::size_t order = 0;
};

SetSubgroup trivial_set(ElementTable& t) {
  SetSubgroup s{Bits(t.words(), 0), {}, 1};
  set(s.bits, t.identity());
  return s;
}

// <U, x> by breadth-first closure under right multiplication.
SetSubgroup extend(ElementTable& t, SetSubgroup const& u, std::uint32_t x) {
  SetSubgroup r{u.bits, u.gens, u.order};
  r.gens.push_back(x);
  std::vector<std::uint32_t> queue;
  queue.reserve(t.size());
  for (std::size_t w = 0; w < r.bits.size(); ++w) {
    for (std::uint64_t word = r.bits[w]; word; word &= word - 1) {
      queue.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(word))));
    }
  }
  std::vector<std::vector<std::uint32_t> const*> maps;
  for (auto g : r.gens) maps.push_back(&t.right_mult(g));
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const* m : maps) {
      auto const y = (*m)[queue[i]];
      if (!test(r.bits, y)) {
        set(r.bits, y);
        queue.push_back(y);
      }
    }
  }
  r.order = queue.size();
  return r;
}

SetSubgroup from_subgroup(ElementTable& t, Subgroup const& h) {
  SetSubgroup s = trivial_set(t);
  for (auto const& g : h.generators()) {
    auto const i = t.index_of(g);
    if (!test(s.bits, i)) s = extend(t, s, i);
  }
  return s;
}

Subgroup to_subgroup(ElementTable& t, SetSubgroup const& s) {
  std::vector<Permutation> gens;
  for (auto i : s.gens) gens.push_back(t.at(i));
  return Subgroup::generated(t.group(), std::move(gens));
}

// One generator per cyclic subgroup, restricted to Pi-elements when given.
std::vector<std::uint32_t> cyclic_generators(ElementTable& t, PrimeFilter const& pi) {
  std::vector<bool> done(t.size(), false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    if (done[i] || i == t.identity()) continue;
    auto const& x = t.at(i);
    auto const o = x.order();
    if (pi && !is_pi_number(o, pi)) {
      done[i] = true;
      continue;
    }
    out.push_back(i);
    Permutation y = x;
    for (std::uint64_t k = 1; k < o; ++k, y *= x) {
      if (std::gcd(k, o) == 1) done[t.index_of(y)] = true;
    }
  }
  return out;
}

// All subgroups U >= start generated by adding cyclic subgroups from `cyclics`
// while `keep(|U|)` holds; `keep` must be inherited by subgroups.
std::vector<SetSubgroup> layered_search(ElementTable& t, SetSubgroup start, std::vector<std::uint32_t> const& cyclics,
                                        std::function<bool(std::size_t)> const& keep) {
  std::vector<SetSubgroup> found{std::move(start)};
  std::unordered_set<Bits, BitsHash> seen{found[0].bits};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto x : cyclics) {
      if (test(found[i].bits, x)) continue;
      SetSubgroup next = extend(t, found[i], x);
      if (!keep(next.order) || !seen.insert(next.bits).second) continue;
      found.push_back(std::move(next));
    }
  }
  return found;
}

// Hall Pi-subgroups containing <O_Pi(G), P> for a Sylow subgroup P at a prime
// of Pi. Every Hall Pi-subgroup is conjugate to one of these.
std::vector<SetSubgroup> hall_sets_through_sylow(ElementTable& t, PrimeFilter const& pi, std::size_t m) {
  auto const& g = t.group();
  std::uint64_t best_prime = 0;
  BigInt best_part = 1;
  for (auto const& [p, e] : factorize(g.order())) {
    if (!pi(p)) continue;
    BigInt part = 1;
    for (unsigned k = 0; k < e; ++k) part *= p;
    if (part > best_part) {
      best_part = part;
      best_prime = p;
    }
  }
  Subgroup const start = join(pi_core(g, pi), sylow_subgroup(g, best_prime));
  auto const cyclics = cyclic_generators(t, pi);
  auto const all = layered_search(t, from_subgroup(t, start), cyclics, [m](std::size_t n) { return m % n == 0; });
  std::vector<SetSubgroup> halls;
  for (auto const& s : all) {
    if (s.order == m) halls.push_back(s);
  }
  return halls;
}

std::vector<Permutation> sorted_key(Subgroup const& h) { return canonical_generators(h); }

void certify(PermGroup const& g, Subgroup const& h, PrimeFilter const& pi) {
  if (!is_hall(g, h, pi)) throw Error("internal error: Hall search returned a subgroup that is not Hall");
}

}  // namespace

bool is_hall(PermGroup const& g, Subgroup const& h, PrimeFilter const& pi) {
  if (!g.contains(h.group())) return false;
  BigInt const index = g.order() / h.order();
  return is_pi_number(h.order(), pi) && is_pi_number(index, [&](std::uint64_t p) { return !pi(p); });
}

HallSearch find_hall_subgroup(PermGroup const& g, PrimeFilter const& pi, HallOptions const& options) {
  for (auto const& hint : options.hints) {
    bool inside = std::all_of(hint.begin(), hint.end(),
                              [&](Permutation const& x) { return x.degree() == g.degree() && g.contains(x); });
    if (!inside) continue;
    auto h = Subgroup::generated(g, hint);
    if (is_hall(g, h, pi)) return {SearchStatus::Found, std::move(h), "hint"};
  }
  BigInt const m = pi_part(g.order(), pi);
  if (m == 1) return {SearchStatus::Found, Subgroup::trivial(g), "trivial"};
  if (m == g.order()) return {SearchStatus::Found, Subgroup::whole(g), "trivial"};

  if (g.order() <= std::min(limits().enumeration_cap, limits().iteration_cap)) {
    ElementTable t(g);
    auto const halls = hall_sets_through_sylow(t, pi, static_cast<std::size_t>(m));
    if (halls.empty()) return {SearchStatus::Absent, std::nullopt, "enumeration"};
    std::optional<Subgroup> best;
    std::vector<Permutation> best_key;
    for (auto const& s : halls) {
      auto h = to_subgroup(t, s);
      auto key = sorted_key(h);
      if (!best || key < best_key) {
        best = std::move(h);
        best_key = std::move(key);
      }
    }
    certify(g, *best, pi);
    return {SearchStatus::Found, std::move(best), "enumeration"};
  }

  // Seeded random growth of Pi-subgroups from Pi-parts of random elements.
  std::mt19937_64 rng(options.seed ^ 0x5bd1e9955bd1e995ULL);
  auto const pi_prime = [&](std::uint64_t p) { return !pi(p); };
  for (std::uint64_t restart = 0; restart < limits().random_restarts; ++restart) {
    GroupBuilder current(g.degree());
    int failures = 0;
    while (failures < 48) {
      auto const x = g.random_element(rng);
      auto const y = x.pow(static_cast<std::int64_t>(pi_part(x.order(), pi_prime)));
      if (y.is_identity() || current.contains(y)) {
        ++failures;
        continue;
      }
      GroupBuilder next = current;
      next.add(y);
      if (m % next.order() != 0) {
        ++failures;
        continue;
      }
      current = std::move(next);
      failures = 0;
      if (current.order() == m) {
        Subgroup h(g, current.build());
        certify(g, h, pi);
        return {SearchStatus::Found, std::move(h), "random"};
      }
    }
  }
  return {SearchStatus::Inconclusive, std::nullopt, "random"};
}

std::optional<Subgroup> hall_subgroup(PermGroup const& g, SigmaPartition const& sigma, ClassSet const& classes,
                                      HallOptions const& options) {
  auto result = find_hall_subgroup(g, sigma.filter(classes), options);
  if (result.status == SearchStatus::Inconclusive) {
    throw Inconclusive("no Hall " + sigma.label(classes) + "-subgroup found and the search was not exhaustive");
  }
  return result.subgroup;
}

std::vector<std::vector<Subgroup>> hall_subgroup_classes(PermGroup const& g, PrimeFilter const& pi) {
  if (g.order() > std::min(limits().enumeration_cap, limits().iteration_cap)) {
    throw CapExceeded("Hall enumeration: group order " + to_string(g.order()) + " exceeds the enumeration cap");
  }
  BigInt const m = pi_part(g.order(), pi);
  if (m == 1) return {{Subgroup::trivial(g)}};
  if (m == g.order()) return {{Subgroup::whole(g)}};

  ElementTable t(g);
  auto const seeds = hall_sets_through_sylow(t, pi, static_cast<std::size_t>(m));
  std::vector<std::vector<std::uint32_t>> conj_maps;
  for (auto const& s : g.generators()) conj_maps.push_back(t.conjugation(s));

  std::unordered_set<Bits, BitsHash> seen;
  std::vector<std::vector<Subgroup>> classes;
  for (auto const& seed : seeds) {
    if (seen.contains(seed.bits)) continue;
    std::vector<SetSubgroup> orbit{seed};
    seen.insert(seed.bits);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (auto const& map : conj_maps) {
        SetSubgroup c{Bits(t.words(), 0), {}, orbit[i].order};
        for (std::size_t w = 0; w < orbit[i].bits.size(); ++w) {
          for (std::uint64_t word = orbit[i].bits[w]; word; word &= word - 1) {
            set(c.bits, map[w * 64 + static_cast<std::size_t>(__builtin_ctzll(word))]);
          }
        }
        if (!seen.insert(c.bits).second) continue;
        for (auto x : orbit[i].gens) c.gens.push_back(map[x]);
        orbit.push_back(std::move(c));
      }
    }
    std::vector<Subgroup> cls;
    for (auto const& s : orbit) cls.push_back(to_subgroup(t, s));
    classes.push_back(std::move(cls));
  }
  for (auto const& cls : classes) {
    for (auto const& h : cls) certify(g, h, pi);
  }
  return classes;
}

std::vector<Subgroup> enumerate_subgroups(PermGroup const& g, PrimeFilter const& pi) {
  if (g.order() > std::min(limits().enumeration_cap, limits().iteration_cap)) {
    throw CapExceeded("subgroup enumeration: group order " + to_string(g.order()) + " exceeds the enumeration cap");
  }
  ElementTable t(g);
  auto const cyclics = cyclic_generators(t, pi);
  auto keep = [&](std::size_t n) { return !pi || is_pi_number(n, pi); };
  std::vector<Subgroup> out;
  for (auto const& s : layered_search(t, trivial_set(t), cyclics, keep)) out.push_back(to_subgroup(t, s));
  return out;
}

std::vector<HallSet> complete_hall_sigma_sets(PermGroup const& g, SigmaPartition const& sigma, HallMode mode,
                                              HallOptions const& options) {
  auto const classes = sigma_of(g.order(), sigma);
  if (mode == HallMode::One) {
    HallSet set;
    for (auto id : classes) {
      HallOptions per_class = options;
      per_class.seed = options.seed + 0x9e3779b97f4a7c15ULL * (id + 1);
      auto h = hall_subgroup(g, sigma, {id}, per_class);
      if (!h) return {};
      set.members.emplace(id, std::move(*h));
    }
    return {set};
  }
  std::vector<std::pair<ClassId, std::vector<Subgroup>>> lists;
  for (auto id : classes) {
    std::vector<Subgroup> all;
    for (auto& cls : hall_subgroup_classes(g, sigma.filter({id}))) {
      for (auto& h : cls) all.push_back(std::move(h));
    }
    if (all.empty()) return {};
    lists.emplace_back(id, std::move(all));
  }
  std::vector<HallSet> out{HallSet{}};
  for (auto const& [id, hs] : lists) {
    std::vector<HallSet> next;
    for (auto const& partial : out) {
      for (auto const& h : hs) {
        HallSet s = partial;
        s.members.emplace(id, h);
        next.push_back(std::move(s));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace sigma
