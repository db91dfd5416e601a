#include "sigma/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "sigma/config.hpp"
#include "sigma/errors.hpp"

namespace sigma {

bool is_pi_number(BigInt const& n, PrimeFilter const& pi) {
  for (auto const& [p, e] : factorize(n)) {
    if (!pi(p)) return false;
  }
  return true;
}

BigInt pi_part(BigInt const& n, PrimeFilter const& pi) {
  BigInt part = 1;
  for (auto const& [p, e] : factorize(n)) {
    if (!pi(p)) continue;
    for (unsigned i = 0; i < e; ++i) part *= p;
  }
  return part;
}

// ---------------------------------------------------------------------------
// Subgroup
// ---------------------------------------------------------------------------

Subgroup::Subgroup(PermGroup ambient, PermGroup group) : ambient_(std::move(ambient)), group_(std::move(group)) {
  if (group_.degree() != ambient_.degree()) throw InvalidArgument("subgroup degree differs from ambient degree");
  if (!ambient_.shares_state_with(group_) && !ambient_.contains(group_)) {
    throw InvalidArgument("subgroup generators do not lie in the ambient group");
  }
}

Subgroup Subgroup::whole(PermGroup const& ambient) { return Subgroup(ambient, ambient); }

Subgroup Subgroup::trivial(PermGroup const& ambient) {
  return Subgroup(ambient, PermGroup::trivial(ambient.degree()));
}

Subgroup Subgroup::generated(PermGroup const& ambient, std::vector<Permutation> gens) {
  return Subgroup(ambient, PermGroup(ambient.degree(), std::move(gens)));
}

bool same_ambient(Subgroup const& a, Subgroup const& b) { return a.ambient() == b.ambient(); }

namespace {

void require_same_ambient(Subgroup const& a, Subgroup const& b, char const* op) {
  if (!same_ambient(a, b)) throw AmbientMismatch(std::string(op) + ": subgroups of different ambient groups");
}

void require_inside(PermGroup const& g, Subgroup const& h, char const* op) {
  if (h.group().degree() != g.degree() || !g.contains(h.group())) {
    throw InvalidArgument(std::string(op) + ": subgroup is not contained in the group");
  }
}

Subgroup make_sub(PermGroup const& ambient, GroupBuilder const& b) { return Subgroup(ambient, b.build()); }

// Sifts the base images fixed by `partial` through levels 0..upto of `chain`,
// whose base must begin with the base of the group being searched.
bool sifts_prefix(StabChain const& chain, Permutation g, std::size_t upto) {
  auto const& levels = chain.levels();
  for (std::size_t i = 0; i <= upto && i < levels.size(); ++i) {
    auto const k = levels[i].slot[g.table()[levels[i].base]];
    if (k < 0) return false;
    if (k > 0) g *= levels[i].inverse_transversal[static_cast<std::size_t>(k)];
  }
  return true;
}

}  // namespace

Subgroup conjugate(Subgroup const& h, Permutation const& g) {
  std::vector<Permutation> gens;
  gens.reserve(h.generators().size());
  for (auto const& x : h.generators()) gens.push_back(x ^ g);
  return Subgroup(h.ambient(), PermGroup(h.ambient().degree(), std::move(gens)));
}

void for_each_element(PermGroup const& g, std::function<bool(Permutation const&)> const& fn) {
  if (g.order() <= limits().iteration_cap) {
    for (auto const& x : g.elements(limits().iteration_cap)) {
      if (!fn(x)) return;
    }
    return;
  }
  g.backtrack(nullptr, fn, limits().search_budget);
}

Subgroup filter_subgroup(PermGroup const& g, Subgroup const& start,
                         std::function<bool(Permutation const&)> const& pred,
                         std::function<bool(std::size_t, Permutation const&)> const& prune) {
  GroupBuilder result(start.group());
  auto visit = [&](Permutation const& x) {
    if (result.order() == g.order()) return false;
    if (!result.contains(x) && pred(x)) result.add(x);
    return true;
  };
  if (g.order() <= limits().iteration_cap) {
    for (auto const& x : g.elements(limits().iteration_cap)) {
      if (!visit(x)) break;
    }
  } else {
    g.backtrack(prune, visit, limits().search_budget);
  }
  return make_sub(g, result);
}

std::vector<Permutation> conjugacy_class_representatives(PermGroup const& g) {
  auto const& elems = g.elements(limits().iteration_cap);
  std::vector<Permutation> sorted(elems.begin(), elems.end());
  std::sort(sorted.begin(), sorted.end());
  std::unordered_set<Permutation> seen;
  std::vector<Permutation> reps;
  for (auto const& x : sorted) {
    if (seen.contains(x)) continue;
    reps.push_back(x);
    std::deque<Permutation> queue{x};
    seen.insert(x);
    while (!queue.empty()) {
      auto y = std::move(queue.front());
      queue.pop_front();
      for (auto const& s : g.generators()) {
        auto z = y ^ s;
        if (seen.insert(z).second) queue.push_back(std::move(z));
      }
    }
  }
  return reps;
}

Subgroup join(Subgroup const& a, Subgroup const& b) {
  require_same_ambient(a, b, "join");
  if (a.contains(b)) return a;
  if (b.contains(a)) return b;
  GroupBuilder builder(a.group());
  for (auto const& x : b.generators()) builder.add(x);
  return make_sub(a.ambient(), builder);
}

Subgroup intersection(Subgroup const& a, Subgroup const& b) {
  require_same_ambient(a, b, "intersection");
  if (a.is_trivial() || b.is_trivial()) return Subgroup::trivial(a.ambient());
  if (b.contains(a)) return a;
  if (a.contains(b)) return b;
  if (gcd(a.order(), b.order()) == 1) return Subgroup::trivial(a.ambient());

  Subgroup const& small = a.order() <= b.order() ? a : b;
  Subgroup const& other = a.order() <= b.order() ? b : a;
  GroupBuilder result(a.ambient().degree());
  if (small.order() <= limits().iteration_cap) {
    for (auto const& x : small.group().elements(limits().iteration_cap)) {
      if (other.contains(x)) result.add(x);
    }
    return make_sub(a.ambient(), result);
  }
  // Backtrack over the smaller group, pruning with a chain of the other one
  // whose base starts with the same points.
  auto const base = small.group().base();
  PermGroup const aligned = other.group().with_base(base);
  small.group().backtrack(
      [&](std::size_t level, Permutation const& partial) { return sifts_prefix(aligned.chain(), partial, level); },
      [&](Permutation const& x) {
        if (!result.contains(x) && aligned.contains(x)) result.add(x);
        return true;
      },
      limits().search_budget);
  return make_sub(a.ambient(), result);
}

bool permutes(Subgroup const& a, Subgroup const& b) {
  require_same_ambient(a, b, "permutes");
  if (a.contains(b) || b.contains(a)) return true;
  BigInt const meet = gcd(a.order(), b.order()) == 1 ? BigInt(1) : intersection(a, b).order();
  return join(a, b).order() * meet == a.order() * b.order();
}

Subgroup normal_closure(PermGroup const& g, Subgroup const& h) {
  require_inside(g, h, "normal_closure");
  GroupBuilder builder(g.degree());
  std::vector<Permutation> queue;
  for (auto const& x : h.generators()) {
    if (builder.add(x)) queue.push_back(x);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    if (builder.order() == g.order()) break;
    for (auto const& s : g.generators()) {
      auto c = queue[i] ^ s;
      if (builder.add(c)) queue.push_back(std::move(c));
    }
  }
  return make_sub(g, builder);
}

bool is_normal(PermGroup const& g, Subgroup const& h) {
  for (auto const& s : g.generators()) {
    for (auto const& x : h.generators()) {
      if (!h.contains(x ^ s)) return false;
    }
  }
  return true;
}

Subgroup normalizer(PermGroup const& g, Subgroup const& h) {
  require_inside(g, h, "normalizer");
  if (h.is_trivial() || is_normal(g, h)) return Subgroup::whole(g);
  Subgroup const start(g, h.group());
  return filter_subgroup(g, start, [&](Permutation const& x) {
    return std::all_of(h.generators().begin(), h.generators().end(),
                       [&](Permutation const& y) { return h.contains(y ^ x); });
  });
}

Subgroup centralizer(PermGroup const& g, Subgroup const& h) {
  require_inside(g, h, "centralizer");
  if (h.is_trivial()) return Subgroup::whole(g);
  auto const& gens = h.generators();
  auto commutes = [&](Permutation const& x) {
    return std::all_of(gens.begin(), gens.end(), [&](Permutation const& y) { return y * x == x * y; });
  };
  // x centralises y iff (b^y)^x = (b^x)^y; base points whose y-image is also
  // a base point give a test on partial products.
  auto const base = g.base();
  std::vector<std::int64_t> base_slot(g.degree(), -1);
  for (std::size_t i = 0; i < base.size(); ++i) base_slot[base[i] - 1] = static_cast<std::int64_t>(i);
  auto prune = [&](std::size_t level, Permutation const& partial) {
    auto const img = partial.table();
    for (auto const& y : gens) {
      auto const yt = y.table();
      for (std::size_t l = 0; l <= level; ++l) {
        auto const b = base[l] - 1;
        auto const m = base_slot[yt[b]];
        if (m < 0 || static_cast<std::size_t>(m) > level) continue;
        if (img[yt[b]] != yt[img[b]]) return false;
      }
    }
    return true;
  };
  return filter_subgroup(g, Subgroup::trivial(g), commutes, prune);
}

Subgroup commutator_subgroup(Subgroup const& a, Subgroup const& b) {
  require_same_ambient(a, b, "commutator_subgroup");
  GroupBuilder builder(a.ambient().degree());
  std::vector<Permutation> queue;
  for (auto const& x : a.generators()) {
    for (auto const& y : b.generators()) {
      auto c = commutator(x, y);
      if (builder.add(c)) queue.push_back(std::move(c));
    }
  }
  std::vector<Permutation> conj = a.generators();
  conj.insert(conj.end(), b.generators().begin(), b.generators().end());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const& s : conj) {
      auto c = queue[i] ^ s;
      if (builder.add(c)) queue.push_back(std::move(c));
    }
  }
  return make_sub(a.ambient(), builder);
}

Subgroup pi_core(PermGroup const& g, PrimeFilter const& pi) {
  if (is_pi_number(g.order(), pi)) return Subgroup::whole(g);
  GroupBuilder core(g.degree());
  for (auto const& x : conjugacy_class_representatives(g)) {
    if (x.is_identity() || core.contains(x) || !is_pi_number(x.order(), pi)) continue;
    auto const closure = normal_closure(g, Subgroup::generated(g, {x}));
    if (!is_pi_number(closure.order(), pi)) continue;
    for (auto const& y : closure.generators()) core.add(y);
  }
  return make_sub(g, core);
}

Subgroup pi_residual(PermGroup const& g, PrimeFilter const& pi) {
  if (is_pi_number(g.order(), pi)) return Subgroup::trivial(g);
  GroupBuilder gens(g.degree());
  auto take = [&](Permutation const& x) {
    auto const m = pi_part(x.order(), pi);
    auto const y = x.pow(static_cast<std::int64_t>(m));
    if (!y.is_identity()) gens.add(y);
    return true;
  };
  if (g.order() <= limits().iteration_cap) {
    for (auto const& x : conjugacy_class_representatives(g)) take(x);
  } else {
    for_each_element(g, take);
  }
  return normal_closure(g, Subgroup(g, gens.build()));
}

bool is_soluble(PermGroup const& g) {
  Subgroup d = Subgroup::whole(g);
  while (!d.is_trivial()) {
    Subgroup next = commutator_subgroup(d, d);
    if (next.order() == d.order()) return false;
    d = std::move(next);
  }
  return true;
}

Subgroup sylow_subgroup(PermGroup const& g, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument("sylow_subgroup: " + std::to_string(p) + " is not prime");
  BigInt const target = pi_part(g.order(), [p](std::uint64_t q) { return q == p; });
  GroupBuilder sylow(g.degree());
  while (sylow.order() < target) {
    Subgroup const current(g, sylow.build());
    Subgroup const norm = normalizer(g, current);
    // |N(P) : P| is divisible by p while P is not Sylow; pick an element whose
    // coset has order divisible by p and take the power of order p mod P.
    bool grown = false;
    for_each_element(norm.group(), [&](Permutation const& x) {
      if (sylow.contains(x)) return true;
      Permutation y = x;
      std::int64_t k = 1;
      while (!sylow.contains(y)) {
        y *= x;
        ++k;
      }
      if (k % static_cast<std::int64_t>(p) != 0) return true;
      sylow.add(x.pow(k / static_cast<std::int64_t>(p)));
      grown = true;
      return false;
    });
    if (!grown) throw Error("sylow_subgroup: no p-element found in the normalizer");
  }
  return make_sub(g, sylow);
}

std::size_t subgroup_hash(Subgroup const& h) {
  if (h.order() > limits().iteration_cap) return std::hash<std::string>{}(to_string(h.order()));
  std::size_t acc = 0;
  for (auto const& x : h.group().elements(limits().iteration_cap)) {
    std::size_t v = x.hash();
    v ^= v >> 33;
    v *= 0xff51afd7ed558ccdULL;
    v ^= v >> 33;
    acc += v;
  }
  return acc;
}

std::vector<Subgroup> conjugates(PermGroup const& g, Subgroup const& h) {
  require_inside(g, h, "conjugates");
  std::vector<Subgroup> out{Subgroup(g, h.group())};
  if (is_normal(g, h)) return out;
  std::unordered_multimap<std::size_t, std::size_t> index;
  index.emplace(subgroup_hash(out[0]), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto const& s : g.generators()) {
      Subgroup c = conjugate(out[i], s);
      auto const key = subgroup_hash(c);
      auto [lo, hi] = index.equal_range(key);
      bool known = false;
      for (auto it = lo; it != hi && !known; ++it) known = out[it->second] == c;
      if (known) continue;
      index.emplace(key, out.size());
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Permutation> canonical_generators(Subgroup const& h) {
  auto const& elems = h.group().elements(limits().iteration_cap);
  std::vector<Permutation> sorted(elems.begin(), elems.end());
  std::sort(sorted.begin(), sorted.end());
  GroupBuilder builder(h.group().degree());
  for (auto const& x : sorted) {
    if (builder.order() == h.order()) break;
    builder.add(x);
  }
  return builder.generators();
}

}  // namespace sigma
