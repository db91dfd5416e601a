#include "sigma/sigma_theory.hpp"

#include <algorithm>
#include <functional>

#include "sigma/config.hpp"
#include "sigma/errors.hpp"

namespace sigma {

namespace {

std::uint64_t class_seed(std::uint64_t seed, ClassId id) { return seed + 0x9e3779b97f4a7c15ULL * (id + 1); }

Json class_list(ClassSet const& ids, SigmaPartition const& sigma) {
  Json out = Json::array();
  for (auto id : ids) out.push_back(sigma.label(id));
  return out;
}

ClassSet set_minus(ClassSet const& a, ClassSet const& b) {
  ClassSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

// Depth-first search for pairwise permutable choices, one per list.
std::optional<std::vector<std::size_t>> permutable_choice(std::vector<std::vector<Subgroup>> const& lists) {
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t)> go = [&](std::size_t level) {
    if (level == lists.size()) return true;
    for (std::size_t c = 0; c < lists[level].size(); ++c) {
      auto const& cand = lists[level][c];
      bool ok = true;
      for (std::size_t l = 0; l < level && ok; ++l) ok = permutes(lists[l][pick[l]], cand);
      if (!ok) continue;
      pick.push_back(c);
      if (go(level + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (go(0)) return pick;
  return std::nullopt;
}

}  // namespace

bool is_sigma_basis(HallSet const& set) {
  for (auto a = set.members.begin(); a != set.members.end(); ++a) {
    for (auto b = std::next(a); b != set.members.end(); ++b) {
      if (!permutes(a->second, b->second)) return false;
    }
  }
  return true;
}

bool is_sigma_semipermutable(PermGroup const& g, Subgroup const& h, HallSet const& set) {
  bool inside = std::any_of(set.members.begin(), set.members.end(),
                            [&](auto const& m) { return m.second.contains(h); });
  if (!inside) throw InvalidArgument("subgroup is not contained in any member of the Hall set");
  if (h.is_trivial()) return true;
  for (auto const& [id, v] : set.members) {
    if (boost::multiprecision::gcd(h.order(), v.order()) != 1) continue;
    for (auto const& w : conjugates(g, v)) {
      if (!permutes(h, w)) return false;
    }
  }
  return true;
}

ClassSet factor_sigma(ChiefFactorData const& f, SigmaPartition const& sigma) {
  return sigma_of(f.factor_order, sigma);
}

ClassSet induced_sigma(ChiefFactorData const& f, SigmaPartition const& sigma) {
  return sigma_of(f.induced_order, sigma);
}

SigmaAnalysis::SigmaAnalysis(PermGroup g, SigmaPartition sigma, HallOptions options,
                             std::shared_ptr<ChiefSeries const> series)
    : group_(std::move(g)),
      sigma_(std::move(sigma)),
      options_(std::move(options)),
      classes_(sigma_of(group_.order(), sigma_)),
      series_(std::move(series)) {}

ChiefSeries const& SigmaAnalysis::chief_series() { return *shared_chief_series(); }

std::shared_ptr<ChiefSeries const> SigmaAnalysis::shared_chief_series() {
  if (!series_) series_ = std::make_shared<ChiefSeries const>(sigma::chief_series(group_));
  return series_;
}

bool SigmaAnalysis::exhaustive() const {
  auto const& lim = limits();
  return group_.order() <= std::min(lim.enumeration_cap, lim.iteration_cap);
}

HallSearch const& SigmaAnalysis::hall(ClassId id) {
  auto it = hall_.find(id);
  if (it != hall_.end()) return it->second;
  HallOptions per_class = options_;
  per_class.seed = class_seed(options_.seed, id);
  auto found = find_hall_subgroup(group_, sigma_.filter({id}), per_class);
  return hall_.emplace(id, std::move(found)).first->second;
}

std::vector<std::vector<Subgroup>> const& SigmaAnalysis::hall_classes(ClassId id) {
  auto it = hall_classes_.find(id);
  if (it != hall_classes_.end()) return it->second;
  return hall_classes_.emplace(id, hall_subgroup_classes(group_, sigma_.filter({id}))).first->second;
}

std::optional<HallSet> SigmaAnalysis::complete_set() {
  HallSet set;
  for (auto id : classes_) {
    auto const& h = hall(id);
    if (h.status != SearchStatus::Found) return std::nullopt;
    set.members.emplace(id, *h.subgroup);
  }
  return set;
}

Json SigmaAnalysis::describe(Subgroup const& h) const {
  Json gens = Json::array();
  for (auto const& p : h.generators()) gens.push_back(p.to_string());
  return Json{{"order", to_string(h.order())}, {"generators", gens}};
}

Json SigmaAnalysis::describe(HallSet const& set) const {
  Json out = Json::object();
  for (auto const& [id, h] : set.members) out[sigma_.label(id)] = describe(h);
  return out;
}

Truth SigmaAnalysis::sigma_full() {
  if (full_) return *full_;
  Truth result = Truth::True;
  for (auto id : classes_) {
    auto const& h = hall(id);
    if (h.status == SearchStatus::Absent) {
      witness_["sigma_full"] = Json{{"missing_hall", sigma_.label(id)}, {"certified_by", h.strategy}};
      result = Truth::False;
      break;
    }
    if (h.status == SearchStatus::Inconclusive) result = Truth::Inconclusive;
  }
  if (result == Truth::True) witness_["sigma_full"] = Json{{"complete_hall_set", describe(*complete_set())}};
  full_ = result;
  return result;
}

bool SigmaAnalysis::sigma_soluble() {
  if (soluble_) return *soluble_;
  auto const& series = chief_series();
  soluble_ = true;
  for (std::size_t f = 0; f < series.factors.size(); ++f) {
    auto s = factor_sigma(series.factors[f], sigma_);
    if (s.size() > 1) {
      witness_["sigma_soluble"] = Json{{"factor", f},
                                       {"factor_order", to_string(series.factors[f].factor_order)},
                                       {"sigma", class_list(s, sigma_)}};
      soluble_ = false;
      break;
    }
  }
  return *soluble_;
}

Truth SigmaAnalysis::generalized_sigma_soluble() {
  if (generalized_) return *generalized_;
  auto const& series = chief_series();
  for (std::size_t f = 0; f < series.factors.size(); ++f) {
    auto s = factor_sigma(series.factors[f], sigma_);
    if (s.size() > 2) {
      witness_["generalized_sigma_soluble"] = Json{{"factor", f},
                                                   {"factor_order", to_string(series.factors[f].factor_order)},
                                                   {"sigma", class_list(s, sigma_)}};
      return *(generalized_ = Truth::False);
    }
  }
  auto full = sigma_full();
  if (full == Truth::False) witness_["generalized_sigma_soluble"] = Json{{"reason", "not sigma-full"}};
  return *(generalized_ = full);
}

std::optional<HallSet> SigmaAnalysis::basis_from_hints() {
  if (options_.hints.empty()) return std::nullopt;
  std::vector<ClassId> ids(classes_.begin(), classes_.end());
  std::vector<std::vector<Subgroup>> lists;
  for (auto id : ids) {
    auto pi = sigma_.filter({id});
    std::vector<Subgroup> cands;
    for (auto const& gens : options_.hints) {
      bool inside = std::all_of(gens.begin(), gens.end(), [&](auto const& p) {
        return p.degree() == group_.degree() && group_.contains(p);
      });
      if (!inside) continue;
      auto h = Subgroup::generated(group_, gens);
      if (is_hall(group_, h, pi)) cands.push_back(std::move(h));
    }
    if (cands.empty()) return std::nullopt;
    lists.push_back(std::move(cands));
  }
  auto pick = permutable_choice(lists);
  if (!pick) return std::nullopt;
  HallSet set;
  for (std::size_t l = 0; l < ids.size(); ++l) set.members.emplace(ids[l], lists[l][(*pick)[l]]);
  return set;
}

Truth SigmaAnalysis::sigma_basis_exists() {
  if (basis_) return *basis_;
  auto record = [&](HallSet const& set, char const* how) {
    witness_["sigma_basis"] = Json{{"basis", describe(set)}, {"found_by", how}};
    basis_set_ = set;
    return *(basis_ = Truth::True);
  };
  if (auto set = basis_from_hints()) return record(*set, "hints");
  auto full = sigma_full();
  if (full == Truth::False) {
    witness_["sigma_basis"] = Json{{"reason", "not sigma-full"}};
    return *(basis_ = Truth::False);
  }
  if (full == Truth::True && classes_.size() <= 1) return record(*complete_set(), "single class");
  std::vector<ClassId> ids(classes_.begin(), classes_.end());
  std::vector<std::vector<Subgroup>> lists;
  if (exhaustive()) {
    for (std::size_t l = 0; l < ids.size(); ++l) {
      std::vector<Subgroup> cands;
      for (auto const& cls : hall_classes(ids[l])) {
        if (l == 0) {
          cands.push_back(cls.front());
        } else {
          cands.insert(cands.end(), cls.begin(), cls.end());
        }
      }
      lists.push_back(std::move(cands));
    }
  } else {
    if (full != Truth::True) return *(basis_ = Truth::Inconclusive);
    auto set = complete_set();
    for (std::size_t l = 0; l < ids.size(); ++l) {
      auto const& h = set->members.at(ids[l]);
      lists.push_back(l == 0 ? std::vector<Subgroup>{h} : conjugates(group_, h));
    }
  }
  if (auto pick = permutable_choice(lists)) {
    HallSet set;
    for (std::size_t l = 0; l < ids.size(); ++l) set.members.emplace(ids[l], lists[l][(*pick)[l]]);
    return record(set, exhaustive() ? "enumeration" : "conjugate search");
  }
  if (exhaustive()) {
    witness_["sigma_basis"] = Json{{"reason", "no complete Hall set is pairwise permutable"}};
    return *(basis_ = Truth::False);
  }
  return *(basis_ = Truth::Inconclusive);
}

Truth SigmaAnalysis::in_class_X() {
  if (x_) return *x_;
  auto const& series = chief_series();
  for (std::size_t f = 0; f < series.factors.size(); ++f) {
    auto const& fd = series.factors[f];
    auto h = factor_sigma(fd, sigma_);
    auto s = induced_sigma(fd, sigma_);
    bool ok = s.size() <= 2 && (s.size() < 2 || std::includes(s.begin(), s.end(), h.begin(), h.end()));
    if (!ok) {
      witness_["in_class_X"] = Json{{"factor", f},
                                    {"factor_order", to_string(fd.factor_order)},
                                    {"factor_sigma", class_list(h, sigma_)},
                                    {"induced_order", to_string(fd.induced_order)},
                                    {"induced_sigma", class_list(s, sigma_)}};
      return *(x_ = Truth::False);
    }
  }
  auto gen = generalized_sigma_soluble();
  if (gen == Truth::False) witness_["in_class_X"] = Json{{"reason", "not generalized sigma-soluble"}};
  return *(x_ = gen);
}

Truth SigmaAnalysis::x_abstract_variant() {
  if (x_abstract_) return *x_abstract_;
  auto const& series = chief_series();
  for (std::size_t f = 0; f < series.factors.size(); ++f) {
    auto const& fd = series.factors[f];
    auto h = factor_sigma(fd, sigma_);
    auto s = induced_sigma(fd, sigma_);
    bool ok = h == s || (h.size() == 1 && set_minus(s, h).size() <= 1);
    if (!ok) {
      witness_["x_abstract_variant"] = Json{{"factor", f},
                                            {"factor_sigma", class_list(h, sigma_)},
                                            {"induced_sigma", class_list(s, sigma_)}};
      return *(x_abstract_ = Truth::False);
    }
  }
  return *(x_abstract_ = generalized_sigma_soluble());
}

bool SigmaAnalysis::universal_basis_condition() {
  auto const& series = chief_series();
  for (std::size_t f = 0; f < series.factors.size(); ++f) {
    auto const& fd = series.factors[f];
    auto h = factor_sigma(fd, sigma_);
    auto s = induced_sigma(fd, sigma_);
    if (set_minus(s, h).size() > 1) {
      witness_["universal_basis_condition"] = Json{{"factor", f},
                                                   {"factor_sigma", class_list(h, sigma_)},
                                                   {"induced_sigma", class_list(s, sigma_)}};
      return false;
    }
  }
  return true;
}

Truth SigmaAnalysis::in_class_H() {
  if (h_) return *h_;
  auto full = sigma_full();
  if (full == Truth::False) {
    witness_["in_class_H"] = Json{{"reason", "not sigma-full"}};
    return *(h_ = Truth::False);
  }
  if (classes_.size() <= 1) return *(h_ = full);
  auto fail = [&](Subgroup const& a, Subgroup const& b, ClassId i, ClassId j) {
    witness_["in_class_H"] = Json{{"non_permutable", Json{{sigma_.label(i), describe(a)}, {sigma_.label(j), describe(b)}}}};
    return *(h_ = Truth::False);
  };
  std::vector<ClassId> ids(classes_.begin(), classes_.end());
  if (exhaustive()) {
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        for (auto const& cls : hall_classes(ids[a])) {
          for (auto const& other : hall_classes(ids[b])) {
            for (auto const& y : other) {
              if (!permutes(cls.front(), y)) return fail(cls.front(), y, ids[a], ids[b]);
            }
          }
        }
      }
    }
    return *(h_ = Truth::True);
  }
  // Above the cap only a counterexample among conjugates of the found set is decisive.
  if (full == Truth::True) {
    auto set = complete_set();
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        auto const& x = set->members.at(ids[a]);
        for (auto const& y : conjugates(group_, set->members.at(ids[b]))) {
          if (!permutes(x, y)) return fail(x, y, ids[a], ids[b]);
        }
      }
    }
  }
  return *(h_ = Truth::Inconclusive);
}

Truth is_sigma_full(PermGroup const& g, SigmaPartition const& sigma, HallOptions const& options) {
  return SigmaAnalysis(g, sigma, options).sigma_full();
}

bool is_sigma_soluble(PermGroup const& g, SigmaPartition const& sigma) {
  return SigmaAnalysis(g, sigma).sigma_soluble();
}

Truth is_generalized_sigma_soluble(PermGroup const& g, SigmaPartition const& sigma, HallOptions const& options) {
  return SigmaAnalysis(g, sigma, options).generalized_sigma_soluble();
}

Truth in_class_X_sigma(PermGroup const& g, SigmaPartition const& sigma, HallOptions const& options) {
  return SigmaAnalysis(g, sigma, options).in_class_X();
}

Truth in_class_H_sigma(PermGroup const& g, SigmaPartition const& sigma, HallOptions const& options) {
  return SigmaAnalysis(g, sigma, options).in_class_H();
}

}  // namespace sigma
