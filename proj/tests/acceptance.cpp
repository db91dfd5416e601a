// Acceptance checks: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>

#include "oracle.hpp"
#include "sigma/corpus.hpp"
#include "sigma/errors.hpp"

using namespace sigma;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Check {
  Outcome& out;
  void operator()(bool ok, std::string const& what) {
    if (!ok) {
      out.pass = false;
      out.detail += (out.detail.empty() ? "" : "; ") + ("failed: " + what);
    }
  }
};

SigmaPartition sp(char const* s) { return SigmaPartition::parse(s); }

oracle::Set elements_of(PermGroup const& g) {
  auto const& e = g.elements(1u << 20);
  return {e.begin(), e.end()};
}

int failures = 0;

void run(int id, std::string const& title, double limit_seconds, std::function<Outcome()> const& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (std::exception const& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
  if (d.count() > limit_seconds) {
    o.pass = false;
    o.detail += "; runtime over " + std::to_string(limit_seconds) + " s";
  }
  failures += !o.pass;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << title << "  [" << std::fixed
            << std::setprecision(1) << d.count() << " s]  " << o.detail << std::endl;
}

CorpusReport const& corpus400() {
  static CorpusReport report = [] {
    CorpusOptions o;
    o.partitions = {sp("~"), sp("{2,3}|*"), sp("{2,3}|{5}|*")};
    o.max_order = 400;
    o.theorems = all_theorems();
    o.seed = 20240601;
    return run_corpus(o);
  }();
  return report;
}

Outcome flagship() {
  Outcome o;
  Check check{o};
  auto entry = flagship_entry();
  auto g = build_group(entry.spec);
  auto sigma = sp("{2,3}|{5}|*");
  check(g.order() == 6600, "order 6600");
  HallSet set;
  std::vector<std::string> orders;
  for (auto const& [name, gens] : entry.hints) {
    auto h = Subgroup::generated(g, gens);
    auto ids = sigma_of(h.order(), sigma);
    orders.push_back(to_string(h.order()));
    check(ids.size() == 1 && is_hall(g, h, sigma.filter(ids)), name + " is a Hall subgroup");
    if (ids.size() == 1) set.members.emplace(*ids.begin(), h);
  }
  check(orders == std::vector<std::string>{"24", "25", "11"}, "orders 24, 25, 11");
  check(set.members.size() == 3 && sigma_of(g.order(), sigma).size() == 3, "complete Hall set");
  check(is_sigma_basis(set), "sigma-basis");
  HallOptions options;
  for (auto const& [name, gens] : entry.hints) options.hints.push_back(gens);
  SigmaAnalysis a(g, sigma, options);
  check(!a.sigma_soluble(), "not sigma-soluble");
  check(a.generalized_sigma_soluble() == Truth::True, "generalized sigma-soluble");
  check(a.in_class_X() == Truth::False, "not in class X");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("order 6600, triple 24/25/11 basis, soluble=false, "
                                                           "generalized=true, X=false");
  return o;
}

Outcome theorem_c() {
  Outcome o;
  Check check{o};
  std::size_t mismatches = 0, both_true = 0, both_false = 0, pairs = 0;
  for (auto const& rec : corpus400().records) {
    if (rec.order > 400) continue;
    for (auto const& t : rec.theorems) {
      if (t.id != TheoremId::TC) continue;
      ++pairs;
      if (!decisive(t.hypothesis) || !decisive(t.conclusion)) continue;
      mismatches += t.hypothesis != t.conclusion;
      both_true += t.hypothesis == Truth::True && t.conclusion == Truth::True;
      both_false += t.hypothesis == Truth::False && t.conclusion == Truth::False;
    }
  }
  check(mismatches == 0, "zero mismatches");
  check(both_true >= 10, "at least 10 decisive true");
  check(both_false >= 10, "at least 10 decisive false");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(pairs) + " group/partition pairs, " +
              std::to_string(both_true) + " both true, " + std::to_string(both_false) + " both false, " +
              std::to_string(mismatches) + " mismatches";
  return o;
}

Outcome sylow_bases() {
  Outcome o;
  Check check{o};
  auto sigma = sp("~");
  std::size_t soluble = 0, failures = 0;
  for (auto const& e : catalog(200, false)) {
    auto g = build_group(e.spec);
    if (!is_soluble(g)) continue;
    ++soluble;
    SigmaAnalysis a(g, sigma);
    bool ok = a.sigma_basis_exists() == Truth::True && a.basis() && is_sigma_basis(*a.basis());
    if (ok) {
      for (auto const& [id, h] : a.basis()->members) {
        ok = ok && is_hall(g, h, sigma.filter({id})) && is_sigma_primary(h.order(), sigma);
      }
      for (auto x = a.basis()->members.begin(); ok && x != a.basis()->members.end(); ++x) {
        for (auto y = std::next(x); ok && y != a.basis()->members.end(); ++y) {
          auto xs = elements_of(x->second.group()), ys = elements_of(y->second.group());
          ok = oracle::product(xs, ys) == oracle::product(ys, xs);
        }
      }
      ok = ok && a.basis()->members.size() == sigma_of(g.order(), sigma).size();
    }
    if (!ok) {
      ++failures;
      check(false, group_name(e.spec));
    }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(soluble) + " soluble groups, " +
              std::to_string(failures) + " failures";
  return o;
}

Outcome soundness() {
  Outcome o;
  Check check{o};
  auto const& s = corpus400().summary;
  check(s.inconsistent == 0, "zero inconsistent reports");
  check(s.errors == 0, "zero record errors");
  auto te = s.theorems.count("TE") ? s.theorems.at("TE") : TheoremTally{};
  auto ta1 = s.theorems.count("TA1") ? s.theorems.at("TA1") : TheoremTally{};
  check(te.hypothesis_true >= 10, "at least 10 non-vacuous TE instances");
  check(ta1.hypothesis_true >= 10, "at least 10 non-vacuous TA1 instances");
  bool s4_seen = false;
  for (auto const& rec : corpus400().records) {
    if (rec.group != "S4" || rec.sigma != "~") continue;
    for (auto const& t : rec.theorems) {
      if (t.id != TheoremId::TE) continue;
      std::set<std::string> idx;
      for (auto const& [k, v] : t.witness["hall_set"].items()) idx.insert(v["index"].get<std::string>());
      s4_seen = t.hypothesis == Truth::True && t.conclusion == Truth::True && idx == std::set<std::string>{"3", "4"};
    }
  }
  check(s4_seen, "S4 under the finest partition: indices 3 and 4, conclusion true");
  std::size_t reports = 0;
  for (auto const& [id, t] : s.theorems) reports += t.reports;
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(s.groups) + " groups, " +
              std::to_string(reports) + " reports, " + std::to_string(s.inconsistent) + " inconsistent, TE non-vacuous " +
              std::to_string(te.hypothesis_true) + ", TA1 non-vacuous " + std::to_string(ta1.hypothesis_true);
  return o;
}

Outcome negative_controls() {
  Outcome o;
  Check check{o};
  auto a5 = build_group(GroupSpec::alternating(5));
  check(is_generalized_sigma_soluble(a5, sp("~")) == Truth::False, "A5 finest: not generalized sigma-soluble");
  {
    SigmaAnalysis a(a5, sp("{2,5}|{3}|*"));
    check(a.sigma_full() == Truth::False, "A5 {2,5}|{3}|*: not sigma-full");
    auto p = sp("{2,5}|{3}|*");
    check(a.hall(p.classify(2)).status == SearchStatus::Absent && a.hall(p.classify(2)).strategy == "enumeration",
          "absence certified by enumeration");
  }
  auto sigma = sp("{2,3}|{5}|*");
  SigmaAnalysis a(a5, sigma);
  check(a.sigma_basis_exists() == Truth::True, "A5 {2,3}|{5}|*: basis exists");
  std::vector<std::string> orders;
  if (a.basis()) {
    for (auto const& [id, h] : a.basis()->members) orders.push_back(to_string(h.order()));
  }
  check(orders == std::vector<std::string>{"12", "5"}, "basis orders 12 and 5");
  auto r = verify_structural(a, TheoremId::TA1);
  check(r.consistent && r.hypothesis == Truth::True && r.conclusion == Truth::True, "TA1 consistent");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("finest: generalized=false; {2,5}|{3}|*: sigma-full=false "
                                                           "by enumeration; {2,3}|{5}|*: basis orders 12/5, TA1 consistent");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  Check check{o};
  auto entries = catalog(5000);
  std::size_t checked = 0;
  for (auto const& e : entries) {
    auto g = build_group(e.spec);
    if (g.order() > 5000) continue;
    ++checked;
    if (oracle::closure(g.degree(), g.generators()).size() != g.order()) check(false, "order of " + group_name(e.spec));
  }
  std::size_t pairs = 0;
  for (auto const& spec : {GroupSpec::symmetric(4), GroupSpec::alternating(5), GroupSpec::dihedral(6),
                           GroupSpec::direct_product({GroupSpec::symmetric(3), GroupSpec::symmetric(3)}),
                           GroupSpec::holomorph(7), GroupSpec::direct_product({GroupSpec::cyclic(2), GroupSpec::dihedral(4)}),
                           GroupSpec::dihedral(12)}) {
    auto g = build_group(spec);
    auto subs = enumerate_subgroups(g);
    std::vector<oracle::Set> sets;
    for (auto const& h : subs) sets.push_back(elements_of(h.group()));
    for (std::size_t i = 0; i < subs.size(); ++i) {
      for (std::size_t j = i; j < subs.size(); ++j) {
        if (sets[i].size() * sets[j].size() > 10000) continue;
        ++pairs;
        bool brute = oracle::product(sets[i], sets[j]) == oracle::product(sets[j], sets[i]);
        if (permutes(subs[i], subs[j]) != brute) check(false, "permutes in " + group_name(spec));
      }
    }
  }
  std::size_t series_groups = 0;
  for (auto const& e : entries) {
    auto g = build_group(e.spec);
    if (g.order() > 2000) continue;
    ++series_groups;
    std::multiset<std::string> first;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      std::multiset<std::string> m;
      for (auto const& f : chief_series(g, {seed}).factors) m.insert(to_string(f.factor_order));
      if (seed == 1) first = m;
      if (m != first) check(false, "chief factors of " + group_name(e.spec));
    }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(checked) + " orders, " + std::to_string(pairs) +
              " subgroup pairs, " + std::to_string(series_groups) + " groups x 5 chief series";
  return o;
}

Outcome commutator_lemma() {
  Outcome o;
  Check check{o};
  std::size_t decisive_hyp = 0, true_hyp = 0, violations = 0;
  auto tally = [&](TheoremReport const& t) {
    decisive_hyp += decisive(t.hypothesis);
    true_hyp += t.hypothesis == Truth::True;
    violations += t.hypothesis == Truth::True && t.conclusion != Truth::True;
  };
  for (auto const& rec : corpus400().records) {
    for (auto const& t : rec.theorems) {
      if (t.id == TheoremId::L2_10) tally(t);
    }
  }
  // Products of a nonabelian simple group with a second factor give nontrivial instances.
  auto sigma = sp("~");
  for (auto const& other : {GroupSpec::alternating(4), GroupSpec::symmetric(4), GroupSpec::dihedral(7),
                            GroupSpec::dihedral(9), GroupSpec::cyclic_extension(7, 3)}) {
    auto g = build_group(GroupSpec::direct_product({GroupSpec::alternating(5), other}));
    SigmaAnalysis a(g, sigma);
    auto set = a.complete_set();
    if (!set) continue;
    for (auto const& [i, hi] : set->members) {
      for (auto const& [j, hj] : set->members) {
        if (i != j) tally(verify_lemma_commutator(g, sigma, hi, hj, i, j));
      }
    }
  }
  check(decisive_hyp >= 20, "at least 20 decisive hypotheses");
  check(true_hyp >= 5, "at least 5 true hypotheses");
  check(violations == 0, "zero conclusion violations");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(decisive_hyp) + " decisive hypotheses, " +
              std::to_string(true_hyp) + " true, " + std::to_string(violations) + " violations";
  return o;
}

}  // namespace

int main() {
  run(1, "flagship group A5 x Hol(C11) under {2,3}|{5}|*", 60, flagship);
  run(2, "class H equals class X on the catalog up to order 400", 600, theorem_c);
  run(3, "soluble groups up to order 200 have Sylow bases", 600, sylow_bases);
  run(4, "no inconsistent report on the corpus up to order 400", 600, soundness);
  run(5, "negative controls on A5", 60, negative_controls);
  run(6, "oracle equivalence for orders, permutability, chief factors", 1200, oracle_equivalence);
  run(7, "commutator lemma property suite", 600, commutator_lemma);
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << failures << " of 7 criteria failing" << std::endl;
  return failures ? 1 : 0;
}
