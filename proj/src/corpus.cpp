#include "sigma/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <thread>

#include "sigma/errors.hpp"

namespace sigma {

namespace {

Json truth_json(Truth t) {
  if (t == Truth::Inconclusive) return "inconclusive";
  return t == Truth::True;
}

template <class F>
Truth guarded(F&& f) {
  try {
    return f();
  } catch (Error const&) {
    return Truth::Inconclusive;
  }
}

/// A subgroup of prime order inside h, or nullopt when h is trivial.
std::optional<Subgroup> prime_order_subgroup(PermGroup const& g, Subgroup const& h) {
  for (auto const& x : h.generators()) {
    auto m = x.order();
    if (m == 1) continue;
    auto q = prime_divisors(m).front();
    return Subgroup::generated(g, {x.pow(static_cast<std::int64_t>(m / q))});
  }
  return std::nullopt;
}

bool wants(std::vector<TheoremId> const& list, TheoremId id) {
  return std::find(list.begin(), list.end(), id) != list.end();
}

Subgroup join_except(PermGroup const& g, HallSet const& set, ClassId skip) {
  auto out = Subgroup::trivial(g);
  for (auto const& [id, h] : set.members) {
    if (id != skip) out = join(out, h);
  }
  return out;
}

template <class F>
void add_instance(GroupRecord& rec, TheoremId id, F&& f) {
  try {
    rec.theorems.push_back(f());
  } catch (Error const& e) {
    TheoremReport r;
    r.id = id;
    r.witness["error"] = e.what();
    rec.theorems.push_back(std::move(r));
  }
}

void theorem_instances(GroupRecord& rec, SigmaAnalysis& a, std::vector<TheoremId> const& theorems) {
  auto const& g = a.group();
  auto const& sigma = a.partition();
  for (auto id : {TheoremId::T1_3, TheoremId::TA1, TheoremId::TC, TheoremId::TD, TheoremId::TE}) {
    if (wants(theorems, id)) add_instance(rec, id, [&] { return verify_structural(a, id); });
  }
  bool need_set = wants(theorems, TheoremId::TA2) || wants(theorems, TheoremId::TB) ||
                  wants(theorems, TheoremId::L2_10);
  if (!need_set) return;
  std::optional<HallSet> set;
  if (guarded([&] { return a.sigma_full(); }) == Truth::True) set = a.complete_set();
  if (!set) return;

  if (wants(theorems, TheoremId::TA2)) {
    for (auto const& [id, h] : set->members) {
      add_instance(rec, TheoremId::TA2, [&] { return verify_semipermutable_closure(g, sigma, h, *set); });
      auto small = prime_order_subgroup(g, h);
      if (small && !(*small == h)) {
        add_instance(rec, TheoremId::TA2, [&] { return verify_semipermutable_closure(g, sigma, *small, *set); });
      }
    }
  }

  if (wants(theorems, TheoremId::TB)) {
    auto whole = Subgroup::whole(g);
    auto first = *a.classes().begin();
    add_instance(rec, TheoremId::TB,
                 [&] { return verify_theorem_B(g, sigma, whole, whole, whole, first, first, first); });
    if (a.classes().size() >= 2 && guarded([&] { return a.sigma_basis_exists(); }) == Truth::True) {
      std::vector<ClassId> ids(a.classes().begin(), a.classes().end());
      auto const& basis = *a.basis();
      auto a1 = join_except(g, basis, ids[0]);
      auto a2 = join_except(g, basis, ids[1]);
      auto a3 = ids.size() >= 3 ? join_except(g, basis, ids[2]) : whole;
      auto k = ids.size() >= 3 ? ids[2] : ids[0];
      add_instance(rec, TheoremId::TB, [&] { return verify_theorem_B(g, sigma, a1, a2, a3, ids[0], ids[1], k); });
    }
  }

  if (wants(theorems, TheoremId::L2_10)) {
    std::vector<ClassId> ids(a.classes().begin(), a.classes().end());
    for (std::size_t x = 0; x < ids.size(); ++x) {
      for (std::size_t y = x + 1; y < ids.size(); ++y) {
        auto const& hi = set->members.at(ids[x]);
        auto const& hj = set->members.at(ids[y]);
        add_instance(rec, TheoremId::L2_10,
                     [&] { return verify_lemma_commutator(g, sigma, hi, hj, ids[x], ids[y]); });
        auto si = prime_order_subgroup(g, hi);
        auto sj = prime_order_subgroup(g, hj);
        if (si && sj) {
          add_instance(rec, TheoremId::L2_10,
                       [&] { return verify_lemma_commutator(g, sigma, *si, *sj, ids[x], ids[y]); });
        }
      }
    }
  }
}

}  // namespace

std::vector<GroupRecord> analyze_entry(CatalogEntry const& entry, std::vector<SigmaPartition> const& partitions,
                                       std::vector<TheoremId> const& theorems, std::uint64_t seed) {
  std::vector<GroupRecord> out;
  auto const name = group_name(entry.spec);
  std::optional<PermGroup> g;
  std::string failure;
  try {
    g = build_group(entry.spec);
  } catch (Error const& e) {
    failure = e.what();
  }
  HallOptions options;
  options.seed = seed;
  for (auto const& [label, gens] : entry.hints) options.hints.push_back(gens);
  std::shared_ptr<ChiefSeries const> series;
  for (auto const& sigma : partitions) {
    GroupRecord rec;
    rec.group = name;
    rec.sigma = sigma.to_string();
    if (!g) {
      rec.error = failure;
      out.push_back(std::move(rec));
      continue;
    }
    rec.order = g->order();
    try {
      SigmaAnalysis a(*g, sigma, options, series);
      series = a.shared_chief_series();
      rec.predicates = {
          {"sigma_full", guarded([&] { return a.sigma_full(); })},
          {"sigma_soluble", guarded([&] { return truth(a.sigma_soluble()); })},
          {"generalized_sigma_soluble", guarded([&] { return a.generalized_sigma_soluble(); })},
          {"sigma_basis", guarded([&] { return a.sigma_basis_exists(); })},
          {"in_class_X_sigma", guarded([&] { return a.in_class_X(); })},
          {"x_sigma_abstract_variant", guarded([&] { return a.x_abstract_variant(); })},
          {"in_class_H_sigma", guarded([&] { return a.in_class_H(); })},
          {"soluble", guarded([&] { return truth(is_soluble(*g)); })},
      };
      theorem_instances(rec, a, theorems);
    } catch (Error const& e) {
      rec.error = e.what();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

CorpusReport run_corpus(CorpusOptions const& options) {
  return run_corpus(catalog(options.max_order, options.include_named), options);
}

CorpusReport run_corpus(std::vector<CatalogEntry> const& entries, CorpusOptions const& options) {
  auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<GroupRecord>> slots(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < entries.size();) {
      slots[i] = analyze_entry(entries[i], options.partitions, options.theorems, options.seed);
    }
  };
  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(entries.size(), 1)));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  CorpusReport report;
  for (auto& s : slots) {
    for (auto& r : s) report.records.push_back(std::move(r));
  }
  std::stable_sort(report.records.begin(), report.records.end(), [](auto const& x, auto const& y) {
    return std::tie(x.group, x.sigma) < std::tie(y.group, y.sigma);
  });
  report.summary = summarize(report.records);
  std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
  report.summary.runtime_seconds = d.count();
  return report;
}

CorpusSummary summarize(std::vector<GroupRecord> const& records) {
  CorpusSummary s;
  std::set<std::string> groups;
  for (auto const& r : records) {
    groups.insert(r.group);
    ++s.records;
    if (r.error) ++s.errors;
    for (auto const& t : r.theorems) {
      auto& tally = s.theorems[to_string(t.id)];
      ++tally.reports;
      tally.hypothesis_true += t.hypothesis == Truth::True;
      tally.hypothesis_false += t.hypothesis == Truth::False;
      tally.hypothesis_inconclusive += t.hypothesis == Truth::Inconclusive;
      tally.conclusion_true += t.conclusion == Truth::True;
      tally.conclusion_false += t.conclusion == Truth::False;
      tally.both_true += t.hypothesis == Truth::True && t.conclusion == Truth::True;
      tally.both_false += t.hypothesis == Truth::False && t.conclusion == Truth::False;
      tally.inconsistent += !t.consistent;
      s.inconsistent += !t.consistent;
    }
  }
  s.groups = groups.size();
  return s;
}

Json to_json(CorpusReport const& report, bool with_timings) {
  Json records = Json::array();
  for (auto const& r : report.records) {
    Json rec;
    rec["group"] = r.group;
    rec["order"] = to_string(r.order);
    rec["sigma"] = r.sigma;
    Json preds = Json::object();
    for (auto const& [k, v] : r.predicates) preds[k] = truth_json(v);
    rec["predicates"] = preds;
    Json theorems = Json::array();
    for (auto const& t : r.theorems) {
      Json jt;
      jt["id"] = to_string(t.id);
      jt["hypothesis"] = truth_json(t.hypothesis);
      jt["conclusion"] = truth_json(t.conclusion);
      jt["consistent"] = t.consistent;
      jt["witness"] = t.witness;
      if (with_timings) {
        Json tm = Json::object();
        for (auto const& [phase, secs] : t.timings) tm[phase] = secs;
        jt["timings"] = tm;
      }
      theorems.push_back(std::move(jt));
    }
    rec["theorems"] = theorems;
    if (r.error) rec["error"] = *r.error;
    for (auto const& [k, v] : r.extra.items()) rec[k] = v;
    records.push_back(std::move(rec));
  }
  auto const& s = report.summary;
  Json summary;
  summary["groups"] = s.groups;
  summary["records"] = s.records;
  summary["errors"] = s.errors;
  summary["inconsistent"] = s.inconsistent;
  Json per = Json::object();
  for (auto const& [id, t] : s.theorems) {
    per[id] = Json{{"reports", t.reports},
                   {"hypothesis_true", t.hypothesis_true},
                   {"hypothesis_false", t.hypothesis_false},
                   {"hypothesis_inconclusive", t.hypothesis_inconclusive},
                   {"conclusion_true", t.conclusion_true},
                   {"conclusion_false", t.conclusion_false},
                   {"both_true", t.both_true},
                   {"both_false", t.both_false},
                   {"inconsistent", t.inconsistent}};
  }
  summary["theorems"] = per;
  if (with_timings) summary["runtime_seconds"] = s.runtime_seconds;
  Json out;
  out["records"] = records;
  out["summary"] = summary;
  return out;
}

void emit_report(CorpusReport const& report, ReportFormat format, std::ostream& out, bool with_timings) {
  if (format == ReportFormat::Json) {
    out << to_json(report, with_timings).dump(2) << '\n';
    return;
  }
  std::size_t gw = 5, sw = 5;
  for (auto const& r : report.records) {
    gw = std::max(gw, r.group.size());
    sw = std::max(sw, r.sigma.size());
  }
  for (auto const& r : report.records) {
    out << std::left << std::setw(static_cast<int>(gw)) << r.group << "  " << std::setw(static_cast<int>(sw))
        << r.sigma << "  order " << std::setw(8) << to_string(r.order);
    for (auto const& [k, v] : r.predicates) out << "  " << k << '=' << to_string(v);
    if (r.error) out << "  error: " << *r.error;
    out << '\n';
    for (auto const& t : r.theorems) {
      out << "    " << std::setw(6) << to_string(t.id) << " hypothesis " << std::setw(12) << to_string(t.hypothesis)
          << " conclusion " << std::setw(12) << to_string(t.conclusion) << (t.consistent ? " consistent" : " INCONSISTENT")
          << '\n';
    }
  }
  auto const& s = report.summary;
  out << "groups " << s.groups << ", records " << s.records << ", errors " << s.errors << ", inconsistent "
      << s.inconsistent << '\n';
  for (auto const& [id, t] : s.theorems) {
    out << "  " << std::setw(6) << id << " reports " << std::setw(6) << t.reports << " non-vacuous " << std::setw(6)
        << t.hypothesis_true << " inconclusive " << std::setw(6) << t.hypothesis_inconclusive << " inconsistent "
        << t.inconsistent << '\n';
  }
  if (with_timings) out << "runtime " << s.runtime_seconds << " s\n";
}

void emit_report(CorpusReport const& report, ReportFormat format, std::filesystem::path const& path,
                 bool with_timings) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  emit_report(report, format, out, with_timings);
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace sigma
