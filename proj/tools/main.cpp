#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sigma/config.hpp"
#include "sigma/corpus.hpp"
#include "sigma/errors.hpp"
#include "sigma/group_file.hpp"

using namespace sigma;

namespace {

constexpr int kUsage = 2;

struct Output {
  std::string format = "json";
  std::string path;

  ReportFormat report_format() const { return format == "text" ? ReportFormat::Text : ReportFormat::Json; }

  void write(CorpusReport const& report, bool timings = false) const {
    if (path.empty()) {
      emit_report(report, report_format(), std::cout, timings);
    } else {
      emit_report(report, report_format(), std::filesystem::path(path), timings);
    }
  }
};

void add_output(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", out.path, "Write the report here instead of stdout");
}

Json chief_factor_table(SigmaAnalysis& a) {
  Json rows = Json::array();
  for (auto const& f : a.chief_series().factors) {
    Json fs = Json::array(), is = Json::array();
    for (auto id : factor_sigma(f, a.partition())) fs.push_back(a.partition().label(id));
    for (auto id : induced_sigma(f, a.partition())) is.push_back(a.partition().label(id));
    rows.push_back(Json{{"order", to_string(f.factor_order)},
                        {"sigma", fs},
                        {"induced_order", to_string(f.induced_order)},
                        {"induced_sigma", is}});
  }
  return rows;
}

std::optional<Subgroup> named(PermGroup const& g, NamedGenerators const& hints, std::string const& name) {
  for (auto const& [n, gens] : hints) {
    if (n == name) return Subgroup::generated(g, gens);
  }
  return std::nullopt;
}

Subgroup require(PermGroup const& g, NamedGenerators const& hints, std::string const& name) {
  auto s = named(g, hints, name);
  if (!s) throw InvalidArgument("hint file has no subgroup named " + name);
  return *s;
}

ClassId single_class(Subgroup const& s, SigmaPartition const& sigma, char const* what) {
  auto ids = sigma_of(s.order(), sigma);
  if (ids.size() != 1) throw InvalidArgument(std::string(what) + " must be a nontrivial sigma-primary subgroup");
  return *ids.begin();
}

// Theorem B with user-supplied A1, A2, A3: the first class triple whose
// residual normalizer indices are pairwise sigma-coprime, else the first triple.
TheoremReport theorem_b_from_hints(PermGroup const& g, SigmaPartition const& sigma, NamedGenerators const& hints) {
  auto a1 = require(g, hints, "A1"), a2 = require(g, hints, "A2"), a3 = require(g, hints, "A3");
  auto ids = sigma_of(g.order(), sigma);
  if (ids.empty()) ids.insert(sigma.classify(2));
  std::optional<TheoremReport> first;
  for (auto i : ids) {
    for (auto j : ids) {
      for (auto k : ids) {
        auto r = verify_theorem_B(g, sigma, a1, a2, a3, i, j, k);
        if (r.hypothesis != Truth::False) return r;
        if (!first) first = r;
        if (r.witness.value("hypothesis", "") != "indices not pairwise sigma-coprime") return *first;
      }
    }
  }
  return *first;
}

int run_verify(TheoremId id, GroupSpec const& spec, SigmaPartition const& sigma, NamedGenerators const& hints,
               std::uint64_t seed, Output const& out) {
  CatalogEntry entry{spec, hints};
  auto g = build_group(spec);
  GroupRecord rec;
  rec.group = group_name(spec);
  rec.order = g.order();
  rec.sigma = sigma.to_string();
  HallOptions options;
  options.seed = seed;
  for (auto const& [n, gens] : hints) options.hints.push_back(gens);
  bool custom = false;
  if (id == TheoremId::TB && named(g, hints, "A1")) {
    rec.theorems.push_back(theorem_b_from_hints(g, sigma, hints));
    custom = true;
  } else if (id == TheoremId::TA2 && named(g, hints, "H")) {
    SigmaAnalysis a(g, sigma, options);
    auto set = a.complete_set();
    if (!set) throw Inconclusive("no complete Hall sigma-set available for the sweep");
    rec.theorems.push_back(verify_semipermutable_closure(g, sigma, require(g, hints, "H"), *set));
    custom = true;
  } else if (id == TheoremId::L2_10 && named(g, hints, "A")) {
    auto a = require(g, hints, "A"), b = require(g, hints, "B");
    rec.theorems.push_back(
        verify_lemma_commutator(g, sigma, a, b, single_class(a, sigma, "A"), single_class(b, sigma, "B")));
    custom = true;
  }
  if (!custom) {
    auto records = analyze_entry(entry, {sigma}, {id}, seed);
    rec = std::move(records.front());
    rec.predicates.clear();
    if (rec.error) throw Error(*rec.error);
  }
  CorpusReport report;
  report.records.push_back(std::move(rec));
  report.summary = summarize(report.records);
  out.write(report);
  return report.summary.inconsistent ? 1 : 0;
}

std::vector<TheoremId> parse_theorem_list(std::string const& text) {
  if (text == "all") return all_theorems();
  std::vector<TheoremId> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(parse_theorem_id(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sigma-partition analysis of finite permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Limits lim = limits();
  app.add_option("--iteration-cap", lim.iteration_cap, "Largest group whose elements may be listed");
  app.add_option("--enumeration-cap", lim.enumeration_cap, "Largest group for exhaustive subgroup enumeration");
  app.add_option("--quotient-degree-cap", lim.quotient_degree_cap, "Largest coset action for quotients");

  std::string group_path, sigma_spec = "~", hint_path;
  std::uint64_t seed = 0;

  auto* analyze = app.add_subcommand("analyze", "Evaluate the sigma-predicates of one group");
  Output analyze_out;
  analyze->add_option("--group", group_path, "Group file")->required();
  analyze->add_option("--sigma", sigma_spec, "Partition, e.g. {2,3}|{5}|*")->required();
  analyze->add_option("--hint", hint_path, "Hint file with candidate subgroups");
  analyze->add_option("--seed", seed, "Seed of the randomised Hall search");
  add_output(analyze, analyze_out);

  auto* verify = app.add_subcommand("verify", "Check one theorem on one group");
  Output verify_out;
  std::string theorem;
  verify->add_option("--theorem", theorem, "T1.3, TA1, TA2, TB, TC, TD, TE or L2.10")->required();
  verify->add_option("--group", group_path, "Group file")->required();
  verify->add_option("--sigma", sigma_spec, "Partition")->required();
  verify->add_option("--hint", hint_path, "Hint file (A1/A2/A3 for TB, H for TA2, A/B for L2.10)");
  verify->add_option("--seed", seed, "Seed of the randomised Hall search");
  add_output(verify, verify_out);

  auto* corpus = app.add_subcommand("corpus", "Run the catalog");
  Output corpus_out;
  std::uint64_t max_order = 24;
  std::vector<std::string> sigma_specs;
  std::string theorems = "all";
  unsigned workers = 0;
  bool timings = false;
  corpus->add_option("--max-order", max_order, "Largest catalog order")->required();
  corpus->add_option("--sigma", sigma_specs, "Partition (repeatable)")->required();
  corpus->add_option("--theorems", theorems, "Comma separated theorem ids, 'all', or empty")->required();
  corpus->add_option("--seed", seed, "Root seed")->required();
  corpus->add_option("--workers", workers, "Worker threads (0: hardware threads)");
  corpus->add_flag("--timings", timings, "Include runtimes in the report");
  add_output(corpus, corpus_out);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kUsage;
  }

  try {
    set_limits(lim);
    if (analyze->parsed() || verify->parsed()) {
      auto spec = load_group_file(group_path);
      auto sigma = SigmaPartition::parse(sigma_spec);
      NamedGenerators hints;
      if (!hint_path.empty()) hints = load_hint_file(hint_path);
      if (verify->parsed()) return run_verify(parse_theorem_id(theorem), spec, sigma, hints, seed, verify_out);

      auto records = analyze_entry(CatalogEntry{spec, hints}, {sigma}, {}, seed);
      auto& rec = records.front();
      if (!rec.error) {
        HallOptions options;
        options.seed = seed;
        for (auto const& [n, gens] : hints) options.hints.push_back(gens);
        SigmaAnalysis a(build_group(spec), sigma, options);
        rec.extra["chief_factors"] = chief_factor_table(a);
      }
      CorpusReport report{std::move(records), {}};
      report.summary = summarize(report.records);
      analyze_out.write(report);
      return rec.error ? kUsage : 0;
    }
    CorpusOptions options;
    for (auto const& s : sigma_specs) options.partitions.push_back(SigmaPartition::parse(s));
    options.max_order = max_order;
    options.theorems = parse_theorem_list(theorems);
    options.seed = seed;
    options.workers = workers;
    auto report = run_corpus(options);
    corpus_out.write(report, timings);
    return report.summary.inconsistent ? 1 : 0;
  } catch (ParseError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (InvalidArgument const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
