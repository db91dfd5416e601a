#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sigma/catalog.hpp"
#include "sigma/theorems.hpp"

namespace sigma {

struct CorpusOptions {
  std::vector<SigmaPartition> partitions;
  std::uint64_t max_order = 24;
  std::vector<TheoremId> theorems;
  std::uint64_t seed = 0;
  bool include_named = true;
  unsigned workers = 0;  // 0: one per hardware thread
};

/// One group under one partition.
struct GroupRecord {
  std::string group;
  BigInt order;
  std::string sigma;
  std::vector<std::pair<std::string, Truth>> predicates;
  std::vector<TheoremReport> theorems;
  std::optional<std::string> error;
  Json extra = Json::object();  // additional sections, emitted after the standard keys
};

struct TheoremTally {
  std::size_t reports = 0;
  std::size_t hypothesis_true = 0;  // non-vacuous instances
  std::size_t hypothesis_false = 0;
  std::size_t hypothesis_inconclusive = 0;
  std::size_t conclusion_true = 0;
  std::size_t conclusion_false = 0;
  std::size_t both_true = 0;
  std::size_t both_false = 0;
  std::size_t inconsistent = 0;
};

struct CorpusSummary {
  std::size_t groups = 0;
  std::size_t records = 0;
  std::size_t errors = 0;
  std::size_t inconsistent = 0;
  std::map<std::string, TheoremTally> theorems;
  double runtime_seconds = 0;
};

struct CorpusReport {
  std::vector<GroupRecord> records;
  CorpusSummary summary;
};

/// Predicates and the requested theorem instances of one catalog entry under
/// each partition. Failures are recorded in GroupRecord::error.
std::vector<GroupRecord> analyze_entry(CatalogEntry const& entry, std::vector<SigmaPartition> const& partitions,
                                       std::vector<TheoremId> const& theorems, std::uint64_t seed);

/// Runs over catalog(max_order, include_named) on a worker pool. The records
/// are sorted by (group, sigma) so the output depends only on the inputs.
CorpusReport run_corpus(CorpusOptions const& options);
CorpusReport run_corpus(std::vector<CatalogEntry> const& entries, CorpusOptions const& options);

CorpusSummary summarize(std::vector<GroupRecord> const& records);

enum class ReportFormat { Json, Text };

/// Runtimes appear only when `with_timings` is set, keeping the default
/// output byte-identical between runs.
Json to_json(CorpusReport const& report, bool with_timings = false);
void emit_report(CorpusReport const& report, ReportFormat format, std::ostream& out, bool with_timings = false);
void emit_report(CorpusReport const& report, ReportFormat format, std::filesystem::path const& path,
                 bool with_timings = false);

}  // namespace sigma
