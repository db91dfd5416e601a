#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "sigma/corpus.hpp"
#include "sigma/errors.hpp"
#include "sigma/group_file.hpp"

using namespace testing;

namespace {

SigmaPartition sp(char const* s) { return SigmaPartition::parse(s); }

std::filesystem::path temp_file(std::string const& name, std::string const& text) {
  auto path = std::filesystem::temp_directory_path() / ("sigmagroups_test_" + name);
  std::ofstream(path) << text;
  return path;
}

std::string dump(CorpusReport const& r) {
  std::ostringstream ss;
  emit_report(r, ReportFormat::Json, ss);
  return ss.str();
}

}  // namespace

TEST_SUITE("corpus_cli") {
  TEST_CASE("build_group examples") {
    auto c6 = build_group(GroupSpec::cyclic(6));
    CHECK(c6.order() == 6);
    CHECK(c6.degree() == 6);
    auto f = build_group(flagship_entry().spec);
    CHECK(f.order() == 6600);
    CHECK(f.degree() == 16);
    auto d8 = build_group(GroupSpec::dihedral(8));
    CHECK(d8.order() == 16);
    CHECK(d8.degree() == 8);
    CHECK(build_group(GroupSpec::holomorph(11)).order() == 110);
    CHECK(build_group(GroupSpec::cyclic_extension(13, 3)).order() == 39);
    CHECK_THROWS_AS(GroupSpec::cyclic(0), InvalidArgument);
    CHECK_THROWS_AS(GroupSpec::direct_product({GroupSpec::cyclic(2)}), InvalidArgument);
    CHECK_THROWS_AS(GroupSpec::cyclic_extension(11, 3), InvalidArgument);
  }

  TEST_CASE("catalog orders match closed forms") {
    auto entries = catalog(500);
    std::set<std::string> names;
    for (auto const& e : entries) {
      CHECK(names.insert(group_name(e.spec)).second);
      auto g = build_group(e.spec);
      if (auto o = expected_order(e.spec)) CHECK(g.order() == *o);
      if (e.spec.kind == GroupSpec::Kind::DirectProduct) {
        BigInt prod = 1;
        for (auto const& f : e.spec.factors) prod *= build_group(f).order();
        CHECK(g.order() == prod);
      }
    }
    CHECK(names.count("A5xHol(C11)"));
    CHECK(names.count("S4"));
    CHECK(names.count("A5"));
    CHECK(names.count("Hol(C11)"));
  }

  TEST_CASE("group file examples") {
    auto c4 = load_group_file(temp_file("c4.group", "degree 4\ngen (1,2,3,4)\n"));
    CHECK(c4.kind == GroupSpec::Kind::Explicit);
    CHECK(build_group(c4).order() == 4);
    auto hol = parse_group_text("# holomorph\ndegree 11\n\ngen (1,2,3,4,5,6,7,8,9,10,11)  # translation\ngen (2,3,5,9,6,11,10,8,4,7)\n");
    CHECK(build_group(hol).order() == 110);
    try {
      parse_group_text("degree 4\ngen (1,5)\n");
      FAIL("expected a parse error");
    } catch (ParseError const& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("point 5") != std::string::npos);
    }
  }

  TEST_CASE("group file grammar errors") {
    for (auto bad : {"gen (1,2)\n", "degree 3\ndegree 3\n", "degree 3\ngen 1,2\n", "degree 3\ngen (1,2\n",
                     "degree 3\nfoo\n", "degree 3\ngen (1,1)\n", "degree 3\ngen (1,2)(2,3)\n", "", "degree x\n",
                     "degree 3\ngen\n", "degree 3\ngen (1,)\n"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_group_text(bad), ParseError);
    }
    auto id = parse_group_text("degree 3\ngen ()\n");
    CHECK(build_group(id).order() == 1);
    CHECK_THROWS_AS(load_group_file("/nonexistent/path.group"), Error);
  }

  TEST_CASE("group files round-trip") {
    std::mt19937_64 rng(5);
    for (auto const& spec : {GroupSpec::symmetric(5), flagship_entry().spec, GroupSpec::dihedral(9)}) {
      auto path = std::filesystem::temp_directory_path() / "sigmagroups_test_roundtrip.group";
      write_group_file(path, spec);
      auto back = load_group_file(path);
      auto g = build_group(spec), h = build_group(back);
      CHECK(g.order() == h.order());
      CHECK(h.generators() == g.generators());
      for (int i = 0; i < 50; ++i) {
        auto p = i % 2 ? g.random_element(rng) : random_permutation(g.degree(), rng);
        CHECK(g.contains(p) == h.contains(p));
      }
    }
  }

  TEST_CASE("hint files") {
    auto hints = parse_hint_text("degree 4\nsubgroup A1\ngen (1,2,3)\ngen (1,2)\nsubgroup B\ngen ()\n");
    REQUIRE(hints.size() == 2);
    CHECK(hints[0].first == "A1");
    CHECK(hints[0].second.size() == 2);
    CHECK(hints[1].second.front().is_identity());
    CHECK_THROWS_AS(parse_hint_text("degree 4\ngen (1,2)\n"), ParseError);
  }

  TEST_CASE("run_corpus examples") {
    CorpusOptions o;
    o.partitions = {sp("~")};
    o.max_order = 24;
    o.theorems = {TheoremId::T1_3, TheoremId::TC};
    auto r = run_corpus(o);
    CHECK(r.summary.inconsistent == 0);
    for (auto const& rec : r.records) {
      for (auto const& t : rec.theorems) {
        if (t.id == TheoremId::T1_3 && t.hypothesis == Truth::True) CHECK(t.conclusion == Truth::True);
      }
    }
    o.theorems.clear();
    auto empty = run_corpus(o);
    for (auto const& rec : empty.records) CHECK(rec.theorems.empty());
  }

  TEST_CASE("flagship record") {
    CorpusOptions o;
    o.partitions = {sp("{2,3}|{5}|*")};
    o.max_order = 1;
    auto r = run_corpus(o);
    auto it = std::find_if(r.records.begin(), r.records.end(), [](auto const& x) { return x.group == "A5xHol(C11)"; });
    REQUIRE(it != r.records.end());
    auto j = to_json(CorpusReport{{*it}, summarize({*it})});
    auto const& preds = j["records"][0]["predicates"];
    CHECK(preds["sigma_basis"] == true);
    CHECK(preds["sigma_soluble"] == false);
    CHECK(preds["generalized_sigma_soluble"] == true);
    CHECK(preds["in_class_X_sigma"] == false);
  }

  TEST_CASE("emit_report") {
    CorpusReport empty;
    auto j = Json::parse(dump(empty));
    CHECK(j["records"].is_array());
    CHECK(j["records"].empty());
    CorpusOptions o;
    o.partitions = {sp("~")};
    o.max_order = 1;
    o.include_named = false;
    o.theorems = {TheoremId::TC};
    auto one = run_corpus(o);
    REQUIRE(one.records.size() == 1);
    auto j1 = Json::parse(dump(one));
    CHECK(j1["summary"]["records"] == 1);
    std::vector<std::string> keys;
    for (auto const& [k, v] : j1["records"][0].items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"group", "order", "sigma", "predicates", "theorems"});
    CHECK(j1["records"][0]["theorems"][0].contains("witness"));
    CHECK_FALSE(j1["summary"].contains("runtime_seconds"));
    std::ostringstream text;
    emit_report(one, ReportFormat::Text, text);
    CHECK(text.str().find("C1") != std::string::npos);
  }

  TEST_CASE("reports are deterministic and tallies recompute") {
    CorpusOptions o;
    o.partitions = {sp("~"), sp("{2,3}|*")};
    o.max_order = 40;
    o.theorems = all_theorems();
    o.seed = 17;
    o.workers = 1;
    auto a = run_corpus(o);
    o.workers = 3;
    auto b = run_corpus(o);
    CHECK(dump(a) == dump(b));
    auto again = summarize(a.records);
    CHECK(again.records == a.summary.records);
    CHECK(again.groups == a.summary.groups);
    CHECK(to_json(CorpusReport{a.records, again}).dump() == to_json(a).dump());
    std::set<std::pair<std::string, std::string>> seen;
    for (auto const& rec : a.records) CHECK(seen.insert({rec.group, rec.sigma}).second);
    CHECK(a.summary.groups == catalog(40).size());
  }
}
