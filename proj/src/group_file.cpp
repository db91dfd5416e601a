#include "sigma/group_file.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "sigma/errors.hpp"

namespace sigma {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_number(std::string_view s, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(line, "expected a number, found '" + std::string(s) + "'");
  }
  return v;
}

Permutation parse_cycles(std::string_view s, std::size_t degree, std::size_t line) {
  std::vector<std::vector<Point>> cycles;
  std::vector<bool> used(degree + 1, false);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  if (i == s.size()) throw ParseError(line, "generator has no cycles; write () for the identity");
  while (i < s.size()) {
    if (s[i] != '(') throw ParseError(line, "expected '(' at column " + std::to_string(i + 1));
    auto close = s.find(')', i);
    if (close == std::string_view::npos) throw ParseError(line, "unterminated cycle");
    auto body = trim(s.substr(i + 1, close - i - 1));
    std::vector<Point> cycle;
    while (!body.empty()) {
      auto comma = body.find(',');
      auto tok = trim(body.substr(0, comma));
      auto p = parse_number(tok, line);
      if (p < 1 || p > degree) {
        throw ParseError(line, "point " + std::to_string(p) + " out of range 1.." + std::to_string(degree));
      }
      if (used[p]) throw ParseError(line, "point " + std::to_string(p) + " appears twice");
      used[p] = true;
      cycle.push_back(static_cast<Point>(p));
      if (comma == std::string_view::npos) break;
      body = trim(body.substr(comma + 1));
      if (body.empty()) throw ParseError(line, "trailing comma in cycle");
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    i = close + 1;
    skip();
  }
  return Permutation::from_cycles(degree, cycles);
}

struct Parsed {
  std::size_t degree = 0;
  NamedGenerators groups;
};

Parsed parse(std::string_view text, bool allow_subgroups) {
  Parsed out;
  std::optional<std::size_t> degree;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto space = line.find_first_of(" \t");
    auto keyword = line.substr(0, space);
    auto rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
    if (keyword == "degree") {
      if (degree) throw ParseError(line_no, "degree given twice");
      auto d = parse_number(rest, line_no);
      if (d < 1 || d > 5000) throw ParseError(line_no, "degree must lie in 1..5000");
      degree = d;
      continue;
    }
    if (!degree) throw ParseError(line_no, "the first line must be 'degree N'");
    if (keyword == "gen") {
      if (out.groups.empty()) {
        if (allow_subgroups) throw ParseError(line_no, "'gen' before any 'subgroup' line");
        out.groups.push_back({"", {}});
      }
      out.groups.back().second.push_back(parse_cycles(rest, *degree, line_no));
    } else if (keyword == "subgroup" && allow_subgroups) {
      if (rest.empty()) throw ParseError(line_no, "subgroup needs a name");
      out.groups.push_back({std::string(rest), {}});
    } else {
      throw ParseError(line_no, "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (!degree) throw ParseError(line_no, "missing 'degree N'");
  out.degree = *degree;
  return out;
}

std::string read_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

GroupSpec parse_group_text(std::string_view text, std::string name) {
  auto p = parse(text, false);
  std::vector<Permutation> gens;
  if (!p.groups.empty()) gens = std::move(p.groups.front().second);
  return GroupSpec::explicit_group(p.degree, std::move(gens), std::move(name));
}

NamedGenerators parse_hint_text(std::string_view text) { return parse(text, true).groups; }

GroupSpec load_group_file(std::filesystem::path const& path) {
  return parse_group_text(read_file(path), path.stem().string());
}

NamedGenerators load_hint_file(std::filesystem::path const& path) { return parse_hint_text(read_file(path)); }

std::string write_group_text(std::size_t degree, std::vector<Permutation> const& gens) {
  std::string out = "degree " + std::to_string(degree) + "\n";
  for (auto const& g : gens) out += "gen " + g.to_string() + "\n";
  return out;
}

void write_group_file(std::filesystem::path const& path, GroupSpec const& spec) {
  auto g = build_group(spec);
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << write_group_text(g.degree(), g.generators());
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace sigma
