#include "sigma/partition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sigma/errors.hpp"

namespace sigma {

SigmaPartition::SigmaPartition(std::vector<std::set<std::uint64_t>> classes, Completion completion)
    : classes_(std::move(classes)), completion_(completion) {
  std::set<std::uint64_t> seen;
  for (auto const& c : classes_) {
    if (c.empty()) throw InvalidArgument("sigma partition: empty class");
    for (auto p : c) {
      if (!is_prime(p)) throw InvalidArgument("sigma partition: " + std::to_string(p) + " is not prime");
      if (!seen.insert(p).second) {
        throw InvalidArgument("sigma partition: prime " + std::to_string(p) + " appears in two classes");
      }
    }
  }
}

SigmaPartition SigmaPartition::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto const bar = s.find('|', start);
    auto const end = bar == std::string::npos ? s.size() : bar;
    tokens.push_back(s.substr(start, end - start));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  Completion completion = Completion::Singletons;
  if (!tokens.empty() && (tokens.back() == "*" || tokens.back() == "~")) {
    completion = tokens.back() == "*" ? Completion::ComplementClass : Completion::Singletons;
    tokens.pop_back();
  }
  if (tokens.size() == 1 && tokens[0].empty()) tokens.clear();
  std::vector<std::set<std::uint64_t>> classes;
  for (auto const& tok : tokens) {
    if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}') {
      throw ParseError(0, "sigma spec: expected {p,q,...}, `*` or `~` but found '" + tok + "'");
    }
    std::set<std::uint64_t> cls;
    std::stringstream body(tok.substr(1, tok.size() - 2));
    std::string item;
    while (std::getline(body, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError(0, "sigma spec: bad prime '" + item + "' in " + tok);
      }
      cls.insert(std::stoull(item));
    }
    classes.push_back(std::move(cls));
  }
  try {
    return SigmaPartition(std::move(classes), completion);
  } catch (InvalidArgument const& e) {
    throw ParseError(0, e.what());
  }
}

ClassId SigmaPartition::classify(std::uint64_t prime) const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].contains(prime)) return i;
  }
  return completion_ == Completion::ComplementClass ? classes_.size() : classes_.size() + prime;
}

std::set<std::uint64_t> const* SigmaPartition::explicit_class(ClassId id) const {
  return id < classes_.size() ? &classes_[id] : nullptr;
}

PrimeFilter SigmaPartition::filter(ClassSet const& ids) const {
  return [self = *this, ids](std::uint64_t p) { return ids.contains(self.classify(p)); };
}

namespace {
std::string braces(std::set<std::uint64_t> const& ps) {
  std::string out = "{";
  for (auto p : ps) out += (out.size() > 1 ? "," : "") + std::to_string(p);
  return out + "}";
}
}  // namespace

std::string SigmaPartition::label(ClassId id) const {
  if (id < classes_.size()) return braces(classes_[id]);
  if (completion_ == Completion::ComplementClass) {
    std::set<std::uint64_t> all;
    for (auto const& c : classes_) all.insert(c.begin(), c.end());
    return all.empty() ? "{all}" : braces(all) + "'";
  }
  return "{" + std::to_string(id - classes_.size()) + "}";
}

std::string SigmaPartition::label(ClassSet const& ids) const {
  std::string out = "[";
  for (auto id : ids) out += (out.size() > 1 ? "," : "") + label(id);
  return out + "]";
}

std::string SigmaPartition::to_string() const {
  std::string out;
  for (auto const& c : classes_) out += braces(c) + "|";
  out += completion_ == Completion::ComplementClass ? "*" : "~";
  return out;
}

ClassSet sigma_of(BigInt const& n, SigmaPartition const& sigma) {
  ClassSet out;
  for (auto const& [p, e] : factorize(n)) out.insert(sigma.classify(p));
  return out;
}

bool is_sigma_primary(BigInt const& n, SigmaPartition const& sigma) { return sigma_of(n, sigma).size() <= 1; }

bool sigma_coprime(BigInt const& n, BigInt const& m, SigmaPartition const& sigma) {
  auto const a = sigma_of(n, sigma);
  auto const b = sigma_of(m, sigma);
  return std::none_of(a.begin(), a.end(), [&](ClassId id) { return b.contains(id); });
}

}  // namespace sigma
