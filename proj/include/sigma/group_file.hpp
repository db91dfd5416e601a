#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sigma/catalog.hpp"

namespace sigma {

// Line-oriented text format:
//
//   # comment
//   degree 16
//   gen (1,2,3)(4,5)
//
// `degree N` comes first and once; every `gen` line holds one generator in
// disjoint cycle notation with 1-based points. Hint files may also contain
// `subgroup NAME` lines; later `gen` lines belong to the last named subgroup.

using NamedGenerators = std::vector<std::pair<std::string, std::vector<Permutation>>>;

/// Throws ParseError naming the line.
GroupSpec parse_group_text(std::string_view text, std::string name = {});
NamedGenerators parse_hint_text(std::string_view text);

/// Reads a file; the spec is named after the file stem. Throws ParseError
/// (or Error when the file cannot be read).
GroupSpec load_group_file(std::filesystem::path const& path);
NamedGenerators load_hint_file(std::filesystem::path const& path);

std::string write_group_text(std::size_t degree, std::vector<Permutation> const& gens);
void write_group_file(std::filesystem::path const& path, GroupSpec const& spec);

}  // namespace sigma
