#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "prstar/group.hpp"

namespace prstar {

/// Parses the plain-text group catalog format:
///   group <label> / degree <n> / gen <cycles>... / end
/// Comments start with '#'.  Duplicate labels are rejected.
inline std::vector<GroupHandle> load_catalog_stream(std::istream& in,
                                                    const std::string& origin,
                                                    const Caps& caps = default_caps()) {
  std::vector<GroupHandle> out;
  std::set<std::string> labels;

  std::string label;
  int degree = -1;
  std::vector<Permutation> gens;
  bool in_block = false;

  std::string line;
  int lineno = 0;
  auto where = [&] { return origin + ":" + std::to_string(lineno); };
  while (std::getline(in, line)) {
    ++lineno;
    std::string::size_type hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream iss(line);
    std::string word;
    if (!(iss >> word)) continue;
    if (word == "group") {
      if (in_block) throw IoFailure(where() + ": nested group block");
      if (!(iss >> label)) throw IoFailure(where() + ": group needs a label");
      if (!labels.insert(label).second)
        throw DuplicateLabel(where() + ": duplicate group label '" + label + "'");
      in_block = true;
      degree = -1;
      gens.clear();
    } else if (word == "degree") {
      if (!in_block) throw IoFailure(where() + ": degree outside a group block");
      if (!(iss >> degree) || degree < 1)
        throw IoFailure(where() + ": degree must be a positive integer");
    } else if (word == "gen") {
      if (!in_block) throw IoFailure(where() + ": gen outside a group block");
      if (degree < 1) throw IoFailure(where() + ": gen before degree");
      std::string rest;
      std::getline(iss, rest);
      try {
        gens.push_back(parse_cycles(rest, degree));
      } catch (const BadCycleNotation& e) {
        throw BadCycleNotation(where() + ": " + e.what());
      }
    } else if (word == "end") {
      if (!in_block) throw IoFailure(where() + ": end outside a group block");
      if (degree < 1) throw IoFailure(where() + ": group block without degree");
      out.push_back(Group::create(degree, gens, label, caps));
      in_block = false;
    } else {
      throw IoFailure(where() + ": unknown directive '" + word + "'");
    }
  }
  if (in_block) throw IoFailure(origin + ": unterminated group block '" + label + "'");
  return out;
}

inline std::vector<GroupHandle> load_catalog(const std::string& path,
                                             const Caps& caps = default_caps()) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".cat")
        files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  if (files.empty()) throw IoFailure("no catalog files under " + path);

  std::vector<GroupHandle> out;
  std::set<std::string> labels;
  for (const std::string& f : files) {
    std::ifstream in(f);
    if (!in) throw IoFailure("cannot open catalog file " + f);
    for (GroupHandle& g : load_catalog_stream(in, f, caps)) {
      if (!labels.insert(g->label()).second)
        throw DuplicateLabel("duplicate group label '" + g->label() +
                             "' across catalog files");
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace prstar
