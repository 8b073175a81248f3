#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "prstar/caps.hpp"
#include "prstar/errors.hpp"

namespace prstar {

/// Tool configuration.  Defaults apply for any key absent from the file.
struct Config {
  Caps caps;
  std::uint64_t seed = 1;
  std::string output_format = "text";  // json | csv | text

  static Config parse(std::istream& in, const std::string& origin = "<config>") {
    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string::size_type hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::string::size_type eq = line.find('=');
      if (eq == std::string::npos) {
        if (line.find_first_not_of(" \t\r") != std::string::npos)
          throw IoFailure(origin + ":" + std::to_string(lineno) +
                          ": expected 'key = value'");
        continue;
      }
      auto trim = [](std::string s) {
        std::string::size_type a = s.find_first_not_of(" \t\r");
        std::string::size_type b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
      };
      std::string key = trim(line.substr(0, eq));
      std::string value = trim(line.substr(eq + 1));
      auto as_count = [&]() -> std::size_t {
        std::size_t v = 0;
        std::istringstream iss(value);
        if (!(iss >> v) || v == 0)
          throw IoFailure(origin + ":" + std::to_string(lineno) + ": " + key +
                          " must be a positive integer");
        return v;
      };
      if (key == "enumerationCap")
        cfg.caps.enumeration_cap = as_count();
      else if (key == "cosetDegreeCap")
        cfg.caps.coset_degree_cap = as_count();
      else if (key == "sylowEnumCap")
        cfg.caps.sylow_enum_cap = as_count();
      else if (key == "searchBudget")
        cfg.caps.search_budget = as_count();
      else if (key == "seed")
        cfg.seed = static_cast<std::uint64_t>(as_count());
      else if (key == "outputFormat") {
        if (value != "json" && value != "csv" && value != "text")
          throw IoFailure(origin + ":" + std::to_string(lineno) +
                          ": outputFormat must be json, csv or text");
        cfg.output_format = value;
      } else {
        throw IoFailure(origin + ":" + std::to_string(lineno) + ": unknown key '" +
                        key + "'");
      }
    }
    return cfg;
  }

  static Config load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open config file " + path);
    return parse(in, path);
  }
};

}  // namespace prstar
