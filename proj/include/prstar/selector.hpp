#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prstar/structure.hpp"

namespace prstar {

/// Maps a CLI subgroup selector onto a SubgroupRef of G.
///
/// Grammar: full | trivial | F | F2 | Fstar | Fstar2 | radical | gammaInf |
///          gamma:<k> | syl:<p> | hall:<p>' | hall:<p> | hall:{p,q,...} |
///          gens:<cycles>[,<cycles>...]
inline SubgroupRef resolve_selector(const GroupHandle& G, const std::string& selector,
                                    const Caps& caps = default_caps()) {
  auto parse_u64 = [&](const std::string& s) -> std::uint64_t {
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(s, &pos);
      if (pos != s.size() || v == 0) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw UnknownSelector("selector '" + selector + "': bad number '" + s + "'");
    }
  };

  if (selector == "full") return full_subgroup(G);
  if (selector == "trivial") return trivial_subgroup(G, caps);
  if (selector == "F") return fitting(G, caps);
  if (selector == "F2") return fitting_k(G, 2, caps);
  if (selector == "Fstar") return generalized_fitting(G, caps);
  if (selector == "Fstar2") return fstar_2(G, caps);
  if (selector == "radical") return soluble_radical(G, caps);
  if (selector == "gammaInf") return gamma_infinity(G, caps);
  if (selector.rfind("gamma:", 0) == 0)
    return gamma_k(G, static_cast<int>(parse_u64(selector.substr(6))), caps);
  if (selector.rfind("syl:", 0) == 0)
    return sylow(G, parse_u64(selector.substr(4)), caps);
  if (selector.rfind("hall:", 0) == 0) {
    std::string body = selector.substr(5);
    PrimeSet ps;
    if (!body.empty() && body.front() == '{') {
      if (body.back() != '}')
        throw UnknownSelector("selector '" + selector + "': unterminated prime set");
      std::string inner = body.substr(1, body.size() - 2);
      std::string cur;
      for (char c : inner + ",") {
        if (c == ',') {
          if (!cur.empty()) ps.primes.push_back(parse_u64(cur));
          cur.clear();
        } else if (c != ' ') {
          cur += c;
        }
      }
      std::sort(ps.primes.begin(), ps.primes.end());
    } else if (!body.empty() && body.back() == '\'') {
      std::uint64_t p = parse_u64(body.substr(0, body.size() - 1));
      ps = pi(G).without(p);
    } else {
      ps.primes.push_back(parse_u64(body));
    }
    return hall(G, ps, caps);
  }
  if (selector.rfind("gens:", 0) == 0) {
    std::string body = selector.substr(5);
    std::vector<Permutation> gens;
    std::string cur;
    int depth = 0;
    for (char c : body + ",") {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        if (!cur.empty()) gens.push_back(parse_cycles(cur, G->degree()));
        cur.clear();
      } else {
        cur += c;
      }
    }
    return subgroup_of(G, gens, caps);
  }
  throw UnknownSelector("unknown selector '" + selector + "'");
}

}  // namespace prstar
