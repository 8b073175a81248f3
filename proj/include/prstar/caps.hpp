#pragma once

#include <cstddef>

namespace prstar {

/// Resource caps.  Operations that would need to exceed one fail loudly
/// (EnumerationCapExceeded) instead of degrading.
struct Caps {
  std::size_t enumeration_cap = 200000;  // max elements cached per group
  std::size_t coset_degree_cap = 20000;  // max index for coset-action quotients
  std::size_t sylow_enum_cap = 20000;    // max conjugates in sylow_all/hall_all
  std::size_t search_budget = 200000;    // node budget for witness searches
};

inline const Caps& default_caps() {
  static const Caps caps{};
  return caps;
}

}  // namespace prstar
