#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "prstar/caps.hpp"
#include "prstar/permutation.hpp"
#include "prstar/stabilizer_chain.hpp"

namespace prstar {

class Group;
using GroupHandle = std::shared_ptr<const Group>;

/// A finite permutation group, immutable after construction.  The stabilizer
/// chain (order, membership) is always built; the element cache is built iff
/// the order fits under the enumeration cap, so handles can be shared across
/// threads without any lazy mutation.
class Group : public std::enable_shared_from_this<Group> {
 public:
  static GroupHandle create(int degree, std::vector<Permutation> gens,
                            std::string label, const Caps& caps = default_caps()) {
    std::vector<Permutation> kept;
    for (Permutation& g : gens) {
      if (g.degree() != degree)
        throw DegreeMismatch("group " + label + ": generator degree " +
                             std::to_string(g.degree()) + " != " + std::to_string(degree));
      if (!g.is_identity()) kept.push_back(std::move(g));
    }
    return GroupHandle(new Group(degree, std::move(kept), std::move(label), caps));
  }

  int degree() const { return degree_; }
  const std::string& label() const { return label_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const StabilizerChain& chain() const { return chain_; }
  const BigInt& order() const { return order_; }

  bool contains(const Permutation& g) const { return chain_.contains(g); }

  bool enumerable() const { return elements_.has_value(); }

  /// Full element list in the deterministic breadth-first order (layers from
  /// the identity, each layer sorted lexicographically by image table).
  const std::vector<Permutation>& elements() const {
    if (!elements_)
      throw EnumerationCapExceeded("group " + label_ + " of order " + order_.str() +
                                   " exceeds the enumeration cap");
    return *elements_;
  }

  /// FNV hash of the sorted element set; stable identity for dedup maps.
  /// Computed at construction (enumerable groups only).
  std::uint64_t element_set_hash() const {
    elements();  // throws when not enumerable
    return hash_;
  }

  Permutation identity_perm() const { return Permutation(degree_); }

 private:
  Group(int degree, std::vector<Permutation> gens, std::string label, const Caps& caps)
      : degree_(degree),
        generators_(std::move(gens)),
        label_(std::move(label)),
        chain_(degree, generators_) {
    order_ = chain_.order();
    if (order_ <= BigInt(static_cast<std::uint64_t>(caps.enumeration_cap))) enumerate();
  }

  void enumerate() {
    std::vector<Permutation> out;
    std::set<Permutation> seen;
    Permutation id(degree_);
    out.push_back(id);
    seen.insert(id);
    std::vector<Permutation> layer{id};
    while (!layer.empty()) {
      std::set<Permutation> next;
      for (const Permutation& f : layer)
        for (const Permutation& g : generators_) {
          Permutation h = f * g;
          if (!seen.count(h)) next.insert(h);
        }
      layer.assign(next.begin(), next.end());
      for (const Permutation& h : layer) {
        seen.insert(h);
        out.push_back(h);
      }
    }
    std::uint64_t h = 1469598103934665603ull;
    for (const Permutation& p : seen) {
      h ^= p.hash();
      h *= 1099511628211ull;
    }
    hash_ = h;
    elements_ = std::move(out);
  }

  int degree_;
  std::vector<Permutation> generators_;
  std::string label_;
  StabilizerChain chain_;
  BigInt order_;
  std::optional<std::vector<Permutation>> elements_;
  std::uint64_t hash_ = 0;
};

/// A subgroup of a parent group, itself a full Group (own chain, own optional
/// element cache).  Generators are validated against the parent.
class SubgroupRef {
 public:
  SubgroupRef() = default;
  SubgroupRef(GroupHandle parent, GroupHandle grp)
      : parent_(std::move(parent)), group_(std::move(grp)) {}

  const GroupHandle& parent() const { return parent_; }
  const GroupHandle& group() const { return group_; }
  const BigInt& order() const { return group_->order(); }
  int degree() const { return group_->degree(); }
  const std::vector<Permutation>& generators() const { return group_->generators(); }
  const std::vector<Permutation>& elements() const { return group_->elements(); }
  bool enumerable() const { return group_->enumerable(); }
  bool contains(const Permutation& g) const { return group_->contains(g); }
  const std::string& label() const { return group_->label(); }
  bool valid() const { return group_ != nullptr; }

  bool is_trivial() const { return group_->order() == 1; }
  bool same_elements_as(const SubgroupRef& other) const {
    if (group_->order() != other.group_->order()) return false;
    for (const Permutation& g : other.generators())
      if (!group_->contains(g)) return false;
    return true;
  }
  bool contains_subgroup(const SubgroupRef& other) const {
    for (const Permutation& g : other.generators())
      if (!group_->contains(g)) return false;
    return true;
  }

 private:
  GroupHandle parent_;
  GroupHandle group_;
};

inline SubgroupRef subgroup_of(const GroupHandle& parent, std::vector<Permutation> gens,
                               const Caps& caps = default_caps(), std::string label = "") {
  for (const Permutation& g : gens) {
    if (g.degree() != parent->degree())
      throw DegreeMismatch("subgroup of " + parent->label() + ": degree mismatch");
    if (!parent->contains(g))
      throw NotAMember("subgroup of " + parent->label() + ": generator " +
                       format_cycles(g) + " is not a member");
  }
  if (label.empty()) label = "<" + std::to_string(gens.size()) + " gens>";
  GroupHandle grp = Group::create(parent->degree(), std::move(gens), std::move(label), caps);
  if (parent->order() % grp->order() != 0)
    throw Error("subgroup order does not divide parent order");  // unreachable
  return SubgroupRef(parent, grp);
}

inline SubgroupRef full_subgroup(const GroupHandle& G) { return SubgroupRef(G, G); }

inline SubgroupRef trivial_subgroup(const GroupHandle& G, const Caps& caps = default_caps()) {
  return subgroup_of(G, {}, caps, "1");
}

/// Re-homes a subgroup under a different ambient group of the same degree.
inline SubgroupRef reparent(const GroupHandle& parent, const SubgroupRef& s,
                            bool validate = true) {
  if (validate)
    for (const Permutation& g : s.generators())
      if (!parent->contains(g))
        throw NotAMember("reparent: generator not in " + parent->label());
  return SubgroupRef(parent, s.group());
}

// ---------------------------------------------------------------------------
// built-in families
// ---------------------------------------------------------------------------

inline GroupHandle builtin_cyclic(int n, const Caps& caps = default_caps()) {
  if (n < 1) throw Error("cyclic: n must be >= 1");
  std::vector<Permutation> gens;
  if (n > 1) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    gens.emplace_back(std::move(img));
  }
  return Group::create(std::max(n, 1), std::move(gens), "C" + std::to_string(n), caps);
}

/// Dihedral group given by its order 2n, acting on n points.
inline GroupHandle builtin_dihedral(int order, const Caps& caps = default_caps()) {
  if (order < 6 || order % 2 != 0)
    throw Error("dihedral: order must be an even number >= 6");
  int n = order / 2;
  std::vector<int> rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return Group::create(
      n, {Permutation(std::move(rot)), Permutation(std::move(ref))},
      "D" + std::to_string(order), caps);
}

inline GroupHandle builtin_symmetric(int n, const Caps& caps = default_caps()) {
  if (n < 1) throw Error("symmetric: n must be >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i) t[i] = i;
    t[0] = 1;
    t[1] = 0;
    gens.emplace_back(std::move(t));
  }
  if (n >= 3) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.emplace_back(std::move(c));
  }
  return Group::create(n, std::move(gens), "S" + std::to_string(n), caps);
}

inline GroupHandle builtin_alternating(int n, const Caps& caps = default_caps()) {
  if (n < 3) throw Error("alternating: n must be >= 3");
  std::vector<Permutation> gens;
  for (int i = 0; i + 2 < n; ++i) {
    std::vector<int> img(n);
    for (int j = 0; j < n; ++j) img[j] = j;
    img[i] = i + 1;
    img[i + 1] = i + 2;
    img[i + 2] = i;
    gens.emplace_back(std::move(img));
  }
  return Group::create(n, std::move(gens), "A" + std::to_string(n), caps);
}

// ---------------------------------------------------------------------------
// direct products
// ---------------------------------------------------------------------------

/// Product on the disjoint union of the factor domains, with per-factor
/// embeddings (needed to build product subgroups H1 x H2 x ...).
struct DirectProduct {
  GroupHandle group;
  std::vector<GroupHandle> factors;
  std::vector<int> offsets;

  Permutation embed(std::size_t i, const Permutation& p) const {
    std::vector<int> img(group->degree());
    for (int k = 0; k < group->degree(); ++k) img[k] = k;
    int off = offsets[i];
    for (int k = 0; k < p.degree(); ++k) img[off + k] = off + p[k];
    return Permutation(std::move(img));
  }

  std::vector<Permutation> embed_gens(std::size_t i,
                                      const std::vector<Permutation>& gens) const {
    std::vector<Permutation> out;
    out.reserve(gens.size());
    for (const Permutation& g : gens) out.push_back(embed(i, g));
    return out;
  }

  /// Subgroup H1 x ... x Hs from per-factor generator lists (empty list =
  /// trivial factor subgroup).
  SubgroupRef product_subgroup(const std::vector<std::vector<Permutation>>& per_factor,
                               const Caps& caps = default_caps(),
                               std::string label = "") const {
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < per_factor.size(); ++i)
      for (const Permutation& g : per_factor[i]) gens.push_back(embed(i, g));
    return subgroup_of(group, std::move(gens), caps, std::move(label));
  }

  /// Restriction of an element of the product to factor i.
  Permutation restrict_to(std::size_t i, const Permutation& g) const {
    int off = offsets[i];
    int d = factors[i]->degree();
    std::vector<int> img(d);
    for (int k = 0; k < d; ++k) img[k] = g[off + k] - off;
    return Permutation(std::move(img));
  }
};

inline DirectProduct direct_product(std::vector<GroupHandle> factor_list,
                                    const Caps& caps = default_caps(),
                                    std::string label = "") {
  if (factor_list.empty()) throw Error("direct_product: no factors");
  DirectProduct dp;
  dp.factors = std::move(factor_list);
  int total = 0;
  for (const GroupHandle& f : dp.factors) {
    dp.offsets.push_back(total);
    total += f->degree();
  }
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < dp.factors.size(); ++i) {
    for (const Permutation& g : dp.factors[i]->generators()) {
      std::vector<int> img(total);
      for (int k = 0; k < total; ++k) img[k] = k;
      for (int k = 0; k < g.degree(); ++k) img[dp.offsets[i] + k] = dp.offsets[i] + g[k];
      gens.emplace_back(std::move(img));
    }
  }
  if (label.empty()) {
    for (std::size_t i = 0; i < dp.factors.size(); ++i) {
      if (i) label += "x";
      label += dp.factors[i]->label();
    }
  }
  dp.group = Group::create(total, std::move(gens), std::move(label), caps);
  BigInt expect = 1;
  for (const GroupHandle& f : dp.factors) expect *= f->order();
  if (dp.group->order() != expect)
    throw Error("direct_product: order mismatch");  // unreachable
  return dp;
}

// ---------------------------------------------------------------------------
// wreath products C_m wr T
// ---------------------------------------------------------------------------

/// C_m wr T in the imprimitive action on m*n points; block i occupies
/// [i*m, (i+1)*m) and blocks are permuted by the natural action of T.
struct WreathProduct {
  GroupHandle group;
  GroupHandle top;
  int m = 0;
  int n = 0;

  Permutation base_rotation(int block) const {
    std::vector<int> img(m * n);
    for (int k = 0; k < m * n; ++k) img[k] = k;
    for (int j = 0; j < m; ++j) img[block * m + j] = block * m + (j + 1) % m;
    return Permutation(std::move(img));
  }

  Permutation lift_top(const Permutation& sigma) const {
    std::vector<int> img(m * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) img[i * m + j] = sigma[i] * m + j;
    return Permutation(std::move(img));
  }

  std::vector<Permutation> base_gens() const {
    std::vector<Permutation> out;
    for (int b = 0; b < n; ++b) out.push_back(base_rotation(b));
    return out;
  }

  /// The base subgroup C_m^n.
  SubgroupRef base(const Caps& caps = default_caps()) const {
    return subgroup_of(group, base_gens(), caps, "base(" + group->label() + ")");
  }

  /// The complement copy of the top group.
  SubgroupRef top_copy(const Caps& caps = default_caps()) const {
    std::vector<Permutation> gens;
    for (const Permutation& s : top->generators()) gens.push_back(lift_top(s));
    return subgroup_of(group, std::move(gens), caps, "top(" + group->label() + ")");
  }

  /// <base, lifted H> for a subgroup H of the top group given by generators.
  SubgroupRef base_extension(const std::vector<Permutation>& top_sub_gens,
                             const Caps& caps = default_caps(),
                             std::string label = "") const {
    std::vector<Permutation> gens = base_gens();
    for (const Permutation& s : top_sub_gens) gens.push_back(lift_top(s));
    return subgroup_of(group, std::move(gens), caps, std::move(label));
  }
};

inline WreathProduct wreath_product(int m, const GroupHandle& top,
                                    const Caps& caps = default_caps()) {
  if (m < 2) throw Error("wreath_product: m must be >= 2");
  WreathProduct w;
  w.top = top;
  w.m = m;
  w.n = top->degree();
  std::vector<Permutation> gens;
  for (int b = 0; b < w.n; ++b) {
    std::vector<int> img(m * w.n);
    for (int k = 0; k < m * w.n; ++k) img[k] = k;
    for (int j = 0; j < m; ++j) img[b * m + j] = b * m + (j + 1) % m;
    gens.emplace_back(std::move(img));
  }
  for (const Permutation& s : top->generators()) {
    std::vector<int> img(m * w.n);
    for (int i = 0; i < w.n; ++i)
      for (int j = 0; j < m; ++j) img[i * m + j] = s[i] * m + j;
    gens.emplace_back(std::move(img));
  }
  w.group = Group::create(m * w.n, std::move(gens),
                          "C" + std::to_string(m) + "wr" + top->label(), caps);
  return w;
}

}  // namespace prstar
