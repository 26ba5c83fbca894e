#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fgchar/numeric.hpp"
#include "fgchar/perm.hpp"

namespace fgchar {

class PermGroup;
using GroupRef = std::shared_ptr<const PermGroup>;

/// One level of a stabilizer chain: the orbit of the base point under the
/// level's strong generators, plus a Schreier tree for transversal elements.
/// Explicit transversal permutations are kept while orbit*degree stays small.
struct ChainLevel {
  int base = -1;
  std::vector<Perm> gens;
  std::vector<int> orbit;              // discovery order, orbit[0] == base
  std::vector<int> where;              // point -> orbit position, -1 outside
  std::vector<int> tree_parent;        // point -> previous point on tree path
  std::vector<int> tree_gen;           // point -> generator index used
  std::vector<Perm> transversal;       // aligned with orbit when explicit
  bool explicit_transversal = true;

  Perm rep(int point, int degree) const;  // u with base^u == point
};

/// Canonical, sorted element list of a group (order <= 10^6 only).
struct ElementTable {
  std::vector<Perm> elems;  // sorted lexicographically; elems[0] is the identity
  std::unordered_map<std::uint64_t, std::vector<std::int32_t>> by_hash;

  int index_of(const Perm& p) const;
  std::size_t size() const { return elems.size(); }
};

inline constexpr std::uint64_t kElementTableCap = 1000000;

class PermGroup {
 public:
  static GroupRef from_generators(std::vector<Perm> gens, int degree = -1);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<ChainLevel>& chain() const { return chain_; }
  const Integer& order() const { return order_; }
  /// Order as a machine integer; throws OrderTooLarge above the table cap.
  std::uint64_t small_order() const;
  const std::vector<int>& base_points() const { return base_; }

  bool contains(const Perm& g) const;
  /// Sifts g through the chain; returns the residue and the levels consumed.
  Perm sift(const Perm& g, int* levels_consumed = nullptr) const;

  /// All elements in canonical order (BFS closure, then sorted). Cached.
  const ElementTable& elements() const;
  bool has_element_table() const;

  Perm identity() const { return Perm(degree_); }

  // Opaque per-group slots for analysis results computed by other modules
  // (class data, character table, lattices, memo tables). Guarded by mutex;
  // computations are deterministic so racing fills are idempotent.
  mutable std::mutex slot_mutex;
  mutable std::map<std::string, std::shared_ptr<void>> slots;

 private:
  PermGroup() = default;
  void build_chain();

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<ChainLevel> chain_;
  std::vector<int> base_;
  Integer order_ = 1;

  mutable std::mutex elements_mutex_;
  mutable std::shared_ptr<const ElementTable> elements_;
};

/// Fetches or computes a named analysis slot on a group.
template <typename T, typename F>
std::shared_ptr<T> group_slot(const PermGroup& g, const std::string& key, F&& factory) {
  {
    std::lock_guard<std::mutex> lock(g.slot_mutex);
    auto it = g.slots.find(key);
    if (it != g.slots.end()) return std::static_pointer_cast<T>(it->second);
  }
  std::shared_ptr<T> value = factory();  // may be slow; computed outside the lock
  std::lock_guard<std::mutex> lock(g.slot_mutex);
  auto [it, inserted] = g.slots.emplace(key, value);
  return std::static_pointer_cast<T>(it->second);
}

/// A subgroup of a fixed parent group: generators live in the parent and are
/// verified there by chain sifting; the subgroup also carries its own chain.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(GroupRef parent, std::vector<Perm> gens);
  /// The parent viewed as a subgroup of itself; shares the existing chain.
  static Subgroup whole(const GroupRef& g);

  const GroupRef& parent() const { return parent_; }
  const GroupRef& group() const { return group_; }
  const std::vector<Perm>& generators() const { return group_->generators(); }
  const Integer& order() const { return group_->order(); }
  std::uint64_t small_order() const { return group_->small_order(); }

  /// Sorted indices of this subgroup's elements in the parent's table. Cached.
  const std::vector<std::int32_t>& element_indices() const;
  /// Bit mask over parent element indices. Cached.
  const std::vector<std::uint64_t>& bits() const;
  bool contains_index(std::int32_t parent_index) const;

  bool same_as(const Subgroup& other) const;
  bool contains_subgroup(const Subgroup& other) const;
  bool is_normal() const;  // normal in the parent

 private:
  struct Data;
  friend Subgroup subgroup_from_indices(const GroupRef&, const std::vector<std::int32_t>&);
  GroupRef parent_;
  GroupRef group_;
  std::shared_ptr<Data> data_;
};

// ---- module operations -------------------------------------------------

GroupRef group_from_generators(std::vector<Perm> gens, int degree = -1);
std::uint64_t order_of(const Perm& g);
bool is_member(const GroupRef& g, const Perm& p);
const ElementTable& enumerate_elements(const GroupRef& g);

/// Whole group viewed as a subgroup of itself.
Subgroup full_subgroup(const GroupRef& g);
Subgroup trivial_subgroup(const GroupRef& g);
/// Builds a subgroup from parent element indices, deriving a small generator set.
Subgroup subgroup_from_indices(const GroupRef& g, const std::vector<std::int32_t>& indices);

Subgroup centralizer(const GroupRef& g, const Perm& x);
Subgroup centralizer(const GroupRef& g, const Subgroup& s);
Subgroup normalizer(const GroupRef& g, const Subgroup& s);
std::optional<Perm> are_conjugate_subgroups(const GroupRef& g, const Subgroup& a,
                                            const Subgroup& b);
/// True if some g conjugates a into a subgroup of b.
bool conjugate_into(const GroupRef& g, const Subgroup& a, const Subgroup& b);

Subgroup normal_closure(const GroupRef& g, const Subgroup& inside, const Subgroup& s);
std::optional<int> subnormal_depth(const GroupRef& g, const Subgroup& s);

Subgroup conjugated_subgroup(const GroupRef& g, const Subgroup& s, const Perm& x);
Subgroup join_subgroups(const GroupRef& g, const Subgroup& a, const Subgroup& b);
Subgroup intersect_subgroups(const GroupRef& g, const Subgroup& a, const Subgroup& b);

}  // namespace fgchar
