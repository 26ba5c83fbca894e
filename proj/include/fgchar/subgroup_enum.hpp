#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "fgchar/permgroup.hpp"

namespace fgchar {

/// Complete subgroup enumeration for small groups (order <= 5000), up to
/// conjugacy with full member lists. Every subgroup is reached by extending a
/// smaller one by a prime-power element; extensions are pruned by double
/// cosets, which generate equal subgroups.
struct SubgroupEnumeration {
  struct ClassInfo {
    std::vector<std::int32_t> rep;                   // least member, sorted indices
    std::vector<std::vector<std::int32_t>> members;  // all conjugates, sorted
    std::uint64_t order = 1;
    bool nilpotent = false;
    bool normal = false;
  };

  GroupRef group;
  std::vector<ClassInfo> classes;  // sorted by (order, rep)
  std::size_t total_subgroups = 0;

  /// Class index of an exact element-index set, or -1.
  int class_of(const std::vector<std::int32_t>& set) const;

 private:
  friend const SubgroupEnumeration& enumerate_subgroups(const GroupRef& g);
  std::unordered_map<std::uint64_t, std::vector<std::int32_t>> by_hash_;
};

const SubgroupEnumeration& enumerate_subgroups(const GroupRef& g);

/// Subgroup handle for a class representative.
Subgroup subgroup_of_class(const GroupRef& g, const SubgroupEnumeration& se, int cls);

/// Handles for all nilpotent subgroup class representatives.
std::vector<Subgroup> nilpotent_subgroup_class_reps(const GroupRef& g);

}  // namespace fgchar
