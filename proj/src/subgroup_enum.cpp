#include "fgchar/subgroup_enum.hpp"

#include <algorithm>
#include <map>

#include "fgchar/error.hpp"

namespace fgchar {

namespace {

constexpr std::uint64_t kEnumerationCap = 5000;

std::uint64_t set_hash(const std::vector<std::int32_t>& idx) {
  std::uint64_t h = 1469598103934665603ULL ^ idx.size();
  for (auto v : idx) {
    h ^= (std::uint64_t)v + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

// closure of a seed set to a subgroup, as sorted element indices, with a
// greedy generator list for reuse
struct Closure {
  std::vector<std::int32_t> sorted;
  std::vector<std::int32_t> gen_indices;
};

Closure index_closure(const ElementTable& table, const std::vector<std::int32_t>& seed) {
  std::vector<std::uint64_t> bits((table.size() + 63) / 64, 0);
  std::vector<std::int32_t> closure;
  std::vector<const Perm*> gens;
  Closure out;
  auto in = [&](int i) { return (bits[i >> 6] >> (i & 63)) & 1; };
  auto push = [&](int i) {
    bits[i >> 6] |= 1ULL << (i & 63);
    closure.push_back(i);
  };
  push(table.index_of(Perm((int)table.elems[0].degree())));
  for (auto idx : seed) {
    if (in(idx)) continue;
    gens.push_back(&table.elems[idx]);
    out.gen_indices.push_back(idx);
    std::size_t boundary = closure.size();
    push(idx);
    for (std::size_t qi = 0; qi < boundary; ++qi) {
      int next = table.index_of(table.elems[closure[qi]] * *gens.back());
      if (!in(next)) push(next);
    }
    for (std::size_t qi = boundary; qi < closure.size(); ++qi)
      for (const Perm* gen : gens) {
        int next = table.index_of(table.elems[closure[qi]] * *gen);
        if (!in(next)) push(next);
      }
  }
  std::sort(closure.begin(), closure.end());
  out.sorted = std::move(closure);
  return out;
}

}  // namespace

int SubgroupEnumeration::class_of(const std::vector<std::int32_t>& set) const {
  auto it = by_hash_.find(set_hash(set));
  if (it == by_hash_.end()) return -1;
  for (auto id : it->second)
    for (const auto& member : classes[id].members)
      if (member == set) return id;
  return -1;
}

const SubgroupEnumeration& enumerate_subgroups(const GroupRef& g) {
  return *group_slot<SubgroupEnumeration>(*g, "subgroupenum", [&] {
    require(g->order() <= Integer(kEnumerationCap), errc::order_too_large,
            "subgroup enumeration is capped at order 5000");
    auto se = std::make_shared<SubgroupEnumeration>();
    se->group = g;
    const ElementTable& table = g->elements();
    std::size_t n = table.size();

    // conjugation index maps for the generators
    std::vector<std::vector<std::int32_t>> cmaps;
    for (const auto& gen : g->generators()) {
      std::vector<std::int32_t> cmap(n);
      for (std::size_t i = 0; i < n; ++i)
        cmap[i] = table.index_of(table.elems[i].conjugated_by(gen));
      cmaps.push_back(std::move(cmap));
    }
    // prime-power element indices, ascending
    std::vector<std::int32_t> ppidx;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t o = table.elems[i].order();
      if (o > 1 && prime_divisors(o).size() == 1) ppidx.push_back((std::int32_t)i);
    }

    // nilpotency from element orders alone: for each prime, the p-elements
    // must number exactly the p-part of the order
    auto nilpotent_set = [&](const std::vector<std::int32_t>& set) {
      std::map<std::uint64_t, std::uint64_t> count;
      for (auto idx : set) {
        std::uint64_t o = table.elems[idx].order();
        if (o == 1) continue;
        auto ps = prime_divisors(o);
        if (ps.size() == 1) ++count[ps[0]];
      }
      for (auto p : prime_divisors(set.size()))
        if (count[p] != p_part(set.size(), p) - 1) return false;
      return true;
    };

    // classify a subgroup set: returns its class id, creating the class (and
    // its full conjugation orbit) if new
    std::vector<std::int32_t> queue;
    auto classify = [&](const std::vector<std::int32_t>& set) {
      int known = se->class_of(set);
      if (known >= 0) return known;
      int id = (int)se->classes.size();
      SubgroupEnumeration::ClassInfo info;
      info.order = set.size();
      std::map<std::vector<std::int32_t>, bool> seen;
      seen[set] = true;
      std::vector<std::vector<std::int32_t>> orbit{set};
      for (std::size_t qi = 0; qi < orbit.size(); ++qi)
        for (const auto& cmap : cmaps) {
          std::vector<std::int32_t> image;
          image.reserve(orbit[qi].size());
          for (auto idx : orbit[qi]) image.push_back(cmap[idx]);
          std::sort(image.begin(), image.end());
          if (seen.emplace(image, true).second) orbit.push_back(std::move(image));
        }
      info.members.assign(seen.size(), {});
      std::size_t k = 0;
      for (auto& [member, unused] : seen) info.members[k++] = member;
      info.rep = info.members[0];  // map order is lexicographic, least first
      info.normal = info.members.size() == 1;
      info.nilpotent = nilpotent_set(info.rep);
      se->total_subgroups += info.members.size();
      for (const auto& member : info.members)
        se->by_hash_[set_hash(member)].push_back(id);
      se->classes.push_back(std::move(info));
      queue.push_back(id);
      return id;
    };

    classify({table.index_of(g->identity())});
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const auto rep = se->classes[queue[qi]].rep;  // copy: classes vector grows
      std::vector<std::uint64_t> sbits((n + 63) / 64, 0);
      for (auto idx : rep) sbits[idx >> 6] |= 1ULL << (idx & 63);
      std::vector<std::uint64_t> covered = sbits;
      auto covered_in = [&](int i) { return (covered[i >> 6] >> (i & 63)) & 1; };
      Closure base = index_closure(table, rep);
      for (auto x : ppidx) {
        if (covered_in(x)) continue;
        std::vector<std::int32_t> seed = base.gen_indices;
        seed.push_back(x);
        Closure ext = index_closure(table, seed);
        classify(ext.sorted);
        // mark the double coset S x S: those elements generate the same
        // extension over S
        for (auto s1 : rep) {
          Perm left = table.elems[s1] * table.elems[x];
          for (auto s2 : rep) {
            int idx = table.index_of(left * table.elems[s2]);
            covered[idx >> 6] |= 1ULL << (idx & 63);
          }
        }
      }
    }

    std::vector<std::size_t> order_idx(se->classes.size());
    for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
      if (se->classes[a].order != se->classes[b].order)
        return se->classes[a].order < se->classes[b].order;
      return se->classes[a].rep < se->classes[b].rep;
    });
    std::vector<SubgroupEnumeration::ClassInfo> sorted;
    for (auto i : order_idx) sorted.push_back(std::move(se->classes[i]));
    se->classes = std::move(sorted);
    se->by_hash_.clear();
    for (std::size_t id = 0; id < se->classes.size(); ++id)
      for (const auto& member : se->classes[id].members)
        se->by_hash_[set_hash(member)].push_back((std::int32_t)id);
    return se;
  });
}

Subgroup subgroup_of_class(const GroupRef& g, const SubgroupEnumeration& se, int cls) {
  return subgroup_from_indices(g, se.classes[cls].rep);
}

std::vector<Subgroup> nilpotent_subgroup_class_reps(const GroupRef& g) {
  const SubgroupEnumeration& se = enumerate_subgroups(g);
  std::vector<Subgroup> out;
  for (std::size_t id = 0; id < se.classes.size(); ++id)
    if (se.classes[id].nilpotent) out.push_back(subgroup_of_class(g, se, (int)id));
  return out;
}

}  // namespace fgchar
