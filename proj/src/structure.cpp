#include "fgchar/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fgchar/error.hpp"

namespace fgchar {

namespace {

std::uint64_t fnv64(const void* data, std::size_t len, std::uint64_t seed = 1469598103934665603ULL) {
  std::uint64_t h = seed;
  const unsigned char* p = (const unsigned char*)data;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

// Representation-independent group key: order plus the multiset of element
// hashes. Used to memoize recursions that revisit equal subgroups.
std::uint64_t group_key(const GroupRef& g) {
  auto key = group_slot<std::uint64_t>(*g, "groupkey", [&] {
    const auto& table = g->elements();
    std::vector<std::uint64_t> hashes;
    hashes.reserve(table.size());
    for (const auto& e : table.elems) hashes.push_back(e.hash());
    std::sort(hashes.begin(), hashes.end());
    return std::make_shared<std::uint64_t>(
        fnv64(hashes.data(), hashes.size() * sizeof(std::uint64_t), table.size()));
  });
  return *key;
}

std::uint64_t index_set_hash(const std::vector<std::int32_t>& idx) {
  return fnv64(idx.data(), idx.size() * sizeof(std::int32_t), idx.size());
}

// Subgroup generated by a set of element indices (not necessarily closed):
// greedy generator selection over the index closure. Shares the parent's
// chain when the closure turns out to be everything.
Subgroup subgroup_generated_by_indices(const GroupRef& g, const std::vector<std::int32_t>& seed) {
  const ElementTable& table = g->elements();
  std::vector<std::uint64_t> closed((table.size() + 63) / 64, 0);
  std::vector<std::int32_t> closure;
  auto in_closure = [&](int idx) { return (closed[idx >> 6] >> (idx & 63)) & 1; };
  auto push = [&](int idx) {
    closed[idx >> 6] |= 1ULL << (idx & 63);
    closure.push_back(idx);
  };
  std::vector<Perm> gens;
  push(table.index_of(g->identity()));
  for (auto idx : seed) {
    if (closure.size() == table.size()) break;
    if (in_closure(idx)) continue;
    const Perm& newgen = table.elems[idx];
    std::size_t boundary = closure.size();
    gens.push_back(newgen);
    push(idx);
    // incremental closure: old elements against the new generator only, then
    // the freshly added tail against the whole generator set
    for (std::size_t qi = 0; qi < boundary && closure.size() < table.size(); ++qi) {
      int next = table.index_of(table.elems[closure[qi]] * newgen);
      if (!in_closure(next)) push(next);
    }
    for (std::size_t qi = boundary; qi < closure.size() && closure.size() < table.size(); ++qi)
      for (const auto& gen : gens) {
        int next = table.index_of(table.elems[closure[qi]] * gen);
        if (!in_closure(next)) push(next);
      }
  }
  if (closure.size() == table.size()) return full_subgroup(g);
  return Subgroup(g, gens);
}

}  // namespace

// ---- conjugacy classes -----------------------------------------------------

int ClassData::class_of(const Perm& g) const {
  int idx = group->elements().index_of(g);
  require(idx >= 0, errc::group_mismatch, "element does not belong to the group");
  return el2class[idx];
}

int ClassData::class_of_power(int cls, std::uint64_t e) const {
  return class_of(reps[cls].power((long long)(e % rep_orders[cls])));
}

const ClassData& conjugacy_classes(const GroupRef& g) {
  return *group_slot<ClassData>(*g, "classdata", [&] {
    auto cd = std::make_shared<ClassData>();
    cd->group = g;
    const ElementTable& table = g->elements();
    std::size_t n = table.size();
    cd->el2class.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      if (cd->el2class[i] >= 0) continue;
      int cls = (int)cd->reps.size();
      cd->reps.push_back(table.elems[i]);
      cd->rep_index.push_back((std::int32_t)i);
      std::vector<std::int32_t> orbit{(std::int32_t)i};
      cd->el2class[i] = cls;
      for (std::size_t qi = 0; qi < orbit.size(); ++qi)
        for (const auto& gen : g->generators()) {
          int idx = table.index_of(table.elems[orbit[qi]].conjugated_by(gen));
          if (cd->el2class[idx] < 0) {
            cd->el2class[idx] = cls;
            orbit.push_back(idx);
          }
        }
      cd->sizes.push_back((std::uint32_t)orbit.size());
    }
    std::uint64_t total = 0;
    for (auto s : cd->sizes) total += s;
    require(total == n && cd->sizes[0] == 1, errc::self_check_failed,
            "class sizes do not partition the group");
    cd->exponent = 1;
    for (const auto& rep : cd->reps) {
      cd->rep_orders.push_back(rep.order());
      cd->exponent = std::lcm(cd->exponent, cd->rep_orders.back());
    }
    cd->primes = prime_divisors(cd->exponent);
    for (auto p : cd->primes) {
      std::vector<std::int32_t> pm(cd->reps.size());
      for (std::size_t c = 0; c < cd->reps.size(); ++c)
        pm[c] = cd->el2class[table.index_of(cd->reps[c].power((long long)p))];
      cd->power_maps.push_back(std::move(pm));
    }
    cd->inverse_class.resize(cd->reps.size());
    for (std::size_t c = 0; c < cd->reps.size(); ++c)
      cd->inverse_class[c] = cd->el2class[table.index_of(cd->reps[c].inverse())];
    return cd;
  });
}

std::vector<std::uint32_t> class_histogram(const ClassData& classes, const Subgroup& s) {
  require(classes.group == s.parent(), errc::group_mismatch,
          "histogram requested against a foreign class list");
  std::vector<std::uint32_t> hist(classes.num_classes(), 0);
  for (auto idx : s.element_indices()) ++hist[classes.el2class[idx]];
  return hist;
}

// ---- normal subgroups ------------------------------------------------------

const NormalLattice& normal_subgroups(const GroupRef& g) {
  return *group_slot<NormalLattice>(*g, "normallattice", [&] {
    auto lat = std::make_shared<NormalLattice>();
    lat->group = g;
    const ClassData& cd = conjugacy_classes(g);
    const ElementTable& table = g->elements();

    std::vector<Subgroup> members;
    std::set<std::vector<std::int32_t>> seen;
    auto add = [&](const Subgroup& s) {
      if (seen.insert(s.element_indices()).second) {
        members.push_back(s);
        return true;
      }
      return false;
    };
    add(trivial_subgroup(g));
    add(full_subgroup(g));

    // seeds: normal closures of the cyclic groups over class representatives,
    // generated directly by the class elements
    std::vector<std::vector<std::int32_t>> class_elements(cd.num_classes());
    for (std::size_t i = 0; i < table.size(); ++i)
      class_elements[cd.el2class[i]].push_back((std::int32_t)i);
    for (int c = 1; c < cd.num_classes(); ++c)
      add(subgroup_generated_by_indices(g, class_elements[c]));

    // close under pairwise join until fixpoint
    bool changed = true;
    while (changed) {
      changed = false;
      std::size_t count = members.size();
      for (std::size_t i = 1; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j) {
          if (members[i].contains_subgroup(members[j]) ||
              members[j].contains_subgroup(members[i]))
            continue;
          std::vector<std::int32_t> merged = members[i].element_indices();
          const auto& other = members[j].element_indices();
          merged.insert(merged.end(), other.begin(), other.end());
          std::sort(merged.begin(), merged.end());
          if (add(subgroup_generated_by_indices(g, merged))) changed = true;
        }
    }

    for (const auto& m : members)
      require(m.is_normal(), errc::self_check_failed, "lattice member is not normal");

    std::sort(members.begin(), members.end(), [](const Subgroup& a, const Subgroup& b) {
      if (a.order() != b.order()) return a.order() < b.order();
      return a.element_indices() < b.element_indices();
    });
    lat->members = std::move(members);
    std::size_t k = lat->members.size();
    lat->leq.assign(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        lat->leq[i][j] = lat->members[j].contains_subgroup(lat->members[i]);
    return lat;
  });
}

// ---- quotients -------------------------------------------------------------

namespace {

struct CosetData {
  std::vector<std::int32_t> coset_of, coset_rep;
};

// Right cosets Nx; each coset is named by its least element and cosets are
// indexed in the order those least elements appear in the table.
CosetData build_cosets(const GroupRef& g, const Subgroup& n) {
  const ElementTable& table = g->elements();
  const auto& nidx = n.element_indices();
  CosetData cosets;
  cosets.coset_of.assign(table.size(), -1);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (cosets.coset_of[i] >= 0) continue;
    int c = (int)cosets.coset_rep.size();
    cosets.coset_rep.push_back((std::int32_t)i);
    for (auto a : nidx) {
      int idx = table.index_of(table.elems[a] * table.elems[i]);
      require(cosets.coset_of[idx] < 0, errc::self_check_failed, "coset assignment collision");
      cosets.coset_of[idx] = c;
    }
  }
  return cosets;
}

Perm project_by_cosets(const GroupRef& g, const CosetData& cosets, const Perm& x) {
  const ElementTable& table = g->elements();
  std::vector<std::int32_t> img(cosets.coset_rep.size());
  for (std::size_t c = 0; c < cosets.coset_rep.size(); ++c)
    img[c] = cosets.coset_of[table.index_of(table.elems[cosets.coset_rep[c]] * x)];
  return Perm(std::move(img));
}

}  // namespace

Perm QuotientGroup::project(const Perm& g) const {
  CosetData cosets{coset_of, coset_rep};
  return project_by_cosets(source, cosets, g);
}

const Perm& QuotientGroup::section(int coset) const {
  return source->elements().elems[coset_rep[coset]];
}

QuotientGroup quotient(const GroupRef& g, const Subgroup& n) {
  require(n.parent() == g, errc::group_mismatch, "kernel belongs to a different group");
  require(n.is_normal(), errc::not_normal, "quotient kernel is not normal");
  QuotientGroup q;
  q.source = g;
  q.kernel = n;
  CosetData cosets = build_cosets(g, n);
  q.coset_of = std::move(cosets.coset_of);
  q.coset_rep = std::move(cosets.coset_rep);
  CosetData view{q.coset_of, q.coset_rep};
  std::vector<Perm> gens;
  for (const auto& x : g->generators()) gens.push_back(project_by_cosets(g, view, x));
  q.group = group_from_generators(std::move(gens), (int)q.coset_rep.size());
  require(q.group->order() * n.order() == g->order(), errc::self_check_failed,
          "quotient order mismatch");
  return q;
}

// ---- characteristic subgroups ----------------------------------------------

Subgroup center(const GroupRef& g) {
  return *group_slot<Subgroup>(*g, "center", [&] {
    return std::make_shared<Subgroup>(centralizer(g, full_subgroup(g)));
  });
}

Subgroup derived_subgroup(const GroupRef& g) {
  return *group_slot<Subgroup>(*g, "derived", [&] {
    const ElementTable& table = g->elements();
    const ClassData& cd = conjugacy_classes(g);
    std::vector<std::vector<std::int32_t>> class_elements(cd.num_classes());
    for (std::size_t i = 0; i < table.size(); ++i)
      class_elements[cd.el2class[i]].push_back((std::int32_t)i);
    // normal closure of the generator commutators = subgroup generated by
    // their full conjugacy classes
    std::set<int> classes;
    for (const auto& a : g->generators())
      for (const auto& b : g->generators())
        classes.insert(cd.class_of(a.inverse() * b.inverse() * a * b));
    std::vector<std::int32_t> seed;
    for (int c : classes)
      seed.insert(seed.end(), class_elements[c].begin(), class_elements[c].end());
    std::sort(seed.begin(), seed.end());
    return std::make_shared<Subgroup>(subgroup_generated_by_indices(g, seed));
  });
}

bool is_perfect(const GroupRef& g) { return derived_subgroup(g).order() == g->order(); }

bool is_simple(const GroupRef& g) {
  return g->order() > 1 && normal_subgroups(g).members.size() == 2;
}

bool is_quasisimple(const GroupRef& g) {
  if (g->order() == 1 || !is_perfect(g)) return false;
  Subgroup z = center(g);
  if (z.order() == 1) return is_simple(g);
  return is_simple(quotient(g, z).group);
}

Subgroup sylow_subgroup(const GroupRef& g, std::uint64_t p) {
  std::uint64_t n = g->small_order();
  require(p >= 2 && n % p == 0, errc::prime_does_not_divide,
          "prime does not divide the group order");
  std::uint64_t target = p_part(n, p);
  const ElementTable& table = g->elements();
  Perm seed = g->identity();
  for (const auto& e : table.elems) {
    std::uint64_t o = e.order();
    if (o % p == 0) {
      seed = e.power((long long)(o / p_part(o, p)));
      break;
    }
  }
  Subgroup sylow(g, {seed});
  while (sylow.small_order() < target) {
    Subgroup norm = normalizer(g, sylow);
    bool extended = false;
    for (auto idx : norm.element_indices()) {
      const Perm& y = table.elems[idx];
      std::uint64_t o = y.order();
      if (o == 1 || p_part(o, p) != o) continue;
      if (sylow.contains_index(idx)) continue;
      std::vector<Perm> gens = sylow.generators();
      gens.push_back(y);
      sylow = Subgroup(g, std::move(gens));
      extended = true;
      break;
    }
    require(extended, errc::self_check_failed, "sylow ascent found no extending p-element");
  }
  return sylow;
}

Subgroup o_p(const GroupRef& g, std::uint64_t p) {
  std::uint64_t n = g->small_order();
  if (p < 2 || n % p != 0) return trivial_subgroup(g);
  Subgroup sylow = sylow_subgroup(g, p);
  const ClassData& cd = conjugacy_classes(g);
  std::vector<std::uint32_t> hist = class_histogram(cd, sylow);
  // the core of the Sylow subgroup: classes lying entirely inside it
  std::vector<std::int32_t> indices;
  for (std::size_t i = 0; i < g->elements().size(); ++i) {
    int c = cd.el2class[i];
    if (hist[c] == cd.sizes[c]) indices.push_back((std::int32_t)i);
  }
  return subgroup_from_indices(g, indices);
}

Subgroup fitting(const GroupRef& g) {
  return *group_slot<Subgroup>(*g, "fitting", [&] {
    Subgroup f = trivial_subgroup(g);
    for (auto p : prime_divisors(g->small_order())) {
      Subgroup op = o_p(g, p);
      if (op.order() > 1) f = f.order() == 1 ? op : join_subgroups(g, f, op);
    }
    require(f.is_normal() && is_nilpotent(f), errc::self_check_failed,
            "fitting candidate fails normality or nilpotency");
    // maximality among normal nilpotent subgroups, against the lattice
    for (const auto& m : normal_subgroups(g).members)
      if (is_nilpotent(m))
        require(f.contains_subgroup(m), errc::self_check_failed,
                "a normal nilpotent subgroup escapes the fitting subgroup");
    return std::make_shared<Subgroup>(f);
  });
}

namespace {

std::vector<std::vector<Perm>> components_of(
    const GroupRef& g, std::map<std::uint64_t, std::vector<std::vector<Perm>>>& memo) {
  std::uint64_t key = group_key(g);
  auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;

  std::vector<std::vector<Perm>> result;
  if (g->order() > 1 && is_quasisimple(g)) {
    result.push_back(g->generators());
  } else if (g->order() > 1) {
    std::set<std::uint64_t> seen;
    for (const auto& n : normal_subgroups(g).members) {
      if (n.order() == 1 || n.order() == g->order()) continue;
      for (const auto& compgens : components_of(n.group(), memo)) {
        Subgroup comp(g, compgens);
        if (seen.insert(group_key(comp.group())).second) result.push_back(compgens);
      }
    }
  }
  memo[key] = result;
  return result;
}

}  // namespace

std::vector<Subgroup> components(const GroupRef& g) {
  auto lists = group_slot<std::vector<std::vector<Perm>>>(*g, "components", [&] {
    std::map<std::uint64_t, std::vector<std::vector<Perm>>> memo;
    return std::make_shared<std::vector<std::vector<Perm>>>(components_of(g, memo));
  });
  std::vector<Subgroup> out;
  for (const auto& gens : *lists) out.push_back(Subgroup(g, gens));
  return out;
}

Subgroup layer(const GroupRef& g) {
  Subgroup e = trivial_subgroup(g);
  for (const auto& c : components(g)) e = e.order() == 1 ? c : join_subgroups(g, e, c);
  return e;
}

Subgroup generalized_fitting(const GroupRef& g) {
  return *group_slot<Subgroup>(*g, "fstar", [&] {
    Subgroup f = fitting(g);
    Subgroup e = layer(g);
    Subgroup fstar = f;
    if (e.order() > 1) fstar = f.order() == 1 ? e : join_subgroups(g, f, e);
    // fundamental property: F*(G) contains its own centralizer
    Subgroup c = centralizer(g, fstar);
    require(fstar.contains_subgroup(c), errc::self_check_failed,
            "C_G(F*(G)) is not contained in F*(G)");
    return std::make_shared<Subgroup>(fstar);
  });
}

bool is_nilpotent_group(const GroupRef& g) {
  std::uint64_t n = g->small_order();
  if (n == 1) return true;
  // nilpotent iff every Sylow subgroup is normal iff, for each prime p, the
  // p-elements number exactly the p-part of the order
  std::map<std::uint64_t, std::uint64_t> count;
  for (const auto& e : g->elements().elems) {
    std::uint64_t o = e.order();
    if (o == 1) continue;
    auto ps = prime_divisors(o);
    if (ps.size() == 1) ++count[ps[0]];
  }
  for (auto p : prime_divisors(n))
    if (count[p] != p_part(n, p) - 1) return false;
  return true;
}

bool is_nilpotent(const Subgroup& s) { return is_nilpotent_group(s.group()); }

// ---- p-subgroup classes ------------------------------------------------------

namespace {

// Conjugacy-class bookkeeping for batches of subgroups: exact-set dedup, then
// a class-histogram fingerprint, then a conjugating-element scan.
struct SubgroupClassifier {
  const GroupRef& g;
  const ClassData& cd;
  std::vector<Subgroup> reps;
  std::vector<std::vector<std::uint32_t>> fingerprints;
  std::set<std::uint64_t> exact_sets;

  explicit SubgroupClassifier(const GroupRef& group) : g(group), cd(conjugacy_classes(group)) {}

  bool add(const Subgroup& cand) {
    if (!exact_sets.insert(index_set_hash(cand.element_indices())).second) return false;
    auto fp = class_histogram(cd, cand);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (reps[i].order() != cand.order() || fingerprints[i] != fp) continue;
      if (are_conjugate_subgroups(g, cand, reps[i]).has_value()) return false;
    }
    reps.push_back(cand);
    fingerprints.push_back(std::move(fp));
    return true;
  }
};

}  // namespace

std::vector<Subgroup> p_subgroup_classes(const GroupRef& g, std::uint64_t p) {
  std::string key = "psub:" + std::to_string(p);
  auto lists = group_slot<std::vector<std::vector<Perm>>>(*g, key, [&] {
    auto out = std::make_shared<std::vector<std::vector<Perm>>>();
    std::uint64_t gp = p_part(g->small_order(), p);
    if (gp == 1) return out;
    const ClassData& cd = conjugacy_classes(g);
    const ElementTable& table = g->elements();

    std::vector<Subgroup> result;
    std::vector<Subgroup> level;
    {
      SubgroupClassifier classes(g);
      for (int c = 0; c < cd.num_classes(); ++c) {
        if (cd.rep_orders[c] != p) continue;
        Subgroup cand(g, {cd.reps[c]});
        if (classes.add(cand)) level.push_back(cand);
      }
    }
    std::uint64_t level_order = p;
    while (!level.empty()) {
      result.insert(result.end(), level.begin(), level.end());
      if (level_order == gp) break;
      SubgroupClassifier next_classes(g);
      std::vector<Subgroup> next;
      for (const auto& sub : level) {
        Subgroup norm = normalizer(g, sub);
        for (auto idx : norm.element_indices()) {
          const Perm& y = table.elems[idx];
          std::uint64_t o = y.order();
          if (o == 1 || p_part(o, p) != o) continue;
          if (sub.contains_index(idx)) continue;
          if (!sub.group()->contains(y.power((long long)p))) continue;
          std::vector<Perm> gens = sub.generators();
          gens.push_back(y);
          Subgroup cand(g, std::move(gens));
          require(cand.small_order() == level_order * p, errc::self_check_failed,
                  "p-subgroup extension has unexpected order");
          if (next_classes.add(cand)) next.push_back(cand);
        }
      }
      level = std::move(next);
      level_order *= p;
    }
    for (const auto& sub : result) out->push_back(sub.generators());
    return out;
  });
  std::vector<Subgroup> out;
  for (const auto& gens : *lists) out.push_back(Subgroup(g, gens));
  return out;
}

// ---- maximal nilpotent machinery ---------------------------------------------

namespace {

struct NilpotentSearch {
  std::vector<std::uint64_t> primes;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::pair<std::uint64_t, std::vector<Perm>>>
      best_memo;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::vector<Perm>>> collect_memo;
  std::mutex mutex;

  // best(C, mask): the largest nilpotent subgroup of C with prime support
  // inside mask, via Y = P x (rest), rest <= C_C(P).
  std::pair<std::uint64_t, std::vector<Perm>> best(const GroupRef& c, std::uint64_t mask) {
    if (mask == 0 || c->order() == 1) return {1, {}};
    auto key = std::make_pair(group_key(c), mask);
    {
      auto hit = best_memo.find(key);
      if (hit != best_memo.end()) return hit->second;
    }
    std::pair<std::uint64_t, std::vector<Perm>> result{1, {}};
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
      if (!(mask >> pi & 1)) continue;
      std::uint64_t rest = mask & ~(1ULL << pi);
      auto skip = best(c, rest);
      if (skip.first > result.first) result = skip;
      if (c->small_order() % primes[pi] != 0) continue;
      for (const auto& psub : p_subgroup_classes(c, primes[pi])) {
        Subgroup central = centralizer(c, psub);
        auto sub = best(central.group(), rest);
        std::uint64_t total = psub.small_order() * sub.first;
        if (total > result.first) {
          std::vector<Perm> gens = psub.generators();
          gens.insert(gens.end(), sub.second.begin(), sub.second.end());
          result = {total, std::move(gens)};
        }
      }
    }
    best_memo[key] = result;
    return result;
  }

  // Terminal greedy nilpotent subgroups of C (generator lists), deduplicated
  // by element set and pruned by strict containment.
  std::vector<std::vector<Perm>> collect(const GroupRef& c, std::uint64_t mask) {
    auto key = std::make_pair(group_key(c), mask);
    {
      auto hit = collect_memo.find(key);
      if (hit != collect_memo.end()) return hit->second;
    }
    std::vector<std::vector<Perm>> raw;
    if (mask != 0 && c->order() > 1) {
      for (std::size_t pi = 0; pi < primes.size(); ++pi) {
        if (!(mask >> pi & 1)) continue;
        if (c->small_order() % primes[pi] != 0) continue;
        std::uint64_t rest = mask & ~(1ULL << pi);
        for (const auto& psub : p_subgroup_classes(c, primes[pi])) {
          Subgroup central = centralizer(c, psub);
          for (const auto& tail : collect(central.group(), rest)) {
            std::vector<Perm> gens = psub.generators();
            gens.insert(gens.end(), tail.begin(), tail.end());
            raw.push_back(std::move(gens));
          }
        }
      }
    }
    if (raw.empty()) raw.push_back({});
    std::vector<Subgroup> subs;
    std::set<std::uint64_t> seen;
    for (const auto& gens : raw) {
      Subgroup s(c, gens);
      if (seen.insert(index_set_hash(s.element_indices())).second) subs.push_back(s);
    }
    std::vector<std::vector<Perm>> result;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      bool contained = false;
      for (std::size_t j = 0; j < subs.size() && !contained; ++j)
        if (i != j && subs[j].order() > subs[i].order() && subs[j].contains_subgroup(subs[i]))
          contained = true;
      if (!contained) result.push_back(subs[i].generators());
    }
    collect_memo[key] = result;
    return result;
  }
};

NilpotentSearch& nilpotent_search(const GroupRef& g) {
  auto ctx = group_slot<NilpotentSearch>(*g, "nilsearch", [&] {
    auto s = std::make_shared<NilpotentSearch>();
    s->primes = prime_divisors(g->small_order());
    return s;
  });
  return *ctx;
}

}  // namespace

MaxNilpotentResult max_nilpotent_order(const GroupRef& g) {
  auto cached = group_slot<MaxNilpotentResult>(*g, "maxnilpotent", [&] {
    NilpotentSearch& search = nilpotent_search(g);
    std::lock_guard<std::mutex> lock(search.mutex);
    std::uint64_t mask = (1ULL << search.primes.size()) - 1;
    auto [order, gens] = search.best(g, mask);
    auto result = std::make_shared<MaxNilpotentResult>();
    result->order = order;
    result->witness = Subgroup(g, gens);
    require(result->witness.small_order() == order && is_nilpotent(result->witness),
            errc::self_check_failed, "maximal nilpotent witness fails verification");
    return result;
  });
  return *cached;
}

MaxNilpotentResult max_nilpotent_order(const GroupRef& g, const Subgroup& restrict_to) {
  auto inner = max_nilpotent_order(restrict_to.group());
  MaxNilpotentResult out;
  out.order = inner.order;
  out.witness = Subgroup(g, inner.witness.generators());
  return out;
}

std::vector<Subgroup> maximal_nilpotent_classes(const GroupRef& g) {
  auto lists = group_slot<std::vector<std::vector<Perm>>>(*g, "maxnilclasses", [&] {
    NilpotentSearch& search = nilpotent_search(g);
    std::lock_guard<std::mutex> lock(search.mutex);
    std::uint64_t mask = (1ULL << search.primes.size()) - 1;
    auto raw = search.collect(g, mask);

    const ClassData& cd = conjugacy_classes(g);
    std::vector<Subgroup> subs;
    std::vector<std::vector<std::uint32_t>> fps;
    std::set<std::uint64_t> seen;
    for (const auto& gens : raw) {
      Subgroup s(g, gens);
      if (!seen.insert(index_set_hash(s.element_indices())).second) continue;
      subs.push_back(s);
      fps.push_back(class_histogram(cd, s));
    }
    std::vector<Subgroup> classes;
    std::vector<std::vector<std::uint32_t>> class_fps;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      bool dup = false;
      for (std::size_t j = 0; j < classes.size() && !dup; ++j)
        if (classes[j].order() == subs[i].order() && class_fps[j] == fps[i] &&
            are_conjugate_subgroups(g, subs[i], classes[j]).has_value())
          dup = true;
      if (!dup) {
        classes.push_back(subs[i]);
        class_fps.push_back(fps[i]);
      }
    }
    auto fp_leq = [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
      for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
      return true;
    };
    std::vector<Subgroup> kept;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      bool contained = false;
      for (std::size_t j = 0; j < classes.size() && !contained; ++j) {
        if (i == j) continue;
        if (classes[j].order() <= classes[i].order()) continue;
        if (classes[j].small_order() % classes[i].small_order() != 0) continue;
        if (!fp_leq(class_fps[i], class_fps[j])) continue;
        if (conjugate_into(g, classes[i], classes[j])) contained = true;
      }
      if (!contained) kept.push_back(classes[i]);
    }
    std::sort(kept.begin(), kept.end(), [](const Subgroup& a, const Subgroup& b) {
      if (a.order() != b.order()) return a.order() < b.order();
      return a.element_indices() < b.element_indices();
    });
    auto out = std::make_shared<std::vector<std::vector<Perm>>>();
    for (const auto& s : kept) {
      require(is_nilpotent(s), errc::self_check_failed, "collected witness is not nilpotent");
      out->push_back(s.generators());
    }
    return out;
  });
  std::vector<Subgroup> out;
  for (const auto& gens : *lists) out.push_back(Subgroup(g, gens));
  return out;
}

// ---- central products --------------------------------------------------------

Perm CentralProduct::embed_factor(int i, const Perm& x) const {
  int total = direct->degree();
  std::vector<std::int32_t> img(total);
  std::iota(img.begin(), img.end(), 0);
  for (int pt = 0; pt < x.degree(); ++pt) img[offsets[i] + pt] = offsets[i] + x[pt];
  return Perm(std::move(img));
}

Perm CentralProduct::factor_component(int i, const Perm& d) const {
  int deg = spec.factors[i]->degree();
  std::vector<std::int32_t> img(deg);
  for (int pt = 0; pt < deg; ++pt) img[pt] = d[offsets[i] + pt] - offsets[i];
  return Perm(std::move(img));
}

Perm CentralProduct::project(const Perm& d) const {
  CosetData view{coset_of, coset_rep};
  return project_by_cosets(direct, view, d);
}

const Perm& CentralProduct::section(int coset) const {
  return direct->elements().elems[coset_rep[coset]];
}

Perm CentralProduct::embed_to_product(int i, const Perm& x) const {
  return project(embed_factor(i, x));
}

CentralProduct central_product(const CentralProductSpec& spec) {
  std::size_t n = spec.factors.size();
  require(n >= 1, errc::spec_invalid, "central product needs at least one factor");
  require(spec.z_gens.size() == n, errc::spec_invalid,
          "central subgroup generators must be given for every factor");
  for (std::size_t i = 1; i < n; ++i)
    require(spec.z_gens[i].size() == spec.z_gens[0].size(), errc::spec_invalid,
            "identification maps must list an image per Z generator");

  CentralProduct cp;
  cp.spec = spec;
  int total = 0;
  for (const auto& f : spec.factors) {
    cp.offsets.push_back(total);
    total += f->degree();
  }
  std::vector<Perm> direct_gens;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& gen : spec.factors[i]->generators()) {
      std::vector<std::int32_t> img(total);
      std::iota(img.begin(), img.end(), 0);
      for (int pt = 0; pt < gen.degree(); ++pt) img[cp.offsets[i] + pt] = cp.offsets[i] + gen[pt];
      direct_gens.push_back(Perm(std::move(img)));
    }
  cp.direct = group_from_generators(direct_gens, total);
  Integer expect = 1;
  for (const auto& f : spec.factors) expect *= f->order();
  require(cp.direct->order() == expect, errc::self_check_failed, "direct product order mismatch");

  for (std::size_t i = 0; i < n; ++i)
    for (const auto& z : spec.z_gens[i]) {
      require(spec.factors[i]->contains(z), errc::spec_invalid,
              "central generator lies outside its factor");
      for (const auto& gen : spec.factors[i]->generators())
        require(z * gen == gen * z, errc::spec_invalid,
                "designated subgroup is not central in its factor");
    }
  auto z1 = group_from_generators(spec.z_gens[0], spec.factors[0]->degree());
  for (std::size_t i = 1; i < n; ++i) {
    auto zi = group_from_generators(spec.z_gens[i], spec.factors[i]->degree());
    require(zi->order() == z1->order(), errc::spec_invalid,
            "designated central subgroups have different orders");
    // the graph of the generator map has order |Z_1| iff the map extends to
    // an isomorphism
    std::vector<Perm> graph_gens;
    for (std::size_t t = 0; t < spec.z_gens[0].size(); ++t)
      graph_gens.push_back(cp.embed_factor(0, spec.z_gens[0][t]) *
                           cp.embed_factor((int)i, spec.z_gens[i][t]));
    auto graph = group_from_generators(graph_gens, total);
    require(graph->order() == z1->order(), errc::spec_invalid,
            "generator images do not define an isomorphism of the central subgroups");
  }

  // glue subgroup A: aligned central tuples with trivial product
  std::vector<Perm> glue_gens;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t t = 0; t < spec.z_gens[0].size(); ++t)
      glue_gens.push_back(cp.embed_factor(0, spec.z_gens[0][t]) *
                          cp.embed_factor((int)i, spec.z_gens[i][t].inverse()));
  cp.glue = Subgroup(cp.direct, glue_gens);
  Integer glue_expect = 1;
  for (std::size_t i = 1; i < n; ++i) glue_expect *= z1->order();
  require(cp.glue.order() == glue_expect, errc::self_check_failed,
          "glue subgroup has unexpected order");

  CosetData cosets = build_cosets(cp.direct, cp.glue);
  cp.coset_of = std::move(cosets.coset_of);
  cp.coset_rep = std::move(cosets.coset_rep);
  std::vector<Perm> egens;
  for (const auto& d : direct_gens) egens.push_back(cp.project(d));
  cp.group = group_from_generators(egens, (int)cp.coset_rep.size());
  require(cp.group->order() * cp.glue.order() == cp.direct->order(), errc::self_check_failed,
          "central product order mismatch");

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Perm> im;
    for (const auto& gen : spec.factors[i]->generators())
      im.push_back(cp.embed_to_product((int)i, gen));
    cp.embeddings.push_back(Subgroup(cp.group, im));
    require(cp.embeddings[i].order() == spec.factors[i]->order(), errc::self_check_failed,
            "factor embedding is not injective");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (const auto& a : cp.embeddings[i].generators())
        for (const auto& b : cp.embeddings[j].generators())
          require(a * b == b * a, errc::self_check_failed, "embedded factors do not commute");

  std::vector<Perm> zim;
  for (const auto& z : spec.z_gens[0]) zim.push_back(cp.embed_to_product(0, z));
  cp.amalgamated_center = Subgroup(cp.group, zim);
  require(cp.amalgamated_center.order() == z1->order(), errc::self_check_failed,
          "amalgamated center embedding is not injective");
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t t = 0; t < spec.z_gens[0].size(); ++t)
      require(cp.embed_to_product((int)i, spec.z_gens[i][t]) ==
                  cp.embed_to_product(0, spec.z_gens[0][t]),
              errc::self_check_failed, "identified central generators differ in the product");
  if (n >= 2) {
    for (std::size_t i = 0; i < n; ++i) {
      Subgroup rest = trivial_subgroup(cp.group);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i)
          rest = rest.order() == 1 ? cp.embeddings[j]
                                   : join_subgroups(cp.group, rest, cp.embeddings[j]);
      require(
          intersect_subgroups(cp.group, cp.embeddings[i], rest).same_as(cp.amalgamated_center),
          errc::self_check_failed, "factor intersection is not the amalgamated center");
    }
  }
  return cp;
}

}  // namespace fgchar
