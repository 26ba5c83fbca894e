#include "fgchar/permgroup.hpp"

#include <algorithm>
#include <functional>

#include "fgchar/error.hpp"

namespace fgchar {

namespace {

// Explicit transversals are kept while orbit*degree stays below this many
// entries; beyond that the Schreier tree is walked on demand.
constexpr std::size_t kExplicitTransversalCap = 2000000;

int first_moved_point(const Perm& g) {
  for (int i = 0; i < g.degree(); ++i)
    if (g[i] != i) return i;
  return -1;
}

}  // namespace

Perm ChainLevel::rep(int point, int degree) const {
  if (explicit_transversal) return transversal[where[point]];
  // walk the Schreier tree back to the base, then compose forward
  std::vector<int> path_gens;
  for (int p = point; p != base; p = tree_parent[p]) path_gens.push_back(tree_gen[p]);
  Perm u(degree);
  for (auto it = path_gens.rbegin(); it != path_gens.rend(); ++it) u = u * gens[*it];
  return u;
}

int ElementTable::index_of(const Perm& p) const {
  auto it = by_hash.find(p.hash());
  if (it == by_hash.end()) return -1;
  for (auto idx : it->second)
    if (elems[idx] == p) return idx;
  return -1;
}

GroupRef PermGroup::from_generators(std::vector<Perm> gens, int degree) {
  if (degree < 0) {
    require(!gens.empty(), errc::spec_invalid, "degree required for an empty generator list");
    degree = gens[0].degree();
  }
  std::vector<Perm> clean;
  for (auto& g : gens) {
    require(g.degree() == degree, errc::dimension_mismatch, "generator degrees differ");
    if (g.is_identity()) continue;
    if (std::find(clean.begin(), clean.end(), g) == clean.end()) clean.push_back(std::move(g));
  }
  auto group = std::shared_ptr<PermGroup>(new PermGroup());
  group->degree_ = degree;
  group->gens_ = std::move(clean);
  group->build_chain();
  return group;
}

void PermGroup::build_chain() {
  order_ = 1;
  if (gens_.empty()) return;

  auto rebuild_orbit = [&](ChainLevel& level) {
    level.where.assign(degree_, -1);
    level.tree_parent.assign(degree_, -1);
    level.tree_gen.assign(degree_, -1);
    level.orbit.clear();
    level.transversal.clear();
    level.orbit.push_back(level.base);
    level.where[level.base] = 0;
    for (std::size_t qi = 0; qi < level.orbit.size(); ++qi) {
      int p = level.orbit[qi];
      for (std::size_t gi = 0; gi < level.gens.size(); ++gi) {
        int q = level.gens[gi][p];
        if (level.where[q] < 0) {
          level.where[q] = (int)level.orbit.size();
          level.orbit.push_back(q);
          level.tree_parent[q] = p;
          level.tree_gen[q] = (int)gi;
        }
      }
    }
    level.explicit_transversal =
        level.orbit.size() * (std::size_t)degree_ <= kExplicitTransversalCap;
    if (level.explicit_transversal) {
      level.transversal.resize(level.orbit.size());
      level.transversal[0] = Perm(degree_);
      for (std::size_t qi = 1; qi < level.orbit.size(); ++qi) {
        int q = level.orbit[qi];
        level.transversal[qi] =
            level.transversal[level.where[level.tree_parent[q]]] * level.gens[level.tree_gen[q]];
      }
    }
  };

  // sift from a given level; returns residue and how far it got
  auto sift_from = [&](std::size_t start, Perm g, std::size_t* stopped) {
    std::size_t i = start;
    for (; i < chain_.size(); ++i) {
      const ChainLevel& level = chain_[i];
      int p = g[level.base];
      if (p == level.base) continue;
      if (level.where[p] < 0) break;
      g = g * level.rep(p, degree_).inverse();
    }
    *stopped = i;
    return g;
  };

  // Adds h to the generator list of every level whose base prefix it fixes
  // (lists stay cumulative: deeper lists are subsets of shallower ones), then
  // rebuilds the touched orbits. Returns the deepest level h joined.
  auto add_gen = [&](const Perm& h) -> std::size_t {
    std::size_t m = 0;
    while (m < chain_.size() && h[chain_[m].base] == chain_[m].base) ++m;
    if (m == chain_.size()) {
      ChainLevel level;
      level.base = first_moved_point(h);
      chain_.push_back(std::move(level));
    }
    for (std::size_t l = 0; l <= m; ++l) chain_[l].gens.push_back(h);
    for (std::size_t l = 0; l <= m; ++l) rebuild_orbit(chain_[l]);
    return m;
  };

  for (const auto& g : gens_) add_gen(g);

  // Bottom-up Schreier-Sims: a level is verified once all its Schreier
  // generators sift to the identity through the deeper levels; a failed sift
  // adjoins the residue as a new strong generator and restarts verification
  // at the deepest level it joined.
  long i = (long)chain_.size() - 1;
  while (i >= 0) {
    bool clean = true;
    for (std::size_t qi = 0; clean && qi < chain_[i].orbit.size(); ++qi) {
      int p = chain_[i].orbit[qi];
      Perm up = chain_[i].rep(p, degree_);
      for (std::size_t gi = 0; clean && gi < chain_[i].gens.size(); ++gi) {
        Perm g = chain_[i].gens[gi];
        Perm s = up * g * chain_[i].rep(g[p], degree_).inverse();
        if (s.is_identity()) continue;
        std::size_t stopped = 0;
        Perm residue = sift_from((std::size_t)i + 1, s, &stopped);
        if (!residue.is_identity()) {
          i = (long)add_gen(residue);
          clean = false;
        }
      }
    }
    if (clean) --i;
  }

  order_ = 1;
  base_.clear();
  for (const auto& level : chain_) {
    order_ *= (std::uint64_t)level.orbit.size();
    base_.push_back(level.base);
  }
}

std::uint64_t PermGroup::small_order() const {
  require(order_ <= Integer(kElementTableCap), errc::order_too_large,
          "group order exceeds the element-table cap");
  return (std::uint64_t)order_;
}

Perm PermGroup::sift(const Perm& g, int* levels_consumed) const {
  Perm residue = g;
  int consumed = 0;
  for (const auto& level : chain_) {
    int p = residue[level.base];
    if (p != level.base) {
      if (level.where[p] < 0) break;
      residue = residue * level.rep(p, degree_).inverse();
    }
    ++consumed;
  }
  if (levels_consumed) *levels_consumed = consumed;
  return residue;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  int consumed = 0;
  Perm residue = sift(g, &consumed);
  return consumed == (int)chain_.size() && residue.is_identity();
}

bool PermGroup::has_element_table() const { return order_ <= Integer(kElementTableCap); }

const ElementTable& PermGroup::elements() const {
  std::lock_guard<std::mutex> lock(elements_mutex_);
  if (elements_) return *elements_;
  require(has_element_table(), errc::order_too_large,
          "element table requested for a group of order > 10^6");
  auto table = std::make_shared<ElementTable>();
  std::uint64_t n = (std::uint64_t)order_;
  table->elems.reserve(n);
  table->elems.push_back(Perm(degree_));
  table->by_hash[table->elems[0].hash()].push_back(0);
  // breadth-first closure over generator words
  for (std::size_t qi = 0; qi < table->elems.size(); ++qi) {
    for (const auto& g : gens_) {
      Perm y = table->elems[qi] * g;
      std::uint64_t h = y.hash();
      auto& bucket = table->by_hash[h];
      bool known = false;
      for (auto idx : bucket)
        if (table->elems[idx] == y) {
          known = true;
          break;
        }
      if (!known) {
        bucket.push_back((std::int32_t)table->elems.size());
        table->elems.push_back(std::move(y));
      }
    }
  }
  require(table->elems.size() == n, errc::self_check_failed,
          "element closure disagrees with the stabilizer chain order");
  std::sort(table->elems.begin(), table->elems.end());
  table->by_hash.clear();
  for (std::size_t i = 0; i < table->elems.size(); ++i)
    table->by_hash[table->elems[i].hash()].push_back((std::int32_t)i);
  elements_ = table;
  return *elements_;
}

// ---- Subgroup ------------------------------------------------------------

struct Subgroup::Data {
  std::mutex mutex;
  std::vector<std::int32_t> indices;
  std::vector<std::uint64_t> bits;
  bool have_indices = false;
};

Subgroup::Subgroup(GroupRef parent, std::vector<Perm> gens)
    : parent_(std::move(parent)), data_(std::make_shared<Data>()) {
  for (const auto& g : gens)
    require(parent_->contains(g), errc::spec_invalid,
            "subgroup generator is not a member of the parent group");
  group_ = PermGroup::from_generators(std::move(gens), parent_->degree());
  require(parent_->order() % group_->order() == 0, errc::self_check_failed,
          "subgroup order does not divide the parent order");
}

Subgroup Subgroup::whole(const GroupRef& g) {
  Subgroup s;
  s.parent_ = g;
  s.group_ = g;
  s.data_ = std::make_shared<Data>();
  return s;
}

const std::vector<std::int32_t>& Subgroup::element_indices() const {
  std::lock_guard<std::mutex> lock(data_->mutex);
  if (data_->have_indices) return data_->indices;
  const ElementTable& table = parent_->elements();
  std::uint64_t n = group_->small_order();
  std::vector<std::int32_t> found;
  std::vector<std::uint64_t> bits((table.size() + 63) / 64, 0);
  int id_idx = table.index_of(parent_->identity());
  found.push_back(id_idx);
  bits[id_idx >> 6] |= 1ULL << (id_idx & 63);
  for (std::size_t qi = 0; qi < found.size(); ++qi) {
    for (const auto& g : group_->generators()) {
      Perm y = table.elems[found[qi]] * g;
      int idx = table.index_of(y);
      require(idx >= 0, errc::self_check_failed, "subgroup element missing from parent table");
      if (!(bits[idx >> 6] & (1ULL << (idx & 63)))) {
        bits[idx >> 6] |= 1ULL << (idx & 63);
        found.push_back(idx);
      }
    }
  }
  require(found.size() == n, errc::self_check_failed,
          "subgroup closure disagrees with its chain order");
  std::sort(found.begin(), found.end());
  data_->indices = std::move(found);
  data_->bits = std::move(bits);
  data_->have_indices = true;
  return data_->indices;
}

const std::vector<std::uint64_t>& Subgroup::bits() const {
  element_indices();
  return data_->bits;
}

bool Subgroup::contains_index(std::int32_t idx) const {
  const auto& b = bits();
  return (b[idx >> 6] >> (idx & 63)) & 1;
}

bool Subgroup::same_as(const Subgroup& other) const {
  if (group_->order() != other.group_->order()) return false;
  for (const auto& g : group_->generators())
    if (!other.group_->contains(g)) return false;
  return true;
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  if (group_->order() % other.group_->order() != 0) return false;
  for (const auto& g : other.group_->generators())
    if (!group_->contains(g)) return false;
  return true;
}

bool Subgroup::is_normal() const {
  for (const auto& g : parent_->generators())
    for (const auto& s : group_->generators())
      if (!group_->contains(s.conjugated_by(g))) return false;
  return true;
}

// ---- free operations -----------------------------------------------------

GroupRef group_from_generators(std::vector<Perm> gens, int degree) {
  return PermGroup::from_generators(std::move(gens), degree);
}

std::uint64_t order_of(const Perm& g) { return g.order(); }

bool is_member(const GroupRef& g, const Perm& p) { return g->contains(p); }

const ElementTable& enumerate_elements(const GroupRef& g) { return g->elements(); }

Subgroup full_subgroup(const GroupRef& g) { return Subgroup::whole(g); }

Subgroup trivial_subgroup(const GroupRef& g) { return Subgroup(g, {}); }

Subgroup subgroup_from_indices(const GroupRef& g, const std::vector<std::int32_t>& indices) {
  const ElementTable& table = g->elements();
  // greedy small generating set: scan in canonical order, keep elements that
  // enlarge the running closure
  std::vector<std::uint64_t> closed((table.size() + 63) / 64, 0);
  std::vector<std::int32_t> closure;
  auto in_closure = [&](int idx) { return (closed[idx >> 6] >> (idx & 63)) & 1; };
  auto close_over = [&](const std::vector<Perm>& gens) {
    for (std::size_t qi = 0; qi < closure.size(); ++qi)
      for (const auto& gen : gens) {
        int idx = table.index_of(table.elems[closure[qi]] * gen);
        if (!in_closure(idx)) {
          closed[idx >> 6] |= 1ULL << (idx & 63);
          closure.push_back(idx);
        }
      }
  };
  int id_idx = table.index_of(g->identity());
  closure.push_back(id_idx);
  closed[id_idx >> 6] |= 1ULL << (id_idx & 63);
  std::vector<Perm> gens;
  for (auto idx : indices) {
    if (in_closure(idx)) continue;
    gens.push_back(table.elems[idx]);
    closed[idx >> 6] |= 1ULL << (idx & 63);
    closure.push_back(idx);
    close_over(gens);
  }
  Subgroup s(g, gens);
  require(s.order() == Integer(indices.size()), errc::self_check_failed,
          "index set is not closed under multiplication");
  return s;
}

Subgroup centralizer(const GroupRef& g, const Perm& x) {
  const ElementTable& table = g->elements();
  std::vector<std::int32_t> found;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table.elems[i] * x == x * table.elems[i]) found.push_back((std::int32_t)i);
  return subgroup_from_indices(g, found);
}

Subgroup centralizer(const GroupRef& g, const Subgroup& s) {
  const ElementTable& table = g->elements();
  std::vector<std::int32_t> found;
  for (std::size_t i = 0; i < table.size(); ++i) {
    bool ok = true;
    for (const auto& x : s.generators())
      if (!(table.elems[i] * x == x * table.elems[i])) {
        ok = false;
        break;
      }
    if (ok) found.push_back((std::int32_t)i);
  }
  return subgroup_from_indices(g, found);
}

Subgroup normalizer(const GroupRef& g, const Subgroup& s) {
  const ElementTable& table = g->elements();
  s.bits();
  std::vector<std::int32_t> found;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Perm& x = table.elems[i];
    bool ok = true;
    for (const auto& gen : s.generators()) {
      int idx = table.index_of(gen.conjugated_by(x));
      if (idx < 0 || !s.contains_index(idx)) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back((std::int32_t)i);
  }
  return subgroup_from_indices(g, found);
}

std::optional<Perm> are_conjugate_subgroups(const GroupRef& g, const Subgroup& a,
                                            const Subgroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  const ElementTable& table = g->elements();
  b.bits();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Perm& x = table.elems[i];
    bool ok = true;
    for (const auto& gen : a.generators()) {
      int idx = table.index_of(gen.conjugated_by(x));
      if (idx < 0 || !b.contains_index(idx)) {
        ok = false;
        break;
      }
    }
    if (ok) return x;
  }
  return std::nullopt;
}

bool conjugate_into(const GroupRef& g, const Subgroup& a, const Subgroup& b) {
  if (b.order() % a.order() != 0) return false;
  const ElementTable& table = g->elements();
  b.bits();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Perm& x = table.elems[i];
    bool ok = true;
    for (const auto& gen : a.generators()) {
      int idx = table.index_of(gen.conjugated_by(x));
      if (idx < 0 || !b.contains_index(idx)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

Subgroup normal_closure(const GroupRef& g, const Subgroup& inside, const Subgroup& s) {
  std::vector<Perm> gens = s.generators();
  auto closure = PermGroup::from_generators(gens, g->degree());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Perm> fresh;
    for (const auto& k : gens)
      for (const auto& n : inside.generators()) {
        Perm c = k.conjugated_by(n);
        if (!closure->contains(c)) fresh.push_back(c);
      }
    if (!fresh.empty()) {
      for (auto& c : fresh) gens.push_back(std::move(c));
      closure = PermGroup::from_generators(gens, g->degree());
      changed = true;
    }
  }
  return Subgroup(g, gens);
}

std::optional<int> subnormal_depth(const GroupRef& g, const Subgroup& s) {
  Subgroup current = full_subgroup(g);
  if (current.same_as(s)) return 0;
  for (int depth = 1;; ++depth) {
    Subgroup next = normal_closure(g, current, s);
    if (next.order() == s.order()) return depth;
    if (next.order() == current.order()) return std::nullopt;
    current = next;
  }
}

Subgroup conjugated_subgroup(const GroupRef& g, const Subgroup& s, const Perm& x) {
  std::vector<Perm> gens;
  gens.reserve(s.generators().size());
  for (const auto& gen : s.generators()) gens.push_back(gen.conjugated_by(x));
  return Subgroup(g, std::move(gens));
}

Subgroup join_subgroups(const GroupRef& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Perm> gens = a.generators();
  for (const auto& x : b.generators()) gens.push_back(x);
  return Subgroup(g, std::move(gens));
}

Subgroup intersect_subgroups(const GroupRef& g, const Subgroup& a, const Subgroup& b) {
  const auto& ai = a.element_indices();
  b.bits();
  std::vector<std::int32_t> indices;
  for (auto idx : ai)
    if (b.contains_index(idx)) indices.push_back(idx);
  return subgroup_from_indices(g, indices);
}

}  // namespace fgchar
