#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fgchar/permgroup.hpp"

namespace fgchar {

/// Conjugacy classes of a group with an element table. Class 0 is the
/// identity class; representatives are the lexicographically least elements
/// of their classes.
struct ClassData {
  GroupRef group;
  std::vector<Perm> reps;
  std::vector<std::int32_t> rep_index;     // index of each rep in the element table
  std::vector<std::uint32_t> sizes;
  std::vector<std::int32_t> el2class;      // element index -> class index
  std::vector<std::uint64_t> rep_orders;
  std::uint64_t exponent = 1;
  std::vector<std::uint64_t> primes;                    // prime divisors of the exponent
  std::vector<std::vector<std::int32_t>> power_maps;    // per prime: class of rep^p
  std::vector<std::int32_t> inverse_class;

  int num_classes() const { return (int)reps.size(); }
  int class_of(const Perm& g) const;
  /// Class of rep_i^e for any integer e.
  int class_of_power(int cls, std::uint64_t e) const;
};

const ClassData& conjugacy_classes(const GroupRef& g);

/// Counts, per conjugacy class of the parent, how many subgroup elements fall
/// in it. Conjugation-invariant; used for fusion and as a fingerprint.
std::vector<std::uint32_t> class_histogram(const ClassData& classes, const Subgroup& s);

/// All normal subgroups, closed under join and intersection, with the
/// inclusion order.
struct NormalLattice {
  GroupRef group;
  std::vector<Subgroup> members;          // sorted by (order, element index list)
  std::vector<std::vector<bool>> leq;     // leq[i][j]: members[i] <= members[j]
};

const NormalLattice& normal_subgroups(const GroupRef& g);

/// G/N as a faithful permutation group on the right cosets of N, with the
/// projection and a canonical section.
struct QuotientGroup {
  GroupRef source;
  Subgroup kernel;
  GroupRef group;                      // the quotient, acting on coset indices
  std::vector<std::int32_t> coset_of;  // source element index -> coset index
  std::vector<std::int32_t> coset_rep; // coset index -> canonical source element index

  Perm project(const Perm& g) const;
  const Perm& section(int coset) const;
};

QuotientGroup quotient(const GroupRef& g, const Subgroup& n);

Subgroup center(const GroupRef& g);
Subgroup derived_subgroup(const GroupRef& g);
bool is_perfect(const GroupRef& g);
bool is_simple(const GroupRef& g);
bool is_quasisimple(const GroupRef& g);

Subgroup sylow_subgroup(const GroupRef& g, std::uint64_t p);
Subgroup o_p(const GroupRef& g, std::uint64_t p);
Subgroup fitting(const GroupRef& g);
std::vector<Subgroup> components(const GroupRef& g);
Subgroup layer(const GroupRef& g);  // subgroup generated by all components
Subgroup generalized_fitting(const GroupRef& g);

bool is_nilpotent_group(const GroupRef& g);
bool is_nilpotent(const Subgroup& s);

/// Representatives of the conjugacy classes of nontrivial p-subgroups,
/// ordered by ascending order, then discovery.
std::vector<Subgroup> p_subgroup_classes(const GroupRef& g, std::uint64_t p);

struct MaxNilpotentResult {
  std::uint64_t order = 1;
  Subgroup witness;
};

MaxNilpotentResult max_nilpotent_order(const GroupRef& g);
MaxNilpotentResult max_nilpotent_order(const GroupRef& g, const Subgroup& restrict_to);
std::vector<Subgroup> maximal_nilpotent_classes(const GroupRef& g);

/// Central product data: factor groups with designated central subgroups
/// identified through generator images (z_gens[i][t] is the image in X_i of
/// the t-th generator of Z_1 <= X_1).
struct CentralProductSpec {
  std::vector<GroupRef> factors;
  std::vector<std::vector<Perm>> z_gens;
};

struct CentralProduct {
  CentralProductSpec spec;
  GroupRef direct;                      // X_1 x ... x X_n on the disjoint union
  std::vector<int> offsets;             // domain offset of each factor
  Subgroup glue;                        // A, the aligned-product kernel
  GroupRef group;                       // E = direct/A on the cosets of A
  std::vector<std::int32_t> coset_of;   // direct element index -> coset
  std::vector<std::int32_t> coset_rep;  // coset -> direct element index
  std::vector<Subgroup> embeddings;     // images of the X_i in E
  Subgroup amalgamated_center;          // the common image Z of the Z_i

  Perm embed_factor(int i, const Perm& x) const;      // X_i element -> direct element
  Perm factor_component(int i, const Perm& d) const;  // direct element -> X_i element
  Perm project(const Perm& direct_elem) const;        // direct element -> E element
  const Perm& section(int coset) const;               // E element index -> direct element
  /// Image in E of an element of X_i.
  Perm embed_to_product(int i, const Perm& x) const;
};

CentralProduct central_product(const CentralProductSpec& spec);

}  // namespace fgchar
