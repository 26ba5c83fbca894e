#pragma once

#include <vector>

#include "fgchar/chartab.hpp"
#include "fgchar/classfun.hpp"
#include "fgchar/structure.hpp"

namespace fgchar {

/// Decomposition into irreducibles of the group's character table:
/// pairs (irreducible index, positive multiplicity).
struct ConstituentList {
  std::vector<std::pair<int, Integer>> parts;
};

ClassFunction trivial_character(const GroupRef& g);
ClassFunction regular_character(const GroupRef& g);

Cyclo inner_product(const ClassFunction& a, const ClassFunction& b);

/// Fusion of subgroup classes into parent classes (subgroup class -> parent
/// class index). Cached on the subgroup's group object.
const std::vector<std::int32_t>& class_fusion(const Subgroup& s);

/// Values transported along the fusion map: a class function on s.group().
ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& s);

/// Induction along s into its parent, by the class-intersection formula.
ClassFunction induce(const ClassFunction& gamma, const Subgroup& s);

/// Signed decomposition against the table; exact reconstruction enforced.
std::vector<Integer> decompose(const ClassFunction& chi);
ConstituentList constituents(const ClassFunction& chi);
bool is_irreducible(const ClassFunction& chi);
bool is_character(const ClassFunction& chi);

/// Classes where the value equals the degree, as a subgroup handle.
Subgroup kernel_of(const ClassFunction& chi);

/// True iff chi - psi has all-nonnegative constituent multiplicities.
bool contains_character(const ClassFunction& chi, const ClassFunction& psi);

/// chi restricted to the central subgroup z equals chi(1) * lambda.
bool lies_over(const ClassFunction& chi, const Subgroup& z, const ClassFunction& lambda);

/// The image K = K_1 ... K_n inside the central product, for K_i <= X_i.
Subgroup central_product_image(const CentralProduct& cp, const std::vector<Subgroup>& k_factors);

/// The unique class function on the carrier (a central-product image K or E
/// itself) whose value at k_1...k_n is the product of the part values. Each
/// part must lie over lambda through the identifications.
ClassFunction central_product_character(const CentralProduct& cp, const Subgroup& carrier,
                                        const std::vector<Subgroup>& k_factors,
                                        const std::vector<ClassFunction>& parts,
                                        const ClassFunction& lambda);

}  // namespace fgchar
