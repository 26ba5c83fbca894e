#include "fgchar/charops.hpp"

#include <algorithm>

#include "fgchar/error.hpp"

namespace fgchar {

ClassFunction trivial_character(const GroupRef& g) {
  ClassFunction chi;
  chi.group = g;
  chi.values.assign(conjugacy_classes(g).num_classes(), Cyclo(1));
  return chi;
}

ClassFunction regular_character(const GroupRef& g) {
  ClassFunction chi;
  chi.group = g;
  chi.values.assign(conjugacy_classes(g).num_classes(), Cyclo());
  chi.values[0] = Cyclo(Rational(g->small_order()));
  return chi;
}

Cyclo inner_product(const ClassFunction& a, const ClassFunction& b) {
  require(a.group == b.group, errc::group_mismatch,
          "inner product of class functions on different groups");
  const ClassData& cd = conjugacy_classes(a.group);
  Cyclo sum;
  for (int j = 0; j < cd.num_classes(); ++j)
    sum += Cyclo(Rational(cd.sizes[j])) * a.values[j] * b.values[j].conj();
  return sum * Rational(1, a.group->small_order());
}

const std::vector<std::int32_t>& class_fusion(const Subgroup& s) {
  // keyed by the parent as well: a group shared between handles of different
  // parents must not reuse a foreign fusion
  char key[32];
  std::snprintf(key, sizeof key, "fusion:%p", (const void*)s.parent().get());
  auto fusion = group_slot<std::vector<std::int32_t>>(*s.group(), key, [&] {
    const ClassData& sub = conjugacy_classes(s.group());
    const ClassData& parent = conjugacy_classes(s.parent());
    auto out = std::make_shared<std::vector<std::int32_t>>();
    for (const auto& rep : sub.reps) out->push_back(parent.class_of(rep));
    return out;
  });
  return *fusion;
}

ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& s) {
  require(chi.group == s.parent(), errc::group_mismatch,
          "restriction requires a subgroup of the class function's group");
  const auto& fusion = class_fusion(s);
  ClassFunction out;
  out.group = s.group();
  for (auto cls : fusion) out.values.push_back(chi.values[cls]);
  return out;
}

ClassFunction induce(const ClassFunction& gamma, const Subgroup& s) {
  require(gamma.group == s.group(), errc::group_mismatch,
          "induction requires a class function on the subgroup itself");
  const GroupRef& g = s.parent();
  const ClassData& parent = conjugacy_classes(g);
  const ClassData& sub = conjugacy_classes(s.group());
  const auto& fusion = class_fusion(s);
  std::uint64_t n = g->small_order();
  std::uint64_t h = s.small_order();
  ClassFunction out;
  out.group = g;
  out.values.assign(parent.num_classes(), Cyclo());
  for (int c = 0; c < sub.num_classes(); ++c)
    out.values[fusion[c]] += gamma.values[c] * Rational(sub.sizes[c]);
  for (int i = 0; i < parent.num_classes(); ++i)
    out.values[i] = out.values[i] * Rational(Integer(n), Integer(h) * parent.sizes[i]);
  return out;
}

std::vector<Integer> decompose(const ClassFunction& chi) {
  const CharacterTable& tab = character_table(chi.group);
  std::vector<Integer> mults;
  for (const auto& irr : tab.irreducibles) {
    Cyclo m = inner_product(chi, irr);
    require(m.is_rational() && rat_is_integer(m.rational_value()), errc::not_a_character,
            "decomposition multiplicity is not an integer");
    mults.push_back(rat_num(m.rational_value()));
  }
  // exact reconstruction at every class
  for (std::size_t j = 0; j < chi.values.size(); ++j) {
    Cyclo sum;
    for (std::size_t i = 0; i < mults.size(); ++i)
      if (mults[i] != 0) sum += Cyclo(Rational(mults[i])) * tab.irreducibles[i].values[j];
    require(sum == chi.values[j], errc::not_a_character,
            "class function is not an integer combination of irreducibles");
  }
  return mults;
}

ConstituentList constituents(const ClassFunction& chi) {
  std::vector<Integer> mults = decompose(chi);
  ConstituentList out;
  for (std::size_t i = 0; i < mults.size(); ++i) {
    require(mults[i] >= 0, errc::not_a_character, "negative constituent multiplicity");
    if (mults[i] > 0) out.parts.push_back({(int)i, mults[i]});
  }
  return out;
}

bool is_character(const ClassFunction& chi) {
  try {
    constituents(chi);
    return !chi.degree().is_zero();
  } catch (const Error&) {
    return false;
  }
}

bool is_irreducible(const ClassFunction& chi) {
  ConstituentList c = constituents(chi);
  return c.parts.size() == 1 && c.parts[0].second == 1;
}

Subgroup kernel_of(const ClassFunction& chi) {
  const ClassData& cd = conjugacy_classes(chi.group);
  const ElementTable& table = chi.group->elements();
  std::vector<std::int32_t> indices;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (chi.values[cd.el2class[i]] == chi.degree()) indices.push_back((std::int32_t)i);
  return subgroup_from_indices(chi.group, indices);
}

bool contains_character(const ClassFunction& chi, const ClassFunction& psi) {
  require(chi.group == psi.group, errc::group_mismatch,
          "containment of class functions on different groups");
  ClassFunction diff;
  diff.group = chi.group;
  for (std::size_t j = 0; j < chi.values.size(); ++j)
    diff.values.push_back(chi.values[j] - psi.values[j]);
  for (const auto& m : decompose(diff))
    if (m < 0) return false;
  return true;
}

bool lies_over(const ClassFunction& chi, const Subgroup& z, const ClassFunction& lambda) {
  require(chi.group == z.parent(), errc::group_mismatch,
          "central subgroup belongs to a different group");
  require(lambda.group == z.group(), errc::group_mismatch,
          "central character lives on the wrong group");
  for (const auto& zg : z.generators())
    for (const auto& gg : chi.group->generators())
      require(zg * gg == gg * zg, errc::not_central, "subgroup is not central");
  ClassFunction restricted = restrict_to(chi, z);
  for (std::size_t c = 0; c < restricted.values.size(); ++c)
    if (restricted.values[c] != chi.degree() * lambda.values[c]) return false;
  return true;
}

Subgroup central_product_image(const CentralProduct& cp, const std::vector<Subgroup>& k_factors) {
  require(k_factors.size() == cp.spec.factors.size(), errc::spec_invalid,
          "one subgroup per factor required");
  bool all_full = true;
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < k_factors.size(); ++i) {
    require(k_factors[i].parent() == cp.spec.factors[i], errc::group_mismatch,
            "factor subgroup has the wrong parent");
    all_full = all_full && k_factors[i].order() == cp.spec.factors[i]->order();
    for (const auto& gen : k_factors[i].generators())
      gens.push_back(cp.embed_to_product((int)i, gen));
  }
  if (all_full) return full_subgroup(cp.group);
  return Subgroup(cp.group, gens);
}

ClassFunction central_product_character(const CentralProduct& cp, const Subgroup& carrier,
                                        const std::vector<Subgroup>& k_factors,
                                        const std::vector<ClassFunction>& parts,
                                        const ClassFunction& lambda) {
  std::size_t n = cp.spec.factors.size();
  require(k_factors.size() == n && parts.size() == n, errc::spec_invalid,
          "need one subgroup and one class function per factor");
  require(lambda.group == cp.amalgamated_center.group(), errc::group_mismatch,
          "central character must live on the amalgamated center");
  const ClassData& zcd = conjugacy_classes(cp.amalgamated_center.group());

  // every part must lie over lambda through the identifications
  for (std::size_t i = 0; i < n; ++i) {
    require(parts[i].group == k_factors[i].group(), errc::group_mismatch,
            "part does not live on its factor subgroup");
    const ClassData& kcd = conjugacy_classes(k_factors[i].group());
    auto zi = group_from_generators(cp.spec.z_gens[i], cp.spec.factors[i]->degree());
    for (const auto& zel : zi->elements().elems) {
      require(k_factors[i].group()->contains(zel), errc::spec_invalid,
              "factor subgroup does not contain the designated central subgroup");
      Cyclo left = parts[i].values[kcd.class_of(zel)];
      Cyclo right =
          parts[i].degree() * lambda.values[zcd.class_of(cp.embed_to_product((int)i, zel))];
      require(left == right, errc::incompatible_central_character,
              "part does not lie over the central character");
    }
  }

  const ClassData& ccd = conjugacy_classes(carrier.group());
  int c0 = cp.coset_of[0];  // the coset of the identity
  ClassFunction out;
  out.group = carrier.group();
  for (const auto& rep : ccd.reps) {
    const Perm& d = cp.section(rep[c0]);
    Cyclo value(1);
    for (std::size_t i = 0; i < n; ++i) {
      Perm xi = cp.factor_component((int)i, d);
      const ClassData& kcd = conjugacy_classes(k_factors[i].group());
      value = value * parts[i].values[kcd.class_of(xi)];
    }
    out.values.push_back(value);
  }
  return out;
}

}  // namespace fgchar
