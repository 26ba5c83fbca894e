#include <algorithm>

#include "doctest.h"
#include "fgchar/charops.hpp"
#include "fgchar/error.hpp"
#include "fgchar/gf.hpp"

using namespace fgchar;

namespace {

Perm cyc(const std::string& s, int degree) { return Perm::from_cycles(s, degree); }

GroupRef alt5() {
  return group_from_generators({cyc("[[0,1,2,3,4]]", 5), cyc("[[0,1,2]]", 5)});
}

GroupRef psl27() {
  return group_from_generators(
      {cyc("[[0,1,2,3,4,5,6]]", 8), Perm({7, 6, 3, 2, 5, 4, 1, 0})});
}

GroupRef sl2(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> mod) {
  auto f = FieldSpec::make(p, k, std::move(mod));
  std::vector<Matrix> gens;
  gens.push_back(mat_make(f, 2, {1, 1, 0, 1}));
  if (k > 1) gens.push_back(mat_make(f, 2, {1, (std::int64_t)p, 0, 1}));
  gens.push_back(mat_make(f, 2, {0, 1, -1, 0}));
  return group_from_generators(vector_action_to_perm(gens));
}

const ClassFunction& irreducible(const GroupRef& g, int i) {
  return character_table(g).irreducibles[i];
}

// faithful irreducibles of a given degree
std::vector<ClassFunction> faithful_of_degree(const GroupRef& g, long long d) {
  std::vector<ClassFunction> out;
  for (const auto& chi : character_table(g).irreducibles)
    if (chi.degree() == Cyclo(d) && kernel_of(chi).order() == 1) out.push_back(chi);
  return out;
}

}  // namespace

TEST_CASE("inner products") {
  auto g = alt5();
  for (const auto& chi : character_table(g).irreducibles)
    CHECK(inner_product(chi, chi) == Cyclo(1));
  ClassFunction reg = regular_character(g);
  for (const auto& chi : character_table(g).irreducibles)
    CHECK(inner_product(reg, chi) == chi.degree());

  // permutation character of Alt(5) on 5 points: fixed-point counts; the
  // trivial constituent appears once since the action is transitive
  const ClassData& cd = conjugacy_classes(g);
  ClassFunction permchar;
  permchar.group = g;
  for (const auto& rep : cd.reps) {
    int fixed = 0;
    for (int i = 0; i < 5; ++i) fixed += rep[i] == i;
    permchar.values.push_back(Cyclo(fixed));
  }
  CHECK(inner_product(permchar, trivial_character(g)) == Cyclo(1));
}

TEST_CASE("group mismatch is rejected") {
  CHECK_THROWS_AS(inner_product(trivial_character(alt5()), trivial_character(psl27())), Error);
}

TEST_CASE("restriction") {
  auto g = psl27();
  Subgroup syl7 = sylow_subgroup(g, 7);
  ClassFunction r = restrict_to(trivial_character(g), syl7);
  CHECK(r == trivial_character(syl7.group()));

  // SL(2,7): the faithful triple of Case-type containments on P of order 7
  auto sl27 = sl2(7, 1, {0, 1});
  REQUIRE(sl27->order() == 336);
  Subgroup p7 = sylow_subgroup(sl27, 7);
  ClassFunction regp = regular_character(p7.group());
  ClassFunction onep = trivial_character(p7.group());
  auto deg8 = faithful_of_degree(sl27, 8);
  REQUIRE(deg8.size() == 1);
  CHECK(contains_character(restrict_to(deg8[0], p7), regp));
  auto deg6 = faithful_of_degree(sl27, 6);
  REQUIRE(deg6.size() == 2);
  ClassFunction reg_minus_one;
  reg_minus_one.group = p7.group();
  for (std::size_t j = 0; j < regp.values.size(); ++j)
    reg_minus_one.values.push_back(regp.values[j] - onep.values[j]);
  for (const auto& chi : deg6) CHECK(contains_character(restrict_to(chi, p7), reg_minus_one));
  auto deg4 = faithful_of_degree(sl27, 4);
  REQUIRE(deg4.size() == 2);
  for (const auto& chi : deg4) CHECK(contains_character(restrict_to(chi, p7), onep));
}

TEST_CASE("induction") {
  auto g = psl27();
  // induction from the whole group is the identity
  Subgroup whole = full_subgroup(g);
  for (int i = 0; i < 3; ++i) {
    ClassFunction chi = irreducible(g, i);
    ClassFunction moved;
    moved.group = whole.group();
    moved.values = chi.values;
    CHECK(induce(moved, whole).values == chi.values);
  }
  // induction of 1 from the trivial subgroup is the regular character
  Subgroup one = trivial_subgroup(g);
  CHECK(induce(trivial_character(one.group()), one).values == regular_character(g).values);

  // a linear character of the order-21 normalizer of a Sylow 7-subgroup
  // induces irreducibly with degree 8
  Subgroup h = normalizer(g, sylow_subgroup(g, 7));
  REQUIRE(h.order() == 21);
  const auto& htab = character_table(h.group());
  bool found = false;
  for (const auto& gamma : htab.irreducibles) {
    if (gamma.degree() != Cyclo(1)) continue;
    ClassFunction ind = induce(gamma, h);
    CHECK(ind.degree() == Cyclo(8));  // induction degree formula
    if (is_irreducible(ind)) found = true;
  }
  CHECK(found);
  // the trivial character of H induces reducibly
  CHECK(!is_irreducible(induce(trivial_character(h.group()), h)));
}

TEST_CASE("frobenius reciprocity") {
  auto g = alt5();
  for (auto p : {2, 3, 5}) {
    Subgroup s = sylow_subgroup(g, p);
    const auto& stab = character_table(s.group());
    for (const auto& gamma : stab.irreducibles) {
      ClassFunction ind = induce(gamma, s);
      for (const auto& chi : character_table(g).irreducibles)
        CHECK(inner_product(ind, chi) == inner_product(gamma, restrict_to(chi, s)));
    }
  }
}

TEST_CASE("constituents") {
  auto g = alt5();
  ClassFunction reg = regular_character(g);
  ConstituentList parts = constituents(reg);
  REQUIRE(parts.parts.size() == 5);
  for (const auto& [idx, mult] : parts.parts)
    CHECK(Cyclo(Rational(mult)) == irreducible(g, idx).degree());

  // the remark decomposition: SL(2,5), H = P x Z with gamma trivial on P and
  // faithful on Z induces twice the degree-6 character
  auto sl25 = sl2(5, 1, {0, 1});
  Subgroup p5 = sylow_subgroup(sl25, 5);
  Subgroup z = center(sl25);
  REQUIRE(z.order() == 2);
  Subgroup h = join_subgroups(sl25, p5, z);
  REQUIRE(h.small_order() == 10);
  const auto& htab = character_table(h.group());
  const ClassData& hcd = conjugacy_classes(h.group());
  bool exercised = false;
  for (const auto& gamma : htab.irreducibles) {
    if (gamma.degree() != Cyclo(1)) continue;
    // gamma trivial on P, faithful on Z
    bool trivial_on_p = true;
    for (const auto& gen : p5.generators())
      trivial_on_p = trivial_on_p && gamma.values[hcd.class_of(gen)] == Cyclo(1);
    bool faithful_on_z = true;
    for (const auto& gen : z.generators())
      faithful_on_z = faithful_on_z && gamma.values[hcd.class_of(gen)] != Cyclo(1);
    if (!trivial_on_p || !faithful_on_z) continue;
    exercised = true;
    ClassFunction ind = induce(gamma, h);
    ConstituentList c = constituents(ind);
    REQUIRE(c.parts.size() == 1);
    CHECK(c.parts[0].second == 2);
    CHECK(irreducible(sl25, c.parts[0].first).degree() == Cyclo(6));
  }
  CHECK(exercised);

  // non-characters are rejected
  ClassFunction bogus = trivial_character(g);
  bogus.values[1] = Cyclo(Rational(1, 2));
  CHECK_THROWS_AS(constituents(bogus), Error);
}

TEST_CASE("kernels") {
  auto g = alt5();
  CHECK(kernel_of(trivial_character(g)).order() == 60);
  auto sl25 = sl2(5, 1, {0, 1});
  // a faithful irreducible has trivial kernel; characters lifted through the
  // center have kernel containing it
  auto faithful = faithful_of_degree(sl25, 2);
  REQUIRE(faithful.size() == 2);
  for (const auto& chi : character_table(sl25).irreducibles) {
    auto k = kernel_of(chi);
    if (chi.degree() == Cyclo(3)) CHECK(k.order() == 2);
  }
}

TEST_CASE("lies over") {
  auto sl25 = sl2(5, 1, {0, 1});
  Subgroup z = center(sl25);
  const auto& ztab = character_table(z.group());
  REQUIRE(ztab.irreducibles.size() == 2);
  int triv = ztab.irreducibles[0].values[1] == Cyclo(1) ? 0 : 1;
  const ClassFunction& lam0 = ztab.irreducibles[triv];
  const ClassFunction& lam1 = ztab.irreducibles[1 - triv];
  CHECK(lies_over(trivial_character(sl25), z, lam0));
  for (const auto& chi : faithful_of_degree(sl25, 2)) {
    CHECK(lies_over(chi, z, lam1));
    CHECK(!lies_over(chi, z, lam0));
  }
  // every irreducible lies over its own central character
  for (const auto& chi : character_table(sl25).irreducibles) {
    ClassFunction own;
    own.group = z.group();
    ClassFunction restricted = restrict_to(chi, z);
    for (const auto& v : restricted.values) {
      Rational d = chi.degree().rational_value();
      own.values.push_back(v * Rational(rat_den(d), rat_num(d)));
    }
    CHECK(lies_over(chi, z, own));
  }
  // non-central subgroups are rejected
  Subgroup p5 = sylow_subgroup(sl25, 5);
  CHECK_THROWS_AS(lies_over(trivial_character(sl25), p5,
                            trivial_character(p5.group())),
                  Error);
}

TEST_CASE("central product characters") {
  auto q8 = group_from_generators(
      {cyc("[[0,1,2,3],[4,7,6,5]]", 8), cyc("[[0,4,2,6],[1,5,3,7]]", 8)});
  auto c4 = group_from_generators({cyc("[[0,1,2,3]]", 4)});
  Perm minus_one = q8->generators()[0] * q8->generators()[0];
  CentralProductSpec spec;
  spec.factors = {q8, c4};
  spec.z_gens = {{minus_one}, {cyc("[[0,2],[1,3]]", 4)}};
  auto cp = central_product(spec);
  REQUIRE(cp.group->order() == 16);

  const auto& ztab = character_table(cp.amalgamated_center.group());
  int faithful_idx = ztab.irreducibles[0].values[1] == Cyclo(1) ? 1 : 0;
  const ClassFunction& lam = ztab.irreducibles[faithful_idx];
  const ClassFunction& lam0 = ztab.irreducibles[1 - faithful_idx];

  // the product of the faithful degree-2 character of Q8 with a faithful
  // linear character of C4 over the same lambda is irreducible of degree 2
  std::vector<Subgroup> full = {full_subgroup(q8), full_subgroup(c4)};
  Subgroup carrier = central_product_image(cp, full);
  CHECK(carrier.order() == 16);
  ClassFunction chi2;
  for (const auto& chi : character_table(q8).irreducibles)
    if (chi.degree() == Cyclo(2)) chi2 = chi;
  ClassFunction linc4;
  Subgroup zc4(c4, spec.z_gens[1]);
  // both centers are C2 with the identity class first, so values transplant
  ClassFunction lam_on_zc4{zc4.group(), lam.values};
  for (const auto& chi : character_table(c4).irreducibles)
    if (chi.degree() == Cyclo(1) && lies_over(chi, zc4, lam_on_zc4)) linc4 = chi;
  REQUIRE(!chi2.values.empty());
  REQUIRE(!linc4.values.empty());
  ClassFunction prod = central_product_character(cp, carrier, full, {chi2, linc4}, lam);
  CHECK(prod.degree() == Cyclo(2));
  CHECK(is_irreducible(prod));

  // trivial lambda with trivial parts gives the trivial character of E
  ClassFunction triv =
      central_product_character(cp, carrier, full,
                                {trivial_character(q8), trivial_character(c4)}, lam0);
  CHECK(triv.values == trivial_character(cp.group).values);

  // incompatible central characters are rejected
  CHECK_THROWS_AS(
      central_product_character(cp, carrier, full, {chi2, trivial_character(c4)}, lam),
      Error);
}

TEST_CASE("central product character bijection") {
  // all pairs over a fixed lambda produce distinct irreducibles, as many as
  // the pair count
  auto q8 = group_from_generators(
      {cyc("[[0,1,2,3],[4,7,6,5]]", 8), cyc("[[0,4,2,6],[1,5,3,7]]", 8)});
  auto c4 = group_from_generators({cyc("[[0,1,2,3]]", 4)});
  Perm minus_one = q8->generators()[0] * q8->generators()[0];
  CentralProductSpec spec;
  spec.factors = {q8, c4};
  spec.z_gens = {{minus_one}, {cyc("[[0,2],[1,3]]", 4)}};
  auto cp = central_product(spec);
  Subgroup zq8(q8, {minus_one});
  Subgroup zc4(c4, {cyc("[[0,2],[1,3]]", 4)});
  std::vector<Subgroup> full = {full_subgroup(q8), full_subgroup(c4)};
  Subgroup carrier = central_product_image(cp, full);

  const auto& ztab = character_table(cp.amalgamated_center.group());
  for (const auto& lam : ztab.irreducibles) {
    std::vector<ClassFunction> over_q8, over_c4;
    for (const auto& chi : character_table(q8).irreducibles) {
      ClassFunction lam_on_zq8{zq8.group(), lam.values};
      if (lies_over(chi, zq8, lam_on_zq8)) over_q8.push_back(chi);
    }
    for (const auto& chi : character_table(c4).irreducibles) {
      ClassFunction lam_on_zc4{zc4.group(), lam.values};
      if (lies_over(chi, zc4, lam_on_zc4)) over_c4.push_back(chi);
    }
    std::vector<ClassFunction> images;
    for (const auto& a : over_q8)
      for (const auto& b : over_c4) {
        ClassFunction prod = central_product_character(cp, carrier, full, {a, b}, lam);
        CHECK(is_irreducible(prod));
        for (const auto& seen : images) CHECK(!(seen.values == prod.values));
        images.push_back(prod);
      }
    // the pairs hit every irreducible of E over lambda
    int over_count = 0;
    for (const auto& chi : character_table(cp.group).irreducibles) {
      ClassFunction lam_on_z{cp.amalgamated_center.group(), lam.values};
      if (lies_over(chi, cp.amalgamated_center, lam_on_z)) ++over_count;
    }
    CHECK((int)images.size() == over_count);
  }
}
