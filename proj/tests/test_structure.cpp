#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "fgchar/error.hpp"
#include "fgchar/gf.hpp"
#include "fgchar/structure.hpp"

using namespace fgchar;

namespace {

Perm cyc(const std::string& s, int degree) { return Perm::from_cycles(s, degree); }

GroupRef sym(int n) {
  std::vector<Perm> gens{cyc("[[0,1]]", n)};
  std::string big = "[[0";
  for (int i = 1; i < n; ++i) big += "," + std::to_string(i);
  big += "]]";
  if (n > 2) gens.push_back(cyc(big, n));
  return group_from_generators(gens);
}

GroupRef alt(int n) {
  std::vector<Perm> gens{cyc("[[0,1,2]]", n)};
  std::string big = n % 2 ? "[[0" : "[[1";
  for (int i = n % 2 ? 1 : 2; i < n; ++i) big += "," + std::to_string(i);
  big += "]]";
  if (n > 3) gens.push_back(cyc(big, n));
  return group_from_generators(gens);
}

GroupRef sl2(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> mod) {
  auto f = FieldSpec::make(p, k, std::move(mod));
  std::vector<Matrix> gens;
  gens.push_back(mat_make(f, 2, {1, 1, 0, 1}));
  if (k > 1) gens.push_back(mat_make(f, 2, {1, (std::int64_t)p, 0, 1}));
  gens.push_back(mat_make(f, 2, {0, 1, -1, 0}));
  return group_from_generators(vector_action_to_perm(gens));
}

}  // namespace

TEST_CASE("conjugacy classes") {
  auto a5 = alt(5);
  const auto& cd = conjugacy_classes(a5);
  CHECK(cd.num_classes() == 5);
  std::multiset<std::uint32_t> sizes(cd.sizes.begin(), cd.sizes.end());
  CHECK(sizes == std::multiset<std::uint32_t>{1, 15, 20, 12, 12});
  CHECK(cd.sizes[0] == 1);
  CHECK(cd.exponent == 30);

  CHECK(conjugacy_classes(group_from_generators({}, 2)).num_classes() == 1);

  // Alt(6) has two classes of order-3 elements
  const auto& cd6 = conjugacy_classes(alt(6));
  int order3 = 0;
  for (auto o : cd6.rep_orders) order3 += o == 3;
  CHECK(order3 == 2);
}

TEST_CASE("classes agree with full conjugation orbits") {
  for (auto g : {sym(4), alt(5)}) {
    const auto& cd = conjugacy_classes(g);
    const auto& table = g->elements();
    // independent oracle: conjugate by every group element
    for (std::size_t i = 0; i < table.size(); ++i) {
      std::set<int> orbit;
      for (std::size_t j = 0; j < table.size(); ++j)
        orbit.insert(table.index_of(table.elems[i].conjugated_by(table.elems[j])));
      for (int idx : orbit) CHECK(cd.el2class[idx] == cd.el2class[i]);
      CHECK(orbit.size() == cd.sizes[cd.el2class[i]]);
    }
  }
}

TEST_CASE("class sizes match centralizer orders") {
  auto g = sym(5);
  const auto& cd = conjugacy_classes(g);
  for (int c = 0; c < cd.num_classes(); ++c) {
    auto cent = centralizer(g, cd.reps[c]);
    CHECK(Integer(cd.sizes[c]) * cent.order() == g->order());
  }
}

TEST_CASE("normal subgroups") {
  auto a5 = alt(5);
  CHECK(normal_subgroups(a5).members.size() == 2);

  auto s4 = sym(4);
  const auto& lat = normal_subgroups(s4).members;
  REQUIRE(lat.size() == 4);
  CHECK(lat[0].order() == 1);
  CHECK(lat[1].order() == 4);
  CHECK(lat[2].order() == 12);
  CHECK(lat[3].order() == 24);

  auto sl25 = sl2(5, 1, {0, 1});
  const auto& lat25 = normal_subgroups(sl25).members;
  REQUIRE(lat25.size() == 3);
  CHECK(lat25[1].order() == 2);
}

TEST_CASE("quotients") {
  auto s4 = sym(4);
  CHECK(quotient(s4, trivial_subgroup(s4)).group->order() == 24);

  auto sl25 = sl2(5, 1, {0, 1});
  Subgroup z = center(sl25);
  REQUIRE(z.order() == 2);
  auto q = quotient(sl25, z);
  CHECK(q.group->order() == 60);
  CHECK(q.group->degree() == 60);
  CHECK(is_simple(q.group));

  auto sl29 = sl2(3, 2, {2, 2, 1});
  auto q9 = quotient(sl29, center(sl29));
  CHECK(q9.group->order() == 360);

  // projection is a homomorphism
  const auto& table = sl25->elements();
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Perm& a = table.elems[rng() % table.size()];
    const Perm& b = table.elems[rng() % table.size()];
    CHECK(q.project(a * b) == q.project(a) * q.project(b));
  }

  Subgroup not_normal(s4, {cyc("[[0,1]]", 4)});
  CHECK_THROWS_AS(quotient(s4, not_normal), Error);
}

TEST_CASE("sylow subgroups") {
  CHECK(sylow_subgroup(sym(5), 2).order() == 8);
  CHECK(sylow_subgroup(alt(5), 5).order() == 5);
  auto psl27 = sl2(7, 1, {0, 1});  // SL(2,7); PSL tested via quotient elsewhere
  CHECK(sylow_subgroup(psl27, 7).order() == 7);
  CHECK_THROWS_AS(sylow_subgroup(alt(5), 7), Error);
  // sylow subgroups really are p-groups of full p-part
  for (auto p : {2, 3}) {
    auto s = sylow_subgroup(sym(6), p);
    CHECK(s.small_order() == p_part(720, p));
  }
}

TEST_CASE("o_p and fitting") {
  auto s4 = sym(4);
  CHECK(o_p(s4, 2).order() == 4);
  CHECK(o_p(alt(5), 5).order() == 1);
  auto sl25 = sl2(5, 1, {0, 1});
  CHECK(o_p(sl25, 2).order() == 2);

  CHECK(fitting(s4).order() == 4);
  CHECK(fitting(alt(5)).order() == 1);
  auto d8 = group_from_generators({cyc("[[0,1,2,3]]", 4), cyc("[[1,3]]", 4)});
  CHECK(fitting(d8).order() == 8);
}

TEST_CASE("components and generalized fitting") {
  auto a5 = alt(5);
  auto comps = components(a5);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].order() == 60);

  CHECK(components(sym(4)).empty());

  CHECK(generalized_fitting(a5).order() == 60);
  CHECK(generalized_fitting(sym(4)).order() == 4);
  auto sl25 = sl2(5, 1, {0, 1});
  CHECK(is_quasisimple(sl25));
  CHECK(generalized_fitting(sl25).order() == 120);

  // the fundamental property C_G(F*) <= F* is verified internally; touch a
  // few groups to exercise it
  for (auto g : {sym(5), sym(6), alt(6)}) CHECK(generalized_fitting(g).order() > 1);
}

TEST_CASE("nilpotency") {
  CHECK(is_nilpotent_group(group_from_generators({cyc("[[0,1,2,3]]", 4)})));
  CHECK(!is_nilpotent_group(sym(3)));
  auto f21 = group_from_generators({cyc("[[0,1,2,3,4,5,6]]", 7), cyc("[[1,2,4],[3,6,5]]", 7)});
  CHECK(f21->order() == 21);
  CHECK(!is_nilpotent_group(f21));
  auto q8 = sl2(3, 1, {0, 1});  // SL(2,3) contains Q8; test Q8 via sylow
  CHECK(is_nilpotent(sylow_subgroup(q8, 2)));
  CHECK(!is_nilpotent_group(q8));
}

TEST_CASE("p-subgroup classes of Sym(4)") {
  auto s4 = sym(4);
  auto classes = p_subgroup_classes(s4, 2);
  std::map<std::uint64_t, int> by_order;
  for (const auto& s : classes) by_order[s.small_order()]++;
  CHECK(by_order[2] == 2);
  CHECK(by_order[4] == 3);
  CHECK(by_order[8] == 1);
  CHECK(p_subgroup_classes(alt(5), 5).size() == 1);
  CHECK(p_subgroup_classes(sym(3), 5).empty());
}

TEST_CASE("max nilpotent order") {
  CHECK(max_nilpotent_order(alt(5)).order == 5);
  CHECK(max_nilpotent_order(alt(6)).order == 9);
  CHECK(max_nilpotent_order(sym(5)).order == 8);
  auto d8 = group_from_generators({cyc("[[0,1,2,3]]", 4), cyc("[[1,3]]", 4)});
  CHECK(max_nilpotent_order(d8).order == 8);
  auto w = max_nilpotent_order(alt(6)).witness;
  CHECK(w.small_order() == 9);
  CHECK(is_nilpotent(w));
}

TEST_CASE("maximal nilpotent classes") {
  auto s3 = sym(3);
  auto cls = maximal_nilpotent_classes(s3);
  REQUIRE(cls.size() == 2);
  CHECK(cls[0].order() == 2);
  CHECK(cls[1].order() == 3);

  auto d8 = group_from_generators({cyc("[[0,1,2,3]]", 4), cyc("[[1,3]]", 4)});
  auto pcls = maximal_nilpotent_classes(d8);
  REQUIRE(pcls.size() == 1);
  CHECK(pcls[0].order() == 8);

  // Alt(5): maximal nilpotent subgroups have orders 3, 4, 5
  auto a5cls = maximal_nilpotent_classes(alt(5));
  std::vector<std::uint64_t> orders;
  for (const auto& s : a5cls) orders.push_back(s.small_order());
  CHECK(orders == std::vector<std::uint64_t>{3, 4, 5});
}

TEST_CASE("central products") {
  // Q8 * C4 amalgamating the centers has order 16
  auto q8 = group_from_generators(
      {cyc("[[0,1,2,3],[4,7,6,5]]", 8), cyc("[[0,4,2,6],[1,5,3,7]]", 8)});
  REQUIRE(q8->order() == 8);
  auto c4 = group_from_generators({cyc("[[0,1,2,3]]", 4)});
  Perm minus_one = q8->generators()[0] * q8->generators()[0];
  REQUIRE(minus_one.order() == 2);
  CentralProductSpec spec;
  spec.factors = {q8, c4};
  spec.z_gens = {{minus_one}, {cyc("[[0,2],[1,3]]", 4)}};
  auto cp = central_product(spec);
  CHECK(cp.group->order() == 16);
  CHECK(cp.amalgamated_center.order() == 2);
  CHECK(!is_quasisimple(cp.group));
  CHECK(components(cp.group).empty());

  // single factor: E is isomorphic to X1
  CentralProductSpec single;
  single.factors = {c4};
  single.z_gens = {{cyc("[[0,2],[1,3]]", 4)}};
  CHECK(central_product(single).group->order() == 4);

  // rejects a non-central designated subgroup
  CentralProductSpec bad;
  auto s3 = sym(3);
  bad.factors = {s3, c4};
  bad.z_gens = {{cyc("[[0,1]]", 3)}, {cyc("[[0,2],[1,3]]", 4)}};
  CHECK_THROWS_AS(central_product(bad), Error);
}

TEST_CASE("central product of SL(2,5) with itself") {
  auto x = sl2(5, 1, {0, 1});
  Perm z = center(x).generators()[0];
  REQUIRE(z.order() == 2);
  CentralProductSpec spec;
  spec.factors = {x, x};
  spec.z_gens = {{z}, {z}};
  auto cp = central_product(spec);
  CHECK(cp.group->order() == 7200);
  CHECK(cp.group->degree() == 7200);
  auto comps = components(cp.group);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].order() == 120);
  CHECK(comps[1].order() == 120);
  CHECK(generalized_fitting(cp.group).order() == 7200);
}
