#include <random>

#include "doctest.h"
#include "fgchar/error.hpp"
#include "fgchar/gf.hpp"
#include "fgchar/permgroup.hpp"

using namespace fgchar;

namespace {

// SL(2,q) generators: a shear, a field-spread shear when k > 1, and the Weyl
// element [[0,1],[-1,0]].
std::vector<Matrix> sl2_gens(const FieldRef& f) {
  std::vector<Matrix> gens;
  gens.push_back(mat_make(f, 2, {1, 1, 0, 1}));
  if (f->k() > 1) {
    std::vector<std::int64_t> shear = {1, (std::int64_t)f->p(), 0, 1};  // x as an entry
    gens.push_back(mat_make(f, 2, shear));
  }
  gens.push_back(mat_make(f, 2, {0, 1, -1, 0}));
  return gens;
}

FieldRef gf(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> mod) {
  return FieldSpec::make(p, k, std::move(mod));
}

}  // namespace

TEST_CASE("field construction") {
  auto f2 = gf(2, 1, {0, 1});
  CHECK(f2->q() == 2);
  // x^2+2x+2 has no root over GF(3), checked exhaustively
  for (int a = 0; a < 3; ++a) CHECK((a * a + 2 * a + 2) % 3 != 0);
  auto f9 = gf(3, 2, {2, 2, 1});
  CHECK(f9->q() == 9);
  // x^2+x+1 has no root in GF(2)
  for (int a = 0; a < 2; ++a) CHECK((a * a + a + 1) % 2 != 0);
  auto f4 = gf(2, 2, {1, 1, 1});
  CHECK(f4->q() == 4);

  CHECK_THROWS_AS(gf(4, 1, {0, 1}), Error);        // NotPrime
  CHECK_THROWS_AS(gf(3, 2, {1, 2, 1}), Error);     // (x+1)^2 is reducible
  CHECK_THROWS_AS(gf(2, 2, {1, 0, 1}), Error);     // x^2+1 = (x+1)^2 over GF(2)
}

TEST_CASE("field axioms on random triples") {
  for (auto f : {gf(5, 1, {0, 1}), gf(2, 2, {1, 1, 1}), gf(3, 2, {2, 2, 1})}) {
    std::mt19937 rng(42);
    for (int t = 0; t < 200; ++t) {
      std::uint64_t a = rng() % f->q(), b = rng() % f->q(), c = rng() % f->q();
      CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
    }
  }
}

TEST_CASE("matrix product") {
  auto f9 = gf(3, 2, {2, 2, 1});
  auto a = mat_make(f9, 2, {1, 2, 0, 1});
  CHECK(mat_mul(Matrix::identity(f9, 2), a) == a);
  auto b = mat_make(f9, 2, {1, -2, 0, 1});
  CHECK(mat_mul(a, b) == Matrix::identity(f9, 2));

  // diag(c,c,-c,-c) squares to the scalar c^2 * I
  std::uint64_t c = f9->element_of_order(8);  // a generator of GF(9)*
  Matrix d;
  d.field = f9;
  d.n = 4;
  d.entries.assign(16, 0);
  d.at(0, 0) = c;
  d.at(1, 1) = c;
  d.at(2, 2) = f9->neg(c);
  d.at(3, 3) = f9->neg(c);
  Matrix sq = mat_mul(d, d);
  std::uint64_t c2 = f9->mul(c, c);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(sq.at(i, j) == (i == j ? c2 : 0));

  auto f4 = gf(2, 2, {1, 1, 1});
  CHECK_THROWS_AS(mat_mul(a, Matrix::identity(f4, 2)), Error);
}

TEST_CASE("vector action") {
  auto f5 = gf(5, 1, {0, 1});
  auto gens = sl2_gens(f5);
  auto perms = vector_action_to_perm(gens);
  REQUIRE(perms.size() == 2);
  CHECK(perms[0].degree() == 24);

  // independent oracle: enumerate the 24 nonzero vectors of GF(5)^2 directly
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    for (int idx = 0; idx < 24; ++idx) {
      int v = idx + 1;
      long long x = v % 5, y = v / 5;
      auto e = [&](int r, int c) { return (long long)gens[gi].at(r, c); };
      long long xi = (e(0, 0) * x + e(0, 1) * y) % 5;
      long long yi = (e(1, 0) * x + e(1, 1) * y) % 5;
      CHECK(perms[gi][idx] == xi + 5 * yi - 1);
    }
  }

  CHECK(vector_action_to_perm({Matrix::identity(f5, 2)})[0].is_identity());

  // scalar of order 3 over GF(4) in dimension 3 moves every nonzero vector
  auto f4 = gf(2, 2, {1, 1, 1});
  std::uint64_t omega = f4->element_of_order(3);
  Matrix scalar = Matrix::identity(f4, 3);
  for (int i = 0; i < 3; ++i) scalar.at(i, i) = omega;
  Perm sp = vector_action_to_perm({scalar})[0];
  CHECK(sp.degree() == 63);
  for (int i = 0; i < 63; ++i) CHECK(sp[i] != i);

  // degree cap: GF(7)^6 - 1 > 10^5
  auto f7 = gf(7, 1, {0, 1});
  Matrix big = Matrix::identity(f7, 6);
  CHECK_THROWS_AS(vector_action_to_perm({big}), Error);
}

TEST_CASE("vector action is a homomorphism") {
  auto f9 = gf(3, 2, {2, 2, 1});
  auto gens = sl2_gens(f9);
  std::mt19937 rng(99);
  for (int t = 0; t < 20; ++t) {
    Matrix m = Matrix::identity(f9, 2);
    Perm p(80);
    for (int w = 0; w < 6; ++w) {
      const Matrix& g = gens[rng() % gens.size()];
      m = mat_mul(m, g);
      p = vector_action_to_perm({g})[0] * p;  // left multiplication composes on the left
    }
    CHECK(vector_action_to_perm({m})[0] == p);
  }
}

TEST_CASE("SL(2,q) image orders") {
  struct Case {
    FieldRef f;
    std::uint64_t order;
  };
  std::vector<Case> cases = {
      {gf(3, 1, {0, 1}), 24},  {gf(2, 2, {1, 1, 1}), 60}, {gf(5, 1, {0, 1}), 120},
      {gf(7, 1, {0, 1}), 336}, {gf(3, 2, {2, 2, 1}), 720},
  };
  for (const auto& c : cases) {
    auto g = group_from_generators(vector_action_to_perm(sl2_gens(c.f)));
    std::uint64_t q = c.f->q();
    CHECK(g->order() == Integer(q * (q * q - 1)));
    CHECK(g->order() == Integer(c.order));
  }
}
