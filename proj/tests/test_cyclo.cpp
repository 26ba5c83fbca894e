#include <random>

#include "doctest.h"
#include "fgchar/cyclo.hpp"
#include "fgchar/error.hpp"

using namespace fgchar;

namespace {
Cyclo zeta(std::uint32_t e, std::uint64_t k) { return Cyclo::root_of_unity(e, k); }
}  // namespace

TEST_CASE("atlas irrationalities") {
  // b5 + b5* = -1 and b7 + b7* = -1
  CHECK(Cyclo::b5() + Cyclo::b5_star() == Cyclo(-1));
  CHECK(Cyclo::b7() + Cyclo::b7_star() == Cyclo(-1));
  // b5 * b5* = -1 (roots of x^2 + x - 1), b7 * b7* = 2 (roots of x^2 + x + 2)
  CHECK(Cyclo::b5() * Cyclo::b5_star() == Cyclo(-1));
  CHECK(Cyclo::b7() * Cyclo::b7_star() == Cyclo(2));
  // b5 is real, b7 is not: complex conjugation fixes one and swaps the other
  CHECK(Cyclo::b5().conj() == Cyclo::b5());
  CHECK(Cyclo::b7().conj() == Cyclo::b7_star());
  CHECK(Cyclo::b5().str() == "b5");
  CHECK(Cyclo::b7().conj().str() == "b7*");
}

TEST_CASE("root of unity sums") {
  CHECK(zeta(5, 1) + zeta(5, 2) + zeta(5, 3) + zeta(5, 4) == Cyclo(-1));
  Cyclo sum;
  for (int k = 0; k < 12; ++k) sum += zeta(12, k);
  CHECK(sum.is_zero());
  CHECK(zeta(6, 3) == Cyclo(-1));
  CHECK(zeta(4, 2) == Cyclo(-1));
  CHECK(zeta(8, 1) * zeta(8, 7) == Cyclo(1));
}

TEST_CASE("canonical form") {
  CHECK(zeta(7, 1).coeffs().size() == 1);
  // zeta_e^e reduces to 1 at conductor 1
  CHECK(zeta(9, 9) == Cyclo(1));
  CHECK(zeta(9, 9).conductor() == 1);
  CHECK((zeta(5, 1) - zeta(5, 1)).is_zero());
  // rational value recognized across conductors
  CHECK(zeta(10, 5) + Cyclo(1) == Cyclo());
  CHECK(Cyclo(Rational(3, 4)).rational_value() == Rational(3, 4));
  CHECK_THROWS_AS(zeta(5, 1).rational_value(), Error);
}

TEST_CASE("conductor unification") {
  Cyclo a = zeta(4, 1);   // i
  Cyclo b = zeta(6, 1);
  Cyclo p = a * b;
  CHECK(p == zeta(12, 3) * zeta(12, 2));
  CHECK(p == zeta(12, 5));
  CHECK(a * a == Cyclo(-1));
}

TEST_CASE("galois action") {
  Cyclo b5 = Cyclo::b5();
  CHECK(b5.galois(2) == Cyclo::b5_star());
  CHECK(b5.galois(4) == b5);        // zeta -> zeta^4 fixes zeta + zeta^4
  CHECK(b5.conj().conj() == b5);
  // conjugation is multiplicative and additive
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    Cyclo x = zeta(12, rng() % 12) + Cyclo((long long)(rng() % 5)) * zeta(12, rng() % 12);
    Cyclo y = zeta(12, rng() % 12) - zeta(12, rng() % 12);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
  }
}

TEST_CASE("ring axioms at mixed conductors") {
  std::mt19937 rng(17);
  auto rand_val = [&](std::uint32_t e) {
    Cyclo v;
    for (int i = 0; i < 3; ++i)
      v += Cyclo((long long)(rng() % 7) - 3) * zeta(e, rng() % e);
    return v;
  };
  for (int t = 0; t < 25; ++t) {
    Cyclo x = rand_val(8), y = rand_val(12), z = rand_val(6);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
  }
}

TEST_CASE("total order is consistent") {
  CHECK(Cyclo::compare(Cyclo(0), Cyclo(1)) < 0);
  CHECK(Cyclo::compare(Cyclo(2), Cyclo(2)) == 0);
  CHECK(Cyclo::compare(Cyclo::b5(), Cyclo::b5_star()) != 0);
  // comparison is antisymmetric
  CHECK(Cyclo::compare(Cyclo::b5(), Cyclo::b5_star()) ==
        -Cyclo::compare(Cyclo::b5_star(), Cyclo::b5()));
}

TEST_CASE("rendering") {
  CHECK(Cyclo(2).str() == "2");
  CHECK(Cyclo(Rational(-1, 2)).str() == "-1/2");
  CHECK(zeta(8, 1).str() == "z(8)");
  CHECK((zeta(8, 1) * Cyclo(3) + Cyclo(1)).str() == "1 + 3*z(8)");
}
