#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "fgchar/numeric.hpp"

namespace fgchar {

/// An exact element of a cyclotomic field Q(zeta_e), stored as a sparse
/// rational polynomial in zeta_e reduced modulo the e-th cyclotomic
/// polynomial. The zero value has an empty coefficient map; purely rational
/// values are normalized to conductor 1.
class Cyclo {
 public:
  Cyclo() : conductor_(1) {}
  explicit Cyclo(const Rational& r);
  explicit Cyclo(long long n) : Cyclo(Rational(n)) {}

  static Cyclo root_of_unity(std::uint32_t e, std::uint64_t k);
  /// (-1+sqrt(5))/2 = zeta_5 + zeta_5^4
  static Cyclo b5();
  /// (-1+sqrt(-7))/2 = zeta_7 + zeta_7^2 + zeta_7^4
  static Cyclo b7();
  /// Algebraic conjugates: b5* = (-1-sqrt(5))/2, b7* = (-1-sqrt(-7))/2.
  static Cyclo b5_star();
  static Cyclo b7_star();

  std::uint32_t conductor() const { return conductor_; }
  const std::map<std::uint32_t, Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const;
  Rational rational_value() const;  // NotACharacter-free accessor; throws if irrational
  bool is_integer() const;
  Integer integer_value() const;

  Cyclo operator+(const Cyclo& other) const;
  Cyclo operator-(const Cyclo& other) const;
  Cyclo operator*(const Cyclo& other) const;
  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& other) { return *this = *this + other; }
  Cyclo operator*(const Rational& r) const;

  bool operator==(const Cyclo& other) const;
  bool operator!=(const Cyclo& other) const { return !(*this == other); }

  /// Galois action zeta_e -> zeta_e^k for gcd(k, e) = 1.
  Cyclo galois(std::uint64_t k) const;
  /// Complex conjugation, zeta -> zeta^{-1}.
  Cyclo conj() const;

  /// Total order used for canonical sorting of character rows.
  static int compare(const Cyclo& a, const Cyclo& b);

  /// The same value re-expressed at the least possible conductor.
  Cyclo minimized() const;

  /// Rendering: "2", "-1/2", "b5", "b7", or "a0 + a1*z(e)^1 + ...".
  std::string str() const;

 private:
  std::uint32_t conductor_;
  std::map<std::uint32_t, Rational> coeffs_;

  void normalize();
  Cyclo raised_to_conductor(std::uint32_t target) const;
};

inline Cyclo operator*(const Rational& r, const Cyclo& c) { return c * r; }

// Spec-facing aliases for the arithmetic kernel.
inline Cyclo cyclo_add(const Cyclo& a, const Cyclo& b) { return a + b; }
inline Cyclo cyclo_mul(const Cyclo& a, const Cyclo& b) { return a * b; }
inline Cyclo cyclo_conj(const Cyclo& a) { return a.conj(); }
inline bool cyclo_eq(const Cyclo& a, const Cyclo& b) { return a == b; }

}  // namespace fgchar
