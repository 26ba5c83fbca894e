#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fgchar/perm.hpp"

namespace fgchar {

/// A finite field GF(p^k) presented as GF(p)[x] modulo an explicit monic
/// irreducible polynomial. Any irreducible modulus is accepted; only the
/// isomorphism class matters.
class FieldSpec {
 public:
  static std::shared_ptr<const FieldSpec> make(std::uint32_t p, std::uint32_t k,
                                               std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint64_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  /// Field elements are indexed 0..q-1 by their coefficient tuple, least
  /// significant coordinate first; 0 is zero, 1 is one, and index p is x.
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t from_int(std::int64_t n) const;  // image of an integer in GF(p)
  std::uint64_t element_of_order(std::uint64_t n) const;

 private:
  FieldSpec() = default;
  std::uint32_t p_ = 0, k_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> mul_x_;  // index -> index of x*element
};

using FieldRef = std::shared_ptr<const FieldSpec>;

/// Square matrix over a FieldSpec; entries are field element indices.
struct Matrix {
  FieldRef field;
  int n = 0;
  std::vector<std::uint64_t> entries;  // row-major

  static Matrix identity(const FieldRef& f, int n);
  std::uint64_t& at(int i, int j) { return entries[i * n + j]; }
  std::uint64_t at(int i, int j) const { return entries[i * n + j]; }
  bool operator==(const Matrix& other) const;
};

Matrix mat_make(const FieldRef& f, int n, const std::vector<std::int64_t>& ints);
Matrix mat_mul(const Matrix& a, const Matrix& b);
std::uint64_t mat_det(const Matrix& a);

/// Permutations of the q^n - 1 nonzero vectors (fixed lexicographic order,
/// least significant coordinate first) induced by left multiplication.
std::vector<Perm> vector_action_to_perm(const std::vector<Matrix>& gens);

}  // namespace fgchar
