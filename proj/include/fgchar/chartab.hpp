#pragma once

#include <string>
#include <vector>

#include "fgchar/classfun.hpp"
#include "fgchar/structure.hpp"

namespace fgchar {

/// The full list of irreducible characters, sorted by (degree, value tuple).
/// Constructed by simultaneous splitting of class-matrix eigenspaces over a
/// prime field GF(l) with e | l-1 and l > 2*sqrt(|G|), then lifting values
/// exactly as root-of-unity multiplicity sums. All invariants (orthogonality,
/// degree sum, degree divisibility) are verified at construction.
struct CharacterTable {
  GroupRef group;
  std::uint64_t exponent = 1;
  std::uint64_t lifting_prime = 0;
  std::vector<ClassFunction> irreducibles;
  std::vector<Integer> centralizer_orders;  // per class

  int num_classes() const { return (int)irreducibles.size(); }
};

const CharacterTable& character_table(const GroupRef& g);

/// Class multiplication coefficients for a fixed class j: entry (i, k) counts
/// the x in class j with x^{-1} g_k in class i. Every column sums to |class j|.
std::vector<std::vector<std::int64_t>> class_matrix(const ClassData& classes, int j);

/// Text dump: header with class representatives, sizes and element orders,
/// then one line per irreducible with exact values.
std::string render_character_table(const GroupRef& g);

}  // namespace fgchar
