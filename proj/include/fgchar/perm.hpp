#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fgchar {

/// A permutation of {0,...,d-1}, stored as its image array.
/// Products compose left-to-right: (a*b) applies a first, then b.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree) : img_(degree) {
    for (int i = 0; i < degree; ++i) img_[i] = i;
  }
  explicit Perm(std::vector<std::int32_t> images);

  int degree() const { return (int)img_.size(); }
  std::int32_t operator[](int i) const { return img_[i]; }
  const std::vector<std::int32_t>& images() const { return img_; }

  bool is_identity() const;
  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
  // Lexicographic order on image arrays; the canonical order everywhere.
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  friend Perm operator*(const Perm& a, const Perm& b);

  Perm inverse() const;
  /// g^-1 * this * g, computed in one pass.
  Perm conjugated_by(const Perm& g) const;
  std::uint64_t order() const;
  std::uint64_t hash() const;
  Perm power(long long e) const;

  /// Disjoint-cycle form on 0-based points, e.g. "[[0,1,2],[3,4]]"; identity is "[]".
  std::string to_cycles() const;
  static Perm from_cycles(const std::string& text, int degree);

 private:
  std::vector<std::int32_t> img_;
};

}  // namespace fgchar
