#include "fgchar/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fgchar/error.hpp"

namespace fgchar {

Perm::Perm(std::vector<std::int32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    require(v >= 0 && v < (int)img_.size() && !seen[v], errc::spec_invalid,
            "image array is not a bijection");
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm operator*(const Perm& a, const Perm& b) {
  require(a.degree() == b.degree(), errc::dimension_mismatch, "permutation degrees differ");
  Perm r;
  r.img_.resize(a.degree());
  for (int i = 0; i < a.degree(); ++i) r.img_[i] = b.img_[a.img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(degree());
  for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
  return r;
}

Perm Perm::conjugated_by(const Perm& g) const {
  require(degree() == g.degree(), errc::dimension_mismatch, "permutation degrees differ");
  Perm r;
  r.img_.resize(degree());
  for (int i = 0; i < degree(); ++i) r.img_[g.img_[i]] = g.img_[img_[i]];
  return r;
}

std::uint64_t Perm::order() const {
  // lcm of cycle lengths
  std::uint64_t result = 1;
  std::vector<bool> seen(degree(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::uint64_t Perm::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : img_) {
    h ^= (std::uint64_t)v + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

Perm Perm::power(long long e) const {
  std::uint64_t n = order();
  long long r = e % (long long)n;
  if (r < 0) r += (long long)n;
  Perm acc(degree()), base = *this;
  while (r) {
    if (r & 1) acc = acc * base;
    base = base * base;
    r >>= 1;
  }
  return acc;
}

std::string Perm::to_cycles() const {
  std::ostringstream os;
  os << '[';
  std::vector<bool> seen(degree(), false);
  bool first_cycle = true;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    if (!first_cycle) os << ',';
    first_cycle = false;
    os << '[';
    bool first = true;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (!first) os << ',';
      first = false;
      os << j;
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Perm Perm::from_cycles(const std::string& text, int degree) {
  std::vector<std::int32_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && isspace((unsigned char)text[i])) ++i;
  };
  auto expect = [&](char c) {
    skip_ws();
    require(i < text.size() && text[i] == c, errc::parse_error,
            std::string("expected '") + c + "' in cycle list: " + text);
    ++i;
  };
  auto parse_int = [&]() -> int {
    skip_ws();
    size_t start = i;
    while (i < text.size() && isdigit((unsigned char)text[i])) ++i;
    require(i > start, errc::parse_error, "expected point number in cycle list: " + text);
    return std::stoi(text.substr(start, i - start));
  };
  expect('[');
  skip_ws();
  if (i < text.size() && text[i] == ']') return Perm(img);
  while (true) {
    expect('[');
    std::vector<int> cycle;
    while (true) {
      int p = parse_int();
      require(p >= 0 && p < degree, errc::parse_error, "point out of range in cycle list");
      cycle.push_back(p);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    expect(']');
    require(cycle.size() >= 2, errc::parse_error, "cycles must have length >= 2");
    for (size_t k = 0; k < cycle.size(); ++k)
      for (size_t l = k + 1; l < cycle.size(); ++l)
        require(cycle[k] != cycle[l], errc::parse_error, "repeated point in cycle");
    for (size_t k = 0; k < cycle.size(); ++k) {
      require(img[cycle[k]] == cycle[k], errc::parse_error, "cycles are not disjoint");
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  expect(']');
  skip_ws();
  require(i == text.size(), errc::parse_error, "trailing characters after cycle list");
  return Perm(img);
}

}  // namespace fgchar
