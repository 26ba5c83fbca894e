#include "fgchar/gf.hpp"

#include <algorithm>

#include "fgchar/error.hpp"
#include "fgchar/numeric.hpp"

namespace fgchar {

namespace {

// Polynomials over GF(p) as coefficient vectors, low degree first.
using Poly = std::vector<std::uint32_t>;

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  while (a.size() >= m.size()) {
    std::uint32_t lead = a.back();
    if (lead != 0) {
      std::uint64_t inv_lead_m = inv_mod(m.back(), p);
      std::uint64_t factor = lead * inv_lead_m % p;
      std::size_t shift = a.size() - m.size();
      for (std::size_t i = 0; i < m.size(); ++i) {
        std::uint64_t sub = factor * m[i] % p;
        a[shift + i] = (std::uint32_t)((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..deg/2. Exact and
// cheap at q <= 2^16.
bool poly_irreducible(const Poly& f, std::uint32_t p) {
  int deg = (int)f.size() - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly divisor(d + 1, 0);
      divisor[d] = 1;
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        divisor[i] = (std::uint32_t)(c % p);
        c /= p;
      }
      if (poly_is_zero(poly_mod(f, divisor, p))) return false;
    }
  }
  return true;
}

}  // namespace

FieldRef FieldSpec::make(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus) {
  require(is_prime_u64(p), errc::not_prime, "field characteristic must be prime");
  require(k >= 1, errc::spec_invalid, "extension degree must be >= 1");
  require(modulus.size() == k + 1, errc::spec_invalid,
          "modulus must have degree equal to the extension degree");
  for (auto& c : modulus) c %= p;
  require(modulus.back() == 1, errc::spec_invalid, "modulus must be monic");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    require(q <= 65536, errc::spec_invalid, "field size q must be at most 2^16");
  }
  require(poly_irreducible(modulus, p), errc::reducible_modulus,
          "modulus is reducible over the prime field");

  auto f = std::shared_ptr<FieldSpec>(new FieldSpec());
  f->p_ = p;
  f->k_ = k;
  f->q_ = q;
  f->modulus_ = std::move(modulus);
  // multiplication-by-x table drives general products
  f->mul_x_.resize(q);
  for (std::uint64_t a = 0; a < q; ++a) {
    // shift coefficients up, reduce the overflow with the modulus
    std::vector<std::uint32_t> coeff(k + 1, 0);
    std::uint64_t t = a;
    for (std::uint32_t i = 0; i < k; ++i) {
      coeff[i + 1] = (std::uint32_t)(t % p);
      t /= p;
    }
    std::uint32_t top = coeff[k];
    std::uint64_t result = 0;
    for (int i = (int)k - 1; i >= 0; --i) {
      std::uint32_t c = (std::uint32_t)((coeff[i] + (std::uint64_t)(p - f->modulus_[i]) * top) % p);
      result = result * p + c;
    }
    f->mul_x_[a] = result;
  }
  return f;
}

std::uint64_t FieldSpec::add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t r = 0, mult = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

std::uint64_t FieldSpec::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t FieldSpec::neg(std::uint64_t a) const {
  std::uint64_t r = 0, mult = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

std::uint64_t FieldSpec::mul(std::uint64_t a, std::uint64_t b) const {
  // schoolbook via the x-multiplication table: b = sum b_i x^i
  std::uint64_t r = 0, xa = a;
  while (b) {
    std::uint64_t digit = b % p_;
    if (digit) {
      // digit * xa, coordinate by coordinate
      std::uint64_t term = 0, mult = 1, t = xa;
      for (std::uint32_t i = 0; i < k_; ++i) {
        term += t % p_ * digit % p_ * mult;
        t /= p_;
        mult *= p_;
      }
      r = add(r, term);
    }
    xa = mul_x_[xa];
    b /= p_;
  }
  return r;
}

std::uint64_t FieldSpec::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint64_t FieldSpec::inv(std::uint64_t a) const {
  require(a != 0, errc::spec_invalid, "inverse of zero");
  return pow(a, q_ - 2);
}

std::uint64_t FieldSpec::from_int(std::int64_t n) const {
  std::int64_t m = n % (std::int64_t)p_;
  if (m < 0) m += p_;
  return (std::uint64_t)m;
}

std::uint64_t FieldSpec::element_of_order(std::uint64_t n) const {
  require((q_ - 1) % n == 0, errc::spec_invalid, "order must divide q-1");
  for (std::uint64_t a = 1; a < q_; ++a) {
    std::uint64_t x = pow(a, (q_ - 1) / n);
    bool primitive = true;
    for (auto r : prime_divisors(n))
      if (pow(x, n / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return x;
  }
  raise(errc::self_check_failed, "no element of the requested order");
}

Matrix Matrix::identity(const FieldRef& f, int n) {
  Matrix m;
  m.field = f;
  m.n = n;
  m.entries.assign((std::size_t)n * n, 0);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::operator==(const Matrix& other) const {
  return n == other.n && entries == other.entries && field->p() == other.field->p() &&
         field->q() == other.field->q();
}

Matrix mat_make(const FieldRef& f, int n, const std::vector<std::int64_t>& ints) {
  require((int)ints.size() == n * n, errc::dimension_mismatch,
          "matrix entry list has the wrong length");
  Matrix m;
  m.field = f;
  m.n = n;
  m.entries.resize((std::size_t)n * n);
  for (std::size_t i = 0; i < ints.size(); ++i) {
    std::int64_t v = ints[i];
    if (v >= 0) {
      require((std::uint64_t)v < f->q(), errc::spec_invalid,
              "matrix entry is not a field element index");
      m.entries[i] = (std::uint64_t)v;
    } else {
      m.entries[i] = f->from_int(v);  // integers embed through the prime field
    }
  }
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require(a.n == b.n && a.field->q() == b.field->q() && a.field->p() == b.field->p(),
          errc::dimension_mismatch, "matrix product requires a common field and dimension");
  Matrix r;
  r.field = a.field;
  r.n = a.n;
  r.entries.assign((std::size_t)a.n * a.n, 0);
  for (int i = 0; i < a.n; ++i)
    for (int l = 0; l < a.n; ++l) {
      std::uint64_t aij = a.at(i, l);
      if (aij == 0) continue;
      for (int j = 0; j < a.n; ++j)
        r.at(i, j) = a.field->add(r.at(i, j), a.field->mul(aij, b.at(l, j)));
    }
  return r;
}

std::uint64_t mat_det(const Matrix& a) {
  Matrix m = a;
  const auto& f = *m.field;
  std::uint64_t det = 1;
  for (int col = 0; col < m.n; ++col) {
    int pivot = -1;
    for (int row = col; row < m.n; ++row)
      if (m.at(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < m.n; ++j) std::swap(m.entries[pivot * m.n + j], m.entries[col * m.n + j]);
      det = f.neg(det);
    }
    det = f.mul(det, m.at(col, col));
    std::uint64_t inv = f.inv(m.at(col, col));
    for (int row = col + 1; row < m.n; ++row) {
      std::uint64_t factor = f.mul(m.at(row, col), inv);
      if (factor == 0) continue;
      for (int j = col; j < m.n; ++j)
        m.at(row, j) = f.sub(m.at(row, j), f.mul(factor, m.at(col, j)));
    }
  }
  return det;
}

std::vector<Perm> vector_action_to_perm(const std::vector<Matrix>& gens) {
  require(!gens.empty(), errc::spec_invalid, "no matrix generators");
  const FieldRef& f = gens[0].field;
  int n = gens[0].n;
  std::uint64_t q = f->q();
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) {
    count *= q;
    require(count - 1 <= 100000, errc::degree_too_large,
            "vector action degree exceeds 10^5 points");
  }
  std::uint64_t points = count - 1;  // nonzero vectors
  for (const auto& g : gens) {
    require(g.n == n && g.field->q() == q, errc::dimension_mismatch,
            "matrix generators must share a field and dimension");
    require(mat_det(g) != 0, errc::spec_invalid, "matrix generator is singular");
  }

  // vector index: 1 + sum(coord_i * q^i) - 1, coordinates least significant first
  std::vector<std::uint64_t> coords(n);
  auto decode = [&](std::uint64_t idx) {
    std::uint64_t v = idx + 1;
    for (int i = 0; i < n; ++i) {
      coords[i] = v % q;
      v /= q;
    }
  };
  std::vector<Perm> out;
  std::vector<std::uint64_t> image(n);
  for (const auto& g : gens) {
    std::vector<std::int32_t> img(points);
    for (std::uint64_t idx = 0; idx < points; ++idx) {
      decode(idx);
      for (int i = 0; i < n; ++i) {
        std::uint64_t acc = 0;
        for (int j = 0; j < n; ++j) acc = f->add(acc, f->mul(g.at(i, j), coords[j]));
        image[i] = acc;
      }
      std::uint64_t enc = 0;
      for (int i = n - 1; i >= 0; --i) enc = enc * q + image[i];
      img[idx] = (std::int32_t)(enc - 1);
    }
    out.push_back(Perm(std::move(img)));
  }
  return out;
}

}  // namespace fgchar
