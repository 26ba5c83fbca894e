#include "fgchar/cyclo.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "fgchar/error.hpp"

namespace fgchar {

namespace {

// Dense integer polynomials, low degree first.
using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Exact division, used only where the remainder is known to vanish.
ZPoly zdivide(ZPoly num, const ZPoly& den) {
  ZPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Integer(0));
  while (num.size() >= den.size()) {
    Integer c = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    ztrim(num);
    if (num.size() < den.size()) break;
  }
  require(num.empty(), errc::self_check_failed, "non-exact cyclotomic polynomial division");
  return quot;
}

// Per-conductor context: the cyclotomic polynomial and the reduction table
// zeta^j -> integer polynomial of degree < phi(e), for all j in [0, e).
struct CycloCtx {
  std::uint32_t e;
  std::uint32_t phi;
  ZPoly cyclotomic;               // Phi_e, monic, degree phi
  std::vector<ZPoly> power_red;   // j -> x^j mod Phi_e
};

ZPoly cyclotomic_poly(std::uint32_t e);

std::mutex& ctx_mutex() {
  static std::mutex m;
  return m;
}

const CycloCtx& ctx_for(std::uint32_t e) {
  static std::unordered_map<std::uint32_t, std::unique_ptr<CycloCtx>> cache;
  {
    std::lock_guard<std::mutex> lock(ctx_mutex());
    auto it = cache.find(e);
    if (it != cache.end()) return *it->second;
  }
  // computed outside the lock: cyclotomic_poly recurses into ctx_for
  auto ctx = std::make_unique<CycloCtx>();
  ctx->e = e;
  ctx->cyclotomic = cyclotomic_poly(e);
  ctx->phi = (std::uint32_t)(ctx->cyclotomic.size() - 1);
  ctx->power_red.resize(e);
  ZPoly cur = {Integer(1)};
  for (std::uint32_t j = 0; j < e; ++j) {
    ctx->power_red[j] = cur;
    // multiply by x, reduce the top coefficient with the monic Phi_e
    cur.insert(cur.begin(), Integer(0));
    if (cur.size() == ctx->cyclotomic.size()) {
      Integer top = cur.back();
      cur.pop_back();
      if (top != 0)
        for (std::uint32_t i = 0; i < ctx->phi; ++i) cur[i] -= top * ctx->cyclotomic[i];
    }
    ztrim(cur);
  }
  std::lock_guard<std::mutex> lock(ctx_mutex());
  auto [it, inserted] = cache.emplace(e, nullptr);
  if (inserted) it->second = std::move(ctx);
  return *it->second;
}

ZPoly cyclotomic_poly(std::uint32_t e) {
  // (x^e - 1) / prod of Phi_d over proper divisors d of e
  ZPoly num(e + 1, Integer(0));
  num[0] = -1;
  num[e] = 1;
  for (std::uint32_t d = 1; d < e; ++d)
    if (e % d == 0) num = zdivide(std::move(num), ctx_for(d).cyclotomic);
  return num;
}

}  // namespace

void Cyclo::normalize() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
  if (coeffs_.empty()) {
    conductor_ = 1;
  } else if (coeffs_.size() == 1 && coeffs_.begin()->first == 0) {
    conductor_ = 1;  // rational values live at conductor 1
  }
}

Cyclo::Cyclo(const Rational& r) : conductor_(1) {
  if (r != 0) coeffs_[0] = r;
}

Cyclo Cyclo::root_of_unity(std::uint32_t e, std::uint64_t k) {
  require(e >= 1, errc::spec_invalid, "conductor must be positive");
  const CycloCtx& ctx = ctx_for(e);
  Cyclo c;
  c.conductor_ = e;
  const ZPoly& red = ctx.power_red[k % e];
  for (std::size_t i = 0; i < red.size(); ++i)
    if (red[i] != 0) c.coeffs_[(std::uint32_t)i] = Rational(red[i]);
  c.normalize();
  return c;
}

Cyclo Cyclo::b5() { return root_of_unity(5, 1) + root_of_unity(5, 4); }
Cyclo Cyclo::b7() {
  return root_of_unity(7, 1) + root_of_unity(7, 2) + root_of_unity(7, 4);
}
Cyclo Cyclo::b5_star() { return b5().galois(2); }
Cyclo Cyclo::b7_star() { return b7().conj(); }

bool Cyclo::is_rational() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rational Cyclo::rational_value() const {
  require(is_rational(), errc::self_check_failed, "value is not rational");
  return coeffs_.empty() ? Rational(0) : coeffs_.begin()->second;
}

bool Cyclo::is_integer() const { return is_rational() && rat_is_integer(rational_value()); }

Integer Cyclo::integer_value() const {
  require(is_integer(), errc::self_check_failed, "value is not an integer");
  return rat_num(rational_value());
}

// Re-expresses the value in the power basis of Q(zeta_target); keeps the
// stated conductor (no rational downgrade) so callers can merge coefficient
// maps at a common conductor.
Cyclo Cyclo::raised_to_conductor(std::uint32_t target) const {
  if (conductor_ == target) return *this;
  require(target % conductor_ == 0, errc::self_check_failed, "conductor embedding mismatch");
  std::uint32_t scale = target / conductor_;
  const CycloCtx& ctx = ctx_for(target);
  Cyclo out;
  out.conductor_ = target;
  for (const auto& [j, c] : coeffs_) {
    const ZPoly& red = ctx.power_red[(std::uint64_t)j * scale % target];
    for (std::size_t i = 0; i < red.size(); ++i)
      if (red[i] != 0) out.coeffs_[(std::uint32_t)i] += c * Rational(red[i]);
  }
  for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();)
    it = (it->second == 0) ? out.coeffs_.erase(it) : std::next(it);
  return out;
}

Cyclo Cyclo::operator+(const Cyclo& other) const {
  std::uint32_t l = std::lcm(conductor_, other.conductor_);
  Cyclo a = raised_to_conductor(l), b = other.raised_to_conductor(l);
  for (const auto& [j, c] : b.coeffs_) a.coeffs_[j] += c;
  a.normalize();
  return a;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& [j, c] : r.coeffs_) c = -c;
  return r;
}

Cyclo Cyclo::operator-(const Cyclo& other) const { return *this + (-other); }

Cyclo Cyclo::operator*(const Cyclo& other) const {
  if (is_zero() || other.is_zero()) return Cyclo();
  std::uint32_t l = std::lcm(conductor_, other.conductor_);
  Cyclo a = raised_to_conductor(l), b = other.raised_to_conductor(l);
  const CycloCtx& ctx = ctx_for(l);
  Cyclo out;
  out.conductor_ = l;
  for (const auto& [j1, c1] : a.coeffs_)
    for (const auto& [j2, c2] : b.coeffs_) {
      Rational c = c1 * c2;
      const ZPoly& red = ctx.power_red[((std::uint64_t)j1 + j2) % l];
      for (std::size_t i = 0; i < red.size(); ++i)
        if (red[i] != 0) out.coeffs_[(std::uint32_t)i] += c * Rational(red[i]);
    }
  out.normalize();
  return out;
}

Cyclo Cyclo::operator*(const Rational& r) const {
  if (r == 0) return Cyclo();
  Cyclo out = *this;
  for (auto& [j, c] : out.coeffs_) c *= r;
  return out;
}

bool Cyclo::operator==(const Cyclo& other) const {
  std::uint32_t l = std::lcm(conductor_, other.conductor_);
  return raised_to_conductor(l).coeffs_ == other.raised_to_conductor(l).coeffs_;
}

Cyclo Cyclo::galois(std::uint64_t k) const {
  require(std::gcd((std::uint64_t)conductor_, k) == 1, errc::spec_invalid,
          "galois exponent must be coprime to the conductor");
  const CycloCtx& ctx = ctx_for(conductor_);
  Cyclo out;
  out.conductor_ = conductor_;
  for (const auto& [j, c] : coeffs_) {
    const ZPoly& red = ctx.power_red[(std::uint64_t)j * k % conductor_];
    for (std::size_t i = 0; i < red.size(); ++i)
      if (red[i] != 0) out.coeffs_[(std::uint32_t)i] += c * Rational(red[i]);
  }
  out.normalize();
  return out;
}

Cyclo Cyclo::conj() const {
  if (conductor_ == 1) return *this;
  return galois(conductor_ - 1);
}

int Cyclo::compare(const Cyclo& a, const Cyclo& b) {
  std::uint32_t l = std::lcm(a.conductor_, b.conductor_);
  Cyclo ae = a.raised_to_conductor(l), be = b.raised_to_conductor(l);
  const CycloCtx& ctx = ctx_for(l);
  for (std::uint32_t j = 0; j < ctx.phi; ++j) {
    auto ia = ae.coeffs_.find(j);
    auto ib = be.coeffs_.find(j);
    Rational ca = ia == ae.coeffs_.end() ? Rational(0) : ia->second;
    Rational cb = ib == be.coeffs_.end() ? Rational(0) : ib->second;
    if (ca != cb) return ca < cb ? -1 : 1;
  }
  return 0;
}

Cyclo Cyclo::minimized() const {
  if (conductor_ == 1) return *this;
  for (std::uint32_t d = 1; d < conductor_; ++d) {
    if (conductor_ % d != 0) continue;
    // the value lies in Q(zeta_d) iff it is fixed by every galois map
    // zeta -> zeta^k with k = 1 (mod d)
    bool stable = true;
    for (std::uint32_t k = 1 + d; k < conductor_ && stable; k += d)
      if (std::gcd(k, conductor_) == 1 && galois(k) != *this) stable = false;
    if (!stable) continue;
    // solve for coordinates in the power basis of Q(zeta_d) by exact
    // elimination over the rationals
    const CycloCtx& ctx = ctx_for(conductor_);
    std::uint32_t phi_d = (std::uint32_t)(ctx_for(d).cyclotomic.size() - 1);
    std::vector<std::vector<Rational>> aug(ctx.phi, std::vector<Rational>(phi_d + 1, Rational(0)));
    for (std::uint32_t t = 0; t < phi_d; ++t) {
      Cyclo basis = root_of_unity(conductor_, (std::uint64_t)t * (conductor_ / d));
      for (const auto& [j, c] : basis.coeffs_) aug[j][t] = c;
    }
    for (const auto& [j, c] : coeffs_) aug[j][phi_d] = c;
    std::size_t row = 0;
    std::vector<int> pivot_col;
    for (std::uint32_t col = 0; col < phi_d && row < aug.size(); ++col) {
      std::size_t pr = row;
      while (pr < aug.size() && aug[pr][col] == 0) ++pr;
      if (pr == aug.size()) continue;
      std::swap(aug[row], aug[pr]);
      Rational s = aug[row][col];
      for (auto& v : aug[row]) v /= s;
      for (std::size_t r = 0; r < aug.size(); ++r) {
        if (r == row || aug[r][col] == 0) continue;
        Rational factor = aug[r][col];
        for (std::uint32_t c2 = 0; c2 <= phi_d; ++c2) aug[r][c2] -= factor * aug[row][c2];
      }
      pivot_col.push_back((int)col);
      ++row;
    }
    bool consistent = true;
    for (std::size_t r = row; r < aug.size() && consistent; ++r)
      if (aug[r][phi_d] != 0) consistent = false;
    if (!consistent) continue;
    Cyclo out;
    out.conductor_ = d;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      if (aug[r][phi_d] != 0) out.coeffs_[(std::uint32_t)pivot_col[r]] = aug[r][phi_d];
    out.normalize();
    return out;
  }
  return *this;
}

std::string Cyclo::str() const {
  if (is_rational()) {
    std::ostringstream os;
    os << rational_value();
    return os.str();
  }
  for (const auto& [name, value] :
       std::initializer_list<std::pair<const char*, Cyclo>>{{"b5", b5()},
                                                            {"b5*", b5_star()},
                                                            {"b7", b7()},
                                                            {"b7*", b7_star()}}) {
    if (*this == value) return name;
    if (*this == -value) return std::string("-") + name;
  }
  Cyclo small = minimized();
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, c] : small.coeffs_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    Rational mag = (!first && c < 0) ? Rational(-c) : c;
    first = false;
    if (j == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "z(" << small.conductor_ << ")";
      if (j != 1) os << "^" << j;
    }
  }
  return os.str();
}

}  // namespace fgchar
