#include "fgchar/chartab.hpp"

#include <algorithm>
#include <sstream>

#include "fgchar/error.hpp"

namespace fgchar {

namespace {

// dense vectors/matrices over GF(l), l < 2^31
using FVec = std::vector<std::uint64_t>;
using FMat = std::vector<FVec>;

struct PrimeField {
  std::uint64_t l;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % l; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + l - b) % l; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % l; }
  std::uint64_t inv(std::uint64_t a) const { return inv_mod(a, l); }
};

// Row echelon reduction; returns the pivot column of each surviving row.
std::vector<int> echelonize(FMat& m, const PrimeField& f) {
  std::vector<int> pivots;
  std::size_t row = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pr = row;
    while (pr < m.size() && m[pr][col] == 0) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[row], m[pr]);
    std::uint64_t s = f.inv(m[row][col]);
    for (auto& v : m[row]) v = f.mul(v, s);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      std::uint64_t factor = m[r][col];
      for (std::size_t c2 = 0; c2 < cols; ++c2)
        m[r][c2] = f.sub(m[r][c2], f.mul(factor, m[row][c2]));
    }
    pivots.push_back((int)col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Nullspace basis (rows) of a square matrix over GF(l).
FMat nullspace(FMat m, const PrimeField& f) {
  std::size_t n = m.size();
  std::vector<int> pivots = echelonize(m, f);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  FMat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    FVec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct LiftedCharacter {
  std::uint64_t degree;
  FVec values;  // mod l, per class
};

}  // namespace

std::vector<std::vector<std::int64_t>> class_matrix(const ClassData& cd, int j) {
  const GroupRef& g = cd.group;
  const ElementTable& table = g->elements();
  int c = cd.num_classes();
  std::vector<std::vector<std::int64_t>> m(c, std::vector<std::int64_t>(c, 0));
  std::vector<Perm> inverses;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (cd.el2class[i] == j) inverses.push_back(table.elems[i].inverse());
  for (int k = 0; k < c; ++k) {
    const Perm& rep = cd.reps[k];
    for (const auto& xinv : inverses) ++m[cd.el2class[table.index_of(xinv * rep)]][k];
  }
  return m;
}

const CharacterTable& character_table(const GroupRef& g) {
  return *group_slot<CharacterTable>(*g, "chartab", [&] {
    auto tab = std::make_shared<CharacterTable>();
    tab->group = g;
    const ClassData& cd = conjugacy_classes(g);
    std::uint64_t n = g->small_order();
    int c = cd.num_classes();
    std::uint64_t e = cd.exponent;
    tab->exponent = e;
    for (int i = 0; i < c; ++i) tab->centralizer_orders.push_back(Integer(n / cd.sizes[i]));

    // the least prime l = 1 (mod e) with l^2 > 4|G| makes degrees and
    // multiplicities recoverable from their residues
    std::uint64_t l = e + 1;
    while (!(is_prime_u64(l) && l * l > 4 * n)) l += e;
    tab->lifting_prime = l;
    PrimeField f{l};
    // a fixed primitive e-th root of unity mod l
    std::uint64_t z = 1;
    if (e > 1) {
      z = 0;
      for (std::uint64_t a = 2; a < l && z == 0; ++a) {
        std::uint64_t cand = pow_mod(a, (l - 1) / e, l);
        bool primitive = true;
        for (auto p : prime_divisors(e))
          if (pow_mod(cand, e / p, l) == 1) primitive = false;
        if (primitive) z = cand;
      }
      require(z != 0, errc::self_check_failed, "no primitive e-th root mod l");
    }

    // split the coordinate space under the class matrices until every common
    // eigenspace is one-dimensional
    std::vector<FMat> spaces;
    {
      FMat whole(c, FVec(c, 0));
      for (int i = 0; i < c; ++i) whole[i][i] = 1;
      spaces.push_back(std::move(whole));
    }
    for (int j = 1; j < c; ++j) {
      bool all_one = true;
      for (const auto& s : spaces) all_one = all_one && s.size() == 1;
      if (all_one) break;
      auto mj = class_matrix(cd, j);
      // row vectors act through the transpose
      FMat nt(c, FVec(c, 0));
      for (int i = 0; i < c; ++i)
        for (int k = 0; k < c; ++k) nt[i][k] = (std::uint64_t)(mj[k][i] % (std::int64_t)l);
      std::vector<FMat> next;
      for (auto& space : spaces) {
        std::size_t d = space.size();
        if (d == 1) {
          next.push_back(std::move(space));
          continue;
        }
        // work in the reduced echelon basis of the subspace throughout
        FMat basis = space;
        std::vector<int> pivots = echelonize(basis, f);
        require(basis.size() == d, errc::self_check_failed, "dependent subspace basis");
        FMat action(d, FVec(d, 0));
        for (std::size_t r = 0; r < d; ++r) {
          FVec img(c, 0);
          for (int i = 0; i < c; ++i) {
            if (basis[r][i] == 0) continue;
            for (int k = 0; k < c; ++k) img[k] = f.add(img[k], f.mul(basis[r][i], nt[i][k]));
          }
          for (std::size_t br = 0; br < d; ++br) {
            std::uint64_t coeff = img[pivots[br]];
            action[r][br] = coeff;
            if (coeff == 0) continue;
            for (int k = 0; k < c; ++k) img[k] = f.sub(img[k], f.mul(coeff, basis[br][k]));
          }
          for (int k = 0; k < c; ++k)
            require(img[k] == 0, errc::self_check_failed,
                    "class matrix does not preserve an eigenspace");
        }
        bool split = false;
        for (std::uint64_t lam = 0; lam < l; ++lam) {
          // coefficient rows u transform as u -> u*action, so eigenvectors
          // form the left nullspace of (action - lam); transpose for the solver
          FMat shifted(d, FVec(d, 0));
          for (std::size_t r = 0; r < d; ++r)
            for (std::size_t s2 = 0; s2 < d; ++s2) shifted[r][s2] = action[s2][r];
          for (std::size_t r = 0; r < d; ++r) shifted[r][r] = f.sub(shifted[r][r], lam);
          FMat kernel = nullspace(std::move(shifted), f);
          if (kernel.empty()) continue;
          if (kernel.size() == d) break;  // the whole space is one eigenspace
          split = true;
          FMat sub;
          for (const auto& kv : kernel) {
            FVec v(c, 0);
            for (std::size_t r = 0; r < d; ++r) {
              if (kv[r] == 0) continue;
              for (int k = 0; k < c; ++k) v[k] = f.add(v[k], f.mul(kv[r], basis[r][k]));
            }
            sub.push_back(std::move(v));
          }
          next.push_back(std::move(sub));
        }
        if (!split) next.push_back(std::move(space));
      }
      spaces = std::move(next);
    }
    require((int)spaces.size() == c, errc::self_check_failed,
            "eigenspace splitting did not separate all characters");

    // degrees and value tables mod l from the normalized eigenvectors
    std::vector<LiftedCharacter> lifted;
    for (auto& space : spaces) {
      require(space.size() == 1, errc::self_check_failed, "non-simple common eigenspace");
      FVec w = space[0];
      require(w[0] != 0, errc::self_check_failed, "central character vanishes on the identity");
      std::uint64_t scale = f.inv(w[0]);
      for (auto& v : w) v = f.mul(v, scale);
      std::uint64_t s = 0;
      for (int j = 0; j < c; ++j)
        s = f.add(s, f.mul(f.mul(w[j], w[cd.inverse_class[j]]), f.inv(cd.sizes[j] % l)));
      require(s != 0, errc::self_check_failed, "norm sum vanishes mod l");
      std::uint64_t dsq = f.mul(n % l, f.inv(s));
      std::uint64_t degree = 0;
      for (std::uint64_t d = 1; 2 * d < l; ++d)
        if (f.mul(d, d) == dsq) {
          degree = d;
          break;
        }
      require(degree != 0, errc::self_check_failed, "degree recovery failed mod l");
      LiftedCharacter lc;
      lc.degree = degree;
      lc.values.resize(c);
      for (int j = 0; j < c; ++j)
        lc.values[j] = f.mul(f.mul(degree, w[j]), f.inv(cd.sizes[j] % l));
      lifted.push_back(std::move(lc));
    }

    // exact lift: on a class of element order m the value is a sum of m-th
    // roots of unity; each multiplicity is recovered from its residue since
    // it lies in [0, degree] and degree < l/2
    for (const auto& lc : lifted) {
      ClassFunction chi;
      chi.group = g;
      chi.values.resize(c);
      for (int j = 0; j < c; ++j) {
        std::uint64_t m = cd.rep_orders[j];
        std::uint64_t zm = pow_mod(z, e / m, l);
        std::uint64_t zm_inv = f.inv(zm);
        std::vector<int> power_class(m);
        for (std::uint64_t s2 = 0; s2 < m; ++s2) power_class[s2] = cd.class_of_power(j, s2);
        Cyclo value;
        std::uint64_t total = 0;
        std::uint64_t m_inv = f.inv(m % l);
        for (std::uint64_t t = 0; t < m; ++t) {
          std::uint64_t acc = 0;
          for (std::uint64_t s2 = 0; s2 < m; ++s2)
            acc = f.add(acc, f.mul(lc.values[power_class[s2]], pow_mod(zm_inv, s2 * t % m, l)));
          std::uint64_t mult = f.mul(acc, m_inv);
          require(mult <= lc.degree, errc::self_check_failed,
                  "eigenvalue multiplicity exceeds the degree");
          total += mult;
          if (mult != 0)
            value += Cyclo(Rational((long long)mult)) *
                     Cyclo::root_of_unity((std::uint32_t)e, t * (e / m));
        }
        require(total == lc.degree, errc::self_check_failed,
                "eigenvalue multiplicities do not sum to the degree");
        chi.values[j] = value;
      }
      tab->irreducibles.push_back(std::move(chi));
    }

    std::sort(tab->irreducibles.begin(), tab->irreducibles.end(),
              [](const ClassFunction& a, const ClassFunction& b) {
                Integer da = a.degree().integer_value(), db = b.degree().integer_value();
                if (da != db) return da < db;
                for (std::size_t i = 0; i < a.values.size(); ++i) {
                  int cmp = Cyclo::compare(a.values[i], b.values[i]);
                  if (cmp != 0) return cmp < 0;
                }
                return false;
              });

    // table invariants, all exact
    require((int)tab->irreducibles.size() == c, errc::self_check_failed,
            "wrong number of irreducible characters");
    Integer degsum = 0;
    for (const auto& chi : tab->irreducibles) {
      Integer d = chi.degree().integer_value();
      degsum += d * d;
      require(Integer(n) % d == 0, errc::self_check_failed,
              "character degree does not divide the group order");
    }
    require(degsum == Integer(n), errc::self_check_failed, "degree squares do not sum to |G|");
    for (int a = 0; a < c; ++a)
      for (int b = a; b < c; ++b) {
        Cyclo ip;
        for (int j = 0; j < c; ++j)
          ip += Cyclo(Rational(cd.sizes[j])) * tab->irreducibles[a].values[j] *
                tab->irreducibles[b].values[j].conj();
        require(ip == Cyclo(Rational(a == b ? (long long)n : 0)), errc::self_check_failed,
                "row orthogonality fails");
      }
    for (int i = 0; i < c; ++i)
      for (int j = i; j < c; ++j) {
        Cyclo ip;
        for (const auto& chi : tab->irreducibles) ip += chi.values[i] * chi.values[j].conj();
        Cyclo expect = i == j ? Cyclo(Rational(tab->centralizer_orders[i])) : Cyclo();
        require(ip == expect, errc::self_check_failed, "column orthogonality fails");
      }
    return tab;
  });
}

std::string render_character_table(const GroupRef& g) {
  const CharacterTable& tab = character_table(g);
  const ClassData& cd = conjugacy_classes(g);
  std::ostringstream os;
  os << "order=" << g->order() << " classes=" << tab.num_classes()
     << " exponent=" << tab.exponent << "\n";
  os << "class:";
  for (int j = 0; j < cd.num_classes(); ++j) os << " " << cd.reps[j].to_cycles();
  os << "\n";
  os << "size:";
  for (int j = 0; j < cd.num_classes(); ++j) os << " " << cd.sizes[j];
  os << "\n";
  os << "element_order:";
  for (int j = 0; j < cd.num_classes(); ++j) os << " " << cd.rep_orders[j];
  os << "\n";
  for (std::size_t i = 0; i < tab.irreducibles.size(); ++i) {
    os << "X" << i + 1 << ":";
    for (const auto& v : tab.irreducibles[i].values) os << " " << v.str();
    os << "\n";
  }
  return os.str();
}

}  // namespace fgchar
