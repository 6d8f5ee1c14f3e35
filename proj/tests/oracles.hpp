#pragma once

// Independent reference computations used by the unit tests.  Nothing here
// shares code paths with the library's enumeration or classification.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "qlat/lattice.hpp"

namespace oracle {

using qlat::Integer;
using qlat::QMatrix;
using qlat::QVector;
using qlat::Rational;

// Brute-force box search for all integral x with x.Gx = n.  Coordinate
// bounds come from Cauchy-Schwarz with the inverse Gram:
// x_i^2 <= n * (G^{-1})_ii.
inline std::set<std::vector<long>> box_search(const QMatrix& gram, const Rational& n) {
  const std::size_t r = gram.rows();
  const QMatrix inv = qlat::inverse(gram);
  std::vector<long> bound(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Rational b2 = n * inv(i, i);
    long b = 0;
    while (Rational((b + 1) * (b + 1)) <= b2) ++b;
    bound[i] = b;
  }
  std::set<std::vector<long>> out;
  std::vector<long> x(r);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == r) {
      Rational s = 0;
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) s += gram(a, b) * x[a] * x[b];
      if (s == n) out.insert(x);
      return;
    }
    for (long v = -bound[i]; v <= bound[i]; ++v) {
      x[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

inline std::vector<long> to_longs(const QVector& v) {
  std::vector<long> out;
  for (const auto& q : v) out.push_back(q.get_num().get_si());
  return out;
}

// A random unimodular integer matrix built from elementary operations.
inline qlat::ZMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 30) {
  qlat::ZMatrix m = qlat::ZMatrix::identity(n);
  if (n < 2) return m;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const int c = coef(rng);
    for (std::size_t k = 0; k < n; ++k) m(i, k) += c * m(j, k);
  }
  return m;
}

inline qlat::GramLattice transform(const qlat::GramLattice& l, const qlat::ZMatrix& t) {
  const QMatrix tq = qlat::to_rational(t);
  return qlat::GramLattice(tq * l.gram() * tq.transposed());
}

// Isometry test for small positive definite lattices: try to realize the
// target Gram by vectors of `l` (backtracking over short vectors), then
// confirm the realized vectors generate l by comparing determinants.
inline bool isometric_definite(const qlat::GramLattice& l, const QMatrix& target) {
  if (l.rank() != target.rows()) return false;
  if (qlat::determinant(l.gram()) != qlat::determinant(target)) return false;
  const std::size_t r = l.rank();
  std::vector<std::vector<QVector>> pools(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (const auto& x : box_search(l.gram(), target(i, i))) {
      QVector v;
      for (long c : x) v.emplace_back(c);
      pools[i].push_back(v);
    }
  }
  std::vector<QVector> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == r) return true;
    for (const auto& v : pools[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = l.inner(v, chosen[j]) == target(i, j);
      if (!ok) continue;
      chosen.push_back(v);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace oracle
