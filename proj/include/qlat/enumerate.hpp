#pragma once

// Lattice point enumeration (LLL + Fincke-Pohst in exact arithmetic) and
// crystallographic root enumeration.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qlat/lattice.hpp"

namespace qlat {

// Default cap on search-tree nodes before kResourceExhausted is raised.
inline constexpr std::uint64_t kDefaultBudget = 200'000'000;

struct LllResult {
  GramLattice lattice;  // Gram of the reduced basis
  ZMatrix transform;    // rows: reduced basis vectors in the original coordinates
};

// Exact LLL with Lovasz constant 3/4.  Throws kNotPositiveDefinite.
LllResult lll_reduce(const GramLattice& lattice);

// Every v in shift + Z^n (original coordinates) with lo <= v.v <= hi is
// passed to `visit` together with its norm.  Throws kNotPositiveDefinite and
// kResourceExhausted.
using VectorVisitor = std::function<void(const QVector& v, const Rational& norm)>;
void for_each_in_shell(const GramLattice& lattice, const QVector& shift, const Rational& lo, const Rational& hi,
                       const VectorVisitor& visit, std::uint64_t budget = kDefaultBudget);

// All lattice vectors of norm exactly n, sorted lexicographically.
std::vector<QVector> enumerate_norm(const GramLattice& lattice, const Rational& n,
                                    std::uint64_t budget = kDefaultBudget);
// All v in shift + lattice with v.v = n, sorted lexicographically.
std::vector<QVector> enumerate_affine(const GramLattice& lattice, const QVector& shift, const Rational& n,
                                      std::uint64_t budget = kDefaultBudget);

// A root v of L: v.v = n > 0, v primitive in L^*, and (2/n) v in L, so the
// reflection x -> x - (2 x.v / n) v preserves L.
struct Root {
  QVector vector;  // ambient coordinates
  Rational norm;
  friend bool operator==(const Root&, const Root&) = default;
};

// True iff the reflection in v maps every basis vector of L into L.
bool is_crystallographic(const GramLattice& lattice, const QVector& v);
QVector reflect(const GramLattice& lattice, const QVector& root, const QVector& x);

// Norms n = 2/d or 1/d (d dividing the exponent of L^*/L) that a root of L can have.
std::vector<Rational> candidate_root_norms(const Integer& exponent);

// L^* cap span(within), as basis rows in ambient coordinates.  Requires L
// integral and nondegenerate.
struct DualSpan {
  QMatrix basis;
  Integer exponent;  // least e with e * basis integral
};
DualSpan dual_in_span(const GramLattice& lattice, const Sublattice& within);

// All roots of L lying in span(within) (all of L when absent), grouped by
// decreasing norm and sorted lexicographically within each norm.  For an
// indefinite search space only isotropic binary forms are supported;
// anything else raises kUnbounded.
std::vector<Root> roots_of(const std::shared_ptr<const GramLattice>& lattice,
                           const std::optional<Sublattice>& within = std::nullopt,
                           std::uint64_t budget = kDefaultBudget);
std::vector<Root> roots_of(const GramLattice& lattice, std::uint64_t budget = kDefaultBudget);

}  // namespace qlat
