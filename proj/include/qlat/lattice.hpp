#pragma once

// Lattices presented by exact symmetric Gram matrices, and the structural
// operations on them: sums, rescaling, signature, discriminant groups,
// orthogonal complements, primitive closures and radical quotients.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlat/arith.hpp"
#include "qlat/matrix.hpp"

namespace qlat {

class GramLattice {
 public:
  GramLattice() = default;
  // Throws kInvalidArgument unless `gram` is square and symmetric.
  explicit GramLattice(QMatrix gram, std::vector<std::string> labels = {}, std::string name = {});

  std::size_t rank() const { return gram_.rows(); }
  const QMatrix& gram() const { return gram_; }
  // Least positive integer s with s * gram integral.
  const Integer& scale() const { return scale_; }
  bool integral() const { return scale_ == 1; }
  ZMatrix scaled_gram() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  // Index of a basis label; throws kInvalidArgument if absent.
  std::size_t index_of(std::string_view label) const;
  // Basis vector by label, as integral coordinates.
  QVector basis_vector(std::string_view label) const;

  Rational inner(const QVector& x, const QVector& y) const { return bilinear(gram_, x, y); }
  Rational norm(const QVector& x) const { return bilinear(gram_, x, x); }
  // Products of x with every basis vector, i.e. gram * x.
  QVector products_with_basis(const QVector& x) const { return gram_ * x; }

  friend bool operator==(const GramLattice& a, const GramLattice& b) { return a.gram_ == b.gram_; }

 private:
  QMatrix gram_;
  Integer scale_ = 1;
  std::vector<std::string> labels_;
  std::string name_;
};

// A sublattice of an ambient lattice, given by a basis of integral ambient
// coordinate rows.
class Sublattice {
 public:
  Sublattice(std::shared_ptr<const GramLattice> ambient, ZMatrix basis);

  const GramLattice& ambient() const { return *ambient_; }
  std::shared_ptr<const GramLattice> ambient_ptr() const { return ambient_; }
  const ZMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.rows(); }
  QVector basis_vector(std::size_t i) const;
  // The induced form on the basis, as a lattice in its own coordinates.
  GramLattice as_lattice(std::string name = {}) const;
  // Ambient coordinates of sum_i c_i b_i.
  QVector to_ambient(const QVector& coeffs) const;
  // Coefficients of an ambient vector in the span; throws kNotContained.
  QVector coordinates(const QVector& ambient_vector) const;
  bool contains(const QVector& ambient_vector) const;
  bool is_saturated() const;

 private:
  std::shared_ptr<const GramLattice> ambient_;
  ZMatrix basis_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct DiscriminantGroup {
  ZVector invariant_factors;        // each >= 2, each dividing the next
  std::vector<QVector> generators;  // lifts in L tensor Q, lattice coordinates
  QMatrix pairing;                  // generator products reduced into [0, 1)
  QVector norms;                    // generator norms reduced into [0, 2)
  Integer order() const;
  Integer exponent() const;
};

// Standard lattices: A_n, D_n, E6, E7, E8 (Bourbaki numbering), U, I, and
// G2root (the A2 lattice underlying a G2 root system).
GramLattice make_standard(std::string_view name, std::optional<int> n = std::nullopt);
GramLattice direct_sum(const std::vector<GramLattice>& parts);
GramLattice rescale(const GramLattice& lattice, const Rational& c);
// Copies of a lattice: repeat(E8, 2) = E8 + E8.
GramLattice repeat(const GramLattice& lattice, int count);

Signature signature(const GramLattice& lattice);
Rational determinant(const GramLattice& lattice);
bool is_positive_definite(const GramLattice& lattice);
bool is_even(const GramLattice& lattice);
bool is_unimodular(const GramLattice& lattice);
DiscriminantGroup discriminant_group(const GramLattice& lattice);
// Class of x in L^* / L, as residues modulo the invariant factors.
ZVector discriminant_class(const GramLattice& lattice, const QVector& x);

// The saturated sublattice {x in L : x.s = 0 for all s in S}.
Sublattice orthogonal_complement(const Sublattice& s);
// Same, for an explicit list of ambient vectors (rational allowed).
Sublattice orthogonal_complement(std::shared_ptr<const GramLattice> ambient, const std::vector<QVector>& vectors);
Sublattice saturate(const Sublattice& s);
Sublattice span(std::shared_ptr<const GramLattice> ambient, const std::vector<QVector>& vectors);

struct QuotientLattice {
  GramLattice lattice;  // the nondegenerate form on S / rad(S)
  ZMatrix lift;         // ambient rows lifting the quotient basis
  ZMatrix radical;      // ambient rows spanning rad(S)
};
QuotientLattice radical_quotient(const Sublattice& s);

// gcd of the products of an integral vector with a basis of `within`.
Integer divisor(const GramLattice& lattice, const QVector& v);
Integer divisor(const Sublattice& within, const QVector& ambient_vector);

// Lattice specification grammar:  spec := term ('+' term)*,
// term := [count] NAME [ '(' rational ')' ], e.g. "2E8+2U+3I", "I(-1)".
GramLattice parse_lattice_spec(std::string_view text);

}  // namespace qlat
