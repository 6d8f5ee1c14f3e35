#pragma once

// Coxeter-Dynkin diagrams of root sets: bonds from exact products,
// finite/affine component classification, maximal pure-affine subdiagrams,
// isomorphisms and automorphism counts, and DOT/JSON rendering.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlat/lattice.hpp"

namespace qlat {

enum class Bond { kNone, kSimple, kDouble, kTriple, kAffine, kDotted, kPositive, kOther };
std::string_view bond_name(Bond b);
// Bond type from the product p of two roots of norms n1, n2.
Bond bond_from_product(const Rational& p, const Rational& n1, const Rational& n2);

// Vertex subsets are bit masks; diagrams are limited to 64 vertices.
using Mask = std::uint64_t;
inline constexpr std::size_t kMaxDiagramSize = 64;

class Diagram {
 public:
  Diagram() = default;
  // Gram matrix of the vertex roots; names default to "r0", "r1", ...
  explicit Diagram(QMatrix products, std::vector<std::string> names = {}, std::vector<QVector> vectors = {});

  std::size_t size() const { return norms_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Rational>& norms() const { return norms_; }
  const QMatrix& products() const { return products_; }
  // Ambient coordinates of the vertex roots, if the diagram came from roots.
  const std::vector<QVector>& vectors() const { return vectors_; }
  Bond bond(std::size_t i, std::size_t j) const { return bonds_[i * size() + j]; }
  Mask neighbors(std::size_t i) const { return adjacency_[i]; }
  Mask all() const { return size() == 64 ? ~Mask(0) : (Mask(1) << size()) - 1; }
  std::size_t degree(std::size_t i) const;
  // Whether vertex i has the smaller of two norms present in the diagram.
  bool is_short(std::size_t i) const { return norms_[i] < max_norm_; }
  Diagram induced(Mask m) const;

 private:
  std::vector<std::string> names_;
  std::vector<Rational> norms_;
  QMatrix products_;
  std::vector<QVector> vectors_;
  std::vector<Bond> bonds_;
  std::vector<Mask> adjacency_;
  Rational max_norm_;
};

// One vertex per root.  Throws kInvalidArgument on proportional roots.
Diagram build_diagram(const GramLattice& lattice, const std::vector<QVector>& roots,
                      std::vector<std::string> names = {});

enum class Kind { kFinite, kAffine, kIndefinite };
std::string_view kind_name(Kind k);

struct ComponentType {
  Kind kind = Kind::kIndefinite;
  std::string label;  // e.g. "E6", "B3", "A1s", "~E6", "~A1s", "hyperbolic"
  std::size_t rank = 0;
};

struct Component {
  Mask vertices = 0;
  ComponentType type;
};

std::vector<Mask> connected_components(const Diagram& d, Mask m);
// Classification of a connected vertex set.
ComponentType classify_connected(const Diagram& d, Mask m);
std::vector<Component> classify_components(const Diagram& d, Mask m);
std::vector<Component> classify_components(const Diagram& d);

// Canonical multiset label, e.g. "3~E6", "~A11+~D7", "2E8+G2".
std::string multiset_label(std::vector<ComponentType> types);

bool is_finite_type(const Diagram& d, Mask m);
bool is_pure_affine(const Diagram& d, Mask m);

// Positive primitive integer null vector of a connected affine vertex set,
// indexed like the set bits of m in increasing order.
ZVector null_vector(const Diagram& d, Mask m);

struct AffineSubdiagram {
  Mask vertices = 0;
  std::vector<Component> components;
  std::string label;
  std::size_t corank = 0;  // rank(L) - rank(span of the vertex vectors)
};

// All connected affine full subdiagrams inside `within`.
std::vector<Mask> affine_catalog(const Diagram& d, Mask within);
// All maximal pure-affine full subdiagrams; corank needs the diagram vectors
// and the ambient rank.
std::vector<AffineSubdiagram> maximal_pure_affine(const Diagram& d, std::size_t ambient_rank);
std::vector<AffineSubdiagram> maximal_pure_affine(const Diagram& d, std::size_t ambient_rank, Mask within);

// Vertex bijections preserving norms and products exactly.
std::optional<std::vector<std::size_t>> find_isomorphism(const Diagram& a, const Diagram& b);
std::uint64_t automorphism_order(const Diagram& d);

// The join of B' = {a,b,c} and B'' = {u,v,w} with every join edge
// subdivided twice: vertices a..w plus "xy" (adjacent to x) and "yx"
// (adjacent to y) for every x in B', y in B''.  All norms 2, products -1.
Diagram join_model();

std::string to_dot(const Diagram& d, const std::string& graph_name = "D");

}  // namespace qlat
