#pragma once

// Vinberg's algorithm for hyperbolic lattices, with an exact finite-volume
// test by walking the vertices and edges of the candidate polyhedron.

#include <string>
#include <vector>

#include "qlat/dynkin.hpp"
#include "qlat/enumerate.hpp"

namespace qlat {

enum class VinbergStatus { kRunning, kFiniteVolume, kBudgetExhausted };
std::string_view status_name(VinbergStatus s);

struct VinbergRun {
  std::shared_ptr<const GramLattice> lattice;
  QVector v0;
  std::vector<Root> accepted;     // in acceptance order
  std::vector<Rational> weights;  // (r.v0)^2 / (r.r), parallel to `accepted`
  std::size_t stabilizer_count = 0;
  Rational max_weight;
  VinbergStatus status = VinbergStatus::kRunning;
};

// A simple system of the finite root system {r : r.v0 = 0}, positive for the
// lexicographic order of coordinates.  Throws kInvalidArgument unless
// v0.v0 < 0.
std::vector<Root> stabilizer_chamber(const std::shared_ptr<const GramLattice>& lattice, const QVector& v0,
                                     std::uint64_t budget = kDefaultBudget);

// Accepts roots in order of increasing weight (ties: lexicographic) until
// the polyhedron has finite volume or max_weight is passed.  Requires
// signature (rank-1, 1).
VinbergRun run_vinberg(const std::shared_ptr<const GramLattice>& lattice, const QVector& v0,
                       const Rational& max_weight = 200, std::uint64_t budget = kDefaultBudget);

struct PolytopeReport {
  bool finite_volume = false;
  std::size_t proper_vertices = 0;
  std::size_t ideal_vertices = 0;
  std::size_t edges = 0;
  std::string reason;  // why the test failed
};

// Walks the 1-skeleton of {x : r.x <= 0 for all roots r}, starting from a
// point `inside` of negative norm satisfying all constraints.  Finite volume
// holds iff every vertex reached lies in the closed light cone and each
// vertex has the local structure of a simple proper vertex or a cusp.
PolytopeReport polytope_report(const GramLattice& lattice, const std::vector<QVector>& roots, const QVector& inside);

bool finite_volume_check(const VinbergRun& run);

Diagram run_diagram(const VinbergRun& run);

}  // namespace qlat
