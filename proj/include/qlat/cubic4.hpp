#pragma once

// The lattice of the cubic fourfold period domain: Lambda = 2E8+2U+3I with
// eta = eps1+eps2+eps3, Lambda_o = eta-perp = 2E8+2U+A2, and the hyperbolic
// lattice Lambda_1 = e2-perp / Z e2 = 2E8+A2+U.  Special vectors, short
// roots, the explicit long roots of the fundamental polyhedron, the
// short-root pairing law, isotropic planes and the arrangement incidence.

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "qlat/rootsys.hpp"
#include "qlat/vinberg.hpp"

namespace qlat {

// Coordinates of Lambda: alpha1..alpha8 (0..7), alpha'1..alpha'8 (8..15),
// e, f, e2, f2 (16..19), eps1..eps3 (20..22).
// Coordinates of Lambda_1: the two E8 copies (0..15), beta1, beta2 (16, 17),
// e, f (18, 19).
struct AmbientSetup {
  std::shared_ptr<const GramLattice> lambda;
  std::shared_ptr<const GramLattice> lambda1;
  Sublattice lambda_o;
  QVector eta;
  std::array<QVector, 3> eps;
  std::array<QVector, 3> h;  // h_i = eta - 3 eps_i
  QVector beta0, beta1, beta2;
  QVector e, f, e2, f2;
  // Row i is the fundamental weight w_{i+1} in the root basis of E8.
  QMatrix weights;
};

AmbientSetup build_setup();
const AmbientSetup& setup();

// Lambda coordinates of alpha_i or w_i in E8 copy 0 or 1 (i in 1..8).
QVector lambda_root(int copy, int i);
QVector lambda_weight(int copy, int i);
// The canonical section Lambda_1 -> e2-perp in Lambda_o and its inverse,
// which requires x in Lambda_o with x.e2 = 0 and forgets the e2 coordinate.
QVector lift_to_lambda(const QVector& x1);
QVector to_lambda1(const QVector& x);

// h.h = 6 and (eta - h)/3 in Lambda.  Throws kInvalidArgument unless h is
// in Lambda_o.
bool is_special(const QVector& h);
// h/3 with norm 2/3; throws kInvalidArgument unless h is special or if the
// reflection fails to preserve Lambda_o.
Root short_root(const QVector& h);
// Whether x -> x - 2 (x.v)/(v.v) v maps a basis of Lambda_o into Lambda_o.
bool reflection_preserves_lambda_o(const QVector& v);

struct SpecialSetReport {
  bool conforming = false;
  bool positive_definite = false;
  std::string reason;
};
// For special vectors spanning a positive definite lattice: distinct
// members pair to -3, at most three, and a triple sums to zero.
SpecialSetReport special_set_check(const std::vector<QVector>& s);

// Random element of the stabilizer of eta, as a word in reflections s_v
// (v in a fixed set of norm-2 vectors of Lambda_o) and maps -s_h (h
// special), applied to x.
class GammaSampler {
 public:
  explicit GammaSampler(std::uint64_t seed);
  QVector apply(const QVector& x, std::size_t length);
  // Same word applied to several vectors.
  std::vector<QVector> apply(const std::vector<QVector>& xs, std::size_t length);

 private:
  std::mt19937_64 rng_;
  std::vector<QVector> long_, special_;
};

// Divisor of v in Lambda_o and the class of v/div in the discriminant group.
struct EichlerInvariant {
  Integer divisor;
  ZVector discriminant_class;
  friend bool operator==(const EichlerInvariant&, const EichlerInvariant&) = default;
};
// v in Lambda coordinates, integral, in Lambda_o and primitive there.
EichlerInvariant eichler_invariant(const QVector& v);
// A primitive isotropic vector of Lambda_o drawn from a seeded generator.
QVector random_isotropic(std::mt19937_64& rng);

// The explicit long roots, in Lambda_1 coordinates.  `source` is the
// defining expression, `label` the vertex of the subdivided join.
struct NamedRoot {
  std::string source;
  std::string label;
  QVector vector;
  Rational norm;
};
// Unverified vectors, labels empty.
std::vector<NamedRoot> figure1_vectors();

struct Figure1Report {
  bool ok = false;
  std::string failing;  // source of the first vector found at fault
  std::string reason;
};
Figure1Report verify_figure1(const std::vector<NamedRoot>& roots);
// Verified and labeled; throws kVerificationFailed with the failing vector.
std::vector<NamedRoot> figure1_roots();
Diagram figure1_diagram();

// A bijection between B' = {a,b,c} and B'' = {u,v,w}: forward maps B' to B''
// with image[i] the index of the image of the i-th element.
struct ShortRootIndex {
  bool forward = true;
  std::array<int, 3> image{0, 1, 2};
  friend bool operator==(const ShortRootIndex&, const ShortRootIndex&) = default;
};
std::string to_string(const ShortRootIndex& s);
std::vector<ShortRootIndex> all_short_indices();
// Product of the short roots r_sigma and r_tau; throws if sigma == tau.
Rational short_pairing(const ShortRootIndex& sigma, const ShortRootIndex& tau);

// Labels of the vertices of a diagram of 24 long and 12 short roots:
// long vertices by an isomorphism onto the join model, short vertices by
// the bijection read off their long neighbours (r_sigma meets r_{x sigma(x)}).
struct ShortRootLabeling {
  std::vector<std::string> long_labels;  // per vertex, empty for short ones
  std::vector<std::pair<std::size_t, ShortRootIndex>> shorts;
};
ShortRootLabeling label_short_roots(const Diagram& d);

struct PairingReport {
  std::size_t pairs = 0;
  std::size_t matches = 0;
  std::vector<Rational> values;  // distinct products seen, sorted
};
PairingReport check_short_pairing(const Diagram& d);

// The run of Vinberg's algorithm on Lambda_1 from v0 = f - e, computed once.
const VinbergRun& lambda1_vinberg();
QVector lambda1_default_v0();

// Canonical form of a multiset label: "A11+D7" and "D7+A11" agree, and
// "~" marks are dropped.
std::string canonical_label(const std::string& label);

inline const std::array<std::string, 6> kPlaneLabels{"2E8", "D16", "A17", "E7+D10", "3E6", "D7+A11"};

// K = saturation of (e2, lift of the null vector of the maximal pure
// affine subdiagram of the long-root diagram with this finite label), as a
// sublattice of Lambda.
Sublattice isotropic_plane_from_affine(const std::string& label);

struct PlaneClassification {
  RootSystemType full;        // all roots of K-perp/K
  RootSystemType long_roots;  // the norm-2 roots only
  RootSystemType stripped;    // full without G2 and A1s components
  std::size_t long_root_count = 0;
  GramLattice quotient;       // K-perp/K
};
PlaneClassification classify_isotropic_plane(const Sublattice& k);

struct SpanIndex {
  Integer index;
  bool cyclic = false;
  // The generator of (K-perp/K)/Q is nonzero in every component of Q^*/Q.
  bool diagonal = false;
  std::string root_label;
};
// Q = span of the norm-2 vectors of K-perp/K.
SpanIndex root_span_index(const Sublattice& k);

struct ArrangementResult {
  bool meets = false;
  QVector witness;  // a special vector orthogonal to K, when found
  std::size_t classes = 0;
};
// Whether a special vector is orthogonal to K(label), by a complete search.
ArrangementResult stratum_meets_arrangement(const std::string& label, std::uint64_t budget = kDefaultBudget);

}  // namespace qlat
