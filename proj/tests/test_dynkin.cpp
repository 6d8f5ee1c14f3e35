#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <set>

#include "qlat/dynkin.hpp"
#include "qlat/lattice.hpp"

using namespace qlat;

namespace {

// Diagram of explicit vectors in Z^n with the standard form.
Diagram euclidean(const std::vector<std::vector<Rational>>& vs) {
  const std::size_t n = vs.front().size();
  const GramLattice z(QMatrix::identity(n));
  std::vector<QVector> roots(vs.begin(), vs.end());
  return build_diagram(z, roots);
}

QVector e(std::size_t n, std::size_t i, const Rational& c = 1) {
  QVector v(n, Rational(0));
  v[i] = c;
  return v;
}

std::vector<std::vector<Rational>> chain(std::size_t n) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(e(n, i) - e(n, i + 1));
  return out;
}

ComponentType whole(const Diagram& d) { return classify_connected(d, d.all()); }

Diagram from_gram(const QMatrix& g) { return Diagram(g); }

// Standard Gram with an extra vertex attached by a simple bond.
Diagram extend(const GramLattice& l, std::size_t attach) {
  const std::size_t n = l.rank();
  QMatrix g(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = l.gram()(i, j);
  g(n, n) = 2;
  g(n, attach) = g(attach, n) = -1;
  return from_gram(g);
}

// Oracle: a connected diagram is finite iff its Gram is positive definite,
// affine iff positive semidefinite with one-dimensional radical.
Kind kind_by_signature(const Diagram& d) {
  const Signature s = signature(GramLattice(d.products()));
  if (s.negative == 0 && s.zero == 0) return Kind::kFinite;
  if (s.negative == 0 && s.zero == 1) return Kind::kAffine;
  return Kind::kIndefinite;
}

}  // namespace

TEST(Bonds, CosineRule) {
  EXPECT_EQ(bond_from_product(-1, 2, 2), Bond::kSimple);
  EXPECT_EQ(bond_from_product(-1, 2, 1), Bond::kDouble);
  EXPECT_EQ(bond_from_product(-1, 2, Rational(2, 3)), Bond::kTriple);
  EXPECT_EQ(bond_from_product(-2, 2, 2), Bond::kAffine);
  EXPECT_EQ(bond_from_product(Rational(-2, 3), Rational(2, 3), Rational(2, 3)), Bond::kAffine);
  EXPECT_EQ(bond_from_product(Rational(-4, 3), Rational(2, 3), Rational(2, 3)), Bond::kDotted);
  EXPECT_EQ(bond_from_product(1, 2, 2), Bond::kPositive);
  EXPECT_EQ(bond_from_product(0, 2, 2), Bond::kNone);
}

TEST(BuildDiagram, EdgesAndRejection) {
  const GramLattice a2 = make_standard("A2");
  const Diagram d = build_diagram(a2, {e(2, 0), e(2, 1)});
  EXPECT_EQ(d.bond(0, 1), Bond::kSimple);
  EXPECT_EQ(whole(d).label, "A2");
  EXPECT_THROW(build_diagram(a2, {e(2, 0), e(2, 0, 2)}), Error);
  EXPECT_THROW(build_diagram(a2, {e(2, 0), e(2, 0)}), Error);
  // Reading back the Gram reproduces the products.
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(d.products()(i, j), a2.gram()(i, j));
}

TEST(Classify, FiniteTypes) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const ComponentType t = whole(from_gram(make_standard("A", static_cast<int>(n)).gram()));
    EXPECT_EQ(t.label, "A" + std::to_string(n));
    EXPECT_EQ(t.kind, Kind::kFinite);
  }
  for (int n = 4; n <= 9; ++n) EXPECT_EQ(whole(from_gram(make_standard("D", n).gram())).label, "D" + std::to_string(n));
  for (const char* name : {"E6", "E7", "E8"}) EXPECT_EQ(whole(from_gram(make_standard(name).gram())).label, name);
  for (std::size_t n = 3; n <= 6; ++n) {
    auto b = chain(n);
    b.push_back(e(n, n - 1));
    EXPECT_EQ(whole(euclidean(b)).label, "B" + std::to_string(n));
    auto c = chain(n);
    c.push_back(e(n, n - 1, 2));
    EXPECT_EQ(whole(euclidean(c)).label, "C" + std::to_string(n));
  }
  const Rational h(1, 2);
  EXPECT_EQ(whole(euclidean({e(4, 1) - e(4, 2), e(4, 2) - e(4, 3), e(4, 3), QVector{h, -h, -h, -h}})).label, "F4");
  EXPECT_EQ(whole(from_gram(QMatrix::from_rows({{2, -1}, {-1, Rational(2, 3)}}, 2))).label, "G2");
  EXPECT_EQ(whole(from_gram(QMatrix::from_rows({{2}}, 1))).label, "A1");
}

TEST(Classify, AffineTypes) {
  EXPECT_EQ(whole(extend(make_standard("E6"), 1)).label, "~E6");
  EXPECT_EQ(whole(extend(make_standard("E7"), 0)).label, "~E7");
  EXPECT_EQ(whole(extend(make_standard("E8"), 7)).label, "~E8");
  for (int n = 4; n <= 10; ++n) {
    // Affine D_n: the extra node hangs off the second vertex.
    const Diagram d = extend(make_standard("D", n), 1);
    EXPECT_EQ(whole(d).label, "~D" + std::to_string(n));
    EXPECT_EQ(whole(d).rank, static_cast<std::size_t>(n));
  }
  for (int n = 2; n <= 11; ++n) {
    QMatrix g = make_standard("A", n + 1).gram();
    g(0, n) = g(n, 0) = -1;
    EXPECT_EQ(whole(from_gram(g)).label, "~A" + std::to_string(n));
  }
  EXPECT_EQ(whole(from_gram(QMatrix::from_rows({{2, -2}, {-2, 2}}, 2))).label, "~A1");
  for (std::size_t n = 3; n <= 6; ++n) {
    auto b = chain(n);
    b.push_back(e(n, n - 1));
    b.push_back(-(e(n, 0) + e(n, 1)));
    EXPECT_EQ(whole(euclidean(b)).label, "~B" + std::to_string(n));
    auto c = chain(n);
    c.push_back(e(n, n - 1, 2));
    c.push_back(e(n, 0, -2));
    EXPECT_EQ(whole(euclidean(c)).label, "~C" + std::to_string(n));
  }
  const Rational h(1, 2);
  EXPECT_EQ(whole(euclidean({e(4, 1) - e(4, 2), e(4, 2) - e(4, 3), e(4, 3), QVector{h, -h, -h, -h},
                             -(e(4, 0) + e(4, 1))}))
                .label,
            "~F4");
  const QMatrix g2 = QMatrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, Rational(2, 3)}}, 3);
  EXPECT_EQ(whole(from_gram(g2)).label, "~G2");
}

TEST(Classify, ShortAndHyperbolicPairs) {
  const Rational s(2, 3);
  const Diagram pair = from_gram(QMatrix::from_rows({{s, Rational(-4, 3)}, {Rational(-4, 3), s}}, 2));
  EXPECT_EQ(whole(pair).label, "hyperbolic");
  EXPECT_EQ(whole(pair).kind, Kind::kIndefinite);
  // Two short roots at product -2/3 next to a long root: the short pair is ~A1s.
  const Diagram mixed = from_gram(QMatrix::from_rows({{s, Rational(-2, 3), 0}, {Rational(-2, 3), s, 0}, {0, 0, 2}}, 3));
  const auto comps = classify_components(mixed);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].type.label, "~A1s");
  EXPECT_EQ(comps[1].type.label, "A1");
  EXPECT_EQ(classify_connected(mixed, 1).label, "A1s");
  EXPECT_EQ(multiset_label({comps[0].type, comps[1].type}), "A1+~A1s");
}

TEST(Classify, AgreesWithSignatureOnRandomSimplyLacedGraphs) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> size_dist(2, 11);
  std::uniform_real_distribution<double> coin(0, 1);
  int affine_seen = 0, finite_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = static_cast<std::size_t>(size_dist(rng));
    const double p = 1.2 / static_cast<double>(n);
    QMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
    // Random tree plus occasional extra edges keeps most samples connected.
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t j = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
      g(i, j) = g(j, i) = -1;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(rng) < p * 0.3) g(i, j) = g(j, i) = -1;
    const Diagram d = from_gram(g);
    const ComponentType t = whole(d);
    EXPECT_EQ(t.kind, kind_by_signature(d)) << "label " << t.label;
    affine_seen += t.kind == Kind::kAffine;
    finite_seen += t.kind == Kind::kFinite;
  }
  EXPECT_GT(affine_seen, 5);
  EXPECT_GT(finite_seen, 50);
}

TEST(NullVector, MarksSumToCoxeterNumber) {
  auto sum = [](const ZVector& z) {
    Integer s = 0;
    for (const auto& x : z) s += x;
    return s;
  };
  auto all = [](const Diagram& d) { return d.all(); };
  const Diagram e6 = extend(make_standard("E6"), 1), e7 = extend(make_standard("E7"), 0),
                e8 = extend(make_standard("E8"), 7), d7 = extend(make_standard("D", 7), 1);
  EXPECT_EQ(sum(null_vector(e6, all(e6))), 12);
  EXPECT_EQ(sum(null_vector(e7, all(e7))), 18);
  EXPECT_EQ(sum(null_vector(e8, all(e8))), 30);
  EXPECT_EQ(sum(null_vector(d7, all(d7))), 12);
  // The null vector annihilates every product.
  const ZVector z = null_vector(e8, all(e8));
  for (std::size_t i = 0; i < e8.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < e8.size(); ++j) s += e8.products()(i, j) * z[j];
    EXPECT_EQ(s, 0);
  }
  EXPECT_THROW(null_vector(from_gram(make_standard("E8").gram()), 0xff), Error);
}

TEST(Automorphisms, SmallCases) {
  EXPECT_EQ(automorphism_order(from_gram(make_standard("A2").gram())), 2u);
  EXPECT_EQ(automorphism_order(from_gram(make_standard("E8").gram())), 1u);
  EXPECT_EQ(automorphism_order(from_gram(make_standard("E6").gram())), 2u);
  EXPECT_EQ(automorphism_order(from_gram(make_standard("D", 4).gram())), 6u);
  EXPECT_EQ(automorphism_order(extend(make_standard("E6"), 1)), 6u);
}

TEST(JoinModel, ShapeAndSymmetry) {
  const Diagram j = join_model();
  EXPECT_EQ(j.size(), 24u);
  std::size_t deg3 = 0, deg2 = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    deg3 += j.degree(i) == 3;
    deg2 += j.degree(i) == 2;
  }
  EXPECT_EQ(deg3, 6u);
  EXPECT_EQ(deg2, 18u);
  EXPECT_EQ(automorphism_order(j), 72u);
  EXPECT_TRUE(find_isomorphism(j, j).has_value());
  EXPECT_FALSE(find_isomorphism(j, from_gram(make_standard("A", 24).gram())).has_value());
}

TEST(MaximalPureAffine, MatchesBruteForceOnSmallDiagrams) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 9 + static_cast<std::size_t>(trial % 4);
    QMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
    std::uniform_real_distribution<double> coin(0, 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(rng) < 0.28) g(i, j) = g(j, i) = -1;
    std::vector<QVector> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(e(n, i));
    const Diagram d(g, {}, basis);

    // Brute force: pure affine subsets, judged by the signature oracle on
    // each component, then maximal under inclusion.
    std::vector<Mask> pure;
    for (Mask m = 1; m < (Mask(1) << n); ++m) {
      bool ok = true;
      for (Mask c : connected_components(d, m)) {
        if (kind_by_signature(d.induced(c)) != Kind::kAffine) {
          ok = false;
          break;
        }
      }
      if (ok) pure.push_back(m);
    }
    std::set<Mask> maximal;
    for (Mask m : pure) {
      bool is_max = true;
      for (Mask o : pure)
        if (o != m && (o & m) == m) is_max = false;
      if (is_max) maximal.insert(m);
    }
    std::set<Mask> got;
    for (const auto& a : maximal_pure_affine(d, n)) {
      got.insert(a.vertices);
      EXPECT_EQ(a.corank, n - static_cast<std::size_t>(std::popcount(a.vertices)));
      // No single vertex can be added.
      for (std::size_t v = 0; v < n; ++v)
        if (!(a.vertices >> v & 1)) EXPECT_FALSE(is_pure_affine(d, a.vertices | (Mask(1) << v)));
    }
    EXPECT_EQ(got, maximal) << "trial " << trial;
  }
}

TEST(Dot, RendersVerticesAndEdges) {
  const std::string dot = to_dot(join_model(), "J");
  EXPECT_NE(dot.find("graph J {"), std::string::npos);
  std::size_t edges = 0, pos = 0;
  while ((pos = dot.find(" -- ", pos)) != std::string::npos) ++edges, ++pos;
  EXPECT_EQ(edges, 27u);
  EXPECT_EQ(dot, to_dot(join_model(), "J"));
}
