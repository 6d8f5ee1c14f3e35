#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "qlat/enumerate.hpp"

using namespace qlat;

namespace {

// Random positive definite Gram A A^T with A = I + small noise.
GramLattice random_definite(std::size_t rank, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> noise(-1, 1);
  for (;;) {
    QMatrix a = QMatrix::identity(rank);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) a(i, j) += noise(rng);
    if (determinant(a) == 0) continue;
    GramLattice l(a * a.transposed());
    const QMatrix inv = inverse(l.gram());
    double box = 1;
    for (std::size_t i = 0; i < rank; ++i) box *= 2 * std::sqrt(8 * inv(i, i).get_d()) + 1;
    if (box < 1e5) return l;
  }
}

std::set<std::vector<long>> as_set(const std::vector<QVector>& vs) {
  std::set<std::vector<long>> out;
  for (const auto& v : vs) out.insert(oracle::to_longs(v));
  return out;
}

}  // namespace

TEST(Lll, ReducedInputUnchanged) {
  const LllResult r = lll_reduce(make_standard("A2"));
  EXPECT_EQ(r.transform, ZMatrix::identity(2));
}

TEST(Lll, ScrambledE8ComesBackShort) {
  std::mt19937_64 rng(11);
  const GramLattice e8 = make_standard("E8");
  for (int trial = 0; trial < 5; ++trial) {
    const GramLattice scrambled = oracle::transform(e8, oracle::random_unimodular(8, rng, 60));
    const LllResult r = lll_reduce(scrambled);
    EXPECT_EQ(abs(determinant(to_rational(r.transform))), 1);
    EXPECT_EQ(determinant(r.lattice), determinant(scrambled));
    for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(r.lattice.gram()(i, i), 2) << "trial " << trial;
    // The transform really maps the scrambled Gram to the reduced one.
    EXPECT_EQ(oracle::transform(scrambled, r.transform).gram(), r.lattice.gram());
  }
}

TEST(Lll, RejectsIndefinite) { EXPECT_THROW(lll_reduce(make_standard("U")), Error); }

TEST(EnumerateNorm, MatchesBoxSearchOnRandomLattices) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> rank_dist(1, 6);
  for (int trial = 0; trial < 20; ++trial) {
    const GramLattice l = random_definite(rank_dist(rng), rng);
    for (int n = 1; n <= 8; ++n) {
      const auto fast = enumerate_norm(l, n);
      const auto slow = oracle::box_search(l.gram(), n);
      EXPECT_EQ(as_set(fast), slow) << "trial " << trial << " norm " << n;
      EXPECT_EQ(fast.size(), slow.size());
    }
  }
}

TEST(EnumerateNorm, KnownCounts) {
  EXPECT_EQ(enumerate_norm(make_standard("E8"), 2).size(), 240u);
  EXPECT_EQ(enumerate_norm(make_standard("E8"), 4).size(), 2160u);
  EXPECT_EQ(enumerate_norm(make_standard("A2"), 2).size(), 6u);
  EXPECT_EQ(enumerate_norm(make_standard("D", 16), 2).size(), 480u);
  EXPECT_TRUE(enumerate_norm(make_standard("E8"), 1).empty());
  EXPECT_TRUE(enumerate_norm(make_standard("E8"), Rational(1, 2)).empty());
  EXPECT_THROW(enumerate_norm(make_standard("U"), 2), Error);
}

TEST(EnumerateNorm, ClosedUnderNegationAndSorted) {
  const auto vs = enumerate_norm(parse_lattice_spec("E6+A2"), 2);
  const auto s = as_set(vs);
  for (const auto& v : vs) {
    auto neg = oracle::to_longs(-v);
    EXPECT_TRUE(s.count(neg));
  }
  for (std::size_t i = 1; i < vs.size(); ++i) EXPECT_TRUE(lex_less(vs[i - 1], vs[i]));
}

TEST(EnumerateNorm, BudgetExhaustionIsAnError) {
  try {
    enumerate_norm(make_standard("E8"), 8, 1000);
    FAIL() << "budget not enforced";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResourceExhausted);
  }
}

TEST(EnumerateAffine, CosetsAndShells) {
  const GramLattice a1 = make_standard("A", 1);
  const auto half = enumerate_affine(a1, {Rational(1, 2)}, Rational(1, 2));
  ASSERT_EQ(half.size(), 2u);
  EXPECT_EQ(half[0][0], Rational(-1, 2));
  EXPECT_EQ(half[1][0], Rational(1, 2));
  EXPECT_EQ(enumerate_affine(make_standard("E8"), QVector(8, Rational(0)), 2).size(), 240u);
  EXPECT_TRUE(enumerate_affine(a1, {Rational(1, 2)}, Rational(1, 4)).empty());

  // Coset of a weight in A2: the three vectors of minimal norm 2/3.
  const GramLattice a2 = make_standard("A2");
  const QVector w = solve(a2.gram(), {Rational(1), Rational(0)});
  EXPECT_EQ(enumerate_affine(a2, w, Rational(2, 3)).size(), 3u);

  // Rank above the LLL threshold against the box oracle on a shifted coset.
  const GramLattice l = parse_lattice_spec("D4+A2");
  const QVector shift(6, Rational(1, 3));
  std::size_t brute = 0;
  for_each_in_shell(l, shift, 0, 4, [&](const QVector& v, const Rational& n) {
    EXPECT_EQ(l.norm(v), n);
    EXPECT_TRUE(is_integral(v - shift));
    ++brute;
  });
  // Direct count with a wide box around the shift.
  std::size_t direct = 0;
  const QMatrix inv = inverse(l.gram());
  std::vector<long> bound(6);
  for (std::size_t i = 0; i < 6; ++i) bound[i] = static_cast<long>(std::sqrt(4 * inv(i, i).get_d())) + 2;
  std::vector<long> x(6);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == 6) {
      QVector v(6);
      for (std::size_t k = 0; k < 6; ++k) v[k] = shift[k] + x[k];
      if (l.norm(v) <= 4) ++direct;
      return;
    }
    for (long c = -bound[i]; c <= bound[i]; ++c) {
      x[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  EXPECT_EQ(brute, direct);
}

TEST(Roots, E8AndA2) {
  const auto e8 = roots_of(make_standard("E8"));
  EXPECT_EQ(e8.size(), 240u);
  for (const auto& r : e8) EXPECT_EQ(r.norm, 2);
  // A2 by itself admits the reflections in its weights: the G2 configuration.
  const auto a2 = roots_of(make_standard("A2"));
  EXPECT_EQ(a2.size(), 12u);
  std::size_t long_count = 0;
  for (const auto& r : a2) long_count += r.norm == 2;
  EXPECT_EQ(long_count, 6u);
}

TEST(Roots, HyperbolicPlane) {
  const auto u = roots_of(make_standard("U"));
  ASSERT_EQ(u.size(), 2u);
  EXPECT_EQ(u[0].vector, (QVector{Rational(-1), Rational(-1)}));
  EXPECT_EQ(u[1].vector, (QVector{Rational(1), Rational(1)}));
  EXPECT_EQ(u[0].norm, 2);
  EXPECT_THROW(roots_of(parse_lattice_spec("A2+U")), Error);
}

TEST(Roots, G2InsideTheA2SummandOfEtaPerp) {
  auto lambda = std::make_shared<const GramLattice>(parse_lattice_spec("2E8+2U+3I"));
  QVector eta(23, Rational(0));
  eta[20] = eta[21] = eta[22] = 1;
  const Sublattice lo = orthogonal_complement(lambda, {eta});
  auto lo_lat = std::make_shared<const GramLattice>(lo.as_lattice());
  // beta1 = eps1 - eps2, beta2 = eps2 - eps3 in Lambda_o coordinates.
  QVector b1(23, Rational(0)), b2(23, Rational(0));
  b1[20] = 1, b1[21] = -1, b2[21] = 1, b2[22] = -1;
  const Sublattice a2(lo_lat, to_integer(QMatrix::from_rows({lo.coordinates(b1), lo.coordinates(b2)}, 22)));
  const auto roots = roots_of(lo_lat, a2);
  ASSERT_EQ(roots.size(), 12u);
  std::size_t shorts = 0;
  for (const auto& r : roots) {
    EXPECT_TRUE(is_crystallographic(*lo_lat, r.vector));
    if (r.norm == Rational(2, 3)) ++shorts;
    else EXPECT_EQ(r.norm, 2);
  }
  EXPECT_EQ(shorts, 6u);
}

TEST(Roots, DefinitePartOfLambdaOne) {
  const GramLattice l1 = parse_lattice_spec("2E8+A2+U");
  auto lp = std::make_shared<const GramLattice>(l1);
  ZMatrix basis(0, 20);
  for (std::size_t i = 0; i < 18; ++i) {
    ZVector row(20, Integer(0));
    row[i] = 1;
    basis.append_row(row);
  }
  const auto roots = roots_of(lp, Sublattice(lp, basis));
  std::size_t longs = 0, shorts = 0;
  for (const auto& r : roots) {
    EXPECT_TRUE(is_integral(Rational(3) * r.vector));
    EXPECT_TRUE(is_crystallographic(l1, r.vector));
    (r.norm == 2 ? longs : shorts)++;
    EXPECT_TRUE(r.norm == 2 || r.norm == Rational(2, 3));
  }
  EXPECT_EQ(longs, 486u);
  EXPECT_EQ(shorts, 6u);
  EXPECT_THROW(roots_of(l1), Error);
}

TEST(Roots, CandidateNorms) {
  EXPECT_EQ(candidate_root_norms(3), (std::vector<Rational>{2, 1, Rational(2, 3), Rational(1, 3)}));
  EXPECT_EQ(candidate_root_norms(1), (std::vector<Rational>{2, 1}));
}

TEST(Roots, ReflectionsPreserveTheLattice) {
  const GramLattice l = parse_lattice_spec("D5+A3");
  for (const auto& r : roots_of(l)) {
    for (std::size_t i = 0; i < l.rank(); ++i) {
      QVector x(l.rank(), Rational(0));
      x[i] = 1;
      const QVector y = reflect(l, r.vector, x);
      EXPECT_TRUE(is_integral(y));
      EXPECT_EQ(l.norm(y), l.norm(x));
    }
  }
}
