#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qlat/lattice.hpp"

using namespace qlat;

namespace {

std::shared_ptr<const GramLattice> big_lambda() {
  return std::make_shared<const GramLattice>(parse_lattice_spec("2E8+2U+3I"));
}

QVector unit(std::size_t n, std::size_t i) {
  QVector v(n, Rational(0));
  v[i] = 1;
  return v;
}

// eta = eps1 + eps2 + eps3 sits in the last three coordinates.
QVector eta(std::size_t n) {
  QVector v(n, Rational(0));
  v[n - 1] = v[n - 2] = v[n - 3] = 1;
  return v;
}

bool same_even_indefinite_genus(const GramLattice& a, const GramLattice& b) {
  // Even, indefinite, equal signature and equal discriminant form with the
  // discriminant group cyclic of prime order; in this range the genus
  // determines the class.
  if (!is_even(a) || !is_even(b)) return false;
  if (!(signature(a) == signature(b))) return false;
  const auto da = discriminant_group(a), db = discriminant_group(b);
  if (da.invariant_factors != db.invariant_factors) return false;
  if (da.invariant_factors.size() != 1) return da.invariant_factors.empty();
  // Values of the quadratic form on all nonzero classes, as a multiset.
  auto values = [](const DiscriminantGroup& d) {
    std::multiset<Rational> out;
    const Integer p = d.invariant_factors[0];
    for (Integer k = 1; k < p; ++k) {
      Rational q = d.norms[0] * k * k;
      q -= Rational(floor(q / 2) * 2);
      out.insert(q);
    }
    return out;
  };
  return values(da) == values(db);
}

}  // namespace

TEST(MakeStandard, ConventionalGrams) {
  EXPECT_EQ(make_standard("U").gram(), QMatrix::from_rows({{0, 1}, {1, 0}}, 2));
  EXPECT_EQ(make_standard("A2").gram(), QMatrix::from_rows({{2, -1}, {-1, 2}}, 2));
  EXPECT_EQ(make_standard("I").gram(), QMatrix::from_rows({{1}}, 1));
  EXPECT_EQ(make_standard("G2root").gram(), make_standard("A", 2).gram());
  EXPECT_EQ(abs(determinant(make_standard("E8"))), 1);
  EXPECT_EQ(determinant(make_standard("E7")), 2);
  EXPECT_EQ(determinant(make_standard("E6")), 3);
  EXPECT_EQ(determinant(make_standard("D", 16)), 4);
  EXPECT_EQ(determinant(make_standard("A", 17)), 18);
  EXPECT_EQ(determinant(make_standard("D", 2)), 4);
  for (const char* name : {"E6", "E7", "E8"}) EXPECT_TRUE(is_even(make_standard(name)));
}

TEST(MakeStandard, RejectsBadLabels) {
  EXPECT_THROW(make_standard("Q"), Error);
  EXPECT_THROW(make_standard("A", 0), Error);
  EXPECT_THROW(make_standard("A", -3), Error);
  EXPECT_THROW(make_standard("E", 9), Error);
  EXPECT_THROW(make_standard("A"), Error);
}

TEST(DirectSum, RanksAdd) {
  const GramLattice a2 = make_standard("A2"), e8 = make_standard("E8"), u = make_standard("U"),
                    i = make_standard("I");
  EXPECT_EQ(direct_sum({e8, e8, u, u, i, i, i}).rank(), 23u);
  EXPECT_EQ(direct_sum({}).rank(), 0u);
  EXPECT_EQ(direct_sum({e8, e8, u, u, a2}).rank(), 22u);
  const GramLattice s = direct_sum({a2, u});
  EXPECT_EQ(s.labels()[0], "0.a1");
  EXPECT_EQ(s.labels()[3], "1.f");
  EXPECT_EQ(s.gram()(0, 2), 0);
}

TEST(Rescale, ScalesEntriesAndScale) {
  const GramLattice a = rescale(make_standard("A2"), Rational(1, 3));
  EXPECT_EQ(a.gram()(0, 0), Rational(2, 3));
  EXPECT_EQ(a.gram()(1, 1), Rational(2, 3));
  EXPECT_EQ(a.scale(), 3);
  EXPECT_FALSE(a.integral());
  EXPECT_EQ(rescale(make_standard("E8"), 1), make_standard("E8"));
  EXPECT_EQ(rescale(make_standard("U"), 3).gram(), QMatrix::from_rows({{0, 3}, {3, 0}}, 2));
  EXPECT_THROW(rescale(make_standard("U"), 0), Error);
  EXPECT_THROW(is_even(a), Error);
}

TEST(Signature, StandardExamples) {
  EXPECT_EQ(signature(*big_lambda()), (Signature{21, 2, 0}));
  EXPECT_EQ(signature(make_standard("U")), (Signature{1, 1, 0}));
  EXPECT_EQ(signature(parse_lattice_spec("2E8+A2+U")), (Signature{19, 1, 0}));
  EXPECT_EQ(signature(GramLattice(QMatrix::from_rows({{0, 0}, {0, 0}}, 2))), (Signature{0, 0, 2}));
  EXPECT_EQ(signature(GramLattice(QMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}, 3))), (Signature{1, 1, 1}));
}

TEST(Signature, DeterminantSignMatchesRandomCongruences) {
  std::mt19937_64 rng(7);
  const GramLattice base = parse_lattice_spec("A3+U+I(-1)+D4");
  for (int trial = 0; trial < 10; ++trial) {
    const GramLattice l = oracle::transform(base, oracle::random_unimodular(base.rank(), rng));
    const Signature s = signature(l);
    EXPECT_EQ(s, signature(base));
    const Rational d = determinant(l);
    EXPECT_EQ(d < 0, s.negative % 2 == 1);
  }
}

TEST(Parity, EvenAndOdd) {
  auto lambda = big_lambda();
  EXPECT_FALSE(is_even(*lambda));
  EXPECT_TRUE(is_unimodular(*lambda));
  EXPECT_FALSE(is_even(make_standard("I")));
  EXPECT_TRUE(is_even(make_standard("E8")));
  const Sublattice lo = orthogonal_complement(lambda, {eta(23)});
  EXPECT_TRUE(is_even(lo.as_lattice()));
  EXPECT_EQ(lambda->norm(eta(23)), 3);
}

TEST(Discriminant, InvariantFactorsAndPairing) {
  auto lambda = big_lambda();
  const GramLattice lo = orthogonal_complement(lambda, {eta(23)}).as_lattice();
  const DiscriminantGroup d = discriminant_group(lo);
  EXPECT_EQ(d.invariant_factors, (ZVector{3}));
  EXPECT_EQ(d.norms[0], Rational(2, 3));
  EXPECT_TRUE(discriminant_group(make_standard("E8")).invariant_factors.empty());
  const GramLattice e6 = make_standard("E6");
  EXPECT_EQ(discriminant_group(direct_sum({e6, e6, e6})).invariant_factors, (ZVector{3, 3, 3}));
  const DiscriminantGroup a3 = discriminant_group(make_standard("A", 3));
  EXPECT_EQ(a3.invariant_factors, (ZVector{4}));
  EXPECT_EQ(a3.norms[0], Rational(3, 4));
  EXPECT_EQ(discriminant_group(make_standard("D", 4)).invariant_factors, (ZVector{2, 2}));
  EXPECT_EQ(discriminant_group(direct_sum({make_standard("A", 2), make_standard("A", 1)})).invariant_factors,
            (ZVector{6}));
  EXPECT_THROW(discriminant_group(GramLattice(QMatrix::from_rows({{0}}, 1))), Error);
  for (const auto& g : d.generators) EXPECT_TRUE(is_integral(lo.products_with_basis(g)));
}

TEST(Discriminant, OrderMatchesDeterminant) {
  for (const char* spec : {"A5+D5", "E7+A1+A1", "D6+U", "2A2+E6"}) {
    const GramLattice l = parse_lattice_spec(spec);
    EXPECT_EQ(Rational(discriminant_group(l).order()), abs(determinant(l))) << spec;
  }
}

TEST(Complement, EtaComplementAndH1Complement) {
  auto lambda = big_lambda();
  const std::size_t n = 23;
  const Sublattice lo = orthogonal_complement(lambda, {eta(n)});
  EXPECT_EQ(lo.rank(), 22u);
  EXPECT_EQ(signature(lo.as_lattice()), (Signature{20, 2, 0}));
  EXPECT_TRUE(lo.is_saturated());

  QVector h1 = eta(n);
  h1[20] -= 3;
  const Sublattice s = saturate(span(lambda, {h1, eta(n)}));
  EXPECT_EQ(s.rank(), 2u);
  EXPECT_TRUE(oracle::isometric_definite(s.as_lattice(), QMatrix::from_rows({{2, 0}, {0, 1}}, 2)));
  EXPECT_FALSE(span(lambda, {h1, eta(n)}).is_saturated());

  const GramLattice comp = orthogonal_complement(s).as_lattice();
  EXPECT_EQ(comp.rank(), 21u);
  EXPECT_TRUE(same_even_indefinite_genus(comp, parse_lattice_spec("2E8+2U+A1")));

  const Sublattice all(lambda, ZMatrix::identity(n));
  EXPECT_EQ(orthogonal_complement(all).rank(), 0u);
}

TEST(Complement, DoubleComplementOfSaturated) {
  auto l = std::make_shared<const GramLattice>(parse_lattice_spec("E8+A2"));
  QVector v(10, Rational(0));
  v[0] = 1;
  v[8] = 1;
  const Sublattice s = saturate(span(l, {v}));
  const Sublattice cc = orthogonal_complement(orthogonal_complement(s));
  EXPECT_EQ(cc.rank(), 1u);
  EXPECT_TRUE(cc.contains(v));
  EXPECT_TRUE(s.contains(cc.basis_vector(0)));
}

TEST(Saturate, IdempotentAndRemovesMultiples) {
  auto l = std::make_shared<const GramLattice>(make_standard("E8"));
  QVector v = unit(8, 2);
  v[5] = 1;
  const Sublattice s3 = span(l, {Rational(3) * v});
  const Sublattice sat = saturate(s3);
  EXPECT_EQ(sat.rank(), 1u);
  EXPECT_TRUE(sat.contains(v));
  EXPECT_FALSE(s3.contains(v));
  EXPECT_EQ(saturate(sat).basis(), sat.basis());
}

TEST(RadicalQuotient, IsotropicLineAndPlane) {
  auto lambda = big_lambda();
  const Sublattice lo = orthogonal_complement(lambda, {eta(23)});
  const QVector e2 = unit(23, 18);
  const Sublattice perp = orthogonal_complement(lambda, {eta(23), e2});
  const QuotientLattice q = radical_quotient(perp);
  EXPECT_EQ(q.lattice.rank(), 20u);
  EXPECT_EQ(q.radical.rows(), 1u);
  EXPECT_TRUE(same_even_indefinite_genus(q.lattice, parse_lattice_spec("2E8+A2+U")));

  const QVector e1 = unit(23, 16);
  const QuotientLattice k = radical_quotient(orthogonal_complement(lambda, {eta(23), e1, e2}));
  EXPECT_EQ(k.lattice.rank(), 18u);
  EXPECT_TRUE(is_positive_definite(k.lattice));
  EXPECT_TRUE(is_even(k.lattice));

  const Sublattice e8(std::make_shared<const GramLattice>(make_standard("E8")), ZMatrix::identity(8));
  EXPECT_EQ(radical_quotient(e8).lattice, make_standard("E8"));
  (void)lo;
}

TEST(Divisor, Examples) {
  auto lambda = big_lambda();
  EXPECT_EQ(divisor(*lambda, eta(23)), 1);
  const Sublattice lo = orthogonal_complement(lambda, {eta(23)});
  QVector h1 = eta(23);
  h1[20] -= 3;
  EXPECT_EQ(divisor(lo, h1), 3);
  const QVector v = unit(23, 3);
  EXPECT_EQ(divisor(*lambda, Rational(2) * v), 2 * divisor(*lambda, v));
  EXPECT_THROW(divisor(*lambda, QVector(23, Rational(0))), Error);
}

TEST(ParseSpec, GrammarAndErrors) {
  EXPECT_EQ(parse_lattice_spec("2E8+2U+3I").rank(), 23u);
  EXPECT_EQ(parse_lattice_spec("U").rank(), 2u);
  EXPECT_EQ(parse_lattice_spec("2E8+A2+U").rank(), 20u);
  EXPECT_EQ(parse_lattice_spec(" A2 + D4 ").rank(), 6u);
  EXPECT_EQ(parse_lattice_spec("I(-1)").gram()(0, 0), -1);
  EXPECT_EQ(parse_lattice_spec("U(3)").gram()(0, 1), 3);
  for (const char* bad : {"", "2E8+", "X3", "E9", "A", "A2(", "A2(0)", "A2++U", "0A2", "999999A24"}) {
    try {
      parse_lattice_spec(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
  try {
    parse_lattice_spec("A2+Q");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("position 3"), std::string::npos) << e.what();
  }
}
