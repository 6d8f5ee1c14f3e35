#include <gtest/gtest.h>

#include <random>

#include "qlat/cohomring.hpp"
#include "qlat/matrix.hpp"

using namespace qlat;

namespace {

const PolyClass U = PolyClass::u(Ring::kYtilde);
const PolyClass Y = PolyClass::g(Ring::kYtilde);

// Independent model: R_Ytilde as Z^9 on the basis u^i y^j (i, j <= 2),
// with multiplication by u and by y as 9x9 matrices (y via the companion
// matrix of y^3 - 3uy^2 + 6u^2y over Z[u]/u^3).
std::size_t idx(int i, int j) { return static_cast<std::size_t>(3 * i + j); }

ZMatrix mult_u() {
  ZMatrix m(9, 9);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) m(idx(i + 1, j), idx(i, j)) = 1;
  return m;
}

ZMatrix mult_y() {
  ZMatrix m(9, 9);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) m(idx(i, j + 1), idx(i, j)) = 1;
    // u^i y^2 * y = u^i (3u y^2 - 6u^2 y)
    if (i + 1 < 3) m(idx(i + 1, 2), idx(i, 2)) += 3;
    if (i + 2 < 3) m(idx(i + 2, 1), idx(i, 2)) += -6;
  }
  return m;
}

ZVector model(const PolyClass& c) {
  const ZMatrix mu = mult_u(), my = mult_y();
  ZVector out(9, Integer(0));
  for (const auto& [m, v] : c.terms()) {
    ZVector e(9, Integer(0));
    e[0] = 1;
    for (int k = 0; k < m.first; ++k) e = mu * e;
    for (int k = 0; k < m.second; ++k) e = my * e;
    out = out + v * e;
  }
  return out;
}

PolyClass random_class(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  PolyClass p(Ring::kYtilde);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      if (i + j <= 2) p.add(i, j, c(rng));
  return p;
}

}  // namespace

TEST(Cohom, ReduceRelations) {
  EXPECT_EQ(reduce(pow(Y, 3)), Integer(3) * (U * Y * Y) - Integer(6) * (U * U * Y));
  EXPECT_EQ(to_string(pow(Y, 3)), "3uy^2 - 6u^2y");
  EXPECT_TRUE(pow(U, 3).is_zero());
  EXPECT_TRUE((pow(U, 3) * Y).is_zero());
  EXPECT_EQ(pow(Y, 4), Integer(3) * (U * U * Y * Y));
  EXPECT_EQ(U * pow(Y, 3), Integer(3) * (U * U * Y * Y));
  const PolyClass x = PolyClass::g(Ring::kC), uc = PolyClass::u(Ring::kC);
  EXPECT_EQ(x * x, uc * x - uc * uc);
}

TEST(Cohom, MatchesMatrixModel) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const PolyClass a = random_class(rng), b = random_class(rng);
    const PolyClass p = a * b;
    ZVector v(9, Integer(0));
    for (const auto& [m, c] : p.terms()) v[idx(m.first, m.second)] = c;
    EXPECT_EQ(v, model(a * b));
    // Model of the product from the models of the factors: multiply by b
    // acting on the model of a.
    ZVector w(9, Integer(0));
    for (const auto& [m, c] : b.terms()) {
      ZVector e = model(a);
      for (int k = 0; k < m.first; ++k) e = mult_u() * e;
      for (int k = 0; k < m.second; ++k) e = mult_y() * e;
      w = w + c * e;
    }
    EXPECT_EQ(v, w);
  }
}

TEST(Cohom, RingLaws) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const PolyClass a = random_class(rng), b = random_class(rng), c = random_class(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(reduce(reduce(a * b)), reduce(a * b));
  }
}

TEST(Cohom, GradedDimensions) {
  // Normal-form monomials u^i y^j with i, j <= 2, counted by degree.
  std::vector<int> dims(5, 0);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) ++dims[i + j];
  EXPECT_EQ(dims, (std::vector<int>{1, 2, 3, 2, 1}));
  // Every degree-4 monomial is a multiple of u^2 y^2.
  for (int i = 0; i <= 4; ++i) {
    const PolyClass m = pow(U, i) * pow(Y, 4 - i);
    for (const auto& [mono, c] : m.terms()) EXPECT_EQ(mono, std::make_pair(2, 2));
  }
}

TEST(Cohom, IntersectionNumbers) {
  const PolyClass y2 = Y * Y, a = class_a(), h = class_h();
  EXPECT_EQ(intersection_number(y2, y2), 3);
  EXPECT_EQ(intersection_number(a, y2), 1);
  EXPECT_EQ(intersection_number(a, a), 3);
  EXPECT_EQ(intersection_number(h, y2), 0);
  EXPECT_EQ(intersection_number(h, h), 6);
  EXPECT_EQ(intersection_number(a, h), intersection_number(h, a));
  EXPECT_EQ(Integer(3) * a - y2, Integer(2) * h);
  EXPECT_EQ(intersection_number(U, pow(Y, 3)), 3);
  EXPECT_THROW(intersection_number(Y, y2), Error);
  EXPECT_THROW(intersection_number(y2 + Y, y2), Error);
  // 3 (a.a) - (a.y^2)^2 = 8.
  EXPECT_EQ(3 * intersection_number(a, a) - intersection_number(a, y2) * intersection_number(a, y2), 8);
}

TEST(Cohom, ChernInverse) {
  for (int n = 0; n <= 6; ++n) {
    PolyClass one_plus_u = PolyClass::constant(Ring::kYtilde, 1) + U;
    EXPECT_EQ(pow(one_plus_u, n) * chern_inverse(n), PolyClass::constant(Ring::kYtilde, 1)) << n;
  }
  EXPECT_EQ(to_string(chern_inverse(1)), "u^2 - u + 1");
  EXPECT_EQ(chern_inverse(3), PolyClass::constant(Ring::kYtilde, 1) - Integer(3) * U + Integer(6) * (U * U));
  EXPECT_EQ(chern_inverse(0), PolyClass::constant(Ring::kYtilde, 1));
}

TEST(Cohom, SecantTable) {
  const SecantTable t = secant_table();
  EXPECT_TRUE(t.ok);
  EXPECT_EQ(t.y4, 3);
  EXPECT_EQ(t.ay2, 1);
  EXPECT_EQ(t.a2, 3);
  EXPECT_EQ(t.hy2, 0);
  EXPECT_EQ(t.h2, 6);
  EXPECT_TRUE(t.identity_3a_minus_y2_is_2h);
  EXPECT_TRUE(t.uy3_is_3u2y2);
}

TEST(Cohom, Restriction) {
  EXPECT_TRUE(restriction_check());
  EXPECT_EQ(restrict_to_c(Y), Integer(2) * PolyClass::g(Ring::kC));
  EXPECT_TRUE(restrict_to_c(pow(U, 3)).is_zero());
  // a restricts to 4(x^2 - ux + u^2), which is zero in R_C.
  EXPECT_TRUE(restrict_to_c(class_a()).is_zero());
  // The restriction respects products.
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const PolyClass a = random_class(rng), b = random_class(rng);
    EXPECT_EQ(restrict_to_c(a * b), restrict_to_c(a) * restrict_to_c(b));
  }
}
