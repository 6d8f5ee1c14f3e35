#pragma once

// Truncated intersection rings of the resolved secant variety of the
// Veronese surface: Z[u,y]/(u^3, y^3 - 3uy^2 + 6u^2y) and its restriction
// to the exceptional divisor, Z[u,x]/(u^3, x^2 - ux + u^2).

#include <map>
#include <string>
#include <utility>

#include "qlat/arith.hpp"

namespace qlat {

enum class Ring { kYtilde, kC };

// Integer combination of monomials u^i g^j, g = y or x by ring.
class PolyClass {
 public:
  explicit PolyClass(Ring ring = Ring::kYtilde) : ring_(ring) {}
  static PolyClass constant(Ring ring, const Integer& c);
  static PolyClass u(Ring ring);
  static PolyClass g(Ring ring);  // y in R_Ytilde, x in R_C

  Ring ring() const { return ring_; }
  const std::map<std::pair<int, int>, Integer>& terms() const { return terms_; }
  Integer coefficient(int i, int j) const;
  bool is_zero() const { return terms_.empty(); }
  // Highest total degree of a term, -1 for zero.
  int degree() const;
  // Normal form: u-degree <= 2 and g-degree <= 2 (R_Ytilde) or <= 1 (R_C).
  PolyClass reduced() const;

  PolyClass& add(int i, int j, const Integer& c);
  friend PolyClass operator+(const PolyClass& a, const PolyClass& b);
  friend PolyClass operator-(const PolyClass& a, const PolyClass& b);
  friend PolyClass operator*(const PolyClass& a, const PolyClass& b);
  friend PolyClass operator*(const Integer& c, const PolyClass& a);
  friend bool operator==(const PolyClass& a, const PolyClass& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  Ring ring_;
  std::map<std::pair<int, int>, Integer> terms_;
};

PolyClass reduce(const PolyClass& c);
std::string to_string(const PolyClass& c);
PolyClass pow(const PolyClass& c, int n);

// The coefficient of u^2 y^2 in reduce(a b); throws kInvalidArgument unless
// both are homogeneous in R_Ytilde with degrees summing to 4.
Integer intersection_number(const PolyClass& a, const PolyClass& b);

// (1 + u)^(-n) truncated modulo u^3.
PolyClass chern_inverse(int n, Ring ring = Ring::kYtilde);

// a = y^2 - 2uy + 4u^2 and h = y^2 - 3uy + 6u^2.
PolyClass class_a();
PolyClass class_h();

struct SecantTable {
  Integer y4, ay2, a2, hy2, h2;
  bool identity_3a_minus_y2_is_2h = false;
  bool uy3_is_3u2y2 = false;
  bool ok = false;
  std::string note;  // the reading of h
};
SecantTable secant_table();

// Image under u -> u, y -> 2x, reduced in R_C.
PolyClass restrict_to_c(const PolyClass& c);
// The image of the defining relation of R_Ytilde vanishes in R_C.
bool restriction_check();

}  // namespace qlat
