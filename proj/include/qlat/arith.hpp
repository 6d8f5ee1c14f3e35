#pragma once

// Exact scalar types and the error taxonomy shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qlat {

using Integer = mpz_class;
using Rational = mpq_class;
using QVector = std::vector<Rational>;
using ZVector = std::vector<Integer>;

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kNotIntegral,
  kNotPositiveDefinite,
  kDegenerate,
  kNotContained,
  kUnbounded,
  kResourceExhausted,
  kVerificationFailed,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
// Nearest integer, halves rounded up.
Integer round(const Rational& q);
// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
// Nonnegative remainder of a modulo m > 0.
Integer mod(const Integer& a, const Integer& m);

// n/d in lowest terms; d != 0.
Rational fraction(const Integer& n, const Integer& d);

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integral(const Rational& q);
bool is_integral(const QVector& v);
QVector to_rational(const ZVector& v);
ZVector to_integer(const QVector& v);  // throws kNotIntegral
// Least positive d with d*v integral.
Integer denominator_lcm(const QVector& v);
// gcd of the entries (0 for the zero vector).
Integer content(const ZVector& v);
bool is_zero(const QVector& v);

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator-(const QVector& a);
QVector operator*(const Rational& c, const QVector& a);
ZVector operator+(const ZVector& a, const ZVector& b);
ZVector operator-(const ZVector& a, const ZVector& b);
ZVector operator*(const Integer& c, const ZVector& a);

// Lexicographic comparison, used for every deterministic ordering.
bool lex_less(const QVector& a, const QVector& b);
bool lex_less(const ZVector& a, const ZVector& b);

std::int64_t to_int64(const Integer& z);  // throws kInvalidArgument on overflow

}  // namespace qlat
