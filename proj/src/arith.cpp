#include "qlat/arith.hpp"

#include <algorithm>
#include <cctype>

namespace qlat {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kNotIntegral: return "not_integral";
    case ErrorCode::kNotPositiveDefinite: return "not_positive_definite";
    case ErrorCode::kDegenerate: return "degenerate";
    case ErrorCode::kNotContained: return "not_contained";
    case ErrorCode::kUnbounded: return "unbounded_search";
    case ErrorCode::kResourceExhausted: return "resource_exhausted";
    case ErrorCode::kVerificationFailed: return "verification_failed";
  }
  return "unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer round(const Rational& q) { return floor(q + Rational(1, 2)); }

Integer isqrt(const Integer& n) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "isqrt of a negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Rational fraction(const Integer& n, const Integer& d) {
  if (d == 0) fail(ErrorCode::kInvalidArgument, "zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) fail(ErrorCode::kParse, "empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (start >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    fail(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) fail(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integral(const Rational& q) { return q.get_den() == 1; }

bool is_integral(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_integral(q); });
}

QVector to_rational(const ZVector& v) {
  QVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(z);
  return out;
}

ZVector to_integer(const QVector& v) {
  ZVector out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (!is_integral(q)) fail(ErrorCode::kNotIntegral, "vector has non-integral coordinate " + q.get_str());
    out.push_back(q.get_num());
  }
  return out;
}

Integer denominator_lcm(const QVector& v) {
  Integer d = 1;
  for (const auto& q : v) d = lcm(d, q.get_den());
  return d;
}

Integer content(const ZVector& v) {
  Integer g = 0;
  for (const auto& z : v) g = gcd(g, z);
  return g;
}

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

namespace {
template <typename V>
void require_same_size(const V& a, const V& b) {
  if (a.size() != b.size()) fail(ErrorCode::kInvalidArgument, "vector length mismatch");
}
}  // namespace

QVector operator+(const QVector& a, const QVector& b) {
  require_same_size(a, b);
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVector operator-(const QVector& a, const QVector& b) {
  require_same_size(a, b);
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVector operator-(const QVector& a) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

QVector operator*(const Rational& c, const QVector& a) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

ZVector operator+(const ZVector& a, const ZVector& b) {
  require_same_size(a, b);
  ZVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ZVector operator-(const ZVector& a, const ZVector& b) {
  require_same_size(a, b);
  ZVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

ZVector operator*(const Integer& c, const ZVector& a) {
  ZVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

bool lex_less(const QVector& a, const QVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const ZVector& a, const ZVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) fail(ErrorCode::kInvalidArgument, "integer does not fit in 64 bits");
  return z.get_si();
}

}  // namespace qlat
