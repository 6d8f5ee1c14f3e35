#include "qlat/cohomring.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace qlat {

PolyClass PolyClass::constant(Ring ring, const Integer& c) {
  PolyClass p(ring);
  return p.add(0, 0, c);
}

PolyClass PolyClass::u(Ring ring) {
  PolyClass p(ring);
  return p.add(1, 0, 1);
}

PolyClass PolyClass::g(Ring ring) {
  PolyClass p(ring);
  return p.add(0, 1, 1);
}

Integer PolyClass::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

int PolyClass::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
  return d;
}

PolyClass& PolyClass::add(int i, int j, const Integer& c) {
  if (c == 0) return *this;
  Integer& slot = terms_[{i, j}];
  slot += c;
  if (slot == 0) terms_.erase({i, j});
  return *this;
}

PolyClass operator+(const PolyClass& a, const PolyClass& b) {
  if (a.ring_ != b.ring_) fail(ErrorCode::kInvalidArgument, "classes from different rings");
  PolyClass out = a;
  for (const auto& [m, c] : b.terms_) out.add(m.first, m.second, c);
  return out;
}

PolyClass operator-(const PolyClass& a, const PolyClass& b) { return a + Integer(-1) * b; }

PolyClass operator*(const Integer& c, const PolyClass& a) {
  PolyClass out(a.ring_);
  for (const auto& [m, v] : a.terms_) out.add(m.first, m.second, c * v);
  return out;
}

PolyClass operator*(const PolyClass& a, const PolyClass& b) {
  if (a.ring_ != b.ring_) fail(ErrorCode::kInvalidArgument, "classes from different rings");
  PolyClass out(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add(ma.first + mb.first, ma.second + mb.second, ca * cb);
  return out.reduced();
}

PolyClass PolyClass::reduced() const {
  // Rewrite the highest power of g repeatedly; u^3 = 0 throughout.
  const int top = ring_ == Ring::kYtilde ? 3 : 2;
  PolyClass cur(ring_);
  for (const auto& [m, c] : terms_)
    if (m.first < 3) cur.add(m.first, m.second, c);
  for (;;) {
    auto it = std::find_if(cur.terms_.begin(), cur.terms_.end(), [&](const auto& t) { return t.first.second >= top; });
    if (it == cur.terms_.end()) return cur;
    const auto [i, j] = it->first;
    const Integer c = it->second;
    cur.terms_.erase(it);
    const int k = j - top;
    auto put = [&](int du, int dg, long coef) {
      if (i + du < 3) cur.add(i + du, k + dg, c * coef);
    };
    if (ring_ == Ring::kYtilde) {
      put(1, 2, 3);   // y^3 = 3uy^2 - 6u^2y
      put(2, 1, -6);
    } else {
      put(1, 1, 1);   // x^2 = ux - u^2
      put(2, 0, -1);
    }
  }
}

PolyClass reduce(const PolyClass& c) { return c.reduced(); }

PolyClass pow(const PolyClass& c, int n) {
  PolyClass out = PolyClass::constant(c.ring(), 1);
  for (int i = 0; i < n; ++i) out = out * c;
  return out;
}

std::string to_string(const PolyClass& c) {
  if (c.is_zero()) return "0";
  const char g = c.ring() == Ring::kYtilde ? 'y' : 'x';
  std::ostringstream os;
  bool first = true;
  // Highest degree first, then by g-degree.
  std::vector<std::pair<std::pair<int, int>, Integer>> terms(c.terms().begin(), c.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    return da != db ? da > db : a.first.second > b.first.second;
  });
  for (const auto& [m, v] : terms) {
    Integer a = v;
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    if (a < 0) a = -a;
    first = false;
    const bool unit = m.first == 0 && m.second == 0;
    if (a != 1 || unit) os << a.get_str();
    if (m.first > 0) os << "u" << (m.first > 1 ? "^" + std::to_string(m.first) : "");
    if (m.second > 0) os << g << (m.second > 1 ? "^" + std::to_string(m.second) : "");
  }
  return os.str();
}

namespace {

bool homogeneous(const PolyClass& c, int d) {
  for (const auto& [m, v] : c.terms())
    if (m.first + m.second != d) return false;
  return true;
}

}  // namespace

Integer intersection_number(const PolyClass& a, const PolyClass& b) {
  if (a.ring() != Ring::kYtilde || b.ring() != Ring::kYtilde)
    fail(ErrorCode::kInvalidArgument, "intersection numbers live in R_Ytilde");
  const int da = a.degree(), db = b.degree();
  if (da < 0 || db < 0) return 0;
  if (da + db != 4 || !homogeneous(a, da) || !homogeneous(b, db))
    fail(ErrorCode::kInvalidArgument, "intersection needs homogeneous classes of total degree 4");
  return reduce(a * b).coefficient(2, 2);
}

PolyClass chern_inverse(int n, Ring ring) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "chern_inverse needs n >= 0");
  // (1+u)^(-n) = sum_k (-1)^k C(n+k-1, k) u^k.
  PolyClass out(ring);
  out.add(0, 0, 1);
  out.add(1, 0, -n);
  out.add(2, 0, Integer(n) * (n + 1) / 2);
  return out;
}

PolyClass class_a() {
  const PolyClass u = PolyClass::u(Ring::kYtilde), y = PolyClass::g(Ring::kYtilde);
  return y * y - Integer(2) * (u * y) + Integer(4) * (u * u);
}

PolyClass class_h() {
  const PolyClass u = PolyClass::u(Ring::kYtilde), y = PolyClass::g(Ring::kYtilde);
  return y * y - Integer(3) * (u * y) + Integer(6) * (u * u);
}

SecantTable secant_table() {
  const PolyClass u = PolyClass::u(Ring::kYtilde), y = PolyClass::g(Ring::kYtilde);
  const PolyClass y2 = y * y, a = class_a(), h = class_h();
  SecantTable t;
  t.y4 = intersection_number(y2, y2);
  t.ay2 = intersection_number(a, y2);
  t.a2 = intersection_number(a, a);
  t.hy2 = intersection_number(h, y2);
  t.h2 = intersection_number(h, h);
  t.identity_3a_minus_y2_is_2h = (Integer(3) * a - y2) == Integer(2) * h;
  t.uy3_is_3u2y2 = reduce(u * pow(y, 3)) == Integer(3) * (u * u * y2);
  t.ok = t.y4 == 3 && t.ay2 == 1 && t.a2 == 3 && t.hy2 == 0 && t.h2 == 6 && t.identity_3a_minus_y2_is_2h &&
         t.uy3_is_3u2y2;
  t.note = "h = y^2 - 3uy + 6u^2, the class determined by 2h = 3a - y^2";
  return t;
}

PolyClass restrict_to_c(const PolyClass& c) {
  if (c.ring() != Ring::kYtilde) fail(ErrorCode::kInvalidArgument, "restriction starts in R_Ytilde");
  PolyClass out(Ring::kC);
  const PolyClass u = PolyClass::u(Ring::kC), two_x = Integer(2) * PolyClass::g(Ring::kC);
  for (const auto& [m, v] : c.terms()) out = out + v * (pow(u, m.first) * pow(two_x, m.second));
  return reduce(out);
}

bool restriction_check() {
  const PolyClass u = PolyClass::u(Ring::kC), two_x = Integer(2) * PolyClass::g(Ring::kC);
  const PolyClass image = pow(two_x, 3) - Integer(3) * (u * pow(two_x, 2)) + Integer(6) * (u * u * two_x);
  return image.is_zero() && pow(u, 3).is_zero();
}

}  // namespace qlat
