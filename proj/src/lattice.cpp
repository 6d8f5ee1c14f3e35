#include "qlat/lattice.hpp"

#include <algorithm>
#include <cctype>

namespace qlat {

GramLattice::GramLattice(QMatrix gram, std::vector<std::string> labels, std::string name)
    : gram_(std::move(gram)), labels_(std::move(labels)), name_(std::move(name)) {
  if (!is_symmetric(gram_)) fail(ErrorCode::kInvalidArgument, "Gram matrix must be square and symmetric");
  scale_ = 1;
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = 0; j < gram_.cols(); ++j) scale_ = lcm(scale_, gram_(i, j).get_den());
  if (labels_.empty()) {
    for (std::size_t i = 0; i < gram_.rows(); ++i) labels_.push_back("b" + std::to_string(i));
  }
  if (labels_.size() != gram_.rows()) fail(ErrorCode::kInvalidArgument, "label count does not match rank");
}

ZMatrix GramLattice::scaled_gram() const {
  ZMatrix out(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) {
      const Rational v = gram_(i, j) * scale_;
      out(i, j) = v.get_num();
    }
  return out;
}

std::size_t GramLattice::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) fail(ErrorCode::kInvalidArgument, "no basis vector labelled '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

QVector GramLattice::basis_vector(std::string_view label) const {
  QVector v(rank(), Rational(0));
  v[index_of(label)] = 1;
  return v;
}

Sublattice::Sublattice(std::shared_ptr<const GramLattice> ambient, ZMatrix basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {
  if (!ambient_) fail(ErrorCode::kInvalidArgument, "sublattice without ambient lattice");
  if (basis_.rows() > 0 && basis_.cols() != ambient_->rank())
    fail(ErrorCode::kInvalidArgument, "sublattice basis has wrong length");
  if (basis_.rows() == 0) basis_ = ZMatrix(0, ambient_->rank());
  if (rank() > 0 && qlat::rank(to_rational(basis_)) != rank())
    fail(ErrorCode::kDegenerate, "sublattice basis is linearly dependent");
}

QVector Sublattice::basis_vector(std::size_t i) const { return to_rational(basis_.row_vector(i)); }

GramLattice Sublattice::as_lattice(std::string name) const {
  const QMatrix b = to_rational(basis_);
  return GramLattice(b * ambient_->gram() * b.transposed(), {}, std::move(name));
}

QVector Sublattice::to_ambient(const QVector& coeffs) const {
  if (coeffs.size() != rank()) fail(ErrorCode::kInvalidArgument, "coefficient vector has wrong length");
  return coeffs * to_rational(basis_);
}

QVector Sublattice::coordinates(const QVector& ambient_vector) const {
  if (rank() == 0) {
    if (!is_zero(ambient_vector)) fail(ErrorCode::kNotContained, "vector not in the zero sublattice");
    return {};
  }
  return coordinates_in_rows(to_rational(basis_), ambient_vector);
}

bool Sublattice::contains(const QVector& ambient_vector) const {
  try {
    return is_integral(coordinates(ambient_vector));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotContained) return false;
    throw;
  }
}

bool Sublattice::is_saturated() const {
  if (rank() == 0) return true;
  const SmithForm s = smith_normal_form(basis_);
  for (const auto& d : s.diagonal())
    if (d != 1) return false;
  return true;
}

Integer DiscriminantGroup::order() const {
  Integer o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

Integer DiscriminantGroup::exponent() const {
  return invariant_factors.empty() ? Integer(1) : invariant_factors.back();
}

namespace {

QMatrix cartan_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  QMatrix g(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g(i, i) = 2;
  for (auto [a, b] : edges) {
    g(a - 1, b - 1) = -1;
    g(b - 1, a - 1) = -1;
  }
  return g;
}

std::vector<std::string> root_labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("a" + std::to_string(i));
  return out;
}

}  // namespace

GramLattice make_standard(std::string_view name, std::optional<int> n) {
  std::string key(name);
  // Accept "A2", "E8" as well as ("A", 2).
  if (!n && key.size() > 1 && std::isdigit(static_cast<unsigned char>(key[1])) &&
      (key[0] == 'A' || key[0] == 'D' || key[0] == 'E')) {
    n = std::stoi(key.substr(1));
    key = key.substr(0, 1);
  }
  if (key == "U") return GramLattice(QMatrix::from_rows({{0, 1}, {1, 0}}, 2), {"e", "f"}, "U");
  if (key == "I") return GramLattice(QMatrix::from_rows({{1}}, 1), {"eps"}, "I");
  if (key == "G2root") {
    GramLattice a2 = make_standard("A", 2);
    a2.set_name("A2");
    return a2;
  }
  if (key != "A" && key != "D" && key != "E") fail(ErrorCode::kInvalidArgument, "unknown lattice label '" + key + "'");
  if (!n) fail(ErrorCode::kInvalidArgument, "lattice label '" + key + "' needs a rank");
  const int r = *n;
  if (r <= 0) fail(ErrorCode::kInvalidArgument, "nonpositive rank for '" + key + "'");
  if (r > 64) fail(ErrorCode::kInvalidArgument, "rank too large for '" + key + "'");
  std::vector<std::pair<int, int>> edges;
  if (key == "A") {
    for (int i = 1; i < r; ++i) edges.emplace_back(i, i + 1);
  } else if (key == "D") {
    if (r < 2) fail(ErrorCode::kInvalidArgument, "D_n needs n >= 2");
    for (int i = 1; i + 1 <= r - 2; ++i) edges.emplace_back(i, i + 1);
    if (r >= 3) {
      edges.emplace_back(r - 2, r - 1);
      edges.emplace_back(r - 2, r);
    }
  } else {
    if (r < 6 || r > 8) fail(ErrorCode::kInvalidArgument, "E_n needs 6 <= n <= 8");
    edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
    if (r >= 7) edges.emplace_back(6, 7);
    if (r >= 8) edges.emplace_back(7, 8);
  }
  return GramLattice(cartan_from_edges(r, edges), root_labels(r), key + std::to_string(r));
}

GramLattice direct_sum(const std::vector<GramLattice>& parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.rank();
  QMatrix g(total, total);
  std::vector<std::string> labels;
  std::string name;
  std::size_t offset = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& p = parts[k];
    for (std::size_t i = 0; i < p.rank(); ++i) {
      for (std::size_t j = 0; j < p.rank(); ++j) g(offset + i, offset + j) = p.gram()(i, j);
      labels.push_back(std::to_string(k) + "." + p.labels()[i]);
    }
    offset += p.rank();
    if (!name.empty()) name += "+";
    name += p.name().empty() ? "L" : p.name();
  }
  return GramLattice(std::move(g), std::move(labels), std::move(name));
}

GramLattice rescale(const GramLattice& lattice, const Rational& c) {
  if (c == 0) fail(ErrorCode::kInvalidArgument, "rescaling by zero");
  QMatrix g = lattice.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= c;
  std::string name = lattice.name();
  if (c != 1) name += "(" + c.get_str() + ")";
  return GramLattice(std::move(g), lattice.labels(), std::move(name));
}

GramLattice repeat(const GramLattice& lattice, int count) {
  if (count < 0) fail(ErrorCode::kInvalidArgument, "negative repeat count");
  return direct_sum(std::vector<GramLattice>(static_cast<std::size_t>(count), lattice));
}

Signature signature(const GramLattice& lattice) {
  QMatrix a = lattice.gram();
  const std::size_t n = a.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        a.swap_rows(k, j);
        a.swap_cols(k, j);
      } else {
        j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) {
          ++sig.zero;
          continue;
        }
        // Both diagonal entries vanish: x_k + x_j has norm 2 a_kj != 0.
        for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
        for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
      }
    }
    const Rational pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / pivot;
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = k; r < n; ++r) a(r, i) -= f * a(r, k);
    }
    if (pivot > 0) ++sig.positive;
    else ++sig.negative;
  }
  return sig;
}

Rational determinant(const GramLattice& lattice) { return determinant(lattice.gram()); }

bool is_positive_definite(const GramLattice& lattice) { return is_positive_definite(lattice.gram()); }

bool is_even(const GramLattice& lattice) {
  if (!lattice.integral()) fail(ErrorCode::kNotIntegral, "parity is only defined for integral lattices");
  for (std::size_t i = 0; i < lattice.rank(); ++i)
    if (lattice.gram()(i, i).get_num() % 2 != 0) return false;
  return true;
}

bool is_unimodular(const GramLattice& lattice) {
  if (!lattice.integral()) return false;
  const Rational d = determinant(lattice);
  return d == 1 || d == -1;
}

namespace {

void require_integral_nondegenerate(const GramLattice& lattice) {
  if (!lattice.integral()) fail(ErrorCode::kNotIntegral, "lattice is not integral");
  if (lattice.rank() > 0 && determinant(lattice) == 0) fail(ErrorCode::kDegenerate, "form is degenerate");
}

Rational frac(const Rational& q, int modulus) {
  Rational r = q - Rational(floor(q / modulus) * modulus);
  return r;
}

}  // namespace

DiscriminantGroup discriminant_group(const GramLattice& lattice) {
  require_integral_nondegenerate(lattice);
  const std::size_t n = lattice.rank();
  DiscriminantGroup out;
  if (n == 0) return out;
  const SmithForm s = smith_normal_form(lattice.scaled_gram());
  const QMatrix g_inv = inverse(lattice.gram());
  const QMatrix u_inv = to_rational(s.u_inv);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& d = s.d(i, i);
    if (d == 1) continue;
    out.invariant_factors.push_back(d);
    out.generators.push_back(g_inv * u_inv.col_vector(i));
  }
  const std::size_t k = out.generators.size();
  out.pairing = QMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out.pairing(i, j) = frac(lattice.inner(out.generators[i], out.generators[j]), 1);
    out.norms.push_back(frac(lattice.norm(out.generators[i]), 2));
  }
  return out;
}

ZVector discriminant_class(const GramLattice& lattice, const QVector& x) {
  require_integral_nondegenerate(lattice);
  const QVector y = lattice.products_with_basis(x);
  if (!is_integral(y)) fail(ErrorCode::kNotContained, "vector is not in the dual lattice");
  const SmithForm s = smith_normal_form(lattice.scaled_gram());
  const ZVector z = s.u * to_integer(y);
  ZVector cls;
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    const Integer& d = s.d(i, i);
    if (d == 1) continue;
    cls.push_back(mod(z[i], d));
  }
  return cls;
}

Sublattice orthogonal_complement(std::shared_ptr<const GramLattice> ambient, const std::vector<QVector>& vectors) {
  const std::size_t n = ambient->rank();
  QMatrix a(0, n);
  for (const auto& v : vectors) {
    if (v.size() != n) fail(ErrorCode::kInvalidArgument, "vector length does not match ambient rank");
    a.append_row(ambient->products_with_basis(v));
  }
  if (a.rows() == 0) return Sublattice(ambient, ZMatrix::identity(n));
  Integer den = 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) den = lcm(den, a(i, j).get_den());
  ZMatrix az(a.rows(), n);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) az(i, j) = Rational(a(i, j) * den).get_num();
  return Sublattice(ambient, integer_kernel(az));
}

Sublattice orthogonal_complement(const Sublattice& s) {
  std::vector<QVector> vectors;
  for (std::size_t i = 0; i < s.rank(); ++i) vectors.push_back(s.basis_vector(i));
  return orthogonal_complement(s.ambient_ptr(), vectors);
}

Sublattice saturate(const Sublattice& s) {
  if (s.rank() == 0) return s;
  return Sublattice(s.ambient_ptr(), saturate_rows(s.basis()));
}

Sublattice span(std::shared_ptr<const GramLattice> ambient, const std::vector<QVector>& vectors) {
  const std::size_t n = ambient->rank();
  ZMatrix rows(0, n);
  for (const auto& v : vectors) {
    if (v.size() != n) fail(ErrorCode::kInvalidArgument, "vector length does not match ambient rank");
    rows.append_row(to_integer(v));
  }
  if (rows.rows() == 0) return Sublattice(ambient, ZMatrix(0, n));
  const SmithForm s = smith_normal_form(rows);
  ZMatrix basis(0, n);
  for (std::size_t i = 0; i < s.rank; ++i) basis.append_row(s.d(i, i) * s.v_inv.row_vector(i));
  return Sublattice(ambient, basis);
}

QuotientLattice radical_quotient(const Sublattice& s) {
  const std::size_t k = s.rank();
  const std::size_t n = s.ambient().rank();
  const GramLattice own = s.as_lattice();
  QMatrix g = own.gram();
  ZMatrix gz(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gz(i, j) = Rational(g(i, j) * own.scale()).get_num();
  const ZMatrix rad = k == 0 ? ZMatrix(0, 0) : integer_kernel(gz);
  if (rad.rows() == 0) return {own, s.basis(), ZMatrix(0, n)};
  const ZMatrix full = complete_basis(rad);
  const std::size_t r = rad.rows();
  ZMatrix complement(0, k);
  ZMatrix radical_rows(0, k);
  for (std::size_t i = 0; i < k; ++i) (i < r ? radical_rows : complement).append_row(full.row_vector(i));
  const QMatrix c = to_rational(complement);
  GramLattice quotient(c * g * c.transposed());
  return {quotient, complement * s.basis(), radical_rows * s.basis()};
}

Integer divisor(const GramLattice& lattice, const QVector& v) {
  if (!is_integral(v)) fail(ErrorCode::kNotIntegral, "divisor needs an integral vector");
  if (is_zero(v)) fail(ErrorCode::kInvalidArgument, "divisor of the zero vector");
  const QVector p = lattice.products_with_basis(v);
  if (!is_integral(p)) fail(ErrorCode::kNotIntegral, "divisor needs an integral lattice");
  return content(to_integer(p));
}

Integer divisor(const Sublattice& within, const QVector& ambient_vector) {
  if (!is_integral(ambient_vector)) fail(ErrorCode::kNotIntegral, "divisor needs an integral vector");
  if (is_zero(ambient_vector)) fail(ErrorCode::kInvalidArgument, "divisor of the zero vector");
  Integer g = 0;
  for (std::size_t i = 0; i < within.rank(); ++i) {
    const Rational p = within.ambient().inner(ambient_vector, within.basis_vector(i));
    if (!is_integral(p)) fail(ErrorCode::kNotIntegral, "divisor needs integral products");
    g = gcd(g, p.get_num());
  }
  return g;
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GramLattice parse() {
    if (trimmed_empty()) fail(ErrorCode::kParse, "empty lattice specification");
    std::vector<GramLattice> parts;
    std::size_t total = 0;
    for (;;) {
      skip_space();
      auto [part, count] = term();
      for (int i = 0; i < count; ++i) {
        total += part.rank();
        if (total > kMaxRank) error("rank overflow (more than " + std::to_string(kMaxRank) + ")");
        parts.push_back(part);
      }
      skip_space();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != '+') error("expected '+'");
      ++pos_;
    }
    GramLattice sum = direct_sum(parts);
    sum.set_name(std::string(text_));
    return sum;
  }

 private:
  static constexpr std::size_t kMaxRank = 512;

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::kParse, what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  bool trimmed_empty() const {
    return std::all_of(text_.begin(), text_.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::optional<int> number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) return std::nullopt;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) error("number too large");
    return std::stoi(digits);
  }

  std::pair<GramLattice, int> term() {
    int count = number().value_or(1);
    if (count <= 0) error("nonpositive multiplicity");
    skip_space();
    if (pos_ >= text_.size()) error("expected a lattice name");
    const char name = text_[pos_];
    if (name != 'A' && name != 'D' && name != 'E' && name != 'U' && name != 'I') {
      error(std::string("unknown lattice name '") + name + "'");
    }
    ++pos_;
    GramLattice part;
    if (name == 'A' || name == 'D' || name == 'E') {
      const auto n = number();
      if (!n) error(std::string("missing subscript for '") + name + "'");
      try {
        part = make_standard(std::string(1, name), *n);
      } catch (const Error& e) {
        error(e.what());
      }
    } else {
      part = make_standard(std::string(1, name));
    }
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) error("unterminated '('");
      std::string inner(text_.substr(pos_, close - pos_));
      // Accept the typographic minus sign as well.
      for (std::size_t p; (p = inner.find("\xE2\x88\x92")) != std::string::npos;) inner.replace(p, 3, "-");
      Rational c;
      try {
        c = parse_rational(inner);
      } catch (const Error&) {
        error("malformed rescaling factor '" + inner + "'");
      }
      if (c == 0) error("rescaling factor must be nonzero");
      pos_ = close + 1;
      part = rescale(part, c);
    }
    return {part, count};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GramLattice parse_lattice_spec(std::string_view text) { return SpecParser(text).parse(); }

}  // namespace qlat
