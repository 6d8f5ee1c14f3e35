#include "qlat/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qlat {

namespace {

struct Gso {
  QMatrix mu;
  QVector b;  // squared lengths of the Gram-Schmidt vectors
};

Gso gram_schmidt(const QMatrix& g) {
  const std::size_t n = g.rows();
  Gso out{QMatrix(n, n), QVector(n)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Rational s = g(k, j);
      for (std::size_t l = 0; l < j; ++l) s -= out.mu(j, l) * out.mu(k, l) * out.b[l];
      out.mu(k, j) = s / out.b[j];
    }
    Rational s = g(k, k);
    for (std::size_t j = 0; j < k; ++j) s -= out.mu(k, j) * out.mu(k, j) * out.b[j];
    out.b[k] = s;
  }
  return out;
}

// Row operation row_k -= q row_j on the basis, keeping the Gram in sync.
void subtract_row(ZMatrix& t, QMatrix& g, std::size_t k, std::size_t j, const Integer& q) {
  const std::size_t n = g.rows();
  for (std::size_t c = 0; c < t.cols(); ++c) t(k, c) -= q * t(j, c);
  const Rational qq(q);
  const Rational gkk = g(k, k) - 2 * qq * g(k, j) + qq * qq * g(j, j);
  for (std::size_t c = 0; c < n; ++c) {
    if (c == k) continue;
    g(k, c) -= qq * g(j, c);
    g(c, k) = g(k, c);
  }
  g(k, k) = gkk;
}

void swap_basis(ZMatrix& t, QMatrix& g, std::size_t a, std::size_t b) {
  t.swap_rows(a, b);
  g.swap_rows(a, b);
  g.swap_cols(a, b);
}

}  // namespace

LllResult lll_reduce(const GramLattice& lattice) {
  if (!is_positive_definite(lattice)) fail(ErrorCode::kNotPositiveDefinite, "LLL needs a positive definite lattice");
  const std::size_t n = lattice.rank();
  ZMatrix t = ZMatrix::identity(n);
  QMatrix g = lattice.gram();
  const Rational delta(3, 4);
  std::size_t k = 1;
  while (k < n) {
    Gso gso = gram_schmidt(g);
    for (std::size_t jj = k; jj-- > 0;) {
      const Integer q = round(gso.mu(k, jj));
      if (q != 0) {
        subtract_row(t, g, k, jj, q);
        gso = gram_schmidt(g);
      }
    }
    const Rational m = gso.mu(k, k - 1);
    if (gso.b[k] >= (delta - m * m) * gso.b[k - 1]) {
      ++k;
    } else {
      swap_basis(t, g, k, k - 1);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return {GramLattice(g, {}, lattice.name()), t};
}

namespace {

class ShellSearch {
 public:
  ShellSearch(const QMatrix& gram, QVector shift, Rational lo, Rational hi, std::uint64_t budget,
              const std::function<void(const QVector&, const Rational&)>& visit)
      : n_(gram.rows()), q_(gram), shift_(std::move(shift)), lo_(std::move(lo)), hi_(std::move(hi)),
        budget_(budget), visit_(visit), y_(n_) {
    // Fincke-Pohst form: q(y) = sum_i q_ii (y_i + sum_{j>i} q_ij y_j)^2.
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        q_(j, i) = q_(i, j);
        q_(i, j) /= q_(i, i);
      }
      for (std::size_t k = i + 1; k < n_; ++k)
        for (std::size_t l = k; l < n_; ++l) q_(k, l) -= q_(k, i) * q_(i, l);
    }
  }

  void run() {
    if (hi_ < 0) return;
    if (n_ == 0) {
      if (lo_ <= 0) visit_({}, Rational(0));
      return;
    }
    descend(n_ - 1, hi_);
  }

 private:
  void descend(std::size_t i, const Rational& remaining) {
    if (++nodes_ > budget_) {
      fail(ErrorCode::kResourceExhausted, "enumeration budget of " + std::to_string(budget_) + " nodes exhausted");
    }
    Rational center = 0;
    for (std::size_t j = i + 1; j < n_; ++j) center -= q_(i, j) * y_[j];
    const Rational t = remaining / q_(i, i);
    const Rational m = center - shift_[i];
    const Integer r0 = isqrt(floor(t));
    Integer lower = ceil(m) - r0 - 2;
    Integer upper = floor(m) + r0 + 2;
    auto outside = [&](const Integer& x) {
      const Rational d = Rational(x) - m;
      return d * d > t;
    };
    while (lower <= upper && outside(lower)) ++lower;
    while (upper >= lower && outside(upper)) --upper;
    for (Integer x = lower; x <= upper; ++x) {
      y_[i] = shift_[i] + x;
      const Rational d = y_[i] - center;
      const Rational rest = remaining - q_(i, i) * d * d;
      if (i == 0) {
        const Rational norm = hi_ - rest;
        if (norm >= lo_) visit_(y_, norm);
      } else {
        descend(i - 1, rest);
      }
    }
  }

  std::size_t n_;
  QMatrix q_;
  QVector shift_;
  Rational lo_, hi_;
  std::uint64_t budget_;
  const std::function<void(const QVector&, const Rational&)>& visit_;
  QVector y_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

void for_each_in_shell(const GramLattice& lattice, const QVector& shift, const Rational& lo, const Rational& hi,
                       const VectorVisitor& visit, std::uint64_t budget) {
  const std::size_t n = lattice.rank();
  if (shift.size() != n) fail(ErrorCode::kInvalidArgument, "shift has wrong length");
  if (!is_positive_definite(lattice)) fail(ErrorCode::kNotPositiveDefinite, "enumeration needs a positive definite lattice");
  if (n <= 4) {
    ShellSearch(lattice.gram(), shift, lo, hi, budget, visit).run();
    return;
  }
  const LllResult red = lll_reduce(lattice);
  const QMatrix t = to_rational(red.transform);
  // Coordinates in the reduced basis: v = v' T, so v' = v T^{-1}.
  const QMatrix t_inv = inverse(t);
  const QVector reduced_shift = shift * t_inv;
  std::function<void(const QVector&, const Rational&)> back = [&](const QVector& y, const Rational& norm) {
    visit(y * t, norm);
  };
  ShellSearch(red.lattice.gram(), reduced_shift, lo, hi, budget, back).run();
}

std::vector<QVector> enumerate_affine(const GramLattice& lattice, const QVector& shift, const Rational& n,
                                      std::uint64_t budget) {
  std::vector<QVector> out;
  for_each_in_shell(lattice, shift, n, n, [&](const QVector& v, const Rational&) { out.push_back(v); }, budget);
  std::sort(out.begin(), out.end(), [](const QVector& a, const QVector& b) { return lex_less(a, b); });
  return out;
}

std::vector<QVector> enumerate_norm(const GramLattice& lattice, const Rational& n, std::uint64_t budget) {
  return enumerate_affine(lattice, QVector(lattice.rank(), Rational(0)), n, budget);
}

bool is_crystallographic(const GramLattice& lattice, const QVector& v) {
  const Rational n = lattice.norm(v);
  if (n <= 0) return false;
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    QVector x(lattice.rank(), Rational(0));
    x[i] = 1;
    if (!is_integral(reflect(lattice, v, x))) return false;
  }
  return true;
}

QVector reflect(const GramLattice& lattice, const QVector& root, const QVector& x) {
  const Rational n = lattice.norm(root);
  if (n == 0) fail(ErrorCode::kInvalidArgument, "reflection in an isotropic vector");
  return x - (2 * lattice.inner(x, root) / n) * root;
}

std::vector<Rational> candidate_root_norms(const Integer& exponent) {
  std::set<Rational, std::greater<>> norms;
  for (Integer d = 1; d <= exponent; ++d) {
    if (exponent % d != 0) continue;
    norms.insert(fraction(2, d));
    norms.insert(fraction(1, d));
  }
  return {norms.begin(), norms.end()};
}

DualSpan dual_in_span(const GramLattice& lattice, const Sublattice& within) {
  if (!lattice.integral()) fail(ErrorCode::kNotIntegral, "dual lattice computation needs an integral lattice");
  const std::size_t n = lattice.rank();
  const std::size_t k = within.rank();
  DualSpan out{QMatrix(0, n), Integer(1)};
  if (k == 0) return out;
  // c in Q^k with G B^T c integral: Smith form of A = G B^T.
  const ZMatrix a = to_integer(lattice.gram() * to_rational(within.basis()).transposed());
  const SmithForm s = smith_normal_form(a);
  if (s.rank < k) fail(ErrorCode::kDegenerate, "form is degenerate on the search space");
  const QMatrix b = to_rational(within.basis());
  for (std::size_t i = 0; i < k; ++i) {
    const Integer& d = s.d(i, i);
    out.exponent = lcm(out.exponent, d);
    QVector c(k);
    for (std::size_t r = 0; r < k; ++r) c[r] = fraction(s.v(r, i), d);
    out.basis.append_row(c * b);
  }
  return out;
}

namespace {

// Solutions of the binary form q(c) = a c1^2 + 2 b c1 c2 + e c2^2 = n with
// a square discriminant (the isotropic indefinite case).
std::vector<ZVector> solve_isotropic_binary(const Integer& a, const Integer& b, const Integer& e, const Integer& n) {
  const Integer disc = b * b - a * e;
  const Integer s = isqrt(disc);
  if (disc <= 0 || s * s != disc) fail(ErrorCode::kUnbounded, "indefinite binary form is anisotropic; infinitely many solutions");
  std::vector<ZVector> out;
  if (n == 0) fail(ErrorCode::kUnbounded, "isotropic solutions are unbounded");
  if (a == 0 && e == 0) {
    // 2 b c1 c2 = n.
    if (n % (2 * b) != 0) return out;
    const Integer m = n / (2 * b);
    const Integer am = abs(m);
    for (Integer d = 1; d <= am; ++d)
      if (am % d == 0) {
        out.push_back({d, m / d});
        out.push_back({-d, -m / d});
      }
    return out;
  }
  if (a == 0) {
    for (auto& v : solve_isotropic_binary(e, b, a, n)) out.push_back({v[1], v[0]});
    return out;
  }
  // a q = (a c1 + (b - s) c2)(a c1 + (b + s) c2) = a n.
  const Integer target = a * n;
  const Integer at = abs(target);
  for (Integer d = 1; d <= at; ++d) {
    if (at % d != 0) continue;
    for (int sign : {1, -1}) {
      const Integer l1 = sign * d;
      const Integer l2 = target / l1;
      const Integer diff = l2 - l1;
      if (diff % (2 * s) != 0) continue;
      const Integer c2 = diff / (2 * s);
      const Integer num = l1 - (b - s) * c2;
      if (num % a != 0) continue;
      out.push_back({num / a, c2});
    }
  }
  return out;
}

}  // namespace

std::vector<Root> roots_of(const std::shared_ptr<const GramLattice>& lattice, const std::optional<Sublattice>& within,
                           std::uint64_t budget) {
  const Sublattice space = within ? *within : Sublattice(lattice, ZMatrix::identity(lattice->rank()));
  if (&space.ambient() != lattice.get() && !(space.ambient() == *lattice))
    fail(ErrorCode::kInvalidArgument, "search space lives in a different lattice");
  if (lattice->rank() > 0 && determinant(*lattice) == 0) fail(ErrorCode::kDegenerate, "form is degenerate");
  const DualSpan dual = dual_in_span(*lattice, space);
  const std::size_t k = dual.basis.rows();
  if (k == 0) return {};
  const GramLattice m(dual.basis * lattice->gram() * dual.basis.transposed());

  std::map<Rational, std::vector<QVector>, std::greater<>> found;
  auto consider = [&](const ZVector& c) {
    if (content(c) != 1) return;
    const QVector v = to_rational(c) * dual.basis;
    const Rational n = lattice->norm(v);
    if (n <= 0) return;
    if (!is_integral((2 / n) * v)) return;
    found[n].push_back(v);
  };

  const std::vector<Rational> norms = candidate_root_norms(dual.exponent);
  if (is_positive_definite(m)) {
    for (const auto& n : norms) {
      for (const auto& c : enumerate_norm(m, n, budget)) consider(to_integer(c));
    }
  } else if (k == 2 && signature(m).negative == 1) {
    const Integer den = m.scale();
    const ZMatrix g = m.scaled_gram();
    for (const auto& n : norms) {
      const Rational scaled = n * den;
      if (!is_integral(scaled)) continue;
      for (const auto& c : solve_isotropic_binary(g(0, 0), g(0, 1), g(1, 1), scaled.get_num())) consider(c);
    }
  } else {
    fail(ErrorCode::kUnbounded, "root search space is not positive definite; restrict to a definite sublattice");
  }

  std::vector<Root> out;
  for (auto& [n, vs] : found) {
    std::sort(vs.begin(), vs.end(), [](const QVector& a, const QVector& b) { return lex_less(a, b); });
    for (auto& v : vs) out.push_back({std::move(v), n});
  }
  return out;
}

std::vector<Root> roots_of(const GramLattice& lattice, std::uint64_t budget) {
  return roots_of(std::make_shared<const GramLattice>(lattice), std::nullopt, budget);
}

}  // namespace qlat
