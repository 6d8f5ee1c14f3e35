#include "qlat/vinberg.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

#include "qlat/rootsys.hpp"

namespace qlat {

std::string_view status_name(VinbergStatus s) {
  switch (s) {
    case VinbergStatus::kRunning: return "running";
    case VinbergStatus::kFiniteVolume: return "finite_volume";
    case VinbergStatus::kBudgetExhausted: return "budget_exhausted";
  }
  return "running";
}

namespace {

bool root_conditions(const GramLattice& lattice, const QVector& r, const Rational& n) {
  const QVector p = lattice.products_with_basis(r);
  if (!is_integral(p)) return false;
  if (!is_integral(fraction(2 * n.get_den(), n.get_num()) * r)) return false;
  return content(to_integer(p)) == 1;
}

// Integer solution a of sum a_i x_i = target, if gcd(x) divides target.
std::optional<ZVector> linear_diophantine(const ZVector& x, const Integer& target) {
  ZVector a(x.size(), 0);
  Integer g = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    if (g == 0) {
      g = abs(x[i]);
      a[i] = sgn(x[i]);
      continue;
    }
    // Extended gcd of g and x[i]: s*g + t*x[i] = g'.
    Integer s, t, g2;
    mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), x[i].get_mpz_t());
    for (std::size_t j = 0; j < i; ++j) a[j] *= s;
    a[i] = t;
    g = g2;
  }
  if (g == 0 || target % g != 0) return std::nullopt;
  const Integer q = target / g;
  for (auto& v : a) v *= q;
  return a;
}

// Candidate roots r with r.v0 = -m and r.r = n inside the cone r.s <= 0 of
// the stabilizer simple roots s.
class CandidateSource {
 public:
  CandidateSource(const std::shared_ptr<const GramLattice>& lattice, const QVector& v0, const std::vector<Root>& simple,
                  std::uint64_t budget)
      : lattice_(lattice), v0_(v0), simple_(simple), budget_(budget), v0_norm_(lattice->norm(v0)) {
    const std::size_t n = lattice->rank();
    simplicial_ = simple.size() + 1 == n;
    if (simplicial_) {
      const std::size_t k = simple.size();
      QMatrix gs(k, k);
      QMatrix rows(0, n);
      for (std::size_t i = 0; i < k; ++i) {
        rows.append_row(simple[i].vector);
        for (std::size_t j = 0; j < k; ++j) gs(i, j) = lattice->inner(simple[i].vector, simple[j].vector);
      }
      const QMatrix minv = inverse(gs);
      coweights_ = minv * rows;
      coweight_products_ = coweights_ * lattice->gram();
      QMatrix a(k, k);
      Integer den = 1;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          a(i, j) = simple[i].norm * simple[j].norm * minv(i, j) / 4;
          if (a(i, j) < 0) fail(ErrorCode::kVerificationFailed, "stabilizer base has a non-Stieltjes Gram matrix");
          den = lcm(den, a(i, j).get_den());
        }
      scale_ = den;
      quad_.assign(k, std::vector<std::int64_t>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) quad_[i][j] = to_int64(Rational(a(i, j) * den).get_num());
    } else {
      const Sublattice perp = orthogonal_complement(lattice, {v0});
      dual_ = dual_in_span(*lattice, perp).basis;
      perp_lattice_ = GramLattice(dual_ * lattice->gram() * dual_.transposed());
    }
  }

  std::vector<QVector> at(const Integer& m, const Rational& n, const std::vector<Root>& accepted) {
    std::vector<QVector> out;
    const Rational alpha = Rational(-m) / v0_norm_;
    const Rational target = n - Rational(m * m) / v0_norm_;
    auto accept = [&](const QVector& x) {
      const QVector r = alpha * v0_ + x;
      if (root_conditions(*lattice_, r, n)) out.push_back(r);
    };
    if (simplicial_) {
      const Rational scaled = target * scale_;
      if (!is_integral(scaled)) return out;
      const std::int64_t t = to_int64(scaled.get_num());
      const std::size_t k = quad_.size();
      // Accepted roots b give constraints r.b <= 0, linear in c.  Those with
      // nonnegative coefficients are monotone along the search and prune it.
      struct Cut {
        std::vector<std::int64_t> g;
        std::int64_t bound;
      };
      std::vector<Cut> cuts;
      for (std::size_t a = k; a < accepted.size(); ++a) {
        const QVector& b = accepted[a].vector;
        QVector g(k);
        bool monotone = true;
        Integer den = alpha.get_den() * lattice_->inner(v0_, b).get_den();
        for (std::size_t j = 0; j < k; ++j) {
          Rational wb = 0;
          for (std::size_t q = 0; q < b.size(); ++q) wb += coweight_products_(j, q) * b[q];
          g[j] = -simple_[j].norm * wb / 2;
          monotone = monotone && g[j] >= 0;
          den = lcm(den, g[j].get_den());
        }
        if (!monotone) continue;
        Cut cut;
        for (std::size_t j = 0; j < k; ++j) cut.g.push_back(to_int64(Rational(g[j] * den).get_num()));
        cut.bound = to_int64(Rational(-alpha * lattice_->inner(v0_, b) * den).get_num());
        if (cut.bound < 0) return out;
        cuts.push_back(std::move(cut));
      }
      std::vector<std::vector<std::int64_t>> used(cuts.size(), std::vector<std::int64_t>(k + 1, 0));
      std::vector<std::int64_t> c(k, 0);
      std::uint64_t nodes = 0;
      std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t partial) {
        if (++nodes > budget_) fail(ErrorCode::kResourceExhausted, "candidate enumeration exceeded the node budget");
        if (i == k) {
          if (partial != t) return;
          QVector x(lattice_->rank(), Rational(0));
          for (std::size_t j = 0; j < k; ++j) {
            if (c[j] == 0) continue;
            const Rational cj = simple_[j].norm * c[j] / 2;
            for (std::size_t q = 0; q < x.size(); ++q) x[q] -= cj * coweights_(j, q);
          }
          accept(x);
          return;
        }
        std::int64_t cross = 0;
        for (std::size_t a = 0; a < i; ++a) cross += quad_[a][i] * c[a];
        for (std::int64_t v = 0;; ++v) {
          const std::int64_t val = partial + 2 * v * cross + quad_[i][i] * v * v;
          if (val > t) break;
          bool within = true;
          for (std::size_t q = 0; q < cuts.size() && within; ++q) {
            used[q][i + 1] = used[q][i] + cuts[q].g[i] * v;
            within = used[q][i + 1] <= cuts[q].bound;
          }
          if (!within) break;
          c[i] = v;
          rec(i + 1, val);
        }
        c[i] = 0;
      };
      rec(0, 0);
    } else {
      const auto a = linear_diophantine(to_integer(v0_), -m);
      if (!a) return out;
      const QVector rm = to_rational(*a) * inverse(lattice_->gram());
      const QVector xm = rm + (Rational(m) / v0_norm_) * v0_;
      const QVector shift = coordinates_in_rows(dual_, xm);
      for (const auto& c : enumerate_affine(perp_lattice_, shift, target, budget_)) {
        const QVector x = c * dual_;
        bool in_cone = true;
        for (const auto& s : simple_) in_cone = in_cone && lattice_->inner(x, s.vector) <= 0;
        if (in_cone) accept(x);
      }
    }
    std::sort(out.begin(), out.end(), [](const QVector& a, const QVector& b) { return lex_less(a, b); });
    return out;
  }

 private:
  std::shared_ptr<const GramLattice> lattice_;
  QVector v0_;
  std::vector<Root> simple_;
  std::uint64_t budget_;
  Rational v0_norm_;
  bool simplicial_ = false;
  QMatrix coweights_;
  QMatrix coweight_products_;
  Integer scale_ = 1;
  std::vector<std::vector<std::int64_t>> quad_;
  QMatrix dual_;
  GramLattice perp_lattice_;
};

}  // namespace

std::vector<Root> stabilizer_chamber(const std::shared_ptr<const GramLattice>& lattice, const QVector& v0,
                                     std::uint64_t budget) {
  if (v0.size() != lattice->rank()) fail(ErrorCode::kInvalidArgument, "v0 has the wrong dimension");
  if (lattice->norm(v0) >= 0) fail(ErrorCode::kInvalidArgument, "v0 must have negative norm");
  const Sublattice perp = orthogonal_complement(lattice, {v0});
  return simple_system(*lattice, roots_of(lattice, perp, budget));
}

VinbergRun run_vinberg(const std::shared_ptr<const GramLattice>& lattice, const QVector& v0, const Rational& max_weight,
                       std::uint64_t budget) {
  const Signature sig = signature(*lattice);
  if (sig.negative != 1 || sig.zero != 0) fail(ErrorCode::kInvalidArgument, "Vinberg's algorithm needs a hyperbolic lattice");
  if (!is_integral(v0)) fail(ErrorCode::kInvalidArgument, "v0 must be a lattice vector");

  VinbergRun run;
  run.lattice = lattice;
  run.v0 = v0;
  run.max_weight = max_weight;
  for (auto& s : stabilizer_chamber(lattice, v0, budget)) {
    run.accepted.push_back(s);
    run.weights.push_back(0);
  }
  run.stabilizer_count = run.accepted.size();
  if (finite_volume_check(run)) {
    run.status = VinbergStatus::kFiniteVolume;
    return run;
  }

  const Integer exponent = lattice->rank() == 0 ? Integer(1) : discriminant_group(*lattice).exponent();
  std::vector<std::tuple<Rational, Rational, Integer>> levels;  // weight, norm, m
  for (const auto& n : candidate_root_norms(exponent))
    for (Integer m = 1;; ++m) {
      const Rational w = Rational(m * m) / n;
      if (w > max_weight) break;
      levels.emplace_back(w, n, m);
    }
  std::sort(levels.begin(), levels.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    return std::get<1>(a) > std::get<1>(b);
  });

  const std::vector<Root> simple(run.accepted.begin(), run.accepted.end());
  CandidateSource source(lattice, v0, simple, budget);
  for (const auto& [w, n, m] : levels) {
    for (const auto& r : source.at(m, n, run.accepted)) {
      bool ok = true;
      for (const auto& b : run.accepted)
        if (lattice->inner(r, b.vector) > 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      run.accepted.push_back({r, n});
      run.weights.push_back(w);
      if (run.accepted.size() > kMaxDiagramSize)
        fail(ErrorCode::kResourceExhausted, "more accepted roots than the diagram limit");
      if (finite_volume_check(run)) {
        run.status = VinbergStatus::kFiniteVolume;
        return run;
      }
    }
  }
  run.status = VinbergStatus::kBudgetExhausted;
  return run;
}

namespace {

ZVector integer_ray(const QVector& v) {
  const Integer den = denominator_lcm(v);
  ZVector z = to_integer(Rational(den) * v);
  const Integer c = content(z);
  if (c != 0)
    for (auto& x : z) x /= c;
  return z;
}

// Machine-integer vectors for the walk; every operation is overflow checked.
using IVec = std::vector<std::int64_t>;

[[noreturn]] void overflow() { fail(ErrorCode::kResourceExhausted, "coordinate overflow in the polytope walk"); }

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

std::int64_t idot(const IVec& a, const IVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s = add(s, mul(a[i], b[i]));
  return s;
}

IVec to_ivec(const ZVector& z) {
  IVec out;
  for (const auto& x : z) {
    if (!x.fits_slong_p()) overflow();
    out.push_back(x.get_si());
  }
  return out;
}

IVec primitive(IVec v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

// a * x + b * y, reduced to a primitive vector.
IVec combine(std::int64_t a, const IVec& x, std::int64_t b, const IVec& y) {
  IVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = add(mul(a, x[i]), mul(b, y[i]));
  return primitive(std::move(out));
}

// Compares p1/q1 < p2/q2 for positive q1, q2 without overflow.
bool ratio_less(std::int64_t p1, std::int64_t q1, std::int64_t p2, std::int64_t q2) {
  return static_cast<__int128>(p1) * q2 < static_cast<__int128>(p2) * q1;
}

std::vector<std::size_t> bits(Mask m) {
  std::vector<std::size_t> out;
  for (; m; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

// Integer model of the constraints: roots and points are scaled by
// positive factors, which preserves every sign the walk looks at.
class Walker {
 public:
  Walker(const GramLattice& lattice, const std::vector<QVector>& roots, const QVector& u)
      : lattice_(lattice), roots_(roots), u_(u) {
    const std::size_t k = roots.size();
    const ZMatrix g = lattice.scaled_gram();
    gram_.assign(g.rows(), IVec(g.cols()));
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) gram_[i][j] = to_ivec({g(i, j)})[0];
    QMatrix prods(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      gr_.push_back(to_ivec(g * integer_ray(roots[i])));
      for (std::size_t j = 0; j < k; ++j) prods(i, j) = lattice.inner(roots[i], roots[j]);
    }
    diagram_ = Diagram(prods);
  }

  std::int64_t prod(std::size_t i, const IVec& x) const { return idot(gr_[i], x); }
  std::int64_t norm(const IVec& x) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) s = add(s, mul(x[i], idot(gram_[i], x)));
    return s;
  }

  Mask tight(const IVec& x) const {
    Mask m = 0;
    for (std::size_t i = 0; i < roots_.size(); ++i)
      if (prod(i, x) == 0) m |= Mask(1) << i;
    return m;
  }

  std::size_t span_rank(Mask m) const {
    QMatrix out(0, lattice_.rank());
    for (auto i : bits(m)) out.append_row(roots_[i]);
    return out.rows() == 0 ? 0 : rank(out);
  }

  // Direction dual to root i within a finite component c: orthogonal to
  // c - {i} and to everything outside span(c), with negative product with i.
  const IVec& proper_direction(Mask c, std::size_t i) {
    const auto key = std::make_pair(c, Mask(1) << i);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    QVector b;
    for (auto j : bits(c)) b.push_back(j == i ? Rational(1) : Rational(0));
    return cache_[key] = to_ivec(integer_ray(solve_in(c, b)));
  }

  // Correction inside an affine component c with vertex i dropped, making
  // u + correction orthogonal to c - {i}.
  const QVector& cusp_correction(Mask c, std::size_t i) {
    const auto key = std::make_pair(c, Mask(1) << i);
    auto it = corrections_.find(key);
    if (it != corrections_.end()) return it->second;
    const Mask rest = c & ~(Mask(1) << i);
    QVector b;
    for (auto j : bits(rest)) b.push_back(lattice_.inner(roots_[j], u_));
    return corrections_[key] = solve_in(rest, b);
  }

  const Diagram& diagram() const { return diagram_; }
  const GramLattice& lattice() const { return lattice_; }
  const QVector& u() const { return u_; }

 private:
  // sum_j a_j r_j over the members of m with a = -Gram(m)^{-1} b.
  QVector solve_in(Mask m, const QVector& b) const {
    const auto idx = bits(m);
    QMatrix g(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t c = 0; c < idx.size(); ++c) g(a, c) = diagram_.products()(idx[a], idx[c]);
    const QVector a = solve(g, b);
    QVector out(lattice_.rank(), Rational(0));
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (a[j] != 0)
        for (std::size_t q = 0; q < out.size(); ++q) out[q] -= a[j] * roots_[idx[j]][q];
    return out;
  }

  const GramLattice& lattice_;
  const std::vector<QVector>& roots_;
  QVector u_;
  std::vector<IVec> gram_;
  std::vector<IVec> gr_;
  Diagram diagram_;
  std::map<std::pair<Mask, Mask>, IVec> cache_;
  std::map<std::pair<Mask, Mask>, QVector> corrections_;
};

struct Edge {
  Mask removed = 0;
  IVec direction;
};

struct VertexShape {
  bool ok = false;
  bool ideal = false;
  std::vector<Edge> edges;
  std::string reason;
};

// Edges leaving a vertex.  At a proper vertex the direction dual to the
// dropped root, at a cusp u + (correction inside each component) for a
// fixed u off the horosphere.
VertexShape vertex_shape(Walker& w, const IVec& y, Mask t) {
  VertexShape v;
  const std::size_t n = w.lattice().rank();
  const std::int64_t ny = w.norm(y);
  if (ny > 0) {
    v.reason = "vertex outside the closed light cone";
    return v;
  }
  const auto comps = classify_components(w.diagram(), t);
  if (ny < 0) {
    // Finite type means a positive definite Gram, hence independent roots.
    bool finite = static_cast<std::size_t>(std::popcount(t)) == n - 1;
    for (const auto& c : comps) finite = finite && c.type.kind == Kind::kFinite;
    if (!finite) {
      v.reason = "proper vertex that is not simple of finite type";
      return v;
    }
    for (const auto& c : comps)
      for (auto i : bits(c.vertices)) v.edges.push_back({Mask(1) << i, w.proper_direction(c.vertices, i)});
    v.ok = true;
    return v;
  }

  v.ideal = true;
  std::size_t coxeter_rank = 0;
  for (const auto& c : comps) {
    if (c.type.kind != Kind::kAffine) {
      v.reason = "ideal vertex whose diagram is not pure affine";
      return v;
    }
    coxeter_rank += static_cast<std::size_t>(std::popcount(c.vertices)) - 1;
  }
  // The roots of a cusp span n-1 dimensions: all null vectors are
  // proportional to y.
  if (t == 0 || coxeter_rank + 2 != n || w.span_rank(t) + 1 != n) {
    v.reason = "ideal vertex without a cusp of full rank";
    return v;
  }
  std::vector<std::pair<Mask, QVector>> acc{{0, w.u()}};
  for (const auto& c : comps) {
    std::vector<std::pair<Mask, QVector>> next;
    for (const auto& [m, d] : acc)
      for (auto i : bits(c.vertices)) next.emplace_back(m | (Mask(1) << i), d + w.cusp_correction(c.vertices, i));
    acc = std::move(next);
  }
  for (auto& [m, d] : acc) v.edges.push_back({m, to_ivec(integer_ray(d))});
  v.ok = true;
  return v;
}

}  // namespace

PolytopeReport polytope_report(const GramLattice& lattice, const std::vector<QVector>& roots, const QVector& inside) {
  PolytopeReport rep;
  if (roots.size() > kMaxDiagramSize) fail(ErrorCode::kInvalidArgument, "too many roots for the polytope walk");
  const std::size_t n = lattice.rank();
  if (lattice.norm(inside) >= 0) fail(ErrorCode::kInvalidArgument, "start point must have negative norm");
  for (const auto& r : roots)
    if (lattice.inner(r, inside) > 0) fail(ErrorCode::kInvalidArgument, "start point violates a constraint");
  Walker w(lattice, roots, inside);

  auto failed = [&](std::string why) {
    rep.finite_volume = false;
    rep.reason = std::move(why);
    return rep;
  };

  // Nearest root hit when moving from y along d: the pair (-r.y, r.d)
  // minimizing the ratio, over roots outside `skip` with r.d > 0.
  auto first_hit = [&](const IVec& y, const IVec& d, Mask skip) {
    std::optional<std::pair<std::int64_t, std::int64_t>> best;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (skip >> i & 1) continue;
      const std::int64_t pd = w.prod(i, d);
      if (pd <= 0) continue;
      const std::int64_t py = -w.prod(i, y);
      if (!best || ratio_less(py, pd, best->first, best->second)) best = {py, pd};
    }
    return best;
  };

  // Move from the interior point to a vertex, gaining one independent
  // tight constraint per step.
  IVec y = to_ivec(integer_ray(inside));
  Mask t = w.tight(y);
  while (w.norm(y) < 0 && w.span_rank(t) + 1 < n) {
    QMatrix eqs(0, n);
    for (auto i : bits(t)) eqs.append_row(lattice.products_with_basis(roots[i]));
    QVector yq(y.begin(), y.end());
    eqs.append_row(lattice.products_with_basis(yq));
    IVec z = to_ivec(integer_ray(rational_kernel(eqs).row_vector(0)));
    bool moved = false;
    for (int sign = 0; sign < 2 && !moved; ++sign) {
      if (sign == 1)
        for (auto& x : z) x = -x;
      if (auto hit = first_hit(y, z, 0)) {
        y = combine(hit->second, y, hit->first, z);
        moved = true;
      }
    }
    if (!moved) return failed("the polyhedron contains a spacelike direction");
    if (w.norm(y) > 0) return failed("the polyhedron contains a point outside the closed light cone");
    t = w.tight(y);
  }

  std::map<Mask, bool> seen;
  std::deque<std::pair<IVec, Mask>> queue;
  seen.emplace(t, true);
  queue.emplace_back(y, t);
  std::size_t edge_ends = 0;
  while (!queue.empty()) {
    auto [vy, vt] = std::move(queue.front());
    queue.pop_front();
    const VertexShape shape = vertex_shape(w, vy, vt);
    if (!shape.ok) return failed(shape.reason);
    ++(shape.ideal ? rep.ideal_vertices : rep.proper_vertices);
    for (const Edge& e : shape.edges) {
      IVec d = e.direction;
      int sign = 0;
      bool consistent = true;
      for (auto i : bits(e.removed)) {
        const std::int64_t p = w.prod(i, d);
        if (p == 0) continue;
        const int s = p < 0 ? 1 : -1;
        if (sign == 0) sign = s;
        consistent = consistent && sign == s;
      }
      if (sign == 0 || !consistent) continue;
      if (sign < 0)
        for (auto& x : d) x = -x;

      IVec next;
      if (auto hit = first_hit(vy, d, vt)) {
        next = combine(hit->second, vy, hit->first, d);
      } else {
        // Past the ray d, continue towards -y.
        std::optional<std::pair<std::int64_t, std::int64_t>> best;
        for (std::size_t i = 0; i < roots.size(); ++i) {
          const std::int64_t py = -w.prod(i, vy);
          if (py <= 0) continue;
          const std::int64_t pd = -w.prod(i, d);
          if (!best || ratio_less(pd, py, best->first, best->second)) best = {pd, py};
        }
        if (!best) {
          // On the hyperbolic line the empty diagram is parabolic of rank
          // n - 2 = 0, so a ray to the boundary ends at a cusp.
          if (n != 2) return failed("an edge runs past the boundary at infinity");
          ++edge_ends;
          ++rep.ideal_vertices;
          continue;
        }
        next = combine(best->second, d, -best->first, vy);
      }
      if (w.norm(next) > 0) return failed("an edge leaves the closed light cone");
      ++edge_ends;
      const Mask nt = w.tight(next);
      if (seen.emplace(nt, true).second) queue.emplace_back(std::move(next), nt);
    }
  }
  rep.edges = edge_ends / 2;
  rep.finite_volume = true;
  return rep;
}

bool finite_volume_check(const VinbergRun& run) {
  std::vector<QVector> roots;
  for (const auto& r : run.accepted) roots.push_back(r.vector);
  return polytope_report(*run.lattice, roots, run.v0).finite_volume;
}

Diagram run_diagram(const VinbergRun& run) {
  std::vector<QVector> roots;
  for (const auto& r : run.accepted) roots.push_back(r.vector);
  return build_diagram(*run.lattice, roots);
}

}  // namespace qlat
