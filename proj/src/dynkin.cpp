#include "qlat/dynkin.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <sstream>

namespace qlat {

std::string_view bond_name(Bond b) {
  switch (b) {
    case Bond::kNone: return "none";
    case Bond::kSimple: return "simple";
    case Bond::kDouble: return "double";
    case Bond::kTriple: return "triple";
    case Bond::kAffine: return "affine";
    case Bond::kDotted: return "dotted";
    case Bond::kPositive: return "positive";
    case Bond::kOther: return "other";
  }
  return "other";
}

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::kFinite: return "finite";
    case Kind::kAffine: return "affine";
    case Kind::kIndefinite: return "indefinite";
  }
  return "indefinite";
}

Bond bond_from_product(const Rational& p, const Rational& n1, const Rational& n2) {
  if (p == 0) return Bond::kNone;
  if (p > 0) return Bond::kPositive;
  const Rational c = p * p / (n1 * n2);
  if (c == Rational(1, 4)) return Bond::kSimple;
  if (c == Rational(1, 2)) return Bond::kDouble;
  if (c == Rational(3, 4)) return Bond::kTriple;
  if (c == 1) return Bond::kAffine;
  if (c > 1) return Bond::kDotted;
  return Bond::kOther;
}

namespace {

inline Mask bit(std::size_t i) { return Mask(1) << i; }

std::vector<std::size_t> members(Mask m) {
  std::vector<std::size_t> out;
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

}  // namespace

Diagram::Diagram(QMatrix products, std::vector<std::string> names, std::vector<QVector> vectors)
    : names_(std::move(names)), products_(std::move(products)), vectors_(std::move(vectors)) {
  const std::size_t n = products_.rows();
  if (!is_symmetric(products_)) fail(ErrorCode::kInvalidArgument, "diagram products must be symmetric");
  if (n > kMaxDiagramSize) fail(ErrorCode::kInvalidArgument, "diagram has more than 64 vertices");
  if (names_.empty())
    for (std::size_t i = 0; i < n; ++i) names_.push_back("r" + std::to_string(i));
  if (names_.size() != n) fail(ErrorCode::kInvalidArgument, "name count does not match vertex count");
  if (!vectors_.empty() && vectors_.size() != n) fail(ErrorCode::kInvalidArgument, "vector count mismatch");
  max_norm_ = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (products_(i, i) <= 0) fail(ErrorCode::kInvalidArgument, "diagram vertices need positive norm");
    norms_.push_back(products_(i, i));
    if (products_(i, i) > max_norm_) max_norm_ = products_(i, i);
  }
  bonds_.assign(n * n, Bond::kNone);
  adjacency_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Bond b = bond_from_product(products_(i, j), norms_[i], norms_[j]);
      bonds_[i * n + j] = b;
      if (b != Bond::kNone) adjacency_[i] |= bit(j);
    }
}

std::size_t Diagram::degree(std::size_t i) const { return static_cast<std::size_t>(std::popcount(adjacency_[i])); }

Diagram Diagram::induced(Mask m) const {
  const auto idx = members(m);
  QMatrix p(idx.size(), idx.size());
  std::vector<std::string> names;
  std::vector<QVector> vectors;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    names.push_back(names_[idx[a]]);
    if (!vectors_.empty()) vectors.push_back(vectors_[idx[a]]);
    for (std::size_t b = 0; b < idx.size(); ++b) p(a, b) = products_(idx[a], idx[b]);
  }
  return Diagram(std::move(p), std::move(names), std::move(vectors));
}

Diagram build_diagram(const GramLattice& lattice, const std::vector<QVector>& roots, std::vector<std::string> names) {
  const std::size_t n = roots.size();
  QMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) p(i, j) = p(j, i) = lattice.inner(roots[i], roots[j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p(i, j) * p(i, j) == p(i, i) * p(j, j) && rank(QMatrix::from_rows({roots[i], roots[j]}, lattice.rank())) < 2)
        fail(ErrorCode::kInvalidArgument, "duplicate or proportional roots " + std::to_string(i) + " and " + std::to_string(j));
  return Diagram(std::move(p), std::move(names), roots);
}

std::vector<Mask> connected_components(const Diagram& d, Mask m) {
  std::vector<Mask> out;
  while (m) {
    Mask comp = m & (~m + 1);
    Mask frontier = comp;
    while (frontier) {
      Mask next = 0;
      for (auto i : members(frontier)) next |= d.neighbors(i);
      next &= m & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    m &= ~comp;
  }
  return out;
}

namespace {

ComponentType finite(std::string label, std::size_t rank) { return {Kind::kFinite, std::move(label), rank}; }
ComponentType affine(std::string label, std::size_t rank) { return {Kind::kAffine, "~" + std::move(label), rank}; }
ComponentType indefinite(std::string label) { return {Kind::kIndefinite, std::move(label), 0}; }

// Vertices of a path in order, starting from an endpoint.
std::vector<std::size_t> path_order(const Diagram& d, Mask m) {
  const auto vs = members(m);
  std::size_t start = vs.front();
  for (auto v : vs)
    if (std::popcount(d.neighbors(v) & m) <= 1) {
      start = v;
      break;
    }
  std::vector<std::size_t> order{start};
  Mask seen = bit(start);
  while (order.size() < vs.size()) {
    const Mask next = d.neighbors(order.back()) & m & ~seen;
    const auto v = static_cast<std::size_t>(std::countr_zero(next));
    order.push_back(v);
    seen |= bit(v);
  }
  return order;
}

// Legs hanging off a branch vertex: for each neighbor, the path walking away.
std::vector<std::vector<std::size_t>> legs(const Diagram& d, Mask m, std::size_t branch) {
  std::vector<std::vector<std::size_t>> out;
  for (auto start : members(d.neighbors(branch) & m)) {
    std::vector<std::size_t> leg{start};
    Mask seen = bit(branch) | bit(start);
    for (;;) {
      const Mask next = d.neighbors(leg.back()) & m & ~seen;
      if (std::popcount(next) != 1) break;
      const auto v = static_cast<std::size_t>(std::countr_zero(next));
      leg.push_back(v);
      seen |= bit(v);
    }
    out.push_back(std::move(leg));
  }
  return out;
}

ComponentType classify_tree(const Diagram& d, Mask m, std::size_t n, std::size_t doubles, std::size_t triples) {
  const auto vs = members(m);
  std::vector<std::size_t> branch;
  std::size_t maxdeg = 0;
  for (auto v : vs) {
    const auto deg = static_cast<std::size_t>(std::popcount(d.neighbors(v) & m));
    maxdeg = std::max(maxdeg, deg);
    if (deg >= 3) branch.push_back(v);
  }
  const bool is_path = maxdeg <= 2;

  if (triples > 0) {
    if (triples == 1 && doubles == 0 && n == 2) return finite("G2", 2);
    if (triples == 1 && doubles == 0 && n == 3 && is_path) return affine("G2", 2);
    return indefinite("other");
  }

  if (doubles == 0) {
    if (is_path) return finite("A" + std::to_string(n), n);
    if (maxdeg == 4) return (n == 5) ? affine("D4", 4) : indefinite("other");
    if (maxdeg > 4) return indefinite("other");
    if (branch.size() == 1) {
      auto ls = legs(d, m, branch[0]);
      std::vector<std::size_t> len;
      for (auto& l : ls) len.push_back(l.size());
      std::sort(len.begin(), len.end());
      const auto p = len[0], q = len[1], r = len[2];
      if (p == 1 && q == 1) return finite("D" + std::to_string(r + 3), n);
      if (p == 1 && q == 2 && r >= 2 && r <= 4) return finite("E" + std::to_string(r + 4), n);
      if (p == 2 && q == 2 && r == 2) return affine("E6", 6);
      if (p == 1 && q == 3 && r == 3) return affine("E7", 7);
      if (p == 1 && q == 2 && r == 5) return affine("E8", 8);
      return indefinite("other");
    }
    if (branch.size() == 2) {
      for (auto b : branch) {
        int leaves = 0;
        for (auto v : members(d.neighbors(b) & m)) leaves += std::popcount(d.neighbors(v) & m) == 1;
        if (leaves != 2) return indefinite("other");
      }
      return affine("D" + std::to_string(n - 1), n - 1);
    }
    return indefinite("other");
  }

  // Position of double bonds along a path.
  if (is_path) {
    const auto order = path_order(d, m);
    std::vector<std::size_t> at;
    for (std::size_t k = 0; k + 1 < n; ++k)
      if (d.bond(order[k], order[k + 1]) == Bond::kDouble) at.push_back(k);
    if (doubles == 1) {
      const std::size_t k = at[0];
      if (n == 2) return finite("B2", 2);
      if (k == 0 || k == n - 2) {
        const std::size_t leaf = (k == 0) ? order.front() : order.back();
        return finite(std::string(d.is_short(leaf) ? "B" : "C") + std::to_string(n), n);
      }
      if (n == 4 && k == 1) return finite("F4", 4);
      if (n == 5 && (k == 1 || k == 2)) return affine("F4", 4);
      return indefinite("other");
    }
    if (doubles == 2 && n >= 3 && at[0] == 0 && at[1] == n - 2) return affine("C" + std::to_string(n - 1), n - 1);
    return indefinite("other");
  }
  if (doubles == 1 && branch.size() == 1 && maxdeg == 3) {
    auto ls = legs(d, m, branch[0]);
    std::size_t unit_legs = 0;
    bool ok = false;
    for (auto& l : ls) {
      std::vector<std::size_t> chain{branch[0]};
      chain.insert(chain.end(), l.begin(), l.end());
      std::size_t dbl = 0;
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) dbl += d.bond(chain[k], chain[k + 1]) == Bond::kDouble;
      if (dbl == 0 && l.size() == 1) {
        ++unit_legs;
      } else if (dbl == 1 && d.bond(chain[chain.size() - 2], chain.back()) == Bond::kDouble) {
        ok = true;
      }
    }
    if (ok && unit_legs >= 2) return affine("B" + std::to_string(n - 1), n - 1);
  }
  return indefinite("other");
}

}  // namespace

ComponentType classify_connected(const Diagram& d, Mask m) {
  const auto vs = members(m);
  const std::size_t n = vs.size();
  if (n == 0) fail(ErrorCode::kInvalidArgument, "empty vertex set");
  std::size_t edges = 0, doubles = 0, triples = 0, affines = 0;
  bool dotted = false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      switch (d.bond(vs[a], vs[b])) {
        case Bond::kNone: continue;
        case Bond::kSimple: break;
        case Bond::kDouble: ++doubles; break;
        case Bond::kTriple: ++triples; break;
        case Bond::kAffine: ++affines; break;
        case Bond::kDotted: dotted = true; break;
        case Bond::kPositive:
        case Bond::kOther: return indefinite("other");
      }
      ++edges;
    }
  if (dotted) return indefinite("hyperbolic");
  if (n == 1) return finite(d.is_short(vs[0]) ? "A1s" : "A1", 1);
  if (affines > 0) {
    if (n == 2) return affine(d.is_short(vs[0]) && d.is_short(vs[1]) ? "A1s" : "A1", 1);
    return indefinite("other");
  }
  if (edges == n) {
    if (doubles + triples > 0) return indefinite("other");
    for (auto v : vs)
      if (std::popcount(d.neighbors(v) & m) != 2) return indefinite("other");
    return affine("A" + std::to_string(n - 1), n - 1);
  }
  if (edges != n - 1) return indefinite("other");
  return classify_tree(d, m, n, doubles, triples);
}

std::vector<Component> classify_components(const Diagram& d, Mask m) {
  std::vector<Component> out;
  for (Mask c : connected_components(d, m)) out.push_back({c, classify_connected(d, c)});
  return out;
}

std::vector<Component> classify_components(const Diagram& d) { return classify_components(d, d.all()); }

std::string multiset_label(std::vector<ComponentType> types) {
  std::sort(types.begin(), types.end(), [](const ComponentType& a, const ComponentType& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    return a.label < b.label;
  });
  std::string out;
  for (std::size_t i = 0; i < types.size();) {
    std::size_t j = i;
    while (j < types.size() && types[j].label == types[i].label) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += types[i].label;
    i = j;
  }
  return out;
}

bool is_finite_type(const Diagram& d, Mask m) {
  for (Mask c : connected_components(d, m))
    if (classify_connected(d, c).kind != Kind::kFinite) return false;
  return true;
}

bool is_pure_affine(const Diagram& d, Mask m) {
  if (m == 0) return false;
  for (Mask c : connected_components(d, m))
    if (classify_connected(d, c).kind != Kind::kAffine) return false;
  return true;
}

ZVector null_vector(const Diagram& d, Mask m) {
  const auto vs = members(m);
  QMatrix g(vs.size(), vs.size());
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = 0; b < vs.size(); ++b) g(a, b) = d.products()(vs[a], vs[b]);
  const QMatrix k = rational_kernel(g);
  if (k.rows() != 1) fail(ErrorCode::kInvalidArgument, "vertex set does not have a one-dimensional null space");
  QVector v = k.row_vector(0);
  const Integer den = denominator_lcm(v);
  ZVector z = to_integer(Rational(den) * v);
  const Integer c = content(z);
  for (auto& x : z) x /= c;
  if (z[0] < 0)
    for (auto& x : z) x = -x;
  for (const auto& x : z)
    if (x <= 0) fail(ErrorCode::kInvalidArgument, "null vector is not positive");
  return z;
}

std::vector<Mask> affine_catalog(const Diagram& d, Mask within) {
  std::vector<Mask> out;
  std::function<void(Mask, Mask, Mask, std::size_t)> extend = [&](Mask s, Mask ext, Mask nbhd, std::size_t v) {
    while (ext) {
      const auto w = static_cast<std::size_t>(std::countr_zero(ext));
      ext &= ext - 1;
      const Mask s2 = s | bit(w);
      const ComponentType t = classify_connected(d, s2);
      if (t.kind == Kind::kAffine) {
        out.push_back(s2);
        continue;
      }
      if (t.kind != Kind::kFinite) continue;
      const Mask above = ~((bit(v) << 1) - 1);
      const Mask fresh = d.neighbors(w) & within & above & ~s & ~nbhd;
      extend(s2, ext | fresh, nbhd | d.neighbors(w), v);
    }
  };
  for (auto v : members(within)) {
    const Mask above = ~((bit(v) << 1) - 1);
    extend(bit(v), d.neighbors(v) & within & above, d.neighbors(v) | bit(v), v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffineSubdiagram> maximal_pure_affine(const Diagram& d, std::size_t ambient_rank, Mask within) {
  const std::vector<Mask> cat = affine_catalog(d, within);
  const std::size_t c = cat.size();
  std::vector<Mask> closed(c);
  for (std::size_t i = 0; i < c; ++i) {
    closed[i] = cat[i];
    for (auto v : members(cat[i])) closed[i] |= d.neighbors(v);
  }
  // Compatibility graph: disjoint and mutually orthogonal components.
  std::vector<std::vector<char>> compat(c, std::vector<char>(c, 0));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) compat[i][j] = i != j && (closed[i] & cat[j]) == 0;

  std::vector<std::vector<std::size_t>> cliques;
  std::function<void(std::vector<std::size_t>&, std::vector<std::size_t>, std::vector<std::size_t>)> bk =
      [&](std::vector<std::size_t>& r, std::vector<std::size_t> p, std::vector<std::size_t> x) {
        if (p.empty() && x.empty()) {
          cliques.push_back(r);
          return;
        }
        std::size_t pivot = p.empty() ? x[0] : p[0];
        std::size_t best = 0;
        for (const auto& cand : {p, x})
          for (auto u : cand) {
            std::size_t cnt = 0;
            for (auto q : p) cnt += compat[u][q];
            if (cnt >= best) best = cnt, pivot = u;
          }
        const std::vector<std::size_t> todo = [&] {
          std::vector<std::size_t> t;
          for (auto q : p)
            if (!compat[pivot][q]) t.push_back(q);
          return t;
        }();
        for (auto v : todo) {
          std::vector<std::size_t> p2, x2;
          for (auto q : p)
            if (compat[v][q]) p2.push_back(q);
          for (auto q : x)
            if (compat[v][q]) x2.push_back(q);
          r.push_back(v);
          bk(r, p2, x2);
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  std::vector<std::size_t> r, all;
  for (std::size_t i = 0; i < c; ++i) all.push_back(i);
  bk(r, all, {});

  std::vector<AffineSubdiagram> out;
  for (const auto& cl : cliques) {
    if (cl.empty()) continue;
    AffineSubdiagram a;
    std::vector<ComponentType> types;
    for (auto i : cl) {
      a.vertices |= cat[i];
      a.components.push_back({cat[i], classify_connected(d, cat[i])});
      types.push_back(a.components.back().type);
    }
    std::sort(a.components.begin(), a.components.end(), [](const Component& x, const Component& y) { return x.vertices < y.vertices; });
    a.label = multiset_label(types);
    if (!d.vectors().empty()) {
      QMatrix rows(0, d.vectors().front().size());
      for (auto v : members(a.vertices)) rows.append_row(d.vectors()[v]);
      a.corank = ambient_rank - rank(rows);
    } else {
      fail(ErrorCode::kInvalidArgument, "corank needs the vertex vectors of the diagram");
    }
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end(), [](const AffineSubdiagram& x, const AffineSubdiagram& y) { return x.vertices < y.vertices; });
  return out;
}

std::vector<AffineSubdiagram> maximal_pure_affine(const Diagram& d, std::size_t ambient_rank) {
  return maximal_pure_affine(d, ambient_rank, d.all());
}

namespace {

class Matcher {
 public:
  Matcher(const Diagram& a, const Diagram& b) : a_(a), b_(b), n_(a.size()) {
    // Intern products so comparisons are integer comparisons.
    std::map<Rational, int> ids;
    auto intern = [&](const Rational& q) { return ids.emplace(q, static_cast<int>(ids.size())).first->second; };
    pa_.assign(n_ * n_, 0);
    pb_.assign(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        pa_[i * n_ + j] = intern(a.products()(i, j));
        pb_[i * n_ + j] = intern(b.products()(i, j));
      }
    auto signature_of = [&](const std::vector<int>& p, std::size_t i) {
      std::vector<int> s;
      for (std::size_t j = 0; j < n_; ++j)
        if (j != i) s.push_back(p[i * n_ + j]);
      std::sort(s.begin(), s.end());
      s.push_back(p[i * n_ + i]);
      return s;
    };
    for (std::size_t i = 0; i < n_; ++i) {
      sa_.push_back(signature_of(pa_, i));
      sb_.push_back(signature_of(pb_, i));
    }
    // Order: BFS from vertex 0 so each new vertex is constrained by earlier ones.
    std::vector<char> seen(n_, 0);
    for (std::size_t root = 0; root < n_; ++root) {
      if (seen[root]) continue;
      std::vector<std::size_t> queue{root};
      seen[root] = 1;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        order_.push_back(queue[h]);
        for (auto v : members(a.neighbors(queue[h])))
          if (!seen[v]) seen[v] = 1, queue.push_back(v);
      }
    }
  }

  bool compatible_sizes() const {
    if (a_.size() != b_.size()) return false;
    auto x = sa_, y = sb_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

  // Calls `found` for each isomorphism; stops when it returns false.
  void search(const std::function<bool(const std::vector<std::size_t>&)>& found) {
    map_.assign(n_, n_);
    used_.assign(n_, 0);
    stop_ = false;
    found_ = &found;
    rec(0);
  }

 private:
  void rec(std::size_t depth) {
    if (stop_) return;
    if (depth == n_) {
      if (!(*found_)(map_)) stop_ = true;
      return;
    }
    const std::size_t i = order_[depth];
    for (std::size_t j = 0; j < n_ && !stop_; ++j) {
      if (used_[j] || sa_[i] != sb_[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const std::size_t u = order_[k];
        ok = pa_[i * n_ + u] == pb_[j * n_ + map_[u]];
      }
      if (!ok) continue;
      map_[i] = j;
      used_[j] = 1;
      rec(depth + 1);
      used_[j] = 0;
      map_[i] = n_;
    }
  }

  const Diagram& a_;
  const Diagram& b_;
  std::size_t n_;
  std::vector<int> pa_, pb_;
  std::vector<std::vector<int>> sa_, sb_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<char> used_;
  bool stop_ = false;
  const std::function<bool(const std::vector<std::size_t>&)>* found_ = nullptr;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Diagram& a, const Diagram& b) {
  if (a.size() != b.size()) return std::nullopt;
  Matcher m(a, b);
  if (!m.compatible_sizes()) return std::nullopt;
  std::optional<std::vector<std::size_t>> out;
  m.search([&](const std::vector<std::size_t>& f) {
    out = f;
    return false;
  });
  return out;
}

std::uint64_t automorphism_order(const Diagram& d) {
  Matcher m(d, d);
  std::uint64_t count = 0;
  m.search([&](const std::vector<std::size_t>&) {
    ++count;
    return true;
  });
  return count;
}

Diagram join_model() {
  const std::vector<std::string> left{"a", "b", "c"}, right{"u", "v", "w"};
  std::vector<std::string> names = left;
  names.insert(names.end(), right.begin(), right.end());
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      const std::size_t xy = names.size();
      names.push_back(left[x] + right[y]);
      const std::size_t yx = names.size();
      names.push_back(right[y] + left[x]);
      edges.emplace_back(x, xy);
      edges.emplace_back(xy, yx);
      edges.emplace_back(yx, 3 + y);
    }
  QMatrix p(names.size(), names.size());
  for (std::size_t i = 0; i < names.size(); ++i) p(i, i) = 2;
  for (auto [i, j] : edges) p(i, j) = p(j, i) = -1;
  return Diagram(std::move(p), std::move(names));
}

std::string to_dot(const Diagram& d, const std::string& graph_name) {
  std::ostringstream os;
  os << "graph " << graph_name << " {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    os << "  \"" << d.names()[i] << "\" [label=\"" << d.names()[i] << "\", norm=\"" << d.norms()[i].get_str() << "\"";
    os << (d.is_short(i) ? ", style=solid" : ", style=filled") << "];\n";
  }
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const Bond b = d.bond(i, j);
      if (b == Bond::kNone) continue;
      std::string label;
      switch (b) {
        case Bond::kSimple: label = "1"; break;
        case Bond::kDouble: label = "2"; break;
        case Bond::kTriple: label = "3"; break;
        case Bond::kAffine: label = "inf"; break;
        default: label = std::string(bond_name(b)); break;
      }
      os << "  \"" << d.names()[i] << "\" -- \"" << d.names()[j] << "\" [label=\"" << label << "\", product=\""
         << d.products()(i, j).get_str() << "\"";
      if (b == Bond::kDotted) os << ", style=dotted";
      os << "];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace qlat
