#include "qlat/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qlat {

namespace {

struct LexLess {
  bool operator()(const QVector& a, const QVector& b) const { return lex_less(a, b); }
};

bool lex_positive(const QVector& v) {
  for (const auto& x : v)
    if (x != 0) return x > 0;
  return false;
}

void sort_types(std::vector<ComponentType>& types) {
  std::sort(types.begin(), types.end(), [](const ComponentType& a, const ComponentType& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    return a.label < b.label;
  });
}

}  // namespace

std::size_t RootSystemType::rank() const {
  std::size_t r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::string RootSystemType::label() const { return multiset_label(components); }

std::vector<std::pair<ComponentType, std::size_t>> RootSystemType::counts() const {
  std::vector<std::pair<ComponentType, std::size_t>> out;
  for (const auto& c : components) {
    if (!out.empty() && out.back().first.label == c.label) {
      ++out.back().second;
    } else {
      out.emplace_back(c, 1);
    }
  }
  return out;
}

std::vector<Root> simple_system(const GramLattice& lattice, const std::vector<Root>& roots) {
  std::set<QVector, LexLess> positive;
  for (const auto& r : roots) {
    if (r.vector.size() != lattice.rank()) fail(ErrorCode::kInvalidArgument, "root has the wrong dimension");
    if (lex_positive(r.vector)) positive.insert(r.vector);
  }
  std::vector<Root> base;
  for (const auto& r : roots) {
    if (!lex_positive(r.vector)) continue;
    bool decomposable = false;
    for (const auto& q : positive) {
      if (!lex_less(q, r.vector)) break;
      const QVector diff = r.vector - q;
      if (lex_positive(diff) && positive.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) base.push_back(r);
  }
  std::sort(base.begin(), base.end(), [](const Root& a, const Root& b) { return lex_less(a.vector, b.vector); });

  if (!base.empty()) {
    QMatrix rows(0, lattice.rank());
    for (const auto& b : base) rows.append_row(b.vector);
    if (rank(rows) != base.size()) fail(ErrorCode::kVerificationFailed, "simple roots are linearly dependent");
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i + 1; j < base.size(); ++j)
        if (lattice.inner(base[i].vector, base[j].vector) > 0)
          fail(ErrorCode::kVerificationFailed, "simple roots with a positive product");
    for (const auto& r : roots) {
      const QVector c = coordinates_in_rows(rows, r.vector);
      bool nonneg = true, nonpos = true;
      for (const auto& x : c) {
        if (!is_integral(x)) fail(ErrorCode::kVerificationFailed, "root is not an integral combination of the base");
        nonneg = nonneg && x >= 0;
        nonpos = nonpos && x <= 0;
      }
      if (!nonneg && !nonpos) fail(ErrorCode::kVerificationFailed, "root with mixed signs over the base");
    }
  }
  return base;
}

RootSystemType classify_roots(const GramLattice& lattice, const std::vector<Root>& roots) {
  RootSystemType t;
  const auto base = simple_system(lattice, roots);
  if (base.empty()) return t;
  std::vector<QVector> vs;
  for (const auto& b : base) vs.push_back(b.vector);
  const Diagram d = build_diagram(lattice, vs);
  for (const auto& c : classify_components(d)) {
    if (c.type.kind != Kind::kFinite) fail(ErrorCode::kVerificationFailed, "base diagram is not of finite type");
    t.components.push_back(c.type);
  }
  sort_types(t.components);
  return t;
}

RootSystemType root_system_type(const GramLattice& lattice, std::uint64_t budget) {
  if (!is_positive_definite(lattice)) fail(ErrorCode::kNotPositiveDefinite, "root_system_type needs a positive definite lattice");
  auto ptr = std::make_shared<const GramLattice>(lattice);
  return classify_roots(lattice, roots_of(ptr, std::nullopt, budget));
}

RootSystemType strip_short_companions(const RootSystemType& t) {
  RootSystemType out;
  for (const auto& c : t.components)
    if (c.label != "G2" && c.label != "A1s") out.components.push_back(c);
  return out;
}

std::vector<Root> roots_of_norm(const std::vector<Root>& roots, const Rational& norm) {
  std::vector<Root> out;
  for (const auto& r : roots)
    if (r.norm == norm) out.push_back(r);
  return out;
}

}  // namespace qlat
