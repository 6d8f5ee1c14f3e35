#include "qlat/cubic4.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qlat {

namespace {

constexpr std::size_t kLambdaRank = 23;
constexpr std::size_t kLambda1Rank = 20;
constexpr std::size_t kE = 16, kF = 17, kE2 = 18, kF2 = 19, kEps = 20;
constexpr std::size_t kBeta1 = 16, kBeta2 = 17, kE1 = 18, kF1 = 19;

QVector unit(std::size_t n, std::size_t i) {
  QVector v(n, Rational(0));
  v[i] = 1;
  return v;
}

QMatrix e8_weights() {
  return inverse(make_standard("E8").gram());
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

AmbientSetup build_setup() {
  auto lambda = std::make_shared<const GramLattice>(parse_lattice_spec("2E8+2U+3I"));
  auto lambda1 = std::make_shared<const GramLattice>(parse_lattice_spec("2E8+A2+U"));
  QVector eta(kLambdaRank, Rational(0));
  for (std::size_t i = 0; i < 3; ++i) eta[kEps + i] = 1;
  AmbientSetup s{lambda, lambda1, orthogonal_complement(lambda, {eta}), eta, {}, {}, {}, {}, {}, {}, {}, {}, {}, e8_weights()};
  for (std::size_t i = 0; i < 3; ++i) {
    s.eps[i] = unit(kLambdaRank, kEps + i);
    s.h[i] = eta - Rational(3) * s.eps[i];
  }
  s.beta1 = s.eps[0] - s.eps[1];
  s.beta2 = s.eps[1] - s.eps[2];
  s.beta0 = -(s.beta1 + s.beta2);
  s.e = unit(kLambdaRank, kE);
  s.f = unit(kLambdaRank, kF);
  s.e2 = unit(kLambdaRank, kE2);
  s.f2 = unit(kLambdaRank, kF2);

  if (lambda->norm(eta) != 3) fail(ErrorCode::kVerificationFailed, "eta.eta != 3");
  const GramLattice lo = s.lambda_o.as_lattice();
  if (signature(lo) != Signature{20, 2, 0} || !is_even(lo))
    fail(ErrorCode::kVerificationFailed, "Lambda_o is not even of signature (20,2)");
  const QMatrix c = make_standard("E8").gram();
  if (c * s.weights != QMatrix::identity(8)) fail(ErrorCode::kVerificationFailed, "weights are not dual to the roots");
  return s;
}

const AmbientSetup& setup() {
  static const AmbientSetup s = build_setup();
  return s;
}

QVector lambda_root(int copy, int i) {
  if (copy < 0 || copy > 1 || i < 1 || i > 8) fail(ErrorCode::kInvalidArgument, "E8 index out of range");
  return unit(kLambdaRank, static_cast<std::size_t>(8 * copy + i - 1));
}

QVector lambda_weight(int copy, int i) {
  if (copy < 0 || copy > 1 || i < 1 || i > 8) fail(ErrorCode::kInvalidArgument, "E8 index out of range");
  QVector v(kLambdaRank, Rational(0));
  const QMatrix& w = setup().weights;
  for (std::size_t j = 0; j < 8; ++j) v[8 * copy + j] = w(static_cast<std::size_t>(i - 1), j);
  return v;
}

QVector lift_to_lambda(const QVector& x1) {
  if (x1.size() != kLambda1Rank) fail(ErrorCode::kInvalidArgument, "expected a Lambda_1 vector");
  QVector y(kLambdaRank, Rational(0));
  for (std::size_t i = 0; i < 16; ++i) y[i] = x1[i];
  y[kE] = x1[kE1];
  y[kF] = x1[kF1];
  y[kEps] = x1[kBeta1];
  y[kEps + 1] = x1[kBeta2] - x1[kBeta1];
  y[kEps + 2] = -x1[kBeta2];
  return y;
}

QVector to_lambda1(const QVector& x) {
  if (x.size() != kLambdaRank) fail(ErrorCode::kInvalidArgument, "expected a Lambda vector");
  if (x[kEps] + x[kEps + 1] + x[kEps + 2] != 0) fail(ErrorCode::kNotContained, "vector not orthogonal to eta");
  if (x[kF2] != 0) fail(ErrorCode::kNotContained, "vector not orthogonal to e2");
  QVector y(kLambda1Rank, Rational(0));
  for (std::size_t i = 0; i < 16; ++i) y[i] = x[i];
  y[kE1] = x[kE];
  y[kF1] = x[kF];
  y[kBeta1] = x[kEps];
  y[kBeta2] = -x[kEps + 2];
  return y;
}

bool is_special(const QVector& h) {
  const AmbientSetup& s = setup();
  if (h.size() != kLambdaRank || !is_integral(h) || s.lambda->inner(h, s.eta) != 0)
    fail(ErrorCode::kInvalidArgument, "vector is not in Lambda_o");
  if (s.lambda->norm(h) != 6) return false;
  return is_integral(fraction(1, 3) * (s.eta - h));
}

bool reflection_preserves_lambda_o(const QVector& v) {
  const AmbientSetup& s = setup();
  for (std::size_t i = 0; i < s.lambda_o.rank(); ++i) {
    const QVector image = reflect(*s.lambda, v, s.lambda_o.basis_vector(i));
    if (!is_integral(image) || s.lambda->inner(image, s.eta) != 0) return false;
  }
  return true;
}

Root short_root(const QVector& h) {
  if (!is_special(h)) fail(ErrorCode::kInvalidArgument, "vector is not special");
  if (!reflection_preserves_lambda_o(h)) fail(ErrorCode::kVerificationFailed, "reflection does not preserve Lambda_o");
  Root r{fraction(1, 3) * h, fraction(2, 3)};
  return r;
}

SpecialSetReport special_set_check(const std::vector<QVector>& set) {
  const AmbientSetup& s = setup();
  SpecialSetReport rep;
  for (const auto& h : set)
    if (!is_special(h)) {
      rep.reason = "not all vectors are special";
      return rep;
    }
  // Positive definite span: a maximal independent subset has a positive
  // definite Gram matrix and no vector of the set is isotropic.
  QMatrix rows(0, kLambdaRank);
  std::vector<QVector> basis;
  for (const auto& h : set) {
    QMatrix trial = rows;
    trial.append_row(h);
    if (rank(trial) > rows.rows()) {
      rows = trial;
      basis.push_back(h);
    }
  }
  QMatrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = s.lambda->inner(basis[i], basis[j]);
  rep.positive_definite = basis.empty() || is_positive_definite(GramLattice(g));
  if (!rep.positive_definite) {
    rep.conforming = true;
    rep.reason = "span is not positive definite";
    return rep;
  }
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j]) continue;
      if (s.lambda->inner(set[i], set[j]) != -3) {
        rep.reason = "distinct special vectors with product other than -3";
        return rep;
      }
    }
  std::vector<QVector> distinct;
  for (const auto& h : set)
    if (std::find(distinct.begin(), distinct.end(), h) == distinct.end()) distinct.push_back(h);
  if (distinct.size() > 3) {
    rep.reason = "more than three special vectors";
    return rep;
  }
  if (distinct.size() == 3 && !is_zero(distinct[0] + distinct[1] + distinct[2])) {
    rep.reason = "triple with nonzero sum";
    return rep;
  }
  rep.conforming = true;
  return rep;
}

GammaSampler::GammaSampler(std::uint64_t seed) : rng_(seed) {
  const AmbientSetup& s = setup();
  for (int copy = 0; copy < 2; ++copy) {
    for (int i = 1; i <= 8; ++i) long_.push_back(lambda_root(copy, i));
    long_.push_back(-lambda_weight(copy, 8) - s.e);
  }
  long_.push_back(s.beta1);
  long_.push_back(s.beta2);
  long_.push_back(s.e - s.f);
  long_.push_back(s.e + s.f);
  long_.push_back(s.e2 - s.f2);
  long_.push_back(s.e2 + s.f2);
  long_.push_back(-lambda_weight(0, 8) - s.e2);
  long_.push_back(-lambda_weight(1, 8) - s.f);
  for (const auto& h : s.h) special_.push_back(h);
}

std::vector<QVector> GammaSampler::apply(const std::vector<QVector>& xs, std::size_t length) {
  const AmbientSetup& s = setup();
  std::vector<QVector> out = xs;
  std::uniform_int_distribution<std::size_t> pick(0, long_.size() + special_.size() - 1);
  for (std::size_t step = 0; step < length; ++step) {
    const std::size_t k = pick(rng_);
    if (k < long_.size()) {
      for (auto& x : out) x = reflect(*s.lambda, long_[k], x);
    } else {
      // -s_h acts trivially on the discriminant group, so it extends to
      // Lambda fixing eta.
      for (auto& x : out) x = -reflect(*s.lambda, special_[k - long_.size()], x);
    }
  }
  return out;
}

QVector GammaSampler::apply(const QVector& x, std::size_t length) { return apply(std::vector<QVector>{x}, length)[0]; }

EichlerInvariant eichler_invariant(const QVector& v) {
  const AmbientSetup& s = setup();
  static const GramLattice lo = s.lambda_o.as_lattice();
  if (!is_integral(v)) fail(ErrorCode::kNotIntegral, "vector is not integral");
  const QVector c = s.lambda_o.coordinates(v);
  if (!is_integral(c)) fail(ErrorCode::kNotContained, "vector is not in Lambda_o");
  if (content(to_integer(c)) != 1) fail(ErrorCode::kInvalidArgument, "vector is not primitive");
  EichlerInvariant inv;
  inv.divisor = divisor(lo, c);
  inv.discriminant_class = discriminant_class(lo, Rational(1, 1) / Rational(inv.divisor) * c);
  return inv;
}

QVector random_isotropic(std::mt19937_64& rng) {
  const AmbientSetup& s = setup();
  std::uniform_int_distribution<int> coeff(-2, 2);
  // x in 2E8 + A2 + (e2, f2); then x + e - (x.x/2) f is isotropic and primitive.
  QVector x(kLambdaRank, Rational(0));
  for (std::size_t i = 0; i < 16; ++i) x[i] = coeff(rng);
  x = x + Rational(coeff(rng)) * s.beta1 + Rational(coeff(rng)) * s.beta2;
  x[kE2] = coeff(rng);
  x[kF2] = coeff(rng);
  const QVector v = x + s.e - fraction(1, 2) * s.lambda->norm(x) * s.f;
  GammaSampler gamma(rng());
  return gamma.apply(v, 6);
}

std::vector<NamedRoot> figure1_vectors() {
  const AmbientSetup& s = setup();
  std::vector<std::pair<std::string, QVector>> defs;
  for (int copy = 0; copy < 2; ++copy) {
    const std::string prime = copy ? "'" : "";
    for (int i = 1; i <= 8; ++i) defs.emplace_back("alpha" + prime + std::to_string(i), lambda_root(copy, i));
    defs.emplace_back("-w" + prime + "8-e", -lambda_weight(copy, 8) - s.e);
  }
  auto w = [](int copy, int i) { return lambda_weight(copy, i); };
  defs.emplace_back("e+f", s.e + s.f);
  defs.emplace_back("-e+b0", -s.e + s.beta0);
  defs.emplace_back("b1", s.beta1);
  defs.emplace_back("-w1-w'1-2e+2f+b0", -w(0, 1) - w(1, 1) - Rational(2) * s.e + Rational(2) * s.f + s.beta0);
  defs.emplace_back("-w2-w'7-3e+3f-b1-2b2",
                    -w(0, 2) - w(1, 7) - Rational(3) * s.e + Rational(3) * s.f - s.beta1 - Rational(2) * s.beta2);
  defs.emplace_back("-w7-w'2-3e+3f+b0-b2",
                    -w(0, 7) - w(1, 2) - Rational(3) * s.e + Rational(3) * s.f + s.beta0 - s.beta2);
  std::vector<NamedRoot> out;
  for (auto& [name, v] : defs) {
    const QVector x = to_lambda1(v);
    out.push_back({name, "", x, s.lambda1->norm(x)});
  }
  return out;
}

namespace {

// Automorphisms of the join model as permutations of {a,b,c,u,v,w} that
// preserve or swap the two parts.
std::vector<std::map<char, char>> join_relabelings() {
  const std::string left = "abc", right = "uvw";
  std::vector<std::map<char, char>> out;
  std::array<int, 3> p{0, 1, 2};
  do {
    std::array<int, 3> q{0, 1, 2};
    do {
      for (int swap = 0; swap < 2; ++swap) {
        std::map<char, char> m;
        for (int i = 0; i < 3; ++i) {
          m[left[i]] = swap ? right[q[i]] : left[p[i]];
          m[right[i]] = swap ? left[p[i]] : right[q[i]];
        }
        out.push_back(m);
      }
    } while (std::next_permutation(q.begin(), q.end()));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string relabel(const std::string& name, const std::map<char, char>& m) {
  std::string out;
  for (char c : name) out += m.at(c);
  return out;
}

// Labels of a 24-vertex long-root diagram by the join model, optionally
// pinning some vertices to given labels.
std::optional<std::vector<std::string>> join_labels(const Diagram& d, const std::map<std::size_t, std::string>& pins) {
  const Diagram model = join_model();
  const auto iso = find_isomorphism(d, model);
  if (!iso) return std::nullopt;
  for (const auto& m : join_relabelings()) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d.size(); ++i) labels.push_back(relabel(model.names()[(*iso)[i]], m));
    bool ok = true;
    for (const auto& [i, name] : pins) ok = ok && labels[i] == name;
    if (ok) return labels;
  }
  return std::nullopt;
}

}  // namespace

Figure1Report verify_figure1(const std::vector<NamedRoot>& roots) {
  const AmbientSetup& s = setup();
  Figure1Report rep;
  auto fault = [&](const std::string& who, const std::string& why) {
    rep.failing = who;
    rep.reason = why;
    return rep;
  };
  if (roots.size() != 24) return fault("", "expected 24 roots");
  for (const auto& r : roots) {
    if (s.lambda1->norm(r.vector) != 2) return fault(r.source, "norm is not 2");
    if (!is_integral(r.vector)) return fault(r.source, "not in Lambda_1");
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    std::size_t bad = 0;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (i == j) continue;
      const Rational p = s.lambda1->inner(roots[i].vector, roots[j].vector);
      if (p != 0 && p != -1) ++bad;
    }
    // The vector at fault is the one with the most offending products.
    if (bad > 1) return fault(roots[i].source, "products outside {0, -1}");
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const Rational p = s.lambda1->inner(roots[i].vector, roots[j].vector);
      if (p != 0 && p != -1) return fault(roots[i].source, "products outside {0, -1}");
    }
  std::vector<QVector> vs;
  for (const auto& r : roots) vs.push_back(r.vector);
  const Diagram d = build_diagram(*s.lambda1, vs);
  std::size_t deg3 = 0, deg2 = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.degree(i) == 3) ++deg3;
    else if (d.degree(i) == 2) ++deg2;
    else return fault(roots[i].source, "vertex of degree " + std::to_string(d.degree(i)));
  }
  if (deg3 != 6 || deg2 != 18) return fault("", "degree sequence differs from the join model");
  if (!find_isomorphism(d, join_model())) return fault("", "diagram is not the subdivided join");
  rep.ok = true;
  return rep;
}

std::vector<NamedRoot> figure1_roots() {
  std::vector<NamedRoot> roots = figure1_vectors();
  const Figure1Report rep = verify_figure1(roots);
  if (!rep.ok) fail(ErrorCode::kVerificationFailed, "figure roots: " + rep.reason + (rep.failing.empty() ? "" : " at " + rep.failing));
  std::vector<QVector> vs;
  std::map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    vs.push_back(roots[i].vector);
    at[roots[i].source] = i;
  }
  const std::map<std::size_t, std::string> pins{{at["e+f"], "u"},
                                                {at["-e+b0"], "ua"},
                                                {at["b1"], "au"},
                                                {at["-w1-w'1-2e+2f+b0"], "a"},
                                                {at["-w2-w'7-3e+3f-b1-2b2"], "bv"},
                                                {at["-w7-w'2-3e+3f+b0-b2"], "cw"}};
  const auto labels = join_labels(build_diagram(*setup().lambda1, vs), pins);
  if (!labels) fail(ErrorCode::kVerificationFailed, "no labeling of the figure roots extends the named vertices");
  for (std::size_t i = 0; i < roots.size(); ++i) roots[i].label = (*labels)[i];
  return roots;
}

Diagram figure1_diagram() {
  std::vector<QVector> vs;
  std::vector<std::string> names;
  for (const auto& r : figure1_roots()) {
    vs.push_back(r.vector);
    names.push_back(r.label);
  }
  return build_diagram(*setup().lambda1, vs, names);
}

std::string to_string(const ShortRootIndex& s) {
  const std::string left = "abc", right = "uvw";
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (i) out += ",";
    out += s.forward ? std::string{left[i], '>', right[s.image[i]]} : std::string{right[i], '>', left[s.image[i]]};
  }
  return out;
}

std::vector<ShortRootIndex> all_short_indices() {
  std::vector<ShortRootIndex> out;
  for (bool forward : {true, false}) {
    std::array<int, 3> p{0, 1, 2};
    do out.push_back({forward, p});
    while (std::next_permutation(p.begin(), p.end()));
  }
  return out;
}

namespace {

std::array<int, 3> compose(const std::array<int, 3>& outer, const std::array<int, 3>& inner) {
  return {outer[inner[0]], outer[inner[1]], outer[inner[2]]};
}

std::array<int, 3> invert(const std::array<int, 3>& p) {
  std::array<int, 3> q{};
  for (int i = 0; i < 3; ++i) q[p[i]] = i;
  return q;
}

int order(const std::array<int, 3>& p) {
  int fixed = 0;
  for (int i = 0; i < 3; ++i) fixed += p[i] == i;
  return fixed == 3 ? 1 : fixed == 1 ? 2 : 3;
}

}  // namespace

Rational short_pairing(const ShortRootIndex& sigma, const ShortRootIndex& tau) {
  if (sigma == tau) fail(ErrorCode::kInvalidArgument, "short_pairing needs distinct bijections");
  if (sigma.forward == tau.forward) {
    // sigma tau^-1 is a permutation of the common codomain.
    return order(compose(sigma.image, invert(tau.image))) == 2 ? fraction(-2, 3) : fraction(-4, 3);
  }
  // sigma tau is a permutation of the domain of tau.
  switch (order(compose(sigma.image, tau.image))) {
    case 1: return fraction(-2, 3);
    case 2: return fraction(-4, 3);
    default: return fraction(-5, 3);
  }
}

ShortRootLabeling label_short_roots(const Diagram& d) {
  Mask longs = 0;
  std::vector<std::size_t> long_index, short_index;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.is_short(i)) {
      short_index.push_back(i);
    } else {
      longs |= Mask(1) << i;
      long_index.push_back(i);
    }
  }
  if (long_index.size() != 24 || short_index.size() != 12)
    fail(ErrorCode::kInvalidArgument, "expected 24 long and 12 short roots");
  const auto labels = join_labels(d.induced(longs), {});
  if (!labels) fail(ErrorCode::kVerificationFailed, "long roots do not form the subdivided join");
  ShortRootLabeling out;
  out.long_labels.assign(d.size(), "");
  for (std::size_t k = 0; k < long_index.size(); ++k) out.long_labels[long_index[k]] = (*labels)[k];
  const std::string left = "abc", right = "uvw";
  for (auto s : short_index) {
    std::map<char, char> sigma;
    for (auto l : long_index) {
      if (d.products()(s, l) == 0) continue;
      const std::string& name = out.long_labels[l];
      if (name.size() != 2 || sigma.count(name[0]))
        fail(ErrorCode::kVerificationFailed, "short root meets a vertex outside the subdivision points");
      sigma[name[0]] = name[1];
    }
    if (sigma.size() != 3) fail(ErrorCode::kVerificationFailed, "short root does not meet three subdivision points");
    ShortRootIndex idx;
    idx.forward = left.find(sigma.begin()->first) != std::string::npos;
    const std::string& dom = idx.forward ? left : right;
    const std::string& cod = idx.forward ? right : left;
    std::set<int> images;
    for (int i = 0; i < 3; ++i) {
      auto it = sigma.find(dom[i]);
      if (it == sigma.end() || cod.find(it->second) == std::string::npos)
        fail(ErrorCode::kVerificationFailed, "short root neighbours do not define a bijection");
      idx.image[i] = static_cast<int>(cod.find(it->second));
      images.insert(idx.image[i]);
    }
    if (images.size() != 3) fail(ErrorCode::kVerificationFailed, "short root neighbours do not define a bijection");
    out.shorts.emplace_back(s, idx);
  }
  return out;
}

PairingReport check_short_pairing(const Diagram& d) {
  const ShortRootLabeling lab = label_short_roots(d);
  PairingReport rep;
  std::set<Rational> seen;
  for (std::size_t i = 0; i < lab.shorts.size(); ++i)
    for (std::size_t j = i + 1; j < lab.shorts.size(); ++j) {
      const auto& [vi, si] = lab.shorts[i];
      const auto& [vj, sj] = lab.shorts[j];
      ++rep.pairs;
      const Rational p = d.products()(vi, vj);
      seen.insert(p);
      if (si != sj && p == short_pairing(si, sj)) ++rep.matches;
    }
  rep.values.assign(seen.begin(), seen.end());
  return rep;
}

QVector lambda1_default_v0() {
  QVector v(kLambda1Rank, Rational(0));
  v[kE1] = -1;
  v[kF1] = 1;
  return v;
}

const VinbergRun& lambda1_vinberg() {
  static const VinbergRun run = run_vinberg(setup().lambda1, lambda1_default_v0());
  return run;
}

std::string canonical_label(const std::string& label) {
  std::vector<std::string> parts;
  for (std::string term : split(label, '+')) {
    term.erase(std::remove(term.begin(), term.end(), '~'), term.end());
    std::size_t k = 0;
    while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
    const int count = k ? std::stoi(term.substr(0, k)) : 1;
    for (int i = 0; i < count; ++i) parts.push_back(term.substr(k));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += parts[i];
    i = j;
  }
  return out;
}

Sublattice isotropic_plane_from_affine(const std::string& label) {
  if (std::find(kPlaneLabels.begin(), kPlaneLabels.end(), label) == kPlaneLabels.end())
    fail(ErrorCode::kInvalidArgument, "unknown plane label '" + label + "'");
  const AmbientSetup& s = setup();
  const Diagram d = figure1_diagram();
  for (const auto& sub : maximal_pure_affine(d, kLambda1Rank)) {
    if (canonical_label(sub.label) != canonical_label(label)) continue;
    // All components share the isotropic line: two orthogonal isotropic
    // vectors of a hyperbolic lattice are proportional.
    const Mask c = sub.components.front().vertices;
    const ZVector n = null_vector(d, c);
    QVector z(kLambda1Rank, Rational(0));
    std::size_t k = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (c >> i & 1) z = z + Rational(n[k++]) * d.vectors()[i];
    return saturate(span(s.lambda, {s.e2, lift_to_lambda(z)}));
  }
  fail(ErrorCode::kVerificationFailed, "no maximal pure affine subdiagram of type " + label);
}

namespace {

void require_plane(const Sublattice& k) {
  const AmbientSetup& s = setup();
  if (k.rank() != 2) fail(ErrorCode::kInvalidArgument, "expected a rank-2 sublattice");
  for (std::size_t i = 0; i < 2; ++i) {
    if (s.lambda->inner(k.basis_vector(i), s.eta) != 0) fail(ErrorCode::kInvalidArgument, "plane is not in Lambda_o");
    for (std::size_t j = 0; j < 2; ++j)
      if (s.lambda->inner(k.basis_vector(i), k.basis_vector(j)) != 0)
        fail(ErrorCode::kInvalidArgument, "plane is not isotropic");
  }
  if (!k.is_saturated()) fail(ErrorCode::kInvalidArgument, "plane is not saturated");
}

GramLattice plane_quotient(const Sublattice& k) {
  require_plane(k);
  const AmbientSetup& s = setup();
  std::vector<QVector> vs{s.eta, k.basis_vector(0), k.basis_vector(1)};
  return radical_quotient(orthogonal_complement(s.lambda, vs)).lattice;
}

}  // namespace

PlaneClassification classify_isotropic_plane(const Sublattice& k) {
  PlaneClassification out;
  out.quotient = plane_quotient(k);
  const std::vector<Root> roots = roots_of(out.quotient);
  out.full = classify_roots(out.quotient, roots);
  const std::vector<Root> longs = roots_of_norm(roots, 2);
  out.long_roots = classify_roots(out.quotient, longs);
  out.long_root_count = longs.size();
  out.stripped = strip_short_companions(out.full);
  return out;
}

SpanIndex root_span_index(const Sublattice& k) {
  const GramLattice q = plane_quotient(k);
  std::vector<Root> longs;
  for (auto& v : enumerate_norm(q, 2)) longs.push_back({v, 2});
  const std::vector<Root> base = simple_system(q, longs);
  SpanIndex out;
  out.root_label = classify_roots(q, longs).label();
  const std::size_t n = q.rank();
  if (base.size() != n) {
    out.index = 0;
    return out;
  }
  QMatrix b(0, n);
  for (const auto& r : base) b.append_row(r.vector);
  out.index = Rational(abs(determinant(b))).get_num();

  // Coefficients of the basis vectors of q in the root basis; the group
  // q/Q is generated by their classes.
  const QMatrix coeff = inverse(b);
  std::optional<QVector> generator;
  for (std::size_t i = 0; i < n; ++i) {
    const QVector c = coeff.row_vector(i);
    if (denominator_lcm(c) == out.index) {
      generator = c;
      break;
    }
  }
  out.cyclic = generator.has_value();
  if (!generator) return out;
  std::vector<QVector> vs;
  for (const auto& r : base) vs.push_back(r.vector);
  const Diagram d = build_diagram(q, vs);
  out.diagonal = true;
  for (Mask comp : connected_components(d, d.all())) {
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i)
      if ((comp >> i & 1) && !is_integral((*generator)[i])) nonzero = true;
    out.diagonal = out.diagonal && nonzero;
  }
  return out;
}

ArrangementResult stratum_meets_arrangement(const std::string& label, std::uint64_t budget) {
  const AmbientSetup& s = setup();
  const Sublattice k = isotropic_plane_from_affine(label);
  const QVector k1 = k.basis_vector(0), k2 = k.basis_vector(1);

  // Every special h lies in 3 Lambda_o^* = 3 Lambda_o + Z h1, a sublattice
  // of Lambda_o.  Search its part orthogonal to K modulo the radical.
  std::vector<QVector> gens;
  for (std::size_t i = 0; i < s.lambda_o.rank(); ++i) gens.push_back(Rational(3) * s.lambda_o.basis_vector(i));
  gens.push_back(s.h[0]);
  const Sublattice t = span(s.lambda, gens);
  const auto tl = std::make_shared<const GramLattice>(t.as_lattice());
  ZMatrix conditions(2, t.rank());
  for (std::size_t i = 0; i < t.rank(); ++i) {
    conditions(0, i) = s.lambda->inner(t.basis_vector(i), k1).get_num();
    conditions(1, i) = s.lambda->inner(t.basis_vector(i), k2).get_num();
  }
  const QuotientLattice quotient = radical_quotient(Sublattice(tl, integer_kernel(conditions)));
  if (!is_positive_definite(quotient.lattice)) fail(ErrorCode::kVerificationFailed, "K-perp/K is not positive definite");

  ArrangementResult out;
  const std::vector<QVector> classes = enumerate_norm(quotient.lattice, 6, budget);
  out.classes = classes.size();
  for (const auto& x : classes) {
    const QVector y = t.to_ambient(x * to_rational(quotient.lift));
    for (int a = 0; a < 3 && !out.meets; ++a)
      for (int b = 0; b < 3 && !out.meets; ++b) {
        const QVector h = y + Rational(a) * k1 + Rational(b) * k2;
        if (is_special(h)) {
          out.meets = true;
          out.witness = h;
        }
      }
    if (out.meets) break;
  }
  return out;
}

}  // namespace qlat
