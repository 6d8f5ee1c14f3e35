#include "qlat/reproduce.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "qlat/cohomring.hpp"
#include "qlat/cubic4.hpp"
#include "qlat/strata.hpp"

namespace qlat {

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome verdict(bool ok, std::string detail = {}) { return {ok, std::move(detail)}; }

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

class Suite {
 public:
  Suite(int only, std::vector<Claim>& out) : only_(only), out_(out) {}

  void add(int criterion, std::string id, std::string anchor, std::string statement,
           const std::function<Outcome()>& check) {
    if (only_ != 0 && criterion != only_) return;
    Claim c{std::move(id), criterion, std::move(anchor), std::move(statement), false, {}};
    try {
      const Outcome o = check();
      c.passed = o.passed;
      c.detail = o.detail;
    } catch (const Error& e) {
      c.detail = std::string(error_code_name(e.code())) + ": " + e.what();
    }
    out_.push_back(std::move(c));
  }

 private:
  int only_;
  std::vector<Claim>& out_;
};

const GramLattice& lam() { return *setup().lambda; }

Mask long_mask(const Diagram& d) {
  Mask m = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.norms()[i] == 2) m |= Mask(1) << i;
  return m;
}

GramLattice random_definite(std::size_t rank, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> noise(-1, 1);
  for (;;) {
    QMatrix a = QMatrix::identity(rank);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) a(i, j) += noise(rng);
    if (determinant(a) == 0) continue;
    GramLattice l(a * a.transposed());
    const QMatrix inv = inverse(l.gram());
    double box = 1;
    for (std::size_t i = 0; i < rank; ++i) box *= 2 * std::sqrt(8 * inv(i, i).get_d()) + 1;
    if (box < 1e5) return l;
  }
}

void vinberg_claims(Suite& s, const ReproduceOptions& opt) {
  const std::string anchor = "reflective fundamental polyhedron of 2E8+A2+U";
  s.add(1, "vinberg.terminates", anchor, "Vinberg's algorithm from v0 = f - e stops with a finite-volume polyhedron",
        [] {
          const VinbergRun& run = lambda1_vinberg();
          return verdict(run.status == VinbergStatus::kFiniteVolume, std::string(status_name(run.status)));
        });
  s.add(1, "vinberg.root-norms", anchor, "the polyhedron has 24 walls of norm 2 and 12 of norm 2/3", [] {
    std::size_t longs = 0, shorts = 0;
    for (const auto& r : lambda1_vinberg().accepted) {
      longs += r.norm == 2;
      shorts += r.norm == fraction(2, 3);
    }
    return verdict(longs == 24 && shorts == 12 && lambda1_vinberg().accepted.size() == 36,
                   str(longs) + " long, " + str(shorts) + " short");
  });
  s.add(1, "vinberg.long-join", anchor,
        "the long walls form the join of two triples with each join edge subdivided twice", [] {
          const Diagram d = run_diagram(lambda1_vinberg());
          const Diagram longs = d.induced(long_mask(d));
          std::size_t deg3 = 0, deg2 = 0;
          for (std::size_t i = 0; i < longs.size(); ++i) {
            deg3 += longs.degree(i) == 3;
            deg2 += longs.degree(i) == 2;
          }
          const bool iso = find_isomorphism(longs, join_model()).has_value();
          return verdict(iso && deg3 == 6 && deg2 == 18,
                         "isomorphic: " + std::string(iso ? "yes" : "no") + ", degrees 3/2: " + str(deg3) + "/" +
                             str(deg2));
        });
  s.add(1, "vinberg.acute", anchor, "distinct walls meet at non-obtuse angles and weights never decrease", [] {
    const VinbergRun& run = lambda1_vinberg();
    for (std::size_t i = 0; i < run.accepted.size(); ++i) {
      if (i > 0 && run.weights[i] < run.weights[i - 1]) return verdict(false, "weight drop at " + str(i));
      for (std::size_t j = i + 1; j < run.accepted.size(); ++j)
        if (run.lattice->inner(run.accepted[i].vector, run.accepted[j].vector) > 0)
          return verdict(false, "positive product " + str(i) + "," + str(j));
    }
    return verdict(true);
  });
  s.add(1, "figure.roots", "the explicit long roots of the polyhedron",
        "the 24 listed long roots have norm 2, pairwise products 0 or -1 and span the subdivided join",
        [&opt] {
          auto roots = figure1_vectors();
          if (opt.mutate) {
            bool found = false;
            for (auto& r : roots)
              if (r.source == *opt.mutate) {
                r.vector[17] += 1;
                found = true;
              }
            if (!found) fail(ErrorCode::kInvalidArgument, "no listed root '" + *opt.mutate + "'");
          }
          const Figure1Report rep = verify_figure1(roots);
          return verdict(rep.ok, rep.ok ? "" : rep.failing + ": " + rep.reason);
        });
  s.add(1, "figure.matches-vinberg", "the explicit long roots of the polyhedron",
        "the listed long roots and the long walls found by the algorithm have the same Gram matrix up to relabeling",
        [] {
          const Diagram d = run_diagram(lambda1_vinberg());
          const bool iso = find_isomorphism(figure1_diagram(), d.induced(long_mask(d))).has_value();
          return verdict(iso, iso ? "isomorphic" : "not isomorphic");
        });
}

void pairing_claims(Suite& s) {
  const std::string anchor = "products of the short roots r_sigma";
  s.add(2, "short.pairs", anchor, "all 66 pairs of short walls pair as predicted by the bijection labels", [] {
    const PairingReport rep = check_short_pairing(run_diagram(lambda1_vinberg()));
    return verdict(rep.pairs == 66 && rep.matches == 66, str(rep.matches) + "/" + str(rep.pairs) + " match");
  });
  s.add(2, "short.values", anchor, "the products of short walls lie in {0, -2/3, -4/3, -5/3}", [] {
    const std::set<Rational> allowed{0, fraction(-2, 3), fraction(-4, 3), fraction(-5, 3)};
    std::string seen;
    bool ok = true;
    for (const auto& v : check_short_pairing(run_diagram(lambda1_vinberg())).values) {
      ok = ok && allowed.count(v);
      seen += (seen.empty() ? "" : " ") + to_string(v);
    }
    return verdict(ok, seen);
  });
  s.add(2, "short.law", anchor, "for each bijection the other eleven pair as -2/3 four times, -4/3 five times, -5/3 twice",
        [] {
          const auto all = all_short_indices();
          for (const auto& a : all) {
            std::map<Rational, int> count;
            for (const auto& b : all)
              if (!(a == b)) ++count[short_pairing(a, b)];
            if (count[fraction(-2, 3)] != 4 || count[fraction(-4, 3)] != 5 || count[fraction(-5, 3)] != 2)
              return verdict(false, "at " + to_string(a));
          }
          return verdict(all.size() == 12);
        });
}

void symmetry_claims(Suite& s) {
  const std::string anchor = "symmetries of the long-root diagram";
  s.add(3, "symmetry.figure", anchor, "the diagram of the listed long roots has exactly 72 automorphisms", [] {
    const auto n = automorphism_order(figure1_diagram());
    return verdict(n == 72, str(n));
  });
  s.add(3, "symmetry.model", anchor, "the abstract subdivided join has 72 automorphisms as well", [] {
    const auto n = automorphism_order(join_model());
    return verdict(n == 72, str(n));
  });
}

void census_claims(Suite& s) {
  const std::string anchor = "maximal pure affine subdiagrams and cusps";
  std::set<std::string> expected;
  for (const auto& l : kPlaneLabels) expected.insert(canonical_label(l));
  s.add(4, "census.types", anchor, "the maximal pure affine subdiagrams of the long diagram have the six listed types",
        [expected] {
          std::set<std::string> found;
          for (const auto& sub : maximal_pure_affine(figure1_diagram(), 20)) found.insert(canonical_label(sub.label));
          std::string text;
          for (const auto& f : found) text += (text.empty() ? "" : ", ") + f;
          return verdict(found == expected, text);
        });
  s.add(4, "census.corank-long", anchor, "on the long diagram only 3E6 and D7+A11 reach corank one", [] {
    std::set<std::string> corank_one;
    for (const auto& sub : maximal_pure_affine(figure1_diagram(), 20))
      if (sub.corank == 1) corank_one.insert(canonical_label(sub.label));
    const std::set<std::string> want{canonical_label("3E6"), canonical_label("D7+A11")};
    return verdict(corank_one == want, str(corank_one.size()) + " types of corank one");
  });
  s.add(4, "census.corank-full", anchor, "on the full diagram every completed type reaches corank one", [expected] {
    const Diagram d = run_diagram(lambda1_vinberg());
    std::set<std::string> stripped;
    for (const auto& sub : maximal_pure_affine(d, 20)) {
      if (sub.corank != 1) return verdict(false, sub.label + " has corank " + str(sub.corank));
      std::string l;
      for (const auto& c : sub.components)
        if (c.type.label != "~G2" && c.type.label != "~A1s") l += (l.empty() ? "" : "+") + c.type.label;
      stripped.insert(canonical_label(l));
    }
    return verdict(stripped == expected, str(stripped.size()) + " long parts");
  });
}

void plane_claims(Suite& s) {
  const std::string anchor = "isotropic planes and their root systems";
  s.add(5, "planes.distinct", anchor, "the six isotropic planes give six distinct root systems with the listed long parts",
        [] {
          std::set<std::string> full;
          std::string bad;
          for (const auto& label : kPlaneLabels) {
            const PlaneClassification c = classify_isotropic_plane(isotropic_plane_from_affine(label));
            full.insert(c.full.label());
            if (canonical_label(c.stripped.label()) != canonical_label(label)) bad += label + "->" + c.full.label() + " ";
          }
          return verdict(full.size() == 6 && bad.empty(), bad.empty() ? str(full.size()) + " distinct" : bad);
        });
  s.add(5, "planes.3E6-roots", anchor, "the 3E6 plane has 216 roots of norm 2", [] {
    const auto c = classify_isotropic_plane(isotropic_plane_from_affine("3E6"));
    return verdict(c.long_root_count == 216 && c.full.label() == "3E6", str(c.long_root_count));
  });
  s.add(5, "planes.3E6-index", anchor, "the roots of the 3E6 plane span a sublattice of index 3 glued diagonally", [] {
    const SpanIndex idx = root_span_index(isotropic_plane_from_affine("3E6"));
    return verdict(idx.index == 3 && idx.diagonal, "index " + to_string(idx.index));
  });
}

void arrangement_claims(Suite& s, const ReproduceOptions& opt) {
  const std::map<std::string, bool> expected{{"2E8", true},  {"D16", true},  {"A17", true},
                                             {"E7+D10", true}, {"3E6", false}, {"D7+A11", false}};
  for (const auto& label : kPlaneLabels) {
    const bool want = expected.at(label);
    s.add(6, "arrangement." + label, "boundary strata meeting the arrangement",
          "the closure of the stratum of " + label + (want ? " meets" : " misses") + " the arrangement",
          [label, want, &opt] {
            const ArrangementResult r = stratum_meets_arrangement(label, opt.budget);
            return verdict(r.meets == want, r.meets ? "witness " + vector_text(r.witness)
                                                    : "complete search, " + str(r.classes) + " norm-6 candidates");
          });
  }
}

void special_claims(Suite& s, const ReproduceOptions& opt) {
  const std::string anchor = "special vectors of eta-perp";
  s.add(7, "special.eta", anchor, "eta has norm 3", [] { return verdict(lam().norm(setup().eta) == 3); });
  s.add(7, "special.products", anchor, "h_i has norm 6 and h_i.h_j = -3 for i != j", [] {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (lam().inner(setup().h[i], setup().h[j]) != (i == j ? 6 : -3)) return verdict(false, str(i) + str(j));
    return verdict(true);
  });
  s.add(7, "special.sum", anchor, "h_1 + h_2 + h_3 = 0",
        [] { return verdict(is_zero(setup().h[0] + setup().h[1] + setup().h[2])); });
  s.add(7, "special.divisor", anchor, "each h_i has divisor 3 in eta-perp", [] {
    for (const auto& h : setup().h)
      if (divisor(setup().lambda_o, h) != 3) return verdict(false);
    return verdict(true);
  });
  s.add(7, "special.lambda-o", anchor, "eta-perp is even with discriminant group Z/3", [] {
    const GramLattice lo = setup().lambda_o.as_lattice();
    const DiscriminantGroup g = discriminant_group(lo);
    return verdict(is_even(lo) && g.invariant_factors == ZVector{3});
  });
  s.add(7, "special.reflections", anchor, "reflections in special vectors preserve eta-perp", [] {
    for (const auto& h : setup().h)
      if (!reflection_preserves_lambda_o(h)) return verdict(false);
    return verdict(true);
  });
  s.add(7, "special.translates", anchor, "200 random group translates of {h_1, h_2, h_3} stay special and conforming",
        [&opt] {
          for (std::uint64_t i = 0; i < 200; ++i) {
            GammaSampler gamma(opt.seed + i);
            const auto hs = gamma.apply(std::vector<QVector>{setup().h[0], setup().h[1], setup().h[2]}, 8);
            for (const auto& h : hs)
              if (!is_special(h)) return verdict(false, "seed " + str(opt.seed + i));
            const auto rep = special_set_check(hs);
            if (!rep.conforming || !rep.positive_definite) return verdict(false, rep.reason);
          }
          return verdict(true, "seeds from " + str(opt.seed));
        });
  s.add(7, "special.eichler", "primitive isotropic vectors of eta-perp",
        "random primitive isotropic vectors share the invariant of e2, so form one orbit", [&opt] {
          const EichlerInvariant ref = eichler_invariant(setup().e2);
          std::mt19937_64 rng(opt.seed);
          for (int i = 0; i < 50; ++i)
            if (!(eichler_invariant(random_isotropic(rng)) == ref)) return verdict(false, "sample " + str(i));
          return verdict(ref.divisor == 1);
        });
}

void cohom_claims(Suite& s) {
  const std::string anchor = "intersection numbers on the resolved secant variety";
  s.add(8, "cohom.table", anchor, "y^4 = 3, a.y^2 = 1, a^2 = 3, h.y^2 = 0, h^2 = 6", [] {
    const SecantTable t = secant_table();
    return verdict(t.y4 == 3 && t.ay2 == 1 && t.a2 == 3 && t.hy2 == 0 && t.h2 == 6,
                   to_string(t.y4) + " " + to_string(t.ay2) + " " + to_string(t.a2) + " " + to_string(t.hy2) + " " +
                       to_string(t.h2));
  });
  s.add(8, "cohom.identity", anchor, "3a - y^2 = 2h", [] {
    const PolyClass y = PolyClass::g(Ring::kYtilde);
    return verdict(reduce(Integer(3) * class_a() - y * y) == reduce(Integer(2) * class_h()));
  });
  s.add(8, "cohom.chern", anchor, "(1+u)^-1 = 1 - u + u^2 and (1+u)^-3 = 1 - 3u + 6u^2", [] {
    const PolyClass u = PolyClass::u(Ring::kYtilde), one = PolyClass::constant(Ring::kYtilde, 1);
    const PolyClass c1 = one - u + u * u;
    const PolyClass c3 = one - Integer(3) * u + Integer(6) * u * u;
    return verdict(chern_inverse(1) == reduce(c1) && chern_inverse(3) == reduce(c3),
                   to_string(chern_inverse(1)) + "; " + to_string(chern_inverse(3)));
  });
  s.add(8, "cohom.restriction", "the exceptional divisor over the Veronese surface",
        "the relation y^3 - 3uy^2 + 6u^2y restricts to zero", [] { return verdict(restriction_check()); });
}

void strata_claims(Suite& s) {
  const std::string anchor = "boundary strata of the compactification";
  s.add(9, "strata.nodes", anchor, "eleven strata with dimensions 0,1 (I), 1,1,2,2,3,3 (II), 0,1,2 (III)", [] {
    const IncidenceScheme sc = build_strata();
    const std::map<std::string, int> dims{{"I0", 0},       {"I1", 1},         {"II(3E6)", 1}, {"II(D7+A11)", 1},
                                          {"II(A17)", 2},  {"II(E7+D10)", 2}, {"II(2E8)", 3}, {"II(D16)", 3},
                                          {"III0", 0},     {"III1", 1},       {"III2", 2}};
    for (const auto& [label, d] : dims)
      if (sc.node(label).dim != d) return verdict(false, label);
    return verdict(sc.nodes.size() == 11);
  });
  s.add(9, "strata.minimal", anchor, "the minimal strata are I0 and III0", [] {
    const auto m = minimal_strata(build_strata());
    return verdict(m == std::vector<std::string>{"I0", "III0"});
  });
  s.add(9, "strata.dim-formula", anchor, "dim II(R) = 1 + (18 - rank R) for all six R", [] {
    const auto rows = dim_formula_check(build_strata());
    bool ok = rows.size() == 6;
    for (const auto& r : rows) ok = ok && r.ok;
    return verdict(ok);
  });
  s.add(9, "strata.emit", anchor, "DOT and JSON renderings are stable and well formed", [] {
    const std::string dot = emit(build_strata(), "dot"), js = emit(build_strata(), "json");
    const Json j = Json::parse(js);
    return verdict(dot == emit(build_strata(), "dot") && js == emit(build_strata(), "json") && j["schema"] == 1 &&
                   j["nodes"].size() == 11);
  });
}

void enumeration_claims(Suite& s, const ReproduceOptions& opt) {
  const std::string anchor = "root enumeration in definite lattices";
  s.add(10, "enum.oracle", anchor, "Fincke-Pohst agrees with box search on 20 random lattices up to norm 8", [&opt] {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> rank_dist(1, 6);
    for (int trial = 0; trial < 20; ++trial) {
      const GramLattice l = random_definite(rank_dist(rng), rng);
      std::map<std::int64_t, std::set<std::vector<std::int64_t>>> slow;
      for (const auto& x : box_search(l, 8)) {
        std::int64_t n = 0;
        for (std::size_t a = 0; a < x.size(); ++a)
          for (std::size_t b = 0; b < x.size(); ++b) n += l.gram()(a, b).get_num().get_si() * x[a] * x[b];
        slow[n].insert(x);
      }
      for (int n = 1; n <= 8; ++n) {
        std::set<std::vector<std::int64_t>> fast;
        for (const auto& v : enumerate_norm(l, n, opt.budget)) {
          std::vector<std::int64_t> x;
          for (const auto& q : v) x.push_back(q.get_num().get_si());
          fast.insert(x);
        }
        if (fast != slow[n]) return verdict(false, "trial " + str(trial) + " norm " + str(n));
      }
    }
    return verdict(true, "seed " + str(opt.seed));
  });
  s.add(10, "enum.E8", anchor, "E8 has 240 roots", [&opt] {
    const auto n = roots_of(make_standard("E8"), opt.budget).size();
    return verdict(n == 240, str(n));
  });
  s.add(10, "enum.A2", anchor, "A2 has 6 vectors of norm 2", [&opt] {
    const auto n = enumerate_norm(make_standard("A2"), 2, opt.budget).size();
    return verdict(n == 6, str(n));
  });
  s.add(10, "enum.G2", anchor, "the A2 summand of eta-perp carries 12 roots forming G2", [&opt] {
    const AmbientSetup& st = setup();
    auto lo = std::make_shared<const GramLattice>(st.lambda_o.as_lattice());
    const Sublattice a2(lo, to_integer(QMatrix::from_rows(
                                {st.lambda_o.coordinates(st.beta1), st.lambda_o.coordinates(st.beta2)}, lo->rank())));
    const auto roots = roots_of(lo, a2, opt.budget);
    std::size_t shorts = 0;
    for (const auto& r : roots) shorts += r.norm == fraction(2, 3);
    return verdict(roots.size() == 12 && shorts == 6, str(roots.size()) + " roots, " + str(shorts) + " short");
  });
}

std::vector<Claim> run(int only, const ReproduceOptions& opt) {
  std::vector<Claim> out;
  Suite s(only, out);
  vinberg_claims(s, opt);
  pairing_claims(s);
  symmetry_claims(s);
  census_claims(s);
  plane_claims(s);
  arrangement_claims(s, opt);
  special_claims(s, opt);
  cohom_claims(s);
  strata_claims(s);
  enumeration_claims(s, opt);
  return out;
}

}  // namespace

std::vector<std::vector<std::int64_t>> box_search(const GramLattice& lattice, std::int64_t max_norm) {
  const std::size_t r = lattice.rank();
  if (!lattice.integral() || !is_positive_definite(lattice))
    fail(ErrorCode::kInvalidArgument, "box search needs an integral positive definite Gram matrix");
  const QMatrix inv = inverse(lattice.gram());
  std::vector<std::int64_t> bound(r);
  std::vector<std::vector<std::int64_t>> g(r, std::vector<std::int64_t>(r));
  for (std::size_t i = 0; i < r; ++i) {
    const Integer b = isqrt(floor(Rational(max_norm * inv(i, i))));
    bound[i] = b.get_si();
    for (std::size_t j = 0; j < r; ++j) g[i][j] = lattice.gram()(i, j).get_num().get_si();
  }
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> x(r, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == r) {
      std::int64_t n = 0;
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) n += g[a][b] * x[a] * x[b];
      if (n >= 1 && n <= max_norm) out.push_back(x);
      return;
    }
    for (std::int64_t v = -bound[i]; v <= bound[i]; ++v) {
      x[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<Claim> run_reproduce(const ReproduceOptions& options) { return run(0, options); }

std::vector<Claim> run_criterion(int criterion, const ReproduceOptions& options) {
  if (criterion < 1 || criterion > 10) fail(ErrorCode::kInvalidArgument, "criterion must be in 1..10");
  return run(criterion, options);
}

Json claims_to_json(const std::vector<Claim>& claims) {
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& c : claims) {
    passed += c.passed;
    list.push_back({{"id", c.id},
                    {"criterion", c.criterion},
                    {"anchor", c.anchor},
                    {"statement", c.statement},
                    {"passed", c.passed},
                    {"detail", c.detail}});
  }
  return Json{{"schema", 1}, {"total", claims.size()}, {"passed", passed}, {"claims", list}};
}

std::string claims_to_text(const std::vector<Claim>& claims) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& c : claims) {
    passed += c.passed;
    os << (c.passed ? "ok   " : "FAIL ") << "[" << c.criterion << "] " << c.id << ": " << c.statement;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  os << passed << "/" << claims.size() << " claims hold\n";
  return os.str();
}

}  // namespace qlat
