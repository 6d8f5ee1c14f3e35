#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "qlat/cohomring.hpp"
#include "qlat/cubic4.hpp"
#include "qlat/io.hpp"
#include "qlat/reproduce.hpp"
#include "qlat/strata.hpp"

using namespace qlat;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kExhausted = 3 };

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kParse:
      return kUsage;
    case ErrorCode::kResourceExhausted:
      return kExhausted;
    default:
      return kCheckFailed;
  }
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json doc(Json body) {
  Json out{{"schema", 1}};
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

std::shared_ptr<const GramLattice> lattice_arg(const std::string& spec) {
  auto l = std::make_shared<const GramLattice>(parse_lattice_spec(spec));
  return l;
}

std::vector<QVector> parse_vector_list(const std::string& text) {
  std::vector<QVector> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_vector(item));
  return out;
}

Json signature_json(const Signature& s) {
  return Json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

int lat_info(const std::string& spec, const std::string& format) {
  const GramLattice l = parse_lattice_spec(spec);
  const Signature sig = signature(l);
  Json j{{"spec", spec},
         {"rank", l.rank()},
         {"signature", signature_json(sig)},
         {"even", is_even(l)},
         {"gram", gram_to_json(l)}};
  if (sig.zero == 0) {
    j["determinant"] = to_json(determinant(l));
    j["unimodular"] = is_unimodular(l);
    Json factors = Json::array();
    if (l.integral())
      for (const auto& f : discriminant_group(l).invariant_factors) factors.push_back(to_json(Rational(f)));
    j["discriminant_invariants"] = factors;
  }
  if (format == "json") {
    print(doc(j));
  } else {
    std::cout << "rank " << l.rank() << ", signature (" << sig.positive << "," << sig.negative << ")";
    if (sig.zero) std::cout << ", radical " << sig.zero;
    std::cout << ", " << (is_even(l) ? "even" : "odd");
    if (j.contains("determinant")) std::cout << ", det " << to_string(determinant(l));
    std::cout << "\n";
  }
  return kOk;
}

int roots_cmd(const std::string& spec, const std::string& format, std::uint64_t budget) {
  const auto l = lattice_arg(spec);
  const auto roots = roots_of(l, std::nullopt, budget);
  std::vector<QVector> vs;
  Json norms = Json::array();
  for (const auto& r : roots) {
    vs.push_back(r.vector);
    norms.push_back(to_json(r.norm));
  }
  Json j{{"spec", spec}, {"count", roots.size()}, {"norms", norms}, {"roots", vectors_to_json(vs)}};
  if (is_positive_definite(*l)) j["type"] = root_system_to_json(classify_roots(*l, roots));
  if (format == "json") {
    print(doc(j));
  } else {
    if (j.contains("type")) std::cout << "type " << classify_roots(*l, roots).label() << "\n";
    for (const auto& r : roots) std::cout << to_string(r.norm) << "  " << vector_text(r.vector) << "\n";
    std::cout << roots.size() << " roots\n";
  }
  return kOk;
}

QVector default_v0(const GramLattice& l) {
  const std::size_t n = l.rank();
  if (n >= 2 && l.gram()(n - 2, n - 2) == 0 && l.gram()(n - 1, n - 1) == 0 && l.gram()(n - 2, n - 1) == 1) {
    QVector v(n, Rational(0));
    v[n - 2] = -1;
    v[n - 1] = 1;
    return v;
  }
  fail(ErrorCode::kInvalidArgument, "no --v0 given and the lattice does not end in a U summand");
}

int vinberg_cmd(const std::string& spec, const std::string& v0_text, const std::string& max_weight,
                std::uint64_t budget, const std::string& format) {
  const auto l = lattice_arg(spec);
  const QVector v0 = v0_text.empty() ? default_v0(*l) : parse_vector(v0_text);
  if (v0.size() != l->rank()) fail(ErrorCode::kInvalidArgument, "--v0 has the wrong length");
  const VinbergRun run = run_vinberg(l, v0, parse_rational(max_weight), budget);
  const Diagram d = run_diagram(run);
  if (format == "dot") {
    std::cout << to_dot(d, "vinberg");
  } else if (format == "json") {
    Json j = run_to_json(run);
    j["spec"] = spec;
    j["diagram"] = diagram_to_json(d);
    print(doc(j));
  } else {
    std::cout << "status " << status_name(run.status) << ", " << run.accepted.size() << " roots\n";
    for (std::size_t i = 0; i < run.accepted.size(); ++i)
      std::cout << d.names()[i] << "  norm " << to_string(run.accepted[i].norm) << "  weight "
                << to_string(run.weights[i]) << "  " << vector_text(run.accepted[i].vector) << "\n";
  }
  if (run.status == VinbergStatus::kBudgetExhausted) return kExhausted;
  return kOk;
}

Json classification_json(const Sublattice& k) {
  const PlaneClassification c = classify_isotropic_plane(k);
  const SpanIndex idx = root_span_index(k);
  std::vector<QVector> basis;
  for (std::size_t i = 0; i < k.rank(); ++i) basis.push_back(k.basis_vector(i));
  return Json{{"plane", vectors_to_json(basis)},
              {"root_system", c.full.label()},
              {"long_roots", c.long_roots.label()},
              {"stripped", c.stripped.label()},
              {"long_root_count", c.long_root_count},
              {"components", root_system_to_json(c.full)},
              {"quotient_determinant", to_json(determinant(c.quotient))},
              {"root_span_index", to_json(Rational(idx.index))},
              {"diagonal", idx.diagonal}};
}

int classify_cmd(const std::string& plane, const std::string& vectors, const std::string& format) {
  if (plane.empty() == vectors.empty()) fail(ErrorCode::kInvalidArgument, "give exactly one of --plane or --vectors");
  const Sublattice k = plane.empty() ? saturate(span(setup().lambda, parse_vector_list(vectors)))
                                     : isotropic_plane_from_affine(plane);
  const Json j = classification_json(k);
  if (format == "json")
    print(doc(j));
  else
    std::cout << j["root_system"].get<std::string>() << ", " << j["long_root_count"] << " norm-2 roots, index "
              << j["root_span_index"] << "\n";
  return kOk;
}

int cubic4_setup(const std::string& format) {
  const AmbientSetup& s = setup();
  const GramLattice lo = s.lambda_o.as_lattice();
  Json j{{"lambda", {{"spec", "2E8+2U+3I"}, {"labels", s.lambda->labels()}}},
         {"lambda_o", {{"rank", lo.rank()}, {"signature", signature_json(signature(lo))}, {"even", is_even(lo)}}},
         {"eta", vector_to_json(s.eta)},
         {"h", vectors_to_json({s.h[0], s.h[1], s.h[2]})},
         {"lambda1", {{"spec", "2E8+A2+U"}, {"labels", s.lambda1->labels()}}},
         {"default_v0", vector_to_json(lambda1_default_v0())}};
  if (format == "json")
    print(doc(j));
  else
    std::cout << "Lambda = 2E8+2U+3I, eta.eta = " << to_string(s.lambda->norm(s.eta)) << ", Lambda_o rank " << lo.rank()
              << ", Lambda_1 = 2E8+A2+U\n";
  return kOk;
}

int cubic4_special(const std::string& vec, const std::string& format) {
  const QVector h = parse_vector(vec);
  if (h.size() != setup().lambda->rank()) fail(ErrorCode::kInvalidArgument, "vector needs 23 coordinates");
  const bool special = is_special(h);
  Json j{{"vector", vector_to_json(h)}, {"norm", to_json(setup().lambda->norm(h))}, {"special", special}};
  if (special) j["short_root"] = vector_to_json(short_root(h).vector);
  if (format == "json")
    print(doc(j));
  else
    std::cout << (special ? "special" : "not special") << "\n";
  return special ? kOk : kCheckFailed;
}

int cubic4_planes(const std::string& format) {
  Json list = Json::array();
  for (const auto& label : kPlaneLabels) {
    Json j = classification_json(isotropic_plane_from_affine(label));
    j["label"] = label;
    list.push_back(j);
  }
  if (format == "json") {
    print(doc(Json{{"planes", list}}));
  } else {
    for (const auto& j : list)
      std::cout << j["label"].get<std::string>() << " -> " << j["root_system"].get<std::string>() << "\n";
  }
  return kOk;
}

int cubic4_arrangement(std::uint64_t budget, const std::string& format) {
  Json list = Json::array();
  for (const auto& label : kPlaneLabels) {
    const ArrangementResult r = stratum_meets_arrangement(label, budget);
    Json j{{"label", label}, {"meets", r.meets}, {"classes", r.classes}};
    if (r.meets) j["witness"] = vector_to_json(r.witness);
    list.push_back(j);
  }
  if (format == "json") {
    print(doc(Json{{"strata", list}}));
  } else {
    for (const auto& j : list)
      std::cout << j["label"].get<std::string>() << (j["meets"].get<bool>() ? " meets" : " misses")
                << " the arrangement\n";
  }
  return kOk;
}

int strata_cmd(const std::string& format, bool with_arrangement) {
  IncidenceScheme s = build_strata();
  if (with_arrangement) attach_arrangement_flags(s);
  if (format == "text") {
    for (const auto& n : s.nodes) std::cout << n.label << "  dim " << n.dim << "  " << n.data << "\n";
  } else {
    std::cout << emit(s, format);
    if (format == "json") std::cout << "\n";
  }
  return kOk;
}

int cohom_cmd(const std::string& format) {
  const SecantTable t = secant_table();
  Json j{{"y^4", to_json(Rational(t.y4))},
         {"a.y^2", to_json(Rational(t.ay2))},
         {"a^2", to_json(Rational(t.a2))},
         {"h.y^2", to_json(Rational(t.hy2))},
         {"h^2", to_json(Rational(t.h2))},
         {"3a-y^2=2h", t.identity_3a_minus_y2_is_2h},
         {"uy^3=3u^2y^2", t.uy3_is_3u2y2},
         {"a", to_string(class_a())},
         {"h", to_string(class_h())},
         {"note", t.note},
         {"restriction_check", restriction_check()},
         {"ok", t.ok}};
  if (format == "json") {
    print(doc(j));
  } else {
    std::cout << "y^4 = " << t.y4 << ", a.y^2 = " << t.ay2 << ", a^2 = " << t.a2 << ", h.y^2 = " << t.hy2
              << ", h^2 = " << t.h2 << "\n";
  }
  return t.ok && restriction_check() ? kOk : kCheckFailed;
}

int reproduce_cmd(const ReproduceOptions& opt, int criterion, const std::string& format) {
  const auto claims = criterion ? run_criterion(criterion, opt) : run_reproduce(opt);
  if (format == "json")
    print(claims_to_json(claims));
  else
    std::cout << claims_to_text(claims);
  for (const auto& c : claims)
    if (!c.passed) return kCheckFailed;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qlat: exact lattice computations for the moduli of cubic fourfolds"};
  app.require_subcommand(1);
  std::string format = "text";
  std::uint64_t budget = kDefaultBudget;
  auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
  };
  auto add_budget = [&](CLI::App* cmd) { cmd->add_option("--budget", budget, "search node budget"); };

  std::string spec;
  auto* info = app.add_subcommand("lat-info", "rank, signature and discriminant of a lattice");
  info->add_option("spec", spec, "lattice, e.g. 2E8+2U+3I")->required();
  add_format(info, {"json", "text"});

  auto* roots = app.add_subcommand("roots", "all roots of a lattice");
  roots->add_option("spec", spec)->required();
  add_format(roots, {"json", "text"});
  add_budget(roots);

  std::string v0, max_weight = "200";
  auto* vin = app.add_subcommand("vinberg", "Vinberg's algorithm on a hyperbolic lattice");
  vin->add_option("spec", spec)->required();
  vin->add_option("--v0", v0, "controlling vector, comma separated");
  vin->add_option("--max-weight", max_weight, "stop after this weight");
  add_format(vin, {"json", "dot", "text"});
  add_budget(vin);

  std::string plane, vectors;
  auto* cls = app.add_subcommand("classify-isotropic", "root system of K-perp/K for an isotropic plane K");
  cls->add_option("--plane", plane, "one of " + std::string("2E8, D16, A17, E7+D10, 3E6, D7+A11"));
  cls->add_option("--vectors", vectors, "basis in 2E8+2U+3I coordinates, separated by ';'");
  add_format(cls, {"json", "text"});

  auto* cubic = app.add_subcommand("cubic4", "the cubic fourfold lattices");
  cubic->require_subcommand(1);
  auto* c_setup = cubic->add_subcommand("setup", "named vectors and sublattices");
  add_format(c_setup, {"json", "text"});
  std::string check;
  auto* c_special = cubic->add_subcommand("special", "test a vector of 2E8+2U+3I for being special");
  c_special->add_option("--check", check, "vector, comma separated")->required();
  add_format(c_special, {"json", "text"});
  bool classify = false;
  auto* c_planes = cubic->add_subcommand("planes", "the six standard isotropic planes");
  c_planes->add_flag("--classify", classify, "classify each plane");
  add_format(c_planes, {"json", "text"});
  auto* c_arr = cubic->add_subcommand("arrangement", "which strata meet the arrangement");
  add_format(c_arr, {"json", "text"});
  add_budget(c_arr);

  bool with_arrangement = false;
  auto* strata = app.add_subcommand("strata", "boundary strata and their incidence");
  strata->add_flag("--with-arrangement", with_arrangement, "attach the arrangement flags");
  add_format(strata, {"json", "dot", "text"});

  auto* cohom = app.add_subcommand("cohom", "intersection rings");
  cohom->require_subcommand(1);
  auto* secant = cohom->add_subcommand("secant-table", "intersection numbers on the secant variety");
  add_format(secant, {"json", "text"});

  ReproduceOptions ropt;
  int criterion = 0;
  std::string mutate;
  auto* rep = app.add_subcommand("reproduce", "run every checked claim");
  rep->add_option("--seed", ropt.seed, "seed for the randomized sweeps");
  rep->add_option("--mutate", mutate, "corrupt the listed long root with this source expression");
  rep->add_option("--criterion", criterion, "only the claims of this criterion")->check(CLI::Range(1, 10));
  add_format(rep, {"json", "text"});
  add_budget(rep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*info) return lat_info(spec, format);
    if (*roots) return roots_cmd(spec, format, budget);
    if (*vin) return vinberg_cmd(spec, v0, max_weight, budget, format);
    if (*cls) return classify_cmd(plane, vectors, format);
    if (*c_setup) return cubic4_setup(format);
    if (*c_special) return cubic4_special(check, format);
    if (*c_planes) return cubic4_planes(format);
    if (*c_arr) return cubic4_arrangement(budget, format);
    if (*strata) return strata_cmd(format, with_arrangement);
    if (*secant) return cohom_cmd(format);
    if (*rep) {
      ropt.budget = budget;
      if (!mutate.empty()) ropt.mutate = mutate;
      return reproduce_cmd(ropt, criterion, format);
    }
  } catch (const Error& e) {
    const Json err{{"schema", 1}, {"error", {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return exit_for(e.code());
  }
  return kUsage;
}
