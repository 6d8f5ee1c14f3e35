#include "qlat/strata.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qlat/arith.hpp"
#include "qlat/cubic4.hpp"

namespace qlat {

const StratumNode& IncidenceScheme::node(const std::string& label) const {
  for (const auto& n : nodes)
    if (n.label == label) return n;
  fail(ErrorCode::kInvalidArgument, "unknown stratum '" + label + "'");
}

StratumNode& IncidenceScheme::node(const std::string& label) {
  return const_cast<StratumNode&>(static_cast<const IncidenceScheme&>(*this).node(label));
}

IncidenceScheme build_strata() {
  IncidenceScheme s;
  auto type2 = [&](const std::string& r, int rank, const std::string& level) {
    s.nodes.push_back({"II(" + r + ")", level, 1 + (18 - rank), "isotropic plane with K-perp/K of root type " + r, rank, r,
                       std::nullopt});
  };
  s.nodes.push_back({"I0", "I0", 0, "contraction of the divisor over the closure of the arrangement", {}, "", {}});
  s.nodes.push_back({"I1", "I1", 1, "contraction of the divisor over the double-intersection hypersurface", {}, "", {}});
  type2("3E6", 18, "II1");
  type2("D7+A11", 18, "II1");
  type2("A17", 17, "II2");
  type2("E7+D10", 17, "II2");
  type2("2E8", 16, "II3");
  type2("D16", 16, "II3");
  s.nodes.push_back({"III0", "III0", 0, "isotropic line", {}, "", {}});
  s.nodes.push_back({"III1", "III1", 1, "isotropic line with one special vector perpendicular", {}, "", {}});
  s.nodes.push_back({"III2", "III2", 2, "isotropic line with two special vectors perpendicular", {}, "", {}});

  s.edges.push_back({"I0", "I1", Orientation::kAsPrinted, "<"});
  s.edges.push_back({"III0", "III1", Orientation::kAsPrinted, "<"});
  s.edges.push_back({"III1", "III2", Orientation::kAsPrinted, "<"});
  const std::vector<std::pair<std::string, std::string>> vertical{
      {"I0", "III1"}, {"I1", "III2"}, {"III0", "II1"}, {"III1", "II2"}, {"III2", "II3"}};
  for (const auto& [top, bottom] : vertical) s.edges.push_back({top, bottom, Orientation::kUnresolved, "^"});
  return s;
}

void attach_arrangement_flags(IncidenceScheme& scheme) {
  for (auto& n : scheme.nodes)
    if (n.root_rank) n.meets_arrangement = stratum_meets_arrangement(n.root_label).meets;
}

namespace {

// Oriented edges only; II levels stand for their members.
std::set<std::string> oriented_endpoints(const IncidenceScheme& s, bool sources) {
  std::set<std::string> out;
  for (const auto& e : s.edges)
    if (e.orientation == Orientation::kAsPrinted) out.insert(sources ? e.from : e.to);
  return out;
}

}  // namespace

std::vector<std::string> minimal_strata(const IncidenceScheme& scheme) {
  const auto from = oriented_endpoints(scheme, true), to = oriented_endpoints(scheme, false);
  std::vector<std::string> out;
  for (const auto& n : scheme.nodes)
    if (from.count(n.label) && !to.count(n.label)) out.push_back(n.label);
  return out;
}

std::vector<std::string> maximal_strata(const IncidenceScheme& scheme) {
  const auto from = oriented_endpoints(scheme, true);
  std::vector<std::string> out;
  for (const auto& n : scheme.nodes)
    if (!from.count(n.label)) out.push_back(n.label);
  return out;
}

MaximalCounts maximal_counts(const IncidenceScheme& scheme) {
  MaximalCounts c;
  for (const auto& label : maximal_strata(scheme)) {
    switch (scheme.node(label).dim) {
      case 1: ++c.curves; break;
      case 2: ++c.surfaces; break;
      case 3: ++c.threefolds; break;
    }
  }
  return c;
}

MaximalCounts stated_maximal_counts() { return {3, 4, 2}; }

std::vector<DimFormulaRow> dim_formula_check(const IncidenceScheme& scheme) {
  // Dimensions as listed: curves for II1, surfaces for II2, threefolds for II3.
  const std::map<std::string, int> listed{{"II1", 1}, {"II2", 2}, {"II3", 3}};
  std::vector<DimFormulaRow> rows;
  for (const auto& n : scheme.nodes) {
    if (!n.root_rank) continue;
    DimFormulaRow r{n.label, *n.root_rank, 1 + (18 - *n.root_rank), listed.at(n.level), false};
    r.ok = r.expected == r.listed && r.expected == n.dim;
    rows.push_back(r);
  }
  return rows;
}

std::string emit(const IncidenceScheme& scheme, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    for (const auto& n : scheme.nodes) {
      nlohmann::ordered_json node{{"label", n.label}, {"level", n.level}, {"dim", n.dim}, {"data", n.data}};
      if (n.root_rank) {
        node["root_type"] = n.root_label;
        node["root_rank"] = *n.root_rank;
      }
      if (n.meets_arrangement) node["meets_arrangement"] = *n.meets_arrangement;
      j["nodes"].push_back(node);
    }
    for (const auto& e : scheme.edges)
      j["edges"].push_back({{"from", e.from},
                            {"to", e.to},
                            {"printed", e.printed},
                            {"orientation", e.orientation == Orientation::kAsPrinted ? "as-printed" : "unresolved"}});
    j["minimal"] = minimal_strata(scheme);
    j["maximal"] = maximal_strata(scheme);
    const MaximalCounts c = maximal_counts(scheme), st = stated_maximal_counts();
    j["maximal_counts"] = {{"curves", c.curves}, {"surfaces", c.surfaces}, {"threefolds", c.threefolds}};
    j["stated_maximal_counts"] = {{"curves", st.curves}, {"surfaces", st.surfaces}, {"threefolds", st.threefolds}};
    j["vertical_edge_readings"] = {
        "closure order: the stratum above lies in the closure of the one below",
        "lattice embedding order: the lattice of the stratum above embeds in the one below"};
    return j.dump(2) + "\n";
  }
  if (format == "dot") {
    std::ostringstream os;
    os << "digraph strata {\n  rankdir=BT;\n";
    for (const auto& n : scheme.nodes) {
      os << "  \"" << n.label << "\" [label=\"" << n.label << "\\ndim " << n.dim << "\"";
      if (n.meets_arrangement) os << ", meets_arrangement=" << (*n.meets_arrangement ? "true" : "false");
      os << "];\n";
    }
    for (const auto& e : scheme.edges) {
      // A vertical edge to a II level expands to each member.
      std::vector<std::string> targets;
      for (const auto& n : scheme.nodes)
        if (n.label == e.to || (n.root_rank && n.level == e.to)) targets.push_back(n.label);
      for (const auto& t : targets) {
        os << "  \"" << e.from << "\" -> \"" << t << "\"";
        if (e.orientation == Orientation::kUnresolved) os << " [dir=none, style=dashed]";
        os << ";\n";
      }
    }
    os << "}\n";
    return os.str();
  }
  fail(ErrorCode::kInvalidArgument, "unknown format '" + format + "'");
}

}  // namespace qlat
