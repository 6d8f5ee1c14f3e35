#include <gtest/gtest.h>

#include <json.hpp>
#include <set>

#include "qlat/cubic4.hpp"
#include "qlat/strata.hpp"

using namespace qlat;

TEST(Strata, Nodes) {
  const IncidenceScheme s = build_strata();
  EXPECT_EQ(s.nodes.size(), 11u);
  const std::map<std::string, int> dims{{"I0", 0},         {"I1", 1},       {"II(3E6)", 1},  {"II(D7+A11)", 1},
                                        {"II(A17)", 2},    {"II(E7+D10)", 2}, {"II(2E8)", 3}, {"II(D16)", 3},
                                        {"III0", 0},       {"III1", 1},     {"III2", 2}};
  for (const auto& [label, d] : dims) EXPECT_EQ(s.node(label).dim, d) << label;
  EXPECT_THROW(s.node("IV"), Error);
}

TEST(Strata, Edges) {
  const IncidenceScheme s = build_strata();
  EXPECT_EQ(s.edges.size(), 8u);
  std::size_t unresolved = 0;
  for (const auto& e : s.edges) unresolved += e.orientation == Orientation::kUnresolved;
  EXPECT_EQ(unresolved, 5u);
}

TEST(Strata, MinimalAndMaximal) {
  const IncidenceScheme s = build_strata();
  EXPECT_EQ(minimal_strata(s), (std::vector<std::string>{"I0", "III0"}));
  const auto maximal = maximal_strata(s);
  const std::set<std::string> expected{"I1",      "II(3E6)",    "II(D7+A11)", "III2",
                                       "II(A17)", "II(E7+D10)", "II(2E8)",    "II(D16)"};
  EXPECT_EQ(std::set<std::string>(maximal.begin(), maximal.end()), expected);
  const MaximalCounts c = maximal_counts(s);
  EXPECT_EQ(c.curves, 3);
  EXPECT_EQ(c.threefolds, 2);
  // By dimension there are three surfaces; the stated count is four.
  EXPECT_EQ(c.surfaces, 3);
  EXPECT_EQ(stated_maximal_counts().surfaces, 4);
}

TEST(Strata, DimFormula) {
  const IncidenceScheme s = build_strata();
  const auto rows = dim_formula_check(s);
  EXPECT_EQ(rows.size(), 6u);
  const std::map<std::string, int> ranks{{"II(2E8)", 16}, {"II(D16)", 16},   {"II(A17)", 17},
                                         {"II(E7+D10)", 17}, {"II(3E6)", 18}, {"II(D7+A11)", 18}};
  for (const auto& r : rows) {
    EXPECT_TRUE(r.ok) << r.label;
    EXPECT_EQ(r.root_rank, ranks.at(r.label));
    EXPECT_EQ(s.node(r.label).dim, 1 + (18 - ranks.at(r.label)));
  }
}

TEST(Strata, RootRanksFromLattices) {
  // The stored root ranks agree with the classified isotropic planes.
  const IncidenceScheme s = build_strata();
  for (const auto& n : s.nodes) {
    if (!n.root_rank) continue;
    const auto c = classify_isotropic_plane(isotropic_plane_from_affine(n.root_label));
    EXPECT_EQ(static_cast<int>(c.stripped.rank()), *n.root_rank) << n.label;
  }
}

TEST(Strata, ArrangementFlags) {
  IncidenceScheme s = build_strata();
  attach_arrangement_flags(s);
  std::set<std::string> meeting;
  for (const auto& n : s.nodes) {
    EXPECT_EQ(n.meets_arrangement.has_value(), n.root_rank.has_value());
    if (n.meets_arrangement && *n.meets_arrangement) meeting.insert(n.label);
  }
  // Exactly the strata with rank R < 18.
  EXPECT_EQ(meeting, (std::set<std::string>{"II(2E8)", "II(D16)", "II(A17)", "II(E7+D10)"}));
}

TEST(Strata, Emit) {
  const IncidenceScheme s = build_strata();
  const std::string dot = emit(s, "dot");
  EXPECT_EQ(dot, emit(build_strata(), "dot"));
  std::size_t nodes = 0;
  for (std::size_t p = dot.find("[label="); p != std::string::npos; p = dot.find("[label=", p + 1)) ++nodes;
  EXPECT_EQ(nodes, 11u);
  EXPECT_NE(dot.find("dir=none"), std::string::npos);

  const std::string js = emit(s, "json");
  EXPECT_EQ(js, emit(build_strata(), "json"));
  const auto j = nlohmann::json::parse(js);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["nodes"].size(), 11u);
  EXPECT_EQ(j["edges"].size(), 8u);
  EXPECT_EQ(nlohmann::json::parse(j.dump()), j);
  EXPECT_THROW(emit(s, "xml"), Error);
}
