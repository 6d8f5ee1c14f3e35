#pragma once

// Boundary strata of the compactified complement of the arrangement: eleven
// strata with their dimensions, the printed incidence array, and the
// dimension formula for the strata of type II.

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qlat {

struct StratumNode {
  std::string label;        // "I0", "II(3E6)", "III2", ...
  std::string level;        // "I0", "I1", "II1", "II2", "II3", "III0", "III1", "III2"
  int dim = 0;
  std::string data;         // what the stratum is built from
  std::optional<int> root_rank;  // rank of R for the type II strata
  std::string root_label;        // R, for type II
  std::optional<bool> meets_arrangement;
};

enum class Orientation { kAsPrinted, kUnresolved };

struct IncidenceEdge {
  std::string from, to;  // as printed: `from` on the small side of the symbol
  Orientation orientation = Orientation::kAsPrinted;
  std::string printed;   // "<" for horizontal, "^" for vertical
};

struct IncidenceScheme {
  std::vector<StratumNode> nodes;
  std::vector<IncidenceEdge> edges;
  const StratumNode& node(const std::string& label) const;
  StratumNode& node(const std::string& label);
};

IncidenceScheme build_strata();
// Sets meets_arrangement on the type II nodes from the special-vector search.
void attach_arrangement_flags(IncidenceScheme& scheme);

// Nodes with no oriented predecessor that start an oriented chain.
std::vector<std::string> minimal_strata(const IncidenceScheme& scheme);
// Nodes with no oriented successor.
std::vector<std::string> maximal_strata(const IncidenceScheme& scheme);

struct MaximalCounts {
  int curves = 0, surfaces = 0, threefolds = 0;
  friend bool operator==(const MaximalCounts&, const MaximalCounts&) = default;
};
// Counts by dimension among maximal_strata.
MaximalCounts maximal_counts(const IncidenceScheme& scheme);
// The counts as stated in the text ("three curves, four surfaces, two
// threefolds"), kept verbatim.
MaximalCounts stated_maximal_counts();

struct DimFormulaRow {
  std::string label;
  int root_rank = 0;
  int expected = 0;  // 1 + (18 - rank)
  int listed = 0;
  bool ok = false;
};
std::vector<DimFormulaRow> dim_formula_check(const IncidenceScheme& scheme);

// "dot" or "json"; throws kInvalidArgument otherwise.
std::string emit(const IncidenceScheme& scheme, const std::string& format);

}  // namespace qlat
