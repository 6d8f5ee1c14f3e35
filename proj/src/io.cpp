#include "qlat/io.hpp"

#include <sstream>

namespace qlat {

Json to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Json gram_to_json(const GramLattice& l) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < l.rank(); ++j) entries.push_back(to_json(Rational(l.gram()(i, j) * l.scale())));
  return Json{{"rank", l.rank()}, {"scale", to_json(Rational(l.scale()))}, {"entries", entries}};
}

Json vector_to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

Json vectors_to_json(const std::vector<QVector>& vs) {
  Integer scale = 1;
  for (const auto& v : vs) scale = lcm(scale, denominator_lcm(v));
  Json rows = Json::array();
  for (const auto& v : vs) rows.push_back(vector_to_json(Rational(scale) * v));
  return Json{{"scale", to_json(Rational(scale))}, {"vectors", rows}};
}

Json root_system_to_json(const RootSystemType& t) {
  Json out = Json::array();
  for (const auto& [type, count] : t.counts())
    out.push_back({{"label", type.label}, {"rank", type.rank}, {"count", count}});
  return out;
}

Json diagram_to_json(const Diagram& d) {
  Json vertices = Json::array(), edges = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) vertices.push_back({{"name", d.names()[i]}, {"norm", to_json(d.norms()[i])}});
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (d.bond(i, j) != Bond::kNone)
        edges.push_back({{"a", d.names()[i]},
                         {"b", d.names()[j]},
                         {"product", to_json(d.products()(i, j))},
                         {"bond", std::string(bond_name(d.bond(i, j)))}});
  return Json{{"vertices", vertices}, {"edges", edges}};
}

Json run_to_json(const VinbergRun& run) {
  std::vector<QVector> roots;
  Json norms = Json::array(), weights = Json::array();
  for (std::size_t i = 0; i < run.accepted.size(); ++i) {
    roots.push_back(run.accepted[i].vector);
    norms.push_back(to_json(run.accepted[i].norm));
    weights.push_back(to_json(run.weights[i]));
  }
  return Json{{"status", std::string(status_name(run.status))},
              {"v0", vector_to_json(run.v0)},
              {"max_weight", to_json(run.max_weight)},
              {"stabilizer_count", run.stabilizer_count},
              {"roots", vectors_to_json(roots)},
              {"norms", norms},
              {"weights", weights}};
}

QVector parse_vector(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '[') s.erase(s.begin());
  if (!s.empty() && s.back() == ']') s.pop_back();
  QVector out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) fail(ErrorCode::kParse, "empty vector entry in '" + std::string(text) + "'");
    out.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  if (out.empty()) fail(ErrorCode::kParse, "empty vector");
  return out;
}

std::string vector_text(const QVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + ")";
}

}  // namespace qlat
