#pragma once

// JSON and text serialization of lattices, vectors, root systems, diagrams
// and Vinberg runs.  Every top-level document carries "schema": 1.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qlat/rootsys.hpp"
#include "qlat/vinberg.hpp"

namespace qlat {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);  // integer, or "p/q" string
// {rank, scale, entries: row-major integers of scale * gram}
Json gram_to_json(const GramLattice& l);
// {scale, vectors: integer tuples of scale * v}
Json vectors_to_json(const std::vector<QVector>& vs);
Json vector_to_json(const QVector& v);
// Sorted list of {label, rank, count}.
Json root_system_to_json(const RootSystemType& t);
// {vertices: [{name, norm}], edges: [{a, b, product, bond}]}
Json diagram_to_json(const Diagram& d);
// {status, roots, norms, weights, stabilizer_count, v0}
Json run_to_json(const VinbergRun& run);

// "1,-1,2/3", optionally in brackets; throws kParse.
QVector parse_vector(std::string_view text);

std::string vector_text(const QVector& v);

}  // namespace qlat
