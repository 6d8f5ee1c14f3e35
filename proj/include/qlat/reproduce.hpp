#pragma once

// The reproduction suite: every checked claim about the cubic fourfold
// lattices, tagged with the acceptance criterion it supports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlat/io.hpp"

namespace qlat {

struct Claim {
  std::string id;
  int criterion = 0;   // 1..10
  std::string anchor;  // the topic the claim belongs to
  std::string statement;
  bool passed = false;
  std::string detail;
};

struct ReproduceOptions {
  std::uint64_t seed = 2024;
  // Source expression of an explicit long root to corrupt before checking.
  std::optional<std::string> mutate;
  std::uint64_t budget = kDefaultBudget;
};

std::vector<Claim> run_reproduce(const ReproduceOptions& options = {});

// Just the claims of one criterion; cheaper than the full suite for 7..10.
std::vector<Claim> run_criterion(int criterion, const ReproduceOptions& options = {});

Json claims_to_json(const std::vector<Claim>& claims);
std::string claims_to_text(const std::vector<Claim>& claims);

// Exhaustive box search over integral vectors of an integral positive
// definite Gram matrix: all x with 1 <= x.x <= max_norm, as int64 tuples.
std::vector<std::vector<std::int64_t>> box_search(const GramLattice& lattice, std::int64_t max_norm);

}  // namespace qlat
