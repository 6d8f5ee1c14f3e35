#pragma once

// Root systems of definite lattices: simple systems and Cartan-type
// identification.

#include <string>
#include <vector>

#include "qlat/dynkin.hpp"
#include "qlat/enumerate.hpp"

namespace qlat {

struct RootSystemType {
  std::vector<ComponentType> components;  // sorted by decreasing rank, then label
  std::size_t rank() const;
  // e.g. "3E6", "2E8+G2", "A17+A1s"; empty string for no roots.
  std::string label() const;
  // Multiplicity of each distinct component label, in label order.
  std::vector<std::pair<ComponentType, std::size_t>> counts() const;
};

// A base of a finite root system: the indecomposable roots among those
// positive for the lexicographic order.  Every input root is checked to be
// an all-nonnegative or all-nonpositive integral combination of the base;
// throws kVerificationFailed otherwise.
std::vector<Root> simple_system(const GramLattice& lattice, const std::vector<Root>& roots);

// Cartan types of the connected components of a root system.
RootSystemType classify_roots(const GramLattice& lattice, const std::vector<Root>& roots);
// Root system of a positive definite lattice; throws kNotPositiveDefinite.
RootSystemType root_system_type(const GramLattice& lattice, std::uint64_t budget = kDefaultBudget);

// Drops the G2 and A1s components, which carry short roots.
RootSystemType strip_short_companions(const RootSystemType& t);

// The subsystem of roots of the given norm.
std::vector<Root> roots_of_norm(const std::vector<Root>& roots, const Rational& norm);

}  // namespace qlat
