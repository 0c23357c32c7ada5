// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqdecomp/graph.hpp"
#include "eqdecomp/permutation.hpp"

namespace eqdecomp {

/// Trivial: every orbit is a fixed point. Uniform(k): every orbit has size
/// k > 1. Basic(k): orbits of size k > 1 and at least one fixed point.
/// General: anything else.
enum class OrbitKind { Trivial, Uniform, Basic, General };

struct OrbitStructure {
  /// Each orbit listed as v, φ(v), φ²(v), ... from its minimum vertex;
  /// orbits sorted by minimum vertex. Fixed vertices appear as singletons.
  std::vector<std::vector<Vertex>> orbits;
  std::vector<Vertex> fixed_vertices;
  OrbitKind kind = OrbitKind::Trivial;
  /// k for Uniform/Basic, 1 for Trivial, 0 for General.
  std::size_t orbit_size = 1;

  /// "Trivial", "Uniform(4)", "Basic(3)" or "General".
  std::string kind_name() const;
};

OrbitStructure orbit_structure(const Permutation& phi);

/// True iff a_ij == a_φ(i)φ(j) for the weighted adjacency matrix of g.
/// tolerance > 0 relaxes weight comparison to |difference| <= tolerance.
bool is_automorphism(const Graph& g, const Permutation& phi, double tolerance = 0.0);

struct BasicPower {
  std::uint64_t exponent = 1;
  Permutation power;
};

/// Smallest e >= 1 such that φ^e is Uniform or Basic. Throws DomainError for
/// the identity.
BasicPower power_to_basic(const Permutation& phi);

}  // namespace eqdecomp
