// SPDX-License-Identifier: Apache-2.0

#include "eqdecomp/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "eqdecomp/decomp.hpp"
#include "eqdecomp/error.hpp"
#include "eqdecomp/orbits.hpp"

namespace eqdecomp {

std::vector<Complex> SpectrumMultiset::sorted_values() const {
  std::vector<Complex> out = values;
  // Real parts are bucketed on the tolerance grid so conjugate pairs with
  // rounding noise in the real part still list +i before -i.
  const double grid = tolerance > 0.0 ? tolerance : 1e-12;
  std::sort(out.begin(), out.end(), [grid](const Complex& a, const Complex& b) {
    const double ra = std::round(a.real() / grid);
    const double rb = std::round(b.real() / grid);
    if (ra != rb) return ra > rb;
    return a.imag() > b.imag();
  });
  return out;
}

bool multiset_equal(const SpectrumMultiset& a, const SpectrumMultiset& b, double tolerance) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(a.values[i] - b.values[j]) <= tolerance) candidates[i].push_back(j);

  // Kuhn's augmenting-path bipartite matching.
  constexpr std::size_t unmatched = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_of_b(n, unmatched);
  std::vector<char> visited(n);
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j : candidates[i]) {
      if (visited[j]) continue;
      visited[j] = 1;
      if (match_of_b[j] == unmatched || augment(match_of_b[j])) {
        match_of_b[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (candidates[i].empty()) return false;
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(i)) return false;
  }
  return true;
}

std::size_t count_simple(const SpectrumMultiset& s, double tolerance) {
  const std::size_t n = s.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(s.values[i] - s.values[j]) <= tolerance) parent[root(i)] = root(j);
  std::vector<std::size_t> cluster_size(n, 0);
  for (std::size_t i = 0; i < n; ++i) ++cluster_size[root(i)];
  std::size_t simple = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (cluster_size[root(i)] == 1) ++simple;
  return simple;
}

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::UniformOdd: return "UniformOdd";
    case BoundKind::UniformEven: return "UniformEven";
    case BoundKind::BasicOdd: return "BasicOdd";
    case BoundKind::BasicEven: return "BasicEven";
    case BoundKind::CycleCount: return "CycleCount";
  }
  return "CycleCount";
}

std::vector<SimpleEigBound> count_bounds(const Permutation& phi, std::size_t n) {
  if (phi.size() != n)
    throw Error("permutation acts on " + std::to_string(phi.size()) + " vertices, expected " + std::to_string(n));
  const OrbitStructure orbits = orbit_structure(phi);
  std::vector<SimpleEigBound> bounds;
  const std::size_t k = orbits.orbit_size;
  if (orbits.kind == OrbitKind::Uniform) {
    const std::size_t r = n / k;
    const bool odd = k % 2 == 1;
    bounds.push_back({odd ? BoundKind::UniformOdd : BoundKind::UniformEven, odd ? r : 2 * r, n, k, r, 0});
  } else if (orbits.kind == OrbitKind::Basic) {
    const std::size_t fixed = orbits.fixed_vertices.size();
    const std::size_t r = (n - fixed) / k;
    const bool odd = k % 2 == 1;
    bounds.push_back({odd ? BoundKind::BasicOdd : BoundKind::BasicEven, fixed + (odd ? r : 2 * r), n, k, r, fixed});
  }
  std::size_t odd_cycles = 0;
  std::size_t even_cycles = 0;
  for (const auto& cycle : orbits.orbits) (cycle.size() % 2 ? odd_cycles : even_cycles) += 1;
  bounds.push_back({BoundKind::CycleCount, odd_cycles + 2 * even_cycles, n, 0, 0, orbits.fixed_vertices.size()});
  return bounds;
}

SpectrumMultiset certified_eigen_subset(const CompatibleMatrix& m, std::span<const Permutation> automorphisms) {
  SpectrumMultiset partial;
  partial.tolerance = 1e-8 * std::max(1.0, m.entries().inf_norm());
  for (const auto& phi : automorphisms) {
    const Decomposition d = decompose(m, phi);
    for (const auto& block : d.blocks) {
      const auto values = eigenvalues(block).values;
      partial.values.insert(partial.values.end(), values.begin(), values.end());
    }
  }
  return partial;
}

SpectralBoundsReport spectral_bounds(const SpectrumMultiset& partial, MatrixKind kind) {
  if (partial.values.empty()) throw Error("spectral bounds need at least one certified eigenvalue");
  SpectralBoundsReport report;
  for (const auto& z : partial.values) report.radius_lower_bound = std::max(report.radius_lower_bound, std::abs(z));
  if (kind == MatrixKind::Laplacian || kind == MatrixKind::NormalizedLaplacian) {
    const double zero = 1e-8 * std::max(1.0, report.radius_lower_bound);
    for (const auto& z : partial.values) {
      if (z.real() <= zero) continue;
      if (!report.gap_upper_bound || z.real() < *report.gap_upper_bound) report.gap_upper_bound = z.real();
    }
  }
  return report;
}

}  // namespace eqdecomp
