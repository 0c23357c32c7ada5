// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "eqdecomp/dense_matrix.hpp"
#include "eqdecomp/matrices.hpp"
#include "eqdecomp/permutation.hpp"

namespace eqdecomp {

/// Representatives of the k-orbits of a uniform or basic automorphism and
/// their images. powers[l] = φ^l(base); `fixed` is empty in the uniform case.
struct Transversal {
  std::vector<Vertex> base;
  std::vector<std::vector<Vertex>> powers;
  std::vector<Vertex> fixed;

  std::size_t orbit_size() const noexcept { return powers.size(); }
};

/// Picks the minimum vertex of each k-orbit (orbits ordered by minimum) and
/// collects fixed vertices ascending. Throws DomainError unless φ is Uniform
/// or Basic.
Transversal build_transversal(const Permutation& phi);

/// ω^e for ω = e^{2πi/k}. Quarter turns (±1, ±i) are returned exactly.
Complex root_of_unity_power(std::size_t k, std::size_t e);

/// The kr x kr block matrix whose (p, q) block is ω^{pq} I_r.
DenseMatrix dft_similarity(std::size_t k, std::size_t r);

/// Equitable decomposition of a matrix over a uniform or basic automorphism.
///
/// With p fixed vertices and r orbits of size k (p + kr = n), `ordering`
/// lists T_f, T_0, ..., T_{k-1}. `divisor_block` is [[F, kH], [L, B_0]]
/// (just B_0 when p = 0) and `blocks` holds B_1..B_{k-1}, where
/// B_j = Σ_m ω^{jm} M[T_0, T_m].
struct Decomposition {
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t p = 0;
  std::vector<Vertex> ordering;
  DenseMatrix divisor_block;
  std::vector<DenseMatrix> blocks;
  Complex omega;
};

/// Throws DomainError if φ is not Uniform/Basic (suggesting power_to_basic)
/// or if m is not compatible with φ (within `tolerance`, exact by default).
/// Uses no spectral information.
Decomposition decompose(const DenseMatrix& m, const Permutation& phi, double tolerance = 0.0);
Decomposition decompose(const CompatibleMatrix& m, const Permutation& phi, double tolerance = 0.0);

/// Forms T^{-1} (Pᵀ m P) T with T = I_p ⊕ S and T^{-1} = I_p ⊕ (1/k) S*,
/// subtracts divisor_block ⊕ B_1 ⊕ ... ⊕ B_{k-1}, and returns the largest
/// absolute entry of the difference. Throws Error if d does not belong to φ.
double verify_similarity(const DenseMatrix& m, const Permutation& phi, const Decomposition& d);
double verify_similarity(const CompatibleMatrix& m, const Permutation& phi, const Decomposition& d);

/// residual <= relative * max(1, ‖m‖∞).
bool similarity_within_tolerance(double residual, const DenseMatrix& m, double relative = 1e-10);

}  // namespace eqdecomp
