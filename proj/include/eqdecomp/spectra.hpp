// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "eqdecomp/dense_matrix.hpp"
#include "eqdecomp/matrices.hpp"
#include "eqdecomp/permutation.hpp"

namespace eqdecomp {

/// Eigenvalues listed with multiplicity, plus the tolerance used when
/// matching them against another multiset.
struct SpectrumMultiset {
  std::vector<Complex> values;
  double tolerance = 1e-8;

  std::size_t size() const noexcept { return values.size(); }
  /// Sorted by real part descending, then imaginary part descending.
  std::vector<Complex> sorted_values() const;
};

/// All eigenvalues of a square matrix: diagonal balancing, Householder
/// reduction to upper Hessenberg form, then shifted complex QR with
/// deflation (1x1 and 2x2 trailing blocks in closed form), run separately
/// on each irreducible diagonal block. For non-Hermitian blocks, tight
/// isolated groups whose spread matches a rounding-perturbed Jordan block
/// are replaced by their mean, which is the well-conditioned quantity. The returned tolerance is 1e-8 * max(1, ‖m‖∞).
///
/// Throws Error on non-finite input or if 40n QR sweeps do not converge.
SpectrumMultiset eigenvalues(const DenseMatrix& m);

/// True iff both multisets have the same size and a perfect matching pairs
/// every value with one of the other within `tolerance`.
bool multiset_equal(const SpectrumMultiset& a, const SpectrumMultiset& b, double tolerance);

/// Number of values whose cluster (connected component of the
/// "within tolerance" graph) has exactly one member.
std::size_t count_simple(const SpectrumMultiset& s, double tolerance = 1e-6);

enum class BoundKind { UniformOdd, UniformEven, BasicOdd, BasicEven, CycleCount };

std::string_view to_string(BoundKind kind);

/// Upper bound on the number of simple eigenvalues of a symmetric matrix
/// compatible with an automorphism. k, r and fixed_points are 0 where they
/// do not apply.
struct SimpleEigBound {
  BoundKind kind = BoundKind::CycleCount;
  std::size_t bound = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t fixed_points = 0;
};

/// Uniform(k): r = n/k (odd k) or 2r (even k). Basic(k) with N fixed points:
/// N + (n-N)/k (odd k) or N + 2(n-N)/k (even k). Always: α + 2β, the number
/// of odd-length cycles (fixed points included) plus twice the number of
/// even-length cycles.
std::vector<SimpleEigBound> count_bounds(const Permutation& phi, std::size_t n);

/// Eigenvalues of the non-divisor blocks B_1..B_{k-1} for each automorphism,
/// in automorphism order then block order. Every value is an eigenvalue of
/// m; the divisor blocks are never solved.
SpectrumMultiset certified_eigen_subset(const CompatibleMatrix& m, std::span<const Permutation> automorphisms);

struct SpectralBoundsReport {
  double radius_lower_bound = 0.0;
  std::optional<double> gap_upper_bound;
};

/// One-sided bounds from a certified partial spectrum: the spectral radius
/// is at least max |λ|; for Laplacian kinds the algebraic connectivity is at
/// most the smallest positive value. Throws Error on an empty set.
SpectralBoundsReport spectral_bounds(const SpectrumMultiset& partial, MatrixKind kind);

}  // namespace eqdecomp
