// SPDX-License-Identifier: Apache-2.0

#include "eqdecomp/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "eqdecomp/error.hpp"
#include "eqdecomp/orbits.hpp"

namespace eqdecomp {

namespace {

// acc += ω^e * block, adding exactly when ω^e is ±1 or ±i.
void accumulate_scaled(DenseMatrix& acc, const DenseMatrix& block, std::size_t k, std::size_t e) {
  e %= k;
  const std::size_t quarter = 4 * e;
  if (quarter % k == 0) {
    const std::size_t turn = quarter / k;
    for (std::size_t i = 0; i < acc.rows(); ++i)
      for (std::size_t j = 0; j < acc.cols(); ++j) {
        const Complex z = block(i, j);
        switch (turn) {
          case 0: acc(i, j) += z; break;
          case 1: acc(i, j) += Complex{-z.imag(), z.real()}; break;
          case 2: acc(i, j) -= z; break;
          default: acc(i, j) += Complex{z.imag(), -z.real()}; break;
        }
      }
    return;
  }
  const Complex w = root_of_unity_power(k, e);
  for (std::size_t i = 0; i < acc.rows(); ++i)
    for (std::size_t j = 0; j < acc.cols(); ++j) acc(i, j) += w * block(i, j);
}

std::vector<Vertex> ordering_of(const Transversal& t) {
  std::vector<Vertex> order(t.fixed);
  for (const auto& layer : t.powers) order.insert(order.end(), layer.begin(), layer.end());
  return order;
}

}  // namespace

Transversal build_transversal(const Permutation& phi) {
  const OrbitStructure orbits = orbit_structure(phi);
  if (orbits.kind != OrbitKind::Uniform && orbits.kind != OrbitKind::Basic) {
    std::string message = "automorphism " + phi.to_string() + " is " + orbits.kind_name() +
                          "; equitable decomposition needs a uniform or basic automorphism";
    if (orbits.kind == OrbitKind::General) message += " (use power_to_basic to obtain one)";
    throw DomainError(message);
  }
  Transversal t;
  t.fixed = orbits.fixed_vertices;
  for (const auto& orbit : orbits.orbits)
    if (orbit.size() > 1) t.base.push_back(orbit.front());
  t.powers.assign(orbits.orbit_size, {});
  t.powers[0] = t.base;
  for (std::size_t l = 1; l < orbits.orbit_size; ++l) {
    t.powers[l].reserve(t.base.size());
    for (Vertex v : t.powers[l - 1]) t.powers[l].push_back(phi(v));
  }
  return t;
}

Complex root_of_unity_power(std::size_t k, std::size_t e) {
  if (k == 0) throw Error("root of unity of order 0");
  e %= k;
  if ((4 * e) % k == 0) {
    switch ((4 * e) / k) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(k);
  return {std::cos(angle), std::sin(angle)};
}

DenseMatrix dft_similarity(std::size_t k, std::size_t r) {
  if (k == 0 || r == 0) throw Error("dft_similarity needs k >= 1 and r >= 1");
  DenseMatrix s(k * r, k * r);
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q) {
      const Complex w = root_of_unity_power(k, (p * q) % k);
      for (std::size_t i = 0; i < r; ++i) s(p * r + i, q * r + i) = w;
    }
  return s;
}

Decomposition decompose(const DenseMatrix& m, const Permutation& phi, double tolerance) {
  if (!m.is_square() || m.rows() != phi.size())
    throw Error("matrix dimension " + std::to_string(m.rows()) + " does not match permutation size " +
                std::to_string(phi.size()));
  const Transversal t = build_transversal(phi);
  if (!is_compatible(m, phi, tolerance))
    throw DomainError("matrix is not compatible with automorphism " + phi.to_string());

  Decomposition d;
  d.k = t.orbit_size();
  d.r = t.base.size();
  d.p = t.fixed.size();
  d.ordering = ordering_of(t);
  d.omega = root_of_unity_power(d.k, 1);

  std::vector<DenseMatrix> layers;  // M_m = M[T_0, T_m]
  layers.reserve(d.k);
  for (const auto& layer : t.powers) layers.push_back(m.select(t.base, layer));

  std::vector<DenseMatrix> b(d.k, DenseMatrix(d.r, d.r));
  for (std::size_t j = 0; j < d.k; ++j)
    for (std::size_t l = 0; l < d.k; ++l) accumulate_scaled(b[j], layers[l], d.k, j * l);

  if (d.p == 0) {
    d.divisor_block = std::move(b[0]);
  } else {
    // [[F, kH], [L, B_0]]; kH is accumulated as Σ_m M[T_f, T_m], which
    // equals kH for a compatible matrix and sums in the same order as the
    // divisor matrix does.
    DenseMatrix kh(d.p, d.r);
    for (const auto& layer : t.powers) kh += m.select(t.fixed, layer);
    const DenseMatrix f = m.select(t.fixed, t.fixed);
    const DenseMatrix l = m.select(t.base, t.fixed);
    DenseMatrix top(d.p + d.r, d.p + d.r);
    for (std::size_t i = 0; i < d.p; ++i) {
      for (std::size_t j = 0; j < d.p; ++j) top(i, j) = f(i, j);
      for (std::size_t j = 0; j < d.r; ++j) top(i, d.p + j) = kh(i, j);
    }
    for (std::size_t i = 0; i < d.r; ++i) {
      for (std::size_t j = 0; j < d.p; ++j) top(d.p + i, j) = l(i, j);
      for (std::size_t j = 0; j < d.r; ++j) top(d.p + i, d.p + j) = b[0](i, j);
    }
    d.divisor_block = std::move(top);
  }
  d.blocks.assign(std::make_move_iterator(b.begin() + 1), std::make_move_iterator(b.end()));
  return d;
}

Decomposition decompose(const CompatibleMatrix& m, const Permutation& phi, double tolerance) {
  return decompose(m.entries(), phi, tolerance);
}

double verify_similarity(const DenseMatrix& m, const Permutation& phi, const Decomposition& d) {
  const Transversal t = build_transversal(phi);
  if (d.k != t.orbit_size() || d.r != t.base.size() || d.p != t.fixed.size() || d.ordering != ordering_of(t))
    throw Error("decomposition does not match the transversal of " + phi.to_string());
  if (d.blocks.size() + 1 != d.k || d.divisor_block.rows() != d.p + d.r)
    throw Error("decomposition has the wrong number or size of blocks");
  const std::size_t n = m.rows();
  if (!m.is_square() || n != d.p + d.k * d.r) throw Error("matrix dimension does not match the decomposition");

  const DenseMatrix relabeled = m.select(d.ordering, d.ordering);  // Pᵀ m P

  const DenseMatrix s = dft_similarity(d.k, d.r);
  DenseMatrix t_mat(n, n);
  DenseMatrix t_inv(n, n);
  for (std::size_t i = 0; i < d.p; ++i) t_mat(i, i) = t_inv(i, i) = 1.0;
  const DenseMatrix s_inv = s.adjoint() * Complex{1.0 / static_cast<double>(d.k), 0.0};
  for (std::size_t i = 0; i < d.k * d.r; ++i)
    for (std::size_t j = 0; j < d.k * d.r; ++j) {
      t_mat(d.p + i, d.p + j) = s(i, j);
      t_inv(d.p + i, d.p + j) = s_inv(i, j);
    }

  std::vector<DenseMatrix> diagonal;
  diagonal.reserve(d.k);
  diagonal.push_back(d.divisor_block);
  for (const auto& block : d.blocks) {
    if (block.rows() != d.r || block.cols() != d.r) throw Error("decomposition block has the wrong size");
    diagonal.push_back(block);
  }
  return max_abs_difference(t_inv * relabeled * t_mat, direct_sum(diagonal));
}

double verify_similarity(const CompatibleMatrix& m, const Permutation& phi, const Decomposition& d) {
  return verify_similarity(m.entries(), phi, d);
}

bool similarity_within_tolerance(double residual, const DenseMatrix& m, double relative) {
  return residual <= relative * std::max(1.0, m.inf_norm());
}

}  // namespace eqdecomp
