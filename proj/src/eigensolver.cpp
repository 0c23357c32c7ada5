// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "eqdecomp/error.hpp"
#include "eqdecomp/spectra.hpp"

namespace eqdecomp {

namespace {

double abs1(const Complex& z) { return std::abs(z.real()) + std::abs(z.imag()); }

// Parlett–Reinsch balancing with radix 2, so scaling is exact.
void balance(DenseMatrix& a) {
  const std::size_t n = a.rows();
  bool converged = false;
  while (!converged) {
    converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      double col = 0.0;
      double row = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        col += abs1(a(j, i));
        row += abs1(a(i, j));
      }
      if (col == 0.0 || row == 0.0) continue;
      double g = row / 2.0;
      double f = 1.0;
      const double total = col + row;
      while (col < g) {
        f *= 2.0;
        col *= 4.0;
      }
      g = row * 2.0;
      while (col > g) {
        f /= 2.0;
        col /= 4.0;
      }
      if ((col + row) / f < 0.95 * total) {
        converged = false;
        const double inv = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= inv;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

// Householder reduction to upper Hessenberg form.
void reduce_to_hessenberg(DenseMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Complex> v(n);
  for (std::size_t col = 0; col + 2 < n; ++col) {
    double norm = 0.0;
    for (std::size_t i = col + 1; i < n; ++i) norm = std::hypot(norm, std::abs(a(i, col)));
    if (norm == 0.0) continue;
    const Complex x0 = a(col + 1, col);
    const Complex phase = std::abs(x0) == 0.0 ? Complex{1.0, 0.0} : x0 / std::abs(x0);
    const Complex alpha = -phase * norm;
    std::fill(v.begin(), v.end(), Complex{});
    for (std::size_t i = col + 1; i < n; ++i) v[i] = a(i, col);
    v[col + 1] -= alpha;
    double vnorm = 0.0;
    for (std::size_t i = col + 1; i < n; ++i) vnorm = std::hypot(vnorm, std::abs(v[i]));
    if (vnorm == 0.0) continue;
    for (std::size_t i = col + 1; i < n; ++i) v[i] /= vnorm;
    // a <- (I - 2vv*) a
    for (std::size_t j = col; j < n; ++j) {
      Complex dot{};
      for (std::size_t i = col + 1; i < n; ++i) dot += std::conj(v[i]) * a(i, j);
      for (std::size_t i = col + 1; i < n; ++i) a(i, j) -= 2.0 * v[i] * dot;
    }
    // a <- a (I - 2vv*)
    for (std::size_t i = 0; i < n; ++i) {
      Complex dot{};
      for (std::size_t j = col + 1; j < n; ++j) dot += a(i, j) * v[j];
      for (std::size_t j = col + 1; j < n; ++j) a(i, j) -= 2.0 * dot * std::conj(v[j]);
    }
    a(col + 1, col) = alpha;
    for (std::size_t i = col + 2; i < n; ++i) a(i, col) = Complex{};
  }
}

std::pair<Complex, Complex> eigenvalues_2x2(Complex a, Complex b, Complex c, Complex d) {
  const Complex mean = 0.5 * (a + d);
  const Complex half_diff = 0.5 * (a - d);
  const Complex disc = std::sqrt(half_diff * half_diff + b * c);
  return {mean + disc, mean - disc};
}

struct Givens {
  double c;
  Complex s;
};

// G = [[c, s], [-conj(s), c]] with G [a; b] = [ρ; 0].
Givens make_givens(Complex a, Complex b) {
  const double abs_a = std::abs(a);
  const double abs_b = std::abs(b);
  if (abs_b == 0.0) return {1.0, Complex{}};
  if (abs_a == 0.0) return {0.0, std::conj(b) / abs_b};
  const double r = std::hypot(abs_a, abs_b);
  return {abs_a / r, (a / abs_a) * std::conj(b) / r};
}

// A Jordan block of size m perturbed at the rounding level splits into m
// eigenvalues on a circle of radius ρ with ρ^m ≈ ε·‖M‖, while their mean stays
// accurate to O(ε). Isolated groups whose spread is within that budget are
// numerically indistinguishable from a multiple eigenvalue and are replaced
// by their mean; well-separated eigenvalues are left untouched.
void average_defective_clusters(std::vector<Complex>& values, double scale) {
  constexpr double kMaxRadius = 1e-2;
  constexpr double kIsolation = 10.0;
  const std::size_t n = values.size();
  // backward error of the QR sweep is at most c·n·ε·‖M‖ with c ≈ 10
  constexpr double kBackwardConstant = 10.0;
  const double budget = kBackwardConstant * static_cast<double>(n) * std::numeric_limits<double>::epsilon() * scale;
  std::vector<bool> done(n, false);
  std::vector<bool> member(n, false);
  std::vector<std::size_t> near;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (done[seed]) continue;
    done[seed] = true;
    near.clear();
    for (std::size_t j = 0; j < n; ++j)
      if (!done[j] && std::abs(values[j] - values[seed]) <= 2.0 * kMaxRadius * scale) near.push_back(j);
    std::sort(near.begin(), near.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(values[a] - values[seed]) < std::abs(values[b] - values[seed]);
    });
    // Largest group {seed, near[0..m-2]} that passes; larger groups first.
    for (std::size_t m = near.size() + 1; m >= 2; --m) {
      Complex mean = values[seed];
      for (std::size_t t = 0; t + 1 < m; ++t) mean += values[near[t]];
      mean /= static_cast<double>(m);
      double radius = std::abs(values[seed] - mean);
      for (std::size_t t = 0; t + 1 < m; ++t) radius = std::max(radius, std::abs(values[near[t]] - mean));
      if (radius > kMaxRadius * scale || std::pow(radius, static_cast<double>(m)) > budget) continue;
      member[seed] = true;
      for (std::size_t t = 0; t + 1 < m; ++t) member[near[t]] = true;
      double gap = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < n; ++j)
        if (!member[j]) gap = std::min(gap, std::abs(values[j] - mean));
      const bool isolated = gap >= kIsolation * radius;
      if (isolated) values[seed] = mean;
      member[seed] = false;
      for (std::size_t t = 0; t + 1 < m; ++t) {
        member[near[t]] = false;
        if (isolated) {
          values[near[t]] = mean;
          done[near[t]] = true;
        }
      }
      if (isolated) break;
    }
  }
}

// Strongly connected components of the off-diagonal nonzero pattern
// (iterative Tarjan). A reducible matrix is permutation-similar to block
// triangular form, so its spectrum is the union of the spectra of these
// principal submatrices; singleton components contribute their diagonal
// entry exactly.
std::vector<std::vector<std::size_t>> irreducible_blocks(const DenseMatrix& m) {
  const std::size_t n = m.rows();
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::vector<std::size_t>> blocks;
  std::size_t counter = 0;
  std::vector<std::pair<std::size_t, std::size_t>> frames;  // (vertex, next column)
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      bool descended = false;
      while (next < n) {
        const std::size_t w = next++;
        if (w == v || m(v, w) == Complex{}) continue;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      const std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
      if (low[done] == index[done]) {
        std::vector<std::size_t> block;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          block.push_back(w);
        } while (w != done);
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  return blocks;
}

struct SweepBudget {
  std::size_t used = 0;
  std::size_t cap = 0;
  std::size_t n = 0;
};

// Shifted complex QR on an irreducible block; appends its eigenvalues.
void qr_eigenvalues(DenseMatrix h, std::size_t first_row, SweepBudget& budget, std::vector<Complex>& out) {
  const std::size_t n = h.rows();
  balance(h);
  reduce_to_hessenberg(h);

  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double scale = std::max(h.max_abs(), std::numeric_limits<double>::min());
  std::vector<Complex> values(n);
  std::size_t local_sweeps = 0;
  std::vector<Givens> rotations(n);

  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
  while (hi >= 0) {
    std::ptrdiff_t lo = hi;
    while (lo > 0) {
      // Neighbour-relative test, or the plain backward-stable one: dropping an
      // entry below ε·max|h| perturbs the matrix at the rounding level. The
      // latter keeps near-nilpotent windows, whose diagonal tends to zero,
      // from stalling.
      const double s = abs1(h(lo - 1, lo - 1)) + abs1(h(lo, lo));
      if (abs1(h(lo, lo - 1)) <= eps * std::max(s, scale)) {
        h(lo, lo - 1) = Complex{};
        break;
      }
      --lo;
    }
    if (lo == hi) {
      values[hi] = h(hi, hi);
      --hi;
      local_sweeps = 0;
      continue;
    }
    if (lo == hi - 1) {
      auto [x, y] = eigenvalues_2x2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi));
      values[lo] = x;
      values[hi] = y;
      hi -= 2;
      local_sweeps = 0;
      continue;
    }
    if (budget.used >= budget.cap)
      throw Error("QR iteration did not converge after " + std::to_string(budget.used) +
                  " sweeps; deflation stalled in active rows " + std::to_string(lo + 1) + ".." +
                  std::to_string(hi + 1) + " of the " + std::to_string(n) +
                  "x" + std::to_string(n) + " irreducible block starting at row " + std::to_string(first_row + 1) +
                  " (matrix order " + std::to_string(budget.n) + ")");

    Complex shift;
    if (local_sweeps > 0 && local_sweeps % 10 == 0) {
      shift = h(hi, hi) + Complex{0.75 * std::abs(h(hi, hi - 1).real()) + std::abs(h(hi - 1, hi - 2).real()), 0.0};
    } else {
      auto [x, y] = eigenvalues_2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
      shift = std::abs(x - h(hi, hi)) <= std::abs(y - h(hi, hi)) ? x : y;
    }

    // One explicit-shift QR step on the active window lo..hi.
    const auto first = static_cast<std::size_t>(lo);
    const auto last = static_cast<std::size_t>(hi);
    for (std::size_t i = first; i <= last; ++i) h(i, i) -= shift;
    for (std::size_t k = first; k < last; ++k) {
      const Givens g = make_givens(h(k, k), h(k + 1, k));
      rotations[k] = g;
      for (std::size_t j = k; j <= last; ++j) {
        const Complex x = h(k, j);
        const Complex y = h(k + 1, j);
        h(k, j) = g.c * x + g.s * y;
        h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
      }
    }
    for (std::size_t k = first; k < last; ++k) {
      const Givens g = rotations[k];
      const std::size_t row_end = std::min(k + 2, last);
      for (std::size_t i = first; i <= row_end; ++i) {
        const Complex u = h(i, k);
        const Complex w = h(i, k + 1);
        h(i, k) = g.c * u + std::conj(g.s) * w;
        h(i, k + 1) = -g.s * u + g.c * w;
      }
    }
    for (std::size_t i = first; i <= last; ++i) h(i, i) += shift;
    ++budget.used;
    ++local_sweeps;
  }
  out.insert(out.end(), values.begin(), values.end());
}

}  // namespace

SpectrumMultiset eigenvalues(const DenseMatrix& m) {
  if (!m.is_square() || m.rows() == 0) throw Error("eigenvalues need a non-empty square matrix");
  if (!m.is_finite()) throw Error("eigenvalues need finite matrix entries");
  const std::size_t n = m.rows();
  SpectrumMultiset result;
  result.tolerance = 1e-8 * std::max(1.0, m.inf_norm());
  result.values.reserve(n);

  SweepBudget budget{0, 40 * n, n};
  for (const auto& block : irreducible_blocks(m)) {
    if (block.size() == 1) {
      result.values.push_back(m(block[0], block[0]));
      continue;
    }
    DenseMatrix sub = m.select(block, block);
    const bool hermitian = sub == sub.adjoint();
    const double scale = std::max(1.0, sub.inf_norm());
    std::vector<Complex> values;
    qr_eigenvalues(std::move(sub), block.front(), budget, values);
    // Hermitian blocks have no Jordan structure to repair.
    if (!hermitian) average_defective_clusters(values, scale);
    result.values.insert(result.values.end(), values.begin(), values.end());
  }
  return result;
}

}  // namespace eqdecomp
