// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eqdecomp/graph.hpp"

namespace eqdecomp {

/// A bijection on {0..n-1} with its cycle decomposition cached at
/// construction. Cycles (fixed points included) start at their minimum
/// element and are sorted by it.
class Permutation {
 public:
  Permutation() = default;
  /// images[v] is the image of v. Throws Error unless it is a bijection.
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(std::size_t n);
  /// Builds from zero-based cycles; unlisted vertices are fixed.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<Vertex>>& cycles);

  std::size_t size() const noexcept { return images_.size(); }
  Vertex operator()(Vertex v) const { return images_[v]; }
  std::span<const Vertex> images() const noexcept { return images_; }
  const std::vector<std::vector<Vertex>>& cycles() const noexcept { return cycles_; }

  /// (*this)∘inner, i.e. v -> (*this)(inner(v)).
  Permutation compose(const Permutation& inner) const;
  Permutation inverse() const;
  Permutation power(std::uint64_t exponent) const;
  /// lcm of the cycle lengths. Throws Error if it does not fit in 64 bits.
  std::uint64_t order() const;
  bool is_identity() const;

  /// 1-based cycle notation without fixed points, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }

 private:
  std::vector<Vertex> images_;
  std::vector<std::vector<Vertex>> cycles_;
};

/// Parses cycle notation such as "(1 3 5 7)(2,4,6,8)" over 1-based vertices
/// 1..n. Spaces and commas both separate entries; "" is the identity.
/// Text after `#` on a line is ignored.
Permutation parse_permutation(std::string_view text, std::size_t n);

/// Largest vertex label mentioned in cycle notation (0 if none).
std::size_t max_label_in_cycle_text(std::string_view text);

}  // namespace eqdecomp
