// SPDX-License-Identifier: Apache-2.0

#include "eqdecomp/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

#include "eqdecomp/error.hpp"

namespace eqdecomp {

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  const std::size_t n = images_.size();
  std::vector<bool> seen(n, false);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex image = images_[v];
    if (image >= n) throw Error("permutation image " + std::to_string(image + 1) + " out of range 1.." + std::to_string(n));
    if (seen[image]) throw Error("permutation is not a bijection: " + std::to_string(image + 1) + " is hit twice");
    seen[image] = true;
  }
  std::fill(seen.begin(), seen.end(), false);
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    auto& cycle = cycles_.emplace_back();
    for (Vertex v = start; !seen[v]; v = images_[v]) {
      seen[v] = true;
      cycle.push_back(v);
    }
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), Vertex{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<Vertex>>& cycles) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), Vertex{0});
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Vertex v = cycle[i];
      if (v >= n) throw Error("cycle vertex " + std::to_string(v + 1) + " out of range 1.." + std::to_string(n));
      if (used[v]) throw Error("vertex " + std::to_string(v + 1) + " appears more than once in the cycles");
      used[v] = true;
      images[v] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (inner.size() != size()) throw Error("cannot compose permutations of different sizes");
  std::vector<Vertex> images(size());
  for (Vertex v = 0; v < size(); ++v) images[v] = images_[inner.images_[v]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> images(size());
  for (Vertex v = 0; v < size(); ++v) images[images_[v]] = v;
  return Permutation(std::move(images));
}

Permutation Permutation::power(std::uint64_t exponent) const {
  std::vector<Vertex> images(size());
  for (const auto& cycle : cycles_) {
    const std::size_t len = cycle.size();
    const std::size_t shift = static_cast<std::size_t>(exponent % len);
    for (std::size_t i = 0; i < len; ++i) images[cycle[i]] = cycle[(i + shift) % len];
  }
  return Permutation(std::move(images));
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& cycle : cycles_) {
    const std::uint64_t len = cycle.size();
    const std::uint64_t g = std::gcd(result, len);
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(result / g, len, &next)) throw Error("permutation order exceeds 64 bits");
    result = next;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (Vertex v = 0; v < size(); ++v)
    if (images_[v] != v) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& cycle : cycles_) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_permutation(std::string_view text, std::size_t n) {
  std::vector<std::vector<Vertex>> cycles;
  std::vector<bool> used(n, false);
  bool open = false;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (c == '(') {
      if (open) throw ParseError("nested '(' in cycle notation");
      open = true;
      cycles.emplace_back();
      ++i;
      continue;
    }
    if (c == ')') {
      if (!open) throw ParseError("unmatched ')' in cycle notation");
      open = false;
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t label = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        label = label * 10 + static_cast<std::size_t>(text[i] - '0');
        if (label > n) label = n + 1;  // saturate; reported as out of range below
        ++i;
      }
      if (!open) throw ParseError("vertex outside parentheses in cycle notation");
      if (label < 1 || label > n) throw ParseError("vertex out of range 1.." + std::to_string(n) + " in cycle notation");
      if (used[label - 1]) throw ParseError("vertex " + std::to_string(label) + " appears more than once in cycle notation");
      used[label - 1] = true;
      cycles.back().push_back(label - 1);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "' in cycle notation");
  }
  if (open) throw ParseError("unterminated cycle: missing ')'");
  return Permutation::from_cycles(n, cycles);
}

std::size_t max_label_in_cycle_text(std::string_view text) {
  std::size_t best = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t label = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      label = std::min<std::size_t>(label * 10 + static_cast<std::size_t>(text[i] - '0'), 1u << 30);
      ++i;
    }
    best = std::max(best, label);
  }
  return best;
}

}  // namespace eqdecomp
