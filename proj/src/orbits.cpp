// SPDX-License-Identifier: Apache-2.0

#include "eqdecomp/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "eqdecomp/error.hpp"

namespace eqdecomp {

namespace {

struct Classification {
  OrbitKind kind;
  std::size_t orbit_size;
};

// Classifies a cycle type given as (length -> multiplicity).
Classification classify(const std::map<std::size_t, std::size_t>& cycle_type) {
  const std::size_t fixed = cycle_type.count(1) ? cycle_type.at(1) : 0;
  const std::size_t distinct_nontrivial = cycle_type.size() - (fixed ? 1 : 0);
  if (distinct_nontrivial == 0) return {OrbitKind::Trivial, 1};
  if (distinct_nontrivial > 1) return {OrbitKind::General, 0};
  const std::size_t k = cycle_type.rbegin()->first;
  return {fixed ? OrbitKind::Basic : OrbitKind::Uniform, k};
}

std::map<std::size_t, std::size_t> cycle_type_of_power(const std::map<std::size_t, std::size_t>& type,
                                                       std::uint64_t e) {
  std::map<std::size_t, std::size_t> out;
  for (auto [len, count] : type) {
    const std::size_t g = static_cast<std::size_t>(std::gcd<std::uint64_t>(len, e));
    out[len / g] += count * g;
  }
  return out;
}

std::vector<std::uint64_t> divisors_ascending(const std::map<std::size_t, std::size_t>& type) {
  // Divisors of lcm(cycle lengths), built from the lengths' factorizations.
  std::map<std::uint64_t, int> exponents;
  for (const auto& [len, count] : type) {
    (void)count;
    std::size_t rest = len;
    for (std::size_t p = 2; p * p <= rest; ++p) {
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      if (e) exponents[p] = std::max(exponents[p], e);
    }
    if (rest > 1) exponents[rest] = std::max(exponents[rest], 1);
  }
  std::vector<std::uint64_t> divisors{1};
  for (const auto& [p, e] : exponents) {
    const std::size_t existing = divisors.size();
    std::uint64_t factor = 1;
    for (int i = 0; i < e; ++i) {
      factor *= p;
      for (std::size_t j = 0; j < existing; ++j) divisors.push_back(divisors[j] * factor);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

}  // namespace

std::string OrbitStructure::kind_name() const {
  switch (kind) {
    case OrbitKind::Trivial:
      return "Trivial";
    case OrbitKind::Uniform:
      return "Uniform(" + std::to_string(orbit_size) + ")";
    case OrbitKind::Basic:
      return "Basic(" + std::to_string(orbit_size) + ")";
    case OrbitKind::General:
      return "General";
  }
  return "General";
}

OrbitStructure orbit_structure(const Permutation& phi) {
  OrbitStructure s;
  s.orbits = phi.cycles();
  std::map<std::size_t, std::size_t> type;
  for (const auto& orbit : s.orbits) {
    ++type[orbit.size()];
    if (orbit.size() == 1) s.fixed_vertices.push_back(orbit.front());
  }
  const auto c = classify(type);
  s.kind = c.kind;
  s.orbit_size = c.orbit_size;
  return s;
}

bool is_automorphism(const Graph& g, const Permutation& phi, double tolerance) {
  if (phi.size() != g.order())
    throw Error("permutation acts on " + std::to_string(phi.size()) + " vertices but the graph has " +
                std::to_string(g.order()));
  const auto same = [tolerance](double a, double b) {
    return tolerance > 0.0 ? std::abs(a - b) <= tolerance : a == b;
  };
  // Every nonzero entry a_uv must be matched at (φ(u), φ(v)) and at
  // (φ⁻¹(u), φ⁻¹(v)); together these cover a_ij = a_φ(i)φ(j) for all i, j.
  const Permutation inverse = phi.inverse();
  for (const auto& e : g.edges()) {
    if (!same(g.weight(phi(e.from), phi(e.to)), e.weight)) return false;
    if (!same(g.weight(inverse(e.from), inverse(e.to)), e.weight)) return false;
  }
  return true;
}

BasicPower power_to_basic(const Permutation& phi) {
  if (phi.is_identity()) throw DomainError("the identity permutation has no nontrivial basic power");
  std::map<std::size_t, std::size_t> type;
  for (const auto& cycle : phi.cycles()) ++type[cycle.size()];
  (void)phi.order();  // throws if the order overflows
  // The cycle type of φ^e depends only on gcd(e, order), so the smallest
  // admissible exponent is a divisor of the order.
  for (std::uint64_t e : divisors_ascending(type)) {
    const auto kind = classify(cycle_type_of_power(type, e)).kind;
    if (kind == OrbitKind::Uniform || kind == OrbitKind::Basic) return BasicPower{e, phi.power(e)};
  }
  throw DomainError("no basic power found");  // unreachable for non-identity φ
}

}  // namespace eqdecomp
