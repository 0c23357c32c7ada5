// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "eqdecomp/decomp.hpp"
#include "eqdecomp/spectra.hpp"
#include "oracles.hpp"

namespace testing {

using eqdecomp::Complex;
using eqdecomp::DenseMatrix;

inline std::vector<Complex> values_of(const eqdecomp::DenseMatrix& m) { return eqdecomp::eigenvalues(m).values; }

inline eqdecomp::SpectrumMultiset multiset(const std::vector<double>& values) {
  return eqdecomp::SpectrumMultiset{oracle::to_complex(values), 1e-8};
}

/// σ(divisor block) ⊎ σ(B₁) ⊎ … ⊎ σ(B_{k−1}).
inline std::vector<Complex> block_spectrum(const eqdecomp::Decomposition& d) {
  auto all = values_of(d.divisor_block);
  for (const auto& b : d.blocks) {
    const auto v = values_of(b);
    all.insert(all.end(), v.begin(), v.end());
  }
  return all;
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("eqdecomp-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace testing
