// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "eqdecomp/dense_matrix.hpp"

namespace eqdecomp {

/// 12 significant digits; negative zero prints as 0.
std::string format_real(double x);

/// "a", "a+bi" or "a-bi" with 12 significant digits. A part smaller than
/// 1e-12 * max(1, |z|) prints as zero.
std::string format_complex(Complex z);

/// Right-aligned columns, one matrix row per line.
std::string format_matrix(const DenseMatrix& m);

/// "{v1, v2, ...}"
std::string format_values(const std::vector<Complex>& values);

}  // namespace eqdecomp
