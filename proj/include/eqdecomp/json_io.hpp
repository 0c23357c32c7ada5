// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "eqdecomp/decomp.hpp"
#include "eqdecomp/dense_matrix.hpp"
#include "eqdecomp/spectra.hpp"

namespace eqdecomp {

// Matrices are arrays of rows; each entry is a [re, im] pair of decimal
// strings holding the shortest round-trip representation of the double.
// Readers also accept plain JSON numbers.

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const nlohmann::json& j);

/// {k, r, p, ordering (1-based), divisorBlock, blocks, omega}
nlohmann::json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const nlohmann::json& j);

/// {"values": [[re, im], ...]} sorted by real then imaginary part, both
/// descending, plus the matching tolerance.
nlohmann::json spectrum_to_json(const SpectrumMultiset& s);
SpectrumMultiset spectrum_from_json(const nlohmann::json& j);

nlohmann::json bounds_to_json(const std::vector<SimpleEigBound>& bounds);
nlohmann::json spectral_report_to_json(const SpectrumMultiset& partial, const SpectralBoundsReport& report);

}  // namespace eqdecomp
