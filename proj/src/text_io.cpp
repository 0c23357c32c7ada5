// SPDX-License-Identifier: Apache-2.0

#include "eqdecomp/text_io.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace eqdecomp {

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;
  return fmt::format("{:.12g}", x);
}

std::string format_complex(Complex z) {
  const double cutoff = 1e-12 * std::max(1.0, std::abs(z));
  const double re = std::abs(z.real()) <= cutoff ? 0.0 : z.real();
  const double im = std::abs(z.imag()) <= cutoff ? 0.0 : z.imag();
  if (im == 0.0) return format_real(re);
  const std::string imag_part = format_real(std::abs(im)) + "i";
  if (re == 0.0) return (im < 0 ? "-" : "") + imag_part;
  return format_real(re) + (im < 0 ? "-" : "+") + imag_part;
}

std::string format_matrix(const DenseMatrix& m) {
  std::vector<std::string> cells;
  cells.reserve(m.rows() * m.cols());
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells.push_back(format_complex(m(i, j)));
      width = std::max(width, cells.back().size());
    }
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += "  ";
      out += fmt::format("{:>{}}", cells[i * m.cols() + j], width);
    }
    out += '\n';
  }
  return out;
}

std::string format_values(const std::vector<Complex>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_complex(values[i]);
  }
  return out + "}";
}

}  // namespace eqdecomp
