#include "cayline/unitary.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cayline/error.hpp"
#include "cayline/line_recognition.hpp"

namespace cayline {

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<complex> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n)
    throw Error(ErrorCode::invalid_argument, "matrix needs n*n entries");
  for (const auto &z : entries_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::invalid_argument, "matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1.0;
  return m;
}

ComplexMatrix dft_matrix(std::size_t d) {
  if (d == 0)
    throw Error(ErrorCode::invalid_argument, "DFT size must be positive");
  ComplexMatrix m(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      // reduce jk mod d first so the angle stays in [0, 2 pi)
      const auto step = (j * k) % d;
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(step) / static_cast<double>(d);
      m(j, k) = std::polar(scale, angle);
    }
  return m;
}

double unitarity_residual(const ComplexMatrix &m) {
  const auto n = m.dimension();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      complex sum = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        sum += std::conj(m(k, i)) * m(k, j);
      if (i == j)
        sum -= 1.0;
      worst = std::max(worst, std::abs(sum));
    }
  return worst;
}

bool is_unitary(const ComplexMatrix &m, double tol) {
  if (tol < 0.0)
    throw Error(ErrorCode::invalid_argument, "tolerance must be nonnegative");
  return unitarity_residual(m) <= tol;
}

Digraph pattern_of(const ComplexMatrix &m, double tol) {
  if (tol < 0.0)
    throw Error(ErrorCode::invalid_argument, "tolerance must be nonnegative");
  const auto n = m.dimension();
  Digraph d(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (std::abs(m(u, v)) > tol)
        d.set(u, v, 1);
  return d;
}

ComplexMatrix synthesize_unitary(const Digraph &d) {
  const auto blocks = block_decomposition(d);
  const auto dft = dft_matrix(blocks.degree);
  ComplexMatrix u(d.vertex_count());
  for (const auto &block : blocks.blocks)
    for (std::size_t j = 0; j < block.rows.size(); ++j)
      for (std::size_t k = 0; k < block.cols.size(); ++k)
        u(block.rows[j], block.cols[k]) = dft(j, k);
  return u;
}

} // namespace cayline
