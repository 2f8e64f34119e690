#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Dense>

#include "cayline/error.hpp"
#include "cayline/unitary.hpp"

namespace cayline {

namespace {

using Matrix = Eigen::MatrixXcd;

// Nearest unitary in Frobenius norm: U V^H from the SVD.
Matrix polar_factor(const Matrix &m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

ComplexMatrix to_complex_matrix(const Matrix &m) {
  const auto n = static_cast<std::size_t>(m.rows());
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      out(r, c) = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  return out;
}

} // namespace

SearchReport search_unitary_with_pattern(const Digraph &pattern, const SearchOptions &options) {
  if (!pattern.is_simple())
    throw Error(ErrorCode::multi_arc, "search pattern must be a 0/1 digraph");
  if (options.tol < 0.0)
    throw Error(ErrorCode::invalid_argument, "tolerance must be nonnegative");

  const auto n = static_cast<Eigen::Index>(pattern.vertex_count());
  auto on_pattern = [&](Eigen::Index r, Eigen::Index c) {
    return pattern(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) != 0;
  };

  SearchReport report;
  report.seed = options.seed;
  if (n == 0)
    return report;

  for (std::size_t restart = 0; restart < options.restarts; ++restart) {
    std::mt19937_64 rng(options.seed + restart);
    std::normal_distribution<double> normal;
    Matrix current = Matrix::Zero(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c)
        if (on_pattern(r, c))
          current(r, c) = complex(normal(rng), normal(rng));

    report.restarts_used = restart + 1;
    for (std::size_t iter = 1; iter <= options.max_iters; ++iter) {
      current = polar_factor(current);
      double smallest = std::numeric_limits<double>::infinity();
      for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) {
          if (on_pattern(r, c))
            smallest = std::min(smallest, std::abs(current(r, c)));
          else
            current(r, c) = 0.0;
        }

      auto candidate = to_complex_matrix(current);
      report.iterations = iter;
      report.residual = unitarity_residual(candidate);
      report.min_support = std::isinf(smallest) ? 0.0 : smallest;
      if (report.residual <= options.tol && smallest >= options.support_floor) {
        report.status = SearchStatus::found;
        report.matrix = std::move(candidate);
        return report;
      }
    }
  }
  return report;
}

} // namespace cayline
