#ifndef CAYLINE_UNITARY_HPP
#define CAYLINE_UNITARY_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cayline/digraph.hpp"

namespace cayline {

using complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
  explicit ComplexMatrix(std::size_t n = 0) : n_(n), entries_(n * n) {}
  ComplexMatrix(std::size_t n, std::vector<complex> entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t dimension() const noexcept { return n_; }
  complex &operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const complex &operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  std::span<const complex> entries() const noexcept { return entries_; }

  friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

private:
  std::size_t n_;
  std::vector<complex> entries_;
};

inline constexpr double synthesis_tolerance = 1e-10;
inline constexpr double search_tolerance = 1e-8;
inline constexpr double default_pattern_tolerance = 1e-12;

/// Unitary DFT of size d: entry (j,k) = exp(2 pi i jk / d) / sqrt(d).
ComplexMatrix dft_matrix(std::size_t d);

/// Max-norm of M^H M - I.
double unitarity_residual(const ComplexMatrix &m);
bool is_unitary(const ComplexMatrix &m, double tol);

/// Digraph with arc (u,v) iff |M(u,v)| > tol.
Digraph pattern_of(const ComplexMatrix &m, double tol = default_pattern_tolerance);

/// Unitary with zero pattern equal to d: a DFT of size deg(d) written into
/// every all-ones block. Throws not_regular / not_line_digraph / multi_arc.
ComplexMatrix synthesize_unitary(const Digraph &d);

struct SearchOptions {
  std::size_t max_iters = 5000;
  std::size_t restarts = 20;
  double tol = search_tolerance;
  std::uint64_t seed = 1;
  /// On-pattern entries smaller than this disqualify a candidate.
  double support_floor = 1e-6;
};

enum class SearchStatus { found, not_found };

struct SearchReport {
  SearchStatus status = SearchStatus::not_found;
  std::optional<ComplexMatrix> matrix;
  std::size_t iterations = 0;   // in the successful (or last) restart
  std::size_t restarts_used = 0;
  double residual = 0.0;
  /// Smallest on-pattern magnitude of the reported iterate.
  double min_support = 0.0;
  std::uint64_t seed = 0;
};

/// Alternating projections between the unitary group (polar factor) and the
/// matrices supported on the pattern. A not_found report is inconclusive.
SearchReport search_unitary_with_pattern(const Digraph &pattern, const SearchOptions &options = {});

} // namespace cayline

#endif
