#ifndef CAYLINE_DIGRAPH_HPP
#define CAYLINE_DIGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cayline/perm_group.hpp"

namespace cayline {

/// Finite multidigraph stored as a dense arc-multiplicity matrix.
class Digraph {
public:
  using multiplicity = std::uint32_t;

  explicit Digraph(std::size_t n = 0);
  Digraph(std::size_t n, std::vector<multiplicity> mult, std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t arc_count() const noexcept;

  multiplicity operator()(std::size_t u, std::size_t v) const { return mult_[u * n_ + v]; }
  void set(std::size_t u, std::size_t v, multiplicity m) { mult_[u * n_ + v] = m; }
  void add_arc(std::size_t u, std::size_t v, multiplicity m = 1) { mult_[u * n_ + v] += m; }

  std::size_t out_degree(std::size_t u) const;
  std::size_t in_degree(std::size_t v) const;
  bool is_simple() const noexcept;

  /// Row-major multiplicity matrix.
  std::span<const multiplicity> matrix() const noexcept { return mult_; }
  std::span<const multiplicity> row(std::size_t u) const {
    return std::span<const multiplicity>(mult_).subspan(u * n_, n_);
  }

  /// Empty when no labels were assigned.
  const std::vector<std::string> &labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);
  /// Label of v, or its decimal index when unlabeled.
  std::string label(std::size_t v) const;

  /// Multiplicity-matrix equality; labels are ignored.
  bool same_arcs(const Digraph &other) const noexcept {
    return n_ == other.n_ && mult_ == other.mult_;
  }

private:
  std::size_t n_;
  std::vector<multiplicity> mult_;
  std::vector<std::string> labels_;
};

struct Arc {
  std::size_t source;
  std::size_t target;
  std::size_t copy;

  friend bool operator==(const Arc &, const Arc &) = default;
};

/// Arcs of a digraph enumerated row-major by source, target, copy index.
struct ArcLabeling {
  std::vector<Arc> arcs;
};

ArcLabeling enumerate_arcs(const Digraph &d);

struct CayleyDigraph {
  Digraph digraph;
  /// False when S does not generate the group; the digraph is still built.
  bool generating;
};

CayleyDigraph cayley_digraph(const Group &group, const ElementSet &connection_set);

struct LineDigraph {
  Digraph digraph;
  ArcLabeling arcs;
};

LineDigraph line_digraph(const Digraph &d);

/// Common in/out degree counting multiplicity, or nullopt.
std::optional<std::size_t> is_regular(const Digraph &d);

/// Digraph on injective k-tuples over {1..n}; tuple (i1..ik) -> (i2..ik i).
Digraph pnk_digraph(std::size_t n, std::size_t k);

std::vector<Digraph::multiplicity> adjacency_matrix(const Digraph &d);

inline constexpr std::uint64_t default_isomorphism_node_limit = 10'000'000;

enum class IsomorphismStatus { isomorphic, not_isomorphic, undecided };

struct IsomorphismResult {
  IsomorphismStatus status;
  /// mapping[u] = image of u in the second digraph; set only when isomorphic.
  std::vector<std::size_t> mapping;
  std::uint64_t nodes = 0;
};

/// Backtracking search seeded by colour refinement on degree invariants.
IsomorphismResult are_isomorphic(const Digraph &a, const Digraph &b,
                                 std::uint64_t node_limit = default_isomorphism_node_limit);

/// Entry-by-entry check that `mapping` carries a onto b.
bool verify_isomorphism(const Digraph &a, const Digraph &b,
                        std::span<const std::size_t> mapping);

} // namespace cayline

#endif
