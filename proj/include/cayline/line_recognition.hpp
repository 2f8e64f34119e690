#ifndef CAYLINE_LINE_RECOGNITION_HPP
#define CAYLINE_LINE_RECOGNITION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cayline/digraph.hpp"

namespace cayline {

enum class Axis { row, column };

/// Two lines of the adjacency matrix that share a support position but are
/// not identical.
struct RichardsWitness {
  Axis axis;
  std::size_t first;
  std::size_t second;
  std::size_t shared;     // a position where both lines are 1
  std::size_t differing;  // a position where exactly one line is 1
};

struct RichardsVerdict {
  std::optional<RichardsWitness> witness;

  bool pass() const noexcept { return !witness.has_value(); }
};

/// Identical-or-orthogonal test on rows, then columns, of a 0/1 adjacency
/// matrix. Throws multi_arc when any multiplicity exceeds 1.
RichardsVerdict richards_test(const Digraph &d);

/// Re-derives the witness claim from the matrix.
bool witness_holds(const Digraph &d, const RichardsWitness &witness);

struct Block {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

struct LineBlocks {
  std::size_t degree = 0;
  std::vector<Block> blocks;
};

/// All-ones d x d blocks of a d-regular digraph passing the Richards test,
/// ordered by least row index.
LineBlocks block_decomposition(const Digraph &d);

/// Adjacency matrix rebuilt from the blocks (ones inside, zeros elsewhere).
Digraph reassemble(const LineBlocks &blocks, std::size_t n);

} // namespace cayline

#endif
