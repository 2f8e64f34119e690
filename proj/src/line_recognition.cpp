#include "cayline/line_recognition.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cayline/error.hpp"

namespace cayline {

namespace {

std::uint32_t entry(const Digraph &d, Axis axis, std::size_t line, std::size_t pos) {
  return axis == Axis::row ? d(line, pos) : d(pos, line);
}

std::optional<RichardsWitness> scan(const Digraph &d, Axis axis) {
  const auto n = d.vertex_count();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::optional<std::size_t> shared, differing;
      for (std::size_t k = 0; k < n; ++k) {
        auto x = entry(d, axis, i, k);
        auto y = entry(d, axis, j, k);
        if (x && y && !shared)
          shared = k;
        if (x != y && !differing)
          differing = k;
      }
      if (shared && differing)
        return RichardsWitness{axis, i, j, *shared, *differing};
    }
  return std::nullopt;
}

} // namespace

RichardsVerdict richards_test(const Digraph &d) {
  if (!d.is_simple())
    throw Error(ErrorCode::multi_arc,
                "Richards test needs a 0/1 adjacency matrix; digraph has parallel arcs");
  if (auto w = scan(d, Axis::row))
    return {w};
  return {scan(d, Axis::column)};
}

bool witness_holds(const Digraph &d, const RichardsWitness &w) {
  const auto n = d.vertex_count();
  if (w.first >= n || w.second >= n || w.shared >= n || w.differing >= n ||
      w.first == w.second)
    return false;
  return entry(d, w.axis, w.first, w.shared) && entry(d, w.axis, w.second, w.shared) &&
         entry(d, w.axis, w.first, w.differing) != entry(d, w.axis, w.second, w.differing);
}

LineBlocks block_decomposition(const Digraph &d) {
  const auto n = d.vertex_count();
  auto degree = is_regular(d);
  if (!degree || *degree == 0)
    throw Error(ErrorCode::not_regular, "digraph is not regular of positive degree");
  auto verdict = richards_test(d);
  if (!verdict.pass()) {
    const auto &w = *verdict.witness;
    throw Error(ErrorCode::not_line_digraph,
                std::string(w.axis == Axis::row ? "rows " : "columns ") +
                    std::to_string(w.first) + " and " + std::to_string(w.second) +
                    " are neither identical nor orthogonal");
  }

  // Rows grouped by exact equality, keyed by their support.
  std::map<std::vector<std::size_t>, std::size_t> by_support;
  LineBlocks result;
  result.degree = *degree;
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<std::size_t> support;
    for (std::size_t v = 0; v < n; ++v)
      if (d(u, v))
        support.push_back(v);
    auto [it, inserted] = by_support.emplace(support, result.blocks.size());
    if (inserted)
      result.blocks.push_back({{}, std::move(support)});
    result.blocks[it->second].rows.push_back(u);
  }

  for (const auto &block : result.blocks) {
    if (block.rows.size() != *degree || block.cols.size() != *degree)
      throw Error(ErrorCode::internal, "row class of row " + std::to_string(block.rows.front()) +
                                           " is not a d x d block");
    // Each column of the block must have its ones exactly on the row class.
    for (auto v : block.cols)
      for (std::size_t u = 0; u < n; ++u) {
        bool inside = std::binary_search(block.rows.begin(), block.rows.end(), u);
        if ((d(u, v) != 0) != inside)
          throw Error(ErrorCode::internal,
                      "column " + std::to_string(v) + " leaks outside its block");
      }
  }
  return result;
}

Digraph reassemble(const LineBlocks &blocks, std::size_t n) {
  Digraph d(n);
  for (const auto &block : blocks.blocks)
    for (auto u : block.rows)
      for (auto v : block.cols)
        d.set(u, v, 1);
  return d;
}

} // namespace cayline
