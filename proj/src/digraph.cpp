#include "cayline/digraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cayline/error.hpp"

namespace cayline {

Digraph::Digraph(std::size_t n) : n_(n), mult_(n * n, 0) {}

Digraph::Digraph(std::size_t n, std::vector<multiplicity> mult, std::vector<std::string> labels)
    : n_(n), mult_(std::move(mult)) {
  if (mult_.size() != n * n)
    throw Error(ErrorCode::invalid_argument, "multiplicity matrix must be n x n");
  set_labels(std::move(labels));
}

std::size_t Digraph::arc_count() const noexcept {
  return std::accumulate(mult_.begin(), mult_.end(), std::size_t{0});
}

std::size_t Digraph::out_degree(std::size_t u) const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < n_; ++v)
    total += (*this)(u, v);
  return total;
}

std::size_t Digraph::in_degree(std::size_t v) const {
  std::size_t total = 0;
  for (std::size_t u = 0; u < n_; ++u)
    total += (*this)(u, v);
  return total;
}

bool Digraph::is_simple() const noexcept {
  for (auto m : mult_)
    if (m > 1)
      return false;
  return true;
}

void Digraph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_)
    throw Error(ErrorCode::invalid_argument, "expected one label per vertex");
  labels_ = std::move(labels);
}

std::string Digraph::label(std::size_t v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

ArcLabeling enumerate_arcs(const Digraph &d) {
  ArcLabeling result;
  result.arcs.reserve(d.arc_count());
  for (std::size_t u = 0; u < d.vertex_count(); ++u)
    for (std::size_t v = 0; v < d.vertex_count(); ++v)
      for (std::size_t c = 0; c < d(u, v); ++c)
        result.arcs.push_back({u, v, c});
  return result;
}

CayleyDigraph cayley_digraph(const Group &group, const ElementSet &connection_set) {
  if (!group.same_as(connection_set.group()))
    throw Error(ErrorCode::invalid_argument, "connection set belongs to a different group");
  if (connection_set.empty())
    throw Error(ErrorCode::invalid_argument, "connection set is empty");

  const auto n = group.order();
  Digraph d(n);
  for (std::size_t g = 0; g < n; ++g)
    for (auto s : connection_set.indices())
      d.set(g, group.multiply(g, s), 1);

  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t g = 0; g < n; ++g)
    labels.push_back(group.name(g));
  d.set_labels(std::move(labels));

  return {std::move(d), generates(group, connection_set)};
}

LineDigraph line_digraph(const Digraph &d) {
  auto arcs = enumerate_arcs(d);
  const auto m = arcs.arcs.size();

  // Arcs leaving each vertex, as positions in the enumeration.
  std::vector<std::vector<std::size_t>> leaving(d.vertex_count());
  for (std::size_t i = 0; i < m; ++i)
    leaving[arcs.arcs[i].source].push_back(i);

  Digraph line(m);
  for (std::size_t i = 0; i < m; ++i)
    for (auto j : leaving[arcs.arcs[i].target])
      line.set(i, j, 1);

  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto &arc : arcs.arcs) {
    auto text = "(" + d.label(arc.source) + "," + d.label(arc.target) + ")";
    if (d(arc.source, arc.target) > 1)
      text += "#" + std::to_string(arc.copy);
    labels.push_back(std::move(text));
  }
  line.set_labels(std::move(labels));
  return {std::move(line), std::move(arcs)};
}

std::optional<std::size_t> is_regular(const Digraph &d) {
  if (d.vertex_count() == 0)
    return std::nullopt;
  const auto degree = d.out_degree(0);
  for (std::size_t v = 0; v < d.vertex_count(); ++v)
    if (d.out_degree(v) != degree || d.in_degree(v) != degree)
      return std::nullopt;
  return degree;
}

Digraph pnk_digraph(std::size_t n, std::size_t k) {
  if (k < 1 || n < 2 || k > n - 1)
    throw Error(ErrorCode::invalid_argument,
                "P(n,k) requires 1 <= k <= n-1, got n=" + std::to_string(n) +
                    " k=" + std::to_string(k));

  // Injective k-tuples in lexicographic order.
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> current;
  std::vector<bool> used(n + 1, false);
  auto extend = [&](auto &self) -> void {
    if (current.size() == k) {
      tuples.push_back(current);
      return;
    }
    for (std::size_t i = 1; i <= n; ++i) {
      if (used[i])
        continue;
      used[i] = true;
      current.push_back(i);
      self(self);
      current.pop_back();
      used[i] = false;
    }
  };
  extend(extend);

  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t t = 0; t < tuples.size(); ++t)
    index.emplace(tuples[t], t);

  Digraph d(tuples.size());
  std::vector<std::string> labels;
  labels.reserve(tuples.size());
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto &tuple = tuples[t];
    std::vector<std::size_t> shifted(tuple.begin() + 1, tuple.end());
    shifted.push_back(0);
    for (std::size_t i = 1; i <= n; ++i) {
      if (std::find(tuple.begin(), tuple.end(), i) != tuple.end())
        continue;
      shifted.back() = i;
      d.set(t, index.at(shifted), 1);
    }

    std::string text = "[";
    for (std::size_t j = 0; j < tuple.size(); ++j)
      text += (j ? "," : "") + std::to_string(tuple[j]);
    labels.push_back(text + "]");
  }
  d.set_labels(std::move(labels));
  return d;
}

std::vector<Digraph::multiplicity> adjacency_matrix(const Digraph &d) {
  return {d.matrix().begin(), d.matrix().end()};
}

} // namespace cayline
