#include <algorithm>
#include <map>
#include <tuple>

#include "cayline/digraph.hpp"

namespace cayline {

namespace {

using Signature = std::vector<std::uint64_t>;

// Joint colour refinement over both digraphs so colour ids are comparable.
// Initial colours are (out-degree, in-degree, loop count); each round appends
// the sorted (colour, multiplicity) multisets of out- and in-neighbours.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
refine_colours(const Digraph &a, const Digraph &b) {
  const auto n = a.vertex_count();
  std::vector<std::size_t> ca(n), cb(n);

  auto assign = [](std::map<Signature, std::size_t> &ids, const Signature &sig) {
    return ids.emplace(sig, ids.size()).first->second;
  };

  {
    std::map<Signature, std::size_t> ids;
    for (std::size_t v = 0; v < n; ++v) {
      ca[v] = assign(ids, {a.out_degree(v), a.in_degree(v), a(v, v)});
      cb[v] = assign(ids, {b.out_degree(v), b.in_degree(v), b(v, v)});
    }
  }

  auto signature = [n](const Digraph &d, const std::vector<std::size_t> &colour,
                       std::size_t v) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out, in;
    for (std::size_t w = 0; w < n; ++w) {
      if (d(v, w))
        out.emplace_back(colour[w], d(v, w));
      if (d(w, v))
        in.emplace_back(colour[w], d(w, v));
    }
    std::sort(out.begin(), out.end());
    std::sort(in.begin(), in.end());
    Signature sig{colour[v], out.size()};
    for (auto [c, m] : out) {
      sig.push_back(c);
      sig.push_back(m);
    }
    sig.push_back(in.size());
    for (auto [c, m] : in) {
      sig.push_back(c);
      sig.push_back(m);
    }
    return sig;
  };

  std::size_t classes = 0;
  for (std::size_t round = 0; round < n; ++round) {
    std::map<Signature, std::size_t> ids;
    std::vector<std::size_t> na(n), nb(n);
    for (std::size_t v = 0; v < n; ++v) {
      na[v] = assign(ids, signature(a, ca, v));
      nb[v] = assign(ids, signature(b, cb, v));
    }
    ca = std::move(na);
    cb = std::move(nb);
    if (ids.size() == classes)
      break;
    classes = ids.size();
  }
  return {std::move(ca), std::move(cb)};
}

class Matcher {
public:
  Matcher(const Digraph &a, const Digraph &b, std::vector<std::size_t> ca,
          std::vector<std::size_t> cb, std::uint64_t limit)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)), limit_(limit),
        n_(a.vertex_count()), map_(n_, npos), used_(n_, false) {
    plan_order();
  }

  IsomorphismStatus run() {
    if (extend(0))
      return IsomorphismStatus::isomorphic;
    return aborted_ ? IsomorphismStatus::undecided : IsomorphismStatus::not_isomorphic;
  }

  const std::vector<std::size_t> &mapping() const { return map_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Greedy order: rarest colour first, then the vertex most connected to the
  // already ordered prefix. anchor_[p] is an earlier neighbour of order_[p].
  void plan_order() {
    std::map<std::size_t, std::size_t> class_size;
    for (auto c : ca_)
      ++class_size[c];

    std::vector<bool> placed(n_, false);
    std::vector<std::size_t> links(n_, 0);
    for (std::size_t step = 0; step < n_; ++step) {
      std::size_t best = npos;
      for (std::size_t v = 0; v < n_; ++v) {
        if (placed[v])
          continue;
        if (best == npos ||
            std::make_tuple(links[v], -static_cast<long>(class_size[ca_[v]])) >
                std::make_tuple(links[best], -static_cast<long>(class_size[ca_[best]])))
          best = v;
      }
      std::size_t anchor = npos;
      bool anchor_is_source = false;
      for (auto w : order_) {
        if (a_(w, best)) {
          anchor = w;
          anchor_is_source = true;
          break;
        }
        if (a_(best, w)) {
          anchor = w;
          break;
        }
      }
      order_.push_back(best);
      anchor_.push_back(anchor);
      anchor_is_source_.push_back(anchor_is_source);
      placed[best] = true;
      for (std::size_t v = 0; v < n_; ++v)
        if (!placed[v] && (a_(best, v) || a_(v, best)))
          ++links[v];
    }
  }

  bool consistent(std::size_t u, std::size_t c, std::size_t depth) const {
    if (ca_[u] != cb_[c] || a_(u, u) != b_(c, c))
      return false;
    for (std::size_t p = 0; p < depth; ++p) {
      auto w = order_[p];
      auto image = map_[w];
      if (a_(u, w) != b_(c, image) || a_(w, u) != b_(image, c))
        return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == n_)
      return true;
    if (++nodes_ > limit_) {
      aborted_ = true;
      return false;
    }

    const auto u = order_[depth];
    const auto anchor = anchor_[depth];
    for (std::size_t c = 0; c < n_; ++c) {
      if (used_[c])
        continue;
      if (anchor != npos) {
        auto image = map_[anchor];
        if (anchor_is_source_[depth] ? !b_(image, c) : !b_(c, image))
          continue;
      }
      if (!consistent(u, c, depth))
        continue;
      map_[u] = c;
      used_[c] = true;
      if (extend(depth + 1))
        return true;
      used_[c] = false;
      map_[u] = npos;
      if (aborted_)
        return false;
    }
    return false;
  }

  const Digraph &a_;
  const Digraph &b_;
  std::vector<std::size_t> ca_, cb_;
  std::uint64_t limit_;
  std::size_t n_;
  std::vector<std::size_t> order_, anchor_;
  std::vector<bool> anchor_is_source_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

} // namespace

IsomorphismResult are_isomorphic(const Digraph &a, const Digraph &b, std::uint64_t node_limit) {
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count())
    return {IsomorphismStatus::not_isomorphic, {}, 0};
  if (a.vertex_count() == 0)
    return {IsomorphismStatus::isomorphic, {}, 0};

  auto [ca, cb] = refine_colours(a, b);
  auto histogram = [](std::vector<std::size_t> colours) {
    std::sort(colours.begin(), colours.end());
    return colours;
  };
  if (histogram(ca) != histogram(cb))
    return {IsomorphismStatus::not_isomorphic, {}, 0};

  Matcher matcher(a, b, std::move(ca), std::move(cb), node_limit);
  auto status = matcher.run();
  IsomorphismResult result{status, {}, matcher.nodes()};
  if (status == IsomorphismStatus::isomorphic)
    result.mapping = matcher.mapping();
  return result;
}

bool verify_isomorphism(const Digraph &a, const Digraph &b, std::span<const std::size_t> mapping) {
  const auto n = a.vertex_count();
  if (b.vertex_count() != n || mapping.size() != n)
    return false;
  std::vector<bool> hit(n, false);
  for (auto image : mapping) {
    if (image >= n || hit[image])
      return false;
    hit[image] = true;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (a(u, v) != b(mapping[u], mapping[v]))
        return false;
  return true;
}

} // namespace cayline
