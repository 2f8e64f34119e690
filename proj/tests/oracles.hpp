// Brute-force reference computations used only by the tests. Nothing here
// calls the library routine it is used to check.
#ifndef CAYLINE_TESTS_ORACLES_HPP
#define CAYLINE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <tuple>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<unsigned>>;

struct ArcListDigraph {
  std::size_t n = 0;
  // One entry per arc; parallel arcs appear repeatedly.
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
};

inline ArcListDigraph random_multidigraph(std::mt19937_64 &rng, std::size_t max_vertices,
                                          unsigned max_mult) {
  std::uniform_int_distribution<std::size_t> vertices(1, max_vertices);
  std::uniform_int_distribution<unsigned> mult(0, max_mult);
  ArcListDigraph d;
  d.n = vertices(rng);
  for (std::size_t u = 0; u < d.n; ++u)
    for (std::size_t v = 0; v < d.n; ++v)
      for (unsigned m = mult(rng); m > 0; --m)
        d.arcs.emplace_back(u, v);
  return d;
}

// Line digraph straight from the definition: arcs a = (u,v), b = (w,z) are
// adjacent iff v == w. Arcs are numbered in sorted (source, target) order,
// parallel copies consecutively.
inline Matrix line_digraph(ArcListDigraph d) {
  std::stable_sort(d.arcs.begin(), d.arcs.end());
  const auto m = d.arcs.size();
  Matrix out(m, std::vector<unsigned>(m, 0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (d.arcs[a].second == d.arcs[b].first)
        out[a][b] = 1;
  return out;
}

inline Matrix to_matrix(const ArcListDigraph &d) {
  Matrix out(d.n, std::vector<unsigned>(d.n, 0));
  for (auto [u, v] : d.arcs)
    ++out[u][v];
  return out;
}

// Exhaustive isomorphism over all n! bijections. Only for tiny n.
inline bool isomorphic_bruteforce(const Matrix &a, const Matrix &b) {
  if (a.size() != b.size())
    return false;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t u = 0; u < a.size() && ok; ++u)
      for (std::size_t v = 0; v < a.size() && ok; ++v)
        ok = a[u][v] == b[perm[u]][perm[v]];
    if (ok)
      return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Injective k-tuples over {1..n} by plain nested enumeration of all n^k words.
inline std::vector<std::vector<std::size_t>> injective_tuples(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> word(k, 1);
  for (;;) {
    std::vector<std::size_t> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
      out.push_back(word);
    std::size_t i = k;
    while (i > 0 && word[i - 1] == n)
      word[--i] = 1;
    if (i == 0)
      break;
    ++word[i - 1];
  }
  return out;
}

// Residue arithmetic for Z_n used to check cyclic-group results.
inline std::size_t mod_add(std::size_t a, std::size_t b, std::size_t n) { return (a + b) % n; }

} // namespace oracle

#endif
