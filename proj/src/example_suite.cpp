#include <string>

#include "cayline/constructions.hpp"
#include "cayline/error.hpp"
#include "cayline/line_recognition.hpp"
#include "cayline/serialize.hpp"

namespace cayline {

namespace {

std::string cycle_text(std::size_t first, std::size_t last) {
  std::string text = "(";
  for (std::size_t p = first; p <= last; ++p)
    text += (p > first ? " " : "") + std::to_string(p);
  return text + ")";
}

// Synthesis succeeds, is unitary at the synthesis tolerance and reproduces
// the digraph exactly.
bool synthesis_closes(const Digraph &d, json &artifacts) {
  auto u = synthesize_unitary(d);
  auto residual = unitarity_residual(u);
  bool pattern_ok = pattern_of(u).same_arcs(d);
  artifacts["residual"] = residual;
  artifacts["pattern_equal"] = pattern_ok;
  return residual <= synthesis_tolerance && pattern_ok;
}

template <class Check>
SuiteItem run_item(std::string id, std::string description, Check check) {
  SuiteItem item{std::move(id), std::move(description), false, json::object()};
  try {
    item.pass = check(item.artifacts);
  } catch (const Error &e) {
    item.pass = false;
    item.artifacts["error"] = e.what();
  }
  return item;
}

} // namespace

SuiteReport example_suite() {
  SuiteReport report;

  // (a) Cyclic groups: every single generator gives a 1-regular line digraph
  // realized by a permutation matrix.
  for (std::size_t n = 1; n <= 12; ++n) {
    report.items.push_back(run_item(
        "a/Z" + std::to_string(n), "Cay(Z_n,{g}) is 1-regular and a line digraph for every generator g",
        [n](json &out) {
          auto z = catalog_group("Z:" + std::to_string(n));
          std::size_t generators = 0;
          for (std::size_t g = 0; g < z.group.order(); ++g) {
            ElementSet s(z.group, {g});
            if (!generates(z.group, s))
              continue;
            ++generators;
            auto cay = cayley_digraph(z.group, s).digraph;
            if (is_regular(cay) != std::optional<std::size_t>{1} || !richards_test(cay).pass())
              return false;
            auto u = synthesize_unitary(cay);
            for (const auto &entry : u.entries())
              if (entry != complex(0.0) && entry != complex(1.0))
                return false;
          }
          out["generators"] = generators;
          return generators > 0;
        }));
  }

  // (b) Dihedral groups against the line digraph of the bidirected n-cycle.
  for (std::size_t n = 3; n <= 8; ++n) {
    report.items.push_back(run_item(
        "b/D" + std::to_string(n), "Cay(D_n,{r,s}) passes Richards and is isomorphic to L(Cay(Z_n,{1,-1}))",
        [n](json &out) {
          auto d = catalog_group("D:" + std::to_string(n));
          auto cay = cayley_digraph(d.group, d.generator_set()).digraph;
          auto z = catalog_group("Z:" + std::to_string(n));
          ElementSet pm(z.group, {z.resolve("1"), z.resolve(std::to_string(n - 1))});
          auto line = line_digraph(cayley_digraph(z.group, pm).digraph).digraph;

          bool richards = richards_test(cay).pass();
          auto iso = are_isomorphic(cay, line);
          bool verified = iso.status == IsomorphismStatus::isomorphic &&
                          verify_isomorphism(cay, line, iso.mapping);
          out["vertices"] = cay.vertex_count();
          out["richards"] = richards;
          out["isomorphism"] = to_json(iso);
          bool synth = synthesis_closes(cay, out);
          return richards && verified && synth;
        }));
  }

  // (c) Symmetric groups against the line digraph of P(n, n-2).
  for (std::size_t n = 3; n <= 5; ++n) {
    report.items.push_back(run_item(
        "c/S" + std::to_string(n),
        "Cay(S_n,{(1 2 ... n),(1 2 ... n-1)}) is isomorphic to L(P(n,n-2)) and passes Richards",
        [n](json &out) {
          auto s = catalog_group("S:" + std::to_string(n));
          ElementSet gens(s.group, {s.resolve(cycle_text(1, n)), s.resolve(cycle_text(1, n - 1))});
          auto cay = cayley_digraph(s.group, gens).digraph;
          auto line = line_digraph(pnk_digraph(n, n - 2)).digraph;
          bool richards = richards_test(cay).pass();
          auto iso = are_isomorphic(cay, line);
          bool verified = iso.status == IsomorphismStatus::isomorphic &&
                          verify_isomorphism(cay, line, iso.mapping);
          out["vertices"] = {cay.vertex_count(), line.vertex_count()};
          out["richards"] = richards;
          out["isomorphism"] = to_json(iso);
          return richards && verified;
        }));
  }

  // (d) The coset generating set T = (1 2) C_{n-1} of S_n.
  for (std::size_t n = 3; n <= 5; ++n) {
    report.items.push_back(run_item(
        "d/S" + std::to_string(n), "T = (1 2)C_{n-1} has a subgroup witness at x = (1 2) and passes Richards",
        [n](json &out) {
          auto s = catalog_group("S:" + std::to_string(n));
          const auto &g = s.group;
          auto t12 = s.resolve("(1 2)");
          auto result = two_generator_lineization(g, t12, s.resolve(cycle_text(1, n)));
          auto expected_cyclic = cyclic_subgroup(g, s.resolve(cycle_text(2, n)));
          auto cay = cayley_digraph(g, result.t).digraph;
          bool richards = richards_test(cay).pass();
          out["lineization"] = to_json(g, result);
          out["richards"] = richards;
          return result.checks.all() && result.witness && result.witness->x == t12 &&
                 result.cyclic == expected_cyclic && result.t.size() == n - 1 && richards &&
                 synthesis_closes(cay, out);
        }));
  }

  // (e) Z2 x Z2: a unitary pattern that is not a line digraph.
  report.items.push_back(run_item(
      "e/Z2xZ2", "Z2 x Z2 on three generators fails Richards yet is the pattern of a real orthogonal matrix",
      [](json &out) {
        auto k = catalog_group("Z2xZ2");
        auto cay = cayley_digraph(k.group, k.generator_set()).digraph;
        auto verdict = richards_test(cay);
        auto m = z2z2_orthogonal_matrix();
        auto residual = unitarity_residual(m);
        bool pattern_ok = pattern_of(m, 1e-12).same_arcs(cay);
        out["richards"] = to_json(verdict);
        out["residual"] = residual;
        out["pattern_equal"] = pattern_ok;
        return !verdict.pass() && witness_holds(cay, *verdict.witness) && residual <= 1e-12 &&
               pattern_ok;
      }));

  return report;
}

} // namespace cayline
