#include <doctest.h>

#include <cmath>
#include <random>

#include "cayline/error.hpp"
#include "cayline/serialize.hpp"
#include "oracles.hpp"

using namespace cayline;

namespace {

ErrorCode code_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::internal;
}

std::size_t count_edges(const std::string &dot) {
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find(" -> ", pos)) != std::string::npos; ++pos)
    ++edges;
  return edges;
}

} // namespace

TEST_CASE("digraph JSON round trip") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    auto ref = oracle::to_matrix(oracle::random_multidigraph(rng, 6, 3));
    Digraph d(ref.size());
    for (std::size_t u = 0; u < ref.size(); ++u)
      for (std::size_t v = 0; v < ref.size(); ++v)
        d.set(u, v, ref[u][v]);
    auto back = digraph_from_json(json::parse(to_json(d).dump()));
    CHECK(back.same_arcs(d));
  }
  auto c = catalog_group("D:3");
  auto d = cayley_digraph(c.group, c.generator_set()).digraph;
  auto back = digraph_from_json(to_json(d));
  CHECK(back.labels() == d.labels());
}

TEST_CASE("digraph JSON sums duplicate arcs") {
  auto d = digraph_from_json(json::parse(R"({"n":2,"arcs":[[0,1,1],[0,1,2],[1,0,1]]})"));
  CHECK(d(0, 1) == 3);
  CHECK(d(1, 0) == 1);
}

TEST_CASE("malformed digraph JSON") {
  for (const auto *text : {R"({})", R"({"n":-1,"arcs":[]})", R"({"n":2,"arcs":[[0,2,1]]})",
                           R"({"n":2,"arcs":[[0]]})", R"({"n":2,"arcs":[[1,0]]})", R"({"n":2,"arcs":"x"})",
                           R"({"n":2,"arcs":[],"labels":["a"]})", R"([1,2])"})
    CHECK(code_of([&] { digraph_from_json(json::parse(text)); }) == ErrorCode::parse);
}

TEST_CASE("matrix JSON round trip is bit-exact") {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> normal;
  for (std::size_t n = 1; n <= 6; ++n) {
    ComplexMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        m(r, c) = complex(normal(rng), normal(rng));
    CHECK(matrix_from_json(json::parse(to_json(m).dump())) == m);
  }
  auto f = dft_matrix(7);
  CHECK(matrix_from_json(json::parse(to_json(f).dump())) == f);
}

TEST_CASE("malformed matrix JSON") {
  for (const auto *text : {R"({"n":2,"entries":[[1,0]]})", R"({"n":1,"entries":[[1]]})",
                           R"({"n":1,"entries":[["a",0]]})", R"({"entries":[]})"})
    CHECK(code_of([&] { matrix_from_json(json::parse(text)); }) == ErrorCode::parse);
}

TEST_CASE("DOT edge counts") {
  Digraph c3(3);
  for (std::size_t v = 0; v < 3; ++v)
    c3.set(v, (v + 1) % 3, 1);
  CHECK(count_edges(to_dot(c3)) == 3);

  Digraph c4(4);
  for (std::size_t v = 0; v < 4; ++v) {
    c4.set(v, (v + 1) % 4, 1);
    c4.set((v + 1) % 4, v, 1);
  }
  CHECK(count_edges(to_dot(c4)) == 8);

  Digraph multi(2);
  multi.set(0, 1, 3);
  CHECK(count_edges(to_dot(multi)) == 3);
}

TEST_CASE("to_text") {
  auto text = to_text(ComplexMatrix::identity(2));
  CHECK(text.find('1') != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
}

TEST_CASE("report JSON shapes") {
  auto k = catalog_group("Z2xZ2");
  auto d = cayley_digraph(k.group, k.generator_set()).digraph;
  auto v = to_json(richards_test(d));
  CHECK(v["pass"] == false);
  CHECK(v["witness"]["axis"] == "row");
  CHECK(v["witness"]["pair"] == json::array({0, 1}));

  auto s3 = catalog_group("S:3");
  auto l = to_json(s3.group, two_generator_lineization(s3.group, 1, 2));
  CHECK(l["h"] == "(2 3)");
  CHECK(l["n"] == 2);
  CHECK(l["checks"]["t_generates"] == true);

  auto sr = to_json(search_unitary_with_pattern(d));
  CHECK(sr["status"] == "found");
  CHECK(sr["seed"] == 1);
}
