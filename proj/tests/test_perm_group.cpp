#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "cayline/constructions.hpp"
#include "cayline/error.hpp"
#include "cayline/perm_group.hpp"

using namespace cayline;

namespace {

Permutation P(const char *text, std::size_t degree) { return parse_permutation(text, degree); }

std::vector<Permutation::point_type> images_of(const Permutation &p) {
  return {p.images().begin(), p.images().end()};
}

Permutation random_permutation(std::mt19937_64 &rng, std::size_t degree) {
  std::vector<Permutation::point_type> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

ErrorCode code_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::internal;
}

} // namespace

TEST_CASE("parse_permutation") {
  // 1-based points in, 0-based image table out: (1 2 3) on 4 points.
  CHECK(images_of(P("(1 2 3)", 4)) == std::vector<Permutation::point_type>{1, 2, 0, 3});
  CHECK(P("e", 3) == Permutation::identity(3));
  CHECK(P("(1 2)(3 4)", 4).to_cycles() == "(1 2)(3 4)");
  CHECK(P(" (2 3) ", 3) == P("(2 3)", 3));

  SUBCASE("rejects non-disjoint cycles") {
    try {
      P("(1 2)(2 3)", 3);
      FAIL("accepted repeated point");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::parse);
      CHECK(std::string(e.what()).find("repeated point 2") != std::string::npos);
    }
  }
  SUBCASE("rejects bad syntax and range") {
    CHECK(code_of([] { P("(1 5)", 4); }) == ErrorCode::parse);
    CHECK(code_of([] { P("(0 1)", 4); }) == ErrorCode::parse);
    CHECK(code_of([] { P("(1 2", 4); }) == ErrorCode::parse);
    CHECK(code_of([] { P("1 2)", 4); }) == ErrorCode::parse);
    CHECK(code_of([] { P("()", 4); }) == ErrorCode::parse);
    CHECK(code_of([] { P("(1,2)", 4); }) == ErrorCode::parse);
    CHECK(code_of([] { P("", 4); }) == ErrorCode::parse);
  }
}

TEST_CASE("compose applies the right operand first") {
  CHECK(compose(P("(1 2)", 3), P("(2 3)", 3)) == P("(1 2 3)", 3));
  CHECK(compose(P("(1 2)", 3), P("(1 2 3)", 3)) == P("(2 3)", 3));
  // The identity (1 2)(2 3 ... n) = (1 2 ... n) for larger n.
  for (std::size_t n = 3; n <= 8; ++n) {
    std::string tail = "(", full = "(";
    for (std::size_t p = 2; p <= n; ++p)
      tail += (p > 2 ? " " : "") + std::to_string(p);
    for (std::size_t p = 1; p <= n; ++p)
      full += (p > 1 ? " " : "") + std::to_string(p);
    CHECK(compose(P("(1 2)", n), P((tail + ")").c_str(), n)) == P((full + ")").c_str(), n));
  }
  CHECK(code_of([] { compose(P("(1 2)", 2), P("(1 2)", 3)); }) == ErrorCode::degree_mismatch);
}

TEST_CASE("inverse") {
  CHECK(inverse(P("(1 2 3)", 3)) == P("(1 3 2)", 3));
  CHECK(inverse(P("(1 2)", 3)) == P("(1 2)", 3));
  CHECK(inverse(Permutation::identity(5)) == Permutation::identity(5));
}

TEST_CASE("composition is associative and inverse cancels (random)") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t degree = 1 + trial % 9;
    auto p = random_permutation(rng, degree);
    auto q = random_permutation(rng, degree);
    auto r = random_permutation(rng, degree);
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(parse_permutation(p.to_cycles(), degree) == p);
  }
}

TEST_CASE("generate_group") {
  std::vector<Permutation> s3{P("(1 2)", 3), P("(1 2 3)", 3)};
  auto g = generate_group(s3);
  CHECK(g.order() == 6);
  CHECK(g.element(0).is_identity());
  // BFS layer 1 is the generators in input order.
  CHECK(g.element(1) == s3[0]);
  CHECK(g.element(2) == s3[1]);

  std::vector<Permutation> c3{P("(1 2 3)", 3)};
  CHECK(generate_group(c3).order() == 3);
  std::vector<Permutation> trivial{Permutation::identity(3)};
  CHECK(generate_group(trivial).order() == 1);

  std::vector<Permutation> mixed{P("(1 2)", 2), P("(1 2)", 3)};
  CHECK(code_of([&] { generate_group(mixed); }) == ErrorCode::degree_mismatch);
  CHECK(code_of([] { generate_group(std::vector<Permutation>{}); }) ==
        ErrorCode::invalid_argument);

  std::vector<Permutation> s5{P("(1 2)", 5), P("(1 2 3 4 5)", 5)};
  CHECK(code_of([&] { generate_group(s5, 100); }) == ErrorCode::cap_exceeded);
  CHECK(generate_group(s5).order() == 120);
}

TEST_CASE("generate_group is idempotent on its own element list") {
  for (const auto *spec : {"S:4", "D:5", "A:4", "Z:6", "Z2xZ2"}) {
    auto c = catalog_group(spec);
    std::vector<Permutation> all(c.group.elements().begin(), c.group.elements().end());
    auto again = generate_group(all);
    CHECK(again.order() == c.group.order());
    for (const auto &p : all)
      CHECK(again.find(p) != Group::npos);
  }
}

TEST_CASE("element_order and Lagrange over the catalog") {
  auto s4 = catalog_group("S:4");
  auto h = s4.group.multiply(s4.group.inverse_of(s4.resolve("(1 2)")), s4.resolve("(1 2 3 4)"));
  CHECK(s4.group.element(h) == P("(2 3 4)", 4));
  CHECK(element_order(s4.group, h) == 3);
  CHECK(element_order(s4.group, 0) == 1);
  CHECK(element_order(s4.group, s4.resolve("(1 2 3)")) == 3);

  for (const auto &c : catalog_up_to_order(24)) {
    const auto &g = c.group;
    for (std::size_t x = 0; x < g.order(); ++x) {
      CHECK(g.multiply(x, g.inverse_of(x)) == 0);
      CHECK(g.order() % element_order(g, x) == 0);
    }
  }
}

TEST_CASE("cyclic_subgroup") {
  auto s3 = catalog_group("S:3");
  auto c = cyclic_subgroup(s3.group, s3.resolve("(2 3)"));
  CHECK(c == ElementSet(s3.group, {0, s3.resolve("(2 3)")}));
  CHECK(cyclic_subgroup(s3.group, 0) == ElementSet(s3.group, {0}));

  auto z6 = catalog_group("Z:6");
  CHECK(cyclic_subgroup(z6.group, z6.resolve("1")).size() == 6);

  for (const auto &cat : catalog_up_to_order(24))
    for (std::size_t x = 0; x < cat.group.order(); ++x) {
      auto sub = cyclic_subgroup(cat.group, x);
      CHECK(is_subgroup(cat.group, sub));
      CHECK(sub.size() == element_order(cat.group, x));
    }
}

TEST_CASE("left_coset") {
  auto s3 = catalog_group("S:3");
  const auto &g = s3.group;
  ElementSet h(g, {0, s3.resolve("(2 3)")});
  CHECK(left_coset(g, s3.resolve("(1 2)"), h) ==
        ElementSet(g, {s3.resolve("(1 2)"), s3.resolve("(1 2 3)")}));
  CHECK(left_coset(g, 0, h) == h);
  CHECK(left_coset(g, 4, ElementSet(g, {0})) == ElementSet(g, {4}));

  std::mt19937_64 rng(3);
  auto s4 = catalog_group("S:4");
  std::uniform_int_distribution<std::size_t> pick(0, s4.group.order() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::size_t> members(1 + trial % 7);
    for (auto &m : members)
      m = pick(rng);
    ElementSet subset(s4.group, members);
    CHECK(left_coset(s4.group, pick(rng), subset).size() == subset.size());
  }
}

TEST_CASE("is_subgroup") {
  auto s3 = catalog_group("S:3");
  CHECK(is_subgroup(s3.group, ElementSet(s3.group, {0, s3.resolve("(2 3)")})));
  CHECK_FALSE(is_subgroup(s3.group, ElementSet(s3.group, {s3.resolve("(1 2)"), s3.resolve("(1 2 3)")})));
  CHECK_FALSE(is_subgroup(s3.group, ElementSet(s3.group, {})));

  // {(0,0), (1,0), (0,1)} misses (1,1) = (1,0) + (0,1).
  auto k = catalog_group("Z2xZ2");
  CHECK_FALSE(is_subgroup(k.group, k.generator_set()));
}

TEST_CASE("generates") {
  auto s3 = catalog_group("S:3");
  const auto &g = s3.group;
  CHECK(generates(g, ElementSet(g, {s3.resolve("(1 2)"), s3.resolve("(1 2 3)")})));
  CHECK_FALSE(generates(g, ElementSet(g, {s3.resolve("(1 2 3)")})));
  auto t = left_coset(g, s3.resolve("(1 2)"), cyclic_subgroup(g, s3.resolve("(2 3)")));
  CHECK(generates(g, t));
}

TEST_CASE("inverse_set") {
  for (std::size_t n = 3; n <= 6; ++n) {
    auto sn = catalog_group("S:" + std::to_string(n));
    std::string reversed = "(1";
    for (std::size_t p = n; p >= 2; --p)
      reversed += " " + std::to_string(p);
    reversed += ")";
    CHECK(inverse_set(sn.group, sn.generator_set()) ==
          ElementSet(sn.group, {sn.resolve("(1 2)"), sn.resolve(reversed)}));
  }
  auto d4 = catalog_group("D:4");
  auto sub = cyclic_subgroup(d4.group, d4.resolve("r"));
  CHECK(inverse_set(d4.group, sub) == sub);
  CHECK(inverse_set(d4.group, ElementSet(d4.group, {0})) == ElementSet(d4.group, {0}));
}

TEST_CASE("element sets from different groups are rejected") {
  auto a = catalog_group("S:3");
  auto b = catalog_group("S:3");
  CHECK(code_of([&] { is_subgroup(a.group, b.generator_set()); }) == ErrorCode::invalid_argument);
  CHECK(code_of([&] { ElementSet(a.group, {99}); }) == ErrorCode::invalid_argument);
}
