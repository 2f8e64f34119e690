#include <charconv>
#include <cmath>

#include "cayline/constructions.hpp"
#include "cayline/error.hpp"

namespace cayline {

namespace {

[[noreturn]] void bad_spec(std::string_view spec, const std::string &why) {
  throw Error(ErrorCode::parse, "bad group spec \"" + std::string(spec) + "\": " + why);
}

std::size_t parse_count(std::string_view spec, std::string_view digits) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
    bad_spec(spec, "expected a decimal size after ':'");
  return value;
}

// Cycle on the 1-based points first..last.
Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t last) {
  std::vector<Permutation::point_type> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<Permutation::point_type>(i);
  for (std::size_t p = first; p < last; ++p)
    images[p - 1] = static_cast<Permutation::point_type>(p);
  if (last > first)
    images[last - 1] = static_cast<Permutation::point_type>(first - 1);
  return Permutation(std::move(images));
}

std::size_t require(const Group &group, const Permutation &p) {
  auto index = group.find(p);
  if (index == Group::npos)
    throw Error(ErrorCode::internal, "catalog generator missing from its own group");
  return index;
}

CatalogGroup cyclic(std::string_view spec, std::size_t n) {
  if (n < 1)
    bad_spec(spec, "cyclic group needs n >= 1");
  auto g = cycle_on(n, 1, n);
  auto group = generate_group(std::span(&g, 1));
  // Elements are g^0, g^1, ... in generation order; name them by exponent.
  std::vector<std::string> names(group.order());
  for (std::size_t k = 0, x = 0; k < group.order(); ++k, x = group.multiply(x, require(group, g)))
    names[x] = std::to_string(k);
  group = group.with_names(std::move(names));
  return {std::string(spec), group, {{"1", require(group, g)}}, true};
}

CatalogGroup dihedral(std::string_view spec, std::size_t n) {
  if (n < 3)
    bad_spec(spec, "dihedral family needs n >= 3 for a faithful action on n points");
  auto r = cycle_on(n, 1, n);
  std::vector<Permutation::point_type> flip(n);
  for (std::size_t i = 0; i < n; ++i)
    flip[i] = static_cast<Permutation::point_type>(n - 1 - i);
  Permutation s(std::move(flip));

  std::vector<Permutation> gens{r, s};
  auto group = generate_group(gens);
  const auto ri = require(group, r), si = require(group, s);

  std::vector<std::string> names(group.order());
  for (std::size_t k = 0; k < n; ++k) {
    auto rk = group.power(ri, k);
    std::string power = k == 0 ? "" : k == 1 ? "r" : "r^" + std::to_string(k);
    names[rk] = k == 0 ? "e" : power;
    names[group.multiply(si, rk)] = "s" + power;
  }
  group = group.with_names(std::move(names));
  return {std::string(spec), group, {{"r", ri}, {"s", si}}, false};
}

CatalogGroup symmetric(std::string_view spec, std::size_t n) {
  if (n < 2)
    bad_spec(spec, "symmetric family needs n >= 2");
  auto t = cycle_on(n, 1, 2);
  auto c = cycle_on(n, 1, n);
  std::vector<Permutation> gens{t, c};
  auto group = generate_group(gens);
  return {std::string(spec), group, {{"s1", require(group, t)}, {"s2", require(group, c)}},
          n <= 2};
}

CatalogGroup alternating(std::string_view spec, std::size_t n) {
  if (n < 3)
    bad_spec(spec, "alternating family needs n >= 3");
  auto a = cycle_on(n, 1, 3);
  auto b = n % 2 == 1 ? cycle_on(n, 1, n) : cycle_on(n, 2, n);
  std::vector<Permutation> gens{a, b};
  auto group = generate_group(gens);
  return {std::string(spec), group, {{"a", require(group, a)}, {"b", require(group, b)}},
          n == 3};
}

CatalogGroup klein(std::string_view spec) {
  // Regular representation: points 1..4 are (0,0), (1,0), (0,1), (1,1).
  auto e = Permutation(4);
  auto x = parse_permutation("(1 2)(3 4)", 4);
  auto y = parse_permutation("(1 3)(2 4)", 4);
  std::vector<Permutation> gens{e, x, y};
  auto group = generate_group(gens);
  std::vector<std::string> names(group.order());
  names[require(group, e)] = "(0,0)";
  names[require(group, x)] = "(1,0)";
  names[require(group, y)] = "(0,1)";
  names[require(group, compose(x, y))] = "(1,1)";
  group = group.with_names(std::move(names));
  return {std::string(spec),
          group,
          {{"(0,0)", 0}, {"(1,0)", require(group, x)}, {"(0,1)", require(group, y)}},
          true};
}

CatalogGroup explicit_perms(std::string_view spec, std::string_view rest) {
  auto colon = rest.find(':');
  if (colon == std::string_view::npos)
    bad_spec(spec, "expected perm:<degree>:<cycles>;...");
  auto degree = parse_count(spec, rest.substr(0, colon));
  if (degree < 1)
    bad_spec(spec, "degree must be positive");

  std::vector<Permutation> gens;
  auto list = rest.substr(colon + 1);
  std::size_t start = 0;
  while (start <= list.size()) {
    auto end = list.find(';', start);
    if (end == std::string_view::npos)
      end = list.size();
    gens.push_back(parse_permutation(list.substr(start, end - start), degree));
    start = end + 1;
  }
  auto group = generate_group(gens);

  CatalogGroup result{std::string(spec), group, {}, true};
  for (std::size_t i = 0; i < gens.size(); ++i)
    result.generators.emplace_back("g" + std::to_string(i + 1), require(group, gens[i]));
  for (std::size_t a = 0; a < gens.size() && result.abelian; ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (compose(gens[a], gens[b]) != compose(gens[b], gens[a])) {
        result.abelian = false;
        break;
      }
  return result;
}

} // namespace

std::size_t CatalogGroup::resolve(std::string_view token) const {
  for (const auto &[name, index] : generators)
    if (name == token)
      return index;
  if (auto index = group.find_name(token); index != Group::npos)
    return index;
  auto index = group.find(parse_permutation(token, group.degree()));
  if (index == Group::npos)
    throw Error(ErrorCode::invalid_argument,
                "\"" + std::string(token) + "\" is not an element of " + spec);
  return index;
}

ElementSet CatalogGroup::generator_set() const {
  std::vector<std::size_t> indices;
  for (const auto &entry : generators)
    indices.push_back(entry.second);
  return ElementSet(group, std::move(indices));
}

CatalogGroup catalog_group(std::string_view spec) {
  if (spec == "Z2xZ2")
    return klein(spec);
  auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    bad_spec(spec, "expected <family>:<n>");
  auto family = spec.substr(0, colon);
  auto rest = spec.substr(colon + 1);
  if (family == "perm")
    return explicit_perms(spec, rest);

  auto n = parse_count(spec, rest);
  if (family == "Z")
    return cyclic(spec, n);
  if (family == "D")
    return dihedral(spec, n);
  if (family == "S")
    return symmetric(spec, n);
  if (family == "A")
    return alternating(spec, n);
  throw Error(ErrorCode::invalid_argument, "unsupported group family \"" + std::string(family) + "\"");
}

std::vector<CatalogGroup> catalog_up_to_order(std::size_t max_order) {
  std::vector<CatalogGroup> result;
  for (std::size_t n = 1; n <= max_order; ++n)
    result.push_back(catalog_group("Z:" + std::to_string(n)));
  for (std::size_t n = 3; 2 * n <= max_order; ++n)
    result.push_back(catalog_group("D:" + std::to_string(n)));
  std::size_t factorial = 2;
  for (std::size_t n = 2; factorial <= max_order; ++n, factorial *= n)
    result.push_back(catalog_group("S:" + std::to_string(n)));
  for (std::size_t n = 3, half = 3; half <= max_order; ++n, half *= n)
    result.push_back(catalog_group("A:" + std::to_string(n)));
  if (max_order >= 4)
    result.push_back(catalog_group("Z2xZ2"));
  return result;
}

ComplexMatrix z2z2_orthogonal_matrix() {
  const double s = 1.0 / std::sqrt(3.0);
  const double rows[4][4] = {{1, 1, 1, 0}, {1, -1, 0, 1}, {-1, 0, 1, 1}, {0, 1, -1, 1}};
  ComplexMatrix m(4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      m(r, c) = rows[r][c] * s;
  return m;
}

} // namespace cayline
