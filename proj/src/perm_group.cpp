#include "cayline/perm_group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "cayline/error.hpp"

namespace cayline {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree == 0)
    throw Error(ErrorCode::invalid_argument, "permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), point_type{0});
}

Permutation::Permutation(std::vector<point_type> images) : images_(std::move(images)) {
  if (images_.empty())
    throw Error(ErrorCode::invalid_argument, "permutation degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (auto image : images_) {
    if (image >= images_.size() || seen[image])
      throw Error(ErrorCode::invalid_argument, "image table is not a bijection");
    seen[image] = true;
  }
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start)
      continue;
    out << '(';
    std::size_t point = start;
    bool first = true;
    while (!done[point]) {
      done[point] = true;
      if (!first)
        out << ' ';
      out << point + 1;
      first = false;
      point = images_[point];
    }
    out << ')';
  }
  auto text = out.str();
  return text.empty() ? "e" : text;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string &why) {
  throw Error(ErrorCode::parse,
              "cannot parse permutation \"" + std::string(text) + "\": " + why);
}

} // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  if (degree == 0)
    throw Error(ErrorCode::invalid_argument, "permutation degree must be positive");

  auto is_space = [](char c) { return c == ' ' || c == '\t'; };
  std::size_t begin = 0, end = text.size();
  while (begin < end && is_space(text[begin]))
    ++begin;
  while (end > begin && is_space(text[end - 1]))
    --end;
  auto body = text.substr(begin, end - begin);
  if (body.empty())
    parse_fail(text, "empty input");
  if (body == "e")
    return Permutation(degree);

  std::vector<Permutation::point_type> images(degree);
  std::iota(images.begin(), images.end(), Permutation::point_type{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  while (pos < body.size()) {
    if (is_space(body[pos])) {
      ++pos;
      continue;
    }
    if (body[pos] != '(')
      parse_fail(text, "expected '(' at offset " + std::to_string(pos));
    ++pos;

    std::vector<std::size_t> cycle;
    for (;;) {
      while (pos < body.size() && is_space(body[pos]))
        ++pos;
      if (pos >= body.size())
        parse_fail(text, "unterminated cycle");
      if (body[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(body.data() + pos, body.data() + body.size(), value);
      if (ec != std::errc{} || ptr == body.data() + pos)
        parse_fail(text, "expected a point at offset " + std::to_string(pos));
      pos = static_cast<std::size_t>(ptr - body.data());
      if (pos < body.size() && !is_space(body[pos]) && body[pos] != ')')
        parse_fail(text, "unexpected character at offset " + std::to_string(pos));
      if (value < 1 || value > degree)
        parse_fail(text, "point " + std::to_string(value) + " outside 1.." +
                             std::to_string(degree));
      if (used[value - 1])
        parse_fail(text, "repeated point " + std::to_string(value));
      used[value - 1] = true;
      cycle.push_back(value - 1);
    }
    if (cycle.empty())
      parse_fail(text, "empty cycle");
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = static_cast<Permutation::point_type>(cycle[(i + 1) % cycle.size()]);
  }
  return Permutation(std::move(images));
}

Permutation compose(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw Error(ErrorCode::degree_mismatch,
                "cannot compose permutations of degree " + std::to_string(p.degree()) +
                    " and " + std::to_string(q.degree()));
  std::vector<Permutation::point_type> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = p(q(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation &p) {
  std::vector<Permutation::point_type> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[p(i)] = static_cast<Permutation::point_type>(i);
  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  // FNV-1a over the image table
  std::uint64_t h = 1469598103934665603ull;
  for (auto image : p.images()) {
    h ^= image;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// Group

const Permutation &Group::element(std::size_t index) const {
  if (index >= order())
    throw Error(ErrorCode::invalid_argument,
                "element index " + std::to_string(index) + " out of range");
  return data_->elements[index];
}

std::size_t Group::find(const Permutation &p) const {
  auto it = data_->lookup.find(p);
  return it == data_->lookup.end() ? npos : it->second;
}

std::size_t Group::multiply(std::size_t a, std::size_t b) const {
  auto index = find(compose(element(a), element(b)));
  if (index == npos)
    throw Error(ErrorCode::internal, "group is not closed under composition");
  return index;
}

std::size_t Group::inverse_of(std::size_t a) const {
  auto index = find(inverse(element(a)));
  if (index == npos)
    throw Error(ErrorCode::internal, "group is not closed under inverse");
  return index;
}

std::size_t Group::power(std::size_t a, std::size_t exponent) const {
  std::size_t result = 0;
  std::size_t base = a;
  while (exponent > 0) {
    if (exponent & 1u)
      result = multiply(result, base);
    base = multiply(base, base);
    exponent >>= 1u;
  }
  return result;
}

const std::string &Group::name(std::size_t index) const {
  element(index);
  return data_->names[index];
}

std::size_t Group::find_name(std::string_view name) const {
  auto it = data_->name_lookup.find(std::string(name));
  return it == data_->name_lookup.end() ? npos : it->second;
}

Group Group::with_names(std::vector<std::string> names) const {
  if (names.size() != order())
    throw Error(ErrorCode::invalid_argument, "expected one name per element");
  auto data = std::make_shared<Data>(*data_);
  data->name_lookup.clear();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!data->name_lookup.emplace(names[i], i).second)
      throw Error(ErrorCode::invalid_argument, "duplicate element name " + names[i]);
  data->names = std::move(names);
  return Group(std::move(data));
}

Group generate_group(std::span<const Permutation> generators, std::size_t cap) {
  if (generators.empty())
    throw Error(ErrorCode::invalid_argument, "at least one generator is required");
  const auto degree = generators.front().degree();
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw Error(ErrorCode::degree_mismatch, "generators have different degrees");

  auto data = std::make_shared<Group::Data>();
  auto add = [&](Permutation p) {
    auto [it, inserted] = data->lookup.emplace(p, data->elements.size());
    if (inserted) {
      if (data->elements.size() >= cap)
        throw Error(ErrorCode::cap_exceeded,
                    "group closure exceeds " + std::to_string(cap) + " elements");
      data->elements.push_back(std::move(p));
    }
    return it->second;
  };

  add(Permutation(degree));
  for (const auto &g : generators) {
    auto index = add(g);
    if (std::find(data->generator_indices.begin(), data->generator_indices.end(), index) ==
        data->generator_indices.end())
      data->generator_indices.push_back(index);
  }
  // Elements are appended in discovery order, so scanning the vector is BFS.
  for (std::size_t i = 0; i < data->elements.size(); ++i)
    for (const auto &g : generators)
      add(compose(data->elements[i], g));

  data->names.reserve(data->elements.size());
  for (std::size_t i = 0; i < data->elements.size(); ++i) {
    data->names.push_back(data->elements[i].to_cycles());
    data->name_lookup.emplace(data->names.back(), i);
  }
  return Group(std::move(data));
}

// ---------------------------------------------------------------------------
// ElementSet and subgroup machinery

ElementSet::ElementSet(Group group, std::vector<std::size_t> indices)
    : group_(std::move(group)), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (!indices_.empty() && indices_.back() >= group_.order())
    throw Error(ErrorCode::invalid_argument,
                "element index " + std::to_string(indices_.back()) + " out of range");
}

bool ElementSet::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

bool ElementSet::is_subset_of(const ElementSet &other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                       indices_.end());
}

namespace {

void require_same_group(const Group &group, const ElementSet &subset) {
  if (!group.same_as(subset.group()))
    throw Error(ErrorCode::invalid_argument, "element set belongs to a different group");
}

} // namespace

std::size_t element_order(const Group &group, std::size_t g) {
  group.element(g);
  std::size_t n = 1;
  for (std::size_t x = g; x != 0; x = group.multiply(x, g))
    ++n;
  return n;
}

ElementSet cyclic_subgroup(const Group &group, std::size_t g) {
  group.element(g);
  std::vector<std::size_t> powers{0};
  for (std::size_t x = g; x != 0; x = group.multiply(x, g))
    powers.push_back(x);
  return ElementSet(group, std::move(powers));
}

ElementSet left_coset(const Group &group, std::size_t g, const ElementSet &subset) {
  require_same_group(group, subset);
  std::vector<std::size_t> result;
  result.reserve(subset.size());
  for (auto h : subset.indices())
    result.push_back(group.multiply(g, h));
  return ElementSet(group, std::move(result));
}

bool is_subgroup(const Group &group, const ElementSet &subset) {
  require_same_group(group, subset);
  if (subset.empty())
    return false;
  for (auto a : subset.indices()) {
    if (!subset.contains(group.inverse_of(a)))
      return false;
    for (auto b : subset.indices())
      if (!subset.contains(group.multiply(a, b)))
        return false;
  }
  return true;
}

std::vector<std::size_t> closure_of(const Group &group, std::span<const std::size_t> seeds) {
  std::vector<bool> seen(group.order(), false);
  std::vector<std::size_t> reached{0};
  seen[0] = true;
  for (std::size_t i = 0; i < reached.size(); ++i)
    for (auto s : seeds) {
      auto next = group.multiply(reached[i], s);
      if (!seen[next]) {
        seen[next] = true;
        reached.push_back(next);
      }
    }
  return reached;
}

bool generates(const Group &group, const ElementSet &subset) {
  require_same_group(group, subset);
  return closure_of(group, subset.indices()).size() == group.order();
}

ElementSet inverse_set(const Group &group, const ElementSet &subset) {
  require_same_group(group, subset);
  std::vector<std::size_t> result;
  result.reserve(subset.size());
  for (auto x : subset.indices())
    result.push_back(group.inverse_of(x));
  return ElementSet(group, std::move(result));
}

} // namespace cayline
