#ifndef CAYLINE_PERM_GROUP_HPP
#define CAYLINE_PERM_GROUP_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cayline {

/// A bijection on {0, ..., degree-1}, stored as an image table.
///
/// Points are 0-based internally and 1-based in cycle notation. Products are
/// read right to left: compose(p, q) applies q first, then p.
class Permutation {
public:
  using point_type = std::uint32_t;

  explicit Permutation(std::size_t degree);   // identity
  explicit Permutation(std::vector<point_type> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const noexcept { return images_.size(); }
  point_type operator()(std::size_t point) const { return images_[point]; }
  std::span<const point_type> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  /// Disjoint cycle notation with 1-based points; "e" for the identity.
  std::string to_cycles() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<point_type> images_;
};

Permutation parse_permutation(std::string_view text, std::size_t degree);
Permutation compose(const Permutation &p, const Permutation &q);
Permutation inverse(const Permutation &p);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

inline constexpr std::size_t default_closure_cap = 100000;

/// A finite permutation group enumerated by closure.
///
/// Group is a cheap value handle onto immutable shared storage, so copies are
/// O(1) and ElementSet can hold one without lifetime concerns. Element 0 is
/// always the identity; the remaining order is BFS layers of right
/// multiplication by the generators, ties broken by generator input order.
class Group {
public:
  std::size_t order() const noexcept { return data_->elements.size(); }
  std::size_t degree() const noexcept { return data_->elements.front().degree(); }

  const Permutation &element(std::size_t index) const;
  std::span<const Permutation> elements() const noexcept { return data_->elements; }
  std::span<const std::size_t> generator_indices() const noexcept {
    return data_->generator_indices;
  }

  /// Index of p, or npos when p is not in the group.
  std::size_t find(const Permutation &p) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse_of(std::size_t a) const;
  std::size_t power(std::size_t a, std::size_t exponent) const;

  /// Display name of an element. Defaults to cycle notation.
  const std::string &name(std::size_t index) const;
  /// Index of the element with this display name, or npos.
  std::size_t find_name(std::string_view name) const;

  /// Copy of this group with replacement display names (one per element).
  Group with_names(std::vector<std::string> names) const;

  bool same_as(const Group &other) const noexcept { return data_ == other.data_; }

  friend Group generate_group(std::span<const Permutation>, std::size_t);

private:
  struct Data {
    std::vector<Permutation> elements;
    std::unordered_map<Permutation, std::size_t, PermutationHash> lookup;
    std::vector<std::size_t> generator_indices;
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> name_lookup;
  };

  explicit Group(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

Group generate_group(std::span<const Permutation> generators,
                     std::size_t cap = default_closure_cap);

/// Sorted, duplicate-free subset of a group's elements.
class ElementSet {
public:
  ElementSet(Group group, std::vector<std::size_t> indices);

  const Group &group() const noexcept { return group_; }
  std::span<const std::size_t> indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(std::size_t index) const;
  bool is_subset_of(const ElementSet &other) const;

  friend bool operator==(const ElementSet &a, const ElementSet &b) {
    return a.group_.same_as(b.group_) && a.indices_ == b.indices_;
  }

private:
  Group group_;
  std::vector<std::size_t> indices_;
};

std::size_t element_order(const Group &group, std::size_t g);
ElementSet cyclic_subgroup(const Group &group, std::size_t g);
ElementSet left_coset(const Group &group, std::size_t g, const ElementSet &subset);
bool is_subgroup(const Group &group, const ElementSet &subset);
bool generates(const Group &group, const ElementSet &subset);
ElementSet inverse_set(const Group &group, const ElementSet &subset);

/// Indices reachable from `seeds` under right multiplication, identity included.
std::vector<std::size_t> closure_of(const Group &group, std::span<const std::size_t> seeds);

} // namespace cayline

#endif
