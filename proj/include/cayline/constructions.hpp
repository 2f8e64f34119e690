#ifndef CAYLINE_CONSTRUCTIONS_HPP
#define CAYLINE_CONSTRUCTIONS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cayline/digraph.hpp"
#include "cayline/perm_group.hpp"
#include "cayline/unitary.hpp"

namespace cayline {

// ---------------------------------------------------------------------------
// Catalog

struct CatalogGroup {
  std::string spec;
  Group group;
  /// Canonical generators in catalog order, e.g. {"r", i}, {"s", j} for D:n.
  std::vector<std::pair<std::string, std::size_t>> generators;
  bool abelian = false;

  /// Generator alias, element display name, or cycle notation.
  std::size_t resolve(std::string_view token) const;
  ElementSet generator_set() const;
};

/// Z:<n> | D:<n> | S:<n> | A:<n> | Z2xZ2 | perm:<degree>:<cycles>;<cycles>;...
CatalogGroup catalog_group(std::string_view spec);

/// Every catalog group of order <= max_order (Z, D, S, A families and Z2xZ2).
std::vector<CatalogGroup> catalog_up_to_order(std::size_t max_order);

/// The real orthogonal 4x4 matrix (scaled by 1/sqrt 3) whose pattern is the
/// Cayley digraph of Z2 x Z2 on all three listed generators.
ComplexMatrix z2z2_orthogonal_matrix();

// ---------------------------------------------------------------------------
// Line-digraph generating sets

/// x with x^-1 in S such that xS is a subgroup H of order |S|.
struct MansillaWitness {
  std::size_t x;
  ElementSet subgroup;
  std::size_t r;
};

/// First witness, scanning s in S by element order and testing x = s^-1.
std::optional<MansillaWitness> mansilla_witness(const Group &group, const ElementSet &s);
/// Every witness in the same scan order.
std::vector<MansillaWitness> mansilla_witnesses(const Group &group, const ElementSet &s);

struct LineizationChecks {
  bool s_subset_of_t = false;
  bool t_generates = false;
  bool witness_at_s1_inverse = false;

  bool all() const noexcept { return s_subset_of_t && t_generates && witness_at_s1_inverse; }
};

/// Coset generating set T = s1 <s1^-1 s2>.
struct LineizationResult {
  std::size_t s1, s2;
  std::size_t h;      // s1^-1 s2
  std::size_t order;  // order of h, equal to |T|
  ElementSet cyclic;
  ElementSet t;
  std::optional<MansillaWitness> witness;
  LineizationChecks checks;
};

/// Throws not_generating when {s1, s2} does not generate the group.
LineizationResult two_generator_lineization(const Group &group, std::size_t s1, std::size_t s2);

/// s1 = s2 s1^-1 s2 and s2 = s1 s2^-1 s1. Requires s1 != s2.
bool remcay_condition(const Group &group, std::size_t s1, std::size_t s2);

// ---------------------------------------------------------------------------
// Worked examples

struct SuiteItem {
  std::string id;
  std::string description;
  bool pass = false;
  nlohmann::json artifacts;
};

struct SuiteReport {
  std::vector<SuiteItem> items;

  bool all_pass() const noexcept;
};

SuiteReport example_suite();

} // namespace cayline

#endif
