#include "cayline/constructions.hpp"

#include <string>

#include "cayline/error.hpp"

namespace cayline {

namespace {

std::optional<MansillaWitness> witness_at(const Group &group, const ElementSet &s, std::size_t x) {
  auto coset = left_coset(group, x, s);
  if (coset.size() != s.size() || !is_subgroup(group, coset))
    return std::nullopt;
  return MansillaWitness{x, std::move(coset), s.size()};
}

std::vector<MansillaWitness> scan(const Group &group, const ElementSet &s, bool first_only) {
  if (!group.same_as(s.group()))
    throw Error(ErrorCode::invalid_argument, "element set belongs to a different group");
  if (s.empty())
    throw Error(ErrorCode::invalid_argument, "connection set is empty");
  std::vector<MansillaWitness> found;
  for (auto element : s.indices()) {
    if (auto w = witness_at(group, s, group.inverse_of(element))) {
      found.push_back(std::move(*w));
      if (first_only)
        break;
    }
  }
  return found;
}

} // namespace

std::optional<MansillaWitness> mansilla_witness(const Group &group, const ElementSet &s) {
  auto found = scan(group, s, true);
  if (found.empty())
    return std::nullopt;
  return std::move(found.front());
}

std::vector<MansillaWitness> mansilla_witnesses(const Group &group, const ElementSet &s) {
  return scan(group, s, false);
}

LineizationResult two_generator_lineization(const Group &group, std::size_t s1, std::size_t s2) {
  ElementSet s(group, {s1, s2});
  if (!generates(group, s))
    throw Error(ErrorCode::not_generating, "{" + group.name(s1) + ", " + group.name(s2) +
                                               "} does not generate the group");

  const auto s1_inv = group.inverse_of(s1);
  const auto h = group.multiply(s1_inv, s2);
  auto cyclic = cyclic_subgroup(group, h);
  auto t = left_coset(group, s1, cyclic);

  LineizationResult result{s1, s2, h, element_order(group, h), cyclic, t, std::nullopt, {}};
  result.witness = witness_at(group, t, s1_inv);
  result.checks.s_subset_of_t = s.is_subset_of(t);
  result.checks.t_generates = generates(group, t);
  result.checks.witness_at_s1_inverse =
      result.witness.has_value() && result.witness->subgroup == cyclic;
  if (t.size() != result.order || !result.checks.all())
    throw Error(ErrorCode::internal, "coset construction failed its own checks");
  return result;
}

bool remcay_condition(const Group &group, std::size_t s1, std::size_t s2) {
  if (s1 == s2)
    throw Error(ErrorCode::invalid_argument, "remcay condition needs distinct generators");
  const auto s1_inv = group.inverse_of(s1);
  const auto s2_inv = group.inverse_of(s2);
  const bool first = group.multiply(group.multiply(s2, s1_inv), s2) == s1;
  const bool second = group.multiply(group.multiply(s1, s2_inv), s1) == s2;

  // Both identities say (s1^-1 s2) is an involution or trivial.
  const auto h = group.multiply(s1_inv, s2);
  const bool involution = group.multiply(h, h) == 0;
  if ((first && second) != involution || first != second)
    throw Error(ErrorCode::internal, "remcay identities disagree with (s1^-1 s2)^2 = e");
  return first && second;
}

bool SuiteReport::all_pass() const noexcept {
  for (const auto &item : items)
    if (!item.pass)
      return false;
  return !items.empty();
}

} // namespace cayline
