#include "cayline/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "cayline/error.hpp"

namespace cayline {

namespace {

[[noreturn]] void bad_json(const std::string &why) {
  throw Error(ErrorCode::parse, "invalid JSON document: " + why);
}

std::size_t index_field(const json &value, const char *what) {
  if (!value.is_number_integer() || value.get<long long>() < 0)
    bad_json(std::string(what) + " must be a nonnegative integer");
  return value.get<std::size_t>();
}

std::string quote_dot(const std::string &text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

} // namespace

json to_json(const Digraph &d) {
  json arcs = json::array();
  for (std::size_t u = 0; u < d.vertex_count(); ++u)
    for (std::size_t v = 0; v < d.vertex_count(); ++v)
      if (d(u, v))
        arcs.push_back({u, v, d(u, v)});
  json j = {{"n", d.vertex_count()}, {"arcs", std::move(arcs)}};
  if (!d.labels().empty())
    j["labels"] = d.labels();
  return j;
}

Digraph digraph_from_json(const json &j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
    bad_json("digraph needs \"n\" and \"arcs\"");
  const auto n = index_field(j["n"], "n");
  if (!j["arcs"].is_array())
    bad_json("\"arcs\" must be an array");

  Digraph d(n);
  for (const auto &arc : j["arcs"]) {
    if (!arc.is_array() || arc.size() != 3)
      bad_json("each arc must be [u, v, mult]");
    auto u = index_field(arc[0], "arc source");
    auto v = index_field(arc[1], "arc target");
    auto m = index_field(arc[2], "arc multiplicity");
    if (u >= n || v >= n)
      bad_json("arc endpoint out of range");
    d.add_arc(u, v, static_cast<Digraph::multiplicity>(m));
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != n)
      bad_json("\"labels\" must list one string per vertex");
    std::vector<std::string> labels;
    for (const auto &label : j["labels"]) {
      if (!label.is_string())
        bad_json("labels must be strings");
      labels.push_back(label.get<std::string>());
    }
    d.set_labels(std::move(labels));
  }
  return d;
}

json to_json(const ComplexMatrix &m) {
  json entries = json::array();
  for (const auto &z : m.entries())
    entries.push_back({z.real(), z.imag()});
  return {{"n", m.dimension()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json &j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    bad_json("matrix needs \"n\" and \"entries\"");
  const auto n = index_field(j["n"], "n");
  const auto &entries = j["entries"];
  if (!entries.is_array() || entries.size() != n * n)
    bad_json("\"entries\" must hold n*n [re, im] pairs");
  std::vector<complex> values;
  values.reserve(n * n);
  for (const auto &z : entries) {
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
      bad_json("each entry must be [re, im]");
    values.emplace_back(z[0].get<double>(), z[1].get<double>());
  }
  return ComplexMatrix(n, std::move(values));
}

std::string to_text(const ComplexMatrix &m) {
  std::ostringstream out;
  char buffer[64];
  for (std::size_t r = 0; r < m.dimension(); ++r) {
    for (std::size_t c = 0; c < m.dimension(); ++c) {
      const auto z = m(r, c);
      if (z.imag() == 0.0)
        std::snprintf(buffer, sizeof buffer, "%.6g", z.real());
      else
        std::snprintf(buffer, sizeof buffer, "%.6g%+.6gi", z.real(), z.imag());
      out << (c ? "  " : "") << buffer;
    }
    out << '\n';
  }
  return out.str();
}

std::string to_dot(const Digraph &d, const std::string &name) {
  std::ostringstream out;
  out << "digraph " << quote_dot(name) << " {\n";
  for (std::size_t v = 0; v < d.vertex_count(); ++v)
    out << "  " << v << " [label=" << quote_dot(d.label(v)) << "];\n";
  for (std::size_t u = 0; u < d.vertex_count(); ++u)
    for (std::size_t v = 0; v < d.vertex_count(); ++v)
      for (std::size_t c = 0; c < d(u, v); ++c)
        out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

json to_json(const RichardsVerdict &verdict) {
  json j = {{"pass", verdict.pass()}};
  if (verdict.witness) {
    const auto &w = *verdict.witness;
    j["witness"] = {{"axis", w.axis == Axis::row ? "row" : "column"},
                    {"pair", {w.first, w.second}},
                    {"shared", w.shared},
                    {"differing", w.differing}};
  }
  return j;
}

json to_json(const LineBlocks &blocks) {
  json list = json::array();
  for (const auto &block : blocks.blocks)
    list.push_back({{"rows", block.rows}, {"cols", block.cols}});
  return {{"degree", blocks.degree}, {"blocks", std::move(list)}};
}

json to_json(const SearchReport &report) {
  json j = {{"status", report.status == SearchStatus::found ? "found" : "not-found"},
            {"iterations", report.iterations},
            {"restarts", report.restarts_used},
            {"residual", report.residual},
            {"min_support", report.min_support},
            {"seed", report.seed}};
  if (report.matrix)
    j["matrix"] = to_json(*report.matrix);
  else
    j["note"] = "not-found is inconclusive: it does not prove that no unitary has this pattern";
  return j;
}

const char *to_string(IsomorphismStatus status) {
  switch (status) {
  case IsomorphismStatus::isomorphic:
    return "isomorphic";
  case IsomorphismStatus::not_isomorphic:
    return "not-isomorphic";
  case IsomorphismStatus::undecided:
    return "undecided";
  }
  return "undecided";
}

json to_json(const IsomorphismResult &result) {
  json j = {{"status", to_string(result.status)}, {"nodes", result.nodes}};
  if (result.status == IsomorphismStatus::isomorphic)
    j["mapping"] = result.mapping;
  return j;
}

json to_json(const Group &group, const ElementSet &set) {
  json names = json::array();
  for (auto i : set.indices())
    names.push_back(group.name(i));
  return {{"indices", set.indices()}, {"names", std::move(names)}};
}

json to_json(const Group &group, const MansillaWitness &witness) {
  return {{"x", witness.x},
          {"x_name", group.name(witness.x)},
          {"subgroup", to_json(group, witness.subgroup)},
          {"r", witness.r}};
}

json to_json(const Group &group, const LineizationResult &result) {
  json j = {{"s1", group.name(result.s1)},
            {"s2", group.name(result.s2)},
            {"h", group.name(result.h)},
            {"n", result.order},
            {"cyclic", to_json(group, result.cyclic)},
            {"T", to_json(group, result.t)},
            {"checks",
             {{"s_subset_of_t", result.checks.s_subset_of_t},
              {"t_generates", result.checks.t_generates},
              {"witness_at_s1_inverse", result.checks.witness_at_s1_inverse}}}};
  if (result.witness)
    j["witness"] = to_json(group, *result.witness);
  return j;
}

json to_json(const CatalogGroup &catalog) {
  const auto &group = catalog.group;
  json elements = json::array();
  for (std::size_t i = 0; i < group.order(); ++i)
    elements.push_back({{"index", i},
                        {"name", group.name(i)},
                        {"cycles", group.element(i).to_cycles()},
                        {"order", element_order(group, i)}});
  json generators = json::array();
  for (const auto &[name, index] : catalog.generators)
    generators.push_back({{"name", name}, {"index", index}, {"cycles", group.element(index).to_cycles()}});
  return {{"spec", catalog.spec},
          {"order", group.order()},
          {"degree", group.degree()},
          {"abelian", catalog.abelian},
          {"generators", std::move(generators)},
          {"elements", std::move(elements)}};
}

json to_json(const SuiteReport &report) {
  json items = json::array();
  for (const auto &item : report.items)
    items.push_back({{"id", item.id},
                     {"description", item.description},
                     {"pass", item.pass},
                     {"artifacts", item.artifacts}});
  return {{"all_pass", report.all_pass()}, {"items", std::move(items)}};
}

} // namespace cayline
