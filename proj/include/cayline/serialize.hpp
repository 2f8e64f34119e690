#ifndef CAYLINE_SERIALIZE_HPP
#define CAYLINE_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "cayline/constructions.hpp"
#include "cayline/digraph.hpp"
#include "cayline/line_recognition.hpp"
#include "cayline/unitary.hpp"

namespace cayline {

using json = nlohmann::json;

// {"n": n, "arcs": [[u, v, mult], ...], "labels": [...]}, 0-based vertices.
json to_json(const Digraph &d);
Digraph digraph_from_json(const json &j);

// {"n": n, "entries": [[re, im], ...]} row-major, full double precision.
json to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const json &j);

/// Human-readable rendering, 6 significant digits.
std::string to_text(const ComplexMatrix &m);

/// DOT digraph; parallel arcs are written as repeated edges.
std::string to_dot(const Digraph &d, const std::string &name = "G");

json to_json(const RichardsVerdict &verdict);
json to_json(const LineBlocks &blocks);
json to_json(const SearchReport &report);
json to_json(const IsomorphismResult &result);
json to_json(const Group &group, const MansillaWitness &witness);
json to_json(const Group &group, const LineizationResult &result);
json to_json(const Group &group, const ElementSet &set);
json to_json(const CatalogGroup &catalog);
json to_json(const SuiteReport &report);

const char *to_string(IsomorphismStatus status);

} // namespace cayline

#endif
