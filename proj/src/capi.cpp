#include "cayline/cayline.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cayline/constructions.hpp"
#include "cayline/error.hpp"
#include "cayline/line_recognition.hpp"
#include "cayline/serialize.hpp"

struct cayline_group {
  cayline::CatalogGroup catalog;
};

struct cayline_digraph {
  cayline::Digraph digraph;
};

struct cayline_matrix {
  cayline::ComplexMatrix matrix;
};

namespace {

thread_local std::string last_error;

cayline_status fail(cayline_status status, const std::string &message) {
  last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <class Body>
cayline_status guarded(Body &&body) noexcept {
  try {
    body();
    last_error.clear();
    return CAYLINE_OK;
  } catch (const cayline::Error &e) {
    return fail(static_cast<cayline_status>(e.code()), e.what());
  } catch (const nlohmann::json::exception &e) {
    return fail(CAYLINE_ERR_PARSE, e.what());
  } catch (const std::bad_alloc &) {
    return fail(CAYLINE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(CAYLINE_ERR_INTERNAL, e.what());
  }
}

char *copy_string(const std::string &text) {
  auto *out = static_cast<char *>(std::malloc(text.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void put(char **out, const std::string &text) {
  if (out)
    *out = copy_string(text);
}

void require(const void *p, const char *what) {
  if (!p)
    throw cayline::Error(cayline::ErrorCode::invalid_argument, std::string(what) + " is null");
}

cayline::ElementSet make_set(const cayline_group *group, const size_t *set, size_t count) {
  if (count > 0)
    require(set, "element list");
  return cayline::ElementSet(group->catalog.group, std::vector<std::size_t>(set, set + count));
}

template <class T, class... Args>
T *make(Args &&...args) {
  return new T{std::forward<Args>(args)...};
}

} // namespace

extern "C" {

const char *cayline_version(void) { return "1.0.0"; }

const char *cayline_last_error(void) { return last_error.c_str(); }

const char *cayline_status_name(cayline_status status) {
  switch (status) {
  case CAYLINE_OK: return "ok";
  case CAYLINE_ERR_INVALID_ARGUMENT: return "invalid-argument";
  case CAYLINE_ERR_PARSE: return "parse-error";
  case CAYLINE_ERR_DEGREE_MISMATCH: return "degree-mismatch";
  case CAYLINE_ERR_CAP_EXCEEDED: return "cap-exceeded";
  case CAYLINE_ERR_NOT_REGULAR: return "not-regular";
  case CAYLINE_ERR_NOT_LINE_DIGRAPH: return "not-line-digraph";
  case CAYLINE_ERR_MULTI_ARC: return "multi-arc";
  case CAYLINE_ERR_NOT_GENERATING: return "not-generating";
  case CAYLINE_ERR_IO: return "io-error";
  case CAYLINE_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

void cayline_string_free(char *s) { std::free(s); }

cayline_search_options cayline_search_defaults(void) {
  cayline::SearchOptions defaults;
  return {defaults.max_iters, defaults.restarts, defaults.tol, defaults.seed};
}

// ---- groups

cayline_status cayline_group_from_spec(const char *spec, cayline_group **out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = make<cayline_group>(cayline::catalog_group(spec));
  });
}

void cayline_group_free(cayline_group *group) { delete group; }

size_t cayline_group_order(const cayline_group *group) {
  return group ? group->catalog.group.order() : 0;
}

size_t cayline_group_degree(const cayline_group *group) {
  return group ? group->catalog.group.degree() : 0;
}

int cayline_group_is_abelian(const cayline_group *group) {
  return group && group->catalog.abelian ? 1 : 0;
}

cayline_status cayline_group_resolve(const cayline_group *group, const char *token, size_t *index) {
  return guarded([&] {
    require(group, "group");
    require(token, "token");
    require(index, "index");
    *index = group->catalog.resolve(token);
  });
}

cayline_status cayline_group_generators(const cayline_group *group, size_t *indices, size_t cap,
                                        size_t *count) {
  return guarded([&] {
    require(group, "group");
    require(count, "count");
    const auto &gens = group->catalog.generators;
    *count = gens.size();
    for (std::size_t i = 0; i < gens.size() && i < cap; ++i) {
      require(indices, "indices");
      indices[i] = gens[i].second;
    }
  });
}

cayline_status cayline_group_element_name(const cayline_group *group, size_t index, char **out) {
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    *out = copy_string(group->catalog.group.name(index));
  });
}

cayline_status cayline_group_element_order(const cayline_group *group, size_t index,
                                           size_t *order) {
  return guarded([&] {
    require(group, "group");
    require(order, "order");
    *order = cayline::element_order(group->catalog.group, index);
  });
}

cayline_status cayline_group_generates(const cayline_group *group, const size_t *set, size_t count,
                                       int *result) {
  return guarded([&] {
    require(group, "group");
    require(result, "result");
    *result = cayline::generates(group->catalog.group, make_set(group, set, count)) ? 1 : 0;
  });
}

cayline_status cayline_group_to_json(const cayline_group *group, char **out) {
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    *out = copy_string(cayline::to_json(group->catalog).dump());
  });
}

// ---- digraphs

cayline_status cayline_cayley_digraph(const cayline_group *group, const size_t *set, size_t count,
                                      cayline_digraph **out, int *generating) {
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    auto cay = cayline::cayley_digraph(group->catalog.group, make_set(group, set, count));
    if (generating)
      *generating = cay.generating ? 1 : 0;
    *out = make<cayline_digraph>(std::move(cay.digraph));
  });
}

cayline_status cayline_pnk_digraph(size_t n, size_t k, cayline_digraph **out) {
  return guarded([&] {
    require(out, "out");
    *out = make<cayline_digraph>(cayline::pnk_digraph(n, k));
  });
}

cayline_status cayline_line_digraph(const cayline_digraph *d, cayline_digraph **out) {
  return guarded([&] {
    require(d, "digraph");
    require(out, "out");
    *out = make<cayline_digraph>(cayline::line_digraph(d->digraph).digraph);
  });
}

cayline_status cayline_digraph_from_json(const char *text, cayline_digraph **out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = make<cayline_digraph>(cayline::digraph_from_json(cayline::json::parse(text)));
  });
}

cayline_status cayline_digraph_to_json(const cayline_digraph *d, char **out) {
  return guarded([&] {
    require(d, "digraph");
    require(out, "out");
    *out = copy_string(cayline::to_json(d->digraph).dump());
  });
}

cayline_status cayline_digraph_to_dot(const cayline_digraph *d, char **out) {
  return guarded([&] {
    require(d, "digraph");
    require(out, "out");
    *out = copy_string(cayline::to_dot(d->digraph));
  });
}

void cayline_digraph_free(cayline_digraph *d) { delete d; }

size_t cayline_digraph_vertex_count(const cayline_digraph *d) {
  return d ? d->digraph.vertex_count() : 0;
}

size_t cayline_digraph_arc_count(const cayline_digraph *d) {
  return d ? d->digraph.arc_count() : 0;
}

unsigned cayline_digraph_multiplicity(const cayline_digraph *d, size_t u, size_t v) {
  if (!d || u >= d->digraph.vertex_count() || v >= d->digraph.vertex_count())
    return 0;
  return d->digraph(u, v);
}

cayline_status cayline_digraph_is_regular(const cayline_digraph *d, int *regular, size_t *degree) {
  return guarded([&] {
    require(d, "digraph");
    require(regular, "regular");
    auto result = cayline::is_regular(d->digraph);
    *regular = result ? 1 : 0;
    if (degree)
      *degree = result.value_or(0);
  });
}

int cayline_digraph_equal(const cayline_digraph *a, const cayline_digraph *b) {
  return a && b && a->digraph.same_arcs(b->digraph) ? 1 : 0;
}

cayline_status cayline_isomorphism(const cayline_digraph *a, const cayline_digraph *b,
                                   uint64_t node_limit, cayline_iso_status *status, char **report) {
  return guarded([&] {
    require(a, "first digraph");
    require(b, "second digraph");
    require(status, "status");
    auto result = cayline::are_isomorphic(
        a->digraph, b->digraph,
        node_limit ? node_limit : cayline::default_isomorphism_node_limit);
    if (result.status == cayline::IsomorphismStatus::isomorphic &&
        !cayline::verify_isomorphism(a->digraph, b->digraph, result.mapping))
      throw cayline::Error(cayline::ErrorCode::internal, "isomorphism failed re-verification");
    switch (result.status) {
    case cayline::IsomorphismStatus::isomorphic: *status = CAYLINE_ISO_ISOMORPHIC; break;
    case cayline::IsomorphismStatus::not_isomorphic: *status = CAYLINE_ISO_NOT_ISOMORPHIC; break;
    case cayline::IsomorphismStatus::undecided: *status = CAYLINE_ISO_UNDECIDED; break;
    }
    put(report, cayline::to_json(result).dump());
  });
}

// ---- line recognition

cayline_status cayline_richards_test(const cayline_digraph *d, int *pass, char **verdict) {
  return guarded([&] {
    require(d, "digraph");
    require(pass, "pass");
    auto result = cayline::richards_test(d->digraph);
    *pass = result.pass() ? 1 : 0;
    put(verdict, cayline::to_json(result).dump());
  });
}

cayline_status cayline_block_decomposition(const cayline_digraph *d, char **blocks) {
  return guarded([&] {
    require(d, "digraph");
    require(blocks, "blocks");
    *blocks = copy_string(cayline::to_json(cayline::block_decomposition(d->digraph)).dump());
  });
}

// ---- matrices

cayline_status cayline_matrix_from_json(const char *text, cayline_matrix **out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = make<cayline_matrix>(cayline::matrix_from_json(cayline::json::parse(text)));
  });
}

cayline_status cayline_matrix_to_json(const cayline_matrix *m, char **out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = copy_string(cayline::to_json(m->matrix).dump());
  });
}

cayline_status cayline_matrix_to_text(const cayline_matrix *m, char **out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = copy_string(cayline::to_text(m->matrix));
  });
}

void cayline_matrix_free(cayline_matrix *m) { delete m; }

size_t cayline_matrix_dimension(const cayline_matrix *m) { return m ? m->matrix.dimension() : 0; }

cayline_status cayline_dft_matrix(size_t d, cayline_matrix **out) {
  return guarded([&] {
    require(out, "out");
    *out = make<cayline_matrix>(cayline::dft_matrix(d));
  });
}

cayline_status cayline_synthesize_unitary(const cayline_digraph *d, cayline_matrix **out) {
  return guarded([&] {
    require(d, "digraph");
    require(out, "out");
    *out = make<cayline_matrix>(cayline::synthesize_unitary(d->digraph));
  });
}

cayline_status cayline_unitarity_residual(const cayline_matrix *m, double *residual) {
  return guarded([&] {
    require(m, "matrix");
    require(residual, "residual");
    *residual = cayline::unitarity_residual(m->matrix);
  });
}

cayline_status cayline_is_unitary(const cayline_matrix *m, double tol, int *result) {
  return guarded([&] {
    require(m, "matrix");
    require(result, "result");
    *result = cayline::is_unitary(m->matrix, tol) ? 1 : 0;
  });
}

cayline_status cayline_pattern_of(const cayline_matrix *m, double tol, cayline_digraph **out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = make<cayline_digraph>(cayline::pattern_of(m->matrix, tol));
  });
}

cayline_status cayline_search_unitary(const cayline_digraph *pattern,
                                      const cayline_search_options *options, int *found,
                                      cayline_matrix **matrix, char **report) {
  return guarded([&] {
    require(pattern, "pattern");
    require(found, "found");
    cayline::SearchOptions opts;
    if (options) {
      opts.max_iters = options->max_iters;
      opts.restarts = options->restarts;
      opts.tol = options->tol;
      opts.seed = options->seed;
    }
    auto result = cayline::search_unitary_with_pattern(pattern->digraph, opts);
    *found = result.status == cayline::SearchStatus::found ? 1 : 0;
    put(report, cayline::to_json(result).dump());
    if (matrix)
      *matrix = result.matrix ? make<cayline_matrix>(std::move(*result.matrix)) : nullptr;
  });
}

// ---- constructions

cayline_status cayline_mansilla_witness(const cayline_group *group, const size_t *set, size_t count,
                                        int all, int *found, char **report) {
  return guarded([&] {
    require(group, "group");
    require(found, "found");
    const auto &g = group->catalog.group;
    auto s = make_set(group, set, count);
    cayline::json j = {{"S", cayline::to_json(g, s)}};
    if (all) {
      auto witnesses = cayline::mansilla_witnesses(g, s);
      *found = witnesses.empty() ? 0 : 1;
      j["witnesses"] = cayline::json::array();
      for (const auto &w : witnesses)
        j["witnesses"].push_back(cayline::to_json(g, w));
    } else {
      auto witness = cayline::mansilla_witness(g, s);
      *found = witness ? 1 : 0;
      j["witness"] = witness ? cayline::to_json(g, *witness) : cayline::json(nullptr);
    }
    put(report, j.dump());
  });
}

cayline_status cayline_two_generator_lineization(const cayline_group *group, size_t s1, size_t s2,
                                                 char **report, cayline_digraph **cayley_t) {
  return guarded([&] {
    require(group, "group");
    const auto &g = group->catalog.group;
    auto result = cayline::two_generator_lineization(g, s1, s2);
    put(report, cayline::to_json(g, result).dump());
    if (cayley_t)
      *cayley_t = make<cayline_digraph>(cayline::cayley_digraph(g, result.t).digraph);
  });
}

cayline_status cayline_remcay_condition(const cayline_group *group, size_t s1, size_t s2,
                                        int *result) {
  return guarded([&] {
    require(group, "group");
    require(result, "result");
    *result = cayline::remcay_condition(group->catalog.group, s1, s2) ? 1 : 0;
  });
}

cayline_status cayline_example_suite(int *all_pass, char **report) {
  return guarded([&] {
    require(all_pass, "all_pass");
    auto suite = cayline::example_suite();
    *all_pass = suite.all_pass() ? 1 : 0;
    put(report, cayline::to_json(suite).dump());
  });
}

cayline_status cayline_z2z2_matrix(cayline_matrix **out) {
  return guarded([&] {
    require(out, "out");
    *out = make<cayline_matrix>(cayline::z2z2_orthogonal_matrix());
  });
}

} // extern "C"
