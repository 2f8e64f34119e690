// cayline command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success / property holds, 1 property fails, 2 usage or input
// error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cayline/cayline.h"

namespace {

using json = nlohmann::json;

constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_usage = 2;

struct CliError {
  int code;
  std::string message;
};

struct GroupDeleter {
  void operator()(cayline_group *g) const { cayline_group_free(g); }
};
struct DigraphDeleter {
  void operator()(cayline_digraph *d) const { cayline_digraph_free(d); }
};
struct MatrixDeleter {
  void operator()(cayline_matrix *m) const { cayline_matrix_free(m); }
};
using GroupPtr = std::unique_ptr<cayline_group, GroupDeleter>;
using DigraphPtr = std::unique_ptr<cayline_digraph, DigraphDeleter>;
using MatrixPtr = std::unique_ptr<cayline_matrix, MatrixDeleter>;

void check(cayline_status status, int code = exit_usage) {
  if (status != CAYLINE_OK)
    throw CliError{code, std::string(cayline_status_name(status)) + ": " + cayline_last_error()};
}

// Takes ownership of a C string returned by the library.
std::string take(char *text) {
  std::string out = text ? text : "";
  cayline_string_free(text);
  return out;
}

json take_json(char *text) { return json::parse(take(text)); }

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw CliError{exit_usage, "cannot read " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Reports from other verbs nest the artifact under a key; accept those too.
std::string read_artifact(const std::string &path, std::initializer_list<const char *> keys) {
  auto text = read_file(path);
  auto j = json::parse(text, nullptr, false);
  if (j.is_object() && !j.contains("n"))
    for (const auto *key : keys)
      if (j.contains(key) && j[key].is_object())
        return j[key].dump();
  return text;
}

std::vector<std::string> split(const std::string &text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, sep))
    if (!current.empty())
      parts.push_back(current);
  return parts;
}

// ---------------------------------------------------------------------------
// Shared option groups

struct GroupArgs {
  std::string spec;
  std::string gens = "all";

  GroupPtr load() const {
    cayline_group *g = nullptr;
    check(cayline_group_from_spec(spec.c_str(), &g));
    return GroupPtr(g);
  }

  size_t resolve(const cayline_group *g, const std::string &token) const {
    size_t index = 0;
    check(cayline_group_resolve(g, token.c_str(), &index));
    return index;
  }

  std::vector<size_t> generator_set(const cayline_group *g) const {
    std::vector<size_t> indices;
    if (gens == "all") {
      size_t count = 0;
      check(cayline_group_generators(g, nullptr, 0, &count));
      indices.resize(count);
      check(cayline_group_generators(g, indices.data(), count, &count));
      return indices;
    }
    for (const auto &token : split(gens, ';'))
      indices.push_back(resolve(g, token));
    if (indices.empty())
      throw CliError{exit_usage, "--gens lists no elements"};
    return indices;
  }
};

// A digraph given as a file, a Cayley digraph, or P(n,k), optionally passed
// through the line-digraph operator.
struct DigraphSource {
  std::string file;
  GroupArgs group;
  std::string pnk;
  bool line = false;

  void add_options(CLI::App *app, const std::string &prefix = "") {
    auto *f = app->add_option("--" + prefix + "digraph", file, "Digraph JSON file");
    auto *g = app->add_option("--" + prefix + "group", group.spec, "Group spec for a Cayley digraph");
    app->add_option("--" + prefix + "gens", group.gens,
                    "Connection set: 'all' or ';'-separated names/cycles")
        ->capture_default_str();
    auto *p = app->add_option("--" + prefix + "pnk", pnk, "P(n,k) as 'n,k'");
    f->excludes(g)->excludes(p);
    g->excludes(p);
    app->add_flag("--" + prefix + "line", line, "Take the line digraph of the input");
  }

  DigraphPtr load(bool warn = true) const {
    cayline_digraph *d = nullptr;
    if (!file.empty()) {
      check(cayline_digraph_from_json(read_artifact(file, {"digraph"}).c_str(), &d));
    } else if (!group.spec.empty()) {
      auto g = group.load();
      auto set = group.generator_set(g.get());
      int generating = 1;
      check(cayline_cayley_digraph(g.get(), set.data(), set.size(), &d, &generating));
      if (!generating && warn)
        std::cerr << "warning: connection set does not generate " << group.spec << "\n";
    } else if (!pnk.empty()) {
      auto parts = split(pnk, ',');
      if (parts.size() != 2)
        throw CliError{exit_usage, "--pnk expects 'n,k'"};
      try {
        check(cayline_pnk_digraph(std::stoul(parts[0]), std::stoul(parts[1]), &d));
      } catch (const std::logic_error &) {
        throw CliError{exit_usage, "--pnk expects two integers"};
      }
    } else {
      throw CliError{exit_usage, "no input digraph: use --digraph, --group or --pnk"};
    }
    DigraphPtr result(d);
    if (line) {
      cayline_digraph *l = nullptr;
      check(cayline_line_digraph(result.get(), &l));
      result.reset(l);
    }
    return result;
  }
};

struct Output {
  std::string path;
  std::string format = "json";

  void add_options(CLI::App *app, std::vector<std::string> formats = {"json"}) {
    app->add_option("-o,--output", path, "Write the artifact to a file instead of stdout");
    if (formats.size() > 1)
      app->add_option("--format", format, "Output format")
          ->check(CLI::IsMember(formats))
          ->capture_default_str();
  }

  void emit(const std::string &text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out || !(out << text))
      throw CliError{exit_usage, "cannot write " + path};
  }

  void emit(const json &j) const { emit(j.dump(2) + "\n"); }
};

json digraph_json(const cayline_digraph *d) {
  char *text = nullptr;
  check(cayline_digraph_to_json(d, &text));
  return take_json(text);
}

std::string digraph_dot(const cayline_digraph *d) {
  char *text = nullptr;
  check(cayline_digraph_to_dot(d, &text));
  return take(text);
}

json matrix_json(const cayline_matrix *m) {
  char *text = nullptr;
  check(cayline_matrix_to_json(m, &text));
  return take_json(text);
}

std::string matrix_text(const cayline_matrix *m) {
  char *text = nullptr;
  check(cayline_matrix_to_text(m, &text));
  return take(text);
}

double residual_of(const cayline_matrix *m) {
  double r = 0.0;
  check(cayline_unitarity_residual(m, &r));
  return r;
}

bool richards(const cayline_digraph *d, json &out) {
  int pass = 0;
  char *verdict = nullptr;
  check(cayline_richards_test(d, &pass, &verdict));
  out["richards"] = take_json(verdict);
  return pass != 0;
}

// Blocks plus synthesized unitary. Returns false (with a diagnosis) when the
// digraph is not a regular line digraph.
bool synthesize(const cayline_digraph *d, json &out, MatrixPtr *keep = nullptr) {
  char *blocks = nullptr;
  auto status = cayline_block_decomposition(d, &blocks);
  if (status == CAYLINE_ERR_NOT_REGULAR || status == CAYLINE_ERR_NOT_LINE_DIGRAPH ||
      status == CAYLINE_ERR_MULTI_ARC) {
    out["synthesis"] = {{"error", cayline_status_name(status)}, {"reason", cayline_last_error()}};
    return false;
  }
  check(status);
  out["blocks"] = take_json(blocks);

  cayline_matrix *m = nullptr;
  check(cayline_synthesize_unitary(d, &m));
  MatrixPtr matrix(m);
  out["unitary"] = matrix_json(matrix.get());
  out["residual"] = residual_of(matrix.get());
  if (keep)
    *keep = std::move(matrix);
  return true;
}

std::uint64_t default_seed() {
  if (const char *env = std::getenv("CAYLINE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::logic_error &) {
      throw CliError{exit_usage, "CAYLINE_SEED is not an integer"};
    }
  }
  return cayline_search_defaults().seed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Cayley digraphs, line-digraph recognition and unitary patterns"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cayline_version());

  // group
  GroupArgs group_args;
  Output group_out;
  auto *group_cmd = app.add_subcommand("group", "Enumerate a catalog group");
  group_cmd->add_option("--group", group_args.spec, "Group spec")->required();
  group_out.add_options(group_cmd);

  // cayley
  GroupArgs cayley_args;
  Output cayley_out;
  std::string cayley_then;
  auto *cayley_cmd = app.add_subcommand("cayley", "Build a Cayley digraph");
  cayley_cmd->add_option("--group", cayley_args.spec, "Group spec")->required();
  cayley_cmd->add_option("--gens", cayley_args.gens, "Connection set")->capture_default_str();
  cayley_cmd->add_option("--then", cayley_then, "Continue the pipeline")
      ->check(CLI::IsMember({"richards", "synth"}));
  cayley_out.add_options(cayley_cmd, {"json", "dot"});

  // line
  DigraphSource line_src;
  Output line_out;
  auto *line_cmd = app.add_subcommand("line", "Line digraph of the input");
  line_src.add_options(line_cmd);
  line_out.add_options(line_cmd, {"json", "dot"});

  // richards
  DigraphSource richards_src;
  Output richards_out;
  auto *richards_cmd = app.add_subcommand("richards", "Identical-or-orthogonal line test");
  richards_src.add_options(richards_cmd);
  richards_out.add_options(richards_cmd);

  // blocks
  DigraphSource blocks_src;
  Output blocks_out;
  auto *blocks_cmd = app.add_subcommand("blocks", "All-ones block structure of a regular line digraph");
  blocks_src.add_options(blocks_cmd);
  blocks_out.add_options(blocks_cmd);

  // synth
  DigraphSource synth_src;
  Output synth_out;
  auto *synth_cmd = app.add_subcommand("synth", "Unitary whose pattern is the input digraph");
  synth_src.add_options(synth_cmd);
  synth_out.add_options(synth_cmd, {"json", "text"});

  // verify
  std::string verify_matrix, verify_pattern;
  double verify_tol = 1e-12, verify_pattern_tol = 1e-12;
  Output verify_out;
  auto *verify_cmd = app.add_subcommand("verify", "Check unitarity and the zero pattern of a matrix");
  verify_cmd->add_option("--matrix", verify_matrix, "Matrix JSON file")->required();
  verify_cmd->add_option("--pattern", verify_pattern, "Digraph JSON the pattern must equal");
  verify_cmd->add_option("--tol", verify_tol, "Unitarity tolerance (max-norm)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify_cmd->add_option("--pattern-tol", verify_pattern_tol, "Magnitude treated as zero")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify_out.add_options(verify_cmd);

  // search
  DigraphSource search_src;
  Output search_out;
  auto defaults = cayline_search_defaults();
  std::optional<std::uint64_t> search_seed;
  auto *search_cmd = app.add_subcommand("search", "Heuristic search for a unitary with a given pattern");
  search_src.add_options(search_cmd);
  search_cmd->add_option("--max-iters", defaults.max_iters, "Iterations per restart")->capture_default_str();
  search_cmd->add_option("--restarts", defaults.restarts, "Random restarts")->capture_default_str();
  search_cmd->add_option("--tol", defaults.tol, "Unitarity tolerance")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  search_cmd->add_option("--seed", search_seed, "RNG seed (default: $CAYLINE_SEED or 1)");
  search_out.add_options(search_cmd);

  // theorem2
  GroupArgs t2_args;
  std::string t2_s1, t2_s2, t2_then;
  Output t2_out;
  auto *t2_cmd = app.add_subcommand("theorem2", "Coset generating set T = s1 <s1^-1 s2>");
  t2_cmd->add_option("--group", t2_args.spec, "Group spec")->required();
  t2_cmd->add_option("--s1", t2_s1, "First generator")->required();
  t2_cmd->add_option("--s2", t2_s2, "Second generator")->required();
  t2_cmd->add_option("--then", t2_then, "Continue the pipeline")->check(CLI::IsMember({"synth"}));
  t2_out.add_options(t2_cmd);

  // mansilla
  GroupArgs mansilla_args;
  bool mansilla_all = false;
  Output mansilla_out;
  auto *mansilla_cmd = app.add_subcommand("mansilla", "Find x in S^-1 with xS a subgroup of order |S|");
  mansilla_cmd->add_option("--group", mansilla_args.spec, "Group spec")->required();
  mansilla_cmd->add_option("--gens", mansilla_args.gens, "Connection set")->capture_default_str();
  mansilla_cmd->add_flag("--all", mansilla_all, "List every witness");
  mansilla_out.add_options(mansilla_cmd);

  // remcay
  GroupArgs remcay_args;
  std::string remcay_s1, remcay_s2;
  Output remcay_out;
  auto *remcay_cmd = app.add_subcommand("remcay", "Check s1 = s2 s1^-1 s2 and s2 = s1 s2^-1 s1");
  remcay_cmd->add_option("--group", remcay_args.spec, "Group spec")->required();
  remcay_cmd->add_option("--s1", remcay_s1, "First generator")->required();
  remcay_cmd->add_option("--s2", remcay_s2, "Second generator")->required();
  remcay_out.add_options(remcay_cmd);

  // pnk
  std::size_t pnk_n = 0, pnk_k = 0;
  Output pnk_out;
  auto *pnk_cmd = app.add_subcommand("pnk", "Digraph P(n,k) on injective k-tuples");
  pnk_cmd->add_option("--n", pnk_n, "Alphabet size")->required();
  pnk_cmd->add_option("--k", pnk_k, "Tuple length")->required();
  pnk_out.add_options(pnk_cmd, {"json", "dot"});

  // iso
  DigraphSource iso_a, iso_b;
  std::uint64_t iso_limit = 10'000'000;
  Output iso_out;
  auto *iso_cmd = app.add_subcommand("iso", "Digraph isomorphism between inputs a and b");
  iso_a.add_options(iso_cmd, "a-");
  iso_b.add_options(iso_cmd, "b-");
  iso_cmd->add_option("--node-limit", iso_limit, "Backtracking node cutoff")->capture_default_str();
  iso_out.add_options(iso_cmd);

  // examples
  Output examples_out;
  auto *examples_cmd = app.add_subcommand("examples", "Run the worked-example suite");
  examples_out.add_options(examples_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (*group_cmd) {
      auto g = group_args.load();
      char *text = nullptr;
      check(cayline_group_to_json(g.get(), &text));
      group_out.emit(take_json(text));
      return exit_holds;
    }

    if (*cayley_cmd) {
      auto g = cayley_args.load();
      auto set = cayley_args.generator_set(g.get());
      cayline_digraph *raw = nullptr;
      int generating = 1;
      check(cayline_cayley_digraph(g.get(), set.data(), set.size(), &raw, &generating));
      DigraphPtr d(raw);
      if (!generating)
        std::cerr << "warning: connection set does not generate " << cayley_args.spec << "\n";
      if (cayley_out.format == "dot") {
        cayley_out.emit(digraph_dot(d.get()));
        return exit_holds;
      }
      json out = {{"digraph", digraph_json(d.get())}, {"generating", generating != 0}};
      int code = exit_holds;
      if (!cayley_then.empty()) {
        bool ok = richards(d.get(), out);
        if (ok && cayley_then == "synth")
          ok = synthesize(d.get(), out);
        code = ok ? exit_holds : exit_fails;
      }
      cayley_out.emit(out);
      return code;
    }

    if (*line_cmd) {
      auto d = line_src.load();
      cayline_digraph *raw = nullptr;
      check(cayline_line_digraph(d.get(), &raw));
      DigraphPtr l(raw);
      if (line_out.format == "dot")
        line_out.emit(digraph_dot(l.get()));
      else
        line_out.emit(digraph_json(l.get()));
      return exit_holds;
    }

    if (*richards_cmd) {
      auto d = richards_src.load();
      json out;
      bool pass = richards(d.get(), out);
      richards_out.emit(out["richards"]);
      return pass ? exit_holds : exit_fails;
    }

    if (*blocks_cmd) {
      auto d = blocks_src.load();
      char *text = nullptr;
      auto status = cayline_block_decomposition(d.get(), &text);
      if (status == CAYLINE_ERR_NOT_REGULAR || status == CAYLINE_ERR_NOT_LINE_DIGRAPH ||
          status == CAYLINE_ERR_MULTI_ARC) {
        blocks_out.emit(json{{"error", cayline_status_name(status)}, {"reason", cayline_last_error()}});
        return exit_fails;
      }
      check(status);
      blocks_out.emit(take_json(text));
      return exit_holds;
    }

    if (*synth_cmd) {
      auto d = synth_src.load();
      json out;
      MatrixPtr matrix;
      bool ok = synthesize(d.get(), out, &matrix);
      if (synth_out.format == "text" && ok)
        synth_out.emit(matrix_text(matrix.get()));
      else
        synth_out.emit(out);
      return ok ? exit_holds : exit_fails;
    }

    if (*verify_cmd) {
      cayline_matrix *raw = nullptr;
      check(cayline_matrix_from_json(read_artifact(verify_matrix, {"unitary", "matrix"}).c_str(), &raw));
      MatrixPtr m(raw);
      int unitary = 0;
      check(cayline_is_unitary(m.get(), verify_tol, &unitary));
      json out = {{"unitary", unitary != 0}, {"residual", residual_of(m.get())}, {"tol", verify_tol}};

      cayline_digraph *p = nullptr;
      check(cayline_pattern_of(m.get(), verify_pattern_tol, &p));
      DigraphPtr pattern(p);
      out["pattern"] = digraph_json(pattern.get());
      bool ok = unitary != 0;
      if (!verify_pattern.empty()) {
        cayline_digraph *e = nullptr;
        check(cayline_digraph_from_json(read_artifact(verify_pattern, {"digraph"}).c_str(), &e));
        DigraphPtr expected(e);
        bool equal = cayline_digraph_equal(pattern.get(), expected.get()) != 0;
        out["pattern_equal"] = equal;
        ok = ok && equal;
      }
      verify_out.emit(out);
      return ok ? exit_holds : exit_fails;
    }

    if (*search_cmd) {
      auto d = search_src.load();
      defaults.seed = search_seed ? *search_seed : default_seed();
      int found = 0;
      char *report = nullptr;
      check(cayline_search_unitary(d.get(), &defaults, &found, nullptr, &report));
      search_out.emit(take_json(report));
      return found ? exit_holds : exit_fails;
    }

    if (*t2_cmd) {
      auto g = t2_args.load();
      auto s1 = t2_args.resolve(g.get(), t2_s1);
      auto s2 = t2_args.resolve(g.get(), t2_s2);
      char *report = nullptr;
      cayline_digraph *raw = nullptr;
      check(cayline_two_generator_lineization(g.get(), s1, s2, &report, &raw));
      DigraphPtr cay(raw);
      json out = take_json(report);
      bool ok = richards(cay.get(), out);
      if (t2_then == "synth") {
        out["cayley"] = digraph_json(cay.get());
        ok = ok && synthesize(cay.get(), out);
      }
      t2_out.emit(out);
      return ok ? exit_holds : exit_fails;
    }

    if (*mansilla_cmd) {
      auto g = mansilla_args.load();
      auto set = mansilla_args.generator_set(g.get());
      int found = 0;
      char *report = nullptr;
      check(cayline_mansilla_witness(g.get(), set.data(), set.size(), mansilla_all ? 1 : 0, &found,
                                     &report));
      mansilla_out.emit(take_json(report));
      return found ? exit_holds : exit_fails;
    }

    if (*remcay_cmd) {
      auto g = remcay_args.load();
      auto s1 = remcay_args.resolve(g.get(), remcay_s1);
      auto s2 = remcay_args.resolve(g.get(), remcay_s2);
      int holds = 0;
      check(cayline_remcay_condition(g.get(), s1, s2, &holds));
      remcay_out.emit(json{{"holds", holds != 0}});
      return holds ? exit_holds : exit_fails;
    }

    if (*pnk_cmd) {
      cayline_digraph *raw = nullptr;
      check(cayline_pnk_digraph(pnk_n, pnk_k, &raw));
      DigraphPtr d(raw);
      if (pnk_out.format == "dot")
        pnk_out.emit(digraph_dot(d.get()));
      else
        pnk_out.emit(digraph_json(d.get()));
      return exit_holds;
    }

    if (*iso_cmd) {
      auto a = iso_a.load();
      auto b = iso_b.load();
      cayline_iso_status status{};
      char *report = nullptr;
      check(cayline_isomorphism(a.get(), b.get(), iso_limit, &status, &report));
      iso_out.emit(take_json(report));
      return status == CAYLINE_ISO_ISOMORPHIC ? exit_holds : exit_fails;
    }

    if (*examples_cmd) {
      int all_pass = 0;
      char *report = nullptr;
      check(cayline_example_suite(&all_pass, &report));
      examples_out.emit(take_json(report));
      return all_pass ? exit_holds : exit_fails;
    }
  } catch (const CliError &e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const json::exception &e) {
    std::cerr << "error: malformed library output: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
