#include "gph/cli.hpp"

#include "gph/constructions.hpp"
#include "gph/dynamics.hpp"
#include "gph/error.hpp"
#include "gph/graph_json.hpp"
#include "gph/homotopy.hpp"
#include "gph/model_structure.hpp"
#include "gph/spectral.hpp"
#include "gph/witt.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace gph::cli {

Config Config::from_environment() {
  Config config{std::nullopt, kDefaultSearchBudget, OutputFormat::kText};
  if (const char* env = std::getenv("GPH_SEARCH_BUDGET"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      unsigned long long value = std::stoull(env, &used);
      if (used != std::string(env).size() || value == 0) throw std::invalid_argument(env);
      config.search_budget = value;
    } catch (const std::exception&) {
      throw InvalidInput(std::string("GPH_SEARCH_BUDGET: not a positive integer: ") + env);
    }
  }
  return config;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput(path + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Json load_json(const std::string& path) { return parse_json(read_file(path), path); }

// A file path, or a built-in name when no such file exists.
Graph load_graph(const std::string& arg) {
  if (!std::filesystem::exists(arg) && is_graph_name(arg)) return named_graph(arg);
  return graph_from_json(load_json(arg), arg);
}

GraphMorphism load_morphism(const std::string& path) {
  return morphism_from_json(load_json(path), path);
}

Json integer_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return Json(value.convert_to<std::int64_t>());
  }
  return Json(value.str());
}

Json integers_json(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(integer_json(v));
  return out;
}

Json polynomial_json(const IntPolynomial& p, const std::string& variable,
                     IntPolynomial::Order order = IntPolynomial::Order::kAscending) {
  return Json{{"text", p.to_string(variable, order)}, {"coefficients", integers_json(p.coefficients())}};
}

std::string join(const std::vector<Integer>& values, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? sep : "") + values[i].str();
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::size_t truncation(const Config& config, std::initializer_list<const Graph*> graphs) {
  if (config.truncation_order) return *config.truncation_order;
  std::size_t nodes = 0;
  for (const Graph* g : graphs) nodes = std::max(nodes, g->node_count());
  return std::max<std::size_t>(2 * nodes, 1);
}

struct Args {
  Config config;
  bool reversed = false;
  std::vector<std::string> files;
  std::string ghost_list;
  std::string map_file;
  std::size_t nodes = 0;
  std::size_t arcs = 0;
  std::string family = "exhaustive";
  std::string out_file;
  std::size_t workers = 0;
};

int cmd_charpoly(const Args& args, std::ostream& out) {
  const Graph g = load_graph(args.files.at(0));
  const AdjacencyMatrix a = adjacency_matrix(g);
  const IntPolynomial p = char_poly(a);
  const IntPolynomial r = reversed_char_poly(a);
  if (args.config.output_format == OutputFormat::kJson) {
    out << Json{{"char_poly", polynomial_json(p, "x", IntPolynomial::Order::kDescending)},
                {"reversed_char_poly", polynomial_json(r, "u")}}
               .dump(2)
        << "\n";
  } else {
    out << (args.reversed ? r.to_string("u")
                          : p.to_string("x", IntPolynomial::Order::kDescending)) << "\n";
  }
  return kSuccess;
}

int cmd_zeta(const Args& args, std::ostream& out) {
  const Graph g = load_graph(args.files.at(0));
  const ZetaSeries z = zeta_series(g, truncation(args.config, {&g}));
  if (args.config.output_format == OutputFormat::kJson) {
    out << Json{{"rational_form", z.rational_form()},
                {"denominator", polynomial_json(z.denominator, "u")},
                {"upto", z.truncation_order},
                {"coefficients", integers_json(z.coefficients)}}
               .dump(2)
        << "\n";
  } else {
    out << "zeta = " << z.rational_form() << "\n";
    out << "coefficients (u^0..u^" << z.truncation_order << "): " << join(z.coefficients, ", ")
        << "\n";
  }
  return kSuccess;
}

int cmd_census(const Args& args, std::ostream& out) {
  const Graph g = load_graph(args.files.at(0));
  const std::size_t upto = truncation(args.config, {&g});
  const auto counts = cycle_counts(g, upto);
  if (args.config.output_format == OutputFormat::kJson) {
    out << Json{{"upto", upto}, {"cycle_counts", integers_json(counts)}}.dump(2) << "\n";
  } else {
    out << "n\tc_n\n";
    for (std::size_t n = 1; n <= upto; ++n) out << n << "\t" << counts[n - 1] << "\n";
  }
  return kSuccess;
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      values.emplace_back(item);
    } catch (const std::exception&) {
      throw InvalidInput("--ghost: not an integer: '" + item + "'");
    }
  }
  if (values.empty()) throw InvalidInput("--ghost: empty sequence");
  return values;
}

int cmd_witt(const Args& args, std::ostream& out) {
  AlmostFiniteZSet set;
  std::size_t upto = 0;
  if (!args.ghost_list.empty()) {
    if (!args.files.empty()) throw InvalidInput("witt takes a graph or --ghost, not both");
    auto ghost = std::make_shared<std::vector<Integer>>(parse_integer_list(args.ghost_list));
    upto = args.config.truncation_order.value_or(ghost->size());
    if (upto > ghost->size()) throw InvalidInput("--upto exceeds the supplied ghost sequence");
    set = AlmostFiniteZSet::from_ghost([ghost](std::size_t n) { return (*ghost)[n - 1]; },
                                       "ghost list");
  } else {
    if (args.files.empty()) throw InvalidInput("witt needs a graph or --ghost");
    const Graph g = load_graph(args.files.at(0));
    upto = truncation(args.config, {&g});
    set = from_graph(g);
  }
  const auto ghost = set.ghost_upto(upto);
  std::vector<Integer> witt;
  try {
    witt = set.witt_upto(upto);
  } catch (const NotRealizable& e) {
    out << "not realizable: " << e.what() << "\n";
    return kNegativeVerdict;
  }
  if (args.config.output_format == OutputFormat::kJson) {
    out << Json{{"ghost", integers_json(ghost)}, {"witt", integers_json(witt)}, {"upto", upto}}
               .dump(2)
        << "\n";
  } else {
    out << "n\tc_n\ts_n\n";
    for (std::size_t n = 1; n <= upto; ++n) {
      out << n << "\t" << ghost[n - 1] << "\t" << witt[n - 1] << "\n";
    }
  }
  return kSuccess;
}

int cmd_classify(const Args& args, std::ostream& out) {
  Json report = Json::array();
  std::ostringstream text;
  for (const auto& path : args.files) {
    const GraphMorphism f = load_morphism(path);
    SearchBudget budget(args.config.search_budget);
    const std::size_t bound =
        args.config.truncation_order.value_or(std::max<std::size_t>(
            {f.source().node_count(), f.target().node_count(), std::size_t{1}}));
    const bool surjecting = is_surjecting(f);
    const bool whiskering = is_whiskering(f);
    const bool acyclic = is_acyclic_bounded(f, bound, budget);
    report.push_back(Json{{"morphism", path},
                          {"surjecting", surjecting},
                          {"whiskering", whiskering},
                          {"acyclic_up_to", bound},
                          {"acyclic", acyclic}});
    text << path << "\n"
         << "  surjecting            " << yes_no(surjecting) << "\n"
         << "  whiskering            " << yes_no(whiskering) << "\n"
         << "  acyclic (up to n=" << bound << ")" << std::string(bound < 10 ? 2 : 1, ' ')
         << yes_no(acyclic) << "\n";
  }
  if (args.config.output_format == OutputFormat::kJson) {
    out << report.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return kSuccess;
}

int cmd_lift(const Args& args, std::ostream& out) {
  if (args.files.size() != 4) throw InvalidInput("lift needs four morphism files: left right top bottom");
  const LiftingProblem problem(load_morphism(args.files[0]), load_morphism(args.files[1]),
                               load_morphism(args.files[2]), load_morphism(args.files[3]));
  SearchBudget budget(args.config.search_budget);
  const auto lift = find_lift(problem, budget);
  if (!lift) {
    out << (args.config.output_format == OutputFormat::kJson ? "null" : "NO-LIFT") << "\n";
    return kNegativeVerdict;
  }
  out << to_json(*lift).dump(2) << "\n";
  return kSuccess;
}

int cmd_cofibrant_replace(const Args& args, std::ostream& out) {
  const Graph g = load_graph(args.files.at(0));
  SearchBudget budget(args.config.search_budget);
  const CycleResolution res = cofibrant_replacement(g, truncation(args.config, {&g}), budget);

  auto walk_ids = [&](const std::vector<std::size_t>& walk) {
    Json ids = Json::array();
    for (std::size_t a : walk) ids.push_back(g.arc(a).id);
    return ids;
  };
  if (args.config.output_format == OutputFormat::kJson) {
    Json rows = Json::array();
    for (const auto& row : res.necklaces) {
      Json reps = Json::array();
      for (const auto& walk : row.representatives) reps.push_back(walk_ids(walk));
      rows.push_back(Json{{"n", row.length},
                          {"ghost", integer_json(row.ghost)},
                          {"witt", integer_json(row.witt)},
                          {"representatives", reps}});
    }
    out << Json{{"graph", to_json(res.graph)},
                {"counit", to_json(res.counit)},
                {"necklaces", rows}}
               .dump(2)
        << "\n";
  } else {
    out << to_json(res.graph).dump(2) << "\n";
    out << "n\tc_n\ts_n\tnecklaces\n";
    for (const auto& row : res.necklaces) {
      out << row.length << "\t" << row.ghost << "\t" << row.witt << "\t";
      for (std::size_t i = 0; i < row.representatives.size(); ++i) {
        out << (i ? " " : "") << "[";
        const auto& walk = row.representatives[i];
        for (std::size_t j = 0; j < walk.size(); ++j) out << (j ? " " : "") << g.arc(walk[j]).id;
        out << "]";
      }
      out << "\n";
    }
  }
  return kSuccess;
}

int cmd_homotopy_eq(const Args& args, std::ostream& out) {
  if (args.files.size() != 2) throw InvalidInput("homotopy-eq needs two graphs");
  const Graph x = load_graph(args.files[0]);
  const Graph y = load_graph(args.files[1]);
  const bool equivalent = homotopy_equivalent(x, y);
  const auto sx = signature(x).to_string();
  const auto sy = signature(y).to_string();
  if (args.config.output_format == OutputFormat::kJson) {
    out << Json{{"homotopy_equivalent", equivalent},
                {"signatures", Json::array({sx, sy})}}
               .dump(2)
        << "\n";
  } else {
    out << (equivalent ? "homotopy equivalent" : "NOT homotopy equivalent") << "\n"
        << "signature(" << args.files[0] << ") = " << sx << "\n"
        << "signature(" << args.files[1] << ") = " << sy << "\n";
  }
  return equivalent ? kSuccess : kNegativeVerdict;
}

int cmd_explore(const Args& args, std::ostream& out) {
  if (args.family != "exhaustive" && args.family != "builtin") {
    throw InvalidInput("--family must be 'exhaustive' or 'builtin'");
  }
  ExploreOptions options;
  options.max_nodes = args.nodes;
  options.max_arcs = args.arcs;
  options.exhaustive = args.family == "exhaustive";
  options.search_budget = args.config.search_budget;
  options.workers = args.workers;
  const ExploreReport report = explore(options);

  Json buckets = Json::array();
  std::size_t flagged = 0;
  std::ostringstream text;
  for (const auto& bucket : report.buckets) {
    Json members = Json::array();
    for (const auto& m : bucket.members) {
      members.push_back(Json{{"name", m.name}, {"graph", to_json(m.graph)}});
    }
    const bool interesting = bucket.has_nonisomorphic_pair();
    buckets.push_back(Json{{"signature", polynomial_json(bucket.signature.reversed_char_poly, "u")},
                           {"members", members},
                           {"isomorphic", bucket.isomorphic},
                           {"has_nonisomorphic_pair", interesting}});
    if (!interesting) continue;
    ++flagged;
    text << bucket.signature.to_string() << ":";
    for (const auto& m : bucket.members) text << " " << m.name;
    text << "\n";
  }
  const Json json{{"max_nodes", args.nodes},
                  {"max_arcs", args.arcs},
                  {"family", args.family},
                  {"graphs_examined", report.graphs_examined},
                  {"buckets", buckets}};
  if (!args.out_file.empty()) {
    std::ofstream file(args.out_file, std::ios::binary);
    if (!file) throw InvalidInput(args.out_file + ": cannot write report");
    file << json.dump(2) << "\n";
  }
  if (args.config.output_format == OutputFormat::kJson) {
    out << json.dump(2) << "\n";
  } else {
    out << "examined " << report.graphs_examined << " graphs, " << report.buckets.size()
        << " signature classes, " << flagged << " with non-isomorphic members\n"
        << text.str();
  }
  return kSuccess;
}

std::string element_list(const FinNSet& set) {
  std::string out = "{";
  for (std::size_t x = 0; x < set.size(); ++x) out += (x ? ", " : "") + set.id(x);
  return out + "}";
}

int cmd_nset(const Args& args, std::ostream& out) {
  const bool json = args.config.output_format == OutputFormat::kJson;
  if (!args.map_file.empty()) {
    const NSetMap f = nset_map_from_json(load_json(args.map_file), args.map_file);
    const NSetMapFlags flags = classify_nset_map(f, args.config.truncation_order);
    if (json) {
      out << Json{{"surjecting", flags.surjecting},
                  {"whiskering", flags.whiskering},
                  {"acyclic_up_to", flags.acyclic_bound},
                  {"acyclic", flags.acyclic}}
                 .dump(2)
          << "\n";
    } else {
      out << "surjecting            " << yes_no(flags.surjecting) << "\n"
          << "whiskering            " << yes_no(flags.whiskering) << "\n"
          << "acyclic (up to n=" << flags.acyclic_bound << ")  " << yes_no(flags.acyclic) << "\n";
    }
    return kSuccess;
  }
  if (args.files.empty()) throw InvalidInput("nset needs an N-set file or --map");
  const FinNSet set = nset_from_json(load_json(args.files[0]), args.files[0]);
  const Fibrancy fib = nset_fibrancy(set);
  const FinZSet periodic = periodic_part(set);
  if (json) {
    out << Json{{"fibrant", fib.fibrant},
                {"cofibrant", fib.cofibrant},
                {"periodic_part", to_json(periodic.as_nset())},
                {"cayley_graph", to_json(cayley_graph(set))}}
               .dump(2)
        << "\n";
  } else {
    out << "elements       " << set.size() << "\n"
        << "fibrant        " << yes_no(fib.fibrant) << "\n"
        << "cofibrant      " << yes_no(fib.cofibrant) << "\n"
        << "periodic part  " << element_list(periodic.as_nset()) << "\n";
  }
  return kSuccess;
}

int cmd_zset(const Args& args, std::ostream& out) {
  const bool json = args.config.output_format == OutputFormat::kJson;
  if (!args.map_file.empty()) {
    const NSetMap f = nset_map_from_json(load_json(args.map_file), args.map_file);
    if (!f.source().is_bijective() || !f.target().is_bijective()) {
      throw InvalidInput(args.map_file + ": source and target must be Z-sets");
    }
    const bool acyclic = zset_is_acyclic(f);
    const bool surjecting = classify_nset_map(f).surjecting;
    if (json) {
      out << Json{{"surjecting", surjecting}, {"acyclic", acyclic}}.dump(2) << "\n";
    } else {
      out << "surjecting  " << yes_no(surjecting) << "\n"
          << "acyclic     " << yes_no(acyclic) << "\n";
    }
    return kSuccess;
  }
  if (args.files.empty()) throw InvalidInput("zset needs a Z-set file or --map");
  const FinZSet set = zset_from_json(load_json(args.files[0]), args.files[0]);
  const auto orbits = set.orbit_counts();
  if (json) {
    Json counts = Json::object();
    for (std::size_t n = 1; n < orbits.size(); ++n) {
      if (orbits[n] != 0) counts[std::to_string(n)] = orbits[n];
    }
    out << Json{{"elements", set.size()}, {"orbits", counts}}.dump(2) << "\n";
  } else {
    out << "elements  " << set.size() << "\n" << "orbits   ";
    for (std::size_t n = 1; n < orbits.size(); ++n) {
      if (orbits[n] != 0) out << " " << orbits[n] << " x Z/" << n;
    }
    out << "\n";
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Args args;
  std::optional<std::size_t> upto;
  std::optional<std::uint64_t> budget_flag;
  bool json = false;

  CLI::App app{"Homotopy invariants of finite directed multigraphs", "gph"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--upto", upto, "Truncation order / period bound")->check(CLI::PositiveNumber);
  app.add_option("--budget", budget_flag, "Search-node budget for exhaustive searches")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", json, "Machine-readable output");

  const auto graph_help = "Graph JSON file or built-in name (cross, uc4, cycle:n, ...)";
  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial det(xI - A)");
  charpoly->add_option("graph", args.files, graph_help)->required()->expected(1);
  charpoly->add_flag("--reversed", args.reversed, "Print det(I - uA) instead");

  auto* zeta = app.add_subcommand("zeta", "Zeta series 1/det(I - uA) and its expansion");
  zeta->add_option("graph", args.files, graph_help)->required()->expected(1);

  auto* census = app.add_subcommand("census", "Cycle counts c_n = tr(A^n)");
  census->add_option("graph", args.files, graph_help)->required()->expected(1);

  auto* witt = app.add_subcommand("witt", "Ghost components and Witt coordinates");
  witt->add_option("graph", args.files, graph_help)->expected(0, 1);
  witt->add_option("--ghost", args.ghost_list, "Comma-separated ghost sequence c_1,c_2,...");

  auto* classify = app.add_subcommand("classify", "Surjecting / Whiskering / Acyclic flags");
  classify->add_option("morphisms", args.files, "Morphism JSON files")->required();

  auto* lift = app.add_subcommand("lift", "Solve a lifting problem");
  lift->add_option("morphisms", args.files, "left right top bottom morphism files")
      ->required()
      ->expected(4);

  auto* replace = app.add_subcommand("cofibrant-replace", "Truncated cycle resolution c(X)");
  replace->add_option("graph", args.files, graph_help)->required()->expected(1);

  auto* homotopy = app.add_subcommand("homotopy-eq", "Decide homotopy equivalence");
  homotopy->add_option("graphs", args.files, graph_help)->required()->expected(2);

  auto* explore_cmd = app.add_subcommand("explore", "Search for almost-isospectral pairs");
  explore_cmd->add_option("--nodes", args.nodes, "Maximum node count")->required();
  explore_cmd->add_option("--arcs", args.arcs, "Maximum arc count")->required();
  explore_cmd->add_option("--family", args.family, "exhaustive | builtin");
  explore_cmd->add_option("--out", args.out_file, "Write the JSON report here");
  explore_cmd->add_option("--workers", args.workers, "Worker threads (0 = all cores)");

  auto* nset = app.add_subcommand("nset", "Fibrancy and periodic part of an N-set");
  nset->add_option("nset", args.files, "N-set JSON file")->expected(0, 1);
  nset->add_option("--map", args.map_file, "Classify an N-set map instead");

  auto* zset = app.add_subcommand("zset", "Orbit structure of a Z-set");
  zset->add_option("zset", args.files, "Z-set JSON file")->expected(0, 1);
  zset->add_option("--map", args.map_file, "Classify a Z-set map instead");

  std::vector<const char*> cargs{"gph"};
  for (const auto& a : argv) cargs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  std::ostringstream buffer;
  int status = kSuccess;
  try {
    args.config = Config::from_environment();
    args.config.truncation_order = upto;
    if (budget_flag) args.config.search_budget = *budget_flag;
    args.config.output_format = json ? OutputFormat::kJson : OutputFormat::kText;

    if (charpoly->parsed()) status = cmd_charpoly(args, buffer);
    if (zeta->parsed()) status = cmd_zeta(args, buffer);
    if (census->parsed()) status = cmd_census(args, buffer);
    if (witt->parsed()) status = cmd_witt(args, buffer);
    if (classify->parsed()) status = cmd_classify(args, buffer);
    if (lift->parsed()) status = cmd_lift(args, buffer);
    if (replace->parsed()) status = cmd_cofibrant_replace(args, buffer);
    if (homotopy->parsed()) status = cmd_homotopy_eq(args, buffer);
    if (explore_cmd->parsed()) status = cmd_explore(args, buffer);
    if (nset->parsed()) status = cmd_nset(args, buffer);
    if (zset->parsed()) status = cmd_zset(args, buffer);
  } catch (const BudgetExceeded& e) {
    err << "gph: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const InvalidInput& e) {
    err << "gph: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "gph: internal error: " << e.what() << "\n";
    return kInternalError;
  }
  out << buffer.str();
  return status;
}

}  // namespace gph::cli
