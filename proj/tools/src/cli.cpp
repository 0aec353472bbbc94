#include "milnor_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <sstream>

#include "milnor/chow_model.hpp"
#include "milnor/cocycle.hpp"
#include "milnor/cycles.hpp"
#include "milnor/errors.hpp"
#include "milnor/motives.hpp"
#include "milnor/report.hpp"

namespace milnor::cli {

namespace {

using json = nlohmann::ordered_json;

std::string envelope(const RunConfig& c, json result) {
  json j = {{"schema_version", kSchemaVersion}, {"command", to_string(c.command)}, {"n", c.n}, {"result", std::move(result)}};
  return j.dump(2) + "\n";
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
    rows.push_back(r);
  }
  return rows;
}

std::string join_labels(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i];
  return s;
}

RankOptions rank_options(const RunConfig& c) {
  RankOptions o;
  o.model = c.model.value_or(default_rank_model(c.n));
  o.jobs = c.jobs;
  return o;
}

RunResult verify(const RunConfig& c) {
  ReportOptions o = default_report_options(c.n, c.jobs);
  o.ranks = rank_options(c);
  DecompositionReport r = decomposition_report(c.n, o);
  RunResult res;
  res.out = c.format == Format::Json ? envelope(c, json::parse(r.to_json())) : r.to_text();
  for (const auto& f : r.failures()) res.err += "verification failed: " + f + "\n";
  res.exit_code = r.ok() ? kPass : kVerificationFailure;
  return res;
}

RunResult ranks(const RunConfig& c) {
  Variety v = c.variety.value_or(Variety::Y);
  auto g = shared_graph(c.n, v);
  int up_to = std::min(c.max_degree.value_or(g->dimension()), g->dimension());
  GradedRankTable t = chow_ranks(*g, up_to, rank_options(c));
  return {kPass, c.format == Format::Json ? envelope(c, json::parse(t.to_json())) : t.to_text(), {}};
}

struct NamedMatrix {
  std::string name;
  std::vector<std::string> rows, cols;
  IntMatrix m;
};

RunResult gram(const RunConfig& c) {
  std::vector<NamedMatrix> mats;
  const int n = c.n;
  std::vector<std::string> hrow, gcol;
  for (int i = 0; i <= n - 3; ++i) {
    auto y = y_model(n, c.jobs);
    hrow.push_back(y->labels[n - 2][n + i]);
  }
  for (int l = 1; l <= n; ++l) gcol.push_back("g" + std::to_string(l));
  if (c.family == "middle") {
    auto y = y_model(n, c.jobs);
    mats.push_back({"CH^" + std::to_string(n - 2) + "(Y)", y->labels[n - 2], y->labels[n - 2], y->gram[n - 2]});
  } else if (c.family == "h") {
    mats.push_back({"h-family", hrow, hrow, h_family_gram(n, c.jobs)});
  } else if (c.family == "cross") {
    mats.push_back({"gamma x h-family", gcol, hrow, cross_gram(n, c.jobs)});
  } else if (c.family == "X" || c.family == "Y") {
    auto model = c.family == "X" ? oracle_ring(n).X : y_model(n, c.jobs);
    for (int m = 0; m <= model->dim; ++m)
      mats.push_back({"CH^" + std::to_string(m) + " x CH^" + std::to_string(model->dim - m) + " (" + c.family + ")",
                      model->labels[m], model->labels[model->dim - m], model->gram[m]});
  } else {
    return {kUsage, {}, "unknown Gram family '" + c.family + "' (middle, h, cross, X, Y)\n"};
  }
  if (c.format == Format::Json) {
    json out = json::array();
    for (const auto& m : mats)
      out.push_back({{"name", m.name}, {"rows", m.rows}, {"cols", m.cols}, {"det", determinant(m.m).get_str()},
                     {"matrix", matrix_json(m.m)}});
    return {kPass, envelope(c, {{"family", c.family}, {"matrices", out}}), {}};
  }
  std::ostringstream os;
  for (const auto& m : mats) {
    os << m.name << "  det " << determinant(m.m).get_str() << "\n  rows: " << join_labels(m.rows)
       << "\n  cols: " << join_labels(m.cols) << '\n'
       << m.m.to_string() << '\n';
  }
  return {kPass, os.str(), {}};
}

RunResult graph(const RunConfig& c) {
  auto g = shared_graph(c.n, c.variety.value_or(Variety::Y));
  if (c.format == Format::Dot) return {kPass, g->to_dot(), {}};
  if (c.format == Format::Json) return {kPass, envelope(c, json::parse(g->to_json())), {}};
  std::ostringstream os;
  os << to_string(g->variety()) << " n = " << c.n << ": " << g->vertex_count() << " vertices, " << g->edges().size()
     << " edges, dimension " << g->dimension() << '\n';
  for (const Edge& e : g->edges())
    os << "  " << g->vertices()[e.u].label() << " -- " << g->vertices()[e.v].label() << "  " << to_string(e.kind) << "  "
       << e.weight.to_string() << '\n';
  return {kPass, os.str(), {}};
}

RunResult diagram(const RunConfig& c) {
  std::string d = ascii_diagram(c.n);
  if (c.format == Format::Json) {
    json motives = json::array();
    for (int i = 0; i <= c.n - 3; ++i) motives.push_back(i ? "M(SB(A))(" + std::to_string(i) + ")" : "M(SB(A))");
    motives.push_back("M(Spec L)(" + std::to_string(c.n - 2) + ")");
    return {kPass, envelope(c, {{"motives", motives}, {"diagram", d}}), {}};
  }
  return {kPass, d, {}};
}

RunResult class_output(const RunConfig& c, const EquivariantClass& cls, json extra, const std::string& header) {
  if (c.format == Format::Json) {
    extra["class"] = json::parse(cls.to_json());
    return {kPass, envelope(c, std::move(extra)), {}};
  }
  return {kPass, header + cls.to_text(), {}};
}

RunResult cycle(const RunConfig& c) {
  auto cls = gamma(c.n, c.gamma);
  return class_output(c, cls, {{"gamma", c.gamma}},
                      "gamma_" + std::to_string(c.gamma) + " on Y, degree " + std::to_string(cls.degree()) + "\n");
}

RunResult monodromy(const RunConfig& c) {
  auto m = MonodromyElement::eta_power(c.n, c.k);
  EquivariantClass cls = gamma(c.n, 1);
  if (c.apply.rfind("gamma:", 0) == 0) {
    int l = 0;
    try {
      l = std::stoi(c.apply.substr(6));
    } catch (const std::exception&) {
      return {kUsage, {}, "bad --apply value '" + c.apply + "'\n"};
    }
    if (l < 1 || l > c.n) return {kUsage, {}, "gamma index must lie in 1.." + std::to_string(c.n) + "\n"};
    cls = gamma(c.n, l);
  } else if (c.apply == "h") {
    cls = lift_h(c.n);
  } else if (c.apply == "H") {
    cls = lift_H(c.n);
  } else {
    return {kUsage, {}, "bad --apply value '" + c.apply + "' (gamma:<l>, h, H)\n"};
  }
  auto image = act(m, cls);
  return class_output(c, image, {{"k", c.k}, {"sigma", m.sigma().to_string()}, {"apply", c.apply}},
                      "eta^" + std::to_string(c.k) + " = " + m.sigma().to_string() + " applied to " + c.apply + "\n");
}

RunResult cocycle(const RunConfig& c) {
  CocycleReport r = verify_cocycle(CyclicAlgebraSpec(c.n));
  RunResult res{r.ok() ? kPass : kVerificationFailure,
                c.format == Format::Json ? envelope(c, json::parse(r.to_json())) : r.to_text(), {}};
  for (const auto& id : r.identities)
    if (!id.pass) res.err += "verification failed: " + id.identity + " (k=" + std::to_string(id.k) + ")\n";
  if (!r.distinct_eigenvalues) res.err += "verification failed: diagonal entries of rho_u pairwise distinct\n";
  return res;
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::Verify: return "verify";
    case Command::Ranks: return "ranks";
    case Command::Gram: return "gram";
    case Command::Graph: return "graph";
    case Command::Diagram: return "diagram";
    case Command::Cycle: return "cycle";
    case Command::Monodromy: return "monodromy";
    case Command::Cocycle: return "cocycle";
  }
  return "?";
}

void validate(const RunConfig& c) {
  if (c.max_n < 3 || c.max_n > 8) throw InvalidArgument("configured maximum n must lie in 3..8");
  if (c.n < 3 || c.n > c.max_n) throw InvalidArgument("--n must lie in 3.." + std::to_string(c.max_n));
  if (c.format == Format::Dot && c.command != Command::Graph) throw InvalidArgument("dot format is only valid for graph");
  if (c.jobs < 1) throw InvalidArgument("--jobs must be positive");
  if (c.max_degree && *c.max_degree < 0) throw InvalidArgument("--max-degree must be non-negative");
  if (c.command == Command::Cycle && (c.gamma < 1 || c.gamma > c.n))
    throw InvalidArgument("--gamma must lie in 1.." + std::to_string(c.n));
  if (c.variety && (c.command == Command::Cycle || c.command == Command::Monodromy))
    throw InvalidArgument("--variety does not apply to " + to_string(c.command));
}

RunResult run(const RunConfig& config) {
  try {
    validate(config);
  } catch (const InvalidArgument& e) {
    return {kUsage, {}, std::string("usage error: ") + e.what() + "\n"};
  }
  try {
    switch (config.command) {
      case Command::Verify: return verify(config);
      case Command::Ranks: return ranks(config);
      case Command::Gram: return gram(config);
      case Command::Graph: return graph(config);
      case Command::Diagram: return diagram(config);
      case Command::Cycle: return cycle(config);
      case Command::Monodromy: return monodromy(config);
      case Command::Cocycle: return cocycle(config);
    }
  } catch (const VerificationError& e) {
    return {kVerificationFailure, {}, std::string("verification failed: ") + e.what() + "\n"};
  } catch (const InvalidArgument& e) {
    return {kUsage, {}, std::string("usage error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kVerificationFailure, {}, std::string("error: ") + e.what() + "\n"};
  }
  return {kUsage, {}, "unknown command\n"};
}

RunResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Motivic decomposition checks for the Milnor hypersurface of a cyclic algebra", "milnor"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  RunConfig c;
  std::string variety, format = "text", model;

  auto common = [&](CLI::App* sub, bool has_variety) {
    sub->add_option("--n", c.n, "degree of the algebra (3..8)");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--jobs", c.jobs, "worker threads");
    if (has_variety) sub->add_option("--variety", variety, "X or Y")->check(CLI::IsMember({"X", "Y"}));
  };
  struct Sub {
    Command cmd;
    CLI::App* app;
  };
  std::vector<Sub> subs;
  auto add = [&](Command cmd, const std::string& help, bool has_variety) {
    CLI::App* s = app.add_subcommand(to_string(cmd), help);
    common(s, has_variety);
    subs.push_back({cmd, s});
    return s;
  };
  auto* v = add(Command::Verify, "run every verification; exit 1 on a failed verdict", false);
  v->add_option("--model", model, "rank model")->check(CLI::IsMember({"full", "generic-plane"}));
  auto* r = add(Command::Ranks, "graded GKM and Chow ranks", true);
  r->add_option("--max-degree", c.max_degree, "last degree of the table");
  r->add_option("--model", model, "rank model")->check(CLI::IsMember({"full", "generic-plane"}));
  add(Command::Gram, "Gram matrices", false)
      ->add_option("--family", c.family, "middle, h, cross, X or Y")
      ->check(CLI::IsMember({"middle", "h", "cross", "X", "Y"}));
  add(Command::Graph, "GKM graph as text, json or dot", true);
  add(Command::Diagram, "ASCII picture of the decomposition", false);
  add(Command::Cycle, "the class gamma_l on Y", false)->add_option("--gamma", c.gamma, "index l");
  auto* m = add(Command::Monodromy, "apply eta^k to a class", false);
  m->add_option("--k", c.k, "power of eta");
  m->add_option("--apply", c.apply, "gamma:<l>, h or H");
  add(Command::Cocycle, "generator identities of the cyclic algebra", false);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    return {kPass, app.help(), {}};
  } catch (const CLI::CallForAllHelp& e) {
    return {kPass, app.help("", CLI::AppFormatMode::All), {}};
  } catch (const CLI::ParseError& e) {
    std::string help;
    for (const auto& s : subs)
      if (s.app->parsed()) help = s.app->help();
    return {kUsage, {}, std::string("usage error: ") + e.what() + "\n" + (help.empty() ? app.help() : help)};
  }
  for (const auto& s : subs)
    if (s.app->parsed()) c.command = s.cmd;
  if (!variety.empty()) c.variety = parse_variety(variety);
  c.format = format == "json" ? Format::Json : format == "dot" ? Format::Dot : Format::Text;
  if (!model.empty()) c.model = model == "full" ? RankModel::Full : RankModel::GenericPlane;
  return run(c);
}

}  // namespace milnor::cli
