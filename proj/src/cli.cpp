#include "rtd/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "rtd/be.hpp"
#include "rtd/ckt.hpp"
#include "rtd/json_io.hpp"
#include "rtd/optimizer.hpp"
#include "rtd/verifier.hpp"

namespace rtd::cli {

namespace {

enum class Format { json, csv, text };

struct Globals {
  Format format = Format::text;
  std::uint64_t seed = 1;
  int grid_bits = 12;
  unsigned threads = 0; // 0: all cores
};

std::string fixed15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"')
      q += '"';
    q += c;
  }
  return q + "\"";
}

using Row = std::vector<std::string>;

void print_csv(std::ostream &out, const Row &header, const std::vector<Row> &rows) {
  auto line = [&](const Row &r) {
    for (std::size_t i = 0; i < r.size(); ++i)
      out << (i ? "," : "") << csv_field(r[i]);
    out << '\n';
  };
  line(header);
  for (const auto &r : rows)
    line(r);
}

void print_table(std::ostream &out, const Row &header, const std::vector<Row> &rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i)
    width[i] = header[i].size();
  for (const auto &r : rows)
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], r[i].size());
  auto line = [&](const Row &r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += r[i];
      if (i + 1 < r.size())
        s += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << s << '\n';
  };
  line(header);
  for (const auto &r : rows)
    line(r);
}

void emit_rows(std::ostream &out, Format f, const Row &header, const std::vector<Row> &rows) {
  if (f == Format::csv)
    print_csv(out, header, rows);
  else
    print_table(out, header, rows);
}

std::string sizes_str(const std::vector<int> &sizes) {
  std::string s;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    s += (i ? " " : "") + std::to_string(sizes[i]);
  return s;
}

std::string weights_str(const WeightAssignment &w) {
  std::string s;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    s += (s.empty() ? "" : " ") + std::to_string(it->first) + ":" + it->second.str();
  return s;
}

std::string subset_str(const VertexSubset &v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v.members()[i]);
  return s + "}";
}

Json subset_json(const VertexSubset &v) { return Json(v.members()); }

Json witness_json(const WeightedCliqueWitness &w) {
  return {{"s1", subset_json(w.s1)}, {"s2", subset_json(w.s2)}, {"score", w.score()}};
}

OptimizerConfig optimizer_config(const Globals &g) {
  OptimizerConfig cfg;
  cfg.grid_bits = g.grid_bits;
  cfg.threads = g.threads;
  return cfg;
}

// ---- density ----

void cmd_density(const Globals &g, int s, int t, std::ostream &out) {
  const OptimizationResult r = rho(s, t, optimizer_config(g));
  if (g.format == Format::json) {
    Json j;
    j["command"] = "density";
    j["s"] = s;
    j["t"] = t;
    j["density"] = rational_json(r.density);
    j["best"] = r.best;
    j["best_spec"] = spec_to_json(r.per_spec[r.best].spec);
    j["ties"] = r.ties;
    j["specs"] = Json::array();
    for (const auto &o : r.per_spec)
      j["specs"].push_back({{"spec", spec_to_json(o.spec)},
                            {"weights", weights_to_json(o.weights)},
                            {"certified", rational_json(o.certified)},
                            {"estimate", o.estimate},
                            {"argmax", o.argmax},
                            {"degenerate", o.degenerate}});
    out << j.dump(2) << '\n';
    return;
  }
  std::vector<Row> rows;
  for (std::size_t i = 0; i < r.per_spec.size(); ++i) {
    const auto &o = r.per_spec[i];
    const bool tie = std::find(r.ties.begin(), r.ties.end(), i) != r.ties.end();
    rows.push_back({std::to_string(o.spec.b), std::to_string(o.spec.a), sizes_str(o.spec.part_sizes), weights_str(o.weights),
                    o.certified.str(), fixed15(o.certified.to_double()), fixed15(o.estimate), o.degenerate ? "yes" : "no",
                    i == r.best ? "best" : tie ? "tie" : ""});
  }
  const Row header{"b", "a", "part_sizes", "weights", "certified", "certified_float", "estimate", "degenerate", "mark"};
  if (g.format == Format::text)
    out << "s=" << s << " t=" << t << " density " << r.density.str() << " (" << fixed15(r.density.to_double()) << ")\n";
  emit_rows(out, g.format, header, rows);
}

// ---- audit ----

void cmd_audit(const Globals &g, int s, int t_min, int t_max, std::ostream &out) {
  if (t_max < t_min)
    throw std::domain_error("--t-max is below --t-min");
  std::vector<AuditReport> reports;
  for (int t = t_min; t <= t_max; ++t)
    reports.push_back(audit_conjecture(s, t, optimizer_config(g)));
  if (g.format == Format::json) {
    Json j;
    j["command"] = "audit";
    j["s"] = s;
    j["rows"] = Json::array();
    for (const auto &a : reports) {
      Json row{{"t", a.t},
               {"conjectured_b", a.conjectured_b},
               {"observed_b", a.observed_b},
               {"counterexample", a.counterexample},
               {"margin", rational_json(a.margin)},
               {"best_density", rational_json(a.best_density)},
               {"conjectured_density", rational_json(a.conjectured_density)}};
      if (a.construction) {
        const auto &c = *a.construction;
        row["construction"] = {{"spec", spec_to_json(c.spec)},
                               {"weights", weights_to_json(c.weights)},
                               {"density", rational_json(c.density)},
                               {"balanced_bound", rational_json(c.balanced_bound)},
                               {"beats_conjectured", c.beats_conjectured},
                               {"beats_balanced_bound", c.beats_balanced_bound}};
      } else {
        row["construction"] = nullptr;
      }
      j["rows"].push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
    return;
  }
  std::vector<Row> rows;
  for (const auto &a : reports)
    rows.push_back({std::to_string(a.t), std::to_string(a.conjectured_b), std::to_string(a.observed_b),
                    a.counterexample ? "true" : "false", a.margin.str(), fixed15(a.margin.to_double()),
                    a.best_density.str(), fixed15(a.best_density.to_double()),
                    a.construction ? (a.construction->beats_conjectured ? "beats" : "loses") : "-"});
  emit_rows(out, g.format,
            {"t", "conjectured_b", "observed_b", "counterexample", "margin", "margin_float", "best_density", "best_density_float",
             "construction"},
            rows);
}

// ---- check ----

Json issues_json(const ValidationReport &rep) {
  Json arr = Json::array();
  for (const auto &i : rep.issues)
    arr.push_back({{"severity", i.severity == ValidationIssue::Severity::error ? "error" : "warning"},
                   {"message", i.message},
                   {"vertices", i.vertices}});
  return arr;
}

int cmd_check(const Globals &g, const std::string &path, int t, std::ostream &out, std::ostream &err) {
  const WeightedGraph graph = read_weighted_graph(path);
  const ValidationReport rep = validate(graph);
  if (!rep.valid()) {
    err << "invalid weighted graph: " << rep.summary() << '\n';
    return usage_error;
  }
  const FreenessResult fr = is_ckt_free(graph, static_cast<std::size_t>(t));
  const std::size_t score = graph.order() ? max_weighted_clique_score(graph).score : 0;
  if (g.format == Format::json) {
    Json j;
    j["command"] = "check";
    j["t"] = t;
    j["vertices"] = graph.order();
    j["issues"] = issues_json(rep);
    j["score"] = score;
    j["free"] = fr.free;
    j["witness"] = fr.witness ? witness_json(*fr.witness) : Json(nullptr);
    j["trimmed"] = fr.trimmed ? witness_json(*fr.trimmed) : Json(nullptr);
    out << j.dump(2) << '\n';
    return ok;
  }
  emit_rows(out, g.format, {"t", "vertices", "score", "free", "witness_s1", "witness_s2", "trimmed_s1", "trimmed_s2"},
            {{std::to_string(t), std::to_string(graph.order()), std::to_string(score), fr.free ? "true" : "false",
              fr.witness ? subset_str(fr.witness->s1) : "-", fr.witness ? subset_str(fr.witness->s2) : "-",
              fr.trimmed ? subset_str(fr.trimmed->s1) : "-", fr.trimmed ? subset_str(fr.trimmed->s2) : "-"}});
  for (const auto &i : rep.issues)
    err << "warning: " << i.message << '\n';
  return ok;
}

// ---- search ----

std::vector<Rational> parse_alphabet(const std::string &text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(Rational::parse(item));
  return out;
}

int cmd_search(const Globals &g, const SearchConfig &cfg, std::ostream &out, std::ostream &err) {
  SearchResult r;
  try {
    r = brute_force_extremal(cfg);
  } catch (const SearchRefused &e) {
    err << "search refused: " << e.what() << '\n';
    return refused;
  }
  if (g.format == Format::json) {
    Json j;
    j["command"] = "search";
    j["n"] = cfg.n;
    j["s"] = cfg.s;
    j["t"] = cfg.t;
    j["denominator"] = cfg.denominator();
    Json alpha = Json::array();
    for (const auto &x : cfg.edge_alphabet)
      alpha.push_back(x.str());
    j["alphabet"] = alpha;
    j["density"] = rational_json(r.density);
    j["space"] = r.space;
    j["assignments_examined"] = r.assignments_examined;
    j["free_assignments"] = r.free_assignments;
    j["best"] = graph_to_json(r.best);
    j["maximizers"] = Json::array();
    for (const auto &m : r.maximizers)
      j["maximizers"].push_back(graph_to_json(m));
    j["maximizers_truncated"] = r.maximizers_truncated;
    out << j.dump(2) << '\n';
    return ok;
  }
  std::vector<Row> rows;
  for (std::size_t i = 0; i < r.maximizers.size(); ++i) {
    const auto &m = r.maximizers[i];
    std::string w, e;
    for (Vertex v = 0; v < m.order(); ++v)
      w += (v ? " " : "") + m.weight(v).str();
    for (Vertex u = 0; u < m.order(); ++u)
      for (Vertex v = u + 1; v < m.order(); ++v)
        e += (e.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v) + ":" + m.weight(u, v).str();
    rows.push_back({std::to_string(i), r.density.str(), fixed15(r.density.to_double()), w, e});
  }
  if (g.format == Format::text)
    out << "examined " << r.assignments_examined << " edge assignments (" << r.free_assignments << " free), density "
        << r.density.str() << '\n';
  emit_rows(out, g.format, {"maximizer", "density", "density_float", "vertex_weights", "edges"}, rows);
  return ok;
}

// ---- coeffs ----

void cmd_coeffs(const Globals &g, int m, std::ostream &out) {
  const auto c = cr_coefficients(m);
  if (g.format == Format::json) {
    Json j;
    j["command"] = "coeffs";
    j["m"] = m;
    j["coefficients"] = Json::array();
    for (std::size_t r = 0; r < c.size(); ++r)
      j["coefficients"].push_back({{"r", r}, {"value", rational_json(c[r])}});
    out << j.dump(2) << '\n';
  } else if (g.format == Format::csv) {
    std::vector<Row> rows;
    for (std::size_t r = 0; r < c.size(); ++r)
      rows.push_back({std::to_string(r), c[r].str(), fixed15(c[r].to_double())});
    print_csv(out, {"r", "c_r", "c_r_float"}, rows);
  } else {
    for (std::size_t r = 0; r < c.size(); ++r)
      out << (r ? ", " : "") << "c_" << r << "=" << c[r].str();
    out << '\n';
  }
}

// ---- structure ----

int cmd_structure(const Globals &g, const std::string &path, int s, int t, std::ostream &out, std::ostream &err) {
  const WeightedGraph graph = read_weighted_graph(path);
  const ValidationReport rep = validate(graph);
  if (!rep.valid()) {
    err << "invalid weighted graph: " << rep.summary() << '\n';
    return usage_error;
  }
  const StructureReport r = check_structure(graph, s, t);
  const std::pair<const char *, const PropertyCheck *> props[] = {{"A1", &r.a1}, {"A2", &r.a2}, {"A3", &r.a3}, {"A4", &r.a4}, {"A5", &r.a5}};
  if (g.format == Format::json) {
    Json j;
    j["command"] = "structure";
    j["s"] = s;
    j["t"] = t;
    for (const auto &[name, p] : props)
      j[name] = {{"holds", p->holds}, {"detail", p->detail}};
    j["all_hold"] = r.all_hold();
    j["a"] = r.a;
    j["b"] = r.b;
    j["parts"] = r.parts;
    j["partition"] = r.partition ? spec_to_json(*r.partition) : Json(nullptr);
    out << j.dump(2) << '\n';
    return ok;
  }
  std::vector<Row> rows;
  for (const auto &[name, p] : props)
    rows.push_back({name, p->holds ? "true" : "false", p->detail});
  emit_rows(out, g.format, {"property", "holds", "detail"}, rows);
  return ok;
}

// ---- realize ----

int cmd_realize(const Globals &g, const std::string &path, std::size_t n, double epsilon, int h, int s, int t,
                const std::string &out_path, std::size_t clique_budget, std::ostream &out, std::ostream &err) {
  const WeightedGraph graph = read_weighted_graph(path);
  const ValidationReport rep = validate(graph);
  if (!rep.valid()) {
    err << "invalid weighted graph: " << rep.summary() << '\n';
    return usage_error;
  }
  BEConfig cfg{epsilon, h, g.seed};
  const RealizedGraph rg = realize(graph, n, cfg);
  if (t < 0)
    t = static_cast<int>(max_weighted_clique_score(round_up_to_halves(graph)).score) + 1;
  StatsConfig sc;
  sc.clique_budget = clique_budget;
  sc.seed = g.seed;
  const GraphStats st = graph_stats(rg, s, t, sc);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f)
      throw std::runtime_error("cannot write " + out_path);
    write_edge_list(f, rg);
  }
  if (g.format == Format::json) {
    Json j;
    j["command"] = "realize";
    j["N"] = n;
    j["epsilon"] = epsilon;
    j["h"] = h;
    j["mu"] = cfg.mu();
    j["seed"] = g.seed;
    j["s"] = s;
    j["t"] = t;
    Json parts = Json::array();
    for (const auto &p : rg.parts)
      parts.push_back(p.size);
    j["parts"] = parts;
    Json prov = Json::array();
    for (const auto &p : rg.provenance)
      prov.push_back({{"i", p.i}, {"j", p.j}, {"rule", pair_rule_name(p.rule)}});
    j["provenance"] = prov;
    j["resampled_points"] = rg.resampled_points;
    j["resampled_rotations"] = rg.resampled_rotations;
    Json pd = Json::array();
    for (const auto &p : st.pair_densities)
      pd.push_back({{"i", p.i}, {"j", p.j}, {"rule", pair_rule_name(p.rule)}, {"density", p.density}});
    j["stats"] = {{"order", st.order},
                  {"edges", st.edges},
                  {"omega", st.omega},
                  {"omega_exact", st.omega_exact},
                  {"contains_kt", st.contains_kt ? Json(*st.contains_kt) : Json(nullptr)},
                  {"alpha", st.alpha ? Json(*st.alpha) : Json(nullptr)},
                  {"alpha_lower", st.alpha_lower},
                  {"alpha_upper", st.alpha_upper},
                  {"independence_bounds", "empirical"},
                  {"pair_densities", pd},
                  {"samples", st.samples},
                  {"clique_samples", st.clique_samples},
                  {"ks_density_estimate", st.ks_density_estimate}};
    if (!out_path.empty())
      j["edge_list"] = out_path;
    out << j.dump(2) << '\n';
    return ok;
  }
  std::vector<Row> rows;
  for (const auto &p : st.pair_densities)
    rows.push_back({std::to_string(p.i), std::to_string(p.j), pair_rule_name(p.rule), fixed15(p.density)});
  if (g.format == Format::text)
    out << "N=" << st.order << " edges=" << st.edges << " omega=" << st.omega << (st.omega_exact ? "" : " (lower bound)")
        << " contains K_" << t << "=" << (st.contains_kt ? (*st.contains_kt ? "yes" : "no") : "unknown") << " alpha in ["
        << st.alpha_lower << "," << st.alpha_upper << "]" << (st.alpha ? " exact " + std::to_string(*st.alpha) : std::string())
        << " K_" << s << " estimate " << fixed15(st.ks_density_estimate) << '\n';
  emit_rows(out, g.format, {"i", "j", "rule", "density"}, rows);
  return ok;
}

unsigned default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Ramsey-Turan density engine", "rtengine"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--grid-bits", g.grid_bits, "log2 of the optimizer grid size")->check(CLI::Range(4, 24));
  app.add_option("--threads", g.threads, "Worker threads (default: all cores)");

  int s = 0, t = 0, t_min = 0, t_max = 0, m = 0;
  auto *density = app.add_subcommand("density", "Best (b,a)-partition density for (s,t)");
  density->add_option("--s", s)->required();
  density->add_option("--t", t)->required();

  auto *audit = app.add_subcommand("audit", "Compare the optimum against b = max(s, floor(t/2))");
  audit->add_option("--s", s)->required();
  audit->add_option("--t-min", t_min)->required();
  audit->add_option("--t-max", t_max)->required();

  std::string graph_path;
  auto *check = app.add_subcommand("check", "Weighted K_t-freeness of a graph file");
  check->add_option("--graph", graph_path)->required();
  check->add_option("--t", t)->required();

  SearchConfig scfg;
  std::string alphabet = "1/2,1";
  double max_space = 1e8;
  auto *search = app.add_subcommand("search", "Exhaustive extremal search on a weight grid");
  search->add_option("--n", scfg.n)->required();
  search->add_option("--s", scfg.s)->required();
  search->add_option("--t", scfg.t)->required();
  search->add_option("--denominator", scfg.weight_denominator, "Weight grid 1/D (default 2n(t-1))");
  search->add_option("--alphabet", alphabet, "Edge weights, comma separated");
  search->add_option("--max-space", max_space, "Refuse larger searches");

  auto *coeffs = app.add_subcommand("coeffs", "Coefficients c_r of the two-part decomposition");
  coeffs->add_option("--m", m)->required();

  auto *structure = app.add_subcommand("structure", "Check properties A1-A5 of a graph file");
  structure->add_option("--graph", graph_path)->required();
  structure->add_option("--s", s)->required();
  structure->add_option("--t", t)->required();

  std::size_t big_n = 0, clique_budget = 500;
  double epsilon = 0.1;
  int h = 100, realize_s = 2, realize_t = -1;
  std::string out_path;
  auto *realize_cmd = app.add_subcommand("realize", "Sphere-graph realization of a weighted graph");
  realize_cmd->set_help_flag("--help", "Print this help message and exit");
  realize_cmd->add_option("--graph", graph_path)->required();
  realize_cmd->add_option("--N", big_n)->required();
  realize_cmd->add_option("--epsilon", epsilon);
  realize_cmd->add_option("--h", h);
  realize_cmd->add_option("--s", realize_s, "Clique order for the sampled density");
  realize_cmd->add_option("--t", realize_t, "Forbidden clique order (default: score + 1)");
  realize_cmd->add_option("--clique-budget", clique_budget, "Exact clique search up to this many vertices");
  realize_cmd->add_option("--out", out_path, "Edge list output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n' << app.help();
    return usage_error;
  }

  g.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  if (g.threads == 0)
    g.threads = default_threads();
  if (const char *env = std::getenv("RT_ENGINE_THREADS")) {
    try {
      g.threads = static_cast<unsigned>(std::max(1L, std::stol(env)));
    } catch (const std::exception &) {
      err << "error: RT_ENGINE_THREADS must be a positive integer\n";
      return usage_error;
    }
  }

  try {
    if (*density) {
      cmd_density(g, s, t, out);
    } else if (*audit) {
      cmd_audit(g, s, t_min, t_max, out);
    } else if (*check) {
      return cmd_check(g, graph_path, t, out, err);
    } else if (*search) {
      scfg.edge_alphabet = parse_alphabet(alphabet);
      scfg.threads = g.threads;
      scfg.max_space = max_space;
      return cmd_search(g, scfg, out, err);
    } else if (*coeffs) {
      cmd_coeffs(g, m, out);
    } else if (*structure) {
      return cmd_structure(g, graph_path, s, t, out, err);
    } else if (*realize_cmd) {
      return cmd_realize(g, graph_path, big_n, epsilon, h, realize_s, realize_t, out_path, clique_budget, out, err);
    }
  } catch (const FormatError &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::domain_error &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return ok;
}

int run(int argc, char **argv, std::ostream &out, std::ostream &err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i)
    args.emplace_back(argv[i]);
  return run(args, out, err);
}

} // namespace rtd::cli
