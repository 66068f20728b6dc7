#include "linkage/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "linkage/errors.hpp"
#include "linkage/graph.hpp"
#include "linkage/k33.hpp"
#include "linkage/moduli.hpp"
#include "linkage/realizability.hpp"
#include "linkage/report_json.hpp"
#include "linkage/svg.hpp"

namespace linkage::cli {

namespace {

using report::Json;

constexpr const char* kLengthsHelp =
    "Inline comma-separated lengths. check-cycle: the cycle's lengths; closure-interval: the open path; "
    "check-k4: a,b,c,d,alpha,beta (a=v1v2 b=v2v4 c=v3v4 d=v1v3 alpha=v2v3 beta=v1v4); K_{3,3} commands: "
    "a,b,c,d,e,f,alpha,beta[,gamma] (a=v1v6 b=v1v2 c=v2v3 d=v3v4 e=v4v5 f=v5v6 alpha=v1v4 beta=v3v6 "
    "gamma=v2v5), or a path to a K_{3,3} lengths file";

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string describe(const IntervalSet& s) {
  if (s.is_empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += " u ";
    out += "[" + num(s[i].lo) + ", " + num(s[i].hi) + "]";
  }
  return out;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("--lengths: not a number: '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw InvalidInput("--lengths: not a number: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("--lengths: empty list");
  return out;
}

K33Lengths k33_input(const Command& c) {
  if (c.lengths) {
    if (std::filesystem::is_regular_file(*c.lengths)) return load_k33_lengths(*c.lengths);
    return parse_k33_lengths(*c.lengths);
  }
  if (c.graph) return load_k33_lengths(*c.graph);
  throw InvalidInput(c.subcommand + ": --lengths or --graph is required");
}

WeightedGraph graph_input(const Command& c) {
  if (!c.graph) throw InvalidInput(c.subcommand + ": --graph is required");
  WeightedGraph g = load_graph(*c.graph);
  const auto v = validate(g);
  if (!v.empty()) throw InvalidInput(*c.graph + ": " + v.front().message);
  return g;
}

PinnedFrame pin_of(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw InvalidInput("--pin expects origin,axis");
  }
  return {text.substr(0, comma), text.substr(comma + 1)};
}

SignTuple tuple_of(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (ch == '+' || ch == '-') s += ch;
    else if (ch != ',' && ch != ' ') throw InvalidInput("--tuple expects three signs, e.g. +,-,+");
  }
  if (s.size() != 3) throw InvalidInput("--tuple expects three signs (s5, s3, s2)");
  SignTuple t = 0;
  if (s[0] == '-') t |= 4u;
  if (s[1] == '-') t |= 2u;
  if (s[2] == '-') t |= 1u;
  return t;
}

Stage stage_of(const std::string& s) {
  if (s == "f") return Stage::f;
  if (s == "alpha") return Stage::alpha;
  if (s == "beta") return Stage::beta;
  if (s == "gamma") return Stage::gamma;
  throw InvalidInput("--stage must be one of f, alpha, beta, gamma");
}

// The inputs of `stage` only: the chosen value of that stage and later ones dropped.
K33Lengths truncate_to(const K33Lengths& l, Stage stage) {
  K33Lengths t = l;
  switch (stage) {
    case Stage::f: t.f.reset(); [[fallthrough]];
    case Stage::alpha: t.alpha.reset(); [[fallthrough]];
    case Stage::beta: t.beta.reset(); [[fallthrough]];
    case Stage::gamma: t.gamma.reset();
  }
  return t;
}

std::optional<double> chosen_value(const K33Lengths& l, Stage stage) {
  switch (stage) {
    case Stage::f: return l.f;
    case Stage::alpha: return l.alpha;
    case Stage::beta: return l.beta;
    case Stage::gamma: return l.gamma;
  }
  return std::nullopt;
}

Stage default_stage(const K33Lengths& l) {
  if (!l.f) return Stage::f;
  if (!l.alpha) return Stage::alpha;
  if (!l.beta) return Stage::beta;
  return Stage::gamma;
}

GammaOptions gamma_options(const Command& c) {
  GammaOptions o;
  o.resolution = c.resolution;
  o.merge_gap = c.merge_gap;
  o.workers = c.workers;
  return o;
}

void require_format(const Command& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (c.format == f) return;
  }
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw InvalidInput(c.subcommand + ": --format " + c.format + " not supported (use " + list + ")");
}

std::string csv_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Result {
  int code = kSuccess;
  std::string text;
};

Result machine(const Command& c, const Json& j, const std::string& csv, int code) {
  return {code, c.format == "csv" ? csv : report::dump(j)};
}

Result check_cycle(const Command& c, std::ostream& err) {
  require_format(c, {"json"});
  std::vector<std::vector<double>> lists;
  Json j;
  if (c.lengths) {
    lists.push_back(parse_list(*c.lengths));
  } else {
    const WeightedGraph g = graph_input(c);
    for (const Cycle& cy : enumerate_simple_cycles(g)) lists.push_back(cy.lengths);
    if (lists.empty()) throw InvalidInput(c.subcommand + ": graph has no cycle");
  }
  bool all = true;
  Json arr = Json::array();
  for (const auto& l : lists) {
    const bool ok = cycle_realizable(l);
    all = all && ok;
    arr.push_back({{"lengths", l}, {"realizable", ok}});
  }
  j["cycles"] = arr;
  j["realizable"] = all;
  err << (all ? "realizable" : "not realizable") << "\n";
  return {all ? kSuccess : kNegative, report::dump(j)};
}

K4Lengths k4_input(const Command& c) {
  if (c.lengths) {
    const auto v = parse_list(*c.lengths);
    if (v.size() != 6) throw InvalidInput("check-k4: --lengths expects a,b,c,d,alpha,beta");
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
  }
  const WeightedGraph g = graph_input(c);
  auto len = [&](const char* u, const char* v) {
    const auto e = g.find_edge(u, v);
    if (!e) throw InvalidInput(std::string("check-k4: graph has no edge ") + u + v);
    return g.edges()[*e].length;
  };
  if (g.vertex_count() != 4 || g.edge_count() != 6) throw InvalidInput("check-k4: expected K4 on v1..v4");
  return {len("v1", "v2"), len("v2", "v4"), len("v3", "v4"), len("v1", "v3"), len("v2", "v3"), len("v1", "v4")};
}

Result check_k4(const Command& c, std::ostream& err) {
  require_format(c, {"json"});
  const K4Lengths k = k4_input(c);
  const bool ok = k4_realizable(k);
  Json j;
  j["lengths"] = {{"a", k.a}, {"b", k.b}, {"c", k.c}, {"d", k.d}, {"alpha", k.alpha}, {"beta", k.beta}};
  j["cayley_menger_det"] = cayley_menger_det(k);
  j["tolerance"] = cayley_menger_tolerance(k);
  j["realizable"] = ok;
  err << (ok ? "realizable" : "not realizable") << "\n";
  return {ok ? kSuccess : kNegative, report::dump(j)};
}

Result closure_interval(const Command& c, std::ostream& err) {
  require_format(c, {"json", "csv"});
  if (!c.lengths) throw InvalidInput("closure-interval: --lengths is required");
  const IntervalSet s = cycle_closure_interval(parse_list(*c.lengths));
  err << "closing length in " << describe(s) << "\n";
  return machine(c, Json{{"intervals", report::intervals(s)}}, to_csv(s), kSuccess);
}

Result k33_stage(const Command& c, std::optional<Stage> forced, std::ostream& err) {
  require_format(c, {"json", "csv"});
  const K33Lengths l = k33_input(c);
  const Stage stage = forced ? *forced : c.stage ? stage_of(*c.stage) : default_stage(l);
  const auto reports = staged_report(truncate_to(l, stage), gamma_options(c));
  const StageReport& r = reports.back();
  if (r.stage != stage) throw InvalidInput("k33-stage: lengths do not reach stage " + to_string(stage));
  Json j = report::stage(r);
  j["lengths"] = report::k33_lengths(l);
  if (const auto v = chosen_value(l, stage)) {
    IntervalSet reach = r.feasible_set;
    if (stage == Stage::gamma) reach = interval_union(reach, r.continuum_gammas);
    j["chosen"] = *v;
    j["chosen_in_set"] = reach.contains(*v, 1e-9 * l.scale());
  }
  if (stage == Stage::gamma && c.oracle_samples > 0) {
    const IntervalSet o = gamma_set_oracle(l, c.oracle_samples, c.seed, c.merge_gap);
    j["oracle"] = {{"samples", c.oracle_samples}, {"intervals", report::intervals(o)}};
  }
  err << to_string(stage) << " set: " << describe(r.feasible_set) << "\n";
  for (const auto& n : r.notes) err << "note: " << n << "\n";
  return machine(c, j, to_csv(r.feasible_set), r.feasible_set.is_empty() ? kNegative : kSuccess);
}

std::string components_csv(const WeightedGraph& g, const ComponentReport& r) {
  std::string out = "component,dimension,vertex,x,y\n";
  for (std::size_t i = 0; i < r.representatives.size(); ++i) {
    const auto& p = r.representatives[i].realization;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      out += std::to_string(i) + "," + to_string(r.dimensions[i]) + "," + g.vertices()[v] + "," +
             csv_number(p.points[v].x()) + "," + csv_number(p.points[v].y()) + "\n";
    }
  }
  return out;
}

struct Counted {
  WeightedGraph graph;
  ComponentReport report;
};

Counted count_components(const Command& c) {
  const bool k33 = c.lengths.has_value();
  const std::string method = c.method.empty() ? (k33 ? "sweep" : "sampling") : c.method;
  if (method != "sweep" && method != "sampling") throw InvalidInput("--method must be sweep or sampling");
  if (method == "sweep") {
    const K33Lengths l = k33_input(c);
    l.require(4);
    if (c.pin && *c.pin != "v4,v1") throw InvalidInput("--method sweep pins v4,v1");
    SweepCountOptions o;
    o.resolution = c.resolution;
    o.workers = c.workers;
    return {k33_graph(l), k33_component_count(l, o)};
  }
  WeightedGraph g;
  if (k33) {
    const K33Lengths l = k33_input(c);
    l.require(4);
    g = k33_graph(l);
  } else {
    g = graph_input(c);
  }
  if (!c.pin && !k33) throw InvalidInput("components: --pin origin,axis is required for --method sampling");
  SamplingOptions o;
  o.samples = c.samples;
  o.seed = c.seed;
  o.knots = c.knots;
  o.knot_iterations = c.knot_iterations;
  o.workers = c.workers;
  return {g, generic_component_count(g, pin_of(c.pin.value_or("v4,v1")), o)};
}

Result components(const Command& c, std::ostream& err) {
  require_format(c, {"json", "csv"});
  const Counted r = count_components(c);
  err << "components: " << r.report.count << " (" << to_string(r.report.method) << ")\n";
  for (const auto& n : r.report.notes) err << "note: " << n << "\n";
  return machine(c, report::components(r.graph, r.report), components_csv(r.graph, r.report),
                 r.report.count > 0 ? kSuccess : kNegative);
}

RealizeReport realize_graph(const Command& c, const WeightedGraph& g) {
  RealizeOptions o;
  o.restarts = c.restarts;
  o.seed = c.seed;
  o.workers = c.workers;
  if (c.pin) o.pin = pin_of(*c.pin);
  return attempt_realize(g, o);
}

WeightedGraph realize_input(const Command& c) {
  if (c.graph) return graph_input(c);
  return k33_graph(k33_input(c));
}

Result realize(const Command& c, std::ostream& err) {
  require_format(c, {"json", "csv", "svg"});
  const WeightedGraph g = realize_input(c);
  const RealizeReport r = realize_graph(c, g);
  err << (r.realized ? "realized" : "no realization found") << "; best max edge residual "
      << num(r.best_residual) << " after " << r.restarts_used << " restarts\n";
  const int code = r.realized ? kSuccess : kNegative;
  if (c.format == "svg") {
    SvgScene scene;
    scene.title = r.realized ? "realization" : "best attempt (not a realization)";
    scene.add_realization(g, r.best_realization);
    return {code, render_svg(scene)};
  }
  std::string csv = "vertex,x,y\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    csv += g.vertices()[v] + "," + csv_number(r.best_realization.points[v].x()) + "," +
           csv_number(r.best_realization.points[v].y()) + "\n";
  }
  return machine(c, report::realize(g, r), csv, code);
}

Result cycles(const Command& c, std::ostream& err) {
  require_format(c, {"json", "csv"});
  const WeightedGraph g = graph_input(c);
  const auto cs = enumerate_simple_cycles(g);
  std::size_t ok = 0;
  std::string csv = "size,vertices,lengths,realizable\n";
  for (const Cycle& cy : cs) {
    const bool r = cycle_realizable(cy.lengths);
    ok += r;
    std::string vs, ls;
    for (const auto& v : cy.vertices) vs += (vs.empty() ? "" : " ") + v;
    for (double x : cy.lengths) ls += (ls.empty() ? "" : " ") + csv_number(x);
    csv += std::to_string(cy.vertices.size()) + "," + vs + "," + ls + "," + (r ? "true" : "false") + "\n";
  }
  err << cs.size() << " simple cycles, " << ok << " realizable\n";
  return machine(c, report::cycles(cs), csv, kSuccess);
}

std::string numbered_path(const std::string& path, std::size_t i) {
  const std::filesystem::path p(path);
  const std::string stem = p.extension() == ".svg" ? p.stem().string() : p.filename().string();
  return (p.parent_path() / (stem + "_" + std::to_string(i) + ".svg")).string();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + path);
  f << text;
}

Result render(const Command& c, std::ostream& err) {
  require_format(c, {"svg"});
  if (c.components) {
    if (!c.output) throw InvalidInput("render --components writes one file per component; --output is required");
    const Counted r = count_components(c);
    for (std::size_t i = 0; i < r.report.representatives.size(); ++i) {
      SvgScene scene;
      scene.title = "component " + std::to_string(i) + " (" + to_string(r.report.dimensions[i]) + ")";
      scene.add_realization(r.graph, r.report.representatives[i].realization);
      const std::string path = numbered_path(*c.output, i);
      write_file(path, render_svg(scene));
      err << "wrote " << path << "\n";
    }
    err << "components: " << r.report.count << "\n";
    return {r.report.count > 0 ? kSuccess : kNegative, std::string()};
  }
  if (c.graph) {
    const WeightedGraph g = graph_input(c);
    const RealizeReport r = realize_graph(c, g);
    SvgScene scene;
    scene.title = r.realized ? "realization" : "best attempt (not a realization)";
    scene.add_realization(g, r.best_realization);
    err << (r.realized ? "realized" : "no realization found") << "\n";
    return {r.realized ? kSuccess : kNegative, render_svg(scene)};
  }
  const K33Lengths l = k33_input(c);
  l.require(2);
  SvgScene scene;
  const Workspaces w = workspaces_g2(l);
  scene.add_workspace(w.w3);
  scene.add_workspace(w.w6);
  if (!c.theta) {
    scene.title = "workspaces of v3 and v6";
    scene.segments.push_back({Point(0.0, 0.0), Point(*l.alpha, 0.0)});
    scene.dots.push_back({Point(0.0, 0.0), "v4"});
    scene.dots.push_back({Point(*l.alpha, 0.0), "v1"});
    err << "W(v3): " << to_string(w.w3.kind) << ", W(v6): " << to_string(w.w6.kind) << "\n";
    return {kSuccess, render_svg(scene)};
  }
  l.require(3);
  const G3Linkage link(l);
  const SignTuple t = tuple_of(c.tuple);
  const G3Pose pose = link.pose(*c.theta, t);
  if (pose.status == PoseStatus::infeasible) {
    err << "no configuration at theta " << num(*c.theta) << " with signs " << tuple_name(t) << "\n";
    return {kNegative, std::string()};
  }
  Realization p;
  p.points.assign(pose.p.begin(), pose.p.end());
  WeightedGraph g = k33_graph(l);
  scene.title = "theta " + num(*c.theta) + ", signs " + tuple_name(t);
  scene.add_realization(g, p);
  err << "gamma = d(v2, v5) = " << num(pose.gamma) << "\n";
  return {kSuccess, render_svg(scene)};
}

Result dispatch(const Command& c, std::ostream& err) {
  const std::string& s = c.subcommand;
  if (s == "check-cycle") return check_cycle(c, err);
  if (s == "check-k4") return check_k4(c, err);
  if (s == "closure-interval") return closure_interval(c, err);
  if (s == "k33-stage") return k33_stage(c, std::nullopt, err);
  if (s == "gamma-set") return k33_stage(c, Stage::gamma, err);
  if (s == "components") return components(c, err);
  if (s == "realize") return realize(c, err);
  if (s == "cycles") return cycles(c, err);
  if (s == "render") return render(c, err);
  throw InvalidInput("unknown subcommand '" + s + "'");
}

}  // namespace

std::string banner(const Command& c) {
  std::string b = "linkage " + c.subcommand;
  auto add = [&](const std::string& k, const std::string& v) { b += " " + k + "=" + v; };
  if (c.graph) add("graph", *c.graph);
  if (c.lengths) add("lengths", *c.lengths);
  add("format", c.format);
  add("seed", std::to_string(c.seed));
  add("resolution", std::to_string(c.resolution));
  add("restarts", std::to_string(c.restarts));
  if (!c.method.empty()) add("method", c.method);
  if (c.stage) add("stage", *c.stage);
  if (c.pin) add("pin", *c.pin);
  add("samples", std::to_string(c.samples));
  add("knots", std::to_string(c.knots));
  add("knot-iterations", std::to_string(c.knot_iterations));
  if (c.merge_gap) add("merge-gap", num(*c.merge_gap));
  if (c.theta) add("theta", num(*c.theta));
  if (c.theta) add("tuple", c.tuple);
  if (c.components) add("components", "true");
  if (c.oracle_samples) add("oracle-samples", std::to_string(c.oracle_samples));
  add("workers", std::to_string(c.workers));
  if (c.output) add("output", *c.output);
  return b;
}

int run(const Command& c, std::ostream& out, std::ostream& err) {
  err << banner(c) << "\n";
  try {
    const Result r = dispatch(c, err);
    if (c.output && !r.text.empty()) {
      write_file(*c.output, r.text);
    } else {
      out << r.text;
    }
    return r.code;
  } catch (const StageChoiceError& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const PreconditionViolation& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Command cmd;
  if (const char* env = std::getenv("LINKAGE_SEED")) {
    try {
      cmd.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: LINKAGE_SEED is not an unsigned integer\n";
      return kUsage;
    }
  }

  CLI::App app{"Planar realizability, extension intervals and component counts for weighted graphs"};
  app.require_subcommand(1);
  std::string graph, lengths, output, stage, pin, merge_gap_text, theta_text;

  struct Spec {
    const char* name;
    const char* help;
    bool graph, lengths, resolution, restarts, seed, method, stage, pin, sampling, render, oracle;
  };
  const Spec specs[] = {
      {"check-cycle", "Polygon inequality for one cycle (or every cycle of a graph)", 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {"check-k4", "Closed-form K4 realizability", 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {"closure-interval", "Admissible closing lengths of an open path", 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {"k33-stage", "Feasible set of one K_{3,3} extension stage", 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0},
      {"gamma-set", "Feasible gamma values of K_{3,3}", 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1},
      {"components", "Connected components of the pinned configuration space", 1, 1, 1, 0, 1, 1, 0, 1, 1, 0, 0},
      {"realize", "Numerical realization by seeded restarts", 1, 1, 0, 1, 1, 0, 0, 1, 0, 0, 0},
      {"cycles", "Simple cycles of a graph", 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {"render", "SVG of workspaces, a sweep pose, a realization or every component", 1, 1, 1, 1, 1, 1, 0, 1, 1, 1,
       0},
  };
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->callback([&cmd, name = std::string(s.name)] { cmd.subcommand = name; });
    sub->add_option("-o,--output", output, "Write machine output here instead of stdout");
    sub->add_option("--format", cmd.format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
    sub->add_option("--workers", cmd.workers, "Worker threads (0: all cores); never changes the output");
    if (s.graph) sub->add_option("-g,--graph", graph, "JSON graph file");
    if (s.lengths) sub->add_option("-l,--lengths", lengths, kLengthsHelp);
    if (s.resolution) {
      sub->add_option("--resolution", cmd.resolution, "Sweep grid size (>= 1000)")->capture_default_str();
      sub->add_option("--merge-gap", merge_gap_text, "Merge gamma intervals closer than this");
    }
    if (s.restarts) sub->add_option("--restarts", cmd.restarts, "Random restarts")->capture_default_str();
    if (s.seed) sub->add_option("--seed", cmd.seed, "Random seed (default: LINKAGE_SEED or 0)");
    if (s.method) sub->add_option("--method", cmd.method, "sweep or sampling")->check(CLI::IsMember({"sweep", "sampling"}));
    if (s.stage) sub->add_option("--stage", stage, "f, alpha, beta or gamma")->check(CLI::IsMember({"f", "alpha", "beta", "gamma"}));
    if (s.pin) sub->add_option("--pin", pin, "Pinned edge origin,axis (e.g. v4,v1)");
    if (s.sampling) {
      sub->add_option("--samples", cmd.samples, "Sampling restarts")->capture_default_str();
      sub->add_option("--knots", cmd.knots, "Knots per connecting path")->capture_default_str();
      sub->add_option("--knot-iterations", cmd.knot_iterations, "Descent iterations per knot")->capture_default_str();
    }
    if (s.render) {
      sub->add_option("--theta", theta_text, "Sweep angle of v6 around v1 (radians)");
      sub->add_option("--tuple", cmd.tuple, "Branch signs s5,s3,s2")->capture_default_str();
      sub->add_flag("--components", cmd.components, "One SVG per component representative");
    }
    if (s.oracle) {
      sub->add_option("--oracle-samples", cmd.oracle_samples, "Also run the independent oracle with this many samples");
      sub->add_option("--seed", cmd.seed, "Oracle grid offset seed (default: LINKAGE_SEED or 0)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    for (CLI::App* sub : app.get_subcommands()) {
      if (sub->parsed()) {
        err << "error: " << e.what() << "\n" << sub->help();
        return kUsage;
      }
    }
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  auto* format_opt = app.get_subcommand("render")->get_option("--format");
  if (cmd.subcommand == "render" && format_opt->count() == 0) cmd.format = "svg";
  if (!graph.empty()) cmd.graph = graph;
  if (!lengths.empty()) cmd.lengths = lengths;
  if (!output.empty()) cmd.output = output;
  if (!stage.empty()) cmd.stage = stage;
  if (!pin.empty()) cmd.pin = pin;
  try {
    if (!merge_gap_text.empty()) cmd.merge_gap = std::stod(merge_gap_text);
    if (!theta_text.empty()) cmd.theta = std::stod(theta_text);
  } catch (const std::exception&) {
    err << "error: --merge-gap and --theta take numbers\n";
    return kUsage;
  }
  return run(cmd, out, err);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("linkage");
  for (const auto& a : args) argv.push_back(a.c_str());
  return main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace linkage::cli
