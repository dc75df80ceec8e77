#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "uht/export.hpp"
#include "uht/generator.hpp"
#include "uht/io.hpp"
#include "uht/oracle.hpp"
#include "uht/pipeline.hpp"

using namespace uht;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNegative = 2;

struct Common {
  std::vector<std::string> files;
  std::string w;
  double epsilon = 1e-9;
  std::string jitter;
  std::uint64_t seed = 1;
};

struct Loaded {
  Document doc;
  ParityDrawing drawing;
  std::set<VertexId> w;
};

Loaded load(const Common& c) {
  Loaded out;
  out.doc = parse_files(c.files);
  GeometryOptions options{c.epsilon};
  if (out.doc.has_geometry() && !c.jitter.empty()) {
    out.drawing = to_parity_drawing(jitter(geometry_of(out.doc), c.seed, parse_rational(c.jitter)), options);
  } else {
    out.drawing = drawing_of(out.doc, options);
  }
  out.w = out.doc.w;
  if (!c.w.empty()) {
    auto extra = parse_id_list(c.w);
    out.w.insert(extra.begin(), extra.end());
  }
  for (VertexId v : out.w)
    if (!out.drawing.graph.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "W vertex " + std::to_string(raw(v)));
  return out;
}

// Rotation files that only make sense against an already loaded graph.
Document with_graph(const Multigraph& g, const std::vector<std::string>& files) {
  Document doc;
  doc.graph = g;
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, path + ": cannot open");
    parse_into(doc, in, path);
  }
  resolve_rotations(doc);
  return doc;
}

void write(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Parse, path + ": cannot write");
  out << text;
}

void add_common(CLI::App* cmd, Common& c, bool with_w = true) {
  cmd->add_option("files", c.files, "Input files")->required();
  if (with_w) cmd->add_option("--W", c.w, "Constrained vertex ids, comma or space separated");
  cmd->add_option("--epsilon", c.epsilon, "Vertex clearance for geometric input");
  cmd->add_option("--jitter", c.jitter, "Perturb geometric input by up to this amount");
  cmd->add_option("--seed", c.seed, "Seed for --jitter");
}

int run_check(const Common& c) {
  Loaded in = load(c);
  const ParityDrawing& d = in.drawing;
  std::ostringstream os;
  os << "vertices " << d.graph.vertex_count() << "\nedges " << d.graph.edge_count() << '\n';
  const auto odd = odd_independent_pairs(d);
  os << "odd-independent " << odd.size() << '\n';
  for (auto [e, f] : odd) os << "  " << e << ' ' << f << '\n';
  std::vector<VertexId> bad;
  for (VertexId v : in.w)
    if (!is_even_vertex(d, v)) bad.push_back(v);
  os << "odd-W " << bad.size();
  for (VertexId v : bad) os << ' ' << v;
  os << '\n';
  for (VertexId v : in.w) {
    os << "rot " << v;
    for (EdgeEnd end : d.rotation.at(v)) os << ' ' << format_end(d.graph, end);
    os << '\n';
  }
  os << (odd.empty() && bad.empty() ? "hypotheses hold\n" : "hypotheses fail\n");
  std::cout << os.str();
  return odd.empty() && bad.empty() ? kOk : kNegative;
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << (v.feasible ? "feasible" : "infeasible") << '\n';
  if (v.feasible) {
    for (const auto& m : v.moves) os << "move " << m.edge << ' ' << m.vertex << '\n';
  } else if (!v.certificate.empty()) {
    os << "cert";
    for (std::size_t r : v.certificate) os << ' ' << r;
    os << '\n';
  }
  if (v.inconsistent_input) os << "# parity system solvable but rotation not planar\n";
  return os.str();
}

int run_solve(const Common& c, const std::string& mode) {
  Loaded in = load(c);
  Verdict v;
  if (mode == "strong") v = decide_strong(in.drawing);
  else if (mode == "weak") v = decide_weak(in.drawing);
  else v = solve_drawing(in.drawing, in.w, false).verdict;
  std::cout << verdict_text(v);
  return v.feasible ? kOk : kNegative;
}

int run_embed(const Common& c, const std::string& out, const std::string& trace_path, const std::string& log_path) {
  Loaded in = load(c);
  EmbedTrace trace;
  Outcome o = solve_drawing(in.drawing, in.w, true, &trace);
  if (!trace_path.empty()) write(trace_path, trace.to_json_lines());
  if (!log_path.empty() && o.log) write(log_path, o.log->to_json_lines());
  if (!o.embedding) {
    std::cerr << "infeasible: no planar embedding keeps the rotations at W\n";
    return kNegative;
  }
  write(out, format_rotation(in.drawing.graph, o.embedding->rotation) + format_w(o.embedding->preserved, "preserved"));
  return kOk;
}

int run_verify(const std::vector<std::string>& files, const std::string& w_text,
               const std::vector<std::string>& against) {
  Document doc = parse_files(files);
  check_rotation_matches(doc.rotation, doc.graph);
  std::set<VertexId> w = doc.w;
  if (!w_text.empty()) {
    auto extra = parse_id_list(w_text);
    w.insert(extra.begin(), extra.end());
  }
  const FaceSet fs = faces(doc.rotation);
  const int g = genus(doc.rotation);
  std::cout << "faces " << fs.faces.size() << "\ngenus " << g << '\n';
  bool ok = g == 0;
  if (!against.empty()) {
    Document ref = with_graph(doc.graph, against);
    for (VertexId v : w) {
      const bool same = ref.rotation.has(v) && doc.rotation.has(v) &&
                        same_cyclic_order(doc.rotation.at(v), ref.rotation.at(v));
      if (!same) {
        std::cout << "rotation differs at " << v << '\n';
        ok = false;
      }
    }
  }
  std::cout << (ok ? "ok" : "failed") << '\n';
  return ok ? kOk : kNegative;
}

int run_oracle(const std::vector<std::string>& files, const std::string& w_text,
               const std::vector<std::string>& rot_files, double budget, unsigned threads) {
  Document doc = parse_files(files);
  std::set<VertexId> w = doc.w;
  if (!w_text.empty()) {
    auto extra = parse_id_list(w_text);
    w.insert(extra.begin(), extra.end());
  }
  RotationSystem fixed = doc.rotation;
  if (!rot_files.empty()) fixed = with_graph(doc.graph, rot_files).rotation;
  OracleOptions options{budget, threads};
  OracleStats stats;
  if (w.empty()) {
    const int g = min_genus(doc.graph, options, &stats);
    std::cout << "space " << stats.space << "\nenumerated " << stats.enumerated << "\nmin-genus " << g << '\n'
              << (g == 0 ? "feasible" : "infeasible") << '\n';
    return g == 0 ? kOk : kNegative;
  }
  const bool found = exists_embedding_with_rotations(doc.graph, w, fixed, options, &stats);
  std::cout << "space " << stats.space << "\nenumerated " << stats.enumerated << '\n'
            << (found ? "feasible" : "infeasible") << '\n';
  return found ? kOk : kNegative;
}

struct GenOptions {
  std::string kind = "scramble";
  int n = 8;
  int m = 0;
  std::size_t k = 10;
  int w_size = 2;
  int copies = 3;
  int loops = 2;
  std::uint64_t seed = 1;
  std::string prefix = "instance";
};

int run_gen(const GenOptions& o) {
  std::mt19937_64 rng(o.seed);
  ParityDrawing d;
  std::set<VertexId> w;
  bool expected = true;
  auto pick_w = [&](const Multigraph& g) {
    std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
    std::shuffle(vs.begin(), vs.end(), rng);
    for (int i = 0; i < std::min<int>(o.w_size, static_cast<int>(vs.size())); ++i) w.insert(vs[i]);
  };
  const int m = o.m > 0 ? o.m : std::max(0, 2 * o.n - 3);
  if (o.kind == "planar" || o.kind == "scramble") {
    PlanarInstance p = random_planar_rotation(o.n, m, o.seed);
    d = embedding_drawing(p.graph, p.rotation);
    pick_w(d.graph);
    if (o.kind == "scramble") d = scramble(d, w, o.k, o.seed + 1);
  } else if (o.kind == "multigraph") {
    PlanarInstance p = random_planar_multigraph(o.n, m, o.copies, o.loops, o.seed);
    d = embedding_drawing(p.graph, p.rotation);
    pick_w(d.graph);
    d = scramble(d, w, o.k, o.seed + 1);
  } else if (o.kind == "k5" || o.kind == "k33") {
    const Multigraph g = o.kind == "k5" ? complete_graph(5) : complete_bipartite(3, 3);
    d = to_parity_drawing(random_straight_line_drawing(g, o.seed));
    expected = false;
  } else if (o.kind == "theta") {
    PlanarInstance p = theta(2, 2, 2);
    d = embedding_drawing(p.graph, p.rotation);
    // Swapping two paths at vertex 1 makes both ends list the paths in the same order.
    d = adjacent_swap(d, vid(1), 0);
    w = {vid(0), vid(1)};
    expected = false;
  } else {
    throw Error(ErrorCode::Parse, "unknown kind '" + o.kind + "'");
  }
  write(o.prefix + ".graph", format_graph(d.graph));
  write(o.prefix + ".rot", format_rotation(d.graph, d.rotation));
  write(o.prefix + ".parity", format_parity(d.parity));
  write(o.prefix + ".w", format_w(w));
  write(o.prefix + ".expected", std::string(expected ? "feasible" : "infeasible") + '\n');
  return kOk;
}

int run_export(const std::vector<std::string>& files, const std::string& format, const std::string& out) {
  Document doc = parse_files(files);
  check_rotation_matches(doc.rotation, doc.graph);
  if (format == "svg") write(out, export_svg(doc.graph, doc.rotation));
  else if (format == "dot") write(out, export_dot(doc.graph, doc.rotation));
  else throw Error(ErrorCode::Parse, "unknown format '" + format + "'");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar embeddings from independently even drawings"};
  app.require_subcommand(1);

  Common check_opts, solve_opts, embed_opts;
  auto* check = app.add_subcommand("check", "Report odd independent pairs and odd W vertices");
  add_common(check, check_opts);

  std::string mode = "unified";
  auto* solve = app.add_subcommand("solve", "Decide the existence of an embedding keeping W rotations");
  add_common(solve, solve_opts);
  solve->add_option("--mode", mode, "unified, strong (W empty) or weak (W = V)")
      ->check(CLI::IsMember({"unified", "strong", "weak"}));

  std::string embed_out, trace_path, log_path;
  auto* embed = app.add_subcommand("embed", "Build a planar rotation system keeping W rotations");
  add_common(embed, embed_opts);
  embed->add_option("-o,--out", embed_out, "Rotation output file (default stdout)");
  embed->add_option("--trace", trace_path, "JSON-lines recursion trace");
  embed->add_option("--log", log_path, "JSON-lines reduction log for multigraphs");

  std::vector<std::string> verify_files, against;
  std::string verify_w;
  auto* verify = app.add_subcommand("verify", "Check genus 0 and W rotations against a reference");
  verify->add_option("files", verify_files, "Graph and rotation files")->required();
  verify->add_option("--W", verify_w, "Vertices whose rotations must match");
  verify->add_option("--against", against, "Reference rotation file(s)");

  std::vector<std::string> oracle_files, oracle_rot;
  std::string oracle_w;
  double budget = 1e8;
  unsigned threads = 1;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive search over rotation systems");
  oracle->add_option("files", oracle_files, "Graph file(s)")->required();
  oracle->add_option("--W", oracle_w, "Vertices with frozen rotations");
  oracle->add_option("--rot", oracle_rot, "Rotation file(s) for the frozen vertices");
  oracle->add_option("--budget", budget, "Largest search space allowed");
  oracle->add_option("--threads", threads, "Worker threads");

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Write a generated instance and its expected verdict");
  gen->add_option("--kind", gen_opts.kind, "planar, scramble, multigraph, k5, k33 or theta")
      ->check(CLI::IsMember({"planar", "scramble", "multigraph", "k5", "k33", "theta"}));
  gen->add_option("-n", gen_opts.n, "Vertices");
  gen->add_option("-m", gen_opts.m, "Edges (default 2n-3)");
  gen->add_option("-k", gen_opts.k, "Adjacent swaps");
  gen->add_option("--w-size", gen_opts.w_size, "Size of W");
  gen->add_option("--copies", gen_opts.copies, "Largest parallel bundle (multigraph)");
  gen->add_option("--loops", gen_opts.loops, "Most loops (multigraph)");
  gen->add_option("--seed", gen_opts.seed, "Seed");
  gen->add_option("-o,--out", gen_opts.prefix, "Output file prefix");

  std::vector<std::string> export_files;
  std::string format = "svg", export_out;
  auto* exp = app.add_subcommand("export", "Render a rotation system as SVG or DOT");
  exp->add_option("files", export_files, "Graph and rotation files")->required();
  exp->add_option("--format", format, "svg or dot")->check(CLI::IsMember({"svg", "dot"}));
  exp->add_option("-o,--out", export_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*check) return run_check(check_opts);
    if (*solve) return run_solve(solve_opts, mode);
    if (*embed) return run_embed(embed_opts, embed_out, trace_path, log_path);
    if (*verify) return run_verify(verify_files, verify_w, against);
    if (*oracle) return run_oracle(oracle_files, oracle_w, oracle_rot, budget, threads);
    if (*gen) return run_gen(gen_opts);
    if (*exp) return run_export(export_files, format, export_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
