#pragma once

// Command-line front end. `run` parses arguments, dispatches one
// subcommand, and maps library exceptions to exit codes.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "strongpack/strongpack.hpp"

namespace strongpack::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kPrecondition = 2,
  kParse = 3,
  kSizeLimit = 4,
};

struct RunConfig {
  std::string command;
  std::string graph, composition, input, packing, out, terminals, linkage;
  std::string strategy = "auto";
  std::string mode = "lambda";
  std::string from;
  std::string kind;
  std::string family = "symmetric";
  int ell = 2;
  int k = 0;  // survey: 0 draws |S| at random
  int limit_n = ExactLimits{}.max_vertices;
  int limit_m = ExactLimits{}.max_arcs;
  std::uint64_t seed = 1;
  int trials = 10;

  // gen / survey / decompose parameters
  int t = 3, r = 3;
  int min_inner = 1, max_inner = 3;
  int a = 2, b = 3;
  int n = 6, e = 3, max_edge = 3, cycles = 3;
  int percent = 30;

  ExactLimits limits() const { return {limit_n, limit_m}; }

  void validate() const {
    if (limit_n < 1 || limit_m < 1) throw PreconditionError("--limit-n and --limit-m must be positive");
    if (trials < 0) throw PreconditionError("--trials must be non-negative");
    if (percent < 0 || percent > 100) throw PreconditionError("--percent must be in [0, 100]");
  }
};

namespace detail {

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return in;
}

inline Digraph load_graph(const std::string& path) {
  auto in = open_input(path);
  return io::read_digraph(in);
}

inline CompositionSpec load_composition(const std::string& path) {
  auto in = open_input(path);
  return io::read_composition(in);
}

/// --graph, or the composed digraph of --composition.
inline Digraph load_host(const RunConfig& cfg) {
  if (!cfg.graph.empty()) return load_graph(cfg.graph);
  if (!cfg.composition.empty()) return compose(load_composition(cfg.composition));
  throw PreconditionError("expected --graph or --composition");
}

inline TerminalSet load_terminals(const RunConfig& cfg, const Digraph& d) {
  if (cfg.terminals.empty()) return TerminalSet::all(d);
  return TerminalSet(io::parse_id_list(cfg.terminals), d);
}

/// Writes to --out when given, otherwise to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw PreconditionError("cannot write '" + path + "'");
    }
    out_ = file_ ? file_.get() : &fallback;
  }
  std::ostream& operator*() { return *out_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

inline const char* yes_no(bool x) { return x ? "true" : "false"; }

inline CompositionSpec trivial_composition(const Digraph& d) {
  return CompositionSpec(d, std::vector<Digraph>(static_cast<std::size_t>(d.order()), Digraph(1)));
}

inline Packing pack_as_bipartite(const Digraph& d, const TerminalSet& s) {
  const auto sides = complete_bipartite_sides(d);
  if (!sides) throw PreconditionError("bipartite strategy: host is not a complete bipartite digraph K<->_{a,b}");
  const auto& [small, large] = *sides;
  const Packing p = pack_bipartite(static_cast<int>(small.size()), static_cast<int>(large.size()));
  std::vector<Vertex> map(small);
  map.insert(map.end(), large.begin(), large.end());
  return relabel_packing(p, d, s, map);
}

}  // namespace detail

inline int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const Digraph d = detail::load_host(cfg);
  int sccs = static_cast<int>(strong_components(d).size());
  out << "n " << d.order() << '\n'
      << "m " << d.size() << '\n'
      << "strong_components " << sccs << '\n'
      << "strong " << detail::yes_no(is_strong(d)) << '\n'
      << "symmetric " << detail::yes_no(is_symmetric(d)) << '\n'
      << "semicomplete " << detail::yes_no(is_semicomplete(d)) << '\n'
      << "eulerian " << detail::yes_no(is_eulerian(d)) << '\n'
      << "quasi_transitive " << detail::yes_no(is_quasi_transitive(d)) << '\n';
  return kOk;
}

/// Packing for cfg.strategy; `auto` tries bipartite, symmetric, semicomplete,
/// quasi-transitive in that order. A plain --graph is read as the
/// composition of itself with single-vertex inner digraphs.
inline Packing build_packing(const RunConfig& cfg, std::string* chosen = nullptr) {
  std::optional<CompositionSpec> spec;
  Digraph d;
  if (!cfg.composition.empty()) {
    spec = detail::load_composition(cfg.composition);
    d = compose(*spec);
  } else {
    d = detail::load_host(cfg);
  }
  const TerminalSet s = detail::load_terminals(cfg, d);
  auto as_spec = [&]() { return spec ? *spec : detail::trivial_composition(d); };

  std::string strategy = cfg.strategy;
  if (strategy == "auto") {
    const Digraph& outer = spec ? spec->outer() : d;
    if (complete_bipartite_sides(d)) strategy = "bipartite";
    else if (is_symmetric(outer) && is_strong(outer) && outer.order() >= 2) strategy = "symmetric";
    else if (is_semicomplete(outer) && is_strong(outer) && outer.order() >= 2) strategy = "semicomplete";
    else if (is_quasi_transitive(d) && is_strong(d)) strategy = "qt";
    else throw PreconditionError("auto strategy: host is not complete bipartite, not a composition over a strong "
                                 "symmetric or strong semicomplete digraph, and not strong quasi-transitive");
  }
  if (chosen) *chosen = strategy;
  if (strategy == "bipartite") return detail::pack_as_bipartite(d, s);
  if (strategy == "symmetric") return pack_symmetric_composition(as_spec(), s);
  if (strategy == "semicomplete") return pack_semicomplete_composition(as_spec(), s);
  if (strategy == "qt") return pack_quasi_transitive(d, s);
  throw PreconditionError("unknown strategy '" + strategy + "'");
}

inline int cmd_pack(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string chosen;
  const Packing p = build_packing(cfg, &chosen);
  detail::Sink sink(cfg.out, out);
  io::write_packing(*sink, p);
  err << "packed " << p.size() << " parts with strategy " << chosen << '\n';
  return kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Digraph d = detail::load_host(cfg);
  const TerminalSet s = detail::load_terminals(cfg, d);
  if (cfg.packing.empty()) throw PreconditionError("verify: expected --packing");
  auto in = detail::open_input(cfg.packing);
  io::PackingFile file = io::read_packing(in);
  const Packing p{d, s, file.mode, std::move(file.parts)};
  const PackingVerdict v = verify_packing(p);
  if (v) {
    out << "ok parts=" << p.size() << " mode=" << mode_name(p.mode) << '\n';
    return kOk;
  }
  out << "invalid: " << v.describe() << '\n';
  return kVerifyFailed;
}

inline int cmd_cut(const RunConfig& cfg, std::ostream& out) {
  const Digraph d = detail::load_host(cfg);
  const TerminalSet s = detail::load_terminals(cfg, d);
  const CutCertificate c = min_strong_cut(d, s);
  detail::Sink sink(cfg.out, out);
  io::write_cut(*sink, c);
  if (is_symmetric(d)) *sink << "steiner_cut " << steiner_cut_undirected(d, s) << '\n';
  return kOk;
}

inline int cmd_exact(const RunConfig& cfg, std::ostream& out) {
  if (cfg.mode == "cut") return cmd_cut(cfg, out);
  const Digraph d = detail::load_host(cfg);
  detail::Sink sink(cfg.out, out);
  if (cfg.mode == "sad") {
    const auto found = find_strong_arc_decomposition(d, cfg.limits());
    *sink << "strong_arc_decomposition " << detail::yes_no(found.has_value()) << '\n';
    if (found) io::write_packing(*sink, Packing{d, TerminalSet::all(d), PackingMode::arc_disjoint, {found->first, found->second}});
    return kOk;
  }
  const TerminalSet s = detail::load_terminals(cfg, d);
  ExactResult r;
  if (cfg.mode == "lambda") r = exact_lambda_S(d, s, cfg.limits());
  else if (cfg.mode == "kappa") r = exact_kappa_S(d, s, cfg.limits());
  else throw PreconditionError("unknown exact mode '" + cfg.mode + "'");
  *sink << cfg.mode << ' ' << r.value << '\n';
  io::write_packing(*sink, r.packing);
  return kOk;
}

inline int cmd_reduce(const RunConfig& cfg, std::ostream& out) {
  std::optional<ReductionOutput> r;
  if (cfg.from == "hypergraph") {
    if (cfg.input.empty()) throw PreconditionError("reduce --from hypergraph: expected --input");
    auto in = detail::open_input(cfg.input);
    r = hypergraph_to_issp(io::read_hypergraph(in), cfg.ell);
  } else if (cfg.from == "linkage") {
    const Digraph d = detail::load_graph(cfg.graph.empty() ? cfg.input : cfg.graph);
    const auto ts = io::parse_id_list(cfg.linkage);
    if (ts.size() != 4) throw PreconditionError("reduce --from linkage: --linkage needs s1,t1,s2,t2");
    r = two_linkage_to_eulerian(d, ts[0], ts[1], ts[2], ts[3], cfg.k < 2 ? 2 : cfg.k, cfg.ell);
  } else if (cfg.from == "setcover-issp" || cfg.from == "setcover-assp") {
    if (cfg.input.empty()) throw PreconditionError("reduce --from " + cfg.from + ": expected --input");
    auto in = detail::open_input(cfg.input);
    const BipartiteGraph g = io::read_bipartite(in);
    r = cfg.from == "setcover-issp" ? set_cover_to_issp(g) : set_cover_to_assp(g);
  } else {
    throw PreconditionError("unknown reduction source '" + cfg.from + "'");
  }
  detail::Sink sink(cfg.out, out);
  io::write_digraph(*sink, r->digraph);
  io::write_provenance(*sink, *r);
  return kOk;
}

inline int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  Rng rng(cfg.seed);
  detail::Sink sink(cfg.out, out);
  if (cfg.kind == "sym-comp" || cfg.kind == "semi-comp") {
    if (cfg.t < 2) throw PreconditionError("gen: need --t >= 2");
    if (cfg.min_inner < 1 || cfg.max_inner < cfg.min_inner) throw PreconditionError("gen: need 1 <= --min-inner <= --max-inner");
    const InnerRange range{cfg.min_inner, cfg.max_inner, cfg.percent};
    const CompositionSpec spec = cfg.kind == "sym-comp" ? random_symmetric_composition(rng, cfg.t, range)
                                                        : random_semicomplete_composition(rng, cfg.t, range);
    io::write_composition(*sink, spec);
  } else if (cfg.kind == "bipartite") {
    if (cfg.a < 1 || cfg.b < 1) throw PreconditionError("gen: need --a, --b >= 1");
    io::write_digraph(*sink, complete_bipartite(cfg.a, cfg.b));
  } else if (cfg.kind == "hypergraph") {
    if (cfg.n < 1 || cfg.e < 0 || cfg.max_edge < 1) throw PreconditionError("gen: need --n >= 1, --e >= 0, --max-edge >= 1");
    io::write_hypergraph(*sink, random_hypergraph(rng, cfg.n, cfg.e, cfg.max_edge));
  } else if (cfg.kind == "eulerian-linkage") {
    const LinkageInstance inst = random_eulerian_linkage(rng, cfg.n, cfg.cycles);
    io::write_digraph(*sink, inst.digraph);
    *sink << "# linkage " << inst.s1 << ',' << inst.t1 << ',' << inst.s2 << ',' << inst.t2 << '\n';
  } else {
    throw PreconditionError("unknown generator kind '" + cfg.kind + "'");
  }
  return kOk;
}

struct SurveyRow {
  int id = 0, n = 0, m = 0, k = 0;
  std::optional<int> lambda, c2, c1;
  std::string status;
};

inline constexpr const char* kSurveyHeader =
    "# strongpack survey v1; lambda <= c2 always, c2 <= 2*c1 when c1 is present\n"
    "id,n,m,k,lambda,c2,c1,status\n";

inline SurveyRow survey_row(int id, const Digraph& d, const TerminalSet& s, const ExactLimits& limits) {
  SurveyRow row{id, d.order(), d.size(), static_cast<int>(s.size()), {}, {}, {}, "ok"};
  if (!is_strong(d)) {
    row.status = "not-strong";
    return row;
  }
  row.c2 = static_cast<int>(min_strong_cut(d, s).size());
  if (is_symmetric(d)) row.c1 = steiner_cut_undirected(d, s);
  try {
    row.lambda = exact_lambda_S(d, s, limits).value;
  } catch (const SizeLimitError&) {
    row.status = "skipped-size";
  }
  if ((row.lambda && *row.lambda > *row.c2) || (row.c1 && *row.c2 > 2 * *row.c1)) row.status = "violation";
  return row;
}

inline void write_survey_row(std::ostream& out, const SurveyRow& row) {
  auto cell = [](const std::optional<int>& x) { return x ? std::to_string(*x) : std::string(); };
  out << row.id << ',' << row.n << ',' << row.m << ',' << row.k << ',' << cell(row.lambda) << ',' << cell(row.c2)
      << ',' << cell(row.c1) << ',' << row.status << '\n';
}

/// One row per trial of the chosen family (or a single row for --graph).
/// Returns kVerifyFailed if any row violates a cut inequality.
inline int cmd_survey(const RunConfig& cfg, std::ostream& out) {
  detail::Sink sink(cfg.out, out);
  *sink << kSurveyHeader;
  bool violated = false;
  auto emit = [&](const SurveyRow& row) {
    write_survey_row(*sink, row);
    violated = violated || row.status == "violation";
  };
  if (!cfg.graph.empty() || !cfg.composition.empty()) {
    const Digraph d = detail::load_host(cfg);
    emit(survey_row(0, d, detail::load_terminals(cfg, d), cfg.limits()));
    return violated ? kVerifyFailed : kOk;
  }
  if (cfg.n < 2) throw PreconditionError("survey: need --n >= 2");
  if (cfg.k != 0 && (cfg.k < 2 || cfg.k > cfg.n)) throw PreconditionError("survey: need 2 <= --k <= --n");
  Rng rng(cfg.seed);
  for (int id = 0; id < cfg.trials; ++id) {
    Digraph d;
    if (cfg.family == "symmetric") d = random_connected_symmetric(rng, cfg.n, cfg.percent);
    else if (cfg.family == "strong") d = random_strong_digraph(rng, cfg.n, cfg.percent);
    else throw PreconditionError("unknown survey family '" + cfg.family + "'");
    const int k = cfg.k ? cfg.k : rng.uniform(2, cfg.n);
    emit(survey_row(id, d, TerminalSet(rng.sample(cfg.n, k), d), cfg.limits()));
  }
  return violated ? kVerifyFailed : kOk;
}

inline int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  const HamDecomposition h = decompose_cycle_blowup(cfg.t, cfg.r);
  detail::Sink sink(cfg.out, out);
  for (const HamCycle& c : h.cycles) {
    for (std::size_t i = 0; i < c.order.size(); ++i) *sink << (i ? " " : "") << c.order[i];
    *sink << '\n';
  }
  return kOk;
}

/// Entry point; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Packing S-strong subgraphs in digraph compositions", "strongpack"};
  app.require_subcommand(1);

  auto host_flags = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph, "digraph file");
    sub->add_option("--composition", cfg.composition, "composition file");
    sub->add_option("--terminals", cfg.terminals, "comma-separated terminal ids (default: all vertices)");
    sub->add_option("--out", cfg.out, "output file (default: stdout)");
  };
  auto limit_flags = [&](CLI::App* sub) {
    sub->add_option("--limit-n", cfg.limit_n, "exhaustive search vertex limit");
    sub->add_option("--limit-m", cfg.limit_m, "exhaustive search arc limit");
  };

  auto* analyze = app.add_subcommand("analyze", "print order, size and class flags");
  host_flags(analyze);

  auto* pack = app.add_subcommand("pack", "construct an arc-disjoint packing");
  host_flags(pack);
  pack->add_option("--strategy", cfg.strategy)->check(CLI::IsMember({"auto", "symmetric", "semicomplete", "qt", "bipartite"}));

  auto* verify = app.add_subcommand("verify", "check a packing file against a host");
  host_flags(verify);
  verify->add_option("--packing", cfg.packing, "packing file")->required();

  auto* exact = app.add_subcommand("exact", "exhaustive lambda_S, kappa_S, strong arc decomposition or cut");
  host_flags(exact);
  limit_flags(exact);
  exact->add_option("--mode", cfg.mode)->check(CLI::IsMember({"lambda", "kappa", "sad", "cut"}));

  auto* cut = app.add_subcommand("cut", "minimum S-strong-subgraph cut (and Steiner cut when symmetric)");
  host_flags(cut);

  auto* reduce = app.add_subcommand("reduce", "emit a reduction gadget with its provenance");
  reduce->add_option("--from", cfg.from)->required()->check(
      CLI::IsMember({"hypergraph", "linkage", "setcover-issp", "setcover-assp"}));
  reduce->add_option("--input", cfg.input, "source instance file");
  reduce->add_option("--graph", cfg.graph, "Eulerian digraph for --from linkage");
  reduce->add_option("--linkage", cfg.linkage, "s1,t1,s2,t2");
  reduce->add_option("--ell", cfg.ell);
  reduce->add_option("--k", cfg.k);
  reduce->add_option("--out", cfg.out);

  auto* gen = app.add_subcommand("gen", "seeded random instance");
  gen->add_option("kind", cfg.kind)->required()->check(
      CLI::IsMember({"sym-comp", "semi-comp", "bipartite", "hypergraph", "eulerian-linkage"}));
  gen->add_option("--seed", cfg.seed);
  gen->add_option("--t", cfg.t, "outer order");
  gen->add_option("--min-inner", cfg.min_inner);
  gen->add_option("--max-inner", cfg.max_inner);
  gen->add_option("--a", cfg.a);
  gen->add_option("--b", cfg.b);
  gen->add_option("--n", cfg.n);
  gen->add_option("--e", cfg.e, "hyperedge count");
  gen->add_option("--max-edge", cfg.max_edge);
  gen->add_option("--cycles", cfg.cycles);
  gen->add_option("--percent", cfg.percent, "density knob");
  gen->add_option("--out", cfg.out);

  auto* survey = app.add_subcommand("survey", "CSV of lambda_S and cut sizes over random instances");
  host_flags(survey);
  limit_flags(survey);
  survey->add_option("--family", cfg.family)->check(CLI::IsMember({"symmetric", "strong"}));
  survey->add_option("--seed", cfg.seed);
  survey->add_option("--trials", cfg.trials);
  survey->add_option("--n", cfg.n);
  survey->add_option("--k", cfg.k, "terminal count (0: random)");
  survey->add_option("--percent", cfg.percent);

  auto* decompose = app.add_subcommand("decompose", "Hamiltonian decomposition of C_t o K_r-bar");
  decompose->add_option("t", cfg.t)->required();
  decompose->add_option("r", cfg.r)->required();
  decompose->add_option("--out", cfg.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kPrecondition;
  }

  try {
    cfg.validate();
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (pack->parsed()) return cmd_pack(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (exact->parsed()) return cmd_exact(cfg, out);
    if (cut->parsed()) return cmd_cut(cfg, out);
    if (reduce->parsed()) return cmd_reduce(cfg, out);
    if (gen->parsed()) return cmd_gen(cfg, out);
    if (survey->parsed()) return cmd_survey(cfg, out);
    if (decompose->parsed()) return cmd_decompose(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const SizeLimitError& e) {
    err << "size limit: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const GenerationError& e) {
    err << "generation: " << e.what() << '\n';
    return kPrecondition;
  }
  return kPrecondition;
}

}  // namespace strongpack::cli
