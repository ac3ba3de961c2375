#pragma once

// Text formats:
//   digraph      "n m" then m lines "u v"; '#' starts a comment line
//   composition  "t", the outer digraph, then "---" and one inner digraph per
//                outer vertex, each preceded by a "---" line
//   packing      "parts=<count> mode=<arc|internal>" then one line of
//                "u>v" tokens per part
//   hypergraph   "n e" then e lines of vertex ids
//   set cover    "c b m" then m lines "i j" (i in C, j in B)
//   cut          "cut size=<c> source=<u> target=<v>" then one line of "u>v"
//   provenance   "# provenance", "# ell L", "# terminals ...", "# role v label"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "strongpack/composition.hpp"
#include "strongpack/digraph.hpp"
#include "strongpack/exact.hpp"
#include "strongpack/packing_core.hpp"
#include "strongpack/reductions.hpp"

namespace strongpack::io {

/// Line reader that skips blank and '#' lines and tracks line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next meaningful line, or false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }

  std::string require(const char* what) {
    std::string line;
    if (!next(line)) throw ParseError(0, std::string("unexpected end of input, expected ") + what);
    return line;
  }

  std::size_t line_number() const noexcept { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

namespace detail {

inline std::vector<long long> integers(const std::string& line, std::size_t number) {
  std::istringstream is(line);
  std::vector<long long> out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(number, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(number, "expected an integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

inline std::vector<long long> expect_integers(LineReader& r, std::size_t count, const char* what) {
  const std::string line = r.require(what);
  auto v = integers(line, r.line_number());
  if (v.size() != count)
    throw ParseError(r.line_number(), std::string("expected ") + std::to_string(count) + " integers for " + what);
  return v;
}

inline Arc parse_arc_token(const std::string& tok, std::size_t number) {
  const auto gt = tok.find('>');
  if (gt == std::string::npos) throw ParseError(number, "expected an arc 'u>v', got '" + tok + "'");
  const auto a = integers(tok.substr(0, gt), number);
  const auto b = integers(tok.substr(gt + 1), number);
  if (a.size() != 1 || b.size() != 1) throw ParseError(number, "expected an arc 'u>v', got '" + tok + "'");
  return {static_cast<Vertex>(a[0]), static_cast<Vertex>(b[0])};
}

inline Digraph read_digraph_body(LineReader& r) {
  const auto header = expect_integers(r, 2, "digraph header 'n m'");
  if (header[0] < 0 || header[1] < 0) throw ParseError(r.line_number(), "negative count in digraph header");
  Digraph d(static_cast<int>(header[0]));
  for (long long i = 0; i < header[1]; ++i) {
    const auto uv = expect_integers(r, 2, "arc 'u v'");
    try {
      d.add_arc(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
    } catch (const PreconditionError& e) {
      throw ParseError(r.line_number(), e.what());
    }
  }
  return d;
}

}  // namespace detail

inline Digraph read_digraph(std::istream& in) {
  LineReader r(in);
  Digraph d = detail::read_digraph_body(r);
  std::string extra;
  if (r.next(extra)) throw ParseError(r.line_number(), "trailing content after digraph");
  return d;
}

inline void write_digraph(std::ostream& out, const Digraph& d) {
  out << d.order() << ' ' << d.size() << '\n';
  for (const Arc& a : d.arcs()) out << a.from << ' ' << a.to << '\n';
}

inline std::string to_string(const Digraph& d) {
  std::ostringstream os;
  write_digraph(os, d);
  return os.str();
}

inline Digraph digraph_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_digraph(is);
}

// ---------------------------------------------------------------------------

inline CompositionSpec read_composition(std::istream& in) {
  LineReader r(in);
  const auto t = detail::expect_integers(r, 1, "composition header 't'");
  Digraph outer = detail::read_digraph_body(r);
  if (outer.order() != t[0]) throw ParseError(r.line_number(), "outer digraph order does not match t");
  std::vector<Digraph> inners;
  for (long long i = 0; i < t[0]; ++i) {
    const std::string sep = r.require("'---' separator");
    if (sep.find_first_not_of(" \t") == std::string::npos || sep.substr(sep.find_first_not_of(" \t"), 3) != "---")
      throw ParseError(r.line_number(), "expected '---' before inner digraph " + std::to_string(i));
    inners.push_back(detail::read_digraph_body(r));
  }
  std::string extra;
  if (r.next(extra)) throw ParseError(r.line_number(), "trailing content after composition");
  try {
    return CompositionSpec(std::move(outer), std::move(inners));
  } catch (const PreconditionError& e) {
    throw ParseError(r.line_number(), e.what());
  }
}

inline void write_composition(std::ostream& out, const CompositionSpec& spec) {
  out << spec.t() << '\n';
  write_digraph(out, spec.outer());
  for (const auto& h : spec.inners()) {
    out << "---\n";
    write_digraph(out, h);
  }
}

// ---------------------------------------------------------------------------

/// Parts only; the host and terminals come from the caller.
struct PackingFile {
  PackingMode mode = PackingMode::arc_disjoint;
  std::vector<std::vector<Arc>> parts;
};

inline PackingFile read_packing(std::istream& in) {
  LineReader r(in);
  const std::string header = r.require("packing header");
  std::istringstream hs(header);
  std::string a, b;
  hs >> a >> b;
  if (a.rfind("parts=", 0) != 0 || b.rfind("mode=", 0) != 0)
    throw ParseError(r.line_number(), "expected 'parts=<count> mode=<arc|internal>'");
  const auto count = detail::integers(a.substr(6), r.line_number());
  if (count.size() != 1 || count[0] < 0) throw ParseError(r.line_number(), "bad part count");
  PackingFile out;
  const std::string mode = b.substr(5);
  if (mode == "arc") out.mode = PackingMode::arc_disjoint;
  else if (mode == "internal") out.mode = PackingMode::internally_disjoint;
  else throw ParseError(r.line_number(), "unknown mode '" + mode + "'");
  for (long long i = 0; i < count[0]; ++i) {
    const std::string line = r.require("packing part");
    std::istringstream ls(line);
    std::vector<Arc> part;
    std::string tok;
    while (ls >> tok) part.push_back(detail::parse_arc_token(tok, r.line_number()));
    out.parts.push_back(std::move(part));
  }
  std::string extra;
  if (r.next(extra)) throw ParseError(r.line_number(), "more parts than announced");
  return out;
}

inline void write_arcs_line(std::ostream& out, const std::vector<Arc>& arcs) {
  for (std::size_t i = 0; i < arcs.size(); ++i) out << (i ? " " : "") << arcs[i].from << '>' << arcs[i].to;
  out << '\n';
}

inline void write_packing(std::ostream& out, const Packing& p) {
  out << "parts=" << p.parts.size() << " mode=" << mode_name(p.mode) << '\n';
  for (const auto& part : p.parts) write_arcs_line(out, part);
}

inline void write_cut(std::ostream& out, const CutCertificate& c) {
  out << "cut size=" << c.size() << " source=" << c.source << " target=" << c.target << '\n';
  write_arcs_line(out, c.arcs);
}

// ---------------------------------------------------------------------------

inline Hypergraph read_hypergraph(std::istream& in) {
  LineReader r(in);
  const auto header = detail::expect_integers(r, 2, "hypergraph header 'n e'");
  if (header[0] < 0 || header[1] < 0) throw ParseError(r.line_number(), "negative count in hypergraph header");
  Hypergraph h{static_cast<int>(header[0]), {}};
  for (long long i = 0; i < header[1]; ++i) {
    const std::string line = r.require("hyperedge");
    std::vector<Vertex> e;
    for (long long v : detail::integers(line, r.line_number())) {
      if (v < 0 || v >= h.n) throw ParseError(r.line_number(), "hyperedge member " + std::to_string(v) + " out of range");
      e.push_back(static_cast<Vertex>(v));
    }
    if (e.empty()) throw ParseError(r.line_number(), "empty hyperedge");
    h.edges.push_back(std::move(e));
  }
  return h;
}

inline void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.n << ' ' << h.edges.size() << '\n';
  for (const auto& e : h.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

inline BipartiteGraph read_bipartite(std::istream& in) {
  LineReader r(in);
  const auto header = detail::expect_integers(r, 3, "set cover header 'c b m'");
  BipartiteGraph g{static_cast<int>(header[0]), static_cast<int>(header[1]), {}};
  for (long long i = 0; i < header[2]; ++i) {
    const auto e = detail::expect_integers(r, 2, "edge 'i j'");
    g.edges.emplace_back(static_cast<int>(e[0]), static_cast<int>(e[1]));
  }
  try {
    g.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(r.line_number(), e.what());
  }
  return g;
}

inline void write_bipartite(std::ostream& out, const BipartiteGraph& g) {
  out << g.c << ' ' << g.b << ' ' << g.edges.size() << '\n';
  for (auto [i, j] : g.edges) out << i << ' ' << j << '\n';
}

/// Sidecar for generated instances: ell, terminals, and one role per vertex,
/// all as comment lines so the digraph above it still parses.
inline void write_provenance(std::ostream& out, const ReductionOutput& r) {
  out << "# provenance\n";
  out << "# ell " << r.ell << '\n';
  out << "# terminals";
  for (Vertex v : r.terminals) out << ' ' << v;
  out << '\n';
  for (std::size_t v = 0; v < r.provenance.size(); ++v) out << "# role " << v << ' ' << r.provenance[v] << '\n';
}

/// "a,b,c" -> {a, b, c}.
inline std::vector<Vertex> parse_id_list(const std::string& text) {
  std::vector<Vertex> out;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    const auto v = detail::integers(tok, 0);
    if (v.size() != 1) throw ParseError(0, "bad vertex list '" + text + "'");
    out.push_back(static_cast<Vertex>(v[0]));
  }
  return out;
}

}  // namespace strongpack::io
