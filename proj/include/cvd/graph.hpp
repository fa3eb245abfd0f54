#pragma once

#include <algorithm>
#include <array>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvd {

// A set of vertex ids, kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

inline bool set_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline void sort_unique(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Simple undirected graph. Vertices are dense ids 0..n-1; `label` carries the
/// external name of each vertex so that solutions can be reported in the
/// numbering of the original input after rounds of deletion.
///
/// Graphs are immutable after construction; every operation below is a pure
/// query or returns a new graph, so values can be shared freely.
struct Graph {
  std::vector<std::vector<int>> adj;  // sorted neighbor lists, symmetric
  std::vector<int> label;             // external label per vertex

  int n() const { return static_cast<int>(adj.size()); }

  bool has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  }

  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  long edge_count() const {
    long twice = 0;
    for (const auto& nb : adj) twice += static_cast<long>(nb.size());
    return twice / 2;
  }

  int max_degree() const {
    int d = 0;
    for (const auto& nb : adj) d = std::max(d, static_cast<int>(nb.size()));
    return d;
  }

  /// Builds a graph from an edge list. Duplicate edges are collapsed,
  /// self-loops rejected. Labels default to the identity.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    g.adj.assign(n, {});
    g.label.resize(n);
    for (int i = 0; i < n; i++) g.label[i] = i;
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::out_of_range("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loop");
      g.adj[u].push_back(v);
      g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) sort_unique(nb);
    return g;
  }
};

struct ComponentView {
  std::vector<int> component_id;         // per vertex
  std::vector<std::vector<int>> members; // per component, sorted; components
                                         // ordered by smallest contained vertex
};

enum class GraphFormat { EdgeList, Dimacs };

struct ParsedGraph {
  Graph graph;
  int duplicate_edges = 0;  // collapsed silently, counted for diagnostics
};

namespace detail {

inline bool blank_or_comment(const std::string& line, char comment) {
  for (char c : line) {
    if (c == comment) return true;
    if (!isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

/// Parses either format:
///   edge list — header "n m", then m lines "u v" (0-indexed), '#' comments;
///   DIMACS    — "p edge n m", then "e u v" (1-indexed), "c" comments.
/// Malformed headers, out-of-range endpoints and self-loops raise ParseError
/// with the offending line number.
inline ParsedGraph parse_graph_detailed(std::istream& in, GraphFormat format) {
  const char comment = format == GraphFormat::Dimacs ? 'c' : '#';
  std::string line;
  int lineno = 0;

  int n = -1;
  long m = -1;
  while (std::getline(in, line)) {
    lineno++;
    if (detail::blank_or_comment(line, comment)) continue;
    std::istringstream hs(line);
    if (format == GraphFormat::Dimacs) {
      std::string p, kind;
      if (!(hs >> p >> kind >> n >> m) || p != "p")
        throw ParseError(lineno, "malformed DIMACS header: '" + line + "'");
    } else {
      if (!(hs >> n >> m))
        throw ParseError(lineno, "malformed header, expected 'n m': '" + line + "'");
    }
    std::string rest;
    if (hs >> rest) throw ParseError(lineno, "trailing tokens in header");
    break;
  }
  if (n < 0 || m < 0) throw ParseError(lineno, "missing or negative header");

  ParsedGraph out;
  out.graph.adj.assign(n, {});
  out.graph.label.resize(n);
  for (int i = 0; i < n; i++) out.graph.label[i] = i;

  long seen = 0;
  while (seen < m && std::getline(in, line)) {
    lineno++;
    if (detail::blank_or_comment(line, comment)) continue;
    std::istringstream es(line);
    int u, v;
    if (format == GraphFormat::Dimacs) {
      std::string e;
      if (!(es >> e >> u >> v) || e != "e")
        throw ParseError(lineno, "malformed edge line: '" + line + "'");
      u--;
      v--;
    } else {
      if (!(es >> u >> v))
        throw ParseError(lineno, "malformed edge line: '" + line + "'");
    }
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(lineno, "vertex index out of range");
    if (u == v) throw ParseError(lineno, "self-loop");
    if (out.graph.has_edge(u, v)) {
      out.duplicate_edges++;
    } else {
      auto& au = out.graph.adj[u];
      auto& av = out.graph.adj[v];
      au.insert(std::upper_bound(au.begin(), au.end(), v), v);
      av.insert(std::upper_bound(av.begin(), av.end(), u), u);
    }
    seen++;
  }
  if (seen < m)
    throw ParseError(lineno, "expected " + std::to_string(m) + " edges, got " +
                                 std::to_string(seen));
  return out;
}

inline Graph parse_graph(std::istream& in, GraphFormat format) {
  return parse_graph_detailed(in, format).graph;
}

inline Graph parse_graph(const std::string& text, GraphFormat format) {
  std::istringstream in(text);
  return parse_graph(in, format);
}

/// Vertices at distance exactly 2 from v. Disjoint from N(v) and {v}.
inline VertexSet second_neighborhood(const Graph& g, int v) {
  std::vector<char> near(g.n(), 0);
  near[v] = 1;
  for (int u : g.adj[v]) near[u] = 1;
  VertexSet out;
  for (int u : g.adj[v])
    for (int w : g.adj[u])
      if (!near[w]) {
        near[w] = 1;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

inline ComponentView connected_components(const Graph& g) {
  ComponentView view;
  view.component_id.assign(g.n(), -1);
  for (int s = 0; s < g.n(); s++) {
    if (view.component_id[s] >= 0) continue;
    int id = static_cast<int>(view.members.size());
    std::vector<int> stack{s}, comp;
    view.component_id[s] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : g.adj[u])
        if (view.component_id[w] < 0) {
          view.component_id[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    view.members.push_back(std::move(comp));
  }
  return view;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
  for (size_t i = 0; i < s.size(); i++)
    for (size_t j = i + 1; j < s.size(); j++)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

/// True iff every connected component is a clique.
inline bool is_cluster_graph(const Graph& g) {
  auto view = connected_components(g);
  for (const auto& comp : view.members)
    if (!is_clique(g, comp)) return false;
  return true;
}

/// Smallest induced path a-b-c (edges ab, bc present, ac absent), compared as
/// the tuple (a,b,c). Returns nothing iff the graph is a cluster graph.
inline std::optional<std::array<int, 3>> find_induced_p3(const Graph& g) {
  for (int a = 0; a < g.n(); a++)
    for (int b : g.adj[a])
      for (int c : g.adj[b])
        if (c != a && !g.has_edge(a, c)) return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

/// Induced subgraph on V \ s, with dense re-indexing. Survivors keep their
/// relative order, so new ids are the ranks of the old ids; labels carry over.
inline Graph remove_vertices(const Graph& g, const VertexSet& s) {
  std::vector<int> new_id(g.n(), -1);
  Graph out;
  for (int v = 0; v < g.n(); v++) {
    if (set_contains(s, v)) continue;
    new_id[v] = static_cast<int>(out.label.size());
    out.label.push_back(g.label[v]);
  }
  out.adj.resize(out.label.size());
  for (int v = 0; v < g.n(); v++) {
    if (new_id[v] < 0) continue;
    for (int w : g.adj[v])
      if (new_id[w] >= 0) out.adj[new_id[v]].push_back(new_id[w]);
  }
  return out;
}

/// Pivot selection: a degree-1 vertex if one exists, otherwise a vertex of
/// maximum degree. Ties go to the smallest id.
inline int choose_pivot(const Graph& g) {
  int best = -1, best_deg = -1;
  for (int v = 0; v < g.n(); v++) {
    int d = g.degree(v);
    if (d == 1) return v;
    if (d > best_deg) {
      best_deg = d;
      best = v;
    }
  }
  if (best_deg < 1) throw InvariantViolation("choose_pivot on a graph without edges");
  return best;
}

}  // namespace cvd
