#include "cutreg/graph.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cutreg {

Graph Graph::from_edges(int n, const std::vector<WeightedEdge>& edges) {
  if (n <= 0) throw std::invalid_argument("graph: vertex count must be positive");
  Graph g;
  g.n_ = n;
  g.adjacency_ = Matrix(n, n);
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::invalid_argument("graph: edge endpoint out of range: " +
                                  std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw std::invalid_argument("graph: self-loop at vertex " +
                                  std::to_string(e.u));
    }
    if (!(e.w > 0.0) || !std::isfinite(e.w)) {
      throw std::invalid_argument("graph: edge weight must be positive: " +
                                  std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    }
    g.adjacency_(e.u, e.v) += e.w;
    g.adjacency_(e.v, e.u) += e.w;
  }
  g.degree_.assign(n, 0.0);
  for (int u = 0; u < n; ++u) {
    double d = 0.0;
    for (int v = 0; v < n; ++v) d += g.adjacency_(u, v);
    g.degree_[u] = d;
    g.total_degree_ += d;
  }
  for (int u = 0; u < n; ++u) {
    if (g.degree_[u] <= 0.0) {
      throw std::invalid_argument("graph: isolated vertex " +
                                  std::to_string(u));
    }
  }
  return g;
}

Graph load_graph(std::istream& in) {
  std::vector<WeightedEdge> edges;
  int max_vertex = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int u, v;
    double w;
    if (!(ls >> u)) continue;  // blank or comment-only line
    if (!(ls >> v >> w)) {
      throw std::invalid_argument("graph: malformed edge line " +
                                  std::to_string(line_no));
    }
    std::string rest;
    if (ls >> rest) {
      throw std::invalid_argument("graph: trailing tokens on line " +
                                  std::to_string(line_no));
    }
    if (u < 0 || v < 0) {
      throw std::invalid_argument("graph: negative vertex id on line " +
                                  std::to_string(line_no));
    }
    edges.push_back({u, v, w});
    max_vertex = std::max(max_vertex, std::max(u, v));
  }
  if (edges.empty()) throw std::invalid_argument("graph: no edges in input");
  return Graph::from_edges(max_vertex + 1, edges);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return load_graph(in);
}

Graph load_graph_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int n = j.at("n").get<int>();
  std::vector<WeightedEdge> edges;
  for (const auto& e : j.at("edges")) {
    edges.push_back(
        {e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>()});
  }
  return Graph::from_edges(n, edges);
}

double cut_value(const Graph& g, const VertexSet& s) {
  const Matrix& a = g.adjacency();
  double total = 0.0;
  s.for_each([&](int u) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!s.contains(v)) total += a(u, v);
    }
  });
  return total;
}

double subset_degree(const Graph& g, const VertexSet& s) {
  double total = 0.0;
  s.for_each([&](int v) { total += g.degree(v); });
  return total;
}

double subset_degree(const Graph& g, const VertexSet& s, const VertexSet& t) {
  double total = 0.0;
  const auto& sb = s.blocks();
  const auto& tb = t.blocks();
  for (std::size_t i = 0; i < sb.size(); ++i) {
    std::uint64_t b = sb[i] & tb[i];
    while (b) {
      int bit = std::countr_zero(b);
      total += g.degree(static_cast<int>(i * 64 + bit));
      b &= b - 1;
    }
  }
  return total;
}

Matrix normalized_adjacency(const Graph& g) {
  int n = g.vertex_count();
  std::vector<double> inv_sqrt(n);
  for (int v = 0; v < n; ++v) inv_sqrt[v] = 1.0 / std::sqrt(g.degree(v));
  Matrix out(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      out(u, v) = g.adjacency()(u, v) * inv_sqrt[u] * inv_sqrt[v];
  return out;
}

}  // namespace cutreg
