#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cutreg/matrix.hpp"
#include "cutreg/vertex_set.hpp"

namespace cutreg {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double w = 0.0;
};

/// Weighted undirected graph over vertices 0..n-1, stored as a dense symmetric
/// adjacency matrix. Immutable after construction. Every vertex must end up
/// with positive degree so that the degree normalization D^{-1/2} exists; the
/// constructors reject inputs that violate this.
///
/// Throughout, m denotes the total degree d(V), i.e. twice the total edge
/// weight. Additive errors elsewhere in the library are measured in multiples
/// of m.
class Graph {
 public:
  /// Builds from an edge list. Duplicate edges are summed. Rejects self-loops,
  /// non-positive weights, out-of-range endpoints and isolated vertices.
  static Graph from_edges(int n, const std::vector<WeightedEdge>& edges);

  int vertex_count() const { return n_; }
  const Matrix& adjacency() const { return adjacency_; }
  double weight(int u, int v) const { return adjacency_(u, v); }
  double degree(int v) const { return degree_[v]; }
  const std::vector<double>& degrees() const { return degree_; }
  double total_degree() const { return total_degree_; }

 private:
  Graph() = default;

  int n_ = 0;
  Matrix adjacency_;
  std::vector<double> degree_;
  double total_degree_ = 0.0;
};

/// Parses whitespace-separated "u v w" lines; '#' starts a comment line.
/// The vertex count is one past the largest endpoint mentioned.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);

/// Parses the JSON form {"n": int, "edges": [[u, v, w], ...]}.
Graph load_graph_json(const std::string& text);

/// A(S, V\S): total weight crossing the cut.
double cut_value(const Graph& g, const VertexSet& s);

/// d(S) = sum of degrees over S.
double subset_degree(const Graph& g, const VertexSet& s);

/// d(S ∩ T).
double subset_degree(const Graph& g, const VertexSet& s, const VertexSet& t);

/// D^{-1/2} A D^{-1/2}; all eigenvalues lie in [-1, 1].
Matrix normalized_adjacency(const Graph& g);

}  // namespace cutreg
