#pragma once

#include "ggt/common.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ggt {

using Edge = std::pair<int, int>; // stored with first < second

/// Undirected simple graph on dense vertex indices 0..n-1.
/// No loops, no multi-edges; immutable after construction.
class Graph {
  public:
	Graph() = default;
	Graph(int vertex_count, std::vector<Edge> edges,
	      std::vector<std::string> labels = {});

	int vertex_count() const { return n_; }
	int edge_count() const { return static_cast<int>(edges_.size()); }
	const std::vector<Edge> &edges() const { return edges_; }
	const std::vector<int> &neighbors(int v) const;
	bool has_edge(int a, int b) const;
	int edge_index(int a, int b) const; // -1 if absent
	const std::vector<std::string> &labels() const { return labels_; }
	std::string label(int v) const;

  private:
	int n_ = 0;
	std::vector<Edge> edges_;
	std::vector<std::vector<int>> adj_;
	std::vector<std::string> labels_;
};

/// Per-edge positive lengths, indexed like Graph::edges().
using EdgeWeights = std::vector<double>;

void validate_weights(const Graph &g, const EdgeWeights &w);

/// Symmetric all-pairs distance table; +inf marks disconnected pairs.
class DistanceMatrix {
  public:
	DistanceMatrix() = default;
	explicit DistanceMatrix(int n, double fill = kInf);

	int size() const { return n_; }
	double at(int i, int j) const { return d_[static_cast<size_t>(i) * n_ + j]; }
	void set(int i, int j, double v);

	bool is_metric(double tol = 1e-12) const; // symmetry + triangle inequality

  private:
	int n_ = 0;
	std::vector<double> d_;
};

/// Unit-weight single-source distances; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph &g, int source);

/// Weighted single-source distances (Dijkstra); kInf for unreachable.
std::vector<double> dijkstra(const Graph &g, const EdgeWeights &w, int source);

DistanceMatrix all_pairs_unit(const Graph &g);
DistanceMatrix all_pairs_weighted(const Graph &g, const EdgeWeights &w);

struct GeodesicSegment {
	std::vector<int> vertices; // consecutive vertices adjacent, length = d(x,y)
};

struct GeodesicList {
	std::vector<GeodesicSegment> geodesics;
	bool cap_exceeded = false;
	bool disconnected = false;
};

/// All geodesics x -> y, enumerated over the shortest-path DAG, truncated at cap.
GeodesicList geodesics_between(const Graph &g, int x, int y, std::size_t cap);

/// The lexicographically least geodesic vertex sequence x -> y (empty if disconnected).
std::vector<int> lex_least_geodesic(const Graph &g, int x, int y);

/// Arc between distinct endpoints, identified with its reversal.
struct Arc {
	std::vector<int> vertices; // canonical: min(seq, reverse(seq))
};

struct ArcList {
	std::vector<Arc> arcs;
	bool cap_exceeded = false;
};

/// All arcs (simple paths) x -> y of length <= max_len, truncated at cap.
ArcList enumerate_arcs(const Graph &g, int x, int y, int max_len, std::size_t cap);

} // namespace ggt
