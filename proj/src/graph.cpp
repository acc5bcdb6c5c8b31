#include "ggt/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>
#include <set>

namespace ggt {

Graph::Graph(int vertex_count, std::vector<Edge> edges,
             std::vector<std::string> labels)
    : n_(vertex_count), labels_(std::move(labels)) {
	if (n_ < 0)
		throw input_error("graph: negative vertex count");
	if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
		throw input_error("graph: label count does not match vertex count");
	std::set<Edge> seen;
	for (auto [a, b] : edges) {
		if (a == b)
			throw input_error("graph: loop at vertex " + std::to_string(a));
		if (a < 0 || b < 0 || a >= n_ || b >= n_)
			throw input_error("graph: edge endpoint out of range");
		if (a > b)
			std::swap(a, b);
		seen.insert({a, b});
	}
	edges_.assign(seen.begin(), seen.end());
	adj_.assign(n_, {});
	for (auto [a, b] : edges_) {
		adj_[a].push_back(b);
		adj_[b].push_back(a);
	}
	for (auto &nb : adj_)
		std::sort(nb.begin(), nb.end());
}

const std::vector<int> &Graph::neighbors(int v) const {
	if (v < 0 || v >= n_)
		throw input_error("graph: unknown vertex " + std::to_string(v));
	return adj_[v];
}

bool Graph::has_edge(int a, int b) const { return edge_index(a, b) >= 0; }

int Graph::edge_index(int a, int b) const {
	if (a < 0 || b < 0 || a >= n_ || b >= n_)
		throw input_error("graph: unknown vertex in edge query");
	if (a > b)
		std::swap(a, b);
	auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b});
	if (it == edges_.end() || *it != Edge{a, b})
		return -1;
	return static_cast<int>(it - edges_.begin());
}

std::string Graph::label(int v) const {
	if (v < 0 || v >= n_)
		throw input_error("graph: unknown vertex " + std::to_string(v));
	if (!labels_.empty())
		return labels_[v];
	return std::to_string(v);
}

void validate_weights(const Graph &g, const EdgeWeights &w) {
	if (static_cast<int>(w.size()) != g.edge_count())
		throw input_error("weights: size does not match edge count");
	for (double x : w)
		if (!(x > 0.0) || !std::isfinite(x))
			throw input_error("weights: all weights must be positive and finite");
}

DistanceMatrix::DistanceMatrix(int n, double fill) : n_(n) {
	d_.assign(static_cast<size_t>(n) * n, fill);
	for (int i = 0; i < n; ++i)
		set(i, i, 0.0);
}

void DistanceMatrix::set(int i, int j, double v) {
	d_[static_cast<size_t>(i) * n_ + j] = v;
	d_[static_cast<size_t>(j) * n_ + i] = v;
}

bool DistanceMatrix::is_metric(double tol) const {
	for (int i = 0; i < n_; ++i)
		if (at(i, i) != 0.0)
			return false;
	for (int i = 0; i < n_; ++i)
		for (int j = i + 1; j < n_; ++j) {
			if (at(i, j) != at(j, i) || at(i, j) < 0.0)
				return false;
			for (int k = 0; k < n_; ++k)
				if (at(i, j) > at(i, k) + at(k, j) + tol)
					return false;
		}
	return true;
}

std::vector<int> bfs_distances(const Graph &g, int source) {
	if (source < 0 || source >= g.vertex_count())
		throw input_error("bfs: unknown source vertex");
	std::vector<int> dist(g.vertex_count(), -1);
	std::deque<int> q{source};
	dist[source] = 0;
	while (!q.empty()) {
		int v = q.front();
		q.pop_front();
		for (int w : g.neighbors(v))
			if (dist[w] < 0) {
				dist[w] = dist[v] + 1;
				q.push_back(w);
			}
	}
	return dist;
}

std::vector<double> dijkstra(const Graph &g, const EdgeWeights &w, int source) {
	validate_weights(g, w);
	if (source < 0 || source >= g.vertex_count())
		throw input_error("dijkstra: unknown source vertex");
	std::vector<double> dist(g.vertex_count(), kInf);
	using Item = std::pair<double, int>;
	std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
	dist[source] = 0.0;
	pq.push({0.0, source});
	while (!pq.empty()) {
		auto [d, v] = pq.top();
		pq.pop();
		if (d > dist[v])
			continue;
		for (int u : g.neighbors(v)) {
			double nd = d + w[g.edge_index(v, u)];
			if (nd < dist[u]) {
				dist[u] = nd;
				pq.push({nd, u});
			}
		}
	}
	return dist;
}

DistanceMatrix all_pairs_unit(const Graph &g) {
	DistanceMatrix m(g.vertex_count());
	for (int s = 0; s < g.vertex_count(); ++s) {
		auto row = bfs_distances(g, s);
		for (int t = 0; t < g.vertex_count(); ++t)
			if (row[t] >= 0)
				m.set(s, t, row[t]);
	}
	return m;
}

DistanceMatrix all_pairs_weighted(const Graph &g, const EdgeWeights &w) {
	DistanceMatrix m(g.vertex_count());
	for (int s = 0; s < g.vertex_count(); ++s) {
		auto row = dijkstra(g, w, s);
		for (int t = 0; t < g.vertex_count(); ++t)
			m.set(s, t, row[t]);
	}
	return m;
}

namespace {

// DFS over the shortest-path DAG from x toward y.
void dag_paths(const Graph &g, const std::vector<int> &dx,
               const std::vector<int> &dy, int y, int target_len,
               std::vector<int> &path, std::size_t cap, GeodesicList &out) {
	int v = path.back();
	if (v == y) {
		if (out.geodesics.size() >= cap) {
			out.cap_exceeded = true;
			return;
		}
		out.geodesics.push_back({path});
		return;
	}
	for (int u : g.neighbors(v)) {
		if (out.cap_exceeded)
			return;
		if (dx[u] == dx[v] + 1 && dy[u] >= 0 && dx[u] + dy[u] == target_len) {
			path.push_back(u);
			dag_paths(g, dx, dy, y, target_len, path, cap, out);
			path.pop_back();
		}
	}
}

} // namespace

GeodesicList geodesics_between(const Graph &g, int x, int y, std::size_t cap) {
	if (cap < 1)
		throw input_error("geodesics: cap must be >= 1");
	GeodesicList out;
	auto dx = bfs_distances(g, x);
	if (dx[y] < 0) {
		out.disconnected = true;
		return out;
	}
	auto dy = bfs_distances(g, y);
	std::vector<int> path{x};
	dag_paths(g, dx, dy, y, dx[y], path, cap, out);
	return out;
}

std::vector<int> lex_least_geodesic(const Graph &g, int x, int y) {
	auto dx = bfs_distances(g, x);
	if (dx[y] < 0)
		return {};
	auto dy = bfs_distances(g, y);
	int total = dx[y];
	std::vector<int> path{x};
	int v = x;
	while (v != y) {
		int best = -1;
		for (int u : g.neighbors(v))
			if (dx[u] == dx[v] + 1 && dy[u] >= 0 && dx[u] + dy[u] == total) {
				best = u;
				break; // neighbors sorted ascending
			}
		path.push_back(best);
		v = best;
	}
	return path;
}

namespace {

void arc_dfs(const Graph &g, int y, int max_len, std::size_t cap,
             std::vector<int> &path, std::vector<char> &used, ArcList &out) {
	int v = path.back();
	if (v == y) {
		if (out.arcs.size() >= cap) {
			out.cap_exceeded = true;
			return;
		}
		std::vector<int> canon = path;
		std::vector<int> rev(path.rbegin(), path.rend());
		if (rev < canon)
			canon = rev;
		out.arcs.push_back({std::move(canon)});
		return;
	}
	if (static_cast<int>(path.size()) - 1 >= max_len)
		return;
	for (int u : g.neighbors(v)) {
		if (out.cap_exceeded)
			return;
		if (used[u])
			continue;
		used[u] = 1;
		path.push_back(u);
		arc_dfs(g, y, max_len, cap, path, used, out);
		path.pop_back();
		used[u] = 0;
	}
}

} // namespace

ArcList enumerate_arcs(const Graph &g, int x, int y, int max_len,
                       std::size_t cap) {
	if (max_len < 1)
		throw input_error("arcs: max_len must be >= 1");
	if (x == y)
		throw input_error("arcs: endpoints must be distinct");
	if (x < 0 || y < 0 || x >= g.vertex_count() || y >= g.vertex_count())
		throw input_error("arcs: unknown endpoint");
	ArcList out;
	std::vector<int> path{x};
	std::vector<char> used(g.vertex_count(), 0);
	used[x] = 1;
	arc_dfs(g, y, max_len, cap, path, used, out);
	return out;
}

} // namespace ggt
