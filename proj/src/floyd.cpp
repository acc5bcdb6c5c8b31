#include "ggt/floyd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ggt {

void validate_config(const Graph &g, const FloydConfig &cfg) {
	if (!(cfg.lambda > 0.0 && cfg.lambda < 1.0))
		throw input_error("floyd: lambda must lie strictly in (0,1)");
	if (cfg.basepoint < 0 || cfg.basepoint >= g.vertex_count())
		throw input_error("floyd: basepoint not in graph");
}

EdgeWeights floyd_weights(const Graph &g, const FloydConfig &cfg) {
	validate_config(g, cfg);
	auto d = bfs_distances(g, cfg.basepoint);
	EdgeWeights w(g.edge_count());
	for (int i = 0; i < g.edge_count(); ++i) {
		auto [a, b] = g.edges()[i];
		if (d[a] < 0 || d[b] < 0)
			throw input_error("floyd: edge unreachable from basepoint");
		w[i] = std::pow(cfg.lambda, std::min(d[a], d[b]));
	}
	return w;
}

std::vector<double> floyd_dist_from(const Graph &g, const FloydConfig &cfg,
                                    int source) {
	return dijkstra(g, floyd_weights(g, cfg), source);
}

double floyd_dist(const Graph &g, const FloydConfig &cfg, int x, int y) {
	if (y < 0 || y >= g.vertex_count())
		throw input_error("floyd: unknown vertex");
	return floyd_dist_from(g, cfg, x)[y];
}

BilipschitzReport basepoint_bilipschitz_check(const CayleyBall &ball,
                                              double lambda, int v, int w,
                                              std::vector<int> domain) {
	FloydConfig cv{lambda, v}, cw{lambda, w};
	validate_config(ball.graph, cv);
	validate_config(ball.graph, cw);
	if (domain.empty())
		domain = ball.inner_vertices();
	BilipschitzReport rep;
	int dvw = bfs_distances(ball.graph, v)[w];
	rep.bound = std::pow(lambda, -dvw);
	for (size_t i = 0; i < domain.size(); ++i) {
		auto dv = floyd_dist_from(ball.graph, cv, domain[i]);
		auto dw = floyd_dist_from(ball.graph, cw, domain[i]);
		for (size_t j = i + 1; j < domain.size(); ++j) {
			double a = dv[domain[j]], b = dw[domain[j]];
			if (a == 0.0 && b == 0.0)
				continue;
			rep.K = std::max({rep.K, a / b, b / a});
			++rep.pairs;
		}
	}
	rep.within_bound = rep.K <= rep.bound * (1.0 + 1e-12);
	return rep;
}

BoundaryClustering boundary_clusters(const CayleyBall &ball,
                                     const FloydConfig &cfg, double epsilon) {
	if (!(epsilon > 0.0))
		throw input_error("boundary: epsilon must be positive");
	BoundaryClustering out;
	out.sphere_vertices = ball.sphere_vertices();
	if (out.sphere_vertices.empty())
		throw input_error("boundary: empty sphere");
	int m = static_cast<int>(out.sphere_vertices.size());

	// Union-find over sphere vertices.
	std::vector<int> parent(m);
	std::iota(parent.begin(), parent.end(), 0);
	auto find = [&](int x) {
		while (parent[x] != x)
			x = parent[x] = parent[parent[x]];
		return x;
	};

	for (int i = 0; i < m; ++i) {
		auto dist = floyd_dist_from(ball.graph, cfg, out.sphere_vertices[i]);
		for (int j = i + 1; j < m; ++j)
			if (dist[out.sphere_vertices[j]] < epsilon) {
				int a = find(i), b = find(j);
				if (a != b)
					parent[a] = b;
			}
	}

	out.cluster_of.assign(m, -1);
	for (int i = 0; i < m; ++i) {
		int root = find(i);
		if (out.cluster_of[root] < 0)
			out.cluster_of[root] = out.cluster_count++;
		out.cluster_of[i] = out.cluster_of[root];
	}
	return out;
}

} // namespace ggt
