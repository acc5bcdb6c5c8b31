#pragma once

#include "ggt/cayley.hpp"
#include "ggt/graph.hpp"

#include <vector>

namespace ggt {

struct FloydConfig {
	double lambda = 0.5; // strictly inside (0,1)
	int basepoint = 0;
};

void validate_config(const Graph &g, const FloydConfig &cfg);

/// weight(e) = lambda^{d(v,e)} with d(v,e) = min endpoint distance to the
/// basepoint (min-endpoint convention).
EdgeWeights floyd_weights(const Graph &g, const FloydConfig &cfg);

double floyd_dist(const Graph &g, const FloydConfig &cfg, int x, int y);
std::vector<double> floyd_dist_from(const Graph &g, const FloydConfig &cfg,
                                    int source);

struct BilipschitzReport {
	double K = 1.0;      // smallest empirical constant over compared pairs
	double bound = 1.0;  // lambda^{-d(v,w)}
	bool within_bound = true;
	std::size_t pairs = 0;
};

/// Compares delta_{v,lambda} and delta_{w,lambda} over all pairs in the
/// given domain (the ball's inner vertices when empty).
BilipschitzReport basepoint_bilipschitz_check(const CayleyBall &ball,
                                              double lambda, int v, int w,
                                              std::vector<int> domain = {});

struct BoundaryClustering {
	std::vector<int> sphere_vertices;
	std::vector<int> cluster_of; // index-aligned with sphere_vertices
	int cluster_count = 0;
};

/// Single-linkage components of the radius-R sphere under Floyd distance
/// < epsilon.
BoundaryClustering boundary_clusters(const CayleyBall &ball,
                                     const FloydConfig &cfg, double epsilon);

} // namespace ggt
