#pragma once

#include "ggt/cayley.hpp"
#include "ggt/divider.hpp"
#include "ggt/graph.hpp"

#include <string>
#include <vector>

namespace ggt {

struct DecayRow {
	int h = 0; // distance from the basepoint to the geodesic
	double max_floyd_length = 0.0;
	std::size_t geodesic_count = 0;
};

struct DecayTable {
	std::vector<DecayRow> rows; // h strictly increasing
	bool exhaustive = true;     // false when a per-pair geodesic cap was hit
};

/// Maximum Floyd length of inner geodesics grouped by their distance to the
/// basepoint. Geodesics run between inner-sphere vertices; per-pair
/// enumeration is capped (the table notes whether the sweep was exhaustive).
DecayTable karlsson_decay_scan(const CayleyBall &ball, double lambda,
                               std::size_t per_pair_cap = 64);

struct KarlssonResult {
	bool ok = false;
	int r = -1; // smallest certified ball radius for E
	std::size_t geodesics_checked = 0;
	bool exhaustive = true;
	std::vector<int> counterexample; // violating geodesic when !ok
};

/// Finds the smallest r <= inner radius such that with E = {edges inside
/// B_r}, every inner-ball geodesic avoiding E has its endpoint pair in
/// v = cap(S{u}). Empty S makes v the full entourage (vacuous success at
/// r = 0).
KarlssonResult generalized_karlsson_search(const CayleyBall &ball,
                                           const Divider &divider,
                                           const std::vector<std::string> &S,
                                           std::size_t per_pair_cap = 64);

} // namespace ggt
