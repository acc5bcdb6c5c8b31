#pragma once

#include "ggt/cayley.hpp"
#include "ggt/divider.hpp"
#include "ggt/entourage.hpp"
#include "ggt/graph.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ggt {

/// u_e by the distance formula: pairs {x,y} with d(x,e)+d(y,e) >= d(x,y).
Entourage visibility_set(const Graph &g, Edge e);

/// Same set by enumeration: pairs admitting a geodesic avoiding e.
/// Independent cross-check; cap bounds per-pair geodesic enumeration.
Entourage visibility_set_by_geodesics(const Graph &g, Edge e,
                                      std::size_t cap = 100000);

/// u_E = intersection of visibility sets; empty E gives the full entourage.
Entourage principal_set(const Graph &g, const std::vector<Edge> &E);

struct VisibilityWitness {
	Edge edge;
	std::vector<Edge> witness_edges; // F(e)
	int radius = -1;
	bool certified = false;
	// When failed: a pair in u_F^2 outside u_e together with the middle vertex.
	std::optional<std::array<int, 3>> violation; // x, z, y
	// Whether the sampled triangle formulation agreed with the verdict.
	std::optional<bool> triangle_agrees;
};

/// Searches r = 0,1,...,max_radius for F(e) = {edges within distance r of e}
/// with u_{F(e)}^2 subset u_e. Also samples the triangle formulation.
VisibilityWitness althyp_witness(const Graph &g, Edge e, int max_radius,
                                 std::size_t triangle_samples = 200,
                                 std::uint64_t seed = 1);

struct FinenessReport {
	std::size_t count = 0;
	bool cap_exceeded = false;        // count reported as ">= cap"
	std::optional<bool> stable;       // ball-vs-larger-ball comparison
};

FinenessReport fineness_report(const Graph &g, int x, int y, int L,
                               std::size_t cap);

/// Ball variant: recomputes the count on radius R and R+1 between the same
/// group elements and flags stability.
FinenessReport fineness_report(const CayleyBall &ball, int x, int y, int L,
                               std::size_t cap);

struct DeltaEstimate {
	double delta = 0.0;
	std::size_t samples = 0;
};

/// Thin-triangle constant over sampled geodesic triangles (canonical
/// lexicographically-least geodesic per side): max over x,y on the triangle
/// of |xy| - |x'y'| for the comparison-tripod map.
/// The optional domain restricts triangle corners (exact pairs on balls).
DeltaEstimate thin_triangle_delta(const Graph &g, std::size_t sample_cap,
                                  std::uint64_t seed,
                                  const std::vector<int> &domain = {});

/// Four-point condition estimate over sampled vertex quadruples.
DeltaEstimate four_point_delta(const Graph &g, std::size_t sample_cap,
                               std::uint64_t seed,
                               const std::vector<int> &domain = {});

/// Geodesic triangle: sides as vertex paths, side_c from a to b,
/// side_a from b to c, side_b from c to a.
struct TriangleSides {
	std::vector<int> side_a, side_b, side_c;
};

/// Thinness defect of one concrete triangle.
double triangle_defect(const Graph &g, const TriangleSides &t);

struct Circuit {
	std::vector<int> vertices; // cyclic, all distinct, length >= 3
};

enum class CircuitStatus { Found, NotApplicable, Failed };

struct CircuitResult {
	CircuitStatus status = CircuitStatus::Failed;
	Circuit circuit;
	int length_bound = 0; // 24*delta + 6
};

/// The constructive circuit through an edge e of side_c: length <= 24*delta+6,
/// contains e and an edge of side_a or side_b. NotApplicable when e already
/// lies on another side. Throws input_error when the triangle is not
/// delta-thin or e is not an edge of side_c.
CircuitResult circuit_bound_check(const Graph &g, int delta,
                                  const TriangleSides &t, int edge_pos_on_c);

/// Independent verifier for circuit_bound_check output.
bool verify_circuit(const Graph &g, const Circuit &h, Edge e,
                    const TriangleSides &t, int length_bound);

/// Divider from a finite edge set meeting each generator orbit (basepoint
/// star by default): entourage u_E with F assembled from the per-edge
/// alt-hyperbolicity witnesses, validated as a divider with m = 3.
/// Throws input_error naming the edge when a witness fails.
Divider divider_from_orbit_edges(const CayleyBall &ball,
                                 const std::vector<Edge> &E,
                                 int witness_max_radius = 4);

} // namespace ggt
