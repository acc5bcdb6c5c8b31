#include "ggt/visibility.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

namespace ggt {

namespace {

Edge canon_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Lazy per-source BFS cache.
class DistCache {
  public:
	explicit DistCache(const Graph &g) : g_(g) {}
	const std::vector<int> &from(int v) {
		auto it = rows_.find(v);
		if (it == rows_.end())
			it = rows_.emplace(v, bfs_distances(g_, v)).first;
		return it->second;
	}
	int dist(int a, int b) { return from(a)[b]; }

  private:
	const Graph &g_;
	std::unordered_map<int, std::vector<int>> rows_;
};

std::set<Edge> path_edges(const std::vector<int> &path) {
	std::set<Edge> out;
	for (size_t i = 0; i + 1 < path.size(); ++i)
		out.insert(canon_edge(path[i], path[i + 1]));
	return out;
}

} // namespace

Entourage visibility_set(const Graph &g, Edge e) {
	auto [p, q] = e;
	if (g.edge_index(p, q) < 0)
		throw input_error("visibility: not an edge of the graph");
	auto dp = bfs_distances(g, p);
	auto dq = bfs_distances(g, q);
	int n = g.vertex_count();
	Entourage u(n);
	for (int x = 0; x < n; ++x) {
		auto dx = bfs_distances(g, x);
		for (int y = x + 1; y < n; ++y) {
			if (dx[y] < 0) {
				u.add(x, y); // no geodesic at all, so none through e
				continue;
			}
			int dxe = std::min(dp[x], dq[x]);
			int dye = std::min(dp[y], dq[y]);
			if (dxe < 0 || dye < 0 || dxe + dye >= dx[y])
				u.add(x, y);
		}
	}
	return u;
}

Entourage visibility_set_by_geodesics(const Graph &g, Edge e,
                                      std::size_t cap) {
	auto [p, q] = e;
	if (g.edge_index(p, q) < 0)
		throw input_error("visibility: not an edge of the graph");
	int n = g.vertex_count();
	Entourage u(n);
	Edge ce = canon_edge(p, q);
	for (int x = 0; x < n; ++x)
		for (int y = x + 1; y < n; ++y) {
			auto list = geodesics_between(g, x, y, cap);
			if (list.disconnected) {
				u.add(x, y);
				continue;
			}
			if (list.cap_exceeded)
				throw resource_error("visibility: geodesic cap exceeded");
			bool crossed = false;
			for (const auto &geo : list.geodesics)
				if (path_edges(geo.vertices).count(ce)) {
					crossed = true;
					break;
				}
			if (!crossed)
				u.add(x, y);
		}
	return u;
}

Entourage principal_set(const Graph &g, const std::vector<Edge> &E) {
	int n = g.vertex_count();
	if (E.empty())
		return Entourage::full(n);
	// One BFS per vertex; all edge checks share the row.
	std::vector<std::pair<std::vector<int>, std::vector<int>>> edists;
	for (auto [p, q] : E) {
		if (g.edge_index(p, q) < 0)
			throw input_error("visibility: not an edge of the graph");
		edists.push_back({bfs_distances(g, p), bfs_distances(g, q)});
	}
	Entourage u(n);
	for (int x = 0; x < n; ++x) {
		auto dx = bfs_distances(g, x);
		for (int y = x + 1; y < n; ++y) {
			bool all = true;
			for (const auto &[dp, dq] : edists) {
				if (dx[y] < 0)
					break;
				int dxe = std::min(dp[x], dq[x]);
				int dye = std::min(dp[y], dq[y]);
				if (dxe >= 0 && dye >= 0 && dxe + dye < dx[y]) {
					all = false;
					break;
				}
			}
			if (all)
				u.add(x, y);
		}
	}
	return u;
}

namespace {

// Edge distance in the line-graph sense: 0 for e itself, otherwise one more
// than the least endpoint distance (so r = 0 selects exactly {e}).
std::vector<Edge> edges_within(const Graph &g, Edge e, int r) {
	auto dp = bfs_distances(g, e.first);
	auto dq = bfs_distances(g, e.second);
	std::vector<Edge> out;
	for (auto [a, b] : g.edges()) {
		if (Edge{a, b} == e) {
			out.push_back({a, b});
			continue;
		}
		int d = std::min({dp[a], dp[b], dq[a], dq[b]});
		if (d >= 0 && d + 1 <= r)
			out.push_back({a, b});
	}
	return out;
}

} // namespace

VisibilityWitness althyp_witness(const Graph &g, Edge e, int max_radius,
                                 std::size_t triangle_samples,
                                 std::uint64_t seed) {
	VisibilityWitness out;
	out.edge = canon_edge(e.first, e.second);
	Entourage ue = visibility_set(g, out.edge);
	for (int r = 0; r <= max_radius; ++r) {
		auto F = edges_within(g, out.edge, r);
		Entourage uf = Entourage::full(g.vertex_count());
		for (auto f : F)
			uf = uf.intersect(visibility_set(g, f));
		Entourage uf2 = uf.power(2);
		if (uf2.subset_of(ue)) {
			out.certified = true;
			out.radius = r;
			out.witness_edges = F;
			break;
		}
		if (r == max_radius) {
			out.radius = r;
			out.witness_edges = F;
			// Extract a violating pair with its middle vertex.
			for (auto [x, y] : uf2.pairs())
				if (!ue.has(x, y)) {
					for (int z = 0; z < g.vertex_count(); ++z)
						if (uf.has(x, z) && uf.has(z, y)) {
							out.violation = std::array<int, 3>{x, z, y};
							break;
						}
					break;
				}
		}
	}

	// Sampled triangle formulation: e on one side forces a witness edge on
	// another side.
	if (out.certified) {
		std::set<Edge> fset(out.witness_edges.begin(), out.witness_edges.end());
		std::mt19937_64 rng(seed);
		int n = g.vertex_count();
		bool all_ok = true;
		std::size_t tried = 0;
		while (tried < triangle_samples) {
			int a = static_cast<int>(rng() % n);
			int b = static_cast<int>(rng() % n);
			int c = static_cast<int>(rng() % n);
			++tried;
			if (a == b || b == c || a == c)
				continue;
			auto sc = lex_least_geodesic(g, a, b);
			auto sa = lex_least_geodesic(g, b, c);
			auto sb = lex_least_geodesic(g, c, a);
			if (sc.empty() || sa.empty() || sb.empty())
				continue;
			if (!path_edges(sc).count(out.edge))
				continue;
			auto ea = path_edges(sa);
			auto eb = path_edges(sb);
			bool found = false;
			for (const auto &f : fset)
				if (ea.count(f) || eb.count(f)) {
					found = true;
					break;
				}
			if (!found)
				all_ok = false;
		}
		out.triangle_agrees = all_ok;
	}
	return out;
}

FinenessReport fineness_report(const Graph &g, int x, int y, int L,
                               std::size_t cap) {
	auto dx = bfs_distances(g, x);
	if (dx[y] >= 0 && L < dx[y])
		throw input_error("fineness: L below the graph distance");
	FinenessReport out;
	auto arcs = enumerate_arcs(g, x, y, L, cap);
	out.count = arcs.arcs.size();
	out.cap_exceeded = arcs.cap_exceeded;
	return out;
}

FinenessReport fineness_report(const CayleyBall &ball, int x, int y, int L,
                               std::size_t cap) {
	FinenessReport out = fineness_report(ball.graph, x, y, L, cap);
	CayleyBall bigger = build_ball(ball.model, ball.radius + 1);
	int bx = bigger.vertex_of(ball.words[x]);
	int by = bigger.vertex_of(ball.words[y]);
	FinenessReport again = fineness_report(bigger.graph, bx, by, L, cap);
	out.stable = !out.cap_exceeded && !again.cap_exceeded &&
	             out.count == again.count;
	return out;
}

namespace {

struct TripodPos {
	int leg;       // 0 = a, 1 = b, 2 = c
	double center; // distance from the tripod center
};

double tripod_dist(const TripodPos &p, const TripodPos &q) {
	if (p.leg == q.leg)
		return std::abs(p.center - q.center);
	return p.center + q.center;
}

// Positions of all side vertices under the comparison map.
std::vector<std::pair<int, TripodPos>> tripod_positions(
    const TriangleSides &t) {
	double lab = static_cast<double>(t.side_c.size()) - 1;
	double lbc = static_cast<double>(t.side_a.size()) - 1;
	double lca = static_cast<double>(t.side_b.size()) - 1;
	double alpha_a = (lab + lca - lbc) / 2;
	double alpha_b = (lab + lbc - lca) / 2;
	double alpha_c = (lbc + lca - lab) / 2;
	std::vector<std::pair<int, TripodPos>> out;
	for (size_t k = 0; k < t.side_c.size(); ++k) {
		double s = static_cast<double>(k); // from a
		out.push_back({t.side_c[k], s <= alpha_a
		                                ? TripodPos{0, alpha_a - s}
		                                : TripodPos{1, s - alpha_a}});
	}
	for (size_t k = 0; k < t.side_a.size(); ++k) {
		double s = static_cast<double>(k); // from b
		out.push_back({t.side_a[k], s <= alpha_b
		                                ? TripodPos{1, alpha_b - s}
		                                : TripodPos{2, s - alpha_b}});
	}
	for (size_t k = 0; k < t.side_b.size(); ++k) {
		double s = static_cast<double>(k); // from c
		out.push_back({t.side_b[k], s <= alpha_c
		                                ? TripodPos{2, alpha_c - s}
		                                : TripodPos{0, s - alpha_c}});
	}
	return out;
}

void validate_triangle(const Graph &g, const TriangleSides &t) {
	auto check_side = [&](const std::vector<int> &side, const char *name) {
		if (side.empty())
			throw input_error(std::string("triangle: empty side ") + name);
		for (size_t i = 0; i + 1 < side.size(); ++i)
			if (!g.has_edge(side[i], side[i + 1]))
				throw input_error(std::string("triangle: side ") + name +
				                  " is not a path");
		auto d = bfs_distances(g, side.front());
		if (d[side.back()] != static_cast<int>(side.size()) - 1)
			throw input_error(std::string("triangle: side ") + name +
			                  " is not a geodesic");
	};
	check_side(t.side_a, "a");
	check_side(t.side_b, "b");
	check_side(t.side_c, "c");
	if (t.side_c.back() != t.side_a.front() ||
	    t.side_a.back() != t.side_b.front() ||
	    t.side_b.back() != t.side_c.front())
		throw input_error("triangle: side endpoints do not close up");
}

} // namespace

double triangle_defect(const Graph &g, const TriangleSides &t) {
	validate_triangle(g, t);
	auto pos = tripod_positions(t);
	DistCache cache(g);
	double defect = 0.0;
	for (size_t i = 0; i < pos.size(); ++i)
		for (size_t j = i + 1; j < pos.size(); ++j) {
			double dg = cache.dist(pos[i].first, pos[j].first);
			defect = std::max(defect,
			                  dg - tripod_dist(pos[i].second, pos[j].second));
		}
	return defect;
}

namespace {

template <typename Body>
void for_sampled_tuples(int domain_size, int arity, std::size_t sample_cap,
                        std::uint64_t seed, Body body) {
	// Enumerate exhaustively when the tuple count fits under the cap.
	double total = 1;
	for (int k = 0; k < arity; ++k)
		total *= static_cast<double>(domain_size - k) / (k + 1);
	if (total <= static_cast<double>(sample_cap)) {
		std::vector<int> idx(arity);
		// Recursive enumeration of increasing index tuples.
		auto rec = [&](auto &&self, int pos, int start) -> void {
			if (pos == arity) {
				body(idx);
				return;
			}
			for (int v = start; v < domain_size; ++v) {
				idx[pos] = v;
				self(self, pos + 1, v + 1);
			}
		};
		rec(rec, 0, 0);
		return;
	}
	std::mt19937_64 rng(seed);
	std::vector<int> idx(arity);
	for (std::size_t s = 0; s < sample_cap; ++s) {
		bool distinct = true;
		for (int k = 0; k < arity; ++k) {
			idx[k] = static_cast<int>(rng() % domain_size);
			for (int l = 0; l < k; ++l)
				if (idx[l] == idx[k])
					distinct = false;
		}
		if (distinct)
			body(idx);
	}
}

} // namespace

DeltaEstimate thin_triangle_delta(const Graph &g, std::size_t sample_cap,
                                  std::uint64_t seed,
                                  const std::vector<int> &domain) {
	std::vector<int> dom = domain;
	if (dom.empty())
		for (int v = 0; v < g.vertex_count(); ++v)
			dom.push_back(v);
	DeltaEstimate out;
	for_sampled_tuples(
	    static_cast<int>(dom.size()), 3, sample_cap, seed,
	    [&](const std::vector<int> &idx) {
		    int a = dom[idx[0]], b = dom[idx[1]], c = dom[idx[2]];
		    auto sc = lex_least_geodesic(g, a, b);
		    auto sa = lex_least_geodesic(g, b, c);
		    auto sb = lex_least_geodesic(g, c, a);
		    if (sc.empty() || sa.empty() || sb.empty())
			    return;
		    TriangleSides t{sa, sb, sc};
		    out.delta = std::max(out.delta, triangle_defect(g, t));
		    ++out.samples;
	    });
	return out;
}

DeltaEstimate four_point_delta(const Graph &g, std::size_t sample_cap,
                               std::uint64_t seed,
                               const std::vector<int> &domain) {
	std::vector<int> dom = domain;
	if (dom.empty())
		for (int v = 0; v < g.vertex_count(); ++v)
			dom.push_back(v);
	DeltaEstimate out;
	DistCache cache(g);
	for_sampled_tuples(
	    static_cast<int>(dom.size()), 4, sample_cap, seed,
	    [&](const std::vector<int> &idx) {
		    int x = dom[idx[0]], y = dom[idx[1]], z = dom[idx[2]],
		        w = dom[idx[3]];
		    int d_xy = cache.dist(x, y), d_zw = cache.dist(z, w);
		    int d_xz = cache.dist(x, z), d_yw = cache.dist(y, w);
		    int d_xw = cache.dist(x, w), d_yz = cache.dist(y, z);
		    if (d_xy < 0 || d_zw < 0 || d_xz < 0 || d_yw < 0 || d_xw < 0 ||
		        d_yz < 0)
			    return;
		    std::array<int, 3> sums{d_xy + d_zw, d_xz + d_yw, d_xw + d_yz};
		    std::sort(sums.begin(), sums.end());
		    out.delta = std::max(out.delta, (sums[2] - sums[1]) / 2.0);
		    ++out.samples;
	    });
	return out;
}

namespace {

// Append a walk segment, erasing loops as soon as a vertex repeats.
void loop_erase_append(std::vector<int> &walk, int v) {
	auto it = std::find(walk.begin(), walk.end(), v);
	if (it != walk.end())
		walk.erase(it + 1, walk.end());
	else
		walk.push_back(v);
}

std::vector<int> loop_erased(const std::vector<int> &walk) {
	std::vector<int> out;
	for (int v : walk)
		loop_erase_append(out, v);
	return out;
}

// All simple paths from s to t in a small edge set, capped.
void subgraph_paths(const std::map<int, std::vector<int>> &adj, int t,
                    std::vector<int> &path, std::set<int> &used,
                    std::vector<std::vector<int>> &out, std::size_t cap) {
	if (out.size() >= cap)
		return;
	int v = path.back();
	if (v == t) {
		out.push_back(path);
		return;
	}
	auto it = adj.find(v);
	if (it == adj.end())
		return;
	for (int u : it->second) {
		if (used.count(u))
			continue;
		used.insert(u);
		path.push_back(u);
		subgraph_paths(adj, t, path, used, out, cap);
		path.pop_back();
		used.erase(u);
	}
}

std::vector<int> canonical_cycle(std::vector<int> cyc) {
	// Rotate the least vertex to the front, then pick the lesser orientation.
	auto mn = std::min_element(cyc.begin(), cyc.end());
	std::rotate(cyc.begin(), mn, cyc.end());
	if (cyc.size() > 2 && cyc[cyc.size() - 1] < cyc[1]) {
		std::reverse(cyc.begin() + 1, cyc.end());
	}
	return cyc;
}

} // namespace

CircuitResult circuit_bound_check(const Graph &g, int delta,
                                  const TriangleSides &t, int edge_pos_on_c) {
	if (delta < 1)
		throw input_error("circuit: delta must be a positive integer");
	validate_triangle(g, t);
	double defect = triangle_defect(g, t);
	if (defect > delta + 1e-9)
		throw input_error("circuit: triangle is not delta-thin (defect " +
		                  std::to_string(defect) + " > " +
		                  std::to_string(delta) + ")");
	if (edge_pos_on_c < 0 ||
	    edge_pos_on_c + 1 >= static_cast<int>(t.side_c.size()))
		throw input_error("circuit: edge position outside side c");

	CircuitResult res;
	res.length_bound = 24 * delta + 6;
	Edge e = canon_edge(t.side_c[edge_pos_on_c], t.side_c[edge_pos_on_c + 1]);
	auto ea = path_edges(t.side_a);
	auto eb = path_edges(t.side_b);
	if (ea.count(e) || eb.count(e)) {
		res.status = CircuitStatus::NotApplicable;
		return res;
	}

	DistCache cache(g);
	std::set<int> other(t.side_a.begin(), t.side_a.end());
	other.insert(t.side_b.begin(), t.side_b.end());

	// One foot: from the edge endpoint back along side_c, then (outside the
	// exceptional case) a short hop onto the other sides.
	// dir=-1 builds L_a toward vertex a, dir=+1 builds L_b toward b.
	auto build_foot = [&](int pos0, int dir) -> std::vector<int> {
		int limit = dir < 0 ? 0 : static_cast<int>(t.side_c.size()) - 1;
		int hit = -1;
		for (int k = pos0; dir < 0 ? k >= limit : k <= limit; k += dir)
			if (other.count(t.side_c[k])) {
				hit = k;
				break;
			}
		std::vector<int> walk;
		if (hit >= 0 && std::abs(hit - pos0) < delta) {
			for (int k = pos0; dir < 0 ? k >= hit : k <= hit; k += dir)
				walk.push_back(t.side_c[k]); // exceptional case
			return walk;
		}
		int pos2 = pos0 + dir * delta;
		pos2 = std::clamp(pos2, 0, static_cast<int>(t.side_c.size()) - 1);
		for (int k = pos0; dir < 0 ? k >= pos2 : k <= pos2; k += dir)
			walk.push_back(t.side_c[k]);
		int a2 = t.side_c[pos2];
		int a3 = -1, best = -1;
		for (int v : other) {
			int d = cache.dist(a2, v);
			if (d >= 0 && (best < 0 || d < best || (d == best && v < a3))) {
				best = d;
				a3 = v;
			}
		}
		auto hop = lex_least_geodesic(g, a2, a3);
		for (size_t k = 1; k < hop.size(); ++k)
			walk.push_back(hop[k]);
		return loop_erased(walk);
	};

	auto la = build_foot(edge_pos_on_c, -1);     // a0 ... a3
	auto lb = build_foot(edge_pos_on_c + 1, +1); // b0 ... b3
	int a3 = la.back(), b3 = lb.back();

	// The closed walk H: a3 ... a0, E, b0 ... b3, bridge back to a3.
	std::vector<int> walk(la.rbegin(), la.rend());
	walk.insert(walk.end(), lb.begin(), lb.end());

	auto index_on = [&](const std::vector<int> &side, int v) {
		auto it = std::find(side.begin(), side.end(), v);
		return it == side.end() ? -1
		                        : static_cast<int>(it - side.begin());
	};

	// Bridge from b3 back to a3 along the other sides.
	auto subpath = [&](const std::vector<int> &side, int from, int to) {
		std::vector<int> out;
		int step = from <= to ? 1 : -1;
		for (int k = from; k != to + step; k += step)
			out.push_back(side[k]);
		return out;
	};

	std::vector<int> bridge; // from b3 to a3, b3 excluded on append
	int ia_a = index_on(t.side_a, a3), ib_a = index_on(t.side_a, b3);
	int ia_b = index_on(t.side_b, a3), ib_b = index_on(t.side_b, b3);
	if (ia_a >= 0 && ib_a >= 0)
		bridge = subpath(t.side_a, ib_a, ia_a);
	else if (ia_b >= 0 && ib_b >= 0)
		bridge = subpath(t.side_b, ib_b, ia_b);
	else {
		// a3 and b3 on different sides; walk both toward the shared corner c.
		const auto &side_A = ia_a >= 0 ? t.side_a : t.side_b;
		const auto &side_B = ia_a >= 0 ? t.side_b : t.side_a;
		int ia = ia_a >= 0 ? ia_a : ia_b;
		int ib = ia_a >= 0 ? ib_b : ib_a;
		// side_a runs b->c, side_b runs c->a: the corner c sits at the end
		// of side_a and the start of side_b.
		int dirA = (&side_A == &t.side_a) ? 1 : -1; // toward c along side_A
		int dirB = (&side_B == &t.side_a) ? 1 : -1;
		std::set<int> on_B(side_B.begin(), side_B.end());
		int ia5 = ia;
		while (!on_B.count(side_A[ia5]))
			ia5 += dirA;
		int len35 = std::abs(ia5 - ia);
		if (len35 <= 7 * delta + 2) {
			std::vector<int> part = subpath(side_A, ia, ia5);
			int ib5 = index_on(side_B, side_A[ia5]);
			auto part2 = subpath(side_B, ib5, ib);
			// bridge runs b3 -> a3: reverse of (a3 -> a5 -> b3)
			std::vector<int> fwd = part;
			for (size_t k = 1; k < part2.size(); ++k)
				fwd.push_back(part2[k]);
			bridge.assign(fwd.rbegin(), fwd.rend());
		} else {
			int ia6 = ia + dirA * (7 * delta + 2);
			int a6 = side_A[ia6];
			int a7 = -1, best = -1;
			for (int v : side_B) {
				int d = cache.dist(a6, v);
				if (d >= 0 && (best < 0 || d < best || (d == best && v < a7))) {
					best = d;
					a7 = v;
				}
			}
			auto hop = lex_least_geodesic(g, a6, a7);
			std::vector<int> fwd = subpath(side_A, ia, ia6);
			for (size_t k = 1; k < hop.size(); ++k)
				fwd.push_back(hop[k]);
			int ib7 = index_on(side_B, a7);
			auto part2 = subpath(side_B, ib7, ib);
			for (size_t k = 1; k < part2.size(); ++k)
				fwd.push_back(part2[k]);
			fwd = loop_erased(fwd);
			bridge.assign(fwd.rbegin(), fwd.rend());
		}
	}
	// The bridge runs b3 -> a3; appending it (sans endpoints) closes the
	// walk, whose closing edge is restored below.
	walk.insert(walk.end(), bridge.begin() + 1,
	            bridge.end() - (bridge.size() > 1 ? 1 : 0));

	// Extract a simple cycle through E from the walk's edge set.
	std::map<int, std::vector<int>> adj;
	auto add_walk_edge = [&](int u, int v) {
		adj[u].push_back(v);
		adj[v].push_back(u);
	};
	std::set<Edge> walk_edges;
	for (size_t k = 0; k + 1 < walk.size(); ++k)
		if (walk[k] != walk[k + 1])
			walk_edges.insert(canon_edge(walk[k], walk[k + 1]));
	if (walk.size() > 1 && walk.front() != walk.back())
		walk_edges.insert(canon_edge(walk.front(), walk.back()));
	for (auto [u, v] : walk_edges)
		if (canon_edge(u, v) != e)
			add_walk_edge(u, v);
	for (auto &[v, nbrs] : adj)
		std::sort(nbrs.begin(), nbrs.end());

	std::vector<std::vector<int>> paths;
	{
		std::vector<int> path{e.second};
		std::set<int> used{e.second};
		subgraph_paths(adj, e.first, path, used, paths, 20000);
	}
	std::set<Edge> side_edges = ea;
	side_edges.insert(eb.begin(), eb.end());
	std::vector<int> best_cycle;
	for (auto &p : paths) {
		if (p.size() < 3)
			continue;
		auto pe = path_edges(p);
		bool has_side = false;
		for (const auto &f : pe)
			if (side_edges.count(f)) {
				has_side = true;
				break;
			}
		if (!has_side)
			continue;
		if (static_cast<int>(p.size()) > res.length_bound)
			continue;
		auto cyc = canonical_cycle(p);
		if (best_cycle.empty() || p.size() < best_cycle.size() ||
		    (p.size() == best_cycle.size() && cyc < canonical_cycle(best_cycle)))
			best_cycle = p;
	}
	if (best_cycle.empty()) {
		res.status = CircuitStatus::Failed;
		return res;
	}
	res.status = CircuitStatus::Found;
	res.circuit.vertices = canonical_cycle(best_cycle);
	return res;
}

bool verify_circuit(const Graph &g, const Circuit &h, Edge e,
                    const TriangleSides &t, int length_bound) {
	const auto &vs = h.vertices;
	if (vs.size() < 3 || static_cast<int>(vs.size()) > length_bound)
		return false;
	if (std::set<int>(vs.begin(), vs.end()).size() != vs.size())
		return false;
	std::set<Edge> cyc_edges;
	for (size_t k = 0; k < vs.size(); ++k) {
		int u = vs[k], v = vs[(k + 1) % vs.size()];
		if (!g.has_edge(u, v))
			return false;
		cyc_edges.insert(canon_edge(u, v));
	}
	if (!cyc_edges.count(canon_edge(e.first, e.second)))
		return false;
	auto side_edges = path_edges(t.side_a);
	auto eb = path_edges(t.side_b);
	side_edges.insert(eb.begin(), eb.end());
	for (const auto &f : side_edges)
		if (cyc_edges.count(f))
			return true;
	return false;
}

Divider divider_from_orbit_edges(const CayleyBall &ball,
                                 const std::vector<Edge> &E,
                                 int witness_max_radius) {
	if (E.empty())
		throw input_error("divider: edge set must be nonempty");

	// The dense square in the witness search is cubic in the vertex count;
	// on large balls run it on a smaller ball around the basepoint and carry
	// the witness edges over by their words.
	CayleyBall small_ball;
	const CayleyBall *wb = &ball;
	if (ball.graph.vertex_count() > 4000) {
		small_ball = build_ball(ball.model, std::min(ball.radius,
		                                             witness_max_radius + 2));
		if (small_ball.graph.vertex_count() <= ball.graph.vertex_count())
			wb = &small_ball;
	}
	auto map_edge = [](const CayleyBall &from, const CayleyBall &to, Edge e) {
		int a = to.vertex_of(from.words[e.first]);
		int b = to.vertex_of(from.words[e.second]);
		if (a < 0 || b < 0)
			throw input_error("divider: edge outside the witness ball");
		return Edge{std::min(a, b), std::max(a, b)};
	};

	std::set<Edge> witness_edges;
	for (auto e : E) {
		Edge we = wb == &ball ? e : map_edge(ball, *wb, e);
		auto w = althyp_witness(wb->graph, we, witness_max_radius);
		if (!w.certified)
			throw input_error(
			    "divider: alt-hyperbolicity witness failed for edge {" +
			    ball.graph.label(e.first) + "," + ball.graph.label(e.second) +
			    "}");
		for (auto f : w.witness_edges)
			witness_edges.insert(wb == &ball ? f : map_edge(*wb, ball, f));
	}

	// Group elements carrying some orbit edge onto each witness edge.
	std::set<std::string> felems{""};
	for (auto [p, q] : witness_edges)
		for (auto [x, y] : E)
			for (auto [s, t] : {std::pair{p, q}, std::pair{q, p}}) {
				std::string gw = ball.model->multiply(
				    ball.words[s], ball.model->inverse(ball.words[x]));
				auto ix = act(ball, gw, x);
				auto iy = act(ball, gw, y);
				if (ix && iy && *ix == s && *iy == t) {
					felems.insert(gw);
					felems.insert(ball.model->inverse(gw));
				}
			}

	Divider d;
	d.u = principal_set(ball.graph, E);
	d.F.assign(felems.begin(), felems.end());
	auto check = validate_divider(ball, d.u, d.F, 3);
	if (!check.certified)
		throw input_error("divider: validation failed (power chain escapes u)");
	d.certified_power = 3;
	translate_intersection(ball, d.u, d.F, d.domain);
	return d;
}

} // namespace ggt
