#include "ggt/karlsson.hpp"

#include "ggt/floyd.hpp"

#include <algorithm>
#include <map>

namespace ggt {

namespace {

double geodesic_floyd_length(const std::vector<int> &geo,
                             const std::vector<int> &norm, double lambda) {
	double len = 0.0;
	for (size_t k = 0; k + 1 < geo.size(); ++k) {
		int h = std::min(norm[geo[k]], norm[geo[k + 1]]);
		double w = 1.0;
		for (int i = 0; i < h; ++i)
			w *= lambda;
		len += w;
	}
	return len;
}

int dist_to_basepoint(const std::vector<int> &geo,
                      const std::vector<int> &norm) {
	int h = norm[geo.front()];
	for (int v : geo)
		h = std::min(h, norm[v]);
	return h;
}

} // namespace

DecayTable karlsson_decay_scan(const CayleyBall &ball, double lambda,
                               std::size_t per_pair_cap) {
	if (ball.inner_radius < 3)
		throw input_error("karlsson: inner radius must be >= 3");
	if (!(lambda > 0.0 && lambda < 1.0))
		throw input_error("karlsson: lambda must lie strictly in (0,1)");
	std::vector<int> sphere;
	for (int v = 0; v < ball.graph.vertex_count(); ++v)
		if (ball.norm[v] == ball.inner_radius)
			sphere.push_back(v);

	DecayTable out;
	std::map<int, DecayRow> rows;
	for (size_t a = 0; a < sphere.size(); ++a)
		for (size_t b = a + 1; b < sphere.size(); ++b) {
			auto list =
			    geodesics_between(ball.graph, sphere[a], sphere[b], per_pair_cap);
			if (list.disconnected)
				continue;
			if (list.cap_exceeded)
				out.exhaustive = false;
			for (const auto &geo : list.geodesics) {
				int h = dist_to_basepoint(geo.vertices, ball.norm);
				double len =
				    geodesic_floyd_length(geo.vertices, ball.norm, lambda);
				auto &row = rows[h];
				row.h = h;
				row.max_floyd_length = std::max(row.max_floyd_length, len);
				++row.geodesic_count;
			}
		}
	for (auto &[h, row] : rows)
		out.rows.push_back(row);
	return out;
}

KarlssonResult generalized_karlsson_search(const CayleyBall &ball,
                                           const Divider &divider,
                                           const std::vector<std::string> &S,
                                           std::size_t per_pair_cap) {
	if (divider.certified_power < 2)
		throw input_error("karlsson: divider is not certified");
	int n = ball.graph.vertex_count();
	Entourage v = Entourage::full(n);
	std::vector<char> vdomain(n, 1);
	if (!S.empty())
		v = translate_intersection(ball, divider.u, S, vdomain);

	std::vector<int> inner = ball.inner_vertices();

	// Pre-enumerate geodesics between inner vertices once.
	struct PairGeos {
		int x, y;
		std::vector<std::vector<int>> geos;
	};
	KarlssonResult res;
	std::vector<PairGeos> all;
	for (size_t a = 0; a < inner.size(); ++a)
		for (size_t b = a + 1; b < inner.size(); ++b) {
			auto list =
			    geodesics_between(ball.graph, inner[a], inner[b], per_pair_cap);
			if (list.disconnected)
				continue;
			if (list.cap_exceeded)
				res.exhaustive = false;
			PairGeos pg{inner[a], inner[b], {}};
			for (auto &g : list.geodesics)
				pg.geos.push_back(std::move(g.vertices));
			all.push_back(std::move(pg));
		}

	for (int r = 0; r <= ball.inner_radius; ++r) {
		bool ok = true;
		std::size_t checked = 0;
		std::vector<int> bad;
		for (const auto &pg : all) {
			for (const auto &geo : pg.geos) {
				bool avoids = true;
				for (size_t k = 0; k + 1 < geo.size(); ++k)
					if (ball.norm[geo[k]] <= r && ball.norm[geo[k + 1]] <= r) {
						avoids = false;
						break;
					}
				if (!avoids)
					continue;
				++checked;
				if (!vdomain[pg.x] || !vdomain[pg.y] || !v.has(pg.x, pg.y)) {
					ok = false;
					bad = geo;
					break;
				}
			}
			if (!ok)
				break;
		}
		if (ok) {
			res.ok = true;
			res.r = r;
			res.geodesics_checked = checked;
			return res;
		}
		res.counterexample = bad;
	}
	res.ok = false;
	res.r = -1;
	return res;
}

} // namespace ggt
