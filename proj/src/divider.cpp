#include "ggt/divider.hpp"

#include "ggt/floyd.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ggt {

std::vector<std::vector<int>> inverse_translation_maps(
    const CayleyBall &ball, const std::vector<std::string> &F) {
	std::vector<std::vector<int>> maps;
	maps.reserve(F.size());
	int n = ball.graph.vertex_count();
	for (const auto &f : F) {
		std::string finv = ball.model->inverse(f);
		std::vector<int> map(n, -1);
		for (int x = 0; x < n; ++x) {
			auto img = act(ball, finv, x);
			map[x] = img ? *img : -1;
		}
		maps.push_back(std::move(map));
	}
	return maps;
}

Entourage translate_intersection(const CayleyBall &ball, const Entourage &u,
                                 const std::vector<std::string> &F,
                                 std::vector<char> &domain_out) {
	int n = ball.graph.vertex_count();
	if (u.vertex_count() != n)
		throw input_error("divider: entourage size does not match ball");
	auto maps = inverse_translation_maps(ball, F);
	domain_out.assign(n, 1);
	for (const auto &map : maps)
		for (int x = 0; x < n; ++x)
			if (map[x] < 0)
				domain_out[x] = 0;
	Entourage w(n);
	for (int i = 0; i < n; ++i) {
		if (!domain_out[i])
			continue;
		for (int j = i + 1; j < n; ++j) {
			if (!domain_out[j])
				continue;
			bool all = true;
			for (const auto &map : maps)
				if (!u.has(map[i], map[j])) {
					all = false;
					break;
				}
			if (all)
				w.add(i, j);
		}
	}
	return w;
}

DividerCheck validate_divider(const CayleyBall &ball, const Entourage &u,
                              const std::vector<std::string> &F, int m) {
	if (m < 2)
		throw input_error("divider: power must be >= 2");
	bool has_identity = false;
	for (const auto &f : F)
		if (ball.model->normalize(f).empty())
			has_identity = true;
	if (!has_identity)
		throw input_error("divider: F must contain the identity");
	for (const auto &f : F) {
		std::string inv = ball.model->inverse(f);
		if (std::none_of(F.begin(), F.end(), [&](const std::string &g) {
			    return ball.model->normalize(g) == inv;
		    }))
			throw input_error("divider: F must be symmetric");
	}

	std::vector<char> domain;
	Entourage w = translate_intersection(ball, u, F, domain);

	std::vector<char> allowed(domain);
	for (int x = 0; x < ball.graph.vertex_count(); ++x)
		if (ball.norm[x] > ball.inner_radius)
			allowed[x] = 0;
	DividerCheck out;
	out.power = m;
	out.domain_size =
	    static_cast<int>(std::count(allowed.begin(), allowed.end(), 1));
	if (out.domain_size < 2)
		throw resource_error(
		    "divider: verified domain too small; grow the ball radius");

	Entourage wm = w.power_within(m, allowed);
	for (auto [i, j] : wm.pairs()) {
		++out.pairs_checked;
		if (!u.has(i, j)) {
			out.violation = DividerViolation{*w.chain(i, j, m, allowed)};
			return out;
		}
	}
	out.certified = true;
	return out;
}

std::vector<std::string> element_ball(const CayleyBall &ball,
                                      const std::vector<std::string> &F,
                                      int n) {
	std::set<std::string> seen{""};
	std::vector<std::string> frontier{""};
	for (int k = 0; k < n; ++k) {
		std::vector<std::string> next;
		for (const auto &g : frontier)
			for (const auto &f : F) {
				std::string h = ball.model->multiply(f, g);
				if (seen.insert(h).second)
					next.push_back(h);
			}
		frontier = std::move(next);
	}
	return {seen.begin(), seen.end()};
}

FrinkSequence frink_sequence_from_divider(
    const CayleyBall &ball, const Divider &divider, int depth,
    std::optional<FrinkNestingViolation> *violation_out) {
	if (depth < 1)
		throw input_error("frink: depth must be >= 1");
	int n = ball.graph.vertex_count();
	FrinkSequence seq;
	seq.terms.push_back(Entourage::full(n));
	seq.domains.push_back(std::vector<char>(n, 1));
	for (int lvl = 1; lvl <= depth; ++lvl) {
		auto fpow = element_ball(ball, divider.F, lvl - 1);
		std::vector<char> domain;
		seq.terms.push_back(
		    translate_intersection(ball, divider.u, fpow, domain));
		seq.domains.push_back(std::move(domain));
	}
	if (violation_out)
		*violation_out = std::nullopt;
	for (int lvl = 0; lvl + 1 <= depth; ++lvl) {
		Entourage cube = seq.terms[lvl + 1].power_within(3, seq.domains[lvl + 1]);
		for (auto [i, j] : cube.pairs())
			if (!seq.terms[lvl].has(i, j)) {
				FrinkNestingViolation v;
				v.level = lvl + 1;
				v.chain = *seq.terms[lvl + 1].chain(i, j, 3, seq.domains[lvl + 1]);
				if (violation_out) {
					*violation_out = v;
					return seq;
				}
				throw input_error(
				    "frink: nesting v_{n+1}^3 in v_n failed at level " +
				    std::to_string(lvl + 1) +
				    " (boundary truncation; shrink depth or grow the ball)");
			}
	}
	return seq;
}

namespace {

double pair_weight(const FrinkSequence &seq, int i, int j) {
	if (i == j)
		return 0.0;
	for (int lvl = static_cast<int>(seq.terms.size()) - 1; lvl >= 1; --lvl)
		if (seq.terms[lvl].has(i, j))
			return std::ldexp(1.0, -lvl);
	return 1.0;
}

} // namespace

std::vector<double> frink_metric_row(const FrinkSequence &seq, int source) {
	int n = seq.terms.front().vertex_count();
	std::vector<double> dist(n, kInf);
	std::vector<char> done(n, 0);
	dist[source] = 0.0;
	for (int iter = 0; iter < n; ++iter) {
		int best = -1;
		for (int v = 0; v < n; ++v)
			if (!done[v] && (best < 0 || dist[v] < dist[best]))
				best = v;
		if (best < 0 || dist[best] == kInf)
			break;
		done[best] = 1;
		for (int v = 0; v < n; ++v)
			if (!done[v])
				dist[v] = std::min(dist[v],
				                   dist[best] + pair_weight(seq, best, v));
	}
	return dist;
}

DistanceMatrix frink_metric(const FrinkSequence &seq) {
	int n = seq.terms.front().vertex_count();
	// Precompute the pair weights once; the n Dijkstra sweeps then run on a
	// flat matrix instead of rescanning the entourage terms.
	std::vector<double> w(static_cast<size_t>(n) * n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			w[static_cast<size_t>(i) * n + j] = pair_weight(seq, i, j);
	DistanceMatrix m(n);
	std::vector<double> dist(n);
	std::vector<char> done(n);
	for (int s = 0; s < n; ++s) {
		std::fill(dist.begin(), dist.end(), kInf);
		std::fill(done.begin(), done.end(), 0);
		dist[s] = 0.0;
		for (int iter = 0; iter < n; ++iter) {
			int best = -1;
			for (int v = 0; v < n; ++v)
				if (!done[v] && (best < 0 || dist[v] < dist[best]))
					best = v;
			if (best < 0 || dist[best] == kInf)
				break;
			done[best] = 1;
			const double *row = w.data() + static_cast<size_t>(best) * n;
			for (int v = 0; v < n; ++v)
				if (!done[v] && dist[best] + row[v] < dist[v])
					dist[v] = dist[best] + row[v];
		}
		for (int t = 0; t < n; ++t)
			m.set(s, t, dist[t]);
	}
	return m;
}

FrinkLemmaReport verify_frink_lemma(const FrinkSequence &seq,
                                    const DistanceMatrix &metric) {
	FrinkLemmaReport rep;
	int n = metric.size();
	int depth = static_cast<int>(seq.terms.size()) - 1;
	for (int lvl = 1; lvl <= depth + 1; ++lvl) {
		const Entourage &term = seq.terms[lvl - 1];
		double threshold = std::ldexp(1.0, -lvl);
		for (int i = 0; i < n; ++i)
			for (int j = i + 1; j < n; ++j)
				if (metric.at(i, j) < threshold && !term.has(i, j)) {
					rep.ok = false;
					rep.violating_level = lvl;
					rep.violating_pair = {i, j};
					return rep;
				}
	}
	return rep;
}

std::optional<int> perspectivity_sigma(const CayleyBall &ball,
                                       const Entourage &u) {
	int sigma = 0;
	for (auto [a, b] : ball.graph.edges()) {
		if (u.has(a, b))
			continue;
		int outer = std::max(ball.norm[a], ball.norm[b]);
		if (outer >= ball.radius)
			return std::nullopt; // big edge touches the outer sphere
		sigma = std::max(sigma, outer);
	}
	return sigma;
}

ComparisonConstants comparison_constants(int rho, int sigma) {
	if (rho < 1)
		throw input_error("comparison: rho must be >= 1");
	if (sigma < 0)
		throw input_error("comparison: sigma must be >= 0");
	return {std::pow(2.0, -1.0 / rho),
	        std::pow(2.0, static_cast<double>(sigma) / rho)};
}

int translate_radius(const CayleyBall &ball,
                     const std::vector<std::string> &F) {
	int rho = 0;
	for (const auto &f : F) {
		int v = ball.vertex_of(ball.model->normalize(f));
		if (v < 0)
			throw input_error("comparison: F element outside the ball");
		rho = std::max(rho, ball.norm[v]);
	}
	return rho;
}

ComparisonReport verify_comparison(const CayleyBall &ball,
                                   const FrinkSequence &seq, double lambda,
                                   double C) {
	ComparisonReport rep;
	FloydConfig cfg{lambda, ball.basepoint};
	auto domain = ball.inner_vertices();
	for (size_t a = 0; a < domain.size(); ++a) {
		auto frink = frink_metric_row(seq, domain[a]);
		auto floyd = floyd_dist_from(ball.graph, cfg, domain[a]);
		for (size_t b = a + 1; b < domain.size(); ++b) {
			int x = domain[a], y = domain[b];
			++rep.pairs;
			double ratio = frink[y] / floyd[y];
			rep.max_ratio = std::max(rep.max_ratio, ratio);
			if (frink[y] > C * floyd[y] * (1.0 + 1e-12) &&
			    rep.violating_pair.first < 0)
				rep.violating_pair = {x, y};
		}
	}
	rep.ok = rep.violating_pair.first < 0;
	return rep;
}

} // namespace ggt
