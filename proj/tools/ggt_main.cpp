#include "ggt/cayley.hpp"
#include "ggt/divider.hpp"
#include "ggt/entourage.hpp"
#include "ggt/floyd.hpp"
#include "ggt/graph.hpp"
#include "ggt/io.hpp"
#include "ggt/karlsson.hpp"
#include "ggt/visibility.hpp"

#include <CLI11.hpp>

#include <array>
#include <cctype>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace ggt;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;  // property-check failure, witness on stdout
constexpr int kExitError = 2; // input or resource error

std::size_t vertex_limit_from_env() {
	if (const char *s = std::getenv("GGT_MAX_VERTICES"))
		return static_cast<std::size_t>(std::strtoull(s, nullptr, 10));
	return 200000;
}

CayleyBall make_ball(const std::string &group, int radius) {
	return build_ball(GroupModel::parse(group), radius, vertex_limit_from_env());
}

/// Vertex specifier: a word in the generators, or a (possibly negative)
/// integer n meaning the n-th power of the first generator.
int resolve_vertex(const CayleyBall &ball, const std::string &token) {
	bool numeric = !token.empty();
	for (size_t i = 0; i < token.size(); ++i)
		if (!std::isdigit(static_cast<unsigned char>(token[i])) &&
		    !(i == 0 && token[i] == '-'))
			numeric = false;
	std::string word;
	if (numeric && token != "-") {
		long k = std::strtol(token.c_str(), nullptr, 10);
		std::string gen = ball.model->generators().front();
		if (k < 0) {
			gen = ball.model->inverse(gen);
			k = -k;
		}
		for (long i = 0; i < k; ++i)
			word += gen;
	} else {
		word = token == "e" ? "" : token;
	}
	int v = ball.vertex_of(ball.model->normalize(word));
	if (v < 0)
		throw input_error("vertex outside the ball: " + token);
	return v;
}

std::pair<int, int> resolve_pair(const CayleyBall &ball,
                                 const std::string &spec) {
	auto comma = spec.find(',');
	if (comma == std::string::npos)
		throw input_error("pair must be written as x,y");
	return {resolve_vertex(ball, spec.substr(0, comma)),
	        resolve_vertex(ball, spec.substr(comma + 1))};
}

Graph load_graph(const std::string &group, const std::string &graph_file,
                 int radius, std::vector<int> *norm_out = nullptr) {
	if (!graph_file.empty()) {
		std::string text = read_file(graph_file);
		if (norm_out)
			*norm_out = norms_from_json(text);
		return graph_from_json(text);
	}
	if (group.empty())
		throw input_error("provide --group or --graph");
	CayleyBall ball = make_ball(group, radius);
	if (norm_out)
		*norm_out = ball.norm;
	return ball.graph;
}

void emit(const std::string &out_path, const std::string &content) {
	if (out_path.empty())
		std::cout << content;
	else
		write_file(out_path, content);
}

std::vector<Edge> basepoint_star(const CayleyBall &ball) {
	std::vector<Edge> E;
	for (auto [a, b] : ball.graph.edges())
		if (a == ball.basepoint || b == ball.basepoint)
			E.push_back({a, b});
	return E;
}

int run(int argc, char **argv) {
	CLI::App app{"Cayley-ball geometry toolkit"};
	app.require_subcommand(1);
	unsigned threads = std::thread::hardware_concurrency();
	app.add_option("--threads", threads,
	               "worker parallelism (results are thread-count independent)");

	std::string group, graph_file, out_path, pair_spec, edge_spec, format =
	                                                                   "json";
	int radius = 4, max_radius = 3, depth = 4, arc_len = 0;
	double lambda = 0.5, epsilon = 0.1;
	std::uint64_t seed = 1;
	std::size_t samples = 200, cap = 100000;
	bool s_generators = false;

	auto add_group = [&](CLI::App *cmd, bool with_graph = false) {
		cmd->add_option("--group", group, "group spec, e.g. free:2");
		cmd->add_option("--radius", radius, "ball radius");
		if (with_graph)
			cmd->add_option("--graph", graph_file, "graph document path");
	};

	auto *c_ball = app.add_subcommand("ball", "build and export a Cayley ball");
	add_group(c_ball);
	c_ball->add_option("--out", out_path, "output path (stdout by default)");

	auto *c_floyd = app.add_subcommand("floyd", "Floyd distance of a pair");
	add_group(c_floyd);
	c_floyd->add_option("--lambda", lambda);
	c_floyd->add_option("--pairs", pair_spec, "pair x,y")->required();

	auto *c_bdry = app.add_subcommand("boundary", "sphere clustering");
	add_group(c_bdry);
	c_bdry->add_option("--lambda", lambda);
	c_bdry->add_option("--epsilon", epsilon);

	auto *c_frink = app.add_subcommand(
	    "frink", "basepoint-star divider, Frink sequence and metric check");
	add_group(c_frink);
	c_frink->add_option("--depth", depth);

	auto *c_viz = app.add_subcommand("visibility", "visibility entourage");
	add_group(c_viz, true);
	c_viz->add_option("--edge", edge_spec, "edge a,b (vertex indices)")
	    ->required();
	c_viz->add_option("--out", out_path);

	auto *c_alt = app.add_subcommand("althyp", "alt-hyperbolicity witnesses");
	add_group(c_alt, true);
	c_alt->add_option("--max-radius", max_radius);
	c_alt->add_option("--seed", seed);

	auto *c_fine = app.add_subcommand("fine", "arc count between a pair");
	add_group(c_fine);
	c_fine->add_option("--pairs", pair_spec, "pair x,y")->required();
	c_fine->add_option("--length", arc_len, "arc length bound")->required();
	c_fine->add_option("--cap", cap);

	auto *c_delta = app.add_subcommand("delta", "hyperbolicity estimates");
	add_group(c_delta, true);
	c_delta->add_option("--samples", samples);
	c_delta->add_option("--seed", seed);

	auto *c_karl = app.add_subcommand("karlsson", "Floyd-length decay table");
	add_group(c_karl);
	c_karl->add_option("--lambda", lambda);

	auto *c_gkarl =
	    app.add_subcommand("gkarlsson", "generalized Karlsson search");
	add_group(c_gkarl);
	c_gkarl->add_flag("--s-generators", s_generators,
	                  "S = generators instead of S = {1}");

	auto *c_export = app.add_subcommand("export", "graph exporters");
	add_group(c_export, true);
	c_export->add_option("--lambda", lambda);
	c_export->add_option("--format", format)
	    ->check(CLI::IsMember({"json", "dot"}));
	c_export->add_option("--out", out_path);

	CLI11_PARSE(app, argc, argv);
	std::cout.precision(15);

	if (c_ball->parsed()) {
		emit(out_path, ball_to_json(make_ball(group, radius)));
		return kExitPass;
	}
	if (c_floyd->parsed()) {
		CayleyBall ball = make_ball(group, radius);
		auto [x, y] = resolve_pair(ball, pair_spec);
		std::cout << floyd_dist(ball.graph, {lambda, ball.basepoint}, x, y)
		          << "\n";
		return kExitPass;
	}
	if (c_bdry->parsed()) {
		CayleyBall ball = make_ball(group, radius);
		auto bc = boundary_clusters(ball, {lambda, ball.basepoint}, epsilon);
		std::cout << "clusters,sphere_vertices\n"
		          << bc.cluster_count << "," << bc.sphere_vertices.size()
		          << "\n";
		return kExitPass;
	}
	if (c_frink->parsed()) {
		CayleyBall ball = make_ball(group, radius);
		Divider d = divider_from_orbit_edges(ball, basepoint_star(ball));
		auto seq = frink_sequence_from_divider(ball, d, depth);
		auto lemma = verify_frink_lemma(seq, frink_metric(seq));
		std::cout << "depth,levels,lemma\n"
		          << depth << "," << seq.terms.size() << ","
		          << (lemma.ok ? "pass" : "fail") << "\n";
		if (!lemma.ok) {
			std::cout << "violation,level=" << lemma.violating_level
			          << ",pair=" << lemma.violating_pair.first << ","
			          << lemma.violating_pair.second << "\n";
			return kExitFail;
		}
		return kExitPass;
	}
	if (c_viz->parsed()) {
		Graph g = load_graph(group, graph_file, radius);
		auto comma = edge_spec.find(',');
		if (comma == std::string::npos)
			throw input_error("edge must be written as a,b");
		Edge e{std::stoi(edge_spec.substr(0, comma)),
		       std::stoi(edge_spec.substr(comma + 1))};
		emit(out_path, entourage_to_json(visibility_set(g, e)));
		return kExitPass;
	}
	if (c_alt->parsed()) {
		Graph g = load_graph(group, graph_file, radius);
		std::cout << "edge,r,status\n";
		bool all_ok = true;
		std::array<int, 3> bad{-1, -1, -1};
		for (auto e : g.edges()) {
			auto w = althyp_witness(g, e, max_radius, 200, seed);
			std::cout << e.first << "-" << e.second << "," << w.radius << ","
			          << (w.certified ? "certified" : "failed") << "\n";
			if (!w.certified) {
				all_ok = false;
				if (w.violation)
					bad = *w.violation;
			}
		}
		if (!all_ok) {
			std::cout << "counterexample," << bad[0] << "," << bad[2]
			          << ",via," << bad[1] << "\n";
			return kExitFail;
		}
		return kExitPass;
	}
	if (c_fine->parsed()) {
		CayleyBall ball = make_ball(group, radius);
		auto [x, y] = resolve_pair(ball, pair_spec);
		auto rep = fineness_report(ball, x, y, arc_len, cap);
		std::cout << "x,y,L,count,stable\n"
		          << x << "," << y << "," << arc_len << "," << rep.count << ","
		          << (rep.stable.value_or(false) ? "yes" : "no") << "\n";
		return kExitPass;
	}
	if (c_delta->parsed()) {
		Graph g = load_graph(group, graph_file, radius);
		auto thin = thin_triangle_delta(g, samples, seed);
		auto four = four_point_delta(g, samples, seed);
		std::cout << "estimator,delta,samples\n"
		          << "thin_triangle," << thin.delta << "," << thin.samples
		          << "\n"
		          << "four_point," << four.delta << "," << four.samples << "\n";
		return kExitPass;
	}
	if (c_karl->parsed()) {
		CayleyBall ball = make_ball(group, radius);
		auto table = karlsson_decay_scan(ball, lambda);
		std::cout << "h,max_floyd_length,geodesics\n";
		for (const auto &row : table.rows)
			std::cout << row.h << "," << row.max_floyd_length << ","
			          << row.geodesic_count << "\n";
		return kExitPass;
	}
	if (c_gkarl->parsed()) {
		CayleyBall ball = make_ball(group, radius);
		Divider d = divider_from_orbit_edges(ball, basepoint_star(ball));
		std::vector<std::string> S{""};
		if (s_generators)
			for (const auto &s : ball.model->generators())
				S.push_back(s);
		auto res = generalized_karlsson_search(ball, d, S);
		std::cout << "r,checked,status\n"
		          << res.r << "," << res.geodesics_checked << ","
		          << (res.ok ? (res.exhaustive ? "certified" : "sampled")
		                     : "failed")
		          << "\n";
		if (!res.ok) {
			std::cout << "counterexample";
			for (int v : res.counterexample)
				std::cout << "," << v;
			std::cout << "\n";
			return kExitFail;
		}
		return kExitPass;
	}
	if (c_export->parsed()) {
		std::vector<int> norm;
		Graph g = load_graph(group, graph_file, radius, &norm);
		if (format == "json")
			emit(out_path, graph_to_json(g, norm));
		else {
			int basepoint = 0;
			emit(out_path, graph_to_dot(g, floyd_weights(g, {lambda, basepoint})));
		}
		return kExitPass;
	}
	return kExitError;
}

} // namespace

int main(int argc, char **argv) {
	try {
		return run(argc, argv);
	} catch (const ggt::input_error &e) {
		std::cout << "error: input: " << e.what() << "\n";
		return kExitError;
	} catch (const ggt::resource_error &e) {
		std::cout << "error: resource: " << e.what() << "\n";
		return kExitError;
	} catch (const std::exception &e) {
		std::cout << "error: " << e.what() << "\n";
		return kExitError;
	}
}
