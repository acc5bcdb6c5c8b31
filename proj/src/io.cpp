#include "ggt/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace ggt {

using json = nlohmann::ordered_json;

namespace {

json parse(const std::string &text) {
	json j = json::parse(text, nullptr, false);
	if (j.is_discarded())
		throw input_error("io: malformed document");
	return j;
}

void expect_format(const json &j, const std::string &want) {
	if (!j.is_object() || !j.contains("format") || j["format"] != want)
		throw input_error("io: expected a \"" + want + "\" document");
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

} // namespace

std::string graph_to_json(const Graph &g, const std::vector<int> &norm) {
	json j;
	j["format"] = "ggt-graph-1";
	j["vertices"] = g.vertex_count();
	json edges = json::array();
	for (auto [a, b] : g.edges())
		edges.push_back(json::array({a, b}));
	j["edges"] = edges;
	if (!g.labels().empty())
		j["labels"] = g.labels();
	if (!norm.empty()) {
		if (static_cast<int>(norm.size()) != g.vertex_count())
			throw input_error("io: norm annotation size mismatch");
		j["norm"] = norm;
	}
	return dump(j);
}

Graph graph_from_json(const std::string &text) {
	json j = parse(text);
	expect_format(j, "ggt-graph-1");
	if (!j.contains("vertices") || !j["vertices"].is_number_integer())
		throw input_error("io: graph document lacks a vertex count");
	int n = j["vertices"].get<int>();
	std::vector<Edge> edges;
	for (const auto &e : j.value("edges", json::array())) {
		if (!e.is_array() || e.size() != 2)
			throw input_error("io: malformed edge entry");
		edges.push_back({e[0].get<int>(), e[1].get<int>()});
	}
	std::vector<std::string> labels;
	if (j.contains("labels"))
		labels = j["labels"].get<std::vector<std::string>>();
	return Graph(n, std::move(edges), std::move(labels));
}

std::vector<int> norms_from_json(const std::string &text) {
	json j = parse(text);
	expect_format(j, "ggt-graph-1");
	if (!j.contains("norm"))
		return {};
	return j["norm"].get<std::vector<int>>();
}

std::string ball_to_json(const CayleyBall &ball) {
	json j = parse(graph_to_json(ball.graph, ball.norm));
	j["group"] = ball.model->name();
	j["radius"] = ball.radius;
	j["inner_radius"] = ball.inner_radius;
	j["basepoint"] = ball.basepoint;
	return dump(j);
}

std::string entourage_to_json(const Entourage &u) {
	json j;
	j["format"] = "ggt-entourage-1";
	j["vertices"] = u.vertex_count();
	json pairs = json::array();
	for (auto [a, b] : u.pairs())
		pairs.push_back(json::array({a, b}));
	j["pairs"] = pairs;
	return dump(j);
}

Entourage entourage_from_json(const std::string &text) {
	json j = parse(text);
	expect_format(j, "ggt-entourage-1");
	int n = j["vertices"].get<int>();
	Entourage u(n);
	for (const auto &p : j.value("pairs", json::array())) {
		if (!p.is_array() || p.size() != 2)
			throw input_error("io: malformed pair entry");
		int a = p[0].get<int>(), b = p[1].get<int>();
		if (a < 0 || b < 0 || a >= n || b >= n)
			throw input_error("io: pair vertex out of range");
		u.add(a, b);
	}
	return u;
}

std::string graph_to_dot(const Graph &g, const EdgeWeights &weights) {
	if (!weights.empty())
		validate_weights(g, weights);
	std::ostringstream out;
	out << "graph ggt {\n";
	for (int v = 0; v < g.vertex_count(); ++v) {
		out << "  n" << v;
		if (!g.labels().empty())
			out << " [label=\"" << g.label(v) << "\"]";
		out << ";\n";
	}
	out.precision(12);
	for (int i = 0; i < g.edge_count(); ++i) {
		auto [a, b] = g.edges()[i];
		out << "  n" << a << " -- n" << b;
		if (!weights.empty())
			out << " [label=\"" << weights[i] << "\"]";
		out << ";\n";
	}
	out << "}\n";
	return out.str();
}

std::string read_file(const std::string &path) {
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw input_error("io: cannot read " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw input_error("io: cannot write " + path);
	out << content;
	if (!out)
		throw input_error("io: write failed for " + path);
}

} // namespace ggt
