#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "ggt/cayley.hpp"
#include "ggt/floyd.hpp"
#include "ggt/io.hpp"

#include <cstdio>
#include <random>

using namespace ggt;
namespace fx = ggt::fixtures;

TEST_CASE("graph documents round trip") {
	std::vector<Graph> corpus{fx::path(1), fx::path(5), fx::cycle(6),
	                          fx::grid(3, 4), fx::petersen()};
	for (const auto &g : corpus) {
		Graph back = graph_from_json(graph_to_json(g));
		CHECK(back.vertex_count() == g.vertex_count());
		CHECK(back.edges() == g.edges());
	}

	// Labels survive the round trip.
	Graph labelled(2, {{0, 1}}, {"x", "y"});
	Graph back = graph_from_json(graph_to_json(labelled));
	CHECK(back.label(0) == "x");
	CHECK(back.label(1) == "y");

	// Norm annotations travel in the same document.
	std::string doc = graph_to_json(fx::path(3), {0, 1, 2});
	CHECK(norms_from_json(doc) == std::vector<int>{0, 1, 2});
	CHECK(norms_from_json(graph_to_json(fx::path(3))).empty());
	CHECK_THROWS_AS(graph_to_json(fx::path(3), {0, 1}), input_error);
}

TEST_CASE("entourage documents round trip") {
	std::mt19937_64 rng(7);
	for (int trial = 0; trial < 20; ++trial) {
		int n = 1 + static_cast<int>(rng() % 12);
		Entourage u(n);
		for (int i = 0; i < n; ++i)
			for (int j = i + 1; j < n; ++j)
				if (rng() % 3 == 0)
					u.add(i, j);
		CHECK(entourage_from_json(entourage_to_json(u)) == u);
	}
}

TEST_CASE("malformed documents are rejected") {
	CHECK_THROWS_AS(graph_from_json("not json"), input_error);
	CHECK_THROWS_AS(graph_from_json("[1,2]"), input_error);
	CHECK_THROWS_AS(graph_from_json("{\"format\":\"ggt-graph-2\"}"),
	                input_error);
	CHECK_THROWS_AS(graph_from_json("{\"format\":\"ggt-graph-1\"}"),
	                input_error); // no vertex count
	CHECK_THROWS_AS(
	    graph_from_json(
	        "{\"format\":\"ggt-graph-1\",\"vertices\":3,\"edges\":[[0]]}"),
	    input_error);
	CHECK_THROWS_AS(
	    graph_from_json(
	        "{\"format\":\"ggt-graph-1\",\"vertices\":2,\"edges\":[[0,5]]}"),
	    input_error); // out-of-range endpoint caught by Graph validation

	CHECK_THROWS_AS(entourage_from_json("{}"), input_error);
	CHECK_THROWS_AS(
	    entourage_from_json(
	        "{\"format\":\"ggt-entourage-1\",\"vertices\":2,\"pairs\":[[0,7]]}"),
	    input_error);
	// Graph and entourage formats are not interchangeable.
	CHECK_THROWS_AS(entourage_from_json(graph_to_json(fx::path(2))),
	                input_error);
	CHECK_THROWS_AS(graph_from_json(entourage_to_json(Entourage(2))),
	                input_error);
}

TEST_CASE("ball documents carry group metadata") {
	auto ball = build_ball(GroupModel::parse("free:2"), 3);
	std::string doc = ball_to_json(ball);
	Graph g = graph_from_json(doc);
	CHECK(g.vertex_count() == ball.graph.vertex_count());
	CHECK(norms_from_json(doc) == ball.norm);
	CHECK(doc.find("\"group\": \"free:2\"") != std::string::npos);
	CHECK(doc.find("\"radius\": 3") != std::string::npos);
	CHECK(doc.find("\"basepoint\": 0") != std::string::npos);
	// Vertex labels are the group words.
	CHECK(g.label(ball.vertex_of("ab")) == "ab");
}

TEST_CASE("dot output") {
	Graph p = fx::path(3);
	std::string dot = graph_to_dot(p);
	CHECK(dot.find("graph ggt {") == 0);
	CHECK(dot.find("n0 -- n1;") != std::string::npos);
	CHECK(dot.find("n1 -- n2;") != std::string::npos);

	EdgeWeights w{0.5, 0.25};
	std::string weighted = graph_to_dot(p, w);
	CHECK(weighted.find("[label=\"0.5\"]") != std::string::npos);
	CHECK(weighted.find("[label=\"0.25\"]") != std::string::npos);
	CHECK_THROWS_AS(graph_to_dot(p, EdgeWeights{0.5}), input_error);

	Graph labelled(2, {{0, 1}}, {"e", "a"});
	CHECK(graph_to_dot(labelled).find("[label=\"a\"]") != std::string::npos);
}

TEST_CASE("serialization is deterministic") {
	auto ball = build_ball(GroupModel::parse("surface:2"), 3);
	CHECK(ball_to_json(ball) ==
	      ball_to_json(build_ball(GroupModel::parse("surface:2"), 3)));
	std::string doc = graph_to_json(ball.graph, ball.norm);
	Graph back = graph_from_json(doc);
	CHECK(graph_to_json(back, norms_from_json(doc)) == doc);
}

TEST_CASE("file round trip and error paths") {
	std::string path = "/tmp/ggt_io_test.json";
	std::string doc = graph_to_json(fx::cycle(5));
	write_file(path, doc);
	CHECK(read_file(path) == doc);
	std::remove(path.c_str());
	CHECK_THROWS_AS(read_file("/nonexistent/ggt"), input_error);
	CHECK_THROWS_AS(write_file("/nonexistent/dir/ggt", "x"), input_error);
}
