#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggt/cayley.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

using namespace ggt;

namespace {

// Count distinct elements of word length <= radius by blunt enumeration of
// all generator strings (independent of the frontier BFS in build_ball).
std::size_t closure_count(const GroupModel &m, int radius) {
	auto gens = m.generators();
	std::set<std::string> seen{""};
	std::vector<std::string> layer{""};
	for (int k = 0; k < radius; ++k) {
		std::vector<std::string> next;
		for (const auto &w : layer)
			for (const auto &s : gens) {
				std::string nf = m.normalize(w + s);
				if (seen.insert(nf).second)
					next.push_back(nf);
			}
		layer = std::move(next);
	}
	return seen.size();
}

std::string random_word(const GroupModel &m, std::mt19937_64 &rng, int len) {
	auto gens = m.generators();
	std::string w;
	for (int i = 0; i < len; ++i)
		w += gens[rng() % gens.size()];
	return w;
}

void check_group_laws(const GroupModel &m, std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	for (int trial = 0; trial < 50; ++trial) {
		std::string g = m.normalize(random_word(m, rng, 1 + rng() % 6));
		std::string h = m.normalize(random_word(m, rng, 1 + rng() % 6));
		std::string k = m.normalize(random_word(m, rng, 1 + rng() % 6));
		CHECK(m.normalize(g) == g); // idempotent
		CHECK(m.multiply(g, "") == g);
		CHECK(m.multiply("", g) == g);
		CHECK(m.multiply(g, m.inverse(g)) == "");
		CHECK(m.inverse(m.inverse(g)) == g);
		CHECK(m.multiply(m.multiply(g, h), k) == m.multiply(g, m.multiply(h, k)));
	}
}

} // namespace

TEST_CASE("free group normal forms") {
	auto m = GroupModel::parse("free:2");
	CHECK(m->normalize("abAa") == "ab"); // aba^{-1} * a
	CHECK(m->normalize("aA") == "");
	CHECK(m->inverse("ab") == "BA");
	CHECK(m->generators().size() == 4);
	CHECK_THROWS_AS(m->normalize("xyz"), input_error);
	check_group_laws(*m, 1);
}

TEST_CASE("cyclic group") {
	auto m = GroupModel::parse("cyclic:5");
	CHECK(m->multiply("aaa", "aaaa") == "aa"); // 3 + 4 = 2 mod 5
	CHECK(m->normalize("A") == "aaaa");
	check_group_laws(*m, 2);
}

TEST_CASE("free abelian group") {
	auto m = GroupModel::parse("zn:2");
	// (1,2) * (3,-1) = (4,1)
	CHECK(m->multiply("abb", "aaaB") == "aaaab");
	CHECK(m->normalize("ba") == m->normalize("ab"));
	check_group_laws(*m, 3);
}

TEST_CASE("free product of cyclics") {
	auto m = GroupModel::parse("product:cyclic:2,cyclic:3");
	CHECK(m->normalize("aa") == "");
	CHECK(m->normalize("bbb") == "");
	CHECK(m->normalize("bb") == m->normalize("B"));
	CHECK(m->normalize("abab") != ""); // infinite dihedral-like, no collapse
	check_group_laws(*m, 4);
}

TEST_CASE("group spec parsing") {
	CHECK_THROWS_AS(GroupModel::parse("nope:3"), input_error);
	CHECK_THROWS_AS(GroupModel::parse(""), input_error);
	CHECK_THROWS_AS(GroupModel::parse("free:0"), input_error);
	CHECK_THROWS_AS(GroupModel::parse("surface:3"), input_error);
	CHECK(GroupModel::parse("product:cyclic:2,cyclic:3")->name() ==
	      "product:cyclic:2,cyclic:3");
}

TEST_CASE("ball sizes match enumeration oracles") {
	CHECK(build_ball(GroupModel::parse("zn:1"), 3).graph.vertex_count() == 7);
	CHECK(build_ball(GroupModel::parse("zn:1"), 3).graph.edge_count() == 6);
	CHECK(build_ball(GroupModel::parse("free:2"), 2).graph.vertex_count() == 17);
	CHECK(build_ball(GroupModel::parse("zn:2"), 2).graph.vertex_count() == 13);

	for (const char *spec : {"free:2", "zn:2", "cyclic:6",
	                         "product:cyclic:2,cyclic:3"}) {
		auto m = GroupModel::parse(spec);
		for (int radius = 1; radius <= 3; ++radius) {
			CAPTURE(spec);
			CHECK(build_ball(m, radius).graph.vertex_count() ==
			      closure_count(*m, radius));
		}
	}
}

TEST_CASE("ball structure invariants") {
	auto ball = build_ball(GroupModel::parse("free:2"), 6);
	CHECK(ball.norm[ball.basepoint] == 0);
	CHECK(ball.inner_radius == 2);
	for (auto [a, b] : ball.graph.edges())
		CHECK(std::abs(ball.norm[a] - ball.norm[b]) <= 1);
	// Norms are BFS distances from the basepoint.
	auto d = bfs_distances(ball.graph, ball.basepoint);
	for (int v = 0; v < ball.graph.vertex_count(); ++v)
		CHECK(d[v] == ball.norm[v]);
}

TEST_CASE("vertex limit") {
	CHECK_THROWS_AS(build_ball(GroupModel::parse("free:2"), 9, 1000),
	                resource_error);
}

TEST_CASE("group action on the ball") {
	auto ball = build_ball(GroupModel::parse("free:2"), 2);
	int x = ball.vertex_of("A");
	REQUIRE(x >= 0);
	CHECK(act(ball, "a", x) == ball.basepoint);
	CHECK(act(ball, "", x) == x);

	auto line = build_ball(GroupModel::parse("zn:1"), 3);
	int edge_v = line.vertex_of("aaa");
	REQUIRE(edge_v >= 0);
	CHECK(!act(line, "a", edge_v).has_value()); // leaves the ball

	// Equivariance: translation by a generator preserves edges when defined.
	for (auto [a, b] : ball.graph.edges()) {
		auto ia = act(ball, "b", a), ib = act(ball, "b", b);
		if (ia && ib)
			CHECK(ball.graph.has_edge(*ia, *ib));
	}
}

TEST_CASE("pair exactness certificate") {
	auto ball = build_ball(GroupModel::parse("free:2"), 4);
	int x = ball.vertex_of("aa"), y = ball.vertex_of("AA");
	auto d = bfs_distances(ball.graph, x);
	CHECK(pair_exact(ball, x, y, d[y]));
	int sx = ball.vertex_of("aaaa"), sy = ball.vertex_of("AAAA");
	auto ds = bfs_distances(ball.graph, sx);
	CHECK(!pair_exact(ball, sx, sy, ds[sy]));
}

TEST_CASE("surface group word problem") {
	auto m = GroupModel::parse("surface:2");
	CHECK(m->generators().size() == 8);
	// The defining relator and all its cyclic conjugates collapse.
	std::string rel = "abABcdCD";
	for (int rot = 0; rot < 8; ++rot) {
		std::string r = rel.substr(rot) + rel.substr(0, rot);
		CAPTURE(rot);
		CHECK(m->normalize(r) == "");
		CHECK(m->normalize(m->inverse(r)) == "");
	}
	check_group_laws(*m, 5);
}

TEST_CASE("surface sphere sizes") {
	// Pieces of the relator have length 1, so words of length <= 4 are
	// geodesic: spheres 1..3 carry the free counts 8*7^{n-1}, and length-4
	// words are only identified in exact half-relator pairs. Such a pair
	// {w1, w2} is detected independently: in this small-cancellation group
	// the shortest nontrivial elements of the relator's normal closure are
	// exactly the 16 cyclic rotations of the relator and its inverse, so
	// w1 = w2 iff w1 * w2^{-1} freely reduces to one of them.
	auto free2 = GroupModel::parse("free:4"); // free reduction only
	std::string rel = "abABcdCD";
	std::set<std::string> rotations;
	for (int rot = 0; rot < 8; ++rot) {
		std::string r = rel.substr(rot) + rel.substr(0, rot);
		rotations.insert(r);
		rotations.insert(free2->inverse(r));
	}
	std::vector<std::string> words{""};
	for (int len = 0; len < 4; ++len) {
		std::vector<std::string> next;
		for (const auto &w : words)
			for (const auto &s : free2->generators())
				if (free2->normalize(w + s).size() == w.size() + 1)
					next.push_back(w + s);
		words = std::move(next);
	}
	REQUIRE(words.size() == 2744); // 8 * 7^3
	std::size_t merged_pairs = 0;
	std::set<std::string> touched;
	for (size_t i = 0; i < words.size(); ++i)
		for (size_t j = i + 1; j < words.size(); ++j)
			if (rotations.count(
			        free2->normalize(words[i] + free2->inverse(words[j])))) {
				++merged_pairs;
				// Pairs must form a matching for the count below to hold.
				CHECK(touched.insert(words[i]).second);
				CHECK(touched.insert(words[j]).second);
			}

	auto ball = build_ball(GroupModel::parse("surface:2"), 4);
	std::vector<std::size_t> spheres(5, 0);
	for (int v = 0; v < ball.graph.vertex_count(); ++v)
		++spheres[ball.norm[v]];
	CHECK(spheres[0] == 1);
	CHECK(spheres[1] == 8);
	CHECK(spheres[2] == 56);
	CHECK(spheres[3] == 392);
	CHECK(spheres[4] == 2744 - merged_pairs);
}

TEST_CASE("surface canonical forms respect half-relator identities") {
	auto m = GroupModel::parse("surface:2");
	std::string rel = "abABcdCD";
	for (int rot = 0; rot < 8; ++rot) {
		std::string r = rel.substr(rot) + rel.substr(0, rot);
		std::string half = r.substr(0, 4);
		std::string rest = m->inverse(r.substr(4));
		CAPTURE(rot);
		CHECK(m->normalize(half) == m->normalize(rest));
	}
}
