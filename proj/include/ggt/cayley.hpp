#pragma once

#include "ggt/graph.hpp"

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ggt {

/// A group with an exact word-problem solver. Elements are canonical
/// normal-form strings over a generator alphabet; the inverse of letter
/// 'a' is written 'A'. The identity is the empty word.
class GroupModel {
  public:
	virtual ~GroupModel() = default;

	virtual std::string name() const = 0;
	/// Symmetric generating set (each generator together with its inverse).
	virtual std::vector<std::string> generators() const = 0;
	/// Canonical normal form of an arbitrary word; throws input_error on
	/// letters outside the alphabet.
	virtual std::string normalize(const std::string &word) const = 0;

	std::string multiply(const std::string &g, const std::string &h) const {
		return normalize(g + h);
	}
	std::string inverse(const std::string &g) const;

	/// Spec strings: "free:k", "zn:n", "cyclic:m",
	/// "product:cyclic:2,cyclic:3", "surface:2".
	static std::shared_ptr<const GroupModel> parse(const std::string &spec);
};

/// Finite ball of a Cayley graph: induced subgraph on all elements of
/// word length <= radius. Vertex 0 is the identity. Word-length norms
/// come from the construction BFS. Ball-graph distances agree with the
/// group distances for any pair whose geodesics provably stay inside
/// the ball; inner_radius = radius/3 is a blanket such bound.
struct CayleyBall {
	std::shared_ptr<const GroupModel> model;
	Graph graph;
	std::vector<int> norm;
	std::vector<std::string> words; // canonical forms, index-aligned
	std::unordered_map<std::string, int> index;
	int radius = 0;
	int inner_radius = 0;
	int basepoint = 0;

	int vertex_of(const std::string &normal_form) const; // -1 if outside
	std::vector<int> inner_vertices() const;             // norm <= inner_radius
	std::vector<int> sphere_vertices() const;            // norm == radius
};

CayleyBall build_ball(std::shared_ptr<const GroupModel> model, int radius,
                      std::size_t vertex_limit = 200000);

/// Left translation g.x inside the ball; nullopt when the image leaves it.
std::optional<int> act(const CayleyBall &ball, const std::string &g, int x);

/// True when every group geodesic between x and y is certified to lie in
/// the ball, so ball distances and geodesics between x,y are exact.
/// Uses the bound: max norm along a geodesic <= (|x|+|y|+d(x,y))/2.
bool pair_exact(const CayleyBall &ball, int x, int y, int ball_dist);

} // namespace ggt
