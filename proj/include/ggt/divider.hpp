#pragma once

#include "ggt/cayley.hpp"
#include "ggt/entourage.hpp"
#include "ggt/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ggt {

/// An entourage together with the finite symmetric element set F and the
/// verified power certificate (intersection of F-translates, m-th power,
/// contained in u on the verified domain).
struct Divider {
	Entourage u;
	std::vector<std::string> F; // normal forms; symmetric, contains ""
	int certified_power = 0;
	std::vector<char> domain; // vertices where all F-translates are defined
};

struct DividerViolation {
	std::vector<int> chain; // vertices of the offending power chain
};

struct DividerCheck {
	bool certified = false;
	int power = 0;
	int domain_size = 0;
	std::size_t pairs_checked = 0;
	std::optional<DividerViolation> violation;
};

/// Partial left-translation tables for the ball: for each f in F,
/// map[x] = vertex of f^{-1} x (or -1 outside the ball).
std::vector<std::vector<int>> inverse_translation_maps(
    const CayleyBall &ball, const std::vector<std::string> &F);

/// The intersection cap(F{u}) on the ball, together with the vertex domain
/// on which every translate is defined.
Entourage translate_intersection(const CayleyBall &ball, const Entourage &u,
                                 const std::vector<std::string> &F,
                                 std::vector<char> &domain_out);

/// Checks (cap F{u})^m subset u with chains confined to the verified
/// domain intersected with the inner ball. Throws resource_error when the
/// verified domain is empty.
DividerCheck validate_divider(const CayleyBall &ball, const Entourage &u,
                              const std::vector<std::string> &F, int m);

/// Elements of the F-generated subgroup of F-length <= n, as normal forms.
std::vector<std::string> element_ball(const CayleyBall &ball,
                                      const std::vector<std::string> &F, int n);

/// Frink sequence v_0 = S^2 M, v_n = cap(F^{n-1}{u}). Membership is
/// strict: a pair belongs to a term only when every translate is defined
/// inside the ball and lies in u, so the induced metric is an upper bound.
struct FrinkSequence {
	std::vector<Entourage> terms;
	std::vector<std::vector<char>> domains; // per-term definedness
};

struct FrinkNestingViolation {
	int level = 0;
	std::vector<int> chain;
};

/// Builds the sequence and verifies v_{n+1}^3 subset v_n on each term's
/// domain; a violation reports the level and chain (boundary truncation).
FrinkSequence frink_sequence_from_divider(
    const CayleyBall &ball, const Divider &divider, int depth,
    std::optional<FrinkNestingViolation> *violation_out = nullptr);

/// Shortest-path metric over the complete graph with pair weight
/// min{2^{-n} : pair in v_n} (1 by default from v_0).
DistanceMatrix frink_metric(const FrinkSequence &seq);
std::vector<double> frink_metric_row(const FrinkSequence &seq, int source);

struct FrinkLemmaReport {
	bool ok = true;
	int violating_level = -1;
	std::pair<int, int> violating_pair{-1, -1};
};

/// Asserts delta^{-1}[0, 2^{-n}) subset v_{n-1} for every level.
FrinkLemmaReport verify_frink_lemma(const FrinkSequence &seq,
                                    const DistanceMatrix &metric);

/// Least sigma with every ball edge outside u inside B_sigma; nullopt when
/// an edge outside u touches the outer sphere (finite non-perspectivity proxy).
std::optional<int> perspectivity_sigma(const CayleyBall &ball,
                                       const Entourage &u);

struct ComparisonConstants {
	double lambda = 0.5;
	double C = 1.0;
};

/// lambda = 2^{-1/rho}, C = 2^{sigma/rho}.
ComparisonConstants comparison_constants(int rho, int sigma);

/// Least n with F{v} inside B_n (max word norm over F).
int translate_radius(const CayleyBall &ball, const std::vector<std::string> &F);

struct ComparisonReport {
	bool ok = true;
	double max_ratio = 0.0;
	std::size_t pairs = 0;
	std::pair<int, int> violating_pair{-1, -1};
};

/// Checks delta_{u,F} <= C * delta_{v,lambda} over inner-ball pairs.
ComparisonReport verify_comparison(const CayleyBall &ball,
                                   const FrinkSequence &seq, double lambda,
                                   double C);

} // namespace ggt
