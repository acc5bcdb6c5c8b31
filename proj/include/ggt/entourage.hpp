#pragma once

#include "ggt/common.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ggt {

/// Reflexive symmetric set of vertex pairs over a fixed finite vertex set,
/// stored as a dense bit matrix. The diagonal is always present.
class Entourage {
  public:
	Entourage() = default;
	explicit Entourage(int vertex_count);

	static Entourage diagonal(int vertex_count) { return Entourage(vertex_count); }
	static Entourage full(int vertex_count);

	int vertex_count() const { return n_; }
	bool has(int i, int j) const;
	void add(int i, int j);
	void remove(int i, int j); // no-op on the diagonal

	std::size_t pair_count() const; // off-diagonal unordered pairs
	std::vector<std::pair<int, int>> pairs() const;

	Entourage intersect(const Entourage &other) const;
	Entourage unite(const Entourage &other) const;
	bool subset_of(const Entourage &other) const;
	bool operator==(const Entourage &other) const;

	/// Pairs joined by a chain of <= n steps (delta_u distance <= n).
	Entourage power(int n) const;

	/// Like power, but chains may only pass through allowed vertices
	/// (endpoints must be allowed too).
	Entourage power_within(int n, const std::vector<char> &allowed) const;

	/// A chain of <= n steps from x to y through allowed vertices, if any.
	std::optional<std::vector<int>> chain(int x, int y, int n,
	                                      const std::vector<char> &allowed) const;

	/// Image under a partial vertex map; pairs with an unmapped endpoint drop.
	Entourage map_through(const std::vector<int> &vertex_map) const;

	const std::vector<std::uint64_t> &row_bits(int i) const;
	int words_per_row() const { return wpr_; }

  private:
	int n_ = 0;
	int wpr_ = 0;
	std::vector<std::uint64_t> bits_; // n_ rows of wpr_ words
	std::uint64_t *row(int i) { return bits_.data() + static_cast<size_t>(i) * wpr_; }
	const std::uint64_t *row(int i) const {
		return bits_.data() + static_cast<size_t>(i) * wpr_;
	}
	Entourage compose(const Entourage &other) const; // boolean product
	mutable std::vector<std::uint64_t> row_copy_;
};

/// True iff every pair of m lies in u (m is a clique of u union diagonal).
bool is_small(const Entourage &u, const std::vector<int> &m);

struct UnlinkedResult {
	bool linked = false;
	// When unlinked: in_a[v] != 0 means v goes to the u-small part A;
	// the complement is the v-small part B.
	std::vector<char> in_a;
};

/// Decides whether the vertex set splits into a u-small and a v-small part.
/// Encoded as 2-SAT over one boolean per vertex.
UnlinkedResult unlinked(const Entourage &u, const Entourage &v);

/// Small 2-SAT solver (implication graph + Tarjan SCC).
class TwoSat {
  public:
	explicit TwoSat(int variables);
	// Literal encoding: 2*v for x_v, 2*v+1 for not x_v.
	static int lit(int var, bool positive) { return 2 * var + (positive ? 0 : 1); }
	void add_clause(int l1, int l2);
	std::optional<std::vector<char>> solve(); // assignment or nullopt

  private:
	int vars_;
	std::vector<std::vector<int>> imp_;
};

} // namespace ggt
