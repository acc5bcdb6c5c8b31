#include "ggt/entourage.hpp"

#include <algorithm>
#include <deque>

namespace ggt {

namespace {
void check_vertex(int v, int n, const char *what) {
	if (v < 0 || v >= n)
		throw input_error(std::string(what) + ": vertex out of range");
}
} // namespace

Entourage::Entourage(int vertex_count) : n_(vertex_count) {
	if (n_ < 0)
		throw input_error("entourage: negative vertex count");
	wpr_ = (n_ + 63) / 64;
	bits_.assign(static_cast<size_t>(n_) * wpr_, 0);
	for (int i = 0; i < n_; ++i)
		row(i)[i >> 6] |= 1ULL << (i & 63);
}

Entourage Entourage::full(int vertex_count) {
	Entourage e(vertex_count);
	for (int i = 0; i < vertex_count; ++i) {
		auto *r = e.row(i);
		for (int w = 0; w < e.wpr_; ++w)
			r[w] = ~0ULL;
		// clear bits past n_
		int tail = vertex_count & 63;
		if (tail && e.wpr_ > 0)
			r[e.wpr_ - 1] &= (1ULL << tail) - 1;
	}
	return e;
}

bool Entourage::has(int i, int j) const {
	check_vertex(i, n_, "entourage");
	check_vertex(j, n_, "entourage");
	return (row(i)[j >> 6] >> (j & 63)) & 1ULL;
}

void Entourage::add(int i, int j) {
	check_vertex(i, n_, "entourage");
	check_vertex(j, n_, "entourage");
	row(i)[j >> 6] |= 1ULL << (j & 63);
	row(j)[i >> 6] |= 1ULL << (i & 63);
}

void Entourage::remove(int i, int j) {
	check_vertex(i, n_, "entourage");
	check_vertex(j, n_, "entourage");
	if (i == j)
		return;
	row(i)[j >> 6] &= ~(1ULL << (j & 63));
	row(j)[i >> 6] &= ~(1ULL << (i & 63));
}

std::size_t Entourage::pair_count() const {
	std::size_t total = 0;
	for (const auto w : bits_)
		total += static_cast<std::size_t>(__builtin_popcountll(w));
	return (total - n_) / 2;
}

std::vector<std::pair<int, int>> Entourage::pairs() const {
	std::vector<std::pair<int, int>> out;
	for (int i = 0; i < n_; ++i)
		for (int j = i + 1; j < n_; ++j)
			if (has(i, j))
				out.push_back({i, j});
	return out;
}

Entourage Entourage::intersect(const Entourage &other) const {
	if (other.n_ != n_)
		throw input_error("entourage: vertex-set mismatch in intersect");
	Entourage out(n_);
	for (size_t k = 0; k < bits_.size(); ++k)
		out.bits_[k] |= bits_[k] & other.bits_[k];
	return out;
}

Entourage Entourage::unite(const Entourage &other) const {
	if (other.n_ != n_)
		throw input_error("entourage: vertex-set mismatch in unite");
	Entourage out(n_);
	for (size_t k = 0; k < bits_.size(); ++k)
		out.bits_[k] = bits_[k] | other.bits_[k];
	return out;
}

bool Entourage::subset_of(const Entourage &other) const {
	if (other.n_ != n_)
		throw input_error("entourage: vertex-set mismatch in subset_of");
	for (size_t k = 0; k < bits_.size(); ++k)
		if (bits_[k] & ~other.bits_[k])
			return false;
	return true;
}

bool Entourage::operator==(const Entourage &other) const {
	return n_ == other.n_ && bits_ == other.bits_;
}

Entourage Entourage::compose(const Entourage &other) const {
	Entourage out(n_);
	for (int i = 0; i < n_; ++i) {
		auto *dst = out.row(i);
		const auto *src = row(i);
		for (int w = 0; w < wpr_; ++w) {
			std::uint64_t block = src[w];
			while (block) {
				int j = w * 64 + __builtin_ctzll(block);
				block &= block - 1;
				const auto *r = other.row(j);
				for (int k = 0; k < wpr_; ++k)
					dst[k] |= r[k];
			}
		}
	}
	return out;
}

Entourage Entourage::power(int n) const {
	if (n < 1)
		throw input_error("entourage: power must be >= 1");
	Entourage acc = *this;
	for (int k = 1; k < n; ++k)
		acc = acc.compose(*this);
	return acc;
}

Entourage Entourage::power_within(int n, const std::vector<char> &allowed) const {
	if (n < 1)
		throw input_error("entourage: power must be >= 1");
	if (static_cast<int>(allowed.size()) != n_)
		throw input_error("entourage: allowed mask size mismatch");
	Entourage out(n_);
	std::vector<int> frontier, next;
	std::vector<int> depth(n_);
	for (int s = 0; s < n_; ++s) {
		if (!allowed[s])
			continue;
		std::fill(depth.begin(), depth.end(), -1);
		depth[s] = 0;
		frontier = {s};
		for (int step = 0; step < n && !frontier.empty(); ++step) {
			next.clear();
			for (int v : frontier) {
				const auto *r = row(v);
				for (int w = 0; w < wpr_; ++w) {
					std::uint64_t block = r[w];
					while (block) {
						int j = w * 64 + __builtin_ctzll(block);
						block &= block - 1;
						if (allowed[j] && depth[j] < 0) {
							depth[j] = step + 1;
							next.push_back(j);
							out.add(s, j);
						}
					}
				}
			}
			frontier.swap(next);
		}
	}
	return out;
}

std::optional<std::vector<int>> Entourage::chain(
    int x, int y, int n, const std::vector<char> &allowed) const {
	check_vertex(x, n_, "chain");
	check_vertex(y, n_, "chain");
	if (!allowed[x] || !allowed[y])
		return std::nullopt;
	std::vector<int> parent(n_, -2);
	parent[x] = -1;
	std::deque<std::pair<int, int>> q{{x, 0}};
	while (!q.empty()) {
		auto [v, d] = q.front();
		q.pop_front();
		if (v == y) {
			std::vector<int> path;
			for (int cur = y; cur != -1; cur = parent[cur])
				path.push_back(cur);
			std::reverse(path.begin(), path.end());
			return path;
		}
		if (d == n)
			continue;
		for (int j = 0; j < n_; ++j)
			if (allowed[j] && parent[j] == -2 && has(v, j)) {
				parent[j] = v;
				q.push_back({j, d + 1});
			}
	}
	return std::nullopt;
}

Entourage Entourage::map_through(const std::vector<int> &vertex_map) const {
	if (static_cast<int>(vertex_map.size()) != n_)
		throw input_error("entourage: vertex map size mismatch");
	Entourage out(n_);
	for (int i = 0; i < n_; ++i) {
		if (vertex_map[i] < 0)
			continue;
		for (int j = i; j < n_; ++j)
			if (vertex_map[j] >= 0 && has(i, j))
				out.add(vertex_map[i], vertex_map[j]);
	}
	return out;
}

const std::vector<std::uint64_t> &Entourage::row_bits(int i) const {
	check_vertex(i, n_, "entourage");
	row_copy_.assign(row(i), row(i) + wpr_);
	return row_copy_;
}

bool is_small(const Entourage &u, const std::vector<int> &m) {
	for (size_t a = 0; a < m.size(); ++a)
		for (size_t b = a + 1; b < m.size(); ++b)
			if (!u.has(m[a], m[b]))
				return false;
	return true;
}

TwoSat::TwoSat(int variables) : vars_(variables), imp_(2 * variables) {}

void TwoSat::add_clause(int l1, int l2) {
	// (l1 or l2): not l1 -> l2, not l2 -> l1
	imp_[l1 ^ 1].push_back(l2);
	imp_[l2 ^ 1].push_back(l1);
}

std::optional<std::vector<char>> TwoSat::solve() {
	int n = 2 * vars_;
	// Iterative Tarjan SCC.
	std::vector<int> low(n, -1), num(n, -1), comp(n, -1);
	std::vector<int> stk, call, iter;
	std::vector<char> on_stack(n, 0);
	int counter = 0, comps = 0;
	for (int root = 0; root < n; ++root) {
		if (num[root] >= 0)
			continue;
		call = {root};
		iter = {0};
		while (!call.empty()) {
			int v = call.back();
			if (iter.back() == 0) {
				num[v] = low[v] = counter++;
				stk.push_back(v);
				on_stack[v] = 1;
			}
			if (iter.back() < static_cast<int>(imp_[v].size())) {
				int w = imp_[v][iter.back()++];
				if (num[w] < 0) {
					call.push_back(w);
					iter.push_back(0);
				} else if (on_stack[w]) {
					low[v] = std::min(low[v], num[w]);
				}
			} else {
				if (low[v] == num[v]) {
					while (true) {
						int w = stk.back();
						stk.pop_back();
						on_stack[w] = 0;
						comp[w] = comps;
						if (w == v)
							break;
					}
					++comps;
				}
				call.pop_back();
				iter.pop_back();
				if (!call.empty())
					low[call.back()] = std::min(low[call.back()], low[v]);
			}
		}
	}
	std::vector<char> assign(vars_);
	for (int v = 0; v < vars_; ++v) {
		if (comp[2 * v] == comp[2 * v + 1])
			return std::nullopt;
		// Tarjan numbers components in reverse topological order.
		assign[v] = comp[2 * v] < comp[2 * v + 1];
	}
	return assign;
}

UnlinkedResult unlinked(const Entourage &u, const Entourage &v) {
	if (u.vertex_count() != v.vertex_count())
		throw input_error("unlinked: vertex-set mismatch");
	int n = u.vertex_count();
	TwoSat sat(n);
	// x_p true  <=> p in A (the u-small part).
	for (int p = 0; p < n; ++p)
		for (int q = p + 1; q < n; ++q) {
			if (!u.has(p, q))
				sat.add_clause(TwoSat::lit(p, false), TwoSat::lit(q, false));
			if (!v.has(p, q))
				sat.add_clause(TwoSat::lit(p, true), TwoSat::lit(q, true));
		}
	auto assign = sat.solve();
	UnlinkedResult out;
	if (!assign) {
		out.linked = true;
		return out;
	}
	out.in_a = *assign;
	return out;
}

} // namespace ggt
