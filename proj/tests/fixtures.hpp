#pragma once

#include "ggt/graph.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace ggt::fixtures {

inline Graph path(int n) {
	std::vector<Edge> e;
	for (int i = 0; i + 1 < n; ++i)
		e.push_back({i, i + 1});
	return Graph(n, std::move(e));
}

inline Graph cycle(int n) {
	std::vector<Edge> e;
	for (int i = 0; i < n; ++i)
		e.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
	return Graph(n, std::move(e));
}

inline Graph grid(int w, int h) {
	auto id = [w](int x, int y) { return y * w + x; };
	std::vector<Edge> e;
	for (int y = 0; y < h; ++y)
		for (int x = 0; x < w; ++x) {
			if (x + 1 < w)
				e.push_back({id(x, y), id(x + 1, y)});
			if (y + 1 < h)
				e.push_back({id(x, y), id(x, y + 1)});
		}
	return Graph(w * h, std::move(e));
}

inline Graph complete(int n) {
	std::vector<Edge> e;
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			e.push_back({i, j});
	return Graph(n, std::move(e));
}

// K_{2,n}: vertices 0,1 on one side, 2..n+1 on the other.
inline Graph complete_bipartite_2(int n) {
	std::vector<Edge> e;
	for (int j = 0; j < n; ++j) {
		e.push_back({0, 2 + j});
		e.push_back({1, 2 + j});
	}
	return Graph(n + 2, std::move(e));
}

inline Graph binary_tree(int depth) {
	std::vector<Edge> e;
	int n = (1 << (depth + 1)) - 1;
	for (int v = 1; v < n; ++v)
		e.push_back({(v - 1) / 2, v});
	return Graph(n, std::move(e));
}

inline Graph petersen() {
	std::vector<Edge> e;
	for (int i = 0; i < 5; ++i) {
		e.push_back({std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)});
		e.push_back({i, i + 5});
		e.push_back({std::min(5 + i, 5 + (i + 2) % 5),
		             std::max(5 + i, 5 + (i + 2) % 5)});
	}
	return Graph(10, std::move(e));
}

} // namespace ggt::fixtures
