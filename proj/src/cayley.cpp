#include "ggt/cayley.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <set>

namespace ggt {

namespace {

char flip_case(char c) {
	return std::isupper(static_cast<unsigned char>(c))
	           ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
	           : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

std::string word_inverse(const std::string &w) {
	std::string out;
	out.reserve(w.size());
	for (auto it = w.rbegin(); it != w.rend(); ++it)
		out.push_back(flip_case(*it));
	return out;
}

std::string free_reduce(const std::string &w) {
	std::string out;
	out.reserve(w.size());
	for (char c : w) {
		if (!out.empty() && out.back() == flip_case(c))
			out.pop_back();
		else
			out.push_back(c);
	}
	return out;
}

void check_alphabet(const std::string &w, int letters) {
	for (char c : w) {
		char base = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
		if (base < 'a' || base >= 'a' + letters)
			throw input_error(std::string("word: letter '") + c +
			                  "' outside alphabet");
	}
}

// Shortlex order with letter ranks a < A < b < B < ...
int letter_rank(char c) {
	char base = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
	return 2 * (base - 'a') +
	       (std::isupper(static_cast<unsigned char>(c)) ? 1 : 0);
}

bool shortlex_less(const std::string &a, const std::string &b) {
	if (a.size() != b.size())
		return a.size() < b.size();
	for (size_t i = 0; i < a.size(); ++i)
		if (a[i] != b[i])
			return letter_rank(a[i]) < letter_rank(b[i]);
	return false;
}

std::vector<std::string> symmetric_generators(int letters) {
	std::vector<std::string> gens;
	for (int i = 0; i < letters; ++i) {
		gens.push_back(std::string(1, static_cast<char>('a' + i)));
		gens.push_back(std::string(1, static_cast<char>('A' + i)));
	}
	return gens;
}

class FreeGroup final : public GroupModel {
  public:
	explicit FreeGroup(int rank) : rank_(rank) {
		if (rank < 1 || rank > 8)
			throw input_error("free: rank must be in 1..8");
	}
	std::string name() const override {
		return "free:" + std::to_string(rank_);
	}
	std::vector<std::string> generators() const override {
		return symmetric_generators(rank_);
	}
	std::string normalize(const std::string &w) const override {
		check_alphabet(w, rank_);
		return free_reduce(w);
	}

  private:
	int rank_;
};

class FreeAbelian final : public GroupModel {
  public:
	explicit FreeAbelian(int rank) : rank_(rank) {
		if (rank < 1 || rank > 8)
			throw input_error("zn: rank must be in 1..8");
	}
	std::string name() const override { return "zn:" + std::to_string(rank_); }
	std::vector<std::string> generators() const override {
		return symmetric_generators(rank_);
	}
	std::string normalize(const std::string &w) const override {
		check_alphabet(w, rank_);
		std::vector<long> exp(rank_, 0);
		for (char c : w) {
			int i = std::tolower(static_cast<unsigned char>(c)) - 'a';
			exp[i] += std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
		}
		std::string out;
		for (int i = 0; i < rank_; ++i) {
			char lo = static_cast<char>('a' + i);
			for (long k = 0; k < std::abs(exp[i]); ++k)
				out.push_back(exp[i] > 0 ? lo : flip_case(lo));
		}
		return out;
	}

  private:
	int rank_;
};

class Cyclic final : public GroupModel {
  public:
	explicit Cyclic(int order) : m_(order) {
		if (order < 2)
			throw input_error("cyclic: order must be >= 2");
	}
	std::string name() const override { return "cyclic:" + std::to_string(m_); }
	std::vector<std::string> generators() const override {
		return symmetric_generators(1);
	}
	std::string normalize(const std::string &w) const override {
		check_alphabet(w, 1);
		long e = 0;
		for (char c : w)
			e += std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
		e = ((e % m_) + m_) % m_;
		return std::string(static_cast<size_t>(e), 'a');
	}

  private:
	int m_;
};

class FreeProduct final : public GroupModel {
  public:
	explicit FreeProduct(std::vector<int> orders) : orders_(std::move(orders)) {
		if (orders_.size() < 2 || orders_.size() > 8)
			throw input_error("product: need 2..8 factors");
		for (int m : orders_)
			if (m < 2)
				throw input_error("product: factor order must be >= 2");
	}
	std::string name() const override {
		std::string s = "product:";
		for (size_t i = 0; i < orders_.size(); ++i) {
			if (i)
				s += ",";
			s += "cyclic:" + std::to_string(orders_[i]);
		}
		return s;
	}
	std::vector<std::string> generators() const override {
		return symmetric_generators(static_cast<int>(orders_.size()));
	}
	std::string normalize(const std::string &w) const override {
		check_alphabet(w, static_cast<int>(orders_.size()));
		std::vector<std::pair<int, long>> syll; // (factor, exponent mod m)
		for (char c : w) {
			int f = std::tolower(static_cast<unsigned char>(c)) - 'a';
			long e = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
			if (!syll.empty() && syll.back().first == f) {
				syll.back().second =
				    ((syll.back().second + e) % orders_[f] + orders_[f]) %
				    orders_[f];
				if (syll.back().second == 0)
					syll.pop_back();
			} else {
				syll.push_back({f, ((e % orders_[f]) + orders_[f]) % orders_[f]});
				if (syll.back().second == 0)
					syll.pop_back();
			}
		}
		std::string out;
		for (auto [f, e] : syll)
			out.append(static_cast<size_t>(e),
			           static_cast<char>('a' + f));
		return out;
	}

  private:
	std::vector<int> orders_;
};

// Genus-2 surface group <a,b,c,d | abABcdCD>. The relator satisfies
// C'(1/8), so Dehn's algorithm (replace any subword longer than half a
// cyclic conjugate of the relator by the shorter complement) decides the
// word problem. Normal form: the shortlex-least word in the closure of a
// Dehn-reduced word under half-for-half relator swaps. Experimental.
class SurfaceC16 final : public GroupModel {
  public:
	SurfaceC16() {
		const std::string r = "abABcdCD";
		for (const std::string &base : {r, word_inverse(r)})
			for (size_t i = 0; i < base.size(); ++i)
				rotations_.push_back(base.substr(i) + base.substr(0, i));
	}
	std::string name() const override { return "surface:2"; }
	std::vector<std::string> generators() const override {
		return symmetric_generators(4);
	}
	std::string normalize(const std::string &w) const override {
		check_alphabet(w, 4);
		return canonical(dehn_reduce(free_reduce(w)));
	}

  private:
	std::vector<std::string> rotations_;

	// One Dehn step: a subword of length >= 5 matching the prefix of some
	// cyclic conjugate rho is replaced by inverse(suffix of rho).
	std::string dehn_reduce(std::string w) const {
		bool changed = true;
		while (changed) {
			changed = false;
			for (int len = 8; len >= 5 && !changed; --len) {
				if (static_cast<int>(w.size()) < len)
					continue;
				for (size_t pos = 0; pos + len <= w.size() && !changed; ++pos)
					for (const auto &rho : rotations_)
						if (w.compare(pos, len, rho, 0, len) == 0) {
							w = free_reduce(w.substr(0, pos) +
							                word_inverse(rho.substr(len)) +
							                w.substr(pos + len));
							changed = true;
							break;
						}
			}
		}
		return w;
	}

	// Closure under length-preserving swaps (half of a relator conjugate
	// for the complementary half); restarts whenever a swap exposes a
	// further Dehn shortening.
	std::string canonical(std::string w) const {
		for (;;) {
			std::set<std::string> seen{w};
			std::deque<std::string> queue{w};
			std::string shorter;
			while (!queue.empty() && shorter.empty()) {
				std::string cur = queue.front();
				queue.pop_front();
				for (size_t pos = 0; pos + 4 <= cur.size() && shorter.empty();
				     ++pos)
					for (const auto &rho : rotations_) {
						if (cur.compare(pos, 4, rho, 0, 4) != 0)
							continue;
						std::string next = dehn_reduce(free_reduce(
						    cur.substr(0, pos) + word_inverse(rho.substr(4)) +
						    cur.substr(pos + 4)));
						if (next.size() < w.size()) {
							shorter = next;
							break;
						}
						if (next.size() == w.size() && seen.insert(next).second)
							queue.push_back(next);
					}
			}
			if (shorter.empty())
				return *std::min_element(seen.begin(), seen.end(),
				                         shortlex_less);
			w = shorter;
		}
	}
};

std::vector<std::string> split(const std::string &s, char sep) {
	std::vector<std::string> parts;
	size_t start = 0;
	while (true) {
		size_t pos = s.find(sep, start);
		parts.push_back(s.substr(start, pos - start));
		if (pos == std::string::npos)
			break;
		start = pos + 1;
	}
	return parts;
}

int parse_int(const std::string &s, const std::string &what) {
	try {
		size_t used = 0;
		int v = std::stoi(s, &used);
		if (used != s.size())
			throw input_error("");
		return v;
	} catch (...) {
		throw input_error("group spec: bad " + what + " '" + s + "'");
	}
}

} // namespace

std::string GroupModel::inverse(const std::string &g) const {
	return normalize(word_inverse(g));
}

std::shared_ptr<const GroupModel> GroupModel::parse(const std::string &spec) {
	auto parts = split(spec, ':');
	if (parts.empty())
		throw input_error("group spec: empty");
	const std::string &kind = parts[0];
	if (kind == "free" && parts.size() == 2)
		return std::make_shared<FreeGroup>(parse_int(parts[1], "rank"));
	if (kind == "zn" && parts.size() == 2)
		return std::make_shared<FreeAbelian>(parse_int(parts[1], "rank"));
	if (kind == "cyclic" && parts.size() == 2)
		return std::make_shared<Cyclic>(parse_int(parts[1], "order"));
	if (kind == "surface" && parts.size() == 2) {
		if (parse_int(parts[1], "genus") != 2)
			throw input_error("group spec: only surface:2 is supported");
		return std::make_shared<SurfaceC16>();
	}
	if (kind == "product") {
		std::string rest = spec.substr(8);
		std::vector<int> orders;
		for (const auto &fac : split(rest, ',')) {
			auto fp = split(fac, ':');
			if (fp.size() != 2 || fp[0] != "cyclic")
				throw input_error("group spec: product factors must be cyclic:m");
			orders.push_back(parse_int(fp[1], "factor order"));
		}
		return std::make_shared<FreeProduct>(orders);
	}
	throw input_error("group spec: unrecognized '" + spec + "'");
}

int CayleyBall::vertex_of(const std::string &normal_form) const {
	auto it = index.find(normal_form);
	return it == index.end() ? -1 : it->second;
}

std::vector<int> CayleyBall::inner_vertices() const {
	std::vector<int> out;
	for (int v = 0; v < graph.vertex_count(); ++v)
		if (norm[v] <= inner_radius)
			out.push_back(v);
	return out;
}

std::vector<int> CayleyBall::sphere_vertices() const {
	std::vector<int> out;
	for (int v = 0; v < graph.vertex_count(); ++v)
		if (norm[v] == radius)
			out.push_back(v);
	return out;
}

CayleyBall build_ball(std::shared_ptr<const GroupModel> model, int radius,
                      std::size_t vertex_limit) {
	if (radius < 1)
		throw input_error("ball: radius must be >= 1");
	CayleyBall ball;
	ball.model = model;
	ball.radius = radius;
	ball.inner_radius = radius / 3;
	ball.basepoint = 0;
	auto gens = model->generators();

	ball.words.push_back("");
	ball.index[""] = 0;
	ball.norm.push_back(0);
	std::vector<Edge> edges;
	std::deque<int> frontier{0};
	while (!frontier.empty()) {
		int v = frontier.front();
		frontier.pop_front();
		for (const auto &s : gens) {
			std::string nf = model->multiply(ball.words[v], s);
			auto it = ball.index.find(nf);
			int u;
			if (it != ball.index.end()) {
				u = it->second;
			} else if (ball.norm[v] < radius) {
				u = static_cast<int>(ball.words.size());
				if (ball.words.size() >= vertex_limit)
					throw resource_error(
					    "ball: vertex limit " + std::to_string(vertex_limit) +
					    " exceeded at radius " + std::to_string(radius));
				ball.words.push_back(nf);
				ball.index[nf] = u;
				ball.norm.push_back(ball.norm[v] + 1);
				frontier.push_back(u);
			} else {
				continue; // product leaves the ball
			}
			if (u != v)
				edges.push_back({std::min(v, u), std::max(v, u)});
		}
	}
	ball.graph = Graph(static_cast<int>(ball.words.size()), std::move(edges),
	                   ball.words);
	return ball;
}

std::optional<int> act(const CayleyBall &ball, const std::string &g, int x) {
	if (x < 0 || x >= ball.graph.vertex_count())
		throw input_error("act: unknown vertex");
	int v = ball.vertex_of(ball.model->multiply(ball.model->normalize(g),
	                                            ball.words[x]));
	if (v < 0)
		return std::nullopt;
	return v;
}

bool pair_exact(const CayleyBall &ball, int x, int y, int ball_dist) {
	if (ball_dist < 0)
		return false;
	return ball.norm[x] + ball.norm[y] + ball_dist <= 2 * ball.radius;
}

} // namespace ggt
