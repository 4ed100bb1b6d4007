#pragma once
#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pgk {

struct input_error : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

struct precondition_error : std::logic_error {
	using std::logic_error::logic_error;
};

struct resource_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// sorted, duplicate-free list of vertex ids
using VertexSet = std::vector<int>;

inline VertexSet normalized(VertexSet s) {
	std::sort(s.begin(), s.end());
	s.erase(std::unique(s.begin(), s.end()), s.end());
	return s;
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
	VertexSet r;
	std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
	return r;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
	VertexSet r;
	std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
	return r;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
	VertexSet r;
	std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
	return r;
}

inline bool contains(const VertexSet& s, int v) {
	return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet iota_set(int n) {
	VertexSet r(std::max(n, 0));
	std::iota(r.begin(), r.end(), 0);
	return r;
}

class Graph {
public:
	Graph() = default;
	explicit Graph(int n) : adj_(check_n(n)), labels_() {}
	Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
		for (auto [u, v] : edges) add_edge(u, v);
	}

	int n() const { return static_cast<int>(adj_.size()); }
	std::size_t m() const { return m_; }

	int add_vertex(std::string label = {}) {
		adj_.emplace_back();
		if (!label.empty() || !labels_.empty()) {
			labels_.resize(adj_.size());
			labels_.back() = std::move(label);
		}
		return n() - 1;
	}

	// returns false if the edge already existed
	bool add_edge(int u, int v) {
		check_vertex(u);
		check_vertex(v);
		if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
		auto& au = adj_[u];
		auto it = std::lower_bound(au.begin(), au.end(), v);
		if (it != au.end() && *it == v) return false;
		au.insert(it, v);
		auto& av = adj_[v];
		av.insert(std::lower_bound(av.begin(), av.end(), u), u);
		++m_;
		return true;
	}

	bool has_edge(int u, int v) const {
		if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
		if (adj_[u].size() > adj_[v].size()) std::swap(u, v);
		return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
	}

	const VertexSet& neighbors(int v) const { return adj_[v]; }
	int degree(int v) const { return static_cast<int>(adj_[v].size()); }

	int max_degree() const {
		int d = 0;
		for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
		return d;
	}

	std::vector<std::pair<int, int>> edges() const {
		std::vector<std::pair<int, int>> r;
		r.reserve(m_);
		for (int u = 0; u < n(); ++u)
			for (int v : adj_[u])
				if (u < v) r.emplace_back(u, v);
		return r;
	}

	void set_label(int v, std::string label) {
		check_vertex(v);
		labels_.resize(adj_.size());
		labels_[v] = std::move(label);
	}
	std::string label(int v) const {
		return v < static_cast<int>(labels_.size()) ? labels_[v] : std::string();
	}
	bool has_labels() const {
		return std::any_of(labels_.begin(), labels_.end(), [](const auto& s) { return !s.empty(); });
	}

	void check_vertex(int v) const {
		if (v < 0 || v >= n())
			throw input_error("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n()) + ")");
	}

	friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
	static std::size_t check_n(int n) {
		if (n < 0) throw input_error("negative vertex count");
		return static_cast<std::size_t>(n);
	}

	std::vector<VertexSet> adj_;
	std::vector<std::string> labels_;
	std::size_t m_ = 0;
};

struct MultiEdge {
	int u, v;
	std::int64_t weight = 0;
	int color = 0;
};

struct Multigraph {
	int n = 0;
	std::vector<MultiEdge> edges;

	void add_edge(int u, int v, std::int64_t w = 0, int color = 0) {
		if (u < 0 || v < 0 || u >= n || v >= n) throw input_error("multigraph endpoint out of range");
		if (u == v) throw input_error("multigraph self-loop");
		if (w < 0) throw input_error("negative edge weight");
		edges.push_back({u, v, w, color});
	}
};

struct Induced {
	Graph graph;
	std::vector<int> to_old;  // new id -> old id
	std::vector<int> to_new;  // old id -> new id or -1
};

inline Induced induced_subgraph(const Graph& g, const VertexSet& x_in) {
	VertexSet x = normalized(x_in);
	for (int v : x) g.check_vertex(v);
	Induced r{Graph(static_cast<int>(x.size())), x, std::vector<int>(g.n(), -1)};
	for (std::size_t i = 0; i < x.size(); ++i) r.to_new[x[i]] = static_cast<int>(i);
	for (std::size_t i = 0; i < x.size(); ++i) {
		int u = x[i];
		for (int w : g.neighbors(u))
			if (r.to_new[w] > static_cast<int>(i)) r.graph.add_edge(static_cast<int>(i), r.to_new[w]);
		if (!g.label(u).empty()) r.graph.set_label(static_cast<int>(i), g.label(u));
	}
	return r;
}

inline Graph remove_vertices(const Graph& g, const VertexSet& z) {
	return induced_subgraph(g, set_difference(iota_set(g.n()), normalized(z))).graph;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
	std::vector<VertexSet> comps;
	std::vector<char> seen(g.n(), 0);
	std::vector<int> stack;
	for (int s = 0; s < g.n(); ++s) {
		if (seen[s]) continue;
		VertexSet c;
		seen[s] = 1;
		stack.push_back(s);
		while (!stack.empty()) {
			int u = stack.back();
			stack.pop_back();
			c.push_back(u);
			for (int w : g.neighbors(u))
				if (!seen[w]) {
					seen[w] = 1;
					stack.push_back(w);
				}
		}
		std::sort(c.begin(), c.end());
		comps.push_back(std::move(c));
	}
	return comps;
}

// components of g[x], as sets of original ids
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& x) {
	auto ind = induced_subgraph(g, x);
	std::vector<VertexSet> r;
	for (auto& c : connected_components(ind.graph)) {
		VertexSet o;
		for (int v : c) o.push_back(ind.to_old[v]);
		r.push_back(std::move(o));
	}
	return r;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

// A is the smaller class, ties go to the class holding the lowest id
inline std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
	if (!is_connected(g)) throw input_error("bipartition: graph is disconnected");
	std::vector<int> side(g.n(), -1);
	std::vector<int> queue;
	if (g.n() > 0) {
		side[0] = 0;
		queue.push_back(0);
	}
	for (std::size_t i = 0; i < queue.size(); ++i) {
		int u = queue[i];
		for (int w : g.neighbors(u)) {
			if (side[w] < 0) {
				side[w] = 1 - side[u];
				queue.push_back(w);
			} else if (side[w] == side[u]) {
				return std::nullopt;
			}
		}
	}
	VertexSet a, b;
	for (int v = 0; v < g.n(); ++v) (side[v] == 0 ? a : b).push_back(v);
	if (b.size() < a.size()) std::swap(a, b);
	return std::make_pair(a, b);
}

inline VertexSet common_neighborhood(const Graph& g, const VertexSet& d) {
	if (d.empty()) return iota_set(g.n());
	for (int v : d) g.check_vertex(v);
	VertexSet r = g.neighbors(d[0]);
	for (std::size_t i = 1; i < d.size() && !r.empty(); ++i) r = set_intersection(r, g.neighbors(d[i]));
	return r;
}

inline VertexSet closed_neighborhood(const Graph& g, int v) {
	VertexSet r = g.neighbors(v);
	r.insert(std::lower_bound(r.begin(), r.end(), v), v);
	return r;
}

// N(X) \ X
inline VertexSet open_neighborhood(const Graph& g, const VertexSet& x) {
	VertexSet r;
	for (int v : x) r.insert(r.end(), g.neighbors(v).begin(), g.neighbors(v).end());
	return set_difference(normalized(std::move(r)), x);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
	Graph r(a.n() + b.n());
	for (auto [u, v] : a.edges()) r.add_edge(u, v);
	for (auto [u, v] : b.edges()) r.add_edge(a.n() + u, a.n() + v);
	return r;
}

inline Graph disjoint_copies(const Graph& h, int t) {
	if (t < 0) throw input_error("negative copy count");
	Graph r(h.n() * t);
	auto e = h.edges();
	for (int i = 0; i < t; ++i)
		for (auto [u, v] : e) r.add_edge(i * h.n() + u, i * h.n() + v);
	return r;
}

inline void write_graph(std::ostream& os, const Graph& g) {
	os << "p " << g.n() << ' ' << g.m() << '\n';
	for (auto [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
	for (int v = 0; v < g.n(); ++v)
		if (!g.label(v).empty()) os << "l " << v << ' ' << g.label(v) << '\n';
}

inline std::string to_text(const Graph& g) {
	std::ostringstream os;
	write_graph(os, g);
	return os.str();
}

inline Graph read_graph(std::istream& is) {
	std::string line;
	std::optional<Graph> g;
	std::size_t declared_m = 0;
	int lineno = 0;
	while (std::getline(is, line)) {
		++lineno;
		if (line.empty() || line[0] == 'c' || line[0] == '#') continue;
		std::istringstream ls(line);
		char tag = 0;
		ls >> tag;
		auto fail = [&](const std::string& what) {
			return input_error("line " + std::to_string(lineno) + ": " + what);
		};
		if (tag == 'p') {
			long long n = -1, m = -1;
			if (g || !(ls >> n >> m) || n < 0 || m < 0) throw fail("bad header");
			g.emplace(static_cast<int>(n));
			declared_m = static_cast<std::size_t>(m);
		} else if (tag == 'e') {
			int u, v;
			if (!g || !(ls >> u >> v)) throw fail("bad edge line");
			try {
				g->add_edge(u, v);
			} catch (const input_error& e) {
				throw fail(e.what());
			}
		} else if (tag == 'l') {
			int v;
			if (!g || !(ls >> v)) throw fail("bad label line");
			std::string rest;
			std::getline(ls, rest);
			if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
			g->check_vertex(v);
			g->set_label(v, rest);
		} else {
			throw fail("unknown line tag");
		}
	}
	if (!g) throw input_error("missing 'p' header");
	if (g->m() != declared_m) throw input_error("edge count does not match header");
	return *g;
}

inline Graph from_text(const std::string& s) {
	std::istringstream is(s);
	return read_graph(is);
}

}  // namespace pgk
