#pragma once
#include <array>
#include <map>
#include <optional>
#include <string>

#include "graph.hpp"

// Vertex numbering (fixed repo convention, backbone first):
//   path l           : 0..l along the path
//   clique n         : 0..n-1
//   biclique n[,m]   : side A = 0..n-1, side B = n..n+m-1
//   star n           : center 0, leaves 1..n
//   cycle s          : 0..s-1
//   double_broom s,n : path 0..s, n pendants on 0, then n pendants on s
//   opera_house s,n  : path 0..s, then n vertices adjacent to 0 and s
//   fountain s,n     : cycle 0..s-1, n pendants on 0
//   long_fountain s,t,n : cycle 0..s-1, path s..s+t-1 hanging from 0, n pendants on s+t-1
//   subdiv_star n    : center 0, middles 1..n, leaves n+1..2n (middle i next to leaf n+i)
//   subdiv_tree s,n  : center 0, leg i = 1+i*s .. s+i*s, then n pendants per leg end
//   diamond_fan n    : center 0, copy j = (1+j*(n+1)) followed by its n middles
//   canonical_K3/P3 n: U = 0..n-1, then 9 vertices per 3-subset in lexicographic order

namespace pgk {

enum class Kind {
	path,
	clique,
	biclique,
	star,
	cycle,
	double_broom,
	opera_house,
	fountain,
	long_fountain,
	subdiv_star,
	subdiv_tree,
	diamond_fan,
	canonical_K3,
	canonical_P3
};

inline const std::map<std::string, Kind>& kind_names() {
	static const std::map<std::string, Kind> names = {
	    {"path", Kind::path},
	    {"clique", Kind::clique},
	    {"biclique", Kind::biclique},
	    {"star", Kind::star},
	    {"cycle", Kind::cycle},
	    {"double_broom", Kind::double_broom},
	    {"opera_house", Kind::opera_house},
	    {"fountain", Kind::fountain},
	    {"long_fountain", Kind::long_fountain},
	    {"subdiv_star", Kind::subdiv_star},
	    {"subdiv_tree", Kind::subdiv_tree},
	    {"diamond_fan", Kind::diamond_fan},
	    {"canonical_K3", Kind::canonical_K3},
	    {"canonical_P3", Kind::canonical_P3},
	};
	return names;
}

inline Kind parse_kind(const std::string& s) {
	auto it = kind_names().find(s);
	if (it == kind_names().end()) throw input_error("unknown family kind '" + s + "'");
	return it->second;
}

struct FamilySpec {
	Kind kind = Kind::path;
	int n = 1;
	int s = 3;
	int t = 1;
	int m = -1;  // second biclique side, -1 means n
};

struct CenteredPattern {
	Graph graph;
	std::optional<int> center;
};

inline std::optional<int> unique_max_degree(const Graph& g) {
	std::optional<int> best;
	int deg = -1;
	bool unique = false;
	for (int v = 0; v < g.n(); ++v) {
		if (g.degree(v) > deg) {
			deg = g.degree(v);
			best = v;
			unique = true;
		} else if (g.degree(v) == deg) {
			unique = false;
		}
	}
	return unique ? best : std::nullopt;
}

enum class Gadget { K3, P3 };

// rank of {x<y<z} among 3-subsets of [n] in lexicographic order
inline long long triple_rank(int n, int x, int y, int z) {
	auto c2 = [](long long a) { return a * (a - 1) / 2; };
	auto c3 = [](long long a) { return a * (a - 1) * (a - 2) / 6; };
	long long before_x = c3(n) - c3(n - x);
	long long before_y = c2(n - x - 1) - c2(n - y);
	return before_x + before_y + (z - y - 1);
}

inline long long binom3(long long n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

// gadget slots: 0..8 = al ar at bl br bt cl cr ct; -1,-2,-3 = a, b, c in U
inline const std::vector<std::pair<int, int>>& gadget_edges(Gadget g) {
	static const std::vector<std::pair<int, int>> k3 = {
	    {-1, 0}, {-1, 1}, {2, 0}, {2, 1}, {-2, 3}, {-2, 4}, {5, 3}, {5, 4}, {-3, 6}, {-3, 7},
	    {8, 6},  {8, 7},  {2, 5}, {5, 8}, {8, 2},  {0, 1},  {3, 4}, {6, 7},
	};
	static const std::vector<std::pair<int, int>> p3 = {
	    {-1, 0}, {2, 0}, {-2, 3}, {5, 3}, {-3, 6}, {8, 6}, {2, 5}, {5, 8}, {0, 1}, {3, 4}, {6, 7},
	};
	return g == Gadget::K3 ? k3 : p3;
}

inline int gadget_base(int n, int x, int y, int z) {
	return n + 9 * static_cast<int>(triple_rank(n, x, y, z));
}

inline Graph canonical_template(int n, Gadget gadget) {
	if (n < 3) throw input_error("canonical template needs n >= 3");
	long long total = n + 9 * binom3(n);
	if (total > 50'000'000) throw resource_error("canonical template too large");
	Graph g(static_cast<int>(total));
	const char* names[] = {"al", "ar", "at", "bl", "br", "bt", "cl", "cr", "ct"};
	for (int v = 0; v < n; ++v) g.set_label(v, "U:" + std::to_string(v));
	for (int x = 0; x < n; ++x)
		for (int y = x + 1; y < n; ++y)
			for (int z = y + 1; z < n; ++z) {
				int base = gadget_base(n, x, y, z);
				std::array<int, 3> u = {x, y, z};
				auto at = [&](int slot) { return slot < 0 ? u[-slot - 1] : base + slot; };
				for (auto [p, q] : gadget_edges(gadget)) g.add_edge(at(p), at(q));
				std::string tag = std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z);
				for (int i = 0; i < 9; ++i) g.set_label(base + i, std::string(names[i]) + ":" + tag);
			}
	return g;
}

inline void need(bool ok, const char* what) {
	if (!ok) throw input_error(std::string("family parameter out of range: ") + what);
}

inline CenteredPattern build_family(const FamilySpec& sp) {
	Graph g;
	auto path_on = [&](int first, int last) {
		for (int v = first; v < last; ++v) g.add_edge(v, v + 1);
	};
	auto cycle_on = [&](int len) {
		path_on(0, len - 1);
		g.add_edge(len - 1, 0);
	};
	int n = sp.n, s = sp.s, t = sp.t;
	switch (sp.kind) {
	case Kind::path:
		need(n >= 0, "path length >= 0");
		g = Graph(n + 1);
		path_on(0, n);
		break;
	case Kind::clique:
		need(n >= 1, "clique n >= 1");
		g = Graph(n);
		for (int u = 0; u < n; ++u)
			for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
		break;
	case Kind::biclique: {
		int m = sp.m < 0 ? n : sp.m;
		need(n >= 1 && m >= 1, "biclique sides >= 1");
		g = Graph(n + m);
		for (int u = 0; u < n; ++u)
			for (int v = 0; v < m; ++v) g.add_edge(u, n + v);
		break;
	}
	case Kind::star:
		need(n >= 1, "star n >= 1");
		g = Graph(n + 1);
		for (int v = 1; v <= n; ++v) g.add_edge(0, v);
		break;
	case Kind::cycle:
		need(s >= 3, "cycle s >= 3");
		g = Graph(s);
		cycle_on(s);
		break;
	case Kind::double_broom:
		need(s >= 1 && n >= 1, "double_broom s,n >= 1");
		g = Graph(s + 1 + 2 * n);
		path_on(0, s);
		for (int i = 0; i < n; ++i) {
			g.add_edge(0, s + 1 + i);
			g.add_edge(s, s + 1 + n + i);
		}
		break;
	case Kind::opera_house:
		need(s >= 1 && n >= 1, "opera_house s,n >= 1");
		g = Graph(s + 1 + n);
		path_on(0, s);
		for (int i = 0; i < n; ++i) {
			g.add_edge(0, s + 1 + i);
			g.add_edge(s, s + 1 + i);
		}
		break;
	case Kind::fountain:
		need(s >= 3 && n >= 1, "fountain s >= 3, n >= 1");
		g = Graph(s + n);
		cycle_on(s);
		for (int i = 0; i < n; ++i) g.add_edge(0, s + i);
		break;
	case Kind::long_fountain:
		need(s >= 3 && t >= 1 && n >= 1, "long_fountain s >= 3, t >= 1, n >= 1");
		g = Graph(s + t + n);
		cycle_on(s);
		g.add_edge(0, s);
		path_on(s, s + t - 1);
		for (int i = 0; i < n; ++i) g.add_edge(s + t - 1, s + t + i);
		break;
	case Kind::subdiv_star:
		need(n >= 1, "subdiv_star n >= 1");
		g = Graph(2 * n + 1);
		for (int i = 1; i <= n; ++i) {
			g.add_edge(0, i);
			g.add_edge(i, n + i);
		}
		break;
	case Kind::subdiv_tree:
		need(s >= 1 && n >= 1, "subdiv_tree s,n >= 1");
		g = Graph(1 + n * s + n * n);
		for (int i = 0; i < n; ++i) {
			int first = 1 + i * s, last = first + s - 1;
			g.add_edge(0, first);
			path_on(first, last);
			for (int j = 0; j < n; ++j) g.add_edge(last, 1 + n * s + i * n + j);
		}
		break;
	case Kind::diamond_fan:
		need(n >= 1, "diamond_fan n >= 1");
		g = Graph(n * n + n + 1);
		for (int j = 0; j < n; ++j) {
			int w = 1 + j * (n + 1);
			for (int i = 1; i <= n; ++i) {
				g.add_edge(0, w + i);
				g.add_edge(w, w + i);
			}
		}
		break;
	case Kind::canonical_K3:
		g = canonical_template(n, Gadget::K3);
		break;
	case Kind::canonical_P3:
		g = canonical_template(n, Gadget::P3);
		break;
	}
	return {g, unique_max_degree(g)};
}

inline Graph family_graph(Kind k, int n, int s = 3, int t = 1) {
	FamilySpec sp;
	sp.kind = k;
	sp.n = n;
	sp.s = s;
	sp.t = t;
	return build_family(sp).graph;
}

inline Graph clique(int n) { return family_graph(Kind::clique, n); }
inline Graph path_graph(int edges) { return family_graph(Kind::path, edges); }
inline Graph star_graph(int leaves) { return family_graph(Kind::star, leaves); }
inline Graph biclique(int a, int b) {
	FamilySpec sp;
	sp.kind = Kind::biclique;
	sp.n = a;
	sp.m = b;
	return build_family(sp).graph;
}

}  // namespace pgk
