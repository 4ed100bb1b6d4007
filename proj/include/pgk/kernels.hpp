#pragma once
#include <functional>
#include <set>

#include "oracle.hpp"
#include "repsets.hpp"

namespace pgk {

struct KernelResult {
	Graph g;            // G[X]
	VertexSet x;        // kept host vertices, in original ids
	long double bound = 0;
	std::string route;  // which pipeline produced it
};

inline KernelResult kernel_from(const Graph& g, VertexSet x, long double bound, std::string route) {
	KernelResult r;
	r.x = normalized(std::move(x));
	r.g = induced_subgraph(g, r.x).graph;
	r.bound = bound;
	r.route = std::move(route);
	return r;
}

// every component of H is a-small or b-thin; one generic marking with D empty
inline KernelResult small_thin_kernel(const Graph& g, const Graph& h, int a, int b) {
	if (!is_small_thin(h, a, b).ok) throw input_error("kernel: pattern is not a-small/b-thin");
	if (h.n() > g.n()) return kernel_from(g, {}, 0, "trivial-no");
	auto r = generic_repset(g, h, {}, SubgraphModel(h.n()), a, b, h.n());
	return kernel_from(g, r.x, r.bound, "small-thin");
}

// ------------------------------------------------------------ packing

struct PackingInstance {
	Graph g;
	Graph h;
	int t = 1;
	int k() const { return t * h.n(); }
};

inline PackingInstance packing_kernel(const PackingInstance& in, int a, int b) {
	if (in.t < 1) throw input_error("packing_kernel: t must be positive");
	if (!is_small_thin(in.h, a, b).ok) throw input_error("packing_kernel: pattern is not a-small/b-thin");
	if (in.k() > in.g.n()) return {Graph(0), in.h, in.t};
	auto r = small_thin_kernel(in.g, disjoint_copies(in.h, in.t), a, b);
	return {r.g, in.h, in.t};
}

// ------------------------------------------------------------ Turing kernel

using SubgraphOracle = std::function<bool(const Graph& g, const Graph& h)>;

inline SubgraphOracle brute_oracle(OracleBudget budget = {}) {
	return [budget](const Graph& g, const Graph& h) { return brute_subgraph(g, h, {}, budget).has_value(); };
}

struct TuringQuery {
	SubgraphModel phi;
	VertexSet x;
	long double bound = 0;
	bool answer = false;
};

struct TuringTranscript {
	VertexSet d;
	std::vector<TuringQuery> queries;
	bool answer = false;
};

// One query per injective placement of the split set D; the answer is the OR.
inline TuringTranscript turing_kernel(const Graph& g, const Graph& h, int a, int b, int c, int d,
                                      const SubgraphOracle& oracle = brute_oracle()) {
	auto cert = find_split(h, a, b, c, d);
	if (!cert) throw input_error("turing_kernel: pattern is not (a,b,c,d)-splittable");
	TuringTranscript tr;
	tr.d = cert->s;
	if (h.n() > g.n()) return tr;
	SubgraphModel phi(h.n());
	std::vector<char> used(g.n(), 0);
	std::function<void(std::size_t)> place = [&](std::size_t i) {
		if (i == tr.d.size()) {
			if (!validate_model(h, g, phi)) return;
			auto r = generic_repset(g, h, tr.d, phi, a, b, d);
			TuringQuery q{phi, r.x, r.bound, false};
			q.answer = oracle(induced_subgraph(g, r.x).graph, h);
			tr.answer = tr.answer || q.answer;
			tr.queries.push_back(std::move(q));
			return;
		}
		for (int x = 0; x < g.n(); ++x) {
			if (used[x]) continue;
			used[x] = 1;
			phi[tr.d[i]] = x;
			place(i + 1);
			phi[tr.d[i]] = -1;
			used[x] = 0;
		}
	};
	place(0);
	return tr;
}

// ------------------------------------------------------------ pattern shapes

struct SplitPattern {
	Graph main;           // H'
	VertexSet main_ids;   // its vertices in H
	Graph rest;           // H''
	bool has_main = false;
	bool ok = true;
};

// the unique component with more than three vertices, if any
inline SplitPattern split_main_component(const Graph& h) {
	SplitPattern sp;
	VertexSet others;
	for (auto& comp : connected_components(h)) {
		if (comp.size() <= 3) {
			others = set_union(others, comp);
			continue;
		}
		if (sp.has_main) sp.ok = false;
		sp.has_main = true;
		sp.main_ids = comp;
	}
	if (sp.has_main) sp.main = induced_subgraph(h, sp.main_ids).graph;
	sp.rest = induced_subgraph(h, others).graph;
	return sp;
}

inline bool is_short_path(const Graph& c) {
	if (c.n() > 3 || !is_connected(c)) return false;
	return static_cast<int>(c.edges().size()) == c.n() - 1;
}

inline bool is_path_graph(const Graph& c) {
	if (!is_connected(c) || static_cast<int>(c.edges().size()) != c.n() - 1) return false;
	for (int v = 0; v < c.n(); ++v)
		if (c.degree(v) > 2) return false;
	return true;
}

// triangle c,d,e with every other vertex a pendant on c; returns c
inline std::optional<int> fountain_center(const Graph& f) {
	auto c = unique_max_degree(f);
	if (!c || f.degree(*c) < 3 || f.n() != f.degree(*c) + 1) return std::nullopt;
	if (static_cast<int>(f.edges().size()) != f.n()) return std::nullopt;
	int tri = 0;
	for (int v : f.neighbors(*c)) {
		if (f.degree(v) == 2) {
			++tri;
			continue;
		}
		if (f.degree(v) != 1) return std::nullopt;
	}
	if (tri != 2) return std::nullopt;
	return c;
}

inline bool is_star_graph(const Graph& f) {
	auto c = unique_max_degree(f);
	return c && f.n() == f.degree(*c) + 1 && static_cast<int>(f.edges().size()) == f.n() - 1;
}

// ------------------------------------------------------------ relevant centres

struct CenterSet {
	VertexSet y;
	std::string route;
};

inline long double star_centers_bound(int k) { return 4.0L * k + 18.0L * k * k + 1; }
inline long double fountain_centers_bound(int k) { return 18.0L * k * k * k; }

inline CenterSet relevant_centers_star(const Graph& g, const Graph& hp, int center, const Graph& hpp) {
	auto sh = star_shape(hp, center);
	if (!sh) throw input_error("relevant_centers_star: H' is not a subdivided star with this centre");
	for (auto& comp : connected_components(hpp))
		if (!is_short_path(induced_subgraph(hpp, comp).graph))
			throw input_error("relevant_centers_star: H'' must consist of paths on at most three vertices");
	const int k = hp.n() + hpp.n();
	CenterSet out;
	std::vector<char> can(g.n(), 0);
	int any = -1;
	for (int v = 0; v < g.n(); ++v) {
		can[v] = centered_star_model(g, hp, center, v).has_value();
		if (can[v] && any < 0) any = v;
	}
	if (any < 0) {
		out.route = "no-model";
		return out;
	}
	VertexSet s;
	for (int v = 0; v < g.n(); ++v)
		if (g.degree(v) >= 3 * k + 1) s.push_back(v);
	if (static_cast<int>(s.size()) >= k) {
		out.y = {any};
		out.route = "high-degree";
		assert_bound(out.y.size(), star_centers_bound(k), "relevant_centers_star");
		return out;
	}
	// greedy maximal P3 packing in G - S, one pass over middles
	std::vector<char> taken(g.n(), 0);
	for (int v : s) taken[v] = 1;
	VertexSet t;
	int copies = 0;
	for (int m = 0; m < g.n(); ++m) {
		if (taken[m]) continue;
		VertexSet ends;
		for (int w : g.neighbors(m))
			if (!taken[w] && ends.size() < 2) ends.push_back(w);
		if (ends.size() < 2) continue;
		for (int v : {m, ends[0], ends[1]}) taken[v] = 1, t.push_back(v);
		++copies;
	}
	if (copies >= k) {
		out.y = {any};
		out.route = "p3-packing";
		assert_bound(out.y.size(), star_centers_bound(k), "relevant_centers_star");
		return out;
	}
	t = normalized(t);
	VertexSet st = set_union(s, t);
	VertexSet tp = t;
	for (auto& comp : components_within(g, set_difference(iota_set(g.n()), st)))
		if (!set_intersection(open_neighborhood(g, comp), t).empty()) tp = set_union(tp, comp);
	VertexSet x = set_difference(iota_set(g.n()), set_union(s, tp));
	int xstar = -1;
	if (sh->leaves.empty()) {
		for (int v : x)
			if (can[v]) {
				xstar = v;
				break;
			}
		out.route = "small-candidate";
	} else {
		for (auto& comp : components_within(g, x)) {
			if (comp.size() != 2) continue;
			for (int v : comp)
				if (can[v] && xstar < 0) xstar = v;
		}
		out.route = "large-candidate";
		if (xstar < 0) {
			for (int v : x)
				if (can[v]) {
					xstar = v;
					break;
				}
			out.route = "small-candidate";
		}
	}
	out.y = set_union(s, tp);
	if (xstar >= 0) {
		out.y = set_union(out.y, {xstar});
	} else {
		out.route = "outside-x";
	}
	assert_bound(out.y.size(), star_centers_bound(k), "relevant_centers_star");
	return out;
}

inline CenterSet relevant_centers_fountain(const Graph& g, const Graph& hp, const Graph& hpp) {
	auto c = fountain_center(hp);
	if (!c) throw input_error("relevant_centers_fountain: H' is not a triangle with pendants on one vertex");
	for (auto& comp : connected_components(hpp))
		if (comp.size() > 3) throw input_error("relevant_centers_fountain: H'' has a component above three vertices");
	const int k = hp.n() + hpp.n();
	const int need = hp.degree(*c);
	std::vector<VertexSet> fam;
	for (int u = 0; u < g.n(); ++u)
		for (int v : g.neighbors(u)) {
			if (v <= u) continue;
			for (int w : g.neighbors(v)) {
				if (w <= v || !g.has_edge(u, w)) continue;
				if (g.degree(u) >= need || g.degree(v) >= need || g.degree(w) >= need) fam.push_back({u, v, w});
			}
		}
	CenterSet out;
	out.route = "triangles";
	const long double cap = 6.0L * k * k * k;
	while (static_cast<long double>(fam.size()) >= cap) {
		auto sf = find_sunflower(fam, k + 1);
		if (!sf) break;
		fam.erase(fam.begin() + sf->members[0]);
	}
	for (auto& s : fam) out.y = set_union(out.y, s);
	assert_bound(out.y.size(), fountain_centers_bound(k), "relevant_centers_fountain");
	return out;
}

// ------------------------------------------------------------ many-one kernels for one big component

namespace detail {

inline KernelResult pinned_union(const Graph& g, const Graph& h, int center, const VertexSet& y,
                                 const std::string& route) {
	VertexSet x;
	long double bound = 0;
	for (int v : y) {
		SubgraphModel phi0(h.n());
		phi0[center] = v;
		auto r = generic_repset(g, h, {center}, phi0, 3, 0, h.n());
		x = set_union(x, r.x);
		bound += r.bound;
	}
	assert_bound(x.size(), bound, route);
	return kernel_from(g, x, bound, route);
}

}  // namespace detail

inline KernelResult star_paths_kernel(const Graph& g, const Graph& h) {
	auto sp = split_main_component(h);
	if (!sp.ok) return kernel_from(g, {}, 0, "malformed");
	for (auto& comp : connected_components(sp.rest))
		if (!is_short_path(induced_subgraph(sp.rest, comp).graph)) return kernel_from(g, {}, 0, "malformed");
	if (!sp.has_main) return small_thin_kernel(g, h, 3, 0);
	if (is_path_graph(sp.main) && sp.main.n() <= 5) return small_thin_kernel(g, h, 5, 0);
	auto c = unique_max_degree(sp.main);
	if (!c || !star_shape(sp.main, *c)) return kernel_from(g, {}, 0, "malformed");
	if (h.n() > g.n()) return kernel_from(g, {}, 0, "trivial-no");
	auto ys = relevant_centers_star(g, sp.main, *c, sp.rest);
	return detail::pinned_union(g, h, sp.main_ids[*c], ys.y, "star-paths/" + ys.route);
}

inline KernelResult fountain_triangles_kernel(const Graph& g, const Graph& h) {
	auto sp = split_main_component(h);
	if (!sp.ok) return kernel_from(g, {}, 0, "malformed");
	if (!sp.has_main) return small_thin_kernel(g, h, 3, 1);
	if (is_star_graph(sp.main)) return small_thin_kernel(g, h, 3, 1);
	auto c = fountain_center(sp.main);
	if (!c) return kernel_from(g, {}, 0, "malformed");
	if (h.n() > g.n()) return kernel_from(g, {}, 0, "trivial-no");
	auto ys = relevant_centers_fountain(g, sp.main, sp.rest);
	return detail::pinned_union(g, h, sp.main_ids[*c], ys.y, "fountain-triangles");
}

}  // namespace pgk
