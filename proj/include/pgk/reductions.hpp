#pragma once
#include <array>
#include <functional>
#include <set>

#include "families.hpp"
#include "kernels.hpp"
#include "setsystem.hpp"

namespace pgk {

struct SubgraphInstance {
	Graph g;
	Graph h;
};

namespace detail {

inline void audit(bool ok, const std::string& what) {
	if (!ok) throw std::logic_error("reduction audit failed: " + what);
}

// exact cover, only used for the trivial cases the constructions hand back as fixed answers
inline bool small_exact_cover(int universe, const std::vector<VertexSet>& sets) {
	std::vector<std::vector<int>> by_elem(universe);
	for (std::size_t i = 0; i < sets.size(); ++i)
		for (int x : sets[i]) by_elem[x].push_back(static_cast<int>(i));
	std::vector<char> used(universe, 0);
	std::function<bool()> rec = [&]() {
		int e = 0;
		while (e < universe && used[e]) ++e;
		if (e == universe) return true;
		for (int i : by_elem[e]) {
			const auto& s = sets[i];
			if (std::any_of(s.begin(), s.end(), [&](int x) { return used[x]; })) continue;
			for (int x : s) used[x] = 1;
			bool ok = rec();
			for (int x : s) used[x] = 0;
			if (ok) return true;
		}
		return false;
	};
	return rec();
}

inline int infer_uniformity(const SetSystem& s) {
	s.validate();
	int r = s.uniformity;
	if (r < 0) {
		if (s.sets.empty()) throw input_error("cannot infer uniformity of an empty set system");
		r = static_cast<int>(s.sets.front().size());
	}
	if (!s.is_uniform(r)) throw input_error("set system is not uniform");
	if (r < 3) throw input_error("uniformity must be at least 3");
	if (s.universe % r != 0) throw input_error("uniformity must divide the universe size");
	return r;
}

}  // namespace detail

// ------------------------------------------------------------ set cover

inline SetSystem regularize_setcover(const SetSystem& in) {
	in.validate();
	const int n = in.universe;
	if (n < 2) {
		std::vector<VertexSet> sets(in.sets.begin(), in.sets.end());
		bool yes = detail::small_exact_cover(n, sets);
		SetSystem out{4, {}, 4};
		if (yes) out.sets.push_back({0, 1, 2, 3});
		return out;
	}
	// U = 0..n-1, u'_i = n+i, u*_i = 2n+i
	std::vector<VertexSet> prime(in.sets.begin(), in.sets.end());
	for (int i = 0; i < n; ++i)
		for (int j = i; j < n; ++j) {
			VertexSet iv;
			for (int x = i; x <= j; ++x) iv.push_back(n + x);
			prime.push_back(iv);
		}
	const long long total = 2LL * n + 2LL * n * n;
	long long count = 0;
	for (const auto& s : prime) count += 2LL * n * n - (2LL * n - static_cast<long long>(s.size())) + 1;
	if (count > 20'000'000) throw resource_error("regularized set system too large");

	SetSystem out;
	out.universe = static_cast<int>(total);
	out.uniformity = 2 * n;
	out.sets.reserve(count);
	for (const auto& s : prime) {
		int pad = 2 * n - static_cast<int>(s.size());
		for (int i = 0; i + pad <= 2 * n * n; ++i) {
			VertexSet x = s;
			for (int j = 0; j < pad; ++j) x.push_back(2 * n + i + j);
			out.sets.push_back(std::move(x));
		}
	}
	detail::audit(out.universe == 2 * n + 2 * n * n, "universe 2n+2n^2");
	detail::audit(out.is_uniform(2 * n), "2n-uniform");
	return out;
}

// ------------------------------------------------------------ packing targets

enum class PackingKind { fountain, long_fountain, opera_house, subdiv_star, double_broom };

struct PackingTarget {
	PackingKind kind = PackingKind::fountain;
	int s = 3;
	int t = 1;
};

inline PackingKind parse_packing_kind(const std::string& name) {
	static const std::map<std::string, PackingKind> names = {
	    {"fountain", PackingKind::fountain},       {"long_fountain", PackingKind::long_fountain},
	    {"opera_house", PackingKind::opera_house}, {"subdiv_star", PackingKind::subdiv_star},
	    {"double_broom", PackingKind::double_broom},
	};
	auto it = names.find(name);
	if (it == names.end()) throw input_error("unknown packing target '" + name + "'");
	return it->second;
}

inline Graph packing_pattern(const PackingTarget& tg, int r) {
	switch (tg.kind) {
	case PackingKind::fountain: return family_graph(Kind::fountain, r, tg.s);
	case PackingKind::long_fountain: return family_graph(Kind::long_fountain, r, tg.s, tg.t);
	case PackingKind::opera_house: return family_graph(Kind::opera_house, r, tg.s);
	case PackingKind::subdiv_star: return family_graph(Kind::subdiv_star, r);
	case PackingKind::double_broom: return family_graph(Kind::double_broom, r, tg.s);
	}
	throw input_error("bad packing target");
}

inline PackingInstance reduce_to_packing(const SetSystem& sys, const PackingTarget& tg) {
	const int r = detail::infer_uniformity(sys);
	const int n = sys.universe;
	switch (tg.kind) {
	case PackingKind::fountain:
	case PackingKind::long_fountain:
		if (tg.s < 3 || tg.s % 2 == 0) throw input_error("fountain cycle length must be odd and >= 3");
		if (tg.kind == PackingKind::long_fountain && tg.t < 1) throw input_error("long fountain needs t >= 1");
		break;
	case PackingKind::opera_house:
	case PackingKind::double_broom:
		if (tg.s < 1 || tg.s % 2 == 0) throw input_error("path length must be odd and >= 1");
		break;
	case PackingKind::subdiv_star: break;
	}

	Graph h = packing_pattern(tg, r);
	Graph g(n);
	for (int u = 0; u < n; ++u) g.set_label(u, "element:" + std::to_string(u));

	if (tg.kind == PackingKind::fountain || tg.kind == PackingKind::long_fountain) {
		// H' is H without its r pendants, which are the last r vertices; c carries them
		int hp = h.n() - r;
		int c = tg.kind == PackingKind::fountain ? 0 : tg.s + tg.t - 1;
		for (std::size_t i = 0; i < sys.sets.size(); ++i) {
			int base = g.n();
			for (int v = 0; v < hp; ++v) g.add_vertex("set:" + std::to_string(i) + ":h" + std::to_string(v));
			for (auto [a, b] : h.edges())
				if (a < hp && b < hp) g.add_edge(base + a, base + b);
			for (int u : sys.sets[i]) g.add_edge(base + c, u);
		}
	} else if (tg.kind == PackingKind::subdiv_star) {
		for (int u = 0; u < n; ++u) g.add_edge(u, g.add_vertex("pendant:" + std::to_string(u)));
		for (std::size_t i = 0; i < sys.sets.size(); ++i) {
			int x = g.add_vertex("set:" + std::to_string(i) + ":x");
			for (int u : sys.sets[i]) g.add_edge(x, u);
		}
	} else {
		for (std::size_t i = 0; i < sys.sets.size(); ++i) {
			std::string tag = "set:" + std::to_string(i);
			int x = g.add_vertex(tag + ":x");
			int prev = x;
			for (int j = 1; j < tg.s; ++j) {
				int v = g.add_vertex(tag + ":p" + std::to_string(j));
				g.add_edge(prev, v);
				prev = v;
			}
			int y = g.add_vertex(tag + ":y");
			g.add_edge(prev, y);
			for (int u : sys.sets[i]) g.add_edge(x, u);
			if (tg.kind == PackingKind::opera_house) {
				for (int u : sys.sets[i]) g.add_edge(y, u);
			} else {
				for (int j = 0; j < r; ++j) g.add_edge(y, g.add_vertex(tag + ":broom" + std::to_string(j)));
			}
		}
	}

	PackingInstance out{g, h, n / r};
	// |V(H)| is linear in r, so k = (n/r)|V(H)| is linear in n
	detail::audit(out.k() == out.t * h.n(), "k = t|V(H)|");
	detail::audit(out.k() <= static_cast<long long>(3 + tg.s + tg.t) * std::max(n, 1), "k in O(n)");
	return out;
}

// ------------------------------------------------------------ subgraph targets

enum class SubgraphKind { diamond_fan, subdiv_tree };

inline SubgraphInstance reduce_to_subgraph(const SetSystem& sys, SubgraphKind kind, int s = 1) {
	const int r = detail::infer_uniformity(sys);
	const int n = sys.universe;
	const int t = n / r;
	Graph g(n);
	for (int u = 0; u < n; ++u) g.set_label(u, "element:" + std::to_string(u));
	Graph h;

	if (kind == SubgraphKind::diamond_fan) {
		const int q = n + 1;
		h = family_graph(Kind::diamond_fan, q);
		int z = g.add_vertex("z");
		// z, v_S and N(v_S) must form a K_{2,Q}, so z sees the element vertices too
		for (int u = 0; u < n; ++u) g.add_edge(z, u);
		for (int c = 0; c < q - t; ++c) {
			std::string tag = "fan:" + std::to_string(c);
			int w = g.add_vertex(tag + ":hub");
			for (int j = 0; j < q; ++j) {
				int mid = g.add_vertex(tag + ":mid" + std::to_string(j));
				g.add_edge(z, mid);
				g.add_edge(w, mid);
			}
		}
		for (std::size_t i = 0; i < sys.sets.size(); ++i) {
			std::string tag = "set:" + std::to_string(i);
			int v = g.add_vertex(tag + ":v");
			for (int u : sys.sets[i]) g.add_edge(v, u);
			for (int j = 0; j < q - r; ++j) {
				int x = g.add_vertex(tag + ":x" + std::to_string(j));
				g.add_edge(x, v);
				g.add_edge(x, z);
			}
			detail::audit(g.degree(v) == q, "deg(v_S) = Q");
		}
		detail::audit(h.n() == q * q + q + 1, "|V(H)| = Q^2+Q+1");
	} else {
		if (s < 1) throw input_error("subdivided tree needs s >= 1");
		const int q = n + 2;
		h = family_graph(Kind::subdiv_tree, q, s);
		int z = g.add_vertex("z");
		// path of length s from z ending in a fresh vertex, which is returned
		auto leg = [&](const std::string& tag, int end) {
			int prev = z;
			for (int j = 1; j < s; ++j) {
				int v = g.add_vertex(tag + ":path" + std::to_string(j));
				g.add_edge(prev, v);
				prev = v;
			}
			g.add_edge(prev, end);
		};
		for (int i = 0; i < q - t; ++i) {
			std::string tag = "spine:" + std::to_string(i);
			int x = g.add_vertex(tag + ":x");
			leg(tag, x);
			for (int j = 0; j < q; ++j) g.add_edge(x, g.add_vertex(tag + ":leaf" + std::to_string(j)));
		}
		for (std::size_t i = 0; i < sys.sets.size(); ++i) {
			std::string tag = "set:" + std::to_string(i);
			int v = g.add_vertex(tag + ":v");
			for (int u : sys.sets[i]) g.add_edge(v, u);
			leg(tag, v);
			for (int j = 0; j < q - r; ++j) g.add_edge(v, g.add_vertex(tag + ":leaf" + std::to_string(j)));
		}
		detail::audit(h.n() == q * q + q * s + 1, "|V(H)| = Q^2+Qs+1");
	}
	return {g, h};
}

// ------------------------------------------------------------ canonical packing

struct CanonicalInstance {
	int n = 0;
	VertexSet s;
};

struct X3CToCanonical {
	int pad_cap = 96;  // largest 3n^5 padding materialised
};

inline int canonical_max_degree(int n, Gadget gadget) {
	if (n < 3) return 0;
	long long u = static_cast<long long>(n - 1) * (n - 2) / 2 * (gadget == Gadget::K3 ? 2 : 1);
	return static_cast<int>(std::min<long long>(std::max<long long>(u, gadget == Gadget::K3 ? 4 : 3), INT32_MAX));
}

inline CanonicalInstance x3c_to_canonical(const X3CInstance& x, Gadget gadget, bool pad_for_degree,
                                          X3CToCanonical opt = {}) {
	if (x.universe < 0) throw input_error("negative universe");
	std::set<std::array<int, 3>> triples;
	for (auto tr : x.triples) {
		std::sort(tr.begin(), tr.end());
		if (tr[0] < 0 || tr[2] >= x.universe || tr[0] == tr[1] || tr[1] == tr[2])
			throw input_error("bad X3C triple");
		triples.insert(tr);
	}
	int n = x.universe;
	if (pad_for_degree) {
		long long pad = 3LL * n * n * n * n * n;
		if (pad > opt.pad_cap) throw resource_error("degree padding of 3n^5 elements exceeds the cap");
		int base = n;
		n += static_cast<int>(pad);
		for (int a = base; a < n; ++a)
			for (int b = a + 1; b < n; ++b)
				for (int c = b + 1; c < n; ++c) triples.insert({a, b, c});
	}
	CanonicalInstance out{n, iota_set(n)};
	for (const auto& tr : triples) {
		int base = gadget_base(n, tr[0], tr[1], tr[2]);
		for (int j = 0; j < 9; ++j) out.s.push_back(base + j);
	}
	out.s = normalized(out.s);
	if (pad_for_degree && n >= 3)
		detail::audit(static_cast<long long>(out.s.size()) > canonical_max_degree(n, gadget) + 1LL, "|S| > Delta + 1");
	return out;
}

// "n <n>" then one "s v1 v2 ..." line listing S
inline void write_canonical(std::ostream& os, const CanonicalInstance& c) {
	os << "n " << c.n << "\ns";
	for (int v : c.s) os << ' ' << v;
	os << '\n';
}

inline CanonicalInstance read_canonical(std::istream& is) {
	CanonicalInstance c;
	bool have_n = false, have_s = false;
	std::string line;
	while (std::getline(is, line)) {
		if (line.empty() || line[0] == '#') continue;
		std::istringstream ls(line);
		char tag = 0;
		ls >> tag;
		if (tag == 'n' && !have_n) {
			if (!(ls >> c.n) || c.n < 0) throw input_error("bad canonical size line");
			have_n = true;
		} else if (tag == 's' && have_n && !have_s) {
			int v;
			while (ls >> v) c.s.push_back(v);
			have_s = true;
		} else {
			throw input_error("bad canonical instance line");
		}
	}
	if (!have_n) throw input_error("missing canonical size line");
	c.s = normalized(c.s);
	return c;
}

// can G[S] be partitioned into connected triples spanning the gadget shape?
inline bool canonical_partitionable(const Graph& g, const VertexSet& s, Gadget gadget) {
	if (s.size() % 3) return false;
	auto ind = induced_subgraph(g, s);
	const Graph& q = ind.graph;
	std::set<VertexSet> triples;
	for (int b = 0; b < q.n(); ++b) {
		const auto& nb = q.neighbors(b);
		for (std::size_t i = 0; i < nb.size(); ++i)
			for (std::size_t j = i + 1; j < nb.size(); ++j) {
				if (gadget == Gadget::K3 && !q.has_edge(nb[i], nb[j])) continue;
				triples.insert(normalized({b, nb[i], nb[j]}));
			}
	}
	return detail::small_exact_cover(q.n(), {triples.begin(), triples.end()});
}

// ------------------------------------------------------------ cross-compositions

struct ComposeOptions {
	bool relax_guards = false;  // test-only: build micro instances below the size guards
};

struct ComposeResult {
	Graph g;
	Graph h;
	std::string route;  // "composed" or "solved-directly"
};

namespace detail {

inline void check_compose_inputs(const std::vector<CanonicalInstance>& in) {
	if (in.empty()) throw input_error("cross-composition needs at least one instance");
	for (const auto& x : in) {
		if (x.n != in.front().n) throw input_error("instances disagree on n");
		if (x.s.size() != in.front().s.size()) throw input_error("instances disagree on |S|");
		if (x.n < 3) throw input_error("canonical instances need n >= 3");
	}
}

inline bool any_partitionable(const std::vector<CanonicalInstance>& in, Gadget gadget) {
	Graph g = canonical_template(in.front().n, gadget);
	for (const auto& x : in) {
		for (int v : x.s) g.check_vertex(v);
		if (canonical_partitionable(g, normalized(x.s), gadget)) return true;
	}
	return false;
}

}  // namespace detail

inline ComposeResult crosscompose_star_triangles(const std::vector<CanonicalInstance>& in, ComposeOptions opt = {}) {
	detail::check_compose_inputs(in);
	const int n = in.front().n;
	const int m = static_cast<int>(in.front().s.size());
	if (m % 3 != 0 || m == 0 || (!opt.relax_guards && (n < 10 || m < 10))) {
		Graph h = disjoint_union(family_graph(Kind::subdiv_star, 1), clique(3));
		bool yes = m % 3 == 0 && detail::any_partitionable(in, Gadget::K3);
		return {yes ? h : family_graph(Kind::subdiv_star, 1), h, "solved-directly"};
	}

	Graph g = canonical_template(n, Gadget::K3);
	const int nv = g.n();
	for (const auto& x : in)
		for (int v : x.s) g.check_vertex(v);
	// dummy v' = nv + 2v, activator v'' = nv + 2v + 1
	for (int v = 0; v < nv; ++v) {
		int d = g.add_vertex("dummy:v=" + std::to_string(v));
		int a = g.add_vertex("activator:v=" + std::to_string(v));
		g.add_edge(v, d);
		g.add_edge(v, a);
		g.add_edge(d, a);
	}
	for (std::size_t i = 0; i < in.size(); ++i) {
		int u = g.add_vertex("selector:i=" + std::to_string(i));
		for (int v : normalized(in[i].s)) g.add_edge(u, nv + 2 * v + 1);
	}
	const int t = nv - m + m / 3;
	Graph h = disjoint_union(family_graph(Kind::subdiv_star, m), disjoint_copies(clique(3), t));
	detail::audit(h.n() == (2 * m + 1) + 3 * t, "k = (2m+1)+3t");
	return {g, h, "composed"};
}

inline ComposeResult crosscompose_twostars_paths(const std::vector<CanonicalInstance>& in, ComposeOptions opt = {}) {
	detail::check_compose_inputs(in);
	const int n = in.front().n;
	const int m = static_cast<int>(in.front().s.size());
	Graph base = canonical_template(n, Gadget::P3);
	const int np = base.n();
	bool guards = n >= 10 && m >= 10 && m > base.max_degree() + 1;
	if (m % 3 != 0 || m == 0 || (!opt.relax_guards && !guards)) {
		Graph h = disjoint_union(disjoint_union(family_graph(Kind::subdiv_star, 1), family_graph(Kind::subdiv_star, 1)),
		                         path_graph(2));
		bool yes = m % 3 == 0 && detail::any_partitionable(in, Gadget::P3);
		return {yes ? h : Graph(h.n() - 1), h, "solved-directly"};
	}
	if (static_cast<long long>(np) * np > 5'000'000) throw resource_error("carving matching too large");

	Graph g = base;
	for (const auto& x : in)
		for (int v : x.s) g.check_vertex(v);
	std::vector<int> b(np), p(np), d(np), c(np);
	for (int j = 0; j < np; ++j) {
		std::string tag = ":j=" + std::to_string(j);
		b[j] = g.add_vertex("blocker" + tag);
		p[j] = g.add_vertex("propagator" + tag);
		d[j] = g.add_vertex("dummy" + tag);
		c[j] = g.add_vertex("communicator" + tag);
		g.add_edge(b[j], p[j]);
		g.add_edge(b[j], j);
		g.add_edge(d[j], c[j]);
		g.add_edge(c[j], p[j]);
	}
	int zs = g.add_vertex("carving");
	for (int j = 0; j < np; ++j) g.add_edge(zs, b[j]), g.add_edge(zs, p[j]);
	long long carving = static_cast<long long>(np) * np;
	for (long long e = 0; e < carving; ++e) {
		int near = g.add_vertex("carving-near:e=" + std::to_string(e));
		int far = g.add_vertex("carving-far:e=" + std::to_string(e));
		g.add_edge(near, far);
		g.add_edge(zs, near);
	}
	for (std::size_t i = 0; i < in.size(); ++i) {
		int u = g.add_vertex("selector:i=" + std::to_string(i));
		for (int v : normalized(in[i].s)) g.add_edge(u, c[v]);
	}

	const long long legs1 = (2LL * np - m) + carving;
	Graph h1 = family_graph(Kind::subdiv_star, static_cast<int>(legs1));
	Graph h2 = family_graph(Kind::subdiv_star, m);
	Graph h = disjoint_union(disjoint_union(disjoint_copies(path_graph(2), m / 3), h1), h2);
	detail::audit(carving == static_cast<long long>(np) * np, "|M''| = n'^2");
	detail::audit(g.degree(zs) >= legs1, "deg(z*) >= (2n'-m)+n'^2");
	return {g, h, "composed"};
}

}  // namespace pgk
