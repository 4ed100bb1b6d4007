#pragma once
#include <functional>

#include "matching.hpp"
#include "model.hpp"
#include "recognizers.hpp"

namespace pgk {

// Unassigned pattern vertices must be pairwise non-adjacent (true when the
// whole smaller side of a bipartite H is assigned). Each one becomes a slot
// that may take any unused host vertex adjacent to the images of all its
// neighbours; a matching saturating the slots is the extension.
inline std::optional<SubgraphModel> extend_bipartite_model(const Graph& g, const Graph& h, const SubgraphModel& phi0,
                                                           const VertexSet& forbidden = {}) {
	if (phi0.size() != h.n()) throw input_error("extend_bipartite_model: model size differs from pattern order");
	if (h.n() > g.n()) return std::nullopt;
	if (!validate_model(h, g, phi0)) throw input_error("extend_bipartite_model: invalid partial model");
	VertexSet free_h;
	for (int v = 0; v < h.n(); ++v)
		if (!phi0.defined(v)) free_h.push_back(v);
	for (int v : free_h)
		for (int w : h.neighbors(v))
			if (!phi0.defined(w)) throw precondition_error("extend_bipartite_model: unassigned vertices adjacent");
	std::vector<char> blocked(g.n(), 0);
	for (int x : forbidden) blocked[x] = 1;
	for (int v = 0; v < h.n(); ++v)
		if (phi0.defined(v)) blocked[phi0[v]] = 1;

	// slots with equal neighbourhoods are false twins; group them so each
	// candidate list is computed once
	std::map<VertexSet, VertexSet> groups;
	for (int v : free_h) groups[h.neighbors(v)].push_back(v);
	HopcroftKarp hk(static_cast<int>(free_h.size()), g.n());
	std::vector<int> slot_vertex;
	for (auto& [nb, members] : groups) {
		VertexSet images;
		for (int u : nb) images.push_back(phi0[u]);
		VertexSet cand = common_neighborhood(g, normalized(images));
		for (int v : members) {
			int slot = static_cast<int>(slot_vertex.size());
			slot_vertex.push_back(v);
			for (int x : cand)
				if (!blocked[x]) hk.add_edge(slot, x);
		}
	}
	if (hk.run() < static_cast<int>(free_h.size())) return std::nullopt;
	SubgraphModel r = phi0;
	for (int i = 0; i < static_cast<int>(slot_vertex.size()); ++i) r[slot_vertex[i]] = hk.mate_of_left(i);
	return r;
}

// closed neighbourhood in H - D of b not universal to D
inline VertexSet non_universal_to(const Graph& h, const VertexSet& d, const VertexSet& b_side) {
	VertexSet out;
	for (int b : b_side) {
		bool ok = true;
		auto check = [&](int u) {
			for (int x : d)
				if (!h.has_edge(u, x)) ok = false;
		};
		check(b);
		for (int u : h.neighbors(b))
			if (!contains(d, u)) check(u);
		if (!ok) out.push_back(b);
	}
	return out;
}

struct SeparatedTask {
	VertexSet d;       // separator, assigned by phi0
	VertexSet a_side;  // side of H - D whose vertices are always placed by enumeration
};

inline VertexSet b_side_of(const Graph& h, const SeparatedTask& t) {
	return set_difference(set_difference(iota_set(h.n()), t.d), t.a_side);
}

inline void check_task(const Graph& h, const SeparatedTask& t, const SubgraphModel& phi0) {
	if (phi0.size() != h.n()) throw input_error("separated extension: model size differs from pattern order");
	for (int v : t.d)
		if (!phi0.defined(v)) throw input_error("separated extension: separator not assigned");
	if (!set_intersection(t.d, t.a_side).empty()) throw input_error("separated extension: A meets D");
	const VertexSet b = b_side_of(h, t);
	for (auto side : {&t.a_side, &b})
		for (int u : *side)
			for (int w : h.neighbors(u))
				if (contains(*side, w)) throw input_error("separated extension: H - D is not bipartite with these sides");
}

// Places (A ∪ B_N) \ P0 by lexicographic enumeration, then the remaining
// B-vertices (universal to D) are matched inside the common neighbourhood of phi(D).
inline std::optional<SubgraphModel> extend_separated_model(const Graph& g, const Graph& h, const SeparatedTask& t,
                                                           const SubgraphModel& phi0, const VertexSet& forbidden = {}) {
	check_task(h, t, phi0);
	if (h.n() > g.n()) return std::nullopt;
	if (!validate_model(h, g, phi0)) return std::nullopt;
	VertexSet b_n = non_universal_to(h, t.d, b_side_of(h, t));
	VertexSet todo;
	for (int v : set_union(t.a_side, b_n))
		if (!phi0.defined(v)) todo.push_back(v);

	std::vector<char> blocked(g.n(), 0);
	for (int x : forbidden) blocked[x] = 1;
	VertexSet cn = common_neighborhood(g, phi0.image_of(t.d));
	VertexSet outside = set_difference(iota_set(g.n()), cn);

	SubgraphModel phi = phi0;
	std::vector<char> used(g.n(), 0);
	for (int v = 0; v < h.n(); ++v)
		if (phi.defined(v)) used[phi[v]] = 1;
	std::optional<SubgraphModel> found;
	std::function<bool(std::size_t)> rec = [&](std::size_t i) {
		if (i == todo.size()) {
			// free B_U vertices may only use the common neighbourhood of phi(D)
			VertexSet block = forbidden;
			for (int x : outside) block.push_back(x);
			found = extend_bipartite_model(g, h, phi, normalized(block));
			return found.has_value();
		}
		int v = todo[i];
		for (int x = 0; x < g.n(); ++x) {
			if (used[x] || blocked[x]) continue;
			bool ok = true;
			for (int w : h.neighbors(v))
				if (phi.defined(w) && !g.has_edge(phi[w], x)) {
					ok = false;
					break;
				}
			if (!ok) continue;
			phi[v] = x;
			used[x] = 1;
			bool stop = rec(i + 1);
			used[x] = 0;
			phi[v] = -1;
			if (stop) return true;
		}
		return false;
	};
	rec(0);
	return found;
}

// Colour of a singleton piece with S-neighbourhood X is 1 + iota(X), iota the
// binary encoding over sorted positions in S. Pair pieces get colours past 2^|S|.
inline std::optional<SubgraphModel> matching_splittable_test(const Graph& g, const Graph& h, int c,
                                                             const RandomnessConfig& rc = {}) {
	auto s_opt = is_matching_splittable(h, c);
	if (!s_opt) throw input_error("matching_splittable_test: pattern is not c-matching-splittable");
	if (h.n() > g.n()) return std::nullopt;
	const VertexSet s = *s_opt;
	const int k = static_cast<int>(s.size());
	const unsigned types = 1u << k;
	auto type_of = [&](const std::function<bool(int)>& adj_to) {
		unsigned x = 0;
		for (int i = 0; i < k; ++i)
			if (adj_to(i)) x |= 1u << i;
		return x;
	};
	auto pair_color = [&](unsigned i, unsigned j) {
		if (i > j) std::swap(i, j);
		return static_cast<int>(1 + types + i * types + j);
	};

	std::map<int, int> demand;
	std::vector<std::pair<int, unsigned>> singles;
	std::vector<std::array<int, 2>> pairs;
	for (auto& comp : components_within(h, set_difference(iota_set(h.n()), s))) {
		auto ty = [&](int v) { return type_of([&](int i) { return h.has_edge(v, s[i]); }); };
		if (comp.size() == 1) {
			singles.push_back({comp[0], ty(comp[0])});
			++demand[1 + static_cast<int>(ty(comp[0]))];
		} else {
			pairs.push_back({comp[0], comp[1]});
			++demand[pair_color(ty(comp[0]), ty(comp[1]))];
		}
	}

	SubgraphModel phi(h.n());
	std::vector<char> used(g.n(), 0);
	std::optional<SubgraphModel> found;
	auto attempt = [&]() -> bool {
		// host vertices outside phi(S) and their copies n'+i
		VertexSet rest;
		for (int x = 0; x < g.n(); ++x)
			if (!used[x]) rest.push_back(x);
		int r = static_cast<int>(rest.size());
		std::vector<unsigned> nb(r);
		for (int i = 0; i < r; ++i)
			nb[i] = type_of([&](int j) { return g.has_edge(rest[i], phi[s[j]]); });
		Multigraph mg{2 * r, {}};
		std::vector<std::array<int, 3>> info;  // kind (0 single,1 pair), endpoint i, endpoint j
		for (int i = 0; i < r; ++i)
			for (unsigned x = 0; x < types; ++x)
				if ((x & nb[i]) == x && demand.count(1 + static_cast<int>(x))) {
					mg.add_edge(i, r + i, 0, 1 + static_cast<int>(x));
					info.push_back({0, i, static_cast<int>(x)});
				}
		for (int i = 0; i < r; ++i)
			for (int j = i + 1; j < r; ++j) {
				if (!g.has_edge(rest[i], rest[j])) continue;
				for (unsigned x = 0; x < types; ++x)
					for (unsigned y = x; y < types; ++y) {
						if (!demand.count(pair_color(x, y))) continue;
						bool fwd = (x & nb[i]) == x && (y & nb[j]) == y;
						bool bwd = (y & nb[i]) == y && (x & nb[j]) == x;
						if (!fwd && !bwd) continue;
						mg.add_edge(i, j, 0, pair_color(x, y));
						info.push_back({1, i, j});
					}
			}
		auto m = colored_matching(mg, demand, rc);
		if (!m) return false;
		SubgraphModel out = phi;
		std::map<int, std::vector<int>> pool;  // colour -> host slots used
		for (int ei : *m) {
			const auto& e = mg.edges[ei];
			pool[e.color].push_back(ei);
		}
		for (auto [v, x] : singles) {
			auto& lst = pool[1 + static_cast<int>(x)];
			out[v] = rest[info[lst.back()][1]];
			lst.pop_back();
		}
		for (auto pr : pairs) {
			auto ty = [&](int v) { return type_of([&](int i) { return h.has_edge(v, s[i]); }); };
			unsigned x = ty(pr[0]), y = ty(pr[1]);
			auto& lst = pool[pair_color(x, y)];
			int i = info[lst.back()][1], j = info[lst.back()][2];
			lst.pop_back();
			if ((x & nb[i]) == x && (y & nb[j]) == y)
				out[pr[0]] = rest[i], out[pr[1]] = rest[j];
			else
				out[pr[0]] = rest[j], out[pr[1]] = rest[i];
		}
		if (!is_full_model(h, g, out)) throw std::logic_error("matching_splittable_test: reconstructed model invalid");
		found = out;
		return true;
	};

	// placements of S, lexicographic over host ids
	std::function<bool(int)> place = [&](int i) {
		if (i == k) return attempt();
		for (int x = 0; x < g.n(); ++x) {
			if (used[x]) continue;
			bool ok = true;
			for (int j = 0; j < i; ++j)
				if (h.has_edge(s[i], s[j]) && !g.has_edge(phi[s[j]], x)) ok = false;
			if (!ok) continue;
			phi[s[i]] = x;
			used[x] = 1;
			bool stop = place(i + 1);
			used[x] = 0;
			phi[s[i]] = -1;
			if (stop) return true;
		}
		return false;
	};
	place(0);
	return found;
}

// pieces of H - c: k1 single leaves, k2 two-vertex legs (middle first)
struct StarShape {
	VertexSet leaves;
	std::vector<std::pair<int, int>> legs;
};

inline std::optional<StarShape> star_shape(const Graph& h, int center) {
	if (center < 0 || center >= h.n() || !is_connected(h)) return std::nullopt;
	StarShape sh;
	for (auto& comp : components_within(h, set_difference(iota_set(h.n()), {center}))) {
		if (comp.size() == 1) {
			sh.leaves.push_back(comp[0]);
			continue;
		}
		if (comp.size() != 2) return std::nullopt;
		bool a = h.has_edge(center, comp[0]), b = h.has_edge(center, comp[1]);
		if (a && b) return std::nullopt;
		sh.legs.push_back(a ? std::pair{comp[0], comp[1]} : std::pair{comp[1], comp[0]});
	}
	return sh;
}

// a model of a star with edges subdivided at most once, centre mapped to v
inline std::optional<SubgraphModel> centered_star_model(const Graph& g, const Graph& h, int center, int v,
                                                        const RandomnessConfig& rc = {}) {
	auto sh = star_shape(h, center);
	if (!sh) throw input_error("centered_star_model: pattern is not a star with edges subdivided at most once");
	g.check_vertex(v);
	int k1 = static_cast<int>(sh->leaves.size()), k2 = static_cast<int>(sh->legs.size());
	if (g.degree(v) < h.degree(center)) return std::nullopt;
	const auto& nv = g.neighbors(v);
	Multigraph gc{g.n(), {}};
	for (auto [x, y] : g.edges()) {
		if (x == v || y == v) continue;
		int w = contains(nv, x) + contains(nv, y);
		if (w > 0) gc.add_edge(x, y, w);
	}
	auto m = min_weight_matching_of_size(gc, k2, rc);
	if (!m) return std::nullopt;
	std::int64_t wc = 0;
	std::vector<char> used(g.n(), 0);
	used[v] = 1;
	SubgraphModel phi(h.n());
	phi[center] = v;
	for (int i = 0; i < k2; ++i) {
		const auto& e = gc.edges[(*m)[i]];
		wc += e.weight;
		int mid = contains(nv, e.u) ? e.u : e.v, leaf = mid == e.u ? e.v : e.u;
		phi[sh->legs[i].first] = mid;
		phi[sh->legs[i].second] = leaf;
		used[mid] = used[leaf] = 1;
	}
	if (g.degree(v) - wc < k1) return std::nullopt;
	int i = 0;
	for (int x : nv)
		if (i < k1 && !used[x]) phi[sh->leaves[i++]] = x;
	if (i < k1 || !is_full_model(h, g, phi)) throw std::logic_error("centered_star_model: leaf assignment failed");
	return phi;
}

}  // namespace pgk
