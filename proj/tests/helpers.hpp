#pragma once
#include <functional>
#include <random>

#include "pgk/graph.hpp"
#include "pgk/model.hpp"

namespace th {

inline pgk::Graph random_graph(std::mt19937_64& rng, int n, double p) {
	pgk::Graph g(n);
	std::bernoulli_distribution coin(p);
	for (int u = 0; u < n; ++u)
		for (int v = u + 1; v < n; ++v)
			if (coin(rng)) g.add_edge(u, v);
	return g;
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// every injective map, no pruning beyond injectivity
inline bool sweep_has_model(const pgk::Graph& g, const pgk::Graph& h, const pgk::SubgraphModel& pins = {}) {
	pgk::SubgraphModel phi = pins.size() ? pins : pgk::SubgraphModel(h.n());
	std::vector<char> used(g.n(), 0);
	for (int v = 0; v < h.n(); ++v)
		if (phi[v] >= 0) {
			if (used[phi[v]]) return false;
			used[phi[v]] = 1;
		}
	std::function<bool(int)> rec = [&](int v) {
		if (v == h.n()) return pgk::validate_model(h, g, phi).ok;
		if (phi[v] >= 0 && pins.size() && pins[v] >= 0) return rec(v + 1);
		for (int x = 0; x < g.n(); ++x) {
			if (used[x]) continue;
			used[x] = 1;
			phi[v] = x;
			bool ok = rec(v + 1);
			phi[v] = -1;
			used[x] = 0;
			if (ok) return true;
		}
		return false;
	};
	return rec(0);
}

// all vertex subsets of size <= k
inline void for_each_subset(int n, int k, const std::function<void(const pgk::VertexSet&)>& f) {
	pgk::VertexSet cur;
	std::function<void(int)> rec = [&](int start) {
		f(cur);
		if (static_cast<int>(cur.size()) == k) return;
		for (int v = start; v < n; ++v) {
			cur.push_back(v);
			rec(v + 1);
			cur.pop_back();
		}
	};
	rec(0);
}

}  // namespace th
