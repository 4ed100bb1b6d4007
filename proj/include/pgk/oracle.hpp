#pragma once
#include <map>

#include "search.hpp"
#include "setsystem.hpp"

namespace pgk {

struct OracleBudget {
	int max_host = 18;
	int max_pattern = 14;
	long long node_cap = 200'000'000;
};

inline void check_budget(const Graph& g, const Graph& h, const OracleBudget& b) {
	if (g.n() > b.max_host)
		throw resource_error("oracle: host has " + std::to_string(g.n()) + " vertices, budget " +
		                     std::to_string(b.max_host));
	if (h.n() > b.max_pattern)
		throw resource_error("oracle: pattern has " + std::to_string(h.n()) + " vertices, budget " +
		                     std::to_string(b.max_pattern));
}

inline std::optional<SubgraphModel> brute_subgraph(const Graph& g, const Graph& h, const SubgraphModel& pins = {},
                                                   const OracleBudget& b = {}) {
	check_budget(g, h, b);
	SubgraphSearch s(g, h, pins, {true, b.node_cap});
	auto r = s.first();
	if (r && (!r->extends(pins) || !is_full_model(h, g, *r))) throw std::logic_error("oracle produced a bad model");
	return r;
}

inline bool brute_packing(const Graph& g, const Graph& h, int t, const OracleBudget& b = {}) {
	if (t < 0) throw input_error("negative packing count");
	if (static_cast<long long>(t) * h.n() > g.n()) return false;
	return brute_subgraph(g, disjoint_copies(h, t), {}, b).has_value();
}

inline bool brute_exact_cover(const SetSystem& s, long long node_cap = 100'000'000) {
	s.validate();
	std::vector<std::vector<int>> covering(s.universe);
	for (std::size_t i = 0; i < s.sets.size(); ++i)
		for (int x : s.sets[i]) covering[x].push_back(static_cast<int>(i));
	std::vector<char> covered(s.universe, 0);
	long long nodes = 0;
	std::function<bool()> rec = [&]() {
		if (++nodes > node_cap) throw resource_error("exact cover search exceeded node cap");
		int e = 0;
		while (e < s.universe && covered[e]) ++e;
		if (e == s.universe) return true;
		for (int si : covering[e]) {
			const auto& set = s.sets[si];
			if (std::any_of(set.begin(), set.end(), [&](int x) { return covered[x]; })) continue;
			for (int x : set) covered[x] = 1;
			bool ok = rec();
			for (int x : set) covered[x] = 0;
			if (ok) return true;
		}
		return false;
	};
	return rec();
}

using ColorDemand = std::map<int, int>;

// exhaustive: is there a matching with exactly f(i) edges of colour i and no other edges?
inline bool brute_colored_matching(const Multigraph& g, const ColorDemand& f) {
	std::map<int, int> need;
	int total = 0;
	for (auto [c, k] : f) {
		if (k < 0) throw input_error("negative colour demand");
		if (k > 0) need[c] = k, total += k;
	}
	if (2 * total > g.n) return false;
	std::vector<char> used(g.n, 0);
	std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int left) {
		if (left == 0) return true;
		if (i == g.edges.size()) return false;
		const auto& e = g.edges[i];
		auto it = need.find(e.color);
		if (it != need.end() && it->second > 0 && !used[e.u] && !used[e.v]) {
			used[e.u] = used[e.v] = 1;
			--it->second;
			bool ok = rec(i + 1, left - 1);
			++it->second;
			used[e.u] = used[e.v] = 0;
			if (ok) return true;
		}
		return rec(i + 1, left);
	};
	return rec(0, total);
}

}  // namespace pgk
