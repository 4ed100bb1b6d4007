#pragma once
#include <map>

#include "graph.hpp"

namespace pgk {

struct Sunflower {
	VertexSet core;
	std::vector<int> members;  // indices into the input family
};

// every pairwise intersection equals the same core
inline bool is_sunflower(const std::vector<VertexSet>& family, const Sunflower& sf) {
	for (std::size_t i = 0; i < sf.members.size(); ++i)
		for (std::size_t j = i + 1; j < sf.members.size(); ++j)
			if (set_intersection(family[sf.members[i]], family[sf.members[j]]) != sf.core) return false;
	for (int i : sf.members)
		for (int x : sf.core)
			if (!contains(family[i], x)) return false;
	std::vector<int> m = sf.members;
	std::sort(m.begin(), m.end());
	return std::adjacent_find(m.begin(), m.end()) == m.end();
}

namespace detail {

struct SunflowerSearch {
	int k;
	long long budget;

	std::optional<std::vector<int>> run(const std::vector<std::pair<VertexSet, int>>& items) {
		std::vector<int> chosen;
		std::vector<char> hit;
		VertexSet uni;
		for (std::size_t i = 0; i < items.size(); ++i) {
			if (!set_intersection(uni, items[i].first).empty()) continue;
			chosen.push_back(static_cast<int>(i));
			uni = set_union(uni, items[i].first);
			if (static_cast<int>(chosen.size()) == k) {
				std::vector<int> out;
				for (int c : chosen) out.push_back(items[c].second);
				return out;
			}
		}
		// every set meets uni; descend on frequent elements, most frequent first
		std::map<int, int> freq;
		for (auto& [s, idx] : items)
			for (int x : s)
				if (contains(uni, x)) ++freq[x];
		std::vector<std::pair<int, int>> order;
		for (auto [x, f] : freq)
			if (f >= k) order.push_back({-f, x});
		std::sort(order.begin(), order.end());
		bool first = true;
		for (auto [negf, x] : order) {
			if (!first && --budget < 0) break;
			first = false;
			std::vector<std::pair<VertexSet, int>> sub;
			for (auto& [s, idx] : items)
				if (contains(s, x)) sub.push_back({set_difference(s, {x}), idx});
			if (auto r = run(sub)) return r;
		}
		return std::nullopt;
	}
};

}  // namespace detail

// Greedy Erdős–Rado search with bounded fallback over other frequent elements.
inline std::optional<Sunflower> find_sunflower(const std::vector<VertexSet>& family, int k,
                                               long long fallback_budget = 10000) {
	if (k < 1) throw input_error("find_sunflower: need k >= 1");
	std::vector<std::pair<VertexSet, int>> items;
	for (int i = 0; i < static_cast<int>(family.size()); ++i) items.push_back({normalized(family[i]), i});
	detail::SunflowerSearch s{k, fallback_budget};
	auto r = s.run(items);
	if (!r) return std::nullopt;
	Sunflower sf;
	sf.members = *r;
	sf.core = family[sf.members[0]];
	for (int i : sf.members) sf.core = set_intersection(sf.core, normalized(family[i]));
	return sf;
}

inline long double sunflower_threshold(int m, int k) {
	long double f = 1;
	for (int i = 2; i <= m; ++i) f *= i;
	for (int i = 0; i < m; ++i) f *= (k - 1);
	return f;
}

}  // namespace pgk
