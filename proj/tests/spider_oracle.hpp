#pragma once
// Exhaustive test oracle for patterns made of subdivided stars ("spiders", every leg two edges)
// plus copies of K3 or P3. One spider may be checked through a maximum matching instead of
// enumeration: legs at c are disjoint edges with an endpoint in N(c), avoiding c.
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>
#include <functional>
#include <set>

#include "pgk/graph.hpp"

namespace th {

struct SpiderForest {
	std::vector<int> spiders;  // leg counts, enumerated explicitly
	int matched_legs = -1;     // leg count of the spider left to matching, -1 for none
	bool triangles = true;     // copies are K3, otherwise P3
	int copies = 0;
};

inline int legs_available(const pgk::Graph& g, int c, const std::vector<char>& used) {
	using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
	BG bg(g.n());
	for (int x : g.neighbors(c)) {
		if (used[x]) continue;
		for (int y : g.neighbors(x))
			if (y != c && !used[y]) boost::add_edge(x, y, bg);
	}
	std::vector<boost::graph_traits<BG>::vertex_descriptor> mate(g.n());
	boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
	return static_cast<int>(boost::matching_size(bg, &mate[0]));
}

inline bool spider_forest_in(const pgk::Graph& g, SpiderForest f) {
	const int n = g.n();
	std::sort(f.spiders.rbegin(), f.spiders.rend());
	std::vector<char> used(n, 0);

	std::set<pgk::VertexSet> trip;
	for (int b = 0; b < n; ++b) {
		const auto& nb = g.neighbors(b);
		for (std::size_t i = 0; i < nb.size(); ++i)
			for (std::size_t j = i + 1; j < nb.size(); ++j)
				if (!f.triangles || g.has_edge(nb[i], nb[j])) trip.insert(pgk::normalized({b, nb[i], nb[j]}));
	}
	std::vector<pgk::VertexSet> triples(trip.begin(), trip.end());

	std::vector<int> centers;
	if (f.matched_legs >= 0)
		for (int c = 0; c < n; ++c)
			if (legs_available(g, c, used) >= f.matched_legs) centers.push_back(c);

	auto matched_ok = [&]() {
		if (f.matched_legs < 0) return true;
		for (int c : centers)
			if (!used[c] && legs_available(g, c, used) >= f.matched_legs) return true;
		return false;
	};

	std::function<bool(std::size_t, int)> copies = [&](std::size_t from, int left) -> bool {
		if (left == 0) return matched_ok();
		if (!matched_ok()) return false;
		int avail = 0;
		for (std::size_t i = from; i < triples.size() && avail < left; ++i) {
			const auto& t = triples[i];
			avail += !used[t[0]] && !used[t[1]] && !used[t[2]];
		}
		if (avail < left) return false;
		for (std::size_t i = from; i < triples.size(); ++i) {
			const auto& t = triples[i];
			if (used[t[0]] || used[t[1]] || used[t[2]]) continue;
			for (int v : t) used[v] = 1;
			bool ok = copies(i + 1, left - 1);
			for (int v : t) used[v] = 0;
			if (ok) return true;
		}
		return false;
	};

	// spider si, centre c, legs placed so far with middles above `after`
	std::function<bool(std::size_t, int)> spider = [&](std::size_t si, int min_center) -> bool {
		if (si == f.spiders.size()) return copies(0, f.copies);
		if (!matched_ok()) return false;
		bool same_as_prev = si > 0 && f.spiders[si - 1] == f.spiders[si];
		for (int c = same_as_prev ? min_center + 1 : 0; c < n; ++c) {
			if (used[c] || g.degree(c) < f.spiders[si]) continue;
			used[c] = 1;
			std::function<bool(int, int)> legs = [&](int left, int after) -> bool {
				if (!matched_ok()) return false;
				if (left == 0) return spider(si + 1, c);
				for (int x : g.neighbors(c)) {
					if (x <= after || used[x]) continue;
					used[x] = 1;
					for (int y : g.neighbors(x)) {
						if (used[y]) continue;
						used[y] = 1;
						bool ok = legs(left - 1, x);
						used[y] = 0;
						if (ok) {
							used[x] = 0;
							return true;
						}
					}
					used[x] = 0;
				}
				return false;
			};
			bool ok = legs(f.spiders[si], -1);
			used[c] = 0;
			if (ok) return true;
		}
		return false;
	};
	return spider(0, -1);
}

}  // namespace th
