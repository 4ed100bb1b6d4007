#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "pgk/families.hpp"
#include "pgk/oracle.hpp"

using namespace pgk;

TEST(Oracle, Examples) {
	EXPECT_TRUE(brute_subgraph(clique(4), clique(3)));
	Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
	EXPECT_FALSE(brute_subgraph(c5, clique(3)));

	Graph g = star_graph(3);
	g.add_vertex();
	g.add_edge(1, 4);
	SubgraphModel pin(4);
	pin[0] = 1;
	EXPECT_FALSE(brute_subgraph(g, star_graph(3), pin));
	pin[0] = 0;
	auto m = brute_subgraph(g, star_graph(3), pin);
	ASSERT_TRUE(m);
	EXPECT_TRUE(m->extends(pin));

	EXPECT_TRUE(brute_packing(disjoint_copies(clique(3), 2), clique(3), 2));
	EXPECT_FALSE(brute_packing(clique(4), clique(3), 2));
}

TEST(Oracle, BudgetIsExplicit) {
	EXPECT_THROW(brute_subgraph(Graph(19), clique(2)), resource_error);
	EXPECT_THROW(brute_subgraph(Graph(18), Graph(15)), resource_error);
	OracleBudget tiny;
	tiny.node_cap = 5;
	EXPECT_THROW(brute_subgraph(disjoint_copies(clique(3), 5), disjoint_copies(path_graph(2), 5), {}, tiny),
	             resource_error);
}

TEST(Oracle, MatchesFullMappingSweep) {
	std::mt19937_64 rng(21);
	for (int trial = 0; trial < 1500; ++trial) {
		int gn = th::uniform(rng, 1, 8), hn = th::uniform(rng, 1, std::min(gn, 5));
		auto g = th::random_graph(rng, gn, 0.5);
		auto h = th::random_graph(rng, hn, 0.4);
		SubgraphModel pins(hn);
		if (trial % 3 == 0) pins[th::uniform(rng, 0, hn - 1)] = th::uniform(rng, 0, gn - 1);
		bool expect = th::sweep_has_model(g, h, pins);
		auto got = brute_subgraph(g, h, pins);
		ASSERT_EQ(got.has_value(), expect) << to_text(g) << "--\n" << to_text(h);
		if (got) {
			EXPECT_TRUE(got->extends(pins));
		}
	}
}

// Patterns rich in swappable structure: twins, identical components, pendant
// legs, nested copies. Symmetry breaking must never change the answer.
TEST(Oracle, SymmetryBreakingIsExhaustive) {
	std::mt19937_64 rng(22);
	std::vector<Graph> patterns = {
	    disjoint_copies(path_graph(2), 3),
	    disjoint_copies(clique(3), 2),
	    family_graph(Kind::subdiv_star, 3),
	    family_graph(Kind::diamond_fan, 2),
	    family_graph(Kind::subdiv_tree, 2, 1),
	    family_graph(Kind::fountain, 3, 3),
	    biclique(2, 3),
	    disjoint_union(family_graph(Kind::subdiv_star, 2), disjoint_copies(path_graph(2), 2)),
	    disjoint_union(star_graph(3), star_graph(3)),
	    family_graph(Kind::double_broom, 2, 2),
	    family_graph(Kind::opera_house, 3, 2),
	};
	for (int trial = 0; trial < 600; ++trial) {
		const Graph& h = patterns[trial % patterns.size()];
		int gn = th::uniform(rng, h.n(), h.n() + 3);
		auto g = th::random_graph(rng, gn, 0.35 + 0.3 * (trial % 3) / 2.0);
		SubgraphSearch plain(g, h, {}, {false, 1'000'000'000});
		SubgraphSearch sym(g, h, {}, {true, 1'000'000'000});
		ASSERT_EQ(plain.first().has_value(), sym.first().has_value()) << to_text(g) << "--\n" << to_text(h);
	}
}

TEST(Oracle, SymmetryEnumeratesEveryImageSet) {
	std::mt19937_64 rng(23);
	auto h = disjoint_union(star_graph(2), star_graph(2));
	for (int trial = 0; trial < 100; ++trial) {
		auto g = th::random_graph(rng, 8, 0.5);
		std::set<VertexSet> a, b;
		SubgraphSearch(g, h, {}, {false, 1'000'000'000}).run([&](const SubgraphModel& m) {
			a.insert(m.image_set());
			return false;
		});
		SubgraphSearch(g, h, {}, {true, 1'000'000'000}).run([&](const SubgraphModel& m) {
			b.insert(m.image_set());
			return false;
		});
		EXPECT_EQ(a, b);
	}
}

namespace {

// independent packing check: collect every vertex set carrying a copy of H,
// then look for t pairwise disjoint ones
bool packing_by_hitting(const Graph& g, const Graph& h, int t) {
	std::set<VertexSet> copies;
	SubgraphSearch(g, h, {}, {false, 1'000'000'000}).run([&](const SubgraphModel& m) {
		copies.insert(m.image_set());
		return false;
	});
	std::vector<VertexSet> list(copies.begin(), copies.end());
	std::vector<char> used(g.n(), 0);
	std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int left) {
		if (left == 0) return true;
		for (std::size_t j = i; j < list.size(); ++j) {
			if (std::any_of(list[j].begin(), list[j].end(), [&](int v) { return used[v]; })) continue;
			for (int v : list[j]) used[v] = 1;
			bool ok = rec(j + 1, left - 1);
			for (int v : list[j]) used[v] = 0;
			if (ok) return true;
		}
		return false;
	};
	return rec(0, t);
}

}  // namespace

TEST(Oracle, PackingAgreesWithHittingRecursion) {
	std::mt19937_64 rng(24);
	std::vector<Graph> hs = {clique(3), path_graph(2), star_graph(3), biclique(2, 2)};
	for (int trial = 0; trial < 200; ++trial) {
		const Graph& h = hs[trial % hs.size()];
		auto g = th::random_graph(rng, th::uniform(rng, 6, 11), 0.35);
		int t = th::uniform(rng, 1, 3);
		EXPECT_EQ(brute_packing(g, h, t), packing_by_hitting(g, h, t));
	}
}

TEST(Oracle, ExactCover) {
	SetSystem part{6, {{0, 1}, {2, 3, 4}, {5}, {1, 2}}};
	EXPECT_TRUE(brute_exact_cover(part));
	SetSystem missing{3, {{0, 1}, {1}}};
	EXPECT_FALSE(brute_exact_cover(missing));

	// inclusion-exclusion recount over subfamilies for small random systems
	std::mt19937_64 rng(25);
	for (int trial = 0; trial < 300; ++trial) {
		SetSystem s;
		s.universe = th::uniform(rng, 1, 7);
		int k = th::uniform(rng, 0, 8);
		for (int i = 0; i < k; ++i) {
			VertexSet set;
			for (int x = 0; x < s.universe; ++x)
				if (rng() % 3 == 0) set.push_back(x);
			if (!set.empty()) s.sets.push_back(set);
		}
		bool expect = false;
		for (int mask = 0; mask < (1 << s.sets.size()); ++mask) {
			std::vector<int> cnt(s.universe, 0);
			for (std::size_t i = 0; i < s.sets.size(); ++i)
				if (mask >> i & 1)
					for (int x : s.sets[i]) ++cnt[x];
			if (std::all_of(cnt.begin(), cnt.end(), [](int c) { return c == 1; })) expect = true;
		}
		EXPECT_EQ(brute_exact_cover(s), expect);
	}
}

TEST(Oracle, ColoredMatchingBasics) {
	Multigraph g{2, {}};
	g.add_edge(0, 1, 0, 1);
	EXPECT_TRUE(brute_colored_matching(g, {{1, 1}}));
	Multigraph tri{3, {}};
	tri.add_edge(0, 1, 0, 1), tri.add_edge(1, 2, 0, 1), tri.add_edge(0, 2, 0, 1);
	EXPECT_FALSE(brute_colored_matching(tri, {{1, 2}}));
}
