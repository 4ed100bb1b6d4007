#include <gtest/gtest.h>

#include "helpers.hpp"
#include "pgk/families.hpp"
#include "pgk/kernels.hpp"

using namespace pgk;

namespace {

const OracleBudget wide{24, 24, 400'000'000};

bool has(const Graph& g, const Graph& h) { return brute_subgraph(g, h, {}, wide).has_value(); }

// some model of h whose vertex `center` lands in y
bool centered_in(const Graph& g, const Graph& h, int center, const VertexSet& y) {
	for (int v : y) {
		SubgraphModel pin(h.n());
		pin[center] = v;
		if (brute_subgraph(g, h, pin, wide)) return true;
	}
	return false;
}

// subdivided star with `legs` two-vertex legs and `leaves` single leaves, centre 0
Graph spider(int legs, int leaves) {
	Graph s(1 + 2 * legs + leaves);
	int next = 1;
	for (int i = 0; i < legs; ++i, next += 2) s.add_edge(0, next), s.add_edge(next, next + 1);
	for (int i = 0; i < leaves; ++i, ++next) s.add_edge(0, next);
	return s;
}

}  // namespace

TEST(PackingKernel, PreservesAnswers) {
	std::mt19937_64 rng(61);
	struct P {
		Graph h;
		int a, b;
	};
	std::vector<P> pats{{clique(3), 3, 0}, {path_graph(2), 3, 0}, {star_graph(4), 0, 1}, {biclique(2, 3), 0, 2}};
	int yes = 0;
	for (int trial = 0; trial < 80; ++trial) {
		auto& p = pats[trial % pats.size()];
		int t = 1 + trial / 4 % 3;
		auto g = th::random_graph(rng, th::uniform(rng, 8, 13), 0.2 + 0.1 * (trial % 4));
		PackingInstance in{g, p.h, t};
		auto out = packing_kernel(in, p.a, p.b);
		bool before = brute_packing(g, p.h, t, wide);
		yes += before;
		EXPECT_EQ(before, brute_packing(out.g, out.h, out.t, wide)) << to_text(g) << " t=" << t;
		EXPECT_LE(out.g.n(), g.n());
	}
	EXPECT_GT(yes, 10);
	EXPECT_LT(yes, 75);
}

TEST(PackingKernel, EdgeCases) {
	PackingInstance in{clique(5), clique(3), 2};
	auto out = packing_kernel(in, 3, 0);
	EXPECT_EQ(out.g.n(), 0);
	EXPECT_THROW(packing_kernel({clique(5), clique(3), 0}, 3, 0), input_error);
	EXPECT_THROW(packing_kernel({clique(5), clique(4), 1}, 3, 1), input_error);
}

TEST(TuringKernel, FountainPatterns) {
	std::mt19937_64 rng(62);
	int yes = 0;
	for (int trial = 0; trial < 60; ++trial) {
		int n = 1 + trial % 3;
		auto h = disjoint_union(family_graph(Kind::fountain, n), trial % 2 ? clique(2) : path_graph(2));
		auto g = th::random_graph(rng, th::uniform(rng, 9, 12), 0.25 + 0.05 * (trial % 3));
		auto tr = turing_kernel(g, h, 3, 1, 1, 4);
		bool truth = has(g, h);
		yes += truth;
		EXPECT_EQ(tr.answer, truth) << to_text(g);
		EXPECT_EQ(tr.d.size(), 1u);
		for (auto& q : tr.queries) EXPECT_LE(static_cast<long double>(q.x.size()), q.bound);
	}
	EXPECT_GT(yes, 5);
	EXPECT_LT(yes, 55);
}

TEST(TuringKernel, EmptySplitIsOneQuery) {
	std::mt19937_64 rng(3);
	auto g = th::random_graph(rng, 10, 0.4);
	auto tr = turing_kernel(g, clique(3), 3, 0, 0, 0);
	EXPECT_TRUE(tr.d.empty());
	ASSERT_EQ(tr.queries.size(), 1u);
	EXPECT_EQ(tr.answer, has(g, clique(3)));
	int calls = 0;
	turing_kernel(g, family_graph(Kind::fountain, 2), 3, 0, 1, 2, [&](const Graph&, const Graph&) {
		++calls;
		return false;
	});
	EXPECT_GT(calls, 0);
}

TEST(RelevantCenters, StarShortcuts) {
	auto hp = star_graph(3);
	auto hpp = clique(2);
	// six vertices of degree 20 > 3k with k = 6
	auto g = biclique(6, 20);
	auto ys = relevant_centers_star(g, hp, 0, hpp);
	EXPECT_EQ(ys.y.size(), 1u);
	EXPECT_EQ(ys.route, "high-degree");

	auto none = relevant_centers_star(disjoint_copies(clique(2), 5), hp, 0, hpp);
	EXPECT_TRUE(none.y.empty());
	EXPECT_THROW(relevant_centers_star(g, clique(3), 0, hpp), input_error);
	EXPECT_THROW(relevant_centers_star(g, hp, 0, clique(3)), input_error);
}

TEST(RelevantCenters, StarGuarantee) {
	std::mt19937_64 rng(63);
	int hits = 0;
	for (int trial = 0; trial < 120; ++trial) {
		auto hp = spider(th::uniform(rng, 1, 2), th::uniform(rng, 1, 2));
		auto hpp = trial % 2 ? path_graph(2) : disjoint_union(clique(2), clique(1));
		auto g = th::random_graph(rng, th::uniform(rng, 9, 13), 0.15 + 0.05 * (trial % 4));
		auto ys = relevant_centers_star(g, hp, 0, hpp);
		int k = hp.n() + hpp.n();
		EXPECT_LE(static_cast<long double>(ys.y.size()), star_centers_bound(k));
		auto h = disjoint_union(hp, hpp);
		if (!has(g, h)) continue;
		++hits;
		EXPECT_TRUE(centered_in(g, h, 0, ys.y)) << to_text(g) << ys.route;
	}
	EXPECT_GT(hits, 20);
}

TEST(RelevantCenters, FountainTriangles) {
	auto hp = family_graph(Kind::fountain, 1);
	auto one = relevant_centers_fountain(disjoint_union(clique(3), path_graph(3)), hp, Graph(0));
	// no vertex of the lone triangle has degree 3
	EXPECT_TRUE(one.y.empty());
	Graph g = clique(3);
	g = disjoint_union(g, Graph(1));
	g.add_edge(0, 3);
	EXPECT_EQ(relevant_centers_fountain(g, hp, Graph(0)).y, (VertexSet{0, 1, 2}));

	// 560 triangles, above 6k^3 = 384 for k = 4, so stripping kicks in
	auto dense = relevant_centers_fountain(clique(16), hp, Graph(0));
	EXPECT_LE(static_cast<long double>(dense.y.size()), fountain_centers_bound(4));
	EXPECT_FALSE(dense.y.empty());
	EXPECT_THROW(relevant_centers_fountain(clique(5), star_graph(3), Graph(0)), input_error);
}

TEST(RelevantCenters, FountainGuarantee) {
	std::mt19937_64 rng(64);
	int hits = 0;
	for (int trial = 0; trial < 80; ++trial) {
		auto hp = family_graph(Kind::fountain, 1 + trial % 3);
		auto hpp = trial % 2 ? clique(3) : path_graph(2);
		auto g = th::random_graph(rng, th::uniform(rng, 9, 12), 0.3 + 0.05 * (trial % 3));
		auto ys = relevant_centers_fountain(g, hp, hpp);
		auto h = disjoint_union(hp, hpp);
		if (!has(g, h)) continue;
		++hits;
		EXPECT_TRUE(centered_in(g, h, 0, ys.y));
	}
	EXPECT_GT(hits, 15);
}

TEST(ManyOneKernels, StarPaths) {
	std::mt19937_64 rng(65);
	int yes = 0;
	for (int trial = 0; trial < 60; ++trial) {
		Graph hp = trial % 5 == 0 ? path_graph(4) : spider(th::uniform(rng, 0, 2), th::uniform(rng, 2, 3));
		auto h = disjoint_union(hp, trial % 2 ? path_graph(2) : clique(2));
		auto g = th::random_graph(rng, th::uniform(rng, 9, 13), 0.15 + 0.05 * (trial % 4));
		auto r = star_paths_kernel(g, h);
		bool truth = has(g, h);
		yes += truth;
		EXPECT_EQ(truth, has(r.g, h)) << r.route << "\n" << to_text(g);
		EXPECT_LE(static_cast<long double>(r.x.size()), std::max<long double>(r.bound, 0));
	}
	EXPECT_GT(yes, 10);
	EXPECT_LT(yes, 55);
}

TEST(ManyOneKernels, FountainTriangles) {
	std::mt19937_64 rng(66);
	int yes = 0;
	for (int trial = 0; trial < 60; ++trial) {
		Graph hp = trial % 6 == 0 ? star_graph(3) : family_graph(Kind::fountain, 1 + trial % 3);
		auto h = disjoint_union(hp, trial % 2 ? clique(3) : clique(2));
		auto g = th::random_graph(rng, th::uniform(rng, 9, 12), 0.3 + 0.05 * (trial % 3));
		auto r = fountain_triangles_kernel(g, h);
		bool truth = has(g, h);
		yes += truth;
		EXPECT_EQ(truth, has(r.g, h)) << r.route << "\n" << to_text(g);
	}
	EXPECT_GT(yes, 10);
	EXPECT_LT(yes, 55);
}

TEST(ManyOneKernels, MalformedPatternsGiveEmptyHost) {
	auto g = clique(8);
	EXPECT_EQ(star_paths_kernel(g, disjoint_union(star_graph(3), star_graph(3))).route, "malformed");
	EXPECT_EQ(star_paths_kernel(g, disjoint_union(star_graph(3), clique(3))).g.n(), 0);
	EXPECT_EQ(fountain_triangles_kernel(g, clique(4)).route, "malformed");
	EXPECT_EQ(star_paths_kernel(g, path_graph(4)).route, "small-thin");
	EXPECT_EQ(fountain_triangles_kernel(g, disjoint_union(clique(3), clique(3))).route, "small-thin");
}
