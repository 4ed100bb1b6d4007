#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "pgk/families.hpp"
#include "pgk/oracle.hpp"
#include "pgk/repsets.hpp"

using namespace pgk;

namespace {

// is there a model of h inside g[allowed] that agrees with pins?
bool model_within(const Graph& g, const Graph& h, const SubgraphModel& pins, const VertexSet& allowed) {
	auto ind = induced_subgraph(g, allowed);
	SubgraphModel p(h.n());
	for (int v = 0; v < h.n(); ++v) {
		if (!pins.defined(v)) continue;
		if (ind.to_new[pins[v]] < 0) return false;
		p[v] = ind.to_new[pins[v]];
	}
	return th::sweep_has_model(ind.graph, h, p);
}

// for every Z with |Z| <= ell: a model in G - Z extending phi0 implies one in G[X] - Z agreeing on `keep`
void expect_preserved(const Graph& g, const Graph& h, const SubgraphModel& phi0, const VertexSet& keep,
                      const VertexSet& x, int ell, const std::string& what) {
	SubgraphModel anchor = phi0.restricted(keep);
	th::for_each_subset(g.n(), ell, [&](const VertexSet& z) {
		VertexSet rest = set_difference(iota_set(g.n()), z);
		if (!model_within(g, h, phi0, rest)) return;
		EXPECT_TRUE(model_within(g, h, anchor, set_difference(x, z))) << what << " Z size " << z.size();
	});
}

bool has_biclique(const Graph& g, int b, int l, const VertexSet& allowed) {
	bool found = false;
	th::for_each_subset(static_cast<int>(allowed.size()), b, [&](const VertexSet& pos) {
		if (found || static_cast<int>(pos.size()) != b) return;
		VertexSet side;
		for (int i : pos) side.push_back(allowed[i]);
		int cnt = 0;
		for (int w : allowed) {
			if (contains(side, w)) continue;
			bool all = true;
			for (int u : side) all = all && g.has_edge(u, w);
			cnt += all;
		}
		if (cnt >= l) found = true;
	});
	return found;
}

}  // namespace

TEST(Sunflower, LargeUniformFamilies) {
	std::mt19937_64 rng(51);
	for (int trial = 0; trial < 100; ++trial) {
		int k = 2 + trial % 4;
		long long need = static_cast<long long>(sunflower_threshold(3, k)) + 1;
		std::set<VertexSet> fam;
		while (static_cast<long long>(fam.size()) < need) {
			VertexSet s;
			while (s.size() < 3) {
				int x = th::uniform(rng, 0, 39);
				if (!contains(s, x)) s = set_union(s, {x});
			}
			fam.insert(s);
		}
		std::vector<VertexSet> v(fam.begin(), fam.end());
		std::shuffle(v.begin(), v.end(), rng);
		auto sf = find_sunflower(v, k);
		ASSERT_TRUE(sf) << "k=" << k;
		EXPECT_EQ(static_cast<int>(sf->members.size()), k);
		EXPECT_TRUE(is_sunflower(v, *sf));
	}
}

TEST(Sunflower, CoresAndEdgeCases) {
	std::vector<VertexSet> disjoint{{0, 1}, {2, 3}, {4, 5}};
	auto sf = find_sunflower(disjoint, 3);
	ASSERT_TRUE(sf);
	EXPECT_TRUE(sf->core.empty());

	std::vector<VertexSet> cored{{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 5, 6}};
	sf = find_sunflower(cored, 3);
	ASSERT_TRUE(sf);
	EXPECT_EQ(sf->core, (VertexSet{0, 1}));
	EXPECT_TRUE(is_sunflower(cored, *sf));

	// k - 1 singletons meet the stated threshold for m = 1 and still have no k-sunflower
	std::vector<VertexSet> singles{{0}, {1}, {2}};
	EXPECT_EQ(sunflower_threshold(1, 4), 3.0L);
	EXPECT_FALSE(find_sunflower(singles, 4));

	Sunflower bad{{0}, {0, 1}};
	EXPECT_FALSE(is_sunflower(cored, bad));
	EXPECT_THROW(find_sunflower(singles, 0), input_error);
}

TEST(RepsetSmall, PreservesModels) {
	std::mt19937_64 rng(52);
	Graph paw(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
	for (int trial = 0; trial < 30; ++trial) {
		auto g = th::random_graph(rng, 9, 0.45);
		SubgraphModel phi0(4);
		phi0[0] = th::uniform(rng, 0, 8);
		int ell = 1 + trial % 2;
		auto x = repset_small(g, paw, {0}, ell, phi0);
		EXPECT_TRUE(contains(x, phi0[0]));
		expect_preserved(g, paw, phi0, {0}, x, ell, "paw");
	}
}

TEST(RepsetSmall, SunflowerShrinksDenseHosts) {
	// a hub adjacent to everything: many petals share nothing, so most are dropped
	Graph g(20);
	for (int v = 1; v < 20; ++v) g.add_edge(0, v);
	SubgraphModel phi0(3);
	phi0[0] = 0;
	auto x = repset_small(g, star_graph(2), {0}, 1, phi0);
	EXPECT_LT(x.size(), 20u);
	EXPECT_LE(static_cast<long double>(x.size()), repset_small_bound(3, 2, 1));
	expect_preserved(g, star_graph(2), phi0, {0}, x, 1, "hub");
}

TEST(RepsetThin, PreservesModelsWithoutSeparator) {
	std::mt19937_64 rng(53);
	auto k23 = biclique(2, 3);
	for (int trial = 0; trial < 20; ++trial) {
		auto g = th::random_graph(rng, 10, 0.55);
		ThinRepsetCall call{{}, {0, 1}, 1 + trial % 2};
		auto x = repset_thin(g, k23, call, SubgraphModel(5));
		expect_preserved(g, k23, SubgraphModel(5), {}, x, call.ell, "K23");
	}
}

TEST(RepsetThin, PreservesModelsWithSeparator) {
	std::mt19937_64 rng(54);
	// d = 0 sees a = 1 and b1 = 2; b2 = 3 hangs off a and is not universal to d
	Graph h(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}});
	for (int trial = 0; trial < 30; ++trial) {
		auto g = th::random_graph(rng, 10, 0.4);
		SubgraphModel phi0(4);
		phi0[0] = th::uniform(rng, 0, 9);
		ThinRepsetCall call{{0}, {1}, 2};
		ThinRepset tr(g, h, call);
		EXPECT_EQ(tr.measure(phi0), 1 + 1 + 1);
		auto x = tr.run(phi0);
		expect_preserved(g, h, phi0, {0}, x, call.ell, "pendant");
	}
}

TEST(RepsetThin, RejectsBadShapes) {
	Graph g = clique(5);
	EXPECT_THROW(repset_thin(g, clique(3), {{}, {0}, 1}, SubgraphModel(3)), input_error);
	EXPECT_THROW(repset_thin(g, star_graph(3), {{}, {}, 1}, SubgraphModel(4)), input_error);
	EXPECT_THROW(repset_thin(g, disjoint_copies(clique(2), 2), {{}, {0, 2}, 1}, SubgraphModel(4)), input_error);
}

TEST(RepsetBiclique, PreservesBicliques) {
	std::mt19937_64 rng(55);
	const int b = 2, l = 3, k = 5;
	for (int trial = 0; trial < 8; ++trial) {
		auto g = th::random_graph(rng, 11, 0.5);
		auto x = repset_biclique(g, b, l, k);
		th::for_each_subset(g.n(), 3, [&](const VertexSet& z) {
			VertexSet rest = set_difference(iota_set(g.n()), z);
			if (has_biclique(g, b, l, rest)) {
				EXPECT_TRUE(has_biclique(g, b, l, set_difference(x, z)));
			}
		});
	}
	EXPECT_THROW(repset_biclique(clique(4), 2, 2, 5), input_error);
	EXPECT_THROW(repset_biclique(clique(4), 2, 3, 4), input_error);
}

TEST(GenericRepset, PackingOfTwoStars) {
	std::mt19937_64 rng(56);
	auto h = disjoint_copies(star_graph(3), 2);
	for (int trial = 0; trial < 6; ++trial) {
		auto g = th::random_graph(rng, 11, 0.35);
		auto r = generic_repset(g, h, {}, SubgraphModel(h.n()), 1, 1, 0);
		EXPECT_LE(static_cast<long double>(r.x.size()), r.bound);
		EXPECT_EQ(brute_subgraph(g, h).has_value(), brute_subgraph(induced_subgraph(g, r.x).graph, h).has_value());
	}
}

TEST(GenericRepset, PinnedSeparator) {
	std::mt19937_64 rng(57);
	auto h = family_graph(Kind::fountain, 2);
	auto cert = find_split(h, 3, 0, 1, 2);
	ASSERT_TRUE(cert);
	for (int trial = 0; trial < 10; ++trial) {
		auto g = th::random_graph(rng, 10, 0.45);
		for (int v = 0; v < g.n(); ++v) {
			SubgraphModel phi0(h.n());
			for (int s : cert->s) phi0[s] = v;
			auto r = generic_repset(g, h, cert->s, phi0, 3, 0, 2);
			bool full = th::sweep_has_model(g, h, phi0);
			EXPECT_EQ(full, model_within(g, h, phi0, r.x));
		}
	}
	EXPECT_THROW(generic_repset(clique(4), h, {}, SubgraphModel(h.n()), 0, 0, 0), input_error);
}

TEST(Bounds, ViolationThrows) {
	long long before = bound_checks();
	EXPECT_THROW(assert_bound(5, 4, "x"), bound_violation);
	EXPECT_NO_THROW(assert_bound(4, 4, "x"));
	EXPECT_EQ(bound_checks(), before + 2);
}

TEST(RepsetThin, ShrinksLargerHosts) {
	std::mt19937_64 rng(58);
	auto h = star_graph(3);
	int smaller = 0;
	for (int trial = 0; trial < 10; ++trial) {
		auto g = th::random_graph(rng, 24, 0.3);
		ThinRepsetCall call{{}, {0}, 1};
		auto x = repset_thin(g, h, call, SubgraphModel(4));
		smaller += x.size() < 24u;
		expect_preserved(g, h, SubgraphModel(4), {}, x, 1, "claw");
	}
	EXPECT_GE(smaller, 5);
}
