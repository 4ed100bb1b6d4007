#include <gtest/gtest.h>

#include "helpers.hpp"
#include "pgk/families.hpp"

#include <set>

using namespace pgk;

namespace {

FamilySpec spec(Kind k, int n, int s = 3, int t = 1) {
	FamilySpec sp;
	sp.kind = k;
	sp.n = n;
	sp.s = s;
	sp.t = t;
	return sp;
}

}  // namespace

TEST(Families, Examples) {
	auto p = build_family(spec(Kind::path, 3)).graph;
	EXPECT_EQ(p.n(), 4);
	EXPECT_EQ(p.m(), 3u);

	auto f = build_family(spec(Kind::fountain, 5, 3));
	EXPECT_EQ(f.graph.n(), 8);
	EXPECT_EQ(f.graph.m(), 8u);
	ASSERT_TRUE(f.center);
	EXPECT_EQ(f.graph.degree(*f.center), 7);

	for (int q = 1; q <= 8; ++q) EXPECT_EQ(build_family(spec(Kind::diamond_fan, q)).graph.n(), q * q + q + 1);
	for (int q = 1; q <= 8; ++q)
		for (int s = 1; s <= 8; ++s) EXPECT_EQ(build_family(spec(Kind::subdiv_tree, q, s)).graph.n(), q * q + q * s + 1);
}

TEST(Families, CountFormulas) {
	for (int n = 1; n <= 8; ++n) {
		EXPECT_EQ(build_family(spec(Kind::subdiv_star, n)).graph.n(), 2 * n + 1);
		for (int s = 1; s <= 8; ++s) {
			auto db = build_family(spec(Kind::double_broom, n, s)).graph;
			EXPECT_EQ(db.n(), (s + 1) + 2 * n);
			EXPECT_EQ(db.m(), static_cast<std::size_t>(s + 2 * n));
			auto oh = build_family(spec(Kind::opera_house, n, s)).graph;
			EXPECT_EQ(oh.n(), (s + 1) + n);
			EXPECT_EQ(oh.m(), static_cast<std::size_t>(s + 2 * n));
		}
		for (int s = 3; s <= 8; ++s) {
			EXPECT_EQ(build_family(spec(Kind::fountain, n, s)).graph.n(), s + n);
			for (int t = 1; t <= 8; ++t) EXPECT_EQ(build_family(spec(Kind::long_fountain, n, s, t)).graph.n(), s + t + n);
		}
	}
}

TEST(Families, ConnectivityAndBipartiteness) {
	for (int n = 1; n <= 8; ++n)
		for (int s = 1; s <= 8; ++s) {
			std::vector<std::pair<Graph, bool>> cases = {
			    {build_family(spec(Kind::double_broom, n, s)).graph, true},
			    {build_family(spec(Kind::opera_house, n, s)).graph, s % 2 == 0},
			    {build_family(spec(Kind::subdiv_tree, n, s)).graph, true},
			    {build_family(spec(Kind::subdiv_star, n)).graph, true},
			    {build_family(spec(Kind::diamond_fan, n)).graph, true},
			};
			if (s >= 3) {
				cases.push_back({build_family(spec(Kind::fountain, n, s)).graph, s % 2 == 0});
				cases.push_back({build_family(spec(Kind::long_fountain, n, s, 2)).graph, s % 2 == 0});
			}
			for (auto& [g, bip] : cases) {
				ASSERT_TRUE(is_connected(g));
				EXPECT_EQ(bipartition(g).has_value(), bip);
			}
		}
}

TEST(Families, CentersAreUniqueMaxDegree) {
	auto ss = build_family(spec(Kind::subdiv_star, 3));
	EXPECT_EQ(ss.center, 0);
	auto df = build_family(spec(Kind::diamond_fan, 3));
	EXPECT_EQ(df.center, 0);
	auto lf = build_family(spec(Kind::long_fountain, 4, 3, 2));
	EXPECT_EQ(lf.center, 4);
	EXPECT_FALSE(build_family(spec(Kind::clique, 4)).center);
}

TEST(Families, RangeErrors) {
	EXPECT_THROW(build_family(spec(Kind::fountain, 2, 2)), input_error);
	EXPECT_THROW(build_family(spec(Kind::long_fountain, 2, 3, 0)), input_error);
	EXPECT_THROW(build_family(spec(Kind::subdiv_tree, 2, 0)), input_error);
	EXPECT_THROW(canonical_template(2, Gadget::K3), input_error);
}

TEST(Families, TripleRankIsLexicographic) {
	for (int n = 3; n <= 9; ++n) {
		long long r = 0;
		for (int x = 0; x < n; ++x)
			for (int y = x + 1; y < n; ++y)
				for (int z = y + 1; z < n; ++z) EXPECT_EQ(triple_rank(n, x, y, z), r++);
		EXPECT_EQ(r, binom3(n));
	}
}

TEST(Families, CanonicalTemplateSizes) {
	EXPECT_EQ(canonical_template(3, Gadget::K3).n(), 12);
	EXPECT_EQ(canonical_template(5, Gadget::P3).n(), 95);
	for (int n = 3; n <= 8; ++n) {
		auto g = canonical_template(n, Gadget::P3);
		EXPECT_EQ(g.n(), n + 9 * binom3(n));
		EXPECT_EQ(g.m(), 11 * binom3(n));
		EXPECT_EQ(g.max_degree(), std::max<int>((n - 1) * (n - 2) / 2, 3));
		EXPECT_EQ(canonical_template(n, Gadget::K3).m(), 18 * binom3(n));
	}
}

// Triangle gadget as described: each of a, b, c sits in a triangle with its
// two wings, the wing pair closes a triangle with the tip, tips form a triangle.
TEST(Families, TriangleGadgetAdjacency) {
	int n = 4;
	auto g = canonical_template(n, Gadget::K3);
	for (int x = 0; x < n; ++x)
		for (int y = x + 1; y < n; ++y)
			for (int z = y + 1; z < n; ++z) {
				int base = gadget_base(n, x, y, z);
				int u[3] = {x, y, z};
				std::set<std::pair<int, int>> expect;
				auto add = [&](int p, int q) { expect.insert({std::min(p, q), std::max(p, q)}); };
				for (int i = 0; i < 3; ++i) {
					int l = base + 3 * i, r = l + 1, t = l + 2;
					add(u[i], l), add(u[i], r), add(l, r), add(t, l), add(t, r);
					add(t, base + 3 * ((i + 1) % 3) + 2);
				}
				VertexSet local = {x, y, z};
				for (int i = 0; i < 9; ++i) local.push_back(base + i);
				local = normalized(local);
				for (std::size_t i = 0; i < local.size(); ++i)
					for (std::size_t j = i + 1; j < local.size(); ++j) {
						int p = local[i], q = local[j];
						if (p < n && q < n) continue;
						EXPECT_EQ(g.has_edge(p, q), expect.count({p, q}) == 1) << p << " " << q;
					}
				for (int i = 0; i < 9; ++i)
					for (int w : g.neighbors(base + i)) EXPECT_TRUE(contains(local, w));
			}
}

TEST(Families, PathGadgetAdjacency) {
	int n = 3;
	auto g = canonical_template(n, Gadget::P3);
	int base = gadget_base(n, 0, 1, 2);
	std::set<std::pair<int, int>> expect;
	auto add = [&](int p, int q) { expect.insert({std::min(p, q), std::max(p, q)}); };
	for (int i = 0; i < 3; ++i) {
		int l = base + 3 * i, r = l + 1, t = l + 2;
		add(i, l), add(t, l), add(l, r);
	}
	add(base + 2, base + 5), add(base + 5, base + 8);
	std::set<std::pair<int, int>> got;
	for (auto e : g.edges()) got.insert(e);
	EXPECT_EQ(got, expect);
}

TEST(Families, DisjointCopies) {
	EXPECT_EQ(disjoint_copies(clique(3), 0).n(), 0);
	auto four = disjoint_copies(clique(3), 4);
	EXPECT_EQ(four.n(), 12);
	EXPECT_EQ(four.m(), 12u);
	EXPECT_EQ(connected_components(four).size(), 4u);
	auto p3s = disjoint_copies(path_graph(2), 3);
	for (auto& c : connected_components(p3s)) {
		ASSERT_EQ(c.size(), 3u);
		std::vector<int> deg;
		for (int v : c) deg.push_back(p3s.degree(v));
		std::sort(deg.begin(), deg.end());
		EXPECT_EQ(deg, (std::vector<int>{1, 1, 2}));
	}
}
