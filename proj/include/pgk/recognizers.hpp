#pragma once
#include <functional>

#include "graph.hpp"

namespace pgk {

struct ComponentClass {
	VertexSet vertices;
	bool small = false;
	VertexSet a_side, b_side;     // set only for thin components
	VertexSet non_universal;      // closed nbhd in H[C] not universal to N_H(C) ∩ S
};

struct SplitCertificate {
	VertexSet s;
	std::vector<ComponentClass> components;
};

// vertices of comp whose closed neighbourhood inside comp misses some edge to N_H(comp) ∩ s
inline VertexSet non_universal_vertices(const Graph& h, const VertexSet& comp, const VertexSet& s) {
	VertexSet att = set_intersection(open_neighborhood(h, comp), s);
	VertexSet bad;
	for (int v : comp) {
		bool ok = true;
		auto check = [&](int u) {
			for (int x : att)
				if (!h.has_edge(u, x)) ok = false;
		};
		check(v);
		for (int u : h.neighbors(v))
			if (ok && contains(comp, u)) check(u);
		if (!ok) bad.push_back(v);
	}
	return bad;
}

inline std::optional<ComponentClass> classify_component(const Graph& h, const VertexSet& comp, const VertexSet& s, int a,
                                                        int b, int d) {
	ComponentClass cc;
	cc.vertices = comp;
	cc.non_universal = non_universal_vertices(h, comp, s);
	if (static_cast<int>(cc.non_universal.size()) > d) return std::nullopt;
	if (static_cast<int>(comp.size()) <= a) {
		cc.small = true;
		return cc;
	}
	auto ind = induced_subgraph(h, comp);
	auto bp = bipartition(ind.graph);
	if (!bp || static_cast<int>(bp->first.size()) > b) return std::nullopt;
	for (int v : bp->first) cc.a_side.push_back(ind.to_old[v]);
	for (int v : bp->second) cc.b_side.push_back(ind.to_old[v]);
	cc.a_side = normalized(cc.a_side);
	cc.b_side = normalized(cc.b_side);
	return cc;
}

inline std::optional<SplitCertificate> check_split(const Graph& h, const VertexSet& s, int a, int b, int d) {
	SplitCertificate cert;
	cert.s = s;
	for (auto& comp : components_within(h, set_difference(iota_set(h.n()), s))) {
		auto cc = classify_component(h, comp, s, a, b, d);
		if (!cc) return std::nullopt;
		cert.components.push_back(std::move(*cc));
	}
	return cert;
}

// candidate S by increasing size, then lexicographically
inline std::optional<SplitCertificate> find_split(const Graph& h, int a, int b, int c, int d) {
	if (a < 0 || b < 0 || c < 0 || d < 0) throw input_error("find_split: negative parameter");
	VertexSet cur;
	std::optional<SplitCertificate> found;
	std::function<bool(int, int)> rec = [&](int start, int left) {
		if (left == 0) {
			found = check_split(h, cur, a, b, d);
			return found.has_value();
		}
		for (int v = start; v < h.n(); ++v) {
			cur.push_back(v);
			if (rec(v + 1, left - 1)) return true;
			cur.pop_back();
		}
		return false;
	};
	for (int size = 0; size <= std::min(c, h.n()); ++size)
		if (rec(0, size)) return found;
	return std::nullopt;
}

// re-derives both conditions from scratch
inline bool verify_split(const Graph& h, const SplitCertificate& cert, int a, int b, int c, int d) {
	if (static_cast<int>(cert.s.size()) > c || normalized(cert.s) != cert.s) return false;
	for (int v : cert.s)
		if (v < 0 || v >= h.n()) return false;
	auto comps = components_within(h, set_difference(iota_set(h.n()), cert.s));
	if (comps.size() != cert.components.size()) return false;
	for (std::size_t i = 0; i < comps.size(); ++i) {
		const auto& cc = cert.components[i];
		if (cc.vertices != comps[i]) return false;
		if (non_universal_vertices(h, cc.vertices, cert.s) != cc.non_universal) return false;
		if (static_cast<int>(cc.non_universal.size()) > d) return false;
		if (cc.small) {
			if (static_cast<int>(cc.vertices.size()) > a) return false;
			continue;
		}
		if (static_cast<int>(cc.a_side.size()) > b) return false;
		if (set_union(cc.a_side, cc.b_side) != cc.vertices || !set_intersection(cc.a_side, cc.b_side).empty())
			return false;
		for (auto side : {&cc.a_side, &cc.b_side})
			for (int u : *side)
				for (int w : h.neighbors(u))
					if (contains(*side, w)) return false;
	}
	return true;
}

inline std::optional<VertexSet> is_matching_splittable(const Graph& h, int c) {
	auto cert = find_split(h, 2, 0, c, 2);
	if (!cert) return std::nullopt;
	return cert->s;
}

struct SmallThin {
	bool ok = true;
	std::vector<ComponentClass> components;  // qualifying ones, plus the first failure marked small=false with empty sides
};

inline SmallThin is_small_thin(const Graph& h, int a, int b) {
	SmallThin r;
	for (auto& comp : connected_components(h)) {
		auto cc = classify_component(h, comp, {}, a, b, 0);
		if (!cc) {
			r.ok = false;
			ComponentClass bad;
			bad.vertices = comp;
			r.components.push_back(bad);
			continue;
		}
		r.components.push_back(std::move(*cc));
	}
	return r;
}

inline std::string to_text(const SplitCertificate& cert) {
	std::string out = "S";
	for (int v : cert.s) out += " " + std::to_string(v);
	out += "\n";
	for (const auto& cc : cert.components) {
		out += cc.small ? "small" : "thin";
		out += " V";
		for (int v : cc.vertices) out += " " + std::to_string(v);
		if (!cc.small) {
			out += " | A";
			for (int v : cc.a_side) out += " " + std::to_string(v);
		}
		if (!cc.non_universal.empty()) {
			out += " | N";
			for (int v : cc.non_universal) out += " " + std::to_string(v);
		}
		out += "\n";
	}
	return out;
}

}  // namespace pgk
