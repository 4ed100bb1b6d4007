#pragma once
#include "graph.hpp"

namespace pgk {

// partial injective map V(H) -> V(G); -1 marks an unassigned pattern vertex
struct SubgraphModel {
	std::vector<int> image;

	SubgraphModel() = default;
	explicit SubgraphModel(int pattern_n) : image(pattern_n, -1) {}

	int size() const { return static_cast<int>(image.size()); }
	bool defined(int v) const { return image[v] >= 0; }
	int operator[](int v) const { return image[v]; }
	int& operator[](int v) { return image[v]; }

	VertexSet domain() const {
		VertexSet d;
		for (int v = 0; v < size(); ++v)
			if (image[v] >= 0) d.push_back(v);
		return d;
	}
	VertexSet image_of(const VertexSet& x) const {
		VertexSet r;
		for (int v : x)
			if (image[v] >= 0) r.push_back(image[v]);
		return normalized(std::move(r));
	}
	VertexSet image_set() const { return image_of(domain()); }
	bool is_full() const {
		return std::all_of(image.begin(), image.end(), [](int x) { return x >= 0; });
	}
	bool extends(const SubgraphModel& p) const {
		for (int v = 0; v < p.size(); ++v)
			if (p.image[v] >= 0 && (v >= size() || image[v] != p.image[v])) return false;
		return true;
	}
	SubgraphModel restricted(const VertexSet& x) const {
		SubgraphModel r(size());
		for (int v : x) r.image[v] = image[v];
		return r;
	}
	friend bool operator==(const SubgraphModel&, const SubgraphModel&) = default;
};

struct ModelCheck {
	bool ok = true;
	std::string violation;
	explicit operator bool() const { return ok; }
};

inline ModelCheck validate_model(const Graph& h, const Graph& g, const SubgraphModel& phi) {
	if (phi.size() != h.n()) return {false, "model size differs from pattern order"};
	std::vector<int> owner(g.n(), -1);
	for (int v = 0; v < h.n(); ++v) {
		int x = phi[v];
		if (x < 0) continue;
		if (x >= g.n()) return {false, "image of " + std::to_string(v) + " out of host range"};
		if (owner[x] >= 0)
			return {false, "not injective: " + std::to_string(owner[x]) + " and " + std::to_string(v) + " -> " +
			                   std::to_string(x)};
		owner[x] = v;
	}
	for (auto [u, v] : h.edges())
		if (phi[u] >= 0 && phi[v] >= 0 && !g.has_edge(phi[u], phi[v]))
			return {false, "edge " + std::to_string(u) + "-" + std::to_string(v) + " maps to non-edge " +
			                   std::to_string(phi[u]) + "-" + std::to_string(phi[v])};
	return {};
}

inline bool is_full_model(const Graph& h, const Graph& g, const SubgraphModel& phi) {
	return phi.is_full() && validate_model(h, g, phi).ok;
}

struct Separation {
	VertexSet a, b;
};

inline bool is_separation(const Graph& h, const Separation& s) {
	if (set_union(s.a, s.b) != iota_set(h.n())) return false;
	VertexSet a_only = set_difference(s.a, s.b), b_only = set_difference(s.b, s.a);
	for (int u : a_only)
		for (int w : h.neighbors(u))
			if (contains(b_only, w)) return false;
	return true;
}

// phi_a, phi_b are models of H defined on A and on B respectively
inline SubgraphModel merge_models(const Graph& h, const Graph& g, const SubgraphModel& phi, const Separation& sep,
                                  const SubgraphModel& phi_a, const SubgraphModel& phi_b) {
	if (!is_separation(h, sep)) throw precondition_error("merge_models: not a separation");
	VertexSet sep_set = set_intersection(sep.a, sep.b);
	for (int v : sep_set) {
		if (phi[v] < 0) throw precondition_error("merge_models: phi undefined on separator");
		if (phi_a[v] != phi[v] || phi_b[v] != phi[v])
			throw precondition_error("merge_models: disagreement on separator vertex " + std::to_string(v));
	}
	SubgraphModel r(h.n());
	for (int v : sep.a) {
		if (phi_a[v] < 0) throw precondition_error("merge_models: phi_a not full on A");
		r[v] = phi_a[v];
	}
	for (int v : sep.b) {
		if (phi_b[v] < 0) throw precondition_error("merge_models: phi_b not full on B");
		r[v] = phi_b[v];
	}
	for (int v = 0; v < h.n(); ++v)
		if (phi[v] >= 0 && r[v] != phi[v]) throw precondition_error("merge_models: result does not extend phi");
	auto chk = validate_model(h, g, r);
	if (!chk) throw precondition_error("merge_models: " + chk.violation);
	return r;
}

}  // namespace pgk
