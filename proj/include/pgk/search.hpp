#pragma once
#include <cstdint>
#include <functional>
#include <map>

#include "model.hpp"

namespace pgk {

namespace detail {

// Adjacency test that is O(1) for small hosts.
class AdjTest {
public:
	explicit AdjTest(const Graph& g) : g_(&g) {
		if (g.n() <= 4096) {
			words_ = (g.n() + 63) / 64;
			bits_.assign(static_cast<std::size_t>(words_) * g.n(), 0);
			for (int u = 0; u < g.n(); ++u)
				for (int v : g.neighbors(u)) bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ull << (v % 64);
		}
	}
	bool operator()(int u, int v) const {
		if (words_ == 0) return g_->has_edge(u, v);
		return bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64) & 1;
	}

private:
	const Graph* g_;
	int words_ = 0;
	std::vector<std::uint64_t> bits_;
};

// blocks of pattern vertices that can be swapped wholesale (order-preserving)
struct SwapFamily {
	std::vector<VertexSet> blocks;
	int rep = -1;
};

inline bool order_iso(const Graph& h, const VertexSet& b1, const VertexSet& b2, int attach) {
	if (b1.size() != b2.size()) return false;
	for (std::size_t k = 0; k < b1.size(); ++k) {
		if (h.degree(b1[k]) != h.degree(b2[k])) return false;
		if (attach >= 0 && h.has_edge(attach, b1[k]) != h.has_edge(attach, b2[k])) return false;
		for (std::size_t l = k + 1; l < b1.size(); ++l)
			if (h.has_edge(b1[k], b1[l]) != h.has_edge(b2[k], b2[l])) return false;
	}
	return true;
}

inline void group_blocks(const Graph& h, std::vector<VertexSet> blocks, int attach, std::vector<SwapFamily>& out) {
	std::sort(blocks.begin(), blocks.end());
	std::vector<char> used(blocks.size(), 0);
	for (std::size_t i = 0; i < blocks.size(); ++i) {
		if (used[i]) continue;
		SwapFamily f;
		f.blocks.push_back(blocks[i]);
		for (std::size_t j = i + 1; j < blocks.size(); ++j)
			if (!used[j] && order_iso(h, blocks[i], blocks[j], attach)) {
				used[j] = 1;
				f.blocks.push_back(blocks[j]);
			}
		if (f.blocks.size() >= 2) out.push_back(std::move(f));
	}
}

// Families of swappable blocks: twin classes, identical components, and
// identical pendant pieces hanging off one vertex. The accepted families are
// laminar and each gets a representative offset avoiding nested blocks, so
// sorting the outer families first and the inner ones afterwards never undoes
// an earlier ordering.
inline std::vector<SwapFamily> swap_families(const Graph& h, const std::vector<char>& pinned) {
	std::vector<SwapFamily> cand;
	std::map<VertexSet, VertexSet> open_cls, closed_cls;
	for (int v = 0; v < h.n(); ++v) {
		open_cls[h.neighbors(v)].push_back(v);
		closed_cls[closed_neighborhood(h, v)].push_back(v);
	}
	for (auto* cls : {&open_cls, &closed_cls})
		for (auto& [nb, vs] : *cls)
			if (vs.size() >= 2) {
				SwapFamily f;
				for (int v : vs) f.blocks.push_back({v});
				cand.push_back(std::move(f));
			}
	auto comps = connected_components(h);
	group_blocks(h, comps, -1, cand);
	if (h.n() <= 2000) {
		std::vector<int> mark(h.n(), -1);
		for (int c = 0; c < h.n(); ++c) {
			if (h.degree(c) < 2) continue;
			std::vector<VertexSet> pieces;
			for (int s : h.neighbors(c)) {
				if (mark[s] == c) continue;
				VertexSet piece{s};
				mark[s] = c;
				for (std::size_t i = 0; i < piece.size(); ++i)
					for (int w : h.neighbors(piece[i]))
						if (w != c && mark[w] != c) {
							mark[w] = c;
							piece.push_back(w);
						}
				pieces.push_back(normalized(std::move(piece)));
			}
			if (pieces.size() >= 2) group_blocks(h, pieces, c, cand);
		}
	}
	for (auto& f : cand) {
		std::vector<VertexSet> keep;
		for (auto& b : f.blocks)
			if (std::none_of(b.begin(), b.end(), [&](int v) { return pinned[v]; })) keep.push_back(b);
		std::sort(keep.begin(), keep.end());
		f.blocks = std::move(keep);
	}
	std::erase_if(cand, [](const SwapFamily& f) { return f.blocks.size() < 2; });
	std::sort(cand.begin(), cand.end(), [](const SwapFamily& a, const SwapFamily& b) {
		if (a.blocks[0].size() != b.blocks[0].size()) return a.blocks[0].size() > b.blocks[0].size();
		if (a.blocks.size() != b.blocks.size()) return a.blocks.size() > b.blocks.size();
		return a.blocks < b.blocks;
	});

	std::vector<std::vector<std::pair<int, int>>> in_block(h.n());  // (family, block)
	std::vector<SwapFamily> acc;
	for (auto& f : cand) {
		bool ok = true;
		for (auto& b : f.blocks) {
			for (int v : b)
				for (auto [fi, bi] : in_block[v]) {
					const VertexSet& a = acc[fi].blocks[bi];
					if (a.size() == b.size() || !std::includes(a.begin(), a.end(), b.begin(), b.end())) ok = false;
				}
			if (!ok) break;
		}
		if (!ok) continue;
		for (std::size_t bi = 0; bi < f.blocks.size(); ++bi)
			for (int v : f.blocks[bi]) in_block[v].emplace_back(static_cast<int>(acc.size()), static_cast<int>(bi));
		acc.push_back(f);
	}

	// representatives, smallest blocks first
	std::vector<std::size_t> minsize(h.n(), SIZE_MAX);
	std::vector<SwapFamily> out;
	for (std::size_t i = acc.size(); i-- > 0;) {
		auto& f = acc[i];
		std::size_t sz = f.blocks[0].size();
		for (std::size_t o = 0; o < sz && f.rep < 0; ++o) {
			bool ok = true;
			for (auto& b : f.blocks)
				if (minsize[b[o]] < sz) ok = false;
			if (ok) f.rep = static_cast<int>(o);
		}
		if (f.rep < 0) continue;
		for (auto& b : f.blocks)
			for (int v : b) minsize[v] = std::min(minsize[v], sz);
		out.push_back(f);
	}
	return out;
}

}  // namespace detail

struct SearchOptions {
	bool symmetry = true;
	long long node_cap = 200'000'000;
};

// Exhaustive backtracking for H-models in G extending `pins`.
class SubgraphSearch {
public:
	SubgraphSearch(const Graph& g, const Graph& h, const SubgraphModel& pins, SearchOptions opt = {})
	    : g_(g), h_(h), adj_(g), opt_(opt), phi_(pins.size() == h.n() ? pins : SubgraphModel(h.n())) {
		if (pins.size() != 0 && pins.size() != h.n()) throw input_error("pins size differs from pattern order");
		used_.assign(g.n(), 0);
		pins_ok_ = validate_model(h, g, phi_).ok;
		if (!pins_ok_) return;
		for (int v = 0; v < h.n(); ++v)
			if (phi_[v] >= 0) used_[phi_[v]] = 1;
		build_order();
		if (opt.symmetry) build_symmetry();
	}

	// calls on_model for every model found; stop early when it returns true
	bool run(const std::function<bool(const SubgraphModel&)>& on_model) {
		if (!pins_ok_ || h_.n() > g_.n()) return false;
		on_model_ = &on_model;
		return dfs(0);
	}

	std::optional<SubgraphModel> first() {
		std::optional<SubgraphModel> r;
		run([&](const SubgraphModel& m) {
			r = m;
			return true;
		});
		return r;
	}

	long long nodes() const { return nodes_; }

private:
	struct Step {
		int v;
		std::vector<int> back;  // already placed neighbours
		std::vector<int> lt;    // require phi(u) < phi(v)
		std::vector<int> gt;    // require phi(u) > phi(v)
	};

	void build_order() {
		std::vector<int> pos(h_.n(), -1), placed_nb(h_.n(), 0), last_nb(h_.n(), -1);
		int counter = 0;
		auto place = [&](int v) {
			pos[v] = counter++;
			for (int w : h_.neighbors(v)) {
				++placed_nb[w];
				last_nb[w] = pos[v];
			}
		};
		for (int v = 0; v < h_.n(); ++v)
			if (phi_[v] >= 0) place(v);
		for (;;) {
			int best = -1;
			for (int v = 0; v < h_.n(); ++v) {
				if (pos[v] >= 0) continue;
				if (best < 0) {
					best = v;
					continue;
				}
				auto key = [&](int x) { return std::tuple(placed_nb[x] > 0, placed_nb[x], last_nb[x], h_.degree(x)); };
				if (key(v) > key(best)) best = v;
			}
			if (best < 0) break;
			Step s;
			s.v = best;
			for (int w : h_.neighbors(best))
				if (pos[w] >= 0) s.back.push_back(w);
			place(best);
			order_.push_back(std::move(s));
		}
		pos_ = pos;
	}

	void build_symmetry() {
		std::vector<char> pinned(h_.n(), 0);
		for (int v = 0; v < h_.n(); ++v) pinned[v] = phi_[v] >= 0;
		std::vector<int> step_of(h_.n(), -1);
		for (std::size_t i = 0; i < order_.size(); ++i) step_of[order_[i].v] = static_cast<int>(i);
		for (auto& f : detail::swap_families(h_, pinned))
			for (std::size_t i = 0; i + 1 < f.blocks.size(); ++i) {
				int u = f.blocks[i][f.rep], w = f.blocks[i + 1][f.rep];  // phi(u) < phi(w)
				if (pos_[u] < pos_[w])
					order_[step_of[w]].lt.push_back(u);
				else
					order_[step_of[u]].gt.push_back(w);
			}
	}

	bool dfs(std::size_t i) {
		if (i == order_.size()) return (*on_model_)(phi_);
		if (++nodes_ > opt_.node_cap) throw resource_error("subgraph search exceeded node cap");
		const Step& s = order_[i];
		int lo = 0, hi = g_.n() - 1;
		for (int u : s.lt) lo = std::max(lo, phi_[u] + 1);
		for (int u : s.gt) hi = std::min(hi, phi_[u] - 1);
		if (lo > hi) return false;
		int dv = h_.degree(s.v);
		auto try_x = [&](int x) {
			if (used_[x] || g_.degree(x) < dv) return false;
			for (int u : s.back)
				if (!adj_(phi_[u], x)) return false;
			phi_[s.v] = x;
			used_[x] = 1;
			bool stop = dfs(i + 1);
			used_[x] = 0;
			phi_[s.v] = -1;
			return stop;
		};
		if (s.back.empty()) {
			for (int x = lo; x <= hi; ++x)
				if (try_x(x)) return true;
			return false;
		}
		int anchor = s.back[0];
		for (int u : s.back)
			if (g_.degree(phi_[u]) < g_.degree(phi_[anchor])) anchor = u;
		const auto& cand = g_.neighbors(phi_[anchor]);
		for (auto it = std::lower_bound(cand.begin(), cand.end(), lo); it != cand.end() && *it <= hi; ++it)
			if (try_x(*it)) return true;
		return false;
	}

	const Graph& g_;
	const Graph& h_;
	detail::AdjTest adj_;
	SearchOptions opt_;
	SubgraphModel phi_;
	std::vector<char> used_;
	std::vector<Step> order_;
	std::vector<int> pos_;
	bool pins_ok_ = true;
	long long nodes_ = 0;
	const std::function<bool(const SubgraphModel&)>* on_model_ = nullptr;
};

}  // namespace pgk
