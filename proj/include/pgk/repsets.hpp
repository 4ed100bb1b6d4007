#pragma once
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "detect.hpp"
#include "recognizers.hpp"
#include "search.hpp"
#include "sunflower.hpp"

namespace pgk {

struct bound_violation : std::logic_error {
	using std::logic_error::logic_error;
};

inline std::atomic<long long>& bound_checks() {
	static std::atomic<long long> n{0};
	return n;
}

inline void assert_bound(std::size_t size, long double bound, const std::string& what) {
	++bound_checks();
	if (static_cast<long double>(size) > bound)
		throw bound_violation(what + ": marked " + std::to_string(size) + " vertices, bound " +
		                      std::to_string(static_cast<double>(bound)));
}

inline long double factorial_ld(int n) {
	long double f = 1;
	for (int i = 2; i <= n; ++i) f *= i;
	return f;
}

inline long double repset_small_bound(int h, int alpha, int ell) {
	return h + factorial_ld(alpha + 1) * std::pow(static_cast<long double>(ell + 1), alpha);
}

inline long double repset_thin_bound(int h, int alpha, int ell, int mu) {
	long double base = static_cast<long double>(h) * h * ell + static_cast<long double>(h) * h * h;
	return std::pow(base, mu + 1) * (1 + std::pow(2.0L, alpha) * (ell + h));
}

// the base case marks up to 3k vertices even when nothing is left to place
inline long double repset_biclique_bound(int k, int b, int placed) {
	return std::pow(3.0L * k * k, std::max(1, 2 * b - placed));
}

// ------------------------------------------------------------ constant-size H

// Collect phi(V(H) \ P0) over all full models extending phi0, then strip one
// set from an (l+2)-petal sunflower while one can be found.
inline VertexSet repset_small(const Graph& g, const Graph& h, const VertexSet& d, int ell, const SubgraphModel& phi0) {
	if (phi0.size() != h.n()) throw input_error("repset_small: model size differs from pattern order");
	if (ell < 0) throw input_error("repset_small: negative budget");
	for (int v : d)
		if (!phi0.defined(v)) throw input_error("repset_small: D not in the domain");
	VertexSet p0 = phi0.domain();
	VertexSet rest = set_difference(iota_set(h.n()), p0);
	int alpha = static_cast<int>(rest.size());

	std::set<VertexSet> family;
	if (validate_model(h, g, phi0)) {
		SubgraphSearch search(g, h, phi0, {false, 4'000'000'000LL});
		search.run([&](const SubgraphModel& m) {
			family.insert(m.image_of(rest));
			return false;
		});
	}
	std::vector<VertexSet> fam(family.begin(), family.end());
	while (auto sf = find_sunflower(fam, ell + 2)) fam.erase(fam.begin() + sf->members[0]);

	VertexSet x = phi0.image_of(p0);
	for (auto& s : fam) x = set_union(x, s);
	assert_bound(x.size(), repset_small_bound(h.n(), alpha, ell), "repset_small");
	return x;
}

// ------------------------------------------------------------ thin bipartite H - D

struct ThinRepsetCall {
	VertexSet d;
	VertexSet a_side;
	int ell = 0;
};

class ThinRepset {
public:
	ThinRepset(const Graph& g, const Graph& h, const ThinRepsetCall& call) : g_(g), h_(h), c_(call) {
		n_ = h.n();
		if (c_.a_side.empty()) throw input_error("repset_thin: A must be nonempty");
		if (c_.ell < 0) throw input_error("repset_thin: negative budget");
		b_ = set_difference(set_difference(iota_set(n_), c_.d), c_.a_side);
		VertexSet hp = set_difference(iota_set(n_), c_.d);
		if (!is_connected(induced_subgraph(h, hp).graph)) throw input_error("repset_thin: H - D is not connected");
		check_task(h, {c_.d, c_.a_side}, full_d_model());
		b_n_ = non_universal_to(h, c_.d, b_);
		b_u_ = set_difference(b_, b_n_);
		alpha_ = static_cast<int>(c_.a_side.size());
	}

	int measure(const SubgraphModel& phi) const {
		int mu = 0;
		for (int v : set_union(c_.a_side, b_n_))
			if (!phi.defined(v)) ++mu;
		for (int a : c_.a_side) {
			int cnt = 0;
			for (int w : h_.neighbors(a))
				if (phi.defined(w) && contains(b_u_, w)) ++cnt;
			mu += std::max(0, alpha_ - cnt);
		}
		return mu;
	}

	long double bound(const SubgraphModel& phi) const { return repset_thin_bound(n_, alpha_, c_.ell, measure(phi)); }

	VertexSet run(const SubgraphModel& phi0) {
		if (phi0.size() != n_) throw input_error("repset_thin: model size differs from pattern order");
		for (int v : c_.d)
			if (!phi0.defined(v)) throw input_error("repset_thin: D not in the domain");
		if (!validate_model(h_, g_, phi0)) throw input_error("repset_thin: invalid partial model");
		return rec(phi0);
	}

	long long calls() const { return calls_; }

private:
	SubgraphModel full_d_model() const {
		// only used for the shape check, images are irrelevant there
		SubgraphModel m(n_);
		for (std::size_t i = 0; i < c_.d.size(); ++i) m[c_.d[i]] = static_cast<int>(i);
		return m;
	}

	VertexSet first_common(const VertexSet& images, int count) const {
		VertexSet cn = common_neighborhood(g_, normalized(images));
		if (static_cast<int>(cn.size()) > count) cn.resize(count);
		return cn;
	}

	bool can_assign(const SubgraphModel& phi, int v, int x) const {
		for (int u = 0; u < n_; ++u)
			if (phi[u] == x) return false;
		for (int w : h_.neighbors(v))
			if (phi.defined(w) && !g_.has_edge(phi[w], x)) return false;
		return true;
	}

	VertexSet recurse(const SubgraphModel& parent, SubgraphModel child) {
		if (measure(child) >= measure(parent)) throw std::logic_error("repset_thin: measure did not decrease");
		return rec(child);
	}

	VertexSet rec(const SubgraphModel& phi) {
		auto memo = memo_.find(phi.image);
		if (memo != memo_.end()) return memo->second;
		++calls_;
		const int lh = c_.ell + n_;
		VertexSet p = phi.domain();
		VertexSet x;

		// Case 1
		int case1 = -1;
		VertexSet r;
		for (int a : c_.a_side) {
			if (phi.defined(a)) continue;
			VertexSet ra;
			for (int w : h_.neighbors(a))
				if (phi.defined(w) && contains(b_u_, w)) ra.push_back(w);
			if (static_cast<int>(ra.size()) >= alpha_) {
				case1 = a;
				r = normalized(ra);
				break;
			}
		}
		if (case1 >= 0) {
			VertexSet t = common_neighborhood(g_, phi.image_of(set_union(r, c_.d)));
			if (static_cast<int>(t.size()) >= lh) {
				t.resize(lh);
				x = set_union(phi.image_of(p), t);
			} else {
				for (int a2 : t) {
					if (!can_assign(phi, case1, a2)) continue;
					SubgraphModel child = phi;
					child[case1] = a2;
					x = set_union(x, recurse(phi, child));
				}
			}
		} else {
			// Case 2
			VertexSet bhat;
			for (int b : b_u_) {
				const auto& nb = h_.neighbors(b);
				if (std::all_of(nb.begin(), nb.end(), [&](int w) { return phi.defined(w); })) bhat.push_back(b);
			}
			VertexSet keep = set_difference(iota_set(n_), bhat);
			auto ind = induced_subgraph(h_, keep);
			SubgraphModel hat(ind.graph.n());
			for (int i = 0; i < ind.graph.n(); ++i) hat[i] = phi[ind.to_old[i]];
			VertexSet open;  // V(Ĥ) \ P0 in H ids
			for (int v : keep)
				if (!phi.defined(v)) open.push_back(v);

			std::vector<SubgraphModel> packing;
			if (open.empty()) {
				packing.assign(lh, hat);
			} else {
				SeparatedTask task;
				for (int v : c_.d) task.d.push_back(ind.to_new[v]);
				for (int v : c_.a_side) task.a_side.push_back(ind.to_new[v]);
				task.d = normalized(task.d);
				task.a_side = normalized(task.a_side);
				VertexSet used;
				while (static_cast<int>(packing.size()) < lh) {
					auto m = extend_separated_model(g_, ind.graph, task, hat, used);
					if (!m) break;
					for (int v : open) used.push_back((*m)[ind.to_new[v]]);
					used = normalized(used);
					packing.push_back(*m);
				}
			}

			if (static_cast<int>(packing.size()) < lh) {
				// Case 2.a
				VertexSet s;
				for (auto& m : packing)
					for (int v : open) s.push_back(m[ind.to_new[v]]);
				s = normalized(s);
				for (int v : open)
					for (int v2 : s) {
						if (!can_assign(phi, v, v2)) continue;
						SubgraphModel child = phi;
						child[v] = v2;
						x = set_union(x, recurse(phi, child));
					}
			} else {
				// Case 2.b
				for (auto& m : packing) x = set_union(x, m.image_set());
				VertexSet ap = set_intersection(c_.a_side, p);
				for (unsigned mask = 0; mask < (1u << ap.size()); ++mask) {
					VertexSet sub = c_.d;
					for (std::size_t i = 0; i < ap.size(); ++i)
						if (mask >> i & 1) sub.push_back(ap[i]);
					x = set_union(x, first_common(phi.image_of(normalized(sub)), lh));
				}
			}
		}
		assert_bound(x.size(), bound(phi), "repset_thin");
		memo_.emplace(phi.image, x);
		return x;
	}

	const Graph& g_;
	const Graph& h_;
	ThinRepsetCall c_;
	int n_ = 0, alpha_ = 0;
	VertexSet b_, b_n_, b_u_;
	std::map<std::vector<int>, VertexSet> memo_;
	long long calls_ = 0;
};

inline VertexSet repset_thin(const Graph& g, const Graph& h, const ThinRepsetCall& call, const SubgraphModel& phi0) {
	return ThinRepset(g, h, call).run(phi0);
}

// ------------------------------------------------------------ bicliques K_{b,l'}

class BicliqueRepset {
public:
	BicliqueRepset(const Graph& g, int b, int l, int k) : g_(g), b_(b), l_(l), k_(k) {
		if (b < 1 || l <= b) throw input_error("repset_biclique: need 1 <= b < l'");
		if (k < l + b) throw input_error("repset_biclique: need k >= l' + b");
	}

	VertexSet run(VertexSet a, VertexSet bb) {
		a = normalized(a), bb = normalized(bb);
		if (static_cast<int>(a.size()) > b_ || static_cast<int>(bb.size()) > b_ || !set_intersection(a, bb).empty())
			throw input_error("repset_biclique: A', B' must be disjoint with at most b vertices each");
		for (int v : set_union(a, bb)) g_.check_vertex(v);
		return rec(a, bb);
	}

private:
	// a K_{b,l'} extending (A', B') needs A' complete to B'
	bool compatible(const VertexSet& a, const VertexSet& bb) const {
		for (int u : a)
			for (int w : bb)
				if (!g_.has_edge(u, w)) return false;
		return true;
	}

	VertexSet rec(const VertexSet& a, const VertexSet& bb) {
		auto key = std::pair(a, bb);
		if (auto it = memo_.find(key); it != memo_.end()) return it->second;
		VertexSet x;
		int placed = static_cast<int>(a.size() + bb.size());
		if (!compatible(a, bb)) {
			// nothing extends (A', B'); the empty set is representative
		} else if (static_cast<int>(a.size()) == b_) {
			// Case 1
			VertexSet cn = set_difference(common_neighborhood(g_, a), bb);
			if (static_cast<int>(cn.size()) > k_ + l_) cn.resize(k_ + l_);
			x = set_union(set_union(a, bb), cn);
		} else if (static_cast<int>(bb.size()) == b_) {
			VertexSet t = common_neighborhood(g_, bb);
			if (static_cast<int>(t.size()) >= k_ + l_) {
				// Case 2.a
				t.resize(k_ + l_);
				x = set_union(bb, t);
			} else {
				// Case 2.b
				for (int v : set_difference(t, set_union(a, bb))) x = set_union(x, rec(set_union(a, {v}), bb));
			}
		} else {
			// Case 3: greedy maximal family of extensions meeting only in A' ∪ B'
			VertexSet base = set_union(a, bb);
			std::vector<char> used(g_.n(), 0);
			for (int v : base) used[v] = 1;
			std::vector<VertexSet> found;
			VertexSet cand_a = common_neighborhood(g_, bb);
			VertexSet extra;
			int need_a = b_ - static_cast<int>(a.size());
			std::function<bool(std::size_t)> pick = [&](std::size_t start) {
				if (static_cast<int>(extra.size()) == need_a) {
					for (int v : extra)
						if (used[v]) return false;
					VertexSet side_a = set_union(a, extra);
					VertexSet q;
					for (int w : common_neighborhood(g_, side_a))
						if (!used[w] && !contains(side_a, w)) q.push_back(w);
					int need_b = l_ - static_cast<int>(bb.size());
					if (static_cast<int>(q.size()) < need_b) return false;
					q.resize(need_b);
					VertexSet copy = set_union(set_union(side_a, bb), q);
					for (int v : copy) used[v] = 1;
					found.push_back(copy);
					return static_cast<int>(found.size()) == k_ + 1;
				}
				for (std::size_t i = start; i < cand_a.size(); ++i) {
					int v = cand_a[i];
					if (used[v]) continue;
					extra.push_back(v);
					bool stop = pick(i + 1);
					extra.pop_back();
					if (stop) return true;
					if (used[v]) continue;
				}
				return false;
			};
			pick(0);
			if (static_cast<int>(found.size()) == k_ + 1) {
				// Case 3.a
				for (auto& f : found) x = set_union(x, f);
			} else {
				// Case 3.b
				VertexSet t;
				for (auto& f : found) t = set_union(t, f);
				for (int v : set_difference(t, base)) {
					x = set_union(x, rec(set_union(a, {v}), bb));
					x = set_union(x, rec(a, set_union(bb, {v})));
				}
			}
		}
		assert_bound(x.size(), repset_biclique_bound(k_, b_, placed), "repset_biclique");
		memo_.emplace(key, x);
		return x;
	}

	const Graph& g_;
	int b_, l_, k_;
	std::map<std::pair<VertexSet, VertexSet>, VertexSet> memo_;
};

inline VertexSet repset_biclique(const Graph& g, int b, int l, int k, const VertexSet& a = {},
                                 const VertexSet& bb = {}) {
	return BicliqueRepset(g, b, l, k).run(a, bb);
}

// ------------------------------------------------------------ generic marking

struct GenericRepset {
	VertexSet x;
	long double bound = 0;  // |D| plus the per-component bounds
};

// D must realize an (a, b, |D|, d)-split of H and phi0 must have domain exactly D.
inline GenericRepset generic_repset(const Graph& g, const Graph& h, const VertexSet& d_in, const SubgraphModel& phi0,
                                    int a, int b, int d) {
	VertexSet dset = normalized(d_in);
	if (phi0.size() != h.n() || phi0.domain() != dset) throw input_error("generic_repset: phi0 must have domain D");
	auto cert = check_split(h, dset, a, b, d);
	if (!cert) throw input_error("generic_repset: D does not realize the split");
	const int k = h.n();
	GenericRepset out;
	out.x = phi0.image_of(dset);
	out.bound = static_cast<long double>(dset.size());
	if (!validate_model(h, g, phi0)) return out;
	for (const auto& cc : cert->components) {
		VertexSet closed = set_union(cc.vertices, set_intersection(open_neighborhood(h, cc.vertices), dset));
		auto ind = induced_subgraph(h, closed);
		SubgraphModel sub(ind.graph.n());
		VertexSet dh;
		for (int i = 0; i < ind.graph.n(); ++i) {
			sub[i] = phi0[ind.to_old[i]];
			if (contains(dset, ind.to_old[i])) dh.push_back(i);
		}
		int ell = k - ind.graph.n();
		if (cc.small) {
			out.x = set_union(out.x, repset_small(g, ind.graph, dh, ell, sub));
			out.bound += repset_small_bound(ind.graph.n(), static_cast<int>(cc.vertices.size()), ell);
		} else {
			ThinRepsetCall call;
			call.d = dh;
			for (int v : cc.a_side) call.a_side.push_back(ind.to_new[v]);
			call.a_side = normalized(call.a_side);
			call.ell = ell;
			ThinRepset tr(g, ind.graph, call);
			out.x = set_union(out.x, tr.run(sub));
			out.bound += tr.bound(sub);
		}
	}
	assert_bound(out.x.size(), out.bound, "generic_repset");
	return out;
}

}  // namespace pgk
