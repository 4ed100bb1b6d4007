#pragma once
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <queue>
#include <random>

#include "graph.hpp"

namespace pgk {

struct RandomnessConfig {
	std::uint64_t seed = 1;
	int repetitions = 20;
	std::uint64_t prime = 0;  // 0: choose automatically
};

using ColorDemand = std::map<int, int>;

// ---------------------------------------------------------------- bipartite

class HopcroftKarp {
public:
	HopcroftKarp(int left, int right) : adj_(left), match_l_(left, -1), match_r_(right, -1), dist_(left) {}

	void add_edge(int l, int r) { adj_[l].push_back(r); }

	int run() {
		int size = 0;
		while (bfs())
			for (int l = 0; l < static_cast<int>(adj_.size()); ++l)
				if (match_l_[l] < 0 && dfs(l)) ++size;
		return size;
	}

	int mate_of_left(int l) const { return match_l_[l]; }
	int mate_of_right(int r) const { return match_r_[r]; }

private:
	static constexpr int INF = 1 << 30;

	bool bfs() {
		std::queue<int> q;
		bool found = false;
		for (int l = 0; l < static_cast<int>(adj_.size()); ++l) {
			dist_[l] = match_l_[l] < 0 ? 0 : INF;
			if (dist_[l] == 0) q.push(l);
		}
		while (!q.empty()) {
			int l = q.front();
			q.pop();
			for (int r : adj_[l]) {
				int l2 = match_r_[r];
				if (l2 < 0)
					found = true;
				else if (dist_[l2] == INF) {
					dist_[l2] = dist_[l] + 1;
					q.push(l2);
				}
			}
		}
		return found;
	}

	bool dfs(int l) {
		for (int r : adj_[l]) {
			int l2 = match_r_[r];
			if (l2 < 0 || (dist_[l2] == dist_[l] + 1 && dfs(l2))) {
				match_l_[l] = r;
				match_r_[r] = l;
				return true;
			}
		}
		dist_[l] = INF;
		return false;
	}

	std::vector<std::vector<int>> adj_;
	std::vector<int> match_l_, match_r_, dist_;
};

inline std::vector<std::pair<int, int>> max_bipartite_matching(const Graph& g, const VertexSet& a_in,
                                                               const VertexSet& b_in) {
	VertexSet a = normalized(a_in), b = normalized(b_in);
	if (!set_intersection(a, b).empty() || set_union(a, b) != iota_set(g.n()))
		throw input_error("max_bipartite_matching: sides do not partition the vertex set");
	std::vector<int> idx(g.n(), -1);
	for (std::size_t i = 0; i < a.size(); ++i) idx[a[i]] = static_cast<int>(i);
	for (std::size_t i = 0; i < b.size(); ++i) idx[b[i]] = static_cast<int>(i);
	HopcroftKarp hk(static_cast<int>(a.size()), static_cast<int>(b.size()));
	for (auto [u, v] : g.edges()) {
		bool ua = contains(a, u), va = contains(a, v);
		if (ua == va) throw input_error("max_bipartite_matching: edge inside one side");
		if (ua)
			hk.add_edge(idx[u], idx[v]);
		else
			hk.add_edge(idx[v], idx[u]);
	}
	hk.run();
	std::vector<std::pair<int, int>> m;
	for (std::size_t i = 0; i < a.size(); ++i)
		if (hk.mate_of_left(static_cast<int>(i)) >= 0) m.emplace_back(a[i], b[hk.mate_of_left(static_cast<int>(i))]);
	return m;
}

// ---------------------------------------------------------------- modular arithmetic

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
	return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
	std::uint64_t r = 1 % p;
	a %= p;
	for (; e; e >>= 1, a = mulmod(a, a, p))
		if (e & 1) r = mulmod(r, a, p);
	return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

inline bool is_prime(std::uint64_t n) {
	if (n < 2) return false;
	for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
		if (n % q == 0) return n == q;
	std::uint64_t d = n - 1;
	int s = 0;
	while (d % 2 == 0) d /= 2, ++s;
	for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
		std::uint64_t x = powmod(a, d, n);
		if (x == 1 || x == n - 1) continue;
		bool comp = true;
		for (int i = 1; i < s && comp; ++i) {
			x = mulmod(x, x, n);
			if (x == n - 1) comp = false;
		}
		if (comp) return false;
	}
	return true;
}

inline std::uint64_t next_prime_above(std::uint64_t x) {
	std::uint64_t p = x + 1;
	while (!is_prime(p)) ++p;
	return p;
}

// Pfaffian of a skew-symmetric matrix (row-major n*n), destroys the input
inline std::uint64_t pfaffian(std::vector<std::uint64_t>& a, int n, std::uint64_t p) {
	if (n % 2) return 0;
	auto at = [&](int i, int j) -> std::uint64_t& { return a[static_cast<std::size_t>(i) * n + j]; };
	std::uint64_t pf = 1;
	for (int k = 0; k < n; k += 2) {
		int piv = -1;
		for (int j = k + 1; j < n && piv < 0; ++j)
			if (at(k, j)) piv = j;
		if (piv < 0) return 0;
		if (piv != k + 1) {
			for (int i = 0; i < n; ++i) std::swap(at(i, k + 1), at(i, piv));
			for (int j = 0; j < n; ++j) std::swap(at(k + 1, j), at(piv, j));
			pf = pf ? p - pf : 0;
		}
		pf = mulmod(pf, at(k, k + 1), p);
		std::uint64_t inv = invmod(at(k, k + 1), p);
		for (int i = k + 2; i < n; ++i) {
			std::uint64_t c = mulmod(at(k, i), inv, p);
			if (!c) continue;
			std::uint64_t nc = p - c;
			for (int r = k; r < n; ++r) at(r, i) = (at(r, i) + mulmod(nc, at(r, k + 1), p)) % p;
			for (int r = k; r < n; ++r) at(i, r) = (at(i, r) + mulmod(nc, at(k + 1, r), p)) % p;
		}
	}
	return pf;
}

// rank of a square matrix mod p, destroys the input
inline int rank_mod(std::vector<std::uint64_t>& a, int n, std::uint64_t p) {
	auto at = [&](int i, int j) -> std::uint64_t& { return a[static_cast<std::size_t>(i) * n + j]; };
	int rank = 0;
	for (int col = 0; col < n && rank < n; ++col) {
		int piv = -1;
		for (int r = rank; r < n && piv < 0; ++r)
			if (at(r, col)) piv = r;
		if (piv < 0) continue;
		for (int j = 0; j < n; ++j) std::swap(at(rank, j), at(piv, j));
		std::uint64_t inv = invmod(at(rank, col), p);
		for (int r = rank + 1; r < n; ++r) {
			std::uint64_t c = mulmod(at(r, col), inv, p);
			if (!c) continue;
			for (int j = col; j < n; ++j) at(r, j) = (at(r, j) + mulmod(p - c, at(rank, j), p)) % p;
		}
		++rank;
	}
	return rank;
}

// coefficient matrix of the Lagrange basis for nodes 0..d: row j = coefficients of l_j
inline std::vector<std::vector<std::uint64_t>> lagrange_basis(int d, std::uint64_t p) {
	std::vector<std::vector<std::uint64_t>> basis(d + 1);
	for (int j = 0; j <= d; ++j) {
		std::vector<std::uint64_t> poly{1};
		std::uint64_t denom = 1;
		for (int m = 0; m <= d; ++m) {
			if (m == j) continue;
			std::vector<std::uint64_t> next(poly.size() + 1, 0);
			for (std::size_t i = 0; i < poly.size(); ++i) {
				next[i + 1] = (next[i + 1] + poly[i]) % p;
				next[i] = (next[i] + mulmod(poly[i], (p - m % p) % p, p)) % p;
			}
			poly = std::move(next);
			std::int64_t diff = j - m;
				std::uint64_t dm = diff >= 0 ? static_cast<std::uint64_t>(diff) % p : p - static_cast<std::uint64_t>(-diff) % p;
				denom = mulmod(denom, dm, p);
		}
		std::uint64_t inv = invmod(denom, p);
		for (auto& c : poly) c = mulmod(c, inv, p);
		basis[j] = std::move(poly);
	}
	return basis;
}

// Decides whether some perfect matching of the live vertices has weight exactly w0.
class ExactWeightTester {
public:
	ExactWeightTester(const Multigraph& g, std::uint64_t p) : g_(g), p_(p) {}

	bool test(const std::vector<char>& alive, std::int64_t w0, int reps, std::mt19937_64& rng) {
		std::vector<int> vid(g_.n, -1);
		int n = 0;
		for (int v = 0; v < g_.n; ++v)
			if (alive[v]) vid[v] = n++;
		if (n % 2 || w0 < 0) return false;
		if (n == 0) return w0 == 0;
		std::vector<int> es;
		for (int i = 0; i < static_cast<int>(g_.edges.size()); ++i) {
			const auto& e = g_.edges[i];
			if (vid[e.u] >= 0 && vid[e.v] >= 0) es.push_back(i);
		}
		// weight classes, each gets its own variable
		std::map<std::int64_t, int> cls_of;
		for (int i : es) cls_of.emplace(g_.edges[i].weight, 0);
		std::vector<std::int64_t> wts;
		for (auto& [w, c] : cls_of) {
			c = static_cast<int>(wts.size());
			wts.push_back(w);
		}
		int k = static_cast<int>(wts.size());
		if (k == 0) return false;
		std::uniform_int_distribution<std::uint64_t> dist(1, p_ - 1);

		for (int rep = 0; rep < reps; ++rep) {
			std::vector<std::uint64_t> x(es.size());
			for (auto& xi : x) xi = dist(rng);
			auto build = [&](const std::vector<std::uint64_t>& zval) {
				std::vector<std::uint64_t> a(static_cast<std::size_t>(n) * n, 0);
				for (std::size_t t = 0; t < es.size(); ++t) {
					const auto& e = g_.edges[es[t]];
					std::uint64_t val = mulmod(x[t], zval[cls_of[e.weight]], p_);
					int u = vid[e.u], v = vid[e.v];
					if (u > v) std::swap(u, v);
					auto& up = a[static_cast<std::size_t>(u) * n + v];
					up = (up + val) % p_;
					a[static_cast<std::size_t>(v) * n + u] = (p_ - up) % p_;
				}
				return a;
			};
			// degree bound per class: half the Tutte rank of that class (one random sample)
			std::vector<int> deg(k, 0);
			for (int c = 0; c < k; ++c) {
				std::vector<std::uint64_t> z(k, 0);
				z[c] = 1;
				auto a = build(z);
				deg[c] = std::min(rank_mod(a, n, p_) / 2, n / 2);
			}
			// every perfect matching has n/2 edges, so one variable can be fixed to 1
			int drop = static_cast<int>(std::max_element(deg.begin(), deg.end()) - deg.begin());
			double grid = 1;
			for (int c = 0; c < k; ++c)
				if (c != drop) grid *= deg[c] + 1;
			std::int64_t wmax = 0;
			{
				std::vector<std::int64_t> all;
				for (int i : es) all.push_back(g_.edges[i].weight);
				std::sort(all.rbegin(), all.rend());
				for (int i = 0; i < n / 2 && i < static_cast<int>(all.size()); ++i) wmax += all[i];
			}
			if (w0 > wmax) return false;
			bool nonzero;
			if (static_cast<double>(wmax) + 1 <= grid)
				nonzero = univariate(build, wts, wmax, w0, n);
			else
				nonzero = multivariate(build, wts, deg, drop, w0, n);
			if (nonzero) return true;
		}
		return false;
	}

private:
	template <class Build>
	bool univariate(Build& build, const std::vector<std::int64_t>& wts, std::int64_t wmax, std::int64_t w0, int n) {
		int d = static_cast<int>(wmax);
		if (d > 200000) throw resource_error("exact-weight matching: weight range too large");
		std::vector<std::uint64_t> vals(d + 1);
		for (int y = 0; y <= d; ++y) {
			std::vector<std::uint64_t> z(wts.size());
			for (std::size_t c = 0; c < wts.size(); ++c)
				z[c] = powmod(static_cast<std::uint64_t>(y), static_cast<std::uint64_t>(wts[c]), p_);
			auto a = build(z);
			vals[y] = pfaffian(a, n, p_);
		}
		// coefficient of y^w0 = sum_j vals[j] * [y^w0] l_j(y)
		auto basis = lagrange_basis(d, p_);
		std::uint64_t coef = 0;
		for (int j = 0; j <= d; ++j) coef = (coef + mulmod(vals[j], basis[j][w0], p_)) % p_;
		return coef != 0;
	}

	template <class Build>
	bool multivariate(Build& build, const std::vector<std::int64_t>& w, const std::vector<int>& deg, int drop,
	                  std::int64_t w0, int n) {
		int k = static_cast<int>(w.size());
		std::vector<int> dims;
		std::vector<int> vars;
		std::size_t total = 1;
		for (int c = 0; c < k; ++c)
			if (c != drop) {
				vars.push_back(c);
				dims.push_back(deg[c] + 1);
				total *= deg[c] + 1;
				if (total > 4'000'000) throw resource_error("exact-weight matching: evaluation grid too large");
			}
		std::vector<std::uint64_t> t(total);
		std::vector<int> idx(vars.size(), 0);
		for (std::size_t flat = 0; flat < total; ++flat) {
			std::size_t rem = flat;
			for (std::size_t i = vars.size(); i-- > 0;) {
				idx[i] = static_cast<int>(rem % dims[i]);
				rem /= dims[i];
			}
			std::vector<std::uint64_t> z(k, 1);
			for (std::size_t i = 0; i < vars.size(); ++i) z[vars[i]] = static_cast<std::uint64_t>(idx[i]);
			auto a = build(z);
			t[flat] = pfaffian(a, n, p_);
		}
		// values -> coefficients along each axis
		std::size_t stride = 1;
		for (std::size_t i = vars.size(); i-- > 0;) {
			int d = dims[i] - 1;
			auto basis = lagrange_basis(d, p_);
			std::size_t block = stride * dims[i];
			std::vector<std::uint64_t> line(dims[i]), out(dims[i]);
			for (std::size_t base = 0; base < total; base += block)
				for (std::size_t off = 0; off < stride; ++off) {
					for (int j = 0; j <= d; ++j) line[j] = t[base + off + j * stride];
					std::fill(out.begin(), out.end(), 0);
					for (int j = 0; j <= d; ++j)
						if (line[j])
							for (int e = 0; e <= d; ++e) out[e] = (out[e] + mulmod(line[j], basis[j][e], p_)) % p_;
					for (int e = 0; e <= d; ++e) t[base + off + e * stride] = out[e];
				}
			stride = block;
		}
		// exponent of the dropped class is n/2 - sum of the others
		std::uint64_t acc = 0;
		for (std::size_t flat = 0; flat < total; ++flat) {
			if (!t[flat]) continue;
			std::size_t rem = flat;
			std::int64_t weight = 0, used = 0;
			for (std::size_t i = vars.size(); i-- > 0;) {
				int e = static_cast<int>(rem % dims[i]);
				rem /= dims[i];
				weight += e * w[vars[i]];
				used += e;
			}
			std::int64_t rest = n / 2 - used;
			if (rest < 0) continue;
			weight += rest * w[drop];
			if (weight == w0) acc = (acc + t[flat]) % p_;
		}
		return acc != 0;
	}

	const Multigraph& g_;
	std::uint64_t p_;
};

}  // namespace detail

inline std::uint64_t choose_prime(const Multigraph& g, const RandomnessConfig& rc) {
	if (rc.prime) {
		if (!detail::is_prime(rc.prime)) throw input_error("configured modulus is not prime");
		return rc.prime;
	}
	std::vector<std::int64_t> w;
	for (const auto& e : g.edges) w.push_back(e.weight);
	std::sort(w.rbegin(), w.rend());
	std::uint64_t wmax = 0;
	for (int i = 0; i < g.n / 2 && i < static_cast<int>(w.size()); ++i) wmax += static_cast<std::uint64_t>(w[i]);
	std::uint64_t bound = std::max<std::uint64_t>(1ull << 20, 2 * (wmax + g.edges.size()));
	if (bound > (1ull << 62)) throw resource_error("weights too large for the field");
	return detail::next_prime_above(bound);
}

inline bool is_perfect_matching_of_weight(const Multigraph& g, const std::vector<int>& m, std::int64_t w0) {
	std::vector<char> seen(g.n, 0);
	std::int64_t w = 0;
	for (int i : m) {
		if (i < 0 || i >= static_cast<int>(g.edges.size())) return false;
		const auto& e = g.edges[i];
		if (seen[e.u] || seen[e.v]) return false;
		seen[e.u] = seen[e.v] = 1;
		w += e.weight;
	}
	return static_cast<int>(m.size()) * 2 == g.n && w == w0;
}

// Returns edge indices of a perfect matching of total weight exactly w0.
// One-sided: a returned matching is always audited.
inline std::optional<std::vector<int>> exact_weight_perfect_matching(const Multigraph& g, std::int64_t w0,
                                                                      const RandomnessConfig& rc = {}) {
	if (g.n % 2 || w0 < 0) return std::nullopt;
	for (const auto& e : g.edges)
		if (e.weight < 0) throw input_error("negative edge weight");
	std::uint64_t p = choose_prime(g, rc);
	std::mt19937_64 rng(rc.seed);
	detail::ExactWeightTester tester(g, p);
	std::vector<char> alive(g.n, 1);
	int reps = std::max(rc.repetitions, 1);
	if (!tester.test(alive, w0, reps, rng)) return std::nullopt;

	std::vector<std::vector<int>> inc(g.n);
	for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
		inc[g.edges[i].u].push_back(i);
		inc[g.edges[i].v].push_back(i);
	}
	std::vector<int> chosen;
	std::int64_t left = w0;
	for (int u = 0; u < g.n; ++u) {
		if (!alive[u]) continue;
		int pick = -1;
		for (int pass = 0; pass < 2 && pick < 0; ++pass) {
			std::set<std::pair<int, std::int64_t>> tried;
			for (int i : inc[u]) {
				const auto& e = g.edges[i];
				int v = e.u == u ? e.v : e.u;
				if (!alive[v] || e.weight > left || !tried.insert({v, e.weight}).second) continue;
				alive[u] = alive[v] = 0;
				bool ok = tester.test(alive, left - e.weight, pass == 0 ? 1 : reps, rng);
				alive[u] = alive[v] = 1;
				if (ok) {
					pick = i;
					break;
				}
			}
		}
		if (pick < 0) return std::nullopt;
		const auto& e = g.edges[pick];
		alive[e.u] = alive[e.v] = 0;
		left -= e.weight;
		chosen.push_back(pick);
	}
	if (!is_perfect_matching_of_weight(g, chosen, w0)) return std::nullopt;
	return chosen;
}

inline bool meets_demand(const Multigraph& g, const std::vector<int>& m, const ColorDemand& f) {
	std::vector<char> seen(g.n, 0);
	std::map<int, int> cnt;
	for (int i : m) {
		const auto& e = g.edges[i];
		if (seen[e.u] || seen[e.v]) return false;
		seen[e.u] = seen[e.v] = 1;
		++cnt[e.color];
	}
	for (auto [c, k] : cnt)
		if (!f.count(c) || f.at(c) != k) return false;
	for (auto [c, k] : f)
		if (k != (cnt.count(c) ? cnt[c] : 0)) return false;
	return true;
}

// Edge indices of a matching with exactly f(i) edges of colour i (and nothing else).
inline std::optional<std::vector<int>> colored_matching(const Multigraph& g, const ColorDemand& f,
                                                         const RandomnessConfig& rc = {}) {
	std::int64_t n = g.n;
	int s = 0;
	std::map<int, int> index;
	for (auto [c, k] : f) {
		if (k < 0) throw input_error("negative colour demand");
		if (k > n) return std::nullopt;
		s += k;
		if (k > 0) index.emplace(c, 0);
	}
	if (2 * s > n) return std::nullopt;
	if (s == 0) return std::vector<int>{};
	int next = 1;
	for (auto& [c, i] : index) i = next++;

	Multigraph h{static_cast<int>(n + (n - 2 * s)), {}};
	std::vector<int> back;
	std::int64_t w0 = 0;
	auto pw = [&](int i) {
		std::int64_t r = 1;
		for (int j = 0; j < i; ++j) {
			if (r > (std::int64_t{1} << 60) / n) throw resource_error("colour encoding overflows");
			r *= n;
		}
		return r;
	};
	for (auto [c, i] : index) w0 += f.at(c) * pw(i);
	for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
		const auto& e = g.edges[i];
		auto it = index.find(e.color);
		if (it == index.end()) continue;
		h.add_edge(e.u, e.v, pw(it->second), e.color);
		back.push_back(i);
	}
	int original = static_cast<int>(back.size());
	for (int x = static_cast<int>(n); x < h.n; ++x)
		for (int v = 0; v < n; ++v) h.add_edge(v, x, 0, 0);
	auto pm = exact_weight_perfect_matching(h, w0, rc);
	if (!pm) return std::nullopt;
	std::vector<int> m;
	for (int i : *pm)
		if (i < original) m.push_back(back[i]);
	std::sort(m.begin(), m.end());
	if (!meets_demand(g, m, f)) return std::nullopt;
	return m;
}

// Minimum-weight matching with exactly k edges (weights small nonnegative ints).
inline std::optional<std::vector<int>> min_weight_matching_of_size(const Multigraph& g, int k,
                                                                    const RandomnessConfig& rc = {}) {
	if (k < 0) throw input_error("negative matching size");
	if (2 * k > g.n) return std::nullopt;
	if (k == 0) return std::vector<int>{};
	if (g.n <= 16) {
		std::vector<std::vector<int>> inc(g.n);
		for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
			inc[g.edges[i].u].push_back(i);
			inc[g.edges[i].v].push_back(i);
		}
		const std::int64_t INF = std::numeric_limits<std::int64_t>::max() / 4;
		std::vector<std::int64_t> memo(static_cast<std::size_t>(k + 1) << g.n, -1);
		std::function<std::int64_t(unsigned, int)> best = [&](unsigned mask, int r) -> std::int64_t {
			if (r == 0) return 0;
			if (std::popcount(mask) < 2 * r) return INF;
			auto& slot = memo[(static_cast<std::size_t>(r) << g.n) | mask];
			if (slot >= 0) return slot;
			int u = std::countr_zero(mask);
			std::int64_t res = best(mask & ~(1u << u), r);
			for (int i : inc[u]) {
				const auto& e = g.edges[i];
				int v = e.u == u ? e.v : e.u;
				if (!(mask >> v & 1)) continue;
				std::int64_t sub = best(mask & ~(1u << u) & ~(1u << v), r - 1);
				if (sub < INF) res = std::min(res, sub + e.weight);
			}
			return slot = res;
		};
		unsigned full = g.n == 32 ? ~0u : ((1u << g.n) - 1);
		if (best(full, k) >= INF) return std::nullopt;
		std::vector<int> m;
		unsigned mask = full;
		for (int r = k; r > 0;) {
			int u = std::countr_zero(mask);
			std::int64_t cur = best(mask, r);
			if (best(mask & ~(1u << u), r) == cur) {
				mask &= ~(1u << u);
				continue;
			}
			for (int i : inc[u]) {
				const auto& e = g.edges[i];
				int v = e.u == u ? e.v : e.u;
				if (!(mask >> v & 1)) continue;
				std::int64_t sub = best(mask & ~(1u << u) & ~(1u << v), r - 1);
				if (sub < INF && sub + e.weight == cur) {
					m.push_back(i);
					mask &= ~(1u << u) & ~(1u << v);
					--r;
					break;
				}
			}
		}
		std::sort(m.begin(), m.end());
		return m;
	}
	Multigraph h{g.n + (g.n - 2 * k), g.edges};
	int original = static_cast<int>(g.edges.size());
	std::int64_t wmax = 0;
	for (const auto& e : g.edges) wmax = std::max(wmax, e.weight);
	for (int x = g.n; x < h.n; ++x)
		for (int v = 0; v < g.n; ++v) h.add_edge(v, x, 0, 0);
	for (std::int64_t w0 = 0; w0 <= wmax * k; ++w0) {
		auto pm = exact_weight_perfect_matching(h, w0, rc);
		if (!pm) continue;
		std::vector<int> m;
		for (int i : *pm)
			if (i < original) m.push_back(i);
		std::sort(m.begin(), m.end());
		if (static_cast<int>(m.size()) == k) return m;
	}
	return std::nullopt;
}

}  // namespace pgk
