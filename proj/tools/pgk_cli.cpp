// pgk: batch front end for generators, reductions, recognizers, kernels and the oracle.
// exit codes: 0 ok, 1 usage or input error, 2 resource error, 3 verify found a disagreement
#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "pgk/pgk.hpp"

namespace fs = std::filesystem;
using namespace pgk;

namespace {

std::string slurp(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) throw input_error("cannot open " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

std::uint64_t fnv1a(const std::string& s) {
	std::uint64_t h = 1469598103934665603ULL;
	for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
	return h;
}

Graph load_graph(const std::string& path) { return from_text(slurp(path)); }

SetSystem load_setsystem(const std::string& path) {
	std::istringstream is(slurp(path));
	return read_setsystem(is);
}

CanonicalInstance load_canonical(const std::string& path) {
	std::istringstream is(slurp(path));
	return read_canonical(is);
}

std::map<std::string, std::string> load_params(const std::string& path) {
	std::map<std::string, std::string> kv;
	std::istringstream is(slurp(path));
	std::string line;
	while (std::getline(is, line)) {
		auto sp = line.find(' ');
		if (sp != std::string::npos) kv[line.substr(0, sp)] = line.substr(sp + 1);
	}
	return kv;
}

struct RunManifest {
	std::string command;
	std::vector<std::string> arguments;
	std::uint64_t seed = 1;
	std::vector<std::pair<std::string, std::uint64_t>> inputs;
	std::vector<std::string> outputs;
	double wall_seconds = 0;
	std::vector<std::pair<std::string, std::string>> extra;

	void input(const std::string& path) { inputs.emplace_back(path, fnv1a(slurp(path))); }
	void write(const fs::path& dir) const {
		std::ofstream os(dir / "manifest.txt");
		os << "command " << command << "\narguments";
		for (const auto& a : arguments) os << ' ' << a;
		os << "\nseed " << seed << '\n';
		for (const auto& [p, h] : inputs) os << "input " << p << " fnv1a64:" << std::hex << h << std::dec << '\n';
		for (const auto& o : outputs) os << "output " << o << '\n';
		for (const auto& [k, v] : extra) os << k << ' ' << v << '\n';
		os << "wall_seconds " << wall_seconds << '\n';
	}
};

class Output {
public:
	Output(std::string dir, RunManifest& man) : dir_(std::move(dir)), man_(man) {
		if (!dir_.empty()) fs::create_directories(dir_);
	}
	void put(const std::string& name, const std::string& body) {
		if (dir_.empty()) {
			std::cout << body;
			return;
		}
		std::ofstream(fs::path(dir_) / name, std::ios::binary) << body;
		man_.outputs.push_back(name);
	}
	void finish(std::chrono::steady_clock::time_point t0) {
		man_.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
		if (!dir_.empty()) man_.write(dir_);
	}

private:
	std::string dir_;
	RunManifest& man_;
};

std::string graph_text(const Graph& g) { return to_text(g); }

std::string setsystem_text(const SetSystem& s) {
	std::ostringstream os;
	write_setsystem(os, s);
	return os.str();
}

std::array<int, 4> parse_abcd(const std::string& s) {
	std::array<int, 4> v{};
	char c1, c2, c3;
	std::istringstream is(s);
	if (!(is >> v[0] >> c1 >> v[1] >> c2 >> v[2] >> c3 >> v[3]) || c1 != ',' || c2 != ',' || c3 != ',')
		throw input_error("--abcd expects a,b,c,d");
	return v;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"pgk: subgraph detection, packing and kernelization toolkit"};
	app.require_subcommand(1);
	app.fallthrough();
	std::uint64_t seed = 1;
	app.add_option("--seed", seed, "seed for every random choice");
	OracleBudget budget{40, 40, 2'000'000'000};

	std::string out, host, pattern, kind = "path", mode = "packing", abcd = "3,0,0,0", to, gadget = "K3";
	std::string kernel_out, model_out;
	std::vector<std::string> from;
	int n = 4, s = 3, t = 1, m = -1, universe = 6, r = 3, sets = 4, count = 1;
	double p = 0.3;
	bool setcover = false, plant = false, pad = false, relax = false;

	auto* gen_family = app.add_subcommand("gen-family", "write a member of a pattern family");
	gen_family->add_option("--kind", kind, "family name")->required();
	gen_family->add_option("--n", n, "size parameter");
	gen_family->add_option("--s", s, "cycle or path length");
	gen_family->add_option("--t", t, "long fountain tail");
	gen_family->add_option("--m", m, "second biclique side");
	gen_family->add_option("--out", out, "output file (stdout if absent)");

	auto* gen_instance = app.add_subcommand("gen-instance", "random host graph or set system");
	gen_instance->add_option("--n", n, "vertices");
	gen_instance->add_option("--p", p, "edge probability");
	gen_instance->add_flag("--setcover", setcover, "emit an r-uniform set system instead");
	gen_instance->add_option("--universe", universe, "set-system universe size");
	gen_instance->add_option("--r", r, "set size");
	gen_instance->add_option("--sets", sets, "number of random sets");
	gen_instance->add_flag("--plant", plant, "also add a random exact cover");
	gen_instance->add_option("--out", out, "output file (stdout if absent)");

	auto* reduce = app.add_subcommand("reduce", "run a reduction or cross-composition");
	reduce->add_option("--from", from, "input set system, or canonical instances for compositions")->required();
	reduce->add_option("--to", to,
	                   "regularize | <fountain|long_fountain|opera_house|subdiv_star|double_broom>-packing | "
	                   "<diamond_fan|subdiv_tree>-subgraph | canonical | star-triangles | twostars-paths")
	    ->required();
	reduce->add_option("--s", s, "cycle or path length");
	reduce->add_option("--t", t, "long fountain tail");
	reduce->add_option("--gadget", gadget, "K3 or P3 for canonical");
	reduce->add_flag("--pad", pad, "pad X3C input for the degree condition");
	reduce->add_flag("--relax-guards", relax, "build micro cross-compositions below the size guards");
	reduce->add_option("--out", out, "output directory")->required();

	auto* classify = app.add_subcommand("classify", "recognize splittability of a pattern");
	classify->add_option("--pattern", pattern, "pattern graph")->required();
	classify->add_option("--abcd", abcd, "a,b,c,d");

	auto* kernelize = app.add_subcommand("kernelize", "kernelize an instance");
	kernelize->add_option("--mode", mode, "packing | subgraph | turing | star-paths | fountain-triangles");
	kernelize->add_option("--host", host, "host graph")->required();
	kernelize->add_option("--pattern", pattern, "pattern graph")->required();
	kernelize->add_option("--t", t, "packing count");
	kernelize->add_option("--abcd", abcd, "a,b,c,d");
	kernelize->add_option("--out", out, "output directory")->required();

	auto* solve = app.add_subcommand("solve", "decide by exhaustive search");
	solve->add_option("--host", host, "host graph")->required();
	solve->add_option("--pattern", pattern, "pattern graph")->required();
	solve->add_option("--t", count, "number of disjoint copies");
	solve->add_option("--model", model_out, "write the model here");
	solve->add_option("--max-host", budget.max_host, "oracle host budget");
	solve->add_option("--max-pattern", budget.max_pattern, "oracle pattern budget");

	auto* verify = app.add_subcommand("verify", "compare a kernelized answer with the oracle");
	verify->add_option("--kernel-out", kernel_out, "directory written by kernelize")->required();
	verify->add_option("--host", host, "original host graph")->required();
	verify->add_option("--pattern", pattern, "pattern graph")->required();
	verify->add_option("--max-host", budget.max_host, "oracle host budget");
	verify->add_option("--max-pattern", budget.max_pattern, "oracle pattern budget");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		std::cerr << app.help();
		return 1;
	}

	auto t0 = std::chrono::steady_clock::now();
	RunManifest man;
	man.seed = seed;
	man.arguments.assign(argv + 1, argv + argc);
	try {
		if (*gen_family) {
			man.command = "gen-family";
			FamilySpec sp{parse_kind(kind), n, s, t, m};
			auto text = graph_text(build_family(sp).graph);
			if (out.empty()) std::cout << text;
			else std::ofstream(out, std::ios::binary) << text;
		} else if (*gen_instance) {
			man.command = "gen-instance";
			std::mt19937_64 rng(seed);
			std::string text;
			if (setcover) {
				if (r < 1 || universe < r) throw input_error("need 1 <= r <= universe");
				SetSystem sys{universe, {}, r};
				auto add = [&](VertexSet x) { sys.sets.push_back(normalized(std::move(x))); };
				for (int i = 0; i < sets; ++i) {
					VertexSet all = iota_set(universe);
					std::shuffle(all.begin(), all.end(), rng);
					add(VertexSet(all.begin(), all.begin() + r));
				}
				if (plant) {
					if (universe % r) throw input_error("--plant needs r to divide the universe");
					VertexSet all = iota_set(universe);
					std::shuffle(all.begin(), all.end(), rng);
					for (int i = 0; i < universe; i += r) add(VertexSet(all.begin() + i, all.begin() + i + r));
				}
				std::shuffle(sys.sets.begin(), sys.sets.end(), rng);
				text = setsystem_text(sys);
			} else {
				Graph g(n);
				std::bernoulli_distribution coin(p);
				for (int u = 0; u < n; ++u)
					for (int v = u + 1; v < n; ++v)
						if (coin(rng)) g.add_edge(u, v);
				text = graph_text(g);
			}
			if (out.empty()) std::cout << text;
			else std::ofstream(out, std::ios::binary) << text;
		} else if (*reduce) {
			man.command = "reduce";
			for (const auto& f : from) man.input(f);
			Output o(out, man);
			auto dash = to.rfind('-');
			std::string base = dash == std::string::npos ? to : to.substr(0, dash);
			std::string suffix = dash == std::string::npos ? "" : to.substr(dash + 1);
			if (to == "regularize") {
				o.put("setcover.txt", setsystem_text(regularize_setcover(load_setsystem(from.at(0)))));
			} else if (suffix == "packing") {
				auto inst = reduce_to_packing(load_setsystem(from.at(0)), {parse_packing_kind(base), s, t});
				o.put("host.txt", graph_text(inst.g));
				o.put("pattern.txt", graph_text(inst.h));
				o.put("params.txt", "t " + std::to_string(inst.t) + "\nk " + std::to_string(inst.k()) + "\n");
			} else if (suffix == "subgraph") {
				if (base != "diamond_fan" && base != "subdiv_tree") throw input_error("unknown subgraph target " + base);
				auto kindv = base == "diamond_fan" ? SubgraphKind::diamond_fan : SubgraphKind::subdiv_tree;
				auto inst = reduce_to_subgraph(load_setsystem(from.at(0)), kindv, s);
				o.put("host.txt", graph_text(inst.g));
				o.put("pattern.txt", graph_text(inst.h));
			} else if (to == "canonical") {
				auto sys = load_setsystem(from.at(0));
				X3CInstance x{sys.universe, {}};
				for (const auto& st : sys.sets) {
					if (st.size() != 3) throw input_error("canonical reduction needs a 3-uniform set system");
					x.triples.push_back({st[0], st[1], st[2]});
				}
				if (gadget != "K3" && gadget != "P3") throw input_error("--gadget must be K3 or P3");
				auto c = x3c_to_canonical(x, gadget == "K3" ? Gadget::K3 : Gadget::P3, pad);
				std::ostringstream os;
				write_canonical(os, c);
				o.put("canonical.txt", os.str());
			} else if (to == "star-triangles" || to == "twostars-paths") {
				std::vector<CanonicalInstance> in;
				for (const auto& f : from) in.push_back(load_canonical(f));
				auto res = to == "star-triangles" ? crosscompose_star_triangles(in, {relax})
				                                  : crosscompose_twostars_paths(in, {relax});
				o.put("host.txt", graph_text(res.g));
				o.put("pattern.txt", graph_text(res.h));
				man.extra.emplace_back("route", res.route);
			} else {
				throw input_error("unknown reduction target " + to);
			}
			o.finish(t0);
		} else if (*classify) {
			auto h = load_graph(pattern);
			auto [a, b, c, d] = parse_abcd(abcd);
			auto st = is_small_thin(h, a, b);
			std::cout << "small-thin(" << a << "," << b << ") " << (st.ok ? "yes" : "no") << '\n';
			auto cert = find_split(h, a, b, c, d);
			std::cout << "split(" << a << "," << b << "," << c << "," << d << ") " << (cert ? "yes" : "no") << '\n';
			if (cert) std::cout << to_text(*cert);
			std::cout << "matching-splittable(" << c << ") " << (is_matching_splittable(h, c) ? "yes" : "no") << '\n';
		} else if (*kernelize) {
			man.command = "kernelize";
			man.input(host);
			man.input(pattern);
			auto g = load_graph(host);
			auto h = load_graph(pattern);
			auto [a, b, c, d] = parse_abcd(abcd);
			Output o(out, man);
			man.extra.emplace_back("mode", mode);
			if (mode == "packing") {
				auto res = packing_kernel({g, h, t}, a, b);
				o.put("kernel.txt", graph_text(res.g));
				o.put("params.txt", "t " + std::to_string(t) + "\n");
			} else if (mode == "subgraph" || mode == "star-paths" || mode == "fountain-triangles") {
				auto res = mode == "subgraph"     ? small_thin_kernel(g, h, a, b)
				           : mode == "star-paths" ? star_paths_kernel(g, h)
				                                  : fountain_triangles_kernel(g, h);
				o.put("kernel.txt", graph_text(res.g));
				man.extra.emplace_back("route", res.route);
				std::ostringstream bd;
				bd << res.bound;
				man.extra.emplace_back("bound", bd.str());
			} else if (mode == "turing") {
				auto tr = turing_kernel(g, h, a, b, c, d, brute_oracle(budget));
				std::ostringstream ts;
				for (std::size_t i = 0; i < tr.queries.size(); ++i) {
					const auto& q = tr.queries[i];
					std::string name = "query" + std::to_string(i) + ".txt";
					o.put(name, graph_text(induced_subgraph(g, q.x).graph));
					ts << name << ' ' << (q.answer ? "YES" : "NO") << ' ' << q.x.size() << ' ' << q.bound << '\n';
				}
				ts << "answer " << (tr.answer ? "YES" : "NO") << '\n';
				o.put("transcript.txt", ts.str());
				std::cout << (tr.answer ? "YES" : "NO") << '\n';
			} else {
				throw input_error("unknown kernelize mode " + mode);
			}
			o.finish(t0);
		} else if (*solve) {
			auto g = load_graph(host);
			auto h = disjoint_copies(load_graph(pattern), count);
			auto model = brute_subgraph(g, h, {}, budget);
			std::cout << (model ? "YES" : "NO") << '\n';
			if (model && !model_out.empty()) {
				std::ofstream os(model_out);
				for (int v = 0; v < h.n(); ++v) os << v << ' ' << (*model)[v] << '\n';
			}
		} else if (*verify) {
			fs::path dir(kernel_out);
			auto params = load_params((dir / "manifest.txt").string());
			auto g = load_graph(host);
			auto h = load_graph(pattern);
			std::string kmode = params.count("mode") ? params["mode"] : "subgraph";
			int copies = 1;
			if (fs::exists(dir / "params.txt")) {
				auto pk = load_params((dir / "params.txt").string());
				if (pk.count("t")) copies = std::stoi(pk["t"]);
			}
			auto hh = disjoint_copies(h, copies);
			bool original = brute_subgraph(g, hh, {}, budget).has_value();
			bool kernel;
			std::string size = "-";
			if (kmode == "turing") {
				auto tp = load_params((dir / "transcript.txt").string());
				kernel = tp["answer"] == "YES";
			} else {
				auto k = load_graph((dir / "kernel.txt").string());
				kernel = brute_subgraph(k, hh, {}, budget).has_value();
				size = std::to_string(k.n());
				if (params.count("bound") && k.n() > std::stold(params["bound"]))
					throw std::logic_error("kernel exceeds its recorded bound");
			}
			std::cout << "original " << (original ? "YES" : "NO") << " |V|=" << g.n() << '\n';
			std::cout << "kernel   " << (kernel ? "YES" : "NO") << " |V|=" << size << '\n';
			std::cout << (original == kernel ? "agree" : "DISAGREE") << '\n';
			return original == kernel ? 0 : 3;
		}
	} catch (const resource_error& e) {
		std::cerr << "resource error: " << e.what() << '\n';
		return 2;
	} catch (const input_error& e) {
		std::cerr << "input error: " << e.what() << '\n';
		return 1;
	} catch (const precondition_error& e) {
		std::cerr << "precondition error: " << e.what() << '\n';
		return 1;
	}
	return 0;
}
