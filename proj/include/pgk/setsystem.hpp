#pragma once
#include <array>

#include "graph.hpp"

namespace pgk {

// universe is {0, ..., universe-1}
struct SetSystem {
	int universe = 0;
	std::vector<VertexSet> sets;
	int uniformity = -1;

	void validate() const {
		if (universe < 0) throw input_error("negative universe size");
		for (const auto& s : sets) {
			for (std::size_t i = 0; i < s.size(); ++i) {
				if (s[i] < 0 || s[i] >= universe) throw input_error("set element outside universe");
				if (i > 0 && s[i] <= s[i - 1]) throw input_error("set not sorted or has duplicates");
			}
			if (uniformity >= 0 && static_cast<int>(s.size()) != uniformity) throw input_error("set system not uniform");
		}
	}
	bool is_uniform(int r) const {
		return std::all_of(sets.begin(), sets.end(), [&](const VertexSet& s) { return static_cast<int>(s.size()) == r; });
	}
};

struct X3CInstance {
	int universe = 0;
	std::vector<std::array<int, 3>> triples;
};

inline void write_setsystem(std::ostream& os, const SetSystem& s) {
	os << "u " << s.universe << '\n';
	for (const auto& set : s.sets) {
		os << 's';
		for (int x : set) os << ' ' << x;
		os << '\n';
	}
}

inline SetSystem read_setsystem(std::istream& is) {
	SetSystem s;
	bool header = false;
	std::string line;
	while (std::getline(is, line)) {
		if (line.empty() || line[0] == '#') continue;
		std::istringstream ls(line);
		char tag = 0;
		ls >> tag;
		if (tag == 'u') {
			if (header || !(ls >> s.universe)) throw input_error("bad universe line");
			header = true;
		} else if (tag == 's') {
			if (!header) throw input_error("set before universe line");
			VertexSet set;
			int x;
			while (ls >> x) set.push_back(x);
			s.sets.push_back(normalized(set));
		} else {
			throw input_error("unknown set-system line");
		}
	}
	if (!header) throw input_error("missing universe line");
	s.validate();
	return s;
}

}  // namespace pgk
