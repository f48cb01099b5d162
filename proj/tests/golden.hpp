#pragma once

#include <map>
#include <string>
#include <vector>

// Colored graded multigraph, as read from a golden figure file or from the JSON emitter.
struct ColoredGraph {
    std::vector<int> degree, stratum;
    std::map<std::pair<int, int>, int> mult;  // key (lo, hi)
    int edge(int a, int b) const;
};

ColoredGraph load_golden(const std::string& path);
ColoredGraph from_emitted_json(const std::string& text);

struct IsoResult {
    bool found = false;
    std::vector<int> map;  // golden vertex -> computed vertex
    std::string detail;
};

// Degree- and colour-preserving bijection matching every edge multiplicity; with
// cross_by_incidence, edges between strata only need to be present on both sides.
IsoResult find_isomorphism(const ColoredGraph& golden, const ColoredGraph& computed, bool cross_by_incidence);

std::string golden_path(const std::string& name);
