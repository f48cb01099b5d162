#pragma once

#include <map>
#include <vector>

#include "parorb/cosets.hpp"

namespace parorb {

// Dominant weight as non-negative coefficients on fundamental weights (index k-1 = node k).
struct DominantWeight {
    std::vector<int> coeffs;

    static DominantWeight fundamental(int rank, int node);
    NodeSet support() const;
    int pair_coroot(const RootSystem& rs, const IVec& coroot) const;  // <lambda, beta^vee>
};

struct HasseEdge {
    std::size_t from, to;
    int mult;
    IVec root;
};

struct ChevalleyTerm {
    std::size_t to;
    int mult;
    IVec root;
};

class HasseDiagram {
public:
    HasseDiagram(ParabolicQuotient pq, DominantWeight weight, std::vector<HasseEdge> edges);

    const ParabolicQuotient& quotient() const { return pq_; }
    const DominantWeight& weight() const { return weight_; }
    const std::vector<HasseEdge>& edges() const { return edges_; }
    std::size_t size() const { return pq_.size(); }
    int degree(std::size_t v) const { return pq_[v].length(); }
    int mult(std::size_t u, std::size_t w) const;  // 0 when absent

private:
    ParabolicQuotient pq_;
    DominantWeight weight_;
    std::vector<HasseEdge> edges_;
    std::map<std::pair<std::size_t, std::size_t>, int> lookup_;
};

std::vector<ChevalleyTerm> chevalley_edges(const ParabolicQuotient& pq, std::size_t u, const DominantWeight& lambda);
HasseDiagram build_hasse(const ParabolicQuotient& pq, const DominantWeight& lambda);

// Weighted count of maximal chains; bottom-up and top-down must agree.
long long chain_degree(const HasseDiagram& h, bool top_down = false);

}  // namespace parorb
