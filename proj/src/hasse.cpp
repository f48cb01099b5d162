#include "parorb/hasse.hpp"

#include <algorithm>
#include <stdexcept>

namespace parorb {

DominantWeight DominantWeight::fundamental(int rank, int node) {
    if (node < 1 || node > rank) throw std::out_of_range("fundamental weight index out of range");
    DominantWeight w;
    w.coeffs.assign(rank, 0);
    w.coeffs[node - 1] = 1;
    return w;
}

NodeSet DominantWeight::support() const {
    NodeSet s;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) s.insert(static_cast<int>(k) + 1);
    return s;
}

int DominantWeight::pair_coroot(const RootSystem& rs, const IVec& coroot) const {
    const QVec c = rs.coroot_coordinates(to_rational(coroot));
    Rational total = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) total += coeffs[k] * c.at(k);
    if (total.denominator() != 1) throw std::logic_error("non-integral pairing of a weight with a coroot");
    return static_cast<int>(total.numerator());
}

HasseDiagram::HasseDiagram(ParabolicQuotient pq, DominantWeight weight, std::vector<HasseEdge> edges)
    : pq_(std::move(pq)), weight_(std::move(weight)), edges_(std::move(edges)) {
    for (const auto& e : edges_) lookup_[{e.from, e.to}] = e.mult;
}

int HasseDiagram::mult(std::size_t u, std::size_t w) const {
    auto it = lookup_.find({u, w});
    return it == lookup_.end() ? 0 : it->second;
}

std::vector<ChevalleyTerm> chevalley_edges(const ParabolicQuotient& pq, std::size_t u, const DominantWeight& lambda) {
    const RootSystem& rs = pq.root_system();
    if (static_cast<int>(lambda.coeffs.size()) != rs.rank()) throw std::invalid_argument("weight of wrong rank");
    for (int c : lambda.coeffs)
        if (c < 0) throw std::invalid_argument("weight is not dominant");
    const NodeSet outside = pq.generators().minus(pq.levi_nodes());
    if (lambda.support().intersect(outside).empty())
        throw std::invalid_argument("weight is supported inside the Levi of Q; its class vanishes");
    if (!lambda.support().intersect(pq.levi_nodes()).intersect(pq.generators()).empty())
        throw std::invalid_argument("weight is not trivial on the Levi of Q");

    std::vector<ChevalleyTerm> out;
    for (const auto& c : pq.covers()) {
        if (c.from != u) continue;
        const int m = lambda.pair_coroot(rs, RootSystem::coroot(c.root));
        if (m > 0) out.push_back({c.to, m, c.root});
    }
    return out;
}

HasseDiagram build_hasse(const ParabolicQuotient& pq, const DominantWeight& lambda) {
    std::vector<HasseEdge> edges;
    for (std::size_t u = 0; u < pq.size(); ++u)
        for (auto& t : chevalley_edges(pq, u, lambda)) edges.push_back({u, t.to, t.mult, t.root});
    return HasseDiagram(pq, lambda, std::move(edges));
}

long long chain_degree(const HasseDiagram& h, bool top_down) {
    const std::size_t n = h.size();
    std::vector<long long> ways(n, 0);
    auto edges = h.edges();
    if (!top_down) {
        ways[0] = 1;
        std::sort(edges.begin(), edges.end(), [&](const HasseEdge& a, const HasseEdge& b) {
            return h.degree(a.from) < h.degree(b.from);
        });
        for (const auto& e : edges) ways[e.to] += ways[e.from] * e.mult;
        return ways[n - 1];
    }
    ways[n - 1] = 1;
    std::sort(edges.begin(), edges.end(), [&](const HasseEdge& a, const HasseEdge& b) {
        return h.degree(a.to) > h.degree(b.to);
    });
    for (const auto& e : edges) ways[e.from] += ways[e.to] * e.mult;
    return ways[0];
}

}  // namespace parorb
