#pragma once

#include <string>
#include <vector>

#include "parorb/hasse.hpp"
#include "parorb/strata.hpp"

namespace parorb {

// Schubert cells of F = L/R as a product over the marked Levi factors, each a standalone
// quotient with its h' weight.  Vertices are mixed-radix tuples.
class FlagModel {
public:
    FlagModel(const FlagDescriptor& flag);

    std::size_t size() const { return size_; }
    const std::vector<FlagComponent>& factors() const { return factors_; }
    const std::vector<HasseDiagram>& diagrams() const { return diagrams_; }
    std::vector<std::size_t> decode(std::size_t v) const;
    std::size_t encode(const std::vector<std::size_t>& t) const;
    int length(std::size_t v) const;

    struct Edge {
        std::size_t from, to;
        int mult;
    };
    std::vector<Edge> edges() const;

private:
    std::vector<FlagComponent> factors_;
    std::vector<HasseDiagram> diagrams_;
    std::size_t size_ = 1;
};

// phi(u) = min_rep(u w_min), u given as a tuple of factor elements.
WeylElement phi(const ParabolicQuotient& pq, const FlagModel& F, std::size_t u, const WeylElement& w_min);

struct StratumCheck {
    std::size_t stratum;
    int delta;
    std::string flag;
    int scale;
    bool phi_ok = false;    // graded, length additive bijection onto the members
    bool edges_ok = false;  // mult_X(phi u, phi u') = s mult_F(u, u'), and no other internal edges
    std::string detail;
    std::vector<std::size_t> phi;  // F vertex -> X vertex
    bool pass() const { return phi_ok && edges_ok; }
};

struct DecomposedDiagram {
    Stratification st;
    HasseDiagram diagram;
    std::vector<std::size_t> cross_edges;  // indices into diagram.edges()
    std::vector<StratumCheck> checks;
    bool all_pass() const;
    std::size_t color(std::size_t v) const { return st.stratum_of[v]; }
};

DecomposedDiagram verify_decomposition(const GrassmannianCase& gc);
DecomposedDiagram decompose(Stratification st);

}  // namespace parorb
