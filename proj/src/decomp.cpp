#include "parorb/decomp.hpp"

#include <algorithm>
#include <stdexcept>

namespace parorb {

FlagModel::FlagModel(const FlagDescriptor& flag) {
    for (const auto& c : flag.components) {
        if (c.marked.empty()) continue;
        if (c.h_prime.size() != c.marked.size()) throw std::logic_error("flag factor without h' coefficients");
        const RootSystem local = c.levi.root_system();
        NodeSet jr = NodeSet::all(local.rank());
        DominantWeight lambda;
        lambda.coeffs.assign(local.rank(), 0);
        for (std::size_t k = 0; k < c.marked.size(); ++k) {
            jr.erase(c.marked[k]);
            lambda.coeffs[c.marked[k] - 1] = c.h_prime[k];
        }
        ParabolicQuotient q(local, jr);
        diagrams_.push_back(build_hasse(q, lambda));
        factors_.push_back(c);
        size_ *= q.size();
    }
}

std::vector<std::size_t> FlagModel::decode(std::size_t v) const {
    std::vector<std::size_t> t(diagrams_.size());
    for (std::size_t f = diagrams_.size(); f-- > 0;) {
        const std::size_t r = diagrams_[f].size();
        t[f] = v % r;
        v /= r;
    }
    return t;
}

std::size_t FlagModel::encode(const std::vector<std::size_t>& t) const {
    std::size_t v = 0;
    for (std::size_t f = 0; f < diagrams_.size(); ++f) v = v * diagrams_[f].size() + t[f];
    return v;
}

int FlagModel::length(std::size_t v) const {
    int len = 0;
    const auto t = decode(v);
    for (std::size_t f = 0; f < t.size(); ++f) len += diagrams_[f].degree(t[f]);
    return len;
}

std::vector<FlagModel::Edge> FlagModel::edges() const {
    std::vector<Edge> out;
    for (std::size_t v = 0; v < size_; ++v) {
        const auto t = decode(v);
        for (std::size_t f = 0; f < diagrams_.size(); ++f)
            for (const auto& e : diagrams_[f].edges()) {
                if (e.from != t[f]) continue;
                auto s = t;
                s[f] = e.to;
                out.push_back({v, encode(s), e.mult});
            }
    }
    return out;
}

WeylElement phi(const ParabolicQuotient& pq, const FlagModel& F, std::size_t u, const WeylElement& w_min) {
    const RootSystem& rs = pq.root_system();
    const auto t = F.decode(u);
    WeylElement x = WeylElement::identity(rs.type(), rs.rank());
    for (std::size_t f = 0; f < t.size(); ++f)
        x = x * embed(rs, F.factors()[f].levi, F.diagrams()[f].quotient()[t[f]]);
    return min_rep(x * w_min, pq.levi_nodes());
}

bool DecomposedDiagram::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const StratumCheck& c) { return c.pass(); });
}

DecomposedDiagram decompose(Stratification st) {
    const int j = st.pq.q_node();
    HasseDiagram diagram = build_hasse(st.pq, DominantWeight::fundamental(st.pq.root_system().rank(), j));
    DecomposedDiagram out{std::move(st), std::move(diagram), {}, {}};
    const auto& pq = out.st.pq;

    for (std::size_t e = 0; e < out.diagram.edges().size(); ++e) {
        const auto& ed = out.diagram.edges()[e];
        if (out.st.stratum_of[ed.from] != out.st.stratum_of[ed.to]) out.cross_edges.push_back(e);
    }

    for (std::size_t s = 0; s < out.st.strata.size(); ++s) {
        const OrbitStratum& os = out.st.strata[s];
        StratumCheck c{s, os.delta, os.flag.name(), os.flag.scale, false, false, {}, {}};
        const FlagModel F(os.flag);
        const WeylElement& wmin = pq[os.dc.w_min];

        c.phi_ok = F.size() == os.dc.members.size();
        if (!c.phi_ok) c.detail = "F has " + std::to_string(F.size()) + " cells, stratum has " + std::to_string(os.dc.members.size());
        std::vector<bool> hit(pq.size(), false);
        for (std::size_t u = 0; u < F.size() && c.phi_ok; ++u) {
            const WeylElement x = phi(pq, F, u, wmin);
            auto idx = pq.index_of(x);
            if (!idx || out.st.stratum_of[*idx] != s || hit[*idx] || x.length() != F.length(u) + wmin.length()) {
                c.phi_ok = false;
                c.detail = "phi fails at cell " + std::to_string(u) + " -> " + x.str();
                break;
            }
            hit[*idx] = true;
            c.phi.push_back(*idx);
        }

        if (c.phi_ok) {
            const auto fe = F.edges();
            c.edges_ok = true;
            for (const auto& e : fe) {
                const int mx = out.diagram.mult(c.phi[e.from], c.phi[e.to]);
                if (mx != c.scale * e.mult) {
                    c.edges_ok = false;
                    c.detail = "edge " + pq[c.phi[e.from]].str() + " -> " + pq[c.phi[e.to]].str() + ": X has " +
                               std::to_string(mx) + ", F gives " + std::to_string(c.scale) + "x" + std::to_string(e.mult);
                    break;
                }
            }
            std::size_t internal = 0;
            for (const auto& ed : out.diagram.edges())
                if (out.st.stratum_of[ed.from] == s && out.st.stratum_of[ed.to] == s) ++internal;
            if (c.edges_ok && internal != fe.size()) {
                c.edges_ok = false;
                c.detail = "stratum has " + std::to_string(internal) + " internal edges, F has " + std::to_string(fe.size());
            }
        }
        out.checks.push_back(std::move(c));
    }
    return out;
}

DecomposedDiagram verify_decomposition(const GrassmannianCase& gc) { return decompose(stratify(gc)); }

}  // namespace parorb
