#include "parorb/strata.hpp"

#include <algorithm>
#include <stdexcept>

namespace parorb {

int delta(const RootSystem& rs, const WeylElement& w, int i, int j) {
    const QVec om = rs.fundamental_coweight(i);
    const QVec moved = act(inverse(w), om);
    QVec diff(om.size());
    for (std::size_t k = 0; k < om.size(); ++k) diff[k] = om[k] - moved[k];
    const Rational e = rs.eta(diff, j);
    if (e.denominator() != 1 || e < 0)
        throw std::logic_error("delta of " + w.str() + " is " + format_rational(e) + ", not a non-negative integer");
    return static_cast<int>(e.numerator());
}

std::string FlagDescriptor::name() const {
    std::string s;
    for (const auto& c : components) {
        if (c.marked.empty()) continue;
        if (!s.empty()) s += " x ";
        s += c.name();
    }
    return s.empty() ? "pt" : s;
}

NodeSet FlagDescriptor::marked_ambient() const {
    NodeSet s;
    for (const auto& c : components)
        for (int k : c.marked) s.insert(c.levi.nodes.at(k - 1));
    return s;
}

NodeSet K_of(const ParabolicQuotient& pq, const DoubleCoset& dc, NodeSet J_P) {
    const RootSystem& rs = pq.root_system();
    const WeylElement winv = inverse(pq[dc.w_min]);
    NodeSet K;
    for (int s : J_P.nodes()) {
        const IVec img = act(winv, rs.simple_root(s));
        for (int q : pq.levi_nodes().nodes())
            if (img == rs.simple_root(q)) K.insert(s);
    }
    return K;
}

FlagDescriptor flag_of(const RootSystem& rs, NodeSet J_P, NodeSet K) {
    FlagDescriptor f;
    for (auto& levi : levi_components(rs, J_P)) {
        FlagComponent c{levi, {}, {}};
        for (std::size_t k = 0; k < levi.nodes.size(); ++k)
            if (!K.contains(levi.nodes[k])) c.marked.push_back(static_cast<int>(k) + 1);
        f.components.push_back(std::move(c));
    }
    f.dim = static_cast<int>(rs.positive_roots_in(J_P).size() - rs.positive_roots_in(K).size());
    return f;
}

std::map<int, Rational> h_prime_weights(const RootSystem& rs, const WeylElement& w_min, NodeSet J_P, int j) {
    const WeylElement winv = inverse(w_min);
    std::map<int, Rational> out;
    for (int k : J_P.nodes()) {
        const IVec img = act(winv, rs.simple_coroot(k));
        out[k] = rs.coroot_coordinates(to_rational(img)).at(j - 1);
    }
    return out;
}

FlagDescriptor h_prime_of(const OrbitStratum& s, const GrassmannianCase& gc) {
    const FlagPrediction p = gc.predicted_flag(s.orbit_label);
    FlagDescriptor f = s.flag;
    NodeSet predicted;
    for (auto [node, coef] : p.coefficients) predicted.insert(node);
    if (!(predicted == f.marked_ambient()))
        throw std::logic_error(gc.fixture_name() + " d=" + std::to_string(s.d) + ": fibration marks " +
                               predicted.str() + " but K leaves " + f.marked_ambient().str());
    for (auto& c : f.components) {
        c.h_prime.clear();
        for (int k : c.marked) c.h_prime.push_back(p.coefficients.at(c.levi.nodes.at(k - 1)));
    }
    f.scale = p.scale;
    return f;
}

Stratification stratify(const GrassmannianCase& gc) {
    const RootSystem rs(gc.type(), gc.rank());
    ParabolicQuotient pq = ParabolicQuotient::grassmannian(rs, gc.q_node());
    NodeSet J_P = NodeSet::all(rs.rank());
    J_P.erase(gc.p_node());

    Stratification st{gc, pq, J_P, {}, std::vector<std::size_t>(pq.size()), std::vector<int>(pq.size())};
    for (std::size_t k = 0; k < pq.size(); ++k) st.delta_of[k] = delta(rs, pq[k], gc.p_node(), gc.q_node());

    for (auto& dc : double_cosets(pq, J_P)) {
        OrbitStratum s;
        s.delta = st.delta_of[dc.w_min];
        for (std::size_t k : dc.members)
            if (st.delta_of[k] != s.delta)
                throw std::logic_error(gc.fixture_name() + ": delta not constant on the class of " +
                                       pq[dc.w_min].str());
        s.orbit_label = gc.orbit_label(pq[dc.w_min]);
        s.d = gc.normalize(s.orbit_label);
        s.K = K_of(pq, dc, J_P);
        s.flag = flag_of(rs, J_P, s.K);
        s.fiber_dim = pq[dc.w_min].length();
        s.dc = std::move(dc);
        s.flag = h_prime_of(s, gc);
        st.strata.push_back(std::move(s));
    }
    std::sort(st.strata.begin(), st.strata.end(),
              [](const OrbitStratum& a, const OrbitStratum& b) { return a.delta < b.delta; });
    for (std::size_t t = 0; t < st.strata.size(); ++t)
        for (std::size_t k : st.strata[t].dc.members) st.stratum_of[k] = t;
    return st;
}

}  // namespace parorb
