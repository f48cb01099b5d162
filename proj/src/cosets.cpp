#include "parorb/cosets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "parorb/union_find.hpp"

namespace parorb {

ParabolicQuotient::ParabolicQuotient(RootSystem rs, NodeSet J_Q)
    : ParabolicQuotient(rs, J_Q, NodeSet::all(rs.rank())) {}

ParabolicQuotient::ParabolicQuotient(RootSystem rs, NodeSet J_Q, NodeSet generators)
    : rs_(std::move(rs)), jq_(J_Q), gens_(generators) {
    const NodeSet all = NodeSet::all(rs_.rank());
    if (!J_Q.minus(all).empty() || !generators.minus(all).empty())
        throw std::invalid_argument("parabolic subset has nodes outside the Dynkin diagram");

    // left multiplication by generators; sw stays minimal when it grows by one
    std::vector<WeylElement> simple;
    for (int i = 1; i <= rs_.rank(); ++i) simple.push_back(simple_reflection(rs_, i));
    elements_.push_back(WeylElement::identity(rs_.type(), rs_.rank()));
    index_.emplace(elements_[0], 0);
    for (std::size_t head = 0; head < elements_.size(); ++head) {
        for (int s : gens_.nodes()) {
            WeylElement v = simple[s - 1] * elements_[head];
            if (v.length() != elements_[head].length() + 1 || !is_min_rep(v, jq_)) continue;
            if (index_.emplace(v, elements_.size()).second) elements_.push_back(v);
        }
    }
    std::sort(elements_.begin(), elements_.end());
    index_.clear();
    for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], k);

    const NodeSet levi_of_gens = gens_.intersect(jq_);
    for (const auto& r : rs_.positive_roots())
        if (rs_.in_span(r, gens_) && !rs_.in_span(r, levi_of_gens)) outer_.push_back(r);

    std::vector<WeylElement> refl;
    for (const auto& r : outer_) refl.push_back(reflection(rs_, r));
    for (std::size_t u = 0; u < elements_.size(); ++u)
        for (std::size_t b = 0; b < outer_.size(); ++b) {
            WeylElement w = elements_[u] * refl[b];
            if (w.length() != elements_[u].length() + 1) continue;
            auto it = index_.find(w);
            if (it != index_.end()) covers_.push_back({u, it->second, outer_[b]});
        }
    std::sort(covers_.begin(), covers_.end(), [](const Cover& a, const Cover& b) {
        return std::tie(a.from, a.to) < std::tie(b.from, b.to);
    });
}

ParabolicQuotient ParabolicQuotient::grassmannian(const RootSystem& rs, int q_node) {
    if (q_node < 1 || q_node > rs.rank())
        throw std::invalid_argument("Grassmannian node " + std::to_string(q_node) + " outside 1.." +
                                    std::to_string(rs.rank()));
    if (rs.type() == RootType::D && q_node == rs.rank() - 1)
        throw std::invalid_argument(rs.name() + " with q_node " + std::to_string(q_node) +
                                    " is excluded: the Grassmannian of the other spinor family is the same"
                                    " variety as q_node " + std::to_string(rs.rank()) + ", use that instead");
    NodeSet jq = NodeSet::all(rs.rank());
    jq.erase(q_node);
    return ParabolicQuotient(rs, jq);
}

int ParabolicQuotient::q_node() const {
    const NodeSet missing = gens_.minus(jq_);
    return missing.size() == 1 ? missing.nodes()[0] : -1;
}

std::optional<std::size_t> ParabolicQuotient::index_of(const WeylElement& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int ParabolicQuotient::dimension() const { return elements_.back().length(); }

ParabolicQuotient enumerate_WQ(const RootSystem& rs, NodeSet J_Q) { return ParabolicQuotient(rs, J_Q); }

std::vector<DoubleCoset> double_cosets(const ParabolicQuotient& pq, NodeSet J_P) {
    const RootSystem& rs = pq.root_system();
    UnionFind uf(pq.size());
    std::vector<WeylElement> simple;
    for (int p : J_P.nodes()) simple.push_back(simple_reflection(rs, p));
    for (std::size_t k = 0; k < pq.size(); ++k)
        for (const auto& s : simple) {
            auto j = pq.index_of(min_rep(s * pq[k], pq.levi_nodes()));
            if (!j) throw std::logic_error("left W_P action left the quotient");
            uf.unite(k, *j);
        }
    std::map<std::size_t, DoubleCoset> by_root;
    for (std::size_t k = 0; k < pq.size(); ++k) {
        auto& dc = by_root[uf.find(k)];
        dc.J_P = J_P;
        dc.members.push_back(k);  // ascending since k ascends
    }
    std::vector<DoubleCoset> out;
    for (auto& [root, dc] : by_root) {
        // elements are sorted by (length, window): front is a shortest, back a longest
        dc.w_min = dc.members.front();
        dc.w_max = dc.members.back();
        out.push_back(std::move(dc));
    }
    std::sort(out.begin(), out.end(), [](const DoubleCoset& a, const DoubleCoset& b) { return a.w_min < b.w_min; });
    return out;
}

IntervalCertificate certify_interval(const DoubleCoset& dc, const ParabolicQuotient& pq) {
    IntervalCertificate c;
    c.extrema = true;
    const WeylElement& lo = pq[dc.w_min];
    const WeylElement& hi = pq[dc.w_max];
    for (std::size_t k : dc.members)
        if (!bruhat_leq(lo, pq[k]) || !bruhat_leq(pq[k], hi)) {
            c.extrema = false;
            c.detail = "member " + pq[k].str() + " not in [" + lo.str() + ", " + hi.str() + "]";
            break;
        }
    std::vector<bool> member(pq.size(), false);
    for (std::size_t k : dc.members) member[k] = true;
    c.interval = true;
    for (std::size_t k = 0; k < pq.size(); ++k) {
        const bool inside = bruhat_leq(lo, pq[k]) && bruhat_leq(pq[k], hi);
        if (inside != member[k]) {
            c.interval = false;
            if (c.detail.empty())
                c.detail = pq[k].str() + (inside ? " lies in the interval but not in the class"
                                                 : " is in the class but outside the interval");
            break;
        }
    }
    return c;
}

std::vector<long long> poincare_poly(const ParabolicQuotient& pq) {
    std::vector<long long> p(pq.dimension() + 1, 0);
    for (const auto& w : pq.elements()) ++p[w.length()];
    return p;
}

}  // namespace parorb
