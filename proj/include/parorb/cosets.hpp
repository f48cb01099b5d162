#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "parorb/rootsys.hpp"
#include "parorb/weyl.hpp"

namespace parorb {

struct Cover {
    std::size_t from, to;
    IVec root;  // w = u * s_root
};

// Minimal representatives of W_gen / (W_gen cap W_Q), graded, with Bruhat covers.
class ParabolicQuotient {
public:
    ParabolicQuotient(RootSystem rs, NodeSet J_Q, NodeSet generators);
    ParabolicQuotient(RootSystem rs, NodeSet J_Q);
    // G/P_q; rejects type D with q = n-1 (second spinor node, Picard rank two pairing)
    static ParabolicQuotient grassmannian(const RootSystem& rs, int q_node);

    const RootSystem& root_system() const { return rs_; }
    NodeSet levi_nodes() const { return jq_; }
    NodeSet generators() const { return gens_; }
    int q_node() const;  // the single omitted node, or -1

    const std::vector<WeylElement>& elements() const { return elements_; }
    const WeylElement& operator[](std::size_t k) const { return elements_[k]; }
    std::size_t size() const { return elements_.size(); }
    std::optional<std::size_t> index_of(const WeylElement& w) const;
    const std::vector<Cover>& covers() const { return covers_; }
    // Positive roots of W_gen outside Phi_Q
    const std::vector<IVec>& outer_roots() const { return outer_; }
    int dimension() const;  // top length

private:
    RootSystem rs_;
    NodeSet jq_, gens_;
    std::vector<WeylElement> elements_;
    std::unordered_map<WeylElement, std::size_t> index_;
    std::vector<Cover> covers_;
    std::vector<IVec> outer_;
};

ParabolicQuotient enumerate_WQ(const RootSystem& rs, NodeSet J_Q);

struct DoubleCoset {
    NodeSet J_P;
    std::vector<std::size_t> members;  // indices into the quotient, sorted
    std::size_t w_min = 0, w_max = 0;
};

// Orbits of w -> min_rep(s_p w) for p in J_P; ordered by (length, window) of w_min.
std::vector<DoubleCoset> double_cosets(const ParabolicQuotient& pq, NodeSet J_P);

struct IntervalCertificate {
    bool extrema = false;   // w_min <= x <= w_max for every member
    bool interval = false;  // members == [w_min, w_max] cap W^Q
    std::string detail;
    bool ok() const { return extrema && interval; }
};

IntervalCertificate certify_interval(const DoubleCoset& dc, const ParabolicQuotient& pq);

std::vector<long long> poincare_poly(const ParabolicQuotient& pq);

}  // namespace parorb
