#pragma once

#include <string>
#include <vector>

#include "parorb/cosets.hpp"

namespace parorb {

struct SeidelElement {
    int i;
    WeylElement v;
};

struct QuantumTerm {
    int q_exp;
    std::size_t class_index;
    friend bool operator==(const QuantumTerm&, const QuantumTerm&) = default;
};

struct SeidelRow {
    std::size_t w;
    QuantumTerm term;
};

// v_i = w0 * w0(P_i); throws if i is not cominuscule or v_i omega_i^vee != w0 omega_i^vee.
SeidelElement v_elt(const RootSystem& rs, int i);
// No strictly shorter element sends omega_i^vee to w0 omega_i^vee.  Exhaustive up to
// |W| = 50000, otherwise a fixed-seed sample of `samples` random elements.
bool certify_seidel_minimal(const RootSystem& rs, const SeidelElement& se, int samples = 4000);

QuantumTerm seidel_apply(const ParabolicQuotient& pq, const SeidelElement& se, std::size_t w);
std::vector<SeidelRow> seidel_table(const ParabolicQuotient& pq, const SeidelElement& se);

// Degree of q on G/P_j: <sum of positive roots outside Phi_Q, alpha_j^vee>
int q_degree(const ParabolicQuotient& pq);

struct SeidelLaws {
    bool bijection = false;
    bool iterate_consistent = false;  // [v [v w]] = [v v w], exponents add
    bool commute = false;             // i-then-k equals k-then-i for all cominuscule k
    bool finite_order = false;        // accumulated exponent over the order is constant
    bool degree = false;              // degree bookkeeping against q_degree
    long long order = 0;
    int cycle_q = -1;
    std::string detail;
    bool ok() const { return bijection && iterate_consistent && commute && finite_order && degree; }
};

SeidelLaws check_seidel_laws(const ParabolicQuotient& pq, int i);

// Type A only: v_i v_k = v_{(i+k) mod (n+1)} in W, and both application orders agree on every class.
bool check_type_a_composition(const ParabolicQuotient& pq, std::string* detail = nullptr);

}  // namespace parorb
