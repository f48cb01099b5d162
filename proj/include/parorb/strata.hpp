#pragma once

#include <map>
#include <string>
#include <vector>

#include "parorb/cosets.hpp"
#include "parorb/levi.hpp"
#include "parorb/orbit_case.hpp"

namespace parorb {

// eta_Q(omega_i^vee - w^{-1} omega_i^vee) read off on alpha_j^vee.
int delta(const RootSystem& rs, const WeylElement& w, int i, int j);

struct FlagComponent {
    LeviComponent levi;
    std::vector<int> marked;   // local nodes outside K
    std::vector<int> h_prime;  // coefficient per marked node, same order; empty until assigned
    std::string name() const { return flag_name(levi.type, levi.rank, marked); }
};

struct FlagDescriptor {
    std::vector<FlagComponent> components;  // every factor of L, marked or not
    int dim = 0;                            // |Phi+(L)| - |Phi+(R)|
    int scale = 1;                          // 2 when X's multiplicities are twice F's
    bool doubling() const { return scale == 2; }
    std::string name() const;               // "F(1,3;4)", "G(1,2) x G(1,3)", "pt"
    NodeSet marked_ambient() const;
};

struct OrbitStratum {
    DoubleCoset dc;
    int delta = 0;
    int d = 0;            // normalised case label
    int orbit_label = 0;  // label in the geometric parametrisation
    NodeSet K;
    FlagDescriptor flag;
    int fiber_dim = 0;    // l(w_min)
};

// {s in J_P : w_min^{-1}(alpha_s) is a simple root of Q}
NodeSet K_of(const ParabolicQuotient& pq, const DoubleCoset& dc, NodeSet J_P);
FlagDescriptor flag_of(const RootSystem& rs, NodeSet J_P, NodeSet K);
// <w_min omega_j, alpha_k^vee> for k in J_P; equals s times the h' coefficient
std::map<int, Rational> h_prime_weights(const RootSystem& rs, const WeylElement& w_min, NodeSet J_P, int j);
// Fills h' coefficients and scale from the case table; throws if the table marks other nodes than K does.
FlagDescriptor h_prime_of(const OrbitStratum& s, const GrassmannianCase& gc);

struct Stratification {
    GrassmannianCase gc;
    ParabolicQuotient pq;
    NodeSet J_P;
    std::vector<OrbitStratum> strata;     // by increasing delta
    std::vector<std::size_t> stratum_of;  // per element of pq
    std::vector<int> delta_of;            // per element of pq
};

// Throws std::logic_error when delta is not constant on a class or the h' table disagrees with K.
Stratification stratify(const GrassmannianCase& gc);

}  // namespace parorb
