#pragma once

#include <map>
#include <string>
#include <vector>

#include "parorb/rootsys.hpp"
#include "parorb/weyl.hpp"

namespace parorb {

enum class OrbitCase { A, BNonMax, BMax, C, DNonMaxFirst, DNonMaxSpin, DMaxFirst, DMaxSpin };

const char* case_name(OrbitCase c);

// h' predicted from the explicit fibration: coefficient per marked ambient node, and the
// factor s relating X's multiplicities to those of F.
struct FlagPrediction {
    std::map<int, int> coefficients;
    int scale = 1;
};

// A classical Grassmannian G/P_m (m = q_node) acted on by the cominuscule parabolic P_i.
class GrassmannianCase {
public:
    GrassmannianCase(RootType type, int rank, int q_node, int p_node);

    RootType type() const { return type_; }
    int rank() const { return n_; }
    int q_node() const { return m_; }
    int p_node() const { return i_; }
    OrbitCase kind() const { return kind_; }
    std::string fixture_name() const;  // "C4/P2+P4"
    std::string variety_name() const;  // "IG(2,8)"

    // The literal label of the coset criterion satisfied by w.
    int clause_label(const WeylElement& w) const;
    // Label of the orbit in its geometric parametrisation: dim(Sigma cap E_i) in type A,
    // the clause label elsewhere.
    int orbit_label(const WeylElement& w) const;
    // Label normalised so that the orbit of the base point is 0.
    int d_of(const WeylElement& w) const;

    int normalize(int orbit_label) const;
    int orbit_label_of(int d) const;
    std::vector<int> orbit_labels() const;  // admissible labels, by increasing d
    int orbit_count() const { return static_cast<int>(orbit_labels().size()); }

    int expected_fiber_dim(int orbit_label) const;
    FlagPrediction predicted_flag(int orbit_label) const;

private:
    int top_label() const;
    int spin_epsilon() const;  // parity shift of the maximal even orthogonal cases
    int spin_ambient(int local) const;  // A_{n-1} Levi of P_m node -> ambient node

    RootType type_;
    int n_, m_, i_;
    OrbitCase kind_;
};

}  // namespace parorb
