#pragma once

#include <string>
#include <vector>

#include "parorb/rootsys.hpp"
#include "parorb/weyl.hpp"

namespace parorb {

// Irreducible factor of a Levi subsystem, renumbered Bourbaki-style:
// local node k sits at ambient node nodes[k-1].
struct LeviComponent {
    RootType type;
    int rank;
    std::vector<int> nodes;

    int local_of(int ambient) const;  // 0 if absent
    RootSystem root_system() const { return RootSystem(type, rank); }
};

// Components ordered by their smallest ambient node.
std::vector<LeviComponent> levi_components(const RootSystem& rs, NodeSet J);

// Image of a local Weyl element under the Levi inclusion.
WeylElement embed(const RootSystem& ambient, const LeviComponent& c, const WeylElement& local);

// Variety name of the quotient of a component by the parabolic omitting `marked` (local nodes).
std::string flag_name(RootType type, int rank, const std::vector<int>& marked);

}  // namespace parorb
