#include "parorb/levi.hpp"

#include <algorithm>
#include <stdexcept>

namespace parorb {

int LeviComponent::local_of(int ambient) const {
    for (std::size_t k = 0; k < nodes.size(); ++k)
        if (nodes[k] == ambient) return static_cast<int>(k) + 1;
    return 0;
}

std::vector<LeviComponent> levi_components(const RootSystem& rs, NodeSet J) {
    const int n = rs.rank();
    std::vector<LeviComponent> out;
    NodeSet left = J;
    while (!left.empty()) {
        std::vector<int> comp{left.nodes().front()};
        left.erase(comp[0]);
        for (std::size_t h = 0; h < comp.size(); ++h)
            for (int k : left.nodes())
                if (rs.cartan(comp[h], k) != 0) {
                    comp.push_back(k);
                    left.erase(k);
                }
        std::sort(comp.begin(), comp.end());
        const int r = static_cast<int>(comp.size());
        const bool has_end = comp.back() == n;
        LeviComponent c{RootType::A, r, comp};
        switch (rs.type()) {
        case RootType::A: break;
        case RootType::B:
        case RootType::C:
            if (has_end && r >= 2) c.type = rs.type();
            break;
        case RootType::D: {
            const bool both_spin = std::find(comp.begin(), comp.end(), n - 1) != comp.end() && has_end;
            if (both_spin && r >= 4) c.type = RootType::D;
            else if (both_spin) c.nodes = {n - 1, n - 2, n};  // D3 = A3, centre node in the middle
            break;
        }
        }
        out.push_back(std::move(c));
    }
    return out;
}

WeylElement embed(const RootSystem& ambient, const LeviComponent& c, const WeylElement& local) {
    WeylElement w = WeylElement::identity(ambient.type(), ambient.rank());
    for (int k : reduced_word(local)) w = w.times_simple(c.nodes.at(k - 1));
    return w;
}

namespace {

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}

}  // namespace

std::string flag_name(RootType type, int rank, const std::vector<int>& marked) {
    if (marked.empty()) return "pt";
    const int r = rank;
    switch (type) {
    case RootType::A: {
        const std::string N = std::to_string(r + 1);
        if (marked.size() == 1) return "G(" + std::to_string(marked[0]) + "," + N + ")";
        return "F(" + join(marked) + ";" + N + ")";
    }
    case RootType::B: {
        const std::string N = std::to_string(2 * r + 1);
        if (marked.size() == 1) return "OG(" + std::to_string(marked[0]) + "," + N + ")";
        return "OF(" + join(marked) + ";" + N + ")";
    }
    case RootType::C: {
        const std::string N = std::to_string(2 * r);
        if (marked.size() == 1) return "IG(" + std::to_string(marked[0]) + "," + N + ")";
        return "IF(" + join(marked) + ";" + N + ")";
    }
    case RootType::D: {
        const std::string N = std::to_string(2 * r);
        // spinor nodes stand for maximal isotropic subspaces; both together for dimension r-1
        std::vector<int> dims;
        const bool a = std::find(marked.begin(), marked.end(), r - 1) != marked.end();
        const bool b = std::find(marked.begin(), marked.end(), r) != marked.end();
        for (int k : marked)
            if (k <= r - 2) dims.push_back(k);
        if (a && b) dims.push_back(r - 1);
        else if (a || b) dims.push_back(r);
        if (dims.size() == 1) return "OG(" + std::to_string(dims[0]) + "," + N + ")";
        return "OF(" + join(dims) + ";" + N + ")";
    }
    }
    return "?";
}

}  // namespace parorb
