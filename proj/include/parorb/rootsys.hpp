#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

// Boost 1.74 recurses forever on rational == integer under C++20 reversed-operator rules.
// Exact non-template overloads win resolution and sidestep it.
namespace boost {
inline bool operator==(const rational<long long>& a, long long b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(const rational<long long>& a, int b) { return a == static_cast<long long>(b); }
inline bool operator!=(const rational<long long>& a, long long b) { return !(a == b); }
inline bool operator!=(const rational<long long>& a, int b) { return !(a == b); }
}  // namespace boost

namespace parorb {

using Rational = boost::rational<long long>;
using IVec = std::vector<int>;       // integral vector in the ambient lattice
using QVec = std::vector<Rational>;  // rational ambient vector (coweights)

enum class RootType { A, B, C, D };

char type_letter(RootType t);
RootType parse_root_type(std::string_view s);

// Set of Dynkin nodes, 1-based, rank <= 31.
class NodeSet {
public:
    NodeSet() = default;
    NodeSet(std::initializer_list<int> nodes);
    static NodeSet all(int rank);
    static NodeSet from_vector(const std::vector<int>& nodes);

    bool contains(int k) const { return k >= 1 && k < 32 && ((mask_ >> k) & 1u); }
    void insert(int k);
    void erase(int k);
    int size() const;
    bool empty() const { return mask_ == 0; }
    std::vector<int> nodes() const;
    NodeSet minus(NodeSet o) const { NodeSet r; r.mask_ = mask_ & ~o.mask_; return r; }
    NodeSet intersect(NodeSet o) const { NodeSet r; r.mask_ = mask_ & o.mask_; return r; }
    std::uint32_t mask() const { return mask_; }
    friend bool operator==(NodeSet a, NodeSet b) { return a.mask_ == b.mask_; }
    std::string str() const;  // "{1,3}"

private:
    std::uint32_t mask_ = 0;
};

// Coordinates with respect to a linearly independent family, computed exactly.
class ExactBasis {
public:
    ExactBasis() = default;
    explicit ExactBasis(const std::vector<QVec>& basis);
    // nullopt if v is outside the span
    std::optional<QVec> coordinates(const QVec& v) const;
    std::size_t size() const { return basis_.size(); }

private:
    std::vector<QVec> basis_;
    std::vector<int> pivots_;
    std::vector<QVec> inverse_;  // inverse of the pivot minor, row major
};

QVec to_rational(const IVec& v);
Rational dot(const IVec& a, const QVec& b);
int dot(const IVec& a, const IVec& b);

class RootSystem {
public:
    RootSystem(RootType type, int rank);

    RootType type() const { return type_; }
    int rank() const { return rank_; }
    int ambient_dim() const { return type_ == RootType::A ? rank_ + 1 : rank_; }
    std::string name() const;  // "C4"

    const IVec& simple_root(int i) const { return simple_.at(i - 1); }
    const IVec& simple_coroot(int i) const { return simple_co_.at(i - 1); }
    // Sorted by height, then lexicographically decreasing.
    const std::vector<IVec>& positive_roots() const { return positive_; }

    static IVec coroot(const IVec& root);
    static bool is_positive(const IVec& v);
    int cartan(int i, int j) const;  // <alpha_i, alpha_j^vee>
    QVec fundamental_coweight(int i) const;
    std::vector<int> cominuscule_nodes() const;

    // Coefficients of a root in the simple-root basis.
    IVec root_coordinates(const IVec& root) const;
    // Coefficients in the simple-coroot basis; throws std::domain_error if off-span.
    QVec coroot_coordinates(const QVec& v) const;
    Rational eta(const QVec& v, int j) const { return coroot_coordinates(v).at(j - 1); }
    int height(const IVec& root) const;

    // Positive roots in the span of the simple roots indexed by J.
    std::vector<IVec> positive_roots_in(NodeSet J) const;
    bool in_span(const IVec& root, NodeSet J) const;
    int index_of_positive(const IVec& root) const;  // -1 if absent

private:
    RootType type_;
    int rank_;
    std::vector<IVec> simple_, simple_co_, positive_;
    ExactBasis root_basis_, coroot_basis_;
};

Rational pair(const IVec& root, const QVec& coweight);
std::string format_vector(const IVec& v);  // "(1,-1,0)"
std::string format_rational(const Rational& r);

}  // namespace parorb
