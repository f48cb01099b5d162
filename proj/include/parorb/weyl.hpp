#pragma once

#include <functional>
#include <string>
#include <vector>

#include "parorb/rootsys.hpp"

namespace parorb {

// Window notation: w(e_k) = sign(b_k) e_{|b_k|}.  Type A windows have n+1 entries.
class WeylElement {
public:
    WeylElement(RootType type, std::vector<int> window);
    static WeylElement identity(RootType type, int rank);

    RootType type() const { return type_; }
    int rank() const { return type_ == RootType::A ? static_cast<int>(window_.size()) - 1
                                                   : static_cast<int>(window_.size()); }
    const std::vector<int>& window() const { return window_; }
    int length() const { return length_; }
    // Signed image of a signed index.
    int operator()(int k) const { return k > 0 ? window_[k - 1] : -window_[-k - 1]; }
    bool is_identity() const;
    bool has_right_descent(int i) const;
    WeylElement times_simple(int i) const;  // w * s_i, straight on the window
    std::string str() const;  // "(3,-1,2)"

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.type_ == b.type_ && a.window_ == b.window_;
    }
    // Stable ordering: length, then window lexicographically.
    friend bool operator<(const WeylElement& a, const WeylElement& b);

private:
    RootType type_;
    std::vector<int> window_;
    int length_;
};

WeylElement operator*(const WeylElement& u, const WeylElement& w);
WeylElement inverse(const WeylElement& w);

WeylElement simple_reflection(const RootSystem& rs, int i);
// Left-to-right product s_{word[0]} s_{word[1]} ...
WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);
WeylElement reflection(const RootSystem& rs, const IVec& root);
WeylElement parse_window(RootType type, const std::string& text);  // "(3,-1,2)"

IVec act(const WeylElement& w, const IVec& v);
QVec act(const WeylElement& w, const QVec& v);

std::vector<int> reduced_word(const WeylElement& w);
WeylElement longest(const RootSystem& rs, NodeSet J);
WeylElement min_rep(const WeylElement& w, NodeSet J);
bool is_min_rep(const WeylElement& w, NodeSet J);
bool bruhat_leq(const WeylElement& u, const WeylElement& w);

// Whole group, breadth first; intended for oracles at small rank.
std::vector<WeylElement> enumerate_group(const RootSystem& rs);
long long group_order(RootType type, int rank);

}  // namespace parorb

template <>
struct std::hash<parorb::WeylElement> {
    std::size_t operator()(const parorb::WeylElement& w) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int b : w.window()) h = (h ^ static_cast<std::size_t>(b + 64)) * 1099511628211ull;
        return h;
    }
};
