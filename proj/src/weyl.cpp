#include "parorb/weyl.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace parorb {

namespace {

int sgn(int x) { return x > 0 ? 1 : -1; }

// key(b) orders signed values so that root positivity becomes integer comparison
int key(int b, int n) { return sgn(b) * (n + 1 - std::abs(b)); }

int compute_length(RootType t, const std::vector<int>& b) {
    const int N = static_cast<int>(b.size());
    int len = 0;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            const int ki = key(b[i], N), kj = key(b[j], N);
            if (ki < kj) ++len;
            if (t != RootType::A && ki + kj < 0) ++len;
        }
    if (t == RootType::B || t == RootType::C)
        for (int x : b)
            if (x < 0) ++len;
    return len;
}

}  // namespace

WeylElement::WeylElement(RootType type, std::vector<int> window) : type_(type), window_(std::move(window)) {
    const int N = static_cast<int>(window_.size());
    if (N == 0) throw std::invalid_argument("empty window");
    std::vector<bool> seen(N + 1, false);
    int negatives = 0;
    for (int b : window_) {
        const int a = std::abs(b);
        if (a < 1 || a > N || seen[a]) throw std::invalid_argument("window is not a signed permutation");
        seen[a] = true;
        if (b < 0) ++negatives;
    }
    if (type == RootType::A && negatives) throw std::invalid_argument("type A window with a sign");
    if (type == RootType::D && negatives % 2) throw std::invalid_argument("type D window with odd sign count");
    length_ = compute_length(type, window_);
}

WeylElement WeylElement::identity(RootType type, int rank) {
    const int N = type == RootType::A ? rank + 1 : rank;
    std::vector<int> w(N);
    for (int k = 0; k < N; ++k) w[k] = k + 1;
    return WeylElement(type, std::move(w));
}

bool WeylElement::is_identity() const {
    for (std::size_t k = 0; k < window_.size(); ++k)
        if (window_[k] != static_cast<int>(k) + 1) return false;
    return true;
}

// s_i is a right descent iff w(alpha_i) < 0.
bool WeylElement::has_right_descent(int i) const {
    const int n = rank();
    const int N = static_cast<int>(window_.size());
    if (i < 1 || i > n) throw std::out_of_range("simple reflection index out of range");
    if (type_ == RootType::A || i < n) return key(window_[i - 1], N) < key(window_[i], N);
    if (type_ == RootType::D) return key(window_[n - 2], N) + key(window_[n - 1], N) < 0;
    return window_[n - 1] < 0;
}

WeylElement WeylElement::times_simple(int i) const {
    const int n = rank();
    if (i < 1 || i > n) throw std::out_of_range("simple reflection index out of range");
    std::vector<int> b = window_;
    if (type_ == RootType::A || i < n) {
        std::swap(b[i - 1], b[i]);
    } else if (type_ == RootType::D) {
        const int x = b[n - 2];
        b[n - 2] = -b[n - 1];
        b[n - 1] = -x;
    } else {
        b[n - 1] = -b[n - 1];
    }
    return WeylElement(type_, std::move(b));
}

std::string WeylElement::str() const { return format_vector(window_); }

bool operator<(const WeylElement& a, const WeylElement& b) {
    if (a.length_ != b.length_) return a.length_ < b.length_;
    return a.window_ < b.window_;
}

WeylElement operator*(const WeylElement& u, const WeylElement& w) {
    if (u.type() != w.type() || u.window().size() != w.window().size())
        throw std::invalid_argument("multiplying elements of different Weyl groups");
    std::vector<int> out(w.window().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = u(w.window()[k]);
    return WeylElement(u.type(), std::move(out));
}

WeylElement inverse(const WeylElement& w) {
    std::vector<int> out(w.window().size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const int b = w.window()[k];
        out[std::abs(b) - 1] = sgn(b) * static_cast<int>(k + 1);
    }
    return WeylElement(w.type(), std::move(out));
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
    if (i < 1 || i > rs.rank()) throw std::out_of_range("simple reflection index out of range");
    return reflection(rs, rs.simple_root(i));
}

WeylElement from_word(const RootSystem& rs, const std::vector<int>& word) {
    WeylElement w = WeylElement::identity(rs.type(), rs.rank());
    for (int i : word) w = w * simple_reflection(rs, i);
    return w;
}

// s_beta(e_k) = e_k - <e_k, beta^vee> beta must be a signed unit vector.
WeylElement reflection(const RootSystem& rs, const IVec& root) {
    const IVec co = RootSystem::coroot(root);
    const int N = rs.ambient_dim();
    std::vector<int> window(N);
    for (int k = 0; k < N; ++k) {
        IVec v(N, 0);
        v[k] = 1;
        for (int t = 0; t < N; ++t) v[t] -= co[k] * root[t];
        int pos = -1;
        for (int t = 0; t < N; ++t)
            if (v[t] != 0) {
                if (pos >= 0 || std::abs(v[t]) != 1) throw std::invalid_argument("not a reflection of this system");
                pos = t;
            }
        window[k] = v[pos] * (pos + 1);
    }
    return WeylElement(rs.type(), std::move(window));
}

WeylElement parse_window(RootType type, const std::string& text) {
    std::string body;
    for (char c : text)
        if (c != '(' && c != ')' && c != ' ' && c != '[' && c != ']') body += c;
    std::vector<int> w;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad window entry '" + tok + "'");
        w.push_back(v);
    }
    return WeylElement(type, std::move(w));
}

IVec act(const WeylElement& w, const IVec& v) {
    if (v.size() != w.window().size()) throw std::invalid_argument("dimension mismatch in act");
    IVec out(v.size(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        const int b = w.window()[k];
        out[std::abs(b) - 1] = sgn(b) * v[k];
    }
    return out;
}

QVec act(const WeylElement& w, const QVec& v) {
    if (v.size() != w.window().size()) throw std::invalid_argument("dimension mismatch in act");
    QVec out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        const int b = w.window()[k];
        out[std::abs(b) - 1] = sgn(b) * v[k];
    }
    return out;
}

std::vector<int> reduced_word(const WeylElement& w) {
    std::vector<int> word;
    WeylElement u = w;
    while (!u.is_identity()) {
        for (int i = 1; i <= u.rank(); ++i)
            if (u.has_right_descent(i)) {
                word.push_back(i);
                u = u.times_simple(i);
                break;
            }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

WeylElement longest(const RootSystem& rs, NodeSet J) {
    WeylElement w = WeylElement::identity(rs.type(), rs.rank());
    for (bool grew = true; grew;) {
        grew = false;
        for (int j : J.nodes())
            if (!w.has_right_descent(j)) {
                w = w.times_simple(j);
                grew = true;
            }
    }
    return w;
}

WeylElement min_rep(const WeylElement& w, NodeSet J) {
    WeylElement u = w;
    for (bool shrank = true; shrank;) {
        shrank = false;
        for (int j : J.nodes())
            if (u.has_right_descent(j)) {
                u = u.times_simple(j);
                shrank = true;
            }
    }
    return u;
}

bool is_min_rep(const WeylElement& w, NodeSet J) {
    for (int j : J.nodes())
        if (w.has_right_descent(j)) return false;
    return true;
}

// Strip the last letter of a reduced word of w; u follows it down whenever
// that letter is also a right descent of u.
bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
    if (u.type() != w.type() || u.window().size() != w.window().size())
        throw std::invalid_argument("Bruhat comparison across groups");
    if (u.length() > w.length()) return false;
    const std::vector<int> word = reduced_word(w);
    WeylElement x = u;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        if (x.has_right_descent(*it)) x = x.times_simple(*it);
    return x.is_identity();
}

std::vector<WeylElement> enumerate_group(const RootSystem& rs) {
    std::vector<WeylElement> out{WeylElement::identity(rs.type(), rs.rank())};
    std::unordered_set<WeylElement> seen(out.begin(), out.end());
    for (std::size_t head = 0; head < out.size(); ++head)
        for (int i = 1; i <= rs.rank(); ++i) {
            WeylElement v = out[head].times_simple(i);
            if (seen.insert(v).second) out.push_back(v);
        }
    std::sort(out.begin(), out.end());
    return out;
}

long long group_order(RootType type, int rank) {
    long long f = 1;
    const int N = type == RootType::A ? rank + 1 : rank;
    for (int k = 2; k <= N; ++k) f *= k;
    if (type == RootType::B || type == RootType::C) f <<= rank;
    if (type == RootType::D) f <<= (rank - 1);
    return f;
}

}  // namespace parorb
