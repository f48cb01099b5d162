#include "parorb/rootsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace parorb {

char type_letter(RootType t) {
    switch (t) {
    case RootType::A: return 'A';
    case RootType::B: return 'B';
    case RootType::C: return 'C';
    case RootType::D: return 'D';
    }
    return '?';
}

RootType parse_root_type(std::string_view s) {
    if (s.size() == 1) {
        switch (s[0]) {
        case 'A': case 'a': return RootType::A;
        case 'B': case 'b': return RootType::B;
        case 'C': case 'c': return RootType::C;
        case 'D': case 'd': return RootType::D;
        }
    }
    throw std::invalid_argument("unknown root type '" + std::string(s) + "'");
}

NodeSet::NodeSet(std::initializer_list<int> nodes) {
    for (int k : nodes) insert(k);
}

NodeSet NodeSet::all(int rank) {
    NodeSet s;
    for (int k = 1; k <= rank; ++k) s.insert(k);
    return s;
}

NodeSet NodeSet::from_vector(const std::vector<int>& nodes) {
    NodeSet s;
    for (int k : nodes) s.insert(k);
    return s;
}

void NodeSet::insert(int k) {
    if (k < 1 || k > 31) throw std::out_of_range("node index out of range");
    mask_ |= 1u << k;
}

void NodeSet::erase(int k) {
    if (k >= 1 && k <= 31) mask_ &= ~(1u << k);
}

int NodeSet::size() const { return __builtin_popcount(mask_); }

std::vector<int> NodeSet::nodes() const {
    std::vector<int> out;
    for (int k = 1; k < 32; ++k)
        if (contains(k)) out.push_back(k);
    return out;
}

std::string NodeSet::str() const {
    std::string s = "{";
    bool first = true;
    for (int k : nodes()) {
        if (!first) s += ",";
        s += std::to_string(k);
        first = false;
    }
    return s + "}";
}

// --- exact coordinates -------------------------------------------------------

ExactBasis::ExactBasis(const std::vector<QVec>& basis) : basis_(basis) {
    const std::size_t n = basis.size();
    if (n == 0) return;
    const std::size_t dim = basis[0].size();
    // rows = ambient coordinates, columns = basis vectors
    std::vector<QVec> m(dim, QVec(n));
    for (std::size_t c = 0; c < n; ++c) {
        if (basis[c].size() != dim) throw std::invalid_argument("ragged basis");
        for (std::size_t r = 0; r < dim; ++r) m[r][c] = basis[c][r];
    }
    // pick n independent rows greedily
    std::vector<QVec> echelon;
    for (std::size_t r = 0; r < dim && pivots_.size() < n; ++r) {
        QVec row = m[r];
        for (const auto& e : echelon) {
            std::size_t lead = 0;
            while (e[lead] == 0) ++lead;
            if (row[lead] != 0) {
                Rational f = row[lead] / e[lead];
                for (std::size_t c = 0; c < n; ++c) row[c] -= f * e[c];
            }
        }
        if (std::any_of(row.begin(), row.end(), [](const Rational& x) { return x != 0; })) {
            echelon.push_back(row);
            pivots_.push_back(static_cast<int>(r));
        }
    }
    if (pivots_.size() != n) throw std::invalid_argument("basis is linearly dependent");

    // Gauss-Jordan on the pivot minor
    std::vector<QVec> a(n, QVec(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[pivots_[i]][j];
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (a[p][col] == 0) ++p;
        std::swap(a[p], a[col]);
        Rational inv = 1 / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    inverse_.assign(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inverse_[i][j] = a[i][n + j];
}

std::optional<QVec> ExactBasis::coordinates(const QVec& v) const {
    const std::size_t n = basis_.size();
    QVec x(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x[i] += inverse_[i][j] * v.at(pivots_[j]);
    for (std::size_t r = 0; r < v.size(); ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < n; ++c) s += basis_[c][r] * x[c];
        if (s != v[r]) return std::nullopt;
    }
    return x;
}

QVec to_rational(const IVec& v) { return QVec(v.begin(), v.end()); }

Rational dot(const IVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in pairing");
    Rational s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b.at(k);
    return s;
}

int dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in pairing");
    int s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b.at(k);
    return s;
}

Rational pair(const IVec& root, const QVec& coweight) { return dot(root, coweight); }

// --- root systems --------------------------------------------------------------

namespace {

IVec unit(int dim, int i, int coef = 1) {
    IVec v(dim, 0);
    v[i] = coef;
    return v;
}

IVec sum(IVec a, const IVec& b, int sb = 1) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += sb * b[k];
    return a;
}

}  // namespace

RootSystem::RootSystem(RootType type, int rank) : type_(type), rank_(rank) {
    const int minimum = type == RootType::A ? 1 : type == RootType::D ? 4 : 2;
    if (rank < minimum || rank > 16)
        throw std::invalid_argument(std::string("rank out of range for type ") + type_letter(type));
    const int dim = ambient_dim();
    const int n = rank;

    for (int i = 0; i + 1 < (type == RootType::A ? n + 1 : n); ++i)
        simple_.push_back(sum(unit(dim, i), unit(dim, i + 1), -1));
    switch (type) {
    case RootType::A: break;
    case RootType::B: simple_.push_back(unit(dim, n - 1)); break;
    case RootType::C: simple_.push_back(unit(dim, n - 1, 2)); break;
    case RootType::D: simple_.push_back(sum(unit(dim, n - 2), unit(dim, n - 1))); break;
    }
    for (const auto& a : simple_) simple_co_.push_back(coroot(a));

    if (type == RootType::A) {
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j) positive_.push_back(sum(unit(dim, i), unit(dim, j), -1));
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                positive_.push_back(sum(unit(dim, i), unit(dim, j), -1));
                positive_.push_back(sum(unit(dim, i), unit(dim, j)));
            }
        if (type == RootType::B)
            for (int i = 0; i < n; ++i) positive_.push_back(unit(dim, i));
        if (type == RootType::C)
            for (int i = 0; i < n; ++i) positive_.push_back(unit(dim, i, 2));
    }

    std::vector<QVec> rb, cb;
    for (const auto& a : simple_) rb.push_back(to_rational(a));
    for (const auto& a : simple_co_) cb.push_back(to_rational(a));
    root_basis_ = ExactBasis(rb);
    coroot_basis_ = ExactBasis(cb);

    std::vector<std::pair<int, IVec>> keyed;
    for (const auto& r : positive_) keyed.emplace_back(height(r), r);
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second > y.second;
    });
    positive_.clear();
    for (auto& [h, r] : keyed) positive_.push_back(std::move(r));
}

std::string RootSystem::name() const { return std::string(1, type_letter(type_)) + std::to_string(rank_); }

IVec RootSystem::coroot(const IVec& root) {
    const int nrm = dot(root, root);
    if (nrm != 1 && nrm != 2 && nrm != 4) throw std::invalid_argument("not a root of a classical system");
    IVec c(root.size());
    for (std::size_t k = 0; k < root.size(); ++k) {
        if ((2 * root[k]) % nrm != 0) throw std::invalid_argument("coroot not integral");
        c[k] = 2 * root[k] / nrm;
    }
    return c;
}

bool RootSystem::is_positive(const IVec& v) {
    for (int x : v)
        if (x != 0) return x > 0;
    return false;
}

int RootSystem::cartan(int i, int j) const { return dot(simple_root(i), simple_coroot(j)); }

QVec RootSystem::fundamental_coweight(int i) const {
    if (i < 1 || i > rank_) throw std::out_of_range("node out of range");
    const int n = rank_;
    QVec w(ambient_dim(), Rational(0));
    switch (type_) {
    case RootType::A:
        for (int k = 0; k <= n; ++k) w[k] = (k < i ? Rational(1) : Rational(0)) - Rational(i, n + 1);
        break;
    case RootType::B:
        for (int k = 0; k < i; ++k) w[k] = 1;
        break;
    case RootType::C:
        for (int k = 0; k < i; ++k) w[k] = (i == n) ? Rational(1, 2) : Rational(1);
        break;
    case RootType::D:
        if (i <= n - 2) {
            for (int k = 0; k < i; ++k) w[k] = 1;
        } else {
            for (int k = 0; k < n; ++k) w[k] = Rational(1, 2);
            if (i == n - 1) w[n - 1] = Rational(-1, 2);
        }
        break;
    }
    return w;
}

std::vector<int> RootSystem::cominuscule_nodes() const {
    const int n = rank_;
    switch (type_) {
    case RootType::A: {
        std::vector<int> all(n);
        for (int k = 0; k < n; ++k) all[k] = k + 1;
        return all;
    }
    case RootType::B: return {1};
    case RootType::C: return {n};
    case RootType::D: return {1, n - 1, n};
    }
    return {};
}

IVec RootSystem::root_coordinates(const IVec& root) const {
    auto x = root_basis_.coordinates(to_rational(root));
    if (!x) throw std::domain_error("vector " + format_vector(root) + " is not in the root span");
    IVec out;
    for (const auto& q : *x) {
        if (q.denominator() != 1) throw std::domain_error("root with non-integral coordinates");
        out.push_back(static_cast<int>(q.numerator()));
    }
    return out;
}

QVec RootSystem::coroot_coordinates(const QVec& v) const {
    auto x = coroot_basis_.coordinates(v);
    if (!x) throw std::domain_error("vector is not in the span of the simple coroots");
    return *x;
}

int RootSystem::height(const IVec& root) const {
    int h = 0;
    for (int c : root_coordinates(root)) h += c;
    return h;
}

bool RootSystem::in_span(const IVec& root, NodeSet J) const {
    const IVec c = root_coordinates(root);
    for (int k = 1; k <= rank_; ++k)
        if (c[k - 1] != 0 && !J.contains(k)) return false;
    return true;
}

std::vector<IVec> RootSystem::positive_roots_in(NodeSet J) const {
    std::vector<IVec> out;
    for (const auto& r : positive_)
        if (in_span(r, J)) out.push_back(r);
    return out;
}

int RootSystem::index_of_positive(const IVec& root) const {
    auto it = std::find(positive_.begin(), positive_.end(), root);
    return it == positive_.end() ? -1 : static_cast<int>(it - positive_.begin());
}

std::string format_vector(const IVec& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(v[k]);
    }
    return s + ")";
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace parorb
