#include "parorb/orbit_case.hpp"

#include <algorithm>
#include <stdexcept>

namespace parorb {

const char* case_name(OrbitCase c) {
    switch (c) {
    case OrbitCase::A: return "A";
    case OrbitCase::BNonMax: return "B.nonmax";
    case OrbitCase::BMax: return "B.max";
    case OrbitCase::C: return "C";
    case OrbitCase::DNonMaxFirst: return "D.nonmax.1";
    case OrbitCase::DNonMaxSpin: return "D.nonmax.spin";
    case OrbitCase::DMaxFirst: return "D.max.1";
    case OrbitCase::DMaxSpin: return "D.max.spin";
    }
    return "?";
}

GrassmannianCase::GrassmannianCase(RootType type, int rank, int q_node, int p_node)
    : type_(type), n_(rank), m_(q_node), i_(p_node) {
    const RootSystem rs(type, rank);  // validates the rank
    const std::string tag = rs.name();
    if (m_ < 1 || m_ > n_) throw std::invalid_argument(tag + ": Grassmannian node must lie in 1.." + std::to_string(n_));
    const auto cn = rs.cominuscule_nodes();
    if (std::find(cn.begin(), cn.end(), i_) == cn.end())
        throw std::invalid_argument(tag + ": node " + std::to_string(i_) + " is not cominuscule");
    switch (type) {
    case RootType::A: kind_ = OrbitCase::A; break;
    case RootType::B: kind_ = m_ < n_ ? OrbitCase::BNonMax : OrbitCase::BMax; break;
    case RootType::C: kind_ = OrbitCase::C; break;
    case RootType::D:
        if (m_ == n_ - 1)
            throw std::invalid_argument(tag + " with q_node " + std::to_string(m_) +
                                        " is excluded (same variety as q_node " + std::to_string(n_) + ")");
        if (m_ < n_ - 1) kind_ = i_ == 1 ? OrbitCase::DNonMaxFirst : OrbitCase::DNonMaxSpin;
        else kind_ = i_ == 1 ? OrbitCase::DMaxFirst : OrbitCase::DMaxSpin;
        break;
    }
}

std::string GrassmannianCase::fixture_name() const {
    return std::string(1, type_letter(type_)) + std::to_string(n_) + "/P" + std::to_string(m_) + "+P" +
           std::to_string(i_);
}

std::string GrassmannianCase::variety_name() const {
    const std::string m = std::to_string(m_);
    switch (type_) {
    case RootType::A: return "G(" + m + "," + std::to_string(n_ + 1) + ")";
    case RootType::B: return "OG(" + m + "," + std::to_string(2 * n_ + 1) + ")";
    case RootType::C: return "IG(" + m + "," + std::to_string(2 * n_) + ")";
    case RootType::D: return "OG(" + m + "," + std::to_string(2 * n_) + ")";
    }
    return "?";
}

int GrassmannianCase::spin_epsilon() const {
    const int eps_prime = n_ % 2 == 0 ? 1 : 0;
    return i_ == n_ - 1 ? eps_prime : 1 - eps_prime;
}

int GrassmannianCase::spin_ambient(int local) const {
    if (local <= n_ - 2) return local;
    return i_ == n_ ? n_ - 1 : n_;
}

int GrassmannianCase::clause_label(const WeylElement& w) const {
    if (w.type() != type_ || w.rank() != n_) throw std::invalid_argument("element of another Weyl group");
    auto first_m_has = [&](int v) {
        for (int j = 1; j <= m_; ++j)
            if (w(j) == v) return true;
        return false;
    };
    auto positives = [&](int upto) {
        int c = 0;
        for (int j = 1; j <= upto; ++j)
            if (w(j) > 0) ++c;
        return c;
    };
    switch (kind_) {
    case OrbitCase::A: {
        int c = 0;
        for (int j = 1; j <= m_; ++j)
            if (w(j) <= i_) ++c;
        return m_ - c;
    }
    case OrbitCase::BNonMax:
    case OrbitCase::DNonMaxFirst:
        if (first_m_has(-1)) return 0;
        if (first_m_has(1)) return 2;
        return 1;
    case OrbitCase::BMax:
    case OrbitCase::DMaxFirst:
        if (first_m_has(-1)) return 0;
        if (first_m_has(1)) return 1;
        break;
    case OrbitCase::C: return positives(m_);
    case OrbitCase::DNonMaxSpin: {
        const int pos = positives(m_);
        if (i_ == n_) return pos;
        if (first_m_has(-n_)) return pos + 1;
        if (first_m_has(n_)) return pos - 1;
        return pos;
    }
    case OrbitCase::DMaxSpin: {
        const int pos = positives(n_);
        const int eps = spin_epsilon();
        if (i_ == n_) {
            if ((pos - eps) % 2 == 0) return (pos - eps) / 2;
            break;
        }
        // n sits somewhere in the window with one sign or the other
        const int shift = first_m_has(-n_) ? 1 - eps : -1 - eps;
        if ((pos + shift) % 2 == 0) return (pos + shift) / 2;
        break;
    }
    }
    throw std::logic_error(fixture_name() + ": no coset clause matches " + w.str());
}

int GrassmannianCase::orbit_label(const WeylElement& w) const {
    if (kind_ == OrbitCase::A) return m_ - clause_label(w);
    return clause_label(w);
}

int GrassmannianCase::top_label() const {
    switch (kind_) {
    case OrbitCase::A: return std::min(m_, i_);
    case OrbitCase::BNonMax:
    case OrbitCase::DNonMaxFirst: return 2;
    case OrbitCase::BMax:
    case OrbitCase::DMaxFirst: return 1;
    case OrbitCase::C:
    case OrbitCase::DNonMaxSpin: return m_;
    case OrbitCase::DMaxSpin: return (n_ - spin_epsilon()) / 2;
    }
    return 0;
}

int GrassmannianCase::normalize(int label) const { return top_label() - label; }
int GrassmannianCase::orbit_label_of(int d) const { return top_label() - d; }
int GrassmannianCase::d_of(const WeylElement& w) const { return normalize(orbit_label(w)); }

std::vector<int> GrassmannianCase::orbit_labels() const {
    int lo = 0;
    if (kind_ == OrbitCase::A) lo = std::max(0, m_ + i_ - n_ - 1);
    std::vector<int> out;
    for (int l = top_label(); l >= lo; --l) out.push_back(l);
    return out;
}

int GrassmannianCase::expected_fiber_dim(int L) const {
    const int n = n_, m = m_;
    switch (kind_) {
    case OrbitCase::A: return (m - L) * (i_ - L);
    case OrbitCase::BNonMax: return L == 0 ? 2 * n - m : L == 1 ? m : 0;
    case OrbitCase::BMax: return L == 0 ? n : 0;
    case OrbitCase::C: return (m - L) * (n - L) - (m - L) * (m - L - 1) / 2;
    case OrbitCase::DNonMaxFirst: return L == 0 ? 2 * n - 1 - m : L == 1 ? m : 0;
    case OrbitCase::DNonMaxSpin: return (m - L) * (n - L) - (m - L) * (m - L + 1) / 2;
    case OrbitCase::DMaxFirst: return L == 0 ? n - 1 : 0;
    case OrbitCase::DMaxSpin: {
        const int k = n - (2 * L + spin_epsilon());
        return k * (k - 1) / 2;
    }
    }
    return -1;
}

FlagPrediction GrassmannianCase::predicted_flag(int L) const {
    const int n = n_, m = m_;
    FlagPrediction p;
    auto mark = [&](int node) { ++p.coefficients[node]; };
    switch (kind_) {
    case OrbitCase::A:
        // G(L, E_i) x G(m-L, C^{n+1}/E_i)
        if (L >= 1 && L <= i_ - 1) mark(L);
        if (m - L >= 1 && m - L <= n - i_) mark(i_ + m - L);
        break;
    case OrbitCase::C:
        // F(L, n-m+L; E_n) in the A_{n-1} Levi
        for (int step : {L, n - m + L})
            if (step >= 1 && step <= n - 1) mark(step);
        break;
    case OrbitCase::DNonMaxSpin:
        for (int step : {L, n - m + L})
            if (step >= 1 && step <= n - 1) mark(spin_ambient(step));
        break;
    case OrbitCase::DMaxSpin: {
        const int e = 2 * L + spin_epsilon();
        if (e >= 1 && e <= n - 1) mark(spin_ambient(e));
        break;
    }
    case OrbitCase::BNonMax: {
        // OG(m - eps, E_1^perp / E_1) in the B_{n-1} Levi on nodes 2..n
        const int k = m - (L == 1 ? 0 : 1);
        if (k >= 1) mark(k + 1);
        if (k == n - 1) p.scale = 2;
        break;
    }
    case OrbitCase::BMax: mark(n); break;
    case OrbitCase::DNonMaxFirst: {
        // OG(m - eps, 2n-2) in the D_{n-1} Levi on nodes 2..n
        const int k = m - (L == 1 ? 0 : 1);
        if (k >= 1 && k <= n - 3) mark(k + 1);
        if (k == n - 2) {
            mark(n - 1);
            mark(n);
        }
        break;
    }
    case OrbitCase::DMaxFirst: mark(L == 1 ? n : n - 1); break;
    }
    return p;
}

}  // namespace parorb
