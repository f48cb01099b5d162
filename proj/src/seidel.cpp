#include "parorb/seidel.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "parorb/strata.hpp"

namespace parorb {

SeidelElement v_elt(const RootSystem& rs, int i) {
    const auto cn = rs.cominuscule_nodes();
    if (std::find(cn.begin(), cn.end(), i) == cn.end())
        throw std::invalid_argument(rs.name() + ": node " + std::to_string(i) + " is not cominuscule");
    NodeSet jp = NodeSet::all(rs.rank());
    jp.erase(i);
    const WeylElement w0 = longest(rs, NodeSet::all(rs.rank()));
    SeidelElement se{i, w0 * longest(rs, jp)};
    const QVec om = rs.fundamental_coweight(i);
    if (act(se.v, om) != act(w0, om)) throw std::logic_error("Seidel element fails its coweight equation");
    return se;
}

bool certify_seidel_minimal(const RootSystem& rs, const SeidelElement& se, int samples) {
    const QVec target = act(longest(rs, NodeSet::all(rs.rank())), rs.fundamental_coweight(se.i));
    auto bad = [&](const WeylElement& w) { return w.length() < se.v.length() && act(w, rs.fundamental_coweight(se.i)) == target; };
    if (group_order(rs.type(), rs.rank()) <= 50000) {
        for (const auto& w : enumerate_group(rs))
            if (bad(w)) return false;
        return true;
    }
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(1, rs.rank());
    for (int t = 0; t < samples; ++t) {
        WeylElement w = WeylElement::identity(rs.type(), rs.rank());
        for (int s = 0; s < 4 * rs.rank() * rs.rank(); ++s) w = w.times_simple(pick(rng));
        if (bad(w)) return false;
    }
    return true;
}

QuantumTerm seidel_apply(const ParabolicQuotient& pq, const SeidelElement& se, std::size_t w) {
    const int j = pq.q_node();
    if (j < 0) throw std::invalid_argument("Seidel action needs a maximal parabolic Q");
    const int e = delta(pq.root_system(), pq[w], se.i, j);
    auto img = pq.index_of(min_rep(se.v * pq[w], pq.levi_nodes()));
    if (!img) throw std::logic_error("Seidel image left the quotient");
    return {e, *img};
}

std::vector<SeidelRow> seidel_table(const ParabolicQuotient& pq, const SeidelElement& se) {
    std::vector<SeidelRow> rows;
    for (std::size_t w = 0; w < pq.size(); ++w) rows.push_back({w, seidel_apply(pq, se, w)});
    return rows;
}

int q_degree(const ParabolicQuotient& pq) {
    const int j = pq.q_node();
    if (j < 0) throw std::invalid_argument("q degree needs a maximal parabolic Q");
    const IVec& co = pq.root_system().simple_coroot(j);
    int total = 0;
    for (const auto& b : pq.outer_roots()) total += dot(b, co);
    return total;
}

SeidelLaws check_seidel_laws(const ParabolicQuotient& pq, int i) {
    const RootSystem& rs = pq.root_system();
    const SeidelElement se = v_elt(rs, i);
    const auto table = seidel_table(pq, se);
    const std::size_t N = pq.size();
    SeidelLaws r;

    std::vector<bool> hit(N, false);
    for (const auto& row : table) hit[row.term.class_index] = true;
    r.bijection = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    if (!r.bijection) r.detail = "Seidel map is not onto";

    r.iterate_consistent = true;
    for (std::size_t w = 0; w < N && r.iterate_consistent; ++w) {
        const QuantumTerm once = table[w].term;
        const QuantumTerm twice = table[once.class_index].term;
        auto direct = pq.index_of(min_rep(se.v * se.v * pq[w], pq.levi_nodes()));
        const int expect = delta(rs, pq[w], i, pq.q_node()) + delta(rs, pq[once.class_index], i, pq.q_node());
        if (!direct || *direct != twice.class_index || once.q_exp + twice.q_exp != expect) {
            r.iterate_consistent = false;
            r.detail = "iterated application disagrees at " + pq[w].str();
        }
    }

    r.commute = true;
    for (int k : rs.cominuscule_nodes()) {
        const SeidelElement other = v_elt(rs, k);
        for (std::size_t w = 0; w < N && r.commute; ++w) {
            const QuantumTerm a1 = table[w].term;
            const QuantumTerm a2 = seidel_apply(pq, other, a1.class_index);
            const QuantumTerm b1 = seidel_apply(pq, other, w);
            const QuantumTerm b2 = table[b1.class_index].term;
            if (a2.class_index != b2.class_index || a1.q_exp + a2.q_exp != b1.q_exp + b2.q_exp) {
                r.commute = false;
                r.detail = "v_" + std::to_string(i) + " and v_" + std::to_string(k) + " do not commute at " + pq[w].str();
            }
        }
    }

    // order of the class permutation
    long long order = 1;
    std::vector<bool> seen(N, false);
    for (std::size_t w = 0; w < N && r.bijection; ++w) {
        if (seen[w]) continue;
        long long len = 0;
        for (std::size_t x = w; !seen[x]; x = table[x].term.class_index) {
            seen[x] = true;
            ++len;
        }
        order = std::lcm(order, len);
    }
    r.order = order;
    r.finite_order = r.bijection && order <= group_order(rs.type(), rs.rank());
    for (std::size_t w = 0; w < N && r.finite_order; ++w) {
        int acc = 0;
        std::size_t x = w;
        for (long long t = 0; t < order; ++t) {
            acc += table[x].term.q_exp;
            x = table[x].term.class_index;
        }
        if (x != w) r.finite_order = false;
        if (r.cycle_q < 0) r.cycle_q = acc;
        if (acc != r.cycle_q) {
            r.finite_order = false;
            r.detail = "accumulated q exponent varies over the classes";
        }
    }

    const int deg = q_degree(pq);
    const int vlen = pq[table[0].term.class_index].length();
    r.degree = true;
    for (const auto& row : table) {
        const int drop = pq[row.w].length() + vlen - pq[row.term.class_index].length();
        if (drop != row.term.q_exp * deg) {
            r.degree = false;
            r.detail = "degree bookkeeping fails at " + pq[row.w].str();
            break;
        }
    }
    return r;
}

bool check_type_a_composition(const ParabolicQuotient& pq, std::string* detail) {
    const RootSystem& rs = pq.root_system();
    if (rs.type() != RootType::A) throw std::invalid_argument("composition law is stated for type A");
    const int n = rs.rank();
    std::vector<SeidelElement> v{{0, WeylElement::identity(RootType::A, n)}};
    for (int i = 1; i <= n; ++i) v.push_back(v_elt(rs, i));
    auto apply = [&](const SeidelElement& se, std::size_t w) {
        return se.i == 0 ? QuantumTerm{0, w} : seidel_apply(pq, se, w);
    };
    for (int i = 0; i <= n; ++i)
        for (int k = 0; k <= n; ++k) {
            const SeidelElement& s = v[(i + k) % (n + 1)];
            if (!(v[i].v * v[k].v == s.v)) {
                if (detail) *detail = "v_" + std::to_string(i) + " v_" + std::to_string(k) + " is not v_" + std::to_string(s.i);
                return false;
            }
            for (std::size_t w = 0; w < pq.size(); ++w) {
                const QuantumTerm ik1 = apply(v[k], w), ik = apply(v[i], ik1.class_index);
                const QuantumTerm ki1 = apply(v[i], w), ki = apply(v[k], ki1.class_index);
                const QuantumTerm direct = apply(s, w);
                if (ik.class_index != ki.class_index || ik1.q_exp + ik.q_exp != ki1.q_exp + ki.q_exp ||
                    ik.class_index != direct.class_index) {
                    if (detail) *detail = "orders disagree for i=" + std::to_string(i) + " k=" + std::to_string(k) + " at " + pq[w].str();
                    return false;
                }
            }
        }
    return true;
}

}  // namespace parorb
