#include <doctest.h>

#include "parorb/seidel.hpp"
#include "parorb/strata.hpp"

using namespace parorb;

TEST_CASE("v_i") {
    const RootSystem a1(RootType::A, 1), a3(RootType::A, 3), c4(RootType::C, 4);
    CHECK(v_elt(a1, 1).v == simple_reflection(a1, 1));
    CHECK(v_elt(a3, 1).v.window() == std::vector<int>{4, 1, 2, 3});
    // w0 = -id, yet v_4 = w0 w0(P_4) is shorter than w0
    const WeylElement w0 = longest(c4, NodeSet::all(4));
    CHECK(v_elt(c4, 4).v == w0 * longest(c4, NodeSet{1, 2, 3}));
    CHECK(v_elt(c4, 4).v.length() == 10);
    CHECK(act(v_elt(c4, 4).v, c4.fundamental_coweight(4)) == act(w0, c4.fundamental_coweight(4)));
    CHECK_THROWS(v_elt(c4, 1));
    CHECK_THROWS(v_elt(RootSystem(RootType::B, 4), 4));
    for (auto [t, n] : {std::pair{RootType::A, 4}, {RootType::B, 4}, {RootType::C, 3}, {RootType::D, 5}}) {
        const RootSystem rs(t, n);
        for (int i : rs.cominuscule_nodes()) CHECK(certify_seidel_minimal(rs, v_elt(rs, i)));
    }
}

TEST_CASE("G(2,4), i = 2") {
    const RootSystem rs(RootType::A, 3);
    const auto pq = ParabolicQuotient::grassmannian(rs, 2);
    const auto se = v_elt(rs, 2);
    const auto rows = seidel_table(pq, se);
    std::vector<int> q;
    for (const auto& r : rows) q.push_back(r.term.q_exp);
    CHECK(q == std::vector<int>{0, 1, 1, 1, 1, 2});
    CHECK(rows.back().term == QuantumTerm{2, 0});
    CHECK(rows.front().term.class_index == *pq.index_of(min_rep(se.v, pq.levi_nodes())));
}

TEST_CASE("projective space") {
    const RootSystem rs(RootType::A, 3);
    const auto pq = ParabolicQuotient::grassmannian(rs, 1);
    // i = 1: sigma_0 -> sigma_3, sigma_k -> q sigma_{k-1}
    auto rows = seidel_table(pq, v_elt(rs, 1));
    CHECK(rows[0].term == QuantumTerm{0, 3});
    for (std::size_t k = 1; k < 4; ++k) CHECK(rows[k].term == QuantumTerm{1, k - 1});
    // i = 3: sigma_k -> sigma_{k+1}, q once at the top
    rows = seidel_table(pq, v_elt(rs, 3));
    for (std::size_t k = 0; k < 3; ++k) CHECK(rows[k].term == QuantumTerm{0, k + 1});
    CHECK(rows[3].term == QuantumTerm{1, 0});
}

TEST_CASE("degree of q") {
    CHECK(q_degree(ParabolicQuotient::grassmannian(RootSystem(RootType::A, 3), 1)) == 4);
    CHECK(q_degree(ParabolicQuotient::grassmannian(RootSystem(RootType::A, 5), 2)) == 6);
    CHECK(q_degree(ParabolicQuotient::grassmannian(RootSystem(RootType::C, 4), 2)) == 7);
    CHECK(q_degree(ParabolicQuotient::grassmannian(RootSystem(RootType::B, 4), 3)) == 5);
    CHECK(q_degree(ParabolicQuotient::grassmannian(RootSystem(RootType::B, 4), 4)) == 8);
    CHECK(q_degree(ParabolicQuotient::grassmannian(RootSystem(RootType::D, 5), 1)) == 8);
}

TEST_CASE("q exponent is delta and the top exponent is the largest") {
    const GrassmannianCase gc(RootType::C, 4, 2, 4);
    const auto st = stratify(gc);
    const auto rows = seidel_table(st.pq, v_elt(st.pq.root_system(), 4));
    for (const auto& r : rows) CHECK(r.term.q_exp == st.delta_of[r.w]);
    CHECK(rows.back().term.q_exp == static_cast<int>(st.strata.size()) - 1);
}

TEST_CASE("group laws") {
    for (auto [t, n, q] : {std::tuple{RootType::C, 4, 2}, {RootType::B, 4, 3}, {RootType::D, 5, 2}, {RootType::A, 4, 2},
                           {RootType::D, 4, 4}}) {
        const RootSystem rs(t, n);
        const auto pq = ParabolicQuotient::grassmannian(rs, q);
        for (int i : rs.cominuscule_nodes()) {
            const auto laws = check_seidel_laws(pq, i);
            CAPTURE(rs.name());
            CAPTURE(i);
            CHECK_MESSAGE(laws.ok(), laws.detail);
            CHECK(laws.order >= 1);
        }
    }
}

TEST_CASE("type A Seidel group is cyclic") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= n; ++m) {
            std::string detail;
            const auto pq = ParabolicQuotient::grassmannian(RootSystem(RootType::A, n), m);
            CHECK_MESSAGE(check_type_a_composition(pq, &detail), detail);
        }
    const auto pq = ParabolicQuotient::grassmannian(RootSystem(RootType::A, 3), 2);
    CHECK(check_seidel_laws(pq, 1).order == 4);
}
