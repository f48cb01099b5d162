#include <doctest.h>

#include "oracles.hpp"
#include "parorb/rootsys.hpp"
#include "parorb/weyl.hpp"

using namespace parorb;

namespace {

std::vector<RootSystem> small_systems() {
    std::vector<RootSystem> v;
    for (int n = 1; n <= 6; ++n) v.emplace_back(RootType::A, n);
    for (int n = 2; n <= 6; ++n) v.emplace_back(RootType::B, n);
    for (int n = 2; n <= 6; ++n) v.emplace_back(RootType::C, n);
    for (int n = 4; n <= 6; ++n) v.emplace_back(RootType::D, n);
    return v;
}

}  // namespace

TEST_CASE("root counts and rank bounds") {
    CHECK(RootSystem(RootType::A, 3).positive_roots().size() == 6);
    CHECK(RootSystem(RootType::C, 4).positive_roots().size() == 16);
    CHECK(RootSystem(RootType::B, 4).positive_roots().size() == 16);
    CHECK(RootSystem(RootType::D, 4).positive_roots().size() == 12);
    CHECK_THROWS_AS(RootSystem(RootType::D, 3), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem(RootType::B, 1), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem(RootType::A, 0), std::invalid_argument);
    for (int n = 1; n <= 6; ++n) CHECK(RootSystem(RootType::A, n).positive_roots().size() == std::size_t(n * (n + 1) / 2));
    for (int n = 4; n <= 6; ++n) CHECK(RootSystem(RootType::D, n).positive_roots().size() == std::size_t(n * (n - 1)));
}

TEST_CASE("Cartan matrix is the Bourbaki one") {
    for (const auto& rs : small_systems())
        for (int i = 1; i <= rs.rank(); ++i)
            for (int j = 1; j <= rs.rank(); ++j) {
                CAPTURE(rs.name());
                CHECK(rs.cartan(i, j) == oracle::bourbaki_cartan(rs.type(), rs.rank(), i, j));
            }
}

TEST_CASE("fundamental coweights are dual to simple roots") {
    for (const auto& rs : small_systems())
        for (int i = 1; i <= rs.rank(); ++i)
            for (int j = 1; j <= rs.rank(); ++j)
                CHECK(pair(rs.simple_root(i), rs.fundamental_coweight(j)) == Rational(i == j ? 1 : 0));
}

TEST_CASE("cominuscule nodes") {
    CHECK(RootSystem(RootType::A, 3).cominuscule_nodes() == std::vector<int>{1, 2, 3});
    CHECK(RootSystem(RootType::B, 4).cominuscule_nodes() == std::vector<int>{1});
    CHECK(RootSystem(RootType::C, 4).cominuscule_nodes() == std::vector<int>{4});
    CHECK(RootSystem(RootType::D, 5).cominuscule_nodes() == std::vector<int>{1, 4, 5});
    // a cominuscule coweight pairs with every root in {-1, 0, 1}
    for (const auto& rs : small_systems())
        for (int i : rs.cominuscule_nodes())
            for (const auto& b : rs.positive_roots()) CHECK(abs(pair(b, rs.fundamental_coweight(i))) <= 1);
}

TEST_CASE("pairings") {
    const RootSystem a3(RootType::A, 3);
    CHECK(pair(a3.simple_root(1), a3.fundamental_coweight(1)) == 1);
    CHECK(pair(a3.simple_root(1), a3.fundamental_coweight(2)) == 0);
    const RootSystem c4(RootType::C, 4);
    const IVec highest = c4.positive_roots().back();
    CHECK(highest == IVec{2, 0, 0, 0});
    CHECK(c4.root_coordinates(highest) == IVec{2, 2, 2, 1});
    CHECK(pair(highest, c4.fundamental_coweight(4)) == 1);
    CHECK_THROWS(pair(IVec{1, 0}, c4.fundamental_coweight(1)));
}

TEST_CASE("eta") {
    const RootSystem a3(RootType::A, 3);
    CHECK(a3.eta(QVec(4, Rational(0)), 2) == 0);
    for (int j = 1; j <= 3; ++j) CHECK(a3.eta(to_rational(a3.simple_coroot(j)), j) == 1);
    const QVec om = a3.fundamental_coweight(2);
    const QVec moved = act(inverse(longest(a3, NodeSet::all(3))), om);
    QVec diff(4);
    for (int k = 0; k < 4; ++k) diff[k] = om[k] - moved[k];
    CHECK(a3.eta(diff, 2) == 2);
    // (1,0,0,0) has non-zero trace: outside the coroot span of A3
    CHECK_THROWS_AS(a3.eta(QVec{1, 0, 0, 0}, 1), std::domain_error);
}

TEST_CASE("simple reflection formula on fundamental coweights") {
    for (const auto& rs : small_systems())
        for (int a = 1; a <= rs.rank(); ++a) {
            const WeylElement s = simple_reflection(rs, a);
            for (int i = 1; i <= rs.rank(); ++i) {
                const QVec v = rs.fundamental_coweight(i);
                const Rational p = pair(rs.simple_root(a), v);
                QVec expect = v;
                for (std::size_t k = 0; k < v.size(); ++k) expect[k] -= p * rs.simple_coroot(a)[k];
                CHECK(act(s, v) == expect);
            }
        }
}

TEST_CASE("eta(omega_i - w^-1 omega_i, j) is a non-negative integer, rank <= 4") {
    std::vector<RootSystem> v;
    for (int n = 1; n <= 4; ++n) v.emplace_back(RootType::A, n);
    for (int n = 2; n <= 4; ++n) {
        v.emplace_back(RootType::B, n);
        v.emplace_back(RootType::C, n);
    }
    v.emplace_back(RootType::D, 4);
    for (const auto& rs : v)
        for (const auto& w : enumerate_group(rs)) {
            const WeylElement wi = inverse(w);
            for (int i : rs.cominuscule_nodes()) {
                const QVec om = rs.fundamental_coweight(i);
                const QVec moved = act(wi, om);
                QVec diff(om.size());
                for (std::size_t k = 0; k < om.size(); ++k) diff[k] = om[k] - moved[k];
                const QVec c = rs.coroot_coordinates(diff);
                for (const auto& x : c) {
                    CHECK(x.denominator() == 1);
                    CHECK(x >= 0);
                }
            }
        }
}

TEST_CASE("coweight differences lie in the coroot lattice") {
    const RootSystem d5(RootType::D, 5);
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        const WeylElement w = oracle::random_element(d5, rng);
        for (int i = 1; i <= 5; ++i) {
            const QVec om = d5.fundamental_coweight(i);
            const QVec moved = act(w, om);
            QVec diff(5);
            for (int k = 0; k < 5; ++k) diff[k] = om[k] - moved[k];
            for (const auto& x : d5.coroot_coordinates(diff)) CHECK(x.denominator() == 1);
        }
    }
}

TEST_CASE("node sets") {
    NodeSet s{1, 3};
    CHECK(s.contains(1));
    CHECK(!s.contains(2));
    CHECK(s.size() == 2);
    CHECK(s.str() == "{1,3}");
    CHECK(NodeSet::all(4).minus(s).nodes() == std::vector<int>{2, 4});
    CHECK_THROWS(s.insert(0));
}
