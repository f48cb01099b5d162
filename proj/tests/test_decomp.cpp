#include <doctest.h>

#include "parorb/decomp.hpp"

using namespace parorb;

namespace {

std::vector<int> scales(const DecomposedDiagram& dd) {
    std::vector<int> s;
    for (const auto& c : dd.checks) s.push_back(c.scale);
    return s;
}

std::vector<std::string> flags(const DecomposedDiagram& dd) {
    std::vector<std::string> s;
    for (const auto& c : dd.checks) s.push_back(c.flag);
    return s;
}

}  // namespace

TEST_CASE("IG(2,8)") {
    const auto dd = verify_decomposition(GrassmannianCase(RootType::C, 4, 2, 4));
    CHECK(dd.all_pass());
    CHECK(scales(dd) == std::vector<int>{1, 1, 1});
    CHECK(flags(dd) == std::vector<std::string>{"G(2,4)", "F(1,3;4)", "G(2,4)"});
    const FlagModel F(dd.st.strata[1].flag);
    CHECK(F.size() == 12);
}

TEST_CASE("OG(3,9)") {
    const auto dd = verify_decomposition(GrassmannianCase(RootType::B, 4, 3, 1));
    CHECK(dd.all_pass());
    CHECK(scales(dd) == std::vector<int>{1, 2, 1});
    CHECK(flags(dd) == std::vector<std::string>{"OG(2,7)", "OG(3,7)", "OG(2,7)"});
    // every internal edge of the middle stratum is doubled
    for (const auto& e : dd.diagram.edges())
        if (dd.color(e.from) == 1 && dd.color(e.to) == 1) CHECK(e.mult == 2);
    int doubled_cross = 0;
    for (auto k : dd.cross_edges) doubled_cross += dd.diagram.edges()[k].mult == 2;
    CHECK(doubled_cross == 4);
}

TEST_CASE("OG(2,9) has no doubling") {
    const auto dd = verify_decomposition(GrassmannianCase(RootType::B, 4, 2, 1));
    CHECK(dd.all_pass());
    for (int s : scales(dd)) CHECK(s == 1);
}

TEST_CASE("phi sends the ends of F to the ends of the class") {
    const auto dd = verify_decomposition(GrassmannianCase(RootType::C, 4, 2, 4));
    for (std::size_t s = 0; s < dd.st.strata.size(); ++s) {
        const auto& o = dd.st.strata[s];
        const FlagModel F(o.flag);
        const auto& pq = dd.st.pq;
        CHECK(phi(pq, F, 0, pq[o.dc.w_min]) == pq[o.dc.w_min]);
        CHECK(phi(pq, F, F.size() - 1, pq[o.dc.w_min]) == pq[o.dc.w_max]);
        CHECK(dd.checks[s].phi.size() == F.size());
    }
}

TEST_CASE("flag model encodes tuples") {
    const auto st = stratify(GrassmannianCase(RootType::A, 5, 3, 3));
    for (const auto& o : st.strata) {
        const FlagModel F(o.flag);
        for (std::size_t v = 0; v < F.size(); ++v) CHECK(F.encode(F.decode(v)) == v);
    }
}

TEST_CASE("cross edges raise delta") {
    for (auto [t, n, m, i] : {std::tuple{RootType::C, 4, 2, 4}, {RootType::B, 4, 3, 1}, {RootType::D, 5, 3, 5},
                              {RootType::A, 5, 3, 2}}) {
        const auto dd = verify_decomposition(GrassmannianCase(t, n, m, i));
        CHECK(dd.all_pass());
        for (auto k : dd.cross_edges) {
            const auto& e = dd.diagram.edges()[k];
            CHECK(dd.st.delta_of[e.to] > dd.st.delta_of[e.from]);
        }
    }
}
