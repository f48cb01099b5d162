#include "parorb/verify.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "parorb/decomp.hpp"
#include "parorb/render.hpp"
#include "parorb/seidel.hpp"

namespace parorb {

bool FixtureReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

struct Recorder {
    FixtureReport& r;
    void operator()(const std::string& name, bool pass, const std::string& detail = "") {
        r.checks.push_back({name, pass, pass ? "" : detail});
    }
};

void check_interval(const Stratification& st, const VerifyOptions& opt, Recorder& rec) {
    if (!opt.certify) {
        rec("interval", true, "");
        rec.r.checks.back().detail = "skipped";
        return;
    }
    bool ok = true;
    std::string why;
    for (const auto& s : st.strata) {
        DoubleCoset dc = s.dc;
        if (opt.corrupt && dc.members.size() > 2) {
            dc.members.erase(dc.members.begin() + 1);
        }
        const auto cert = certify_interval(dc, st.pq);
        if (!cert.ok()) {
            ok = false;
            why = "class of " + st.pq[dc.w_min].str() + ": " + cert.detail;
            break;
        }
    }
    rec("interval", ok, why);
}

void check_delta(const Stratification& st, Recorder& rec) {
    const auto& pq = st.pq;
    const auto& gc = st.gc;

    bool constant = true;
    for (const auto& s : st.strata)
        for (std::size_t k : s.dc.members)
            if (st.delta_of[k] != s.delta) constant = false;
    rec("delta_constant", constant, "delta varies inside a class");

    bool mono = true;
    std::string why;
    for (const auto& c : pq.covers()) {
        const bool same = st.stratum_of[c.from] == st.stratum_of[c.to];
        const int a = st.delta_of[c.from], b = st.delta_of[c.to];
        if ((same && a != b) || (!same && b <= a)) {
            mono = false;
            why = pq[c.from].str() + " -> " + pq[c.to].str();
            break;
        }
    }
    rec("delta_monotone", mono, why);

    bool eq = true;
    for (std::size_t k = 0; k < pq.size() && eq; ++k)
        if (st.delta_of[k] != gc.d_of(pq[k])) {
            eq = false;
            why = pq[k].str() + ": delta " + std::to_string(st.delta_of[k]) + ", d " + std::to_string(gc.d_of(pq[k]));
        }
    rec("delta_equals_d", eq, why);

    std::vector<int> deltas;
    for (const auto& s : st.strata) deltas.push_back(s.delta);
    std::vector<int> expected;
    for (int L : gc.orbit_labels()) expected.push_back(gc.normalize(L));
    rec("delta_range", deltas == expected, "delta values do not match the admissible labels");
    rec("orbit_count", static_cast<int>(st.strata.size()) == gc.orbit_count(),
        std::to_string(st.strata.size()) + " strata, expected " + std::to_string(gc.orbit_count()));
}

void check_ledger(const Stratification& st, Recorder& rec) {
    bool ok = true;
    std::string why;
    for (std::size_t s = 0; s < st.strata.size() && ok; ++s) {
        const auto& os = st.strata[s];
        const int lmin = st.pq[os.dc.w_min].length(), lmax = st.pq[os.dc.w_max].length();
        const int fib = st.gc.expected_fiber_dim(os.orbit_label);
        const FlagModel F(os.flag);
        std::ostringstream o;
        o << "delta " << os.delta << ": l(w_min)=" << lmin << " expected " << fib << ", l(w_max)-l(w_min)="
          << lmax - lmin << " dim F=" << os.flag.dim << ", size " << os.dc.members.size() << " |W_L^R|=" << F.size();
        if (lmin != fib || lmax - lmin != os.flag.dim || os.dc.members.size() != F.size()) {
            ok = false;
            why = o.str();
        }
    }
    rec("dimension_ledger", ok, why);

    // h' table against <w_min omega_j, alpha_k^vee>
    ok = true;
    for (const auto& os : st.strata) {
        const auto w = h_prime_weights(st.pq.root_system(), st.pq[os.dc.w_min], st.J_P, st.gc.q_node());
        std::map<int, int> table;
        for (const auto& c : os.flag.components)
            for (std::size_t k = 0; k < c.marked.size(); ++k) table[c.levi.nodes[c.marked[k] - 1]] = c.h_prime[k];
        for (const auto& [node, val] : w) {
            const Rational expect = table.count(node) ? Rational(os.flag.scale * table[node]) : Rational(0);
            if (val != expect) {
                ok = false;
                why = "delta " + std::to_string(os.delta) + " node " + std::to_string(node) + ": weight " +
                      format_rational(val) + ", table " + format_rational(expect);
            }
        }
    }
    rec("h_prime", ok, why);
}

void check_hasse(const DecomposedDiagram& dd, Recorder& rec) {
    const auto& h = dd.diagram;
    const auto& pq = h.quotient();
    const RootSystem& rs = pq.root_system();
    const int j = pq.q_node();

    bool shape = true;
    std::vector<int> out(h.size(), 0), in(h.size(), 0);
    for (const auto& e : h.edges()) {
        if (h.degree(e.to) != h.degree(e.from) + 1 || e.mult < 1) shape = false;
        ++out[e.from];
        ++in[e.to];
    }
    for (std::size_t v = 0; v < h.size(); ++v) {
        if (v + 1 < h.size() && out[v] == 0) shape = false;
        if (v > 0 && in[v] == 0) shape = false;
    }
    const auto poly = poincare_poly(pq);
    shape = shape && std::equal(poly.begin(), poly.end(), poly.rbegin());
    shape = shape && chain_degree(h) == chain_degree(h, true);
    shape = shape && pq.dimension() == static_cast<int>(rs.positive_roots().size() -
                                                        rs.positive_roots_in(pq.levi_nodes()).size());
    rec("hasse_shape", shape, "grading, connectivity, palindromy or chain count");

    bool wit = true;
    std::string why;
    for (const auto& e : h.edges()) {
        const WeylElement w = pq[e.from] * reflection(rs, e.root);
        const Rational m = rs.eta(to_rational(RootSystem::coroot(e.root)), j);
        if (!(w == pq[e.to]) || m != e.mult || pq[e.to].length() != pq[e.from].length() + 1) {
            wit = false;
            why = pq[e.from].str() + " -> " + pq[e.to].str();
            break;
        }
    }
    rec("chevalley_witness", wit, why);
}

void check_decomposition(const DecomposedDiagram& dd, Recorder& rec) {
    bool ok = dd.all_pass();
    std::string why;
    for (const auto& c : dd.checks)
        if (!c.pass()) why = "delta " + std::to_string(c.delta) + ": " + c.detail;
    rec("decomposition", ok, why);

    // s = 2 exactly on the middle stratum of OG(n-1, 2n+1)
    const auto& gc = dd.st.gc;
    const bool special = gc.kind() == OrbitCase::BNonMax && gc.q_node() == gc.rank() - 1;
    bool scale = true;
    for (const auto& c : dd.checks) {
        const bool middle = dd.st.strata[c.stratum].orbit_label == 1;
        if ((c.scale == 2) != (special && middle)) scale = false;
    }
    rec("doubling_placement", scale, "scale 2 off the expected stratum");

    bool cross = true;
    for (std::size_t e : dd.cross_edges) {
        const auto& ed = dd.diagram.edges()[e];
        if (dd.st.delta_of[ed.to] <= dd.st.delta_of[ed.from]) cross = false;
    }
    rec("cross_edges_raise_delta", cross, "a cross-stratum edge does not raise delta");
}

void check_seidel(const Stratification& st, Recorder& rec) {
    const auto laws = check_seidel_laws(st.pq, st.gc.p_node());
    rec("seidel_laws", laws.ok(), laws.detail);
    const auto se = v_elt(st.pq.root_system(), st.gc.p_node());
    rec("seidel_minimal", certify_seidel_minimal(st.pq.root_system(), se), "a shorter element has the same image");
    if (st.gc.type() == RootType::A && st.gc.rank() <= 4) {
        std::string why;
        rec("seidel_type_a_composition", check_type_a_composition(st.pq, &why), why);
    }
}

}  // namespace

FixtureReport verify_fixture(const GrassmannianCase& gc, const VerifyOptions& opt) {
    FixtureReport r{gc.fixture_name(), {}, {}};
    Recorder rec{r};
    try {
        Stratification st = stratify(gc);
        rec("stratify", true);
        check_interval(st, opt, rec);
        check_delta(st, rec);
        const DecomposedDiagram dd = decompose(st);
        r.decomposition = decomposition_report_json(dd);
        check_ledger(st, rec);
        check_hasse(dd, rec);
        check_decomposition(dd, rec);
        check_seidel(st, rec);
    } catch (const std::exception& e) {
        rec("exception", false, e.what());
    }
    return r;
}

std::vector<GrassmannianCase> sweep_fixtures(const SweepCaps& caps) {
    std::vector<GrassmannianCase> out;
    for (int n = 1; n <= caps.a; ++n)
        for (int m = 1; m <= n; ++m)
            for (int i = 1; i <= n; ++i) out.emplace_back(RootType::A, n, m, i);
    for (int n = 2; n <= caps.b; ++n)
        for (int m = 1; m <= n; ++m) out.emplace_back(RootType::B, n, m, 1);
    for (int n = 2; n <= caps.c; ++n)
        for (int m = 1; m <= n; ++m) out.emplace_back(RootType::C, n, m, n);
    for (int n = 4; n <= caps.d; ++n)
        for (int m = 1; m <= n; ++m) {
            if (m == n - 1) continue;
            for (int i : {1, n - 1, n}) out.emplace_back(RootType::D, n, m, i);
        }
    return out;
}

GrassmannianCase parse_fixture(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(tok);
    if (parts.size() != 4) throw std::invalid_argument("fixture must read TYPE,RANK,Q,P (e.g. C,4,2,4)");
    try {
        return GrassmannianCase(parse_root_type(parts[0]), std::stoi(parts[1]), std::stoi(parts[2]), std::stoi(parts[3]));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("fixture fields must be integers: '" + spec + "'");
    }
}

std::vector<FixtureReport> run_sweep(const std::vector<GrassmannianCase>& fixtures, const VerifyOptions& opt,
                                     unsigned threads) {
    std::vector<FixtureReport> out(fixtures.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, fixtures.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k; (k = next++) < fixtures.size();) out[k] = verify_fixture(fixtures[k], opt);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return out;
}

std::string sweep_json(const std::vector<FixtureReport>& reports) {
    using json = nlohmann::ordered_json;
    json arr = json::array();
    std::size_t failed = 0;
    for (const auto& r : reports) {
        json checks = json::array();
        for (const auto& c : r.checks) {
            json item{{"name", c.name}, {"pass", c.pass}};
            if (!c.detail.empty()) item["detail"] = c.detail;
            checks.push_back(item);
        }
        json f{{"fixture", r.fixture}, {"pass", r.pass()}, {"checks", checks}};
        if (!r.decomposition.empty()) f["decomposition"] = json::parse(r.decomposition);
        arr.push_back(f);
        if (!r.pass()) ++failed;
    }
    json j{{"fixtures", arr}, {"count", reports.size()}, {"failed", failed}, {"all_pass", failed == 0}};
    return j.dump(1) + "\n";
}

}  // namespace parorb
