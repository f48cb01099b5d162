// Command-line front end; every computation lives in the parorb library.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "parorb/decomp.hpp"
#include "parorb/render.hpp"
#include "parorb/seidel.hpp"
#include "parorb/verify.hpp"

namespace {

using namespace parorb;

struct Target {
    std::string type;
    int rank = 0;
    int q = 0;
    int p = 0;
};

void add_target(CLI::App* cmd, Target& t, bool need_p) {
    cmd->add_option("--type", t.type, "root system type")->required()->check(CLI::IsMember({"A", "B", "C", "D"}));
    cmd->add_option("--rank", t.rank, "rank n")->required();
    cmd->add_option("--grassmannian", t.q, "node of the maximal parabolic Q")->required();
    auto* opt = cmd->add_option("--cominuscule", t.p, "cominuscule node of the acting parabolic P");
    if (need_p) opt->required();
}

void write(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

bool on(const std::string& s) { return s == "on"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parabolic orbits, Seidel action and Hasse diagram decompositions of classical Grassmannians"};
    app.require_subcommand(1);

    Target t;
    std::string format = "dot", out, certify = "on", fixture;
    bool cosets = false, corrupt = false;
    SweepCaps caps;
    unsigned threads = 0;

    auto* diagram = app.add_subcommand("diagram", "Hasse diagram of G/Q, coloured by P-orbits when --cominuscule is given");
    add_target(diagram, t, false);
    diagram->add_option("--format", format, "dot, tikz or json")->check(CLI::IsMember({"dot", "tikz", "json"}));
    diagram->add_flag("--cosets", cosets, "emit the quotient W^Q with its Bruhat covers as JSON instead");
    diagram->add_option("--out", out, "output path (stdout if omitted)");

    auto* strata = app.add_subcommand("strata", "stratification of W^Q by P-orbits (JSON)");
    add_target(strata, t, true);
    strata->add_option("--certify", certify, "certify every class as a Bruhat interval")->check(CLI::IsMember({"on", "off"}));
    strata->add_option("--out", out, "output path");

    auto* quantum = app.add_subcommand("quantum", "quantum multiplication by the Seidel class of --cominuscule");
    add_target(quantum, t, true);
    quantum->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    quantum->add_option("--out", out, "output path");

    auto* verify = app.add_subcommand("verify", "run every invariant suite over the fixture sweep");
    verify->add_option("--max-rank-a", caps.a, "largest rank of type A")->check(CLI::Range(0, 7));
    verify->add_option("--max-rank-b", caps.b, "largest rank of type B")->check(CLI::Range(0, 6));
    verify->add_option("--max-rank-c", caps.c, "largest rank of type C")->check(CLI::Range(0, 6));
    verify->add_option("--max-rank-d", caps.d, "largest rank of type D")->check(CLI::Range(0, 6));
    verify->add_option("--fixture", fixture, "single fixture TYPE,RANK,Q,P, e.g. C,4,2,4");
    verify->add_option("--certify", certify, "Bruhat interval certification")->check(CLI::IsMember({"on", "off"}));
    verify->add_flag("--self-test-corrupt", corrupt,
                     "remove one member from each class before certifying; succeeds only if the harness notices");
    verify->add_option("--threads", threads, "worker threads (0 = hardware)");
    verify->add_option("--out", out, "output path");

    auto* list = app.add_subcommand("list", "list supported fixtures up to the rank caps");
    list->add_option("--max-rank-a", caps.a)->check(CLI::Range(0, 7));
    list->add_option("--max-rank-b", caps.b)->check(CLI::Range(0, 6));
    list->add_option("--max-rank-c", caps.c)->check(CLI::Range(0, 6));
    list->add_option("--max-rank-d", caps.d)->check(CLI::Range(0, 6));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*diagram) {
            const RootSystem rs(parse_root_type(t.type), t.rank);
            if (t.p == 0) {
                const ParabolicQuotient pq = ParabolicQuotient::grassmannian(rs, t.q);
                if (cosets) {
                    write(quotient_json(pq), out);
                    return 0;
                }
                const HasseDiagram h = build_hasse(pq, DominantWeight::fundamental(rs.rank(), t.q));
                write(render(picture_of(h, rs.name() + "/P" + std::to_string(t.q)), parse_format(format)), out);
                return 0;
            }
            const GrassmannianCase gc(rs.type(), t.rank, t.q, t.p);
            const DecomposedDiagram dd = verify_decomposition(gc);
            if (cosets) write(quotient_json(dd.st.pq), out);
            else write(render(picture_of(dd), parse_format(format)), out);
            return dd.all_pass() ? 0 : 2;
        }
        if (*strata) {
            const GrassmannianCase gc(parse_root_type(t.type), t.rank, t.q, t.p);
            const Stratification st = stratify(gc);
            std::vector<bool> cert;
            bool ok = true;
            if (on(certify))
                for (const auto& s : st.strata) {
                    cert.push_back(certify_interval(s.dc, st.pq).ok());
                    ok = ok && cert.back();
                }
            write(strata_json(st, on(certify) ? &cert : nullptr), out);
            return ok ? 0 : 2;
        }
        if (*quantum) {
            const GrassmannianCase gc(parse_root_type(t.type), t.rank, t.q, t.p);
            const RootSystem rs(gc.type(), gc.rank());
            const ParabolicQuotient pq = ParabolicQuotient::grassmannian(rs, gc.q_node());
            const SeidelElement se = v_elt(rs, gc.p_node());
            const auto rows = seidel_table(pq, se);
            write(format == "json" ? seidel_json(pq, se, rows) : seidel_csv(pq, rows), out);
            return 0;
        }
        if (*verify) {
            std::vector<GrassmannianCase> fixtures;
            if (!fixture.empty()) fixtures.push_back(parse_fixture(fixture));
            else fixtures = sweep_fixtures(caps);
            VerifyOptions opt;
            opt.certify = on(certify) || corrupt;
            opt.corrupt = corrupt;
            const auto reports = run_sweep(fixtures, opt, threads);
            write(sweep_json(reports), out);
            std::size_t failed = 0;
            for (const auto& r : reports) failed += r.pass() ? 0 : 1;
            std::cerr << reports.size() - failed << "/" << reports.size() << " fixtures pass\n";
            if (corrupt) {
                std::cerr << (failed ? "self-test: injected corruption detected\n" : "self-test: corruption NOT detected\n");
                return failed ? 0 : 2;
            }
            return failed ? 2 : 0;
        }
        if (*list) {
            for (const auto& gc : sweep_fixtures(caps))
                std::cout << gc.fixture_name() << "  " << gc.variety_name() << " / P" << gc.p_node() << "  ["
                          << case_name(gc.kind()) << "]\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
