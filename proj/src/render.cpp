#include "parorb/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace parorb {

using json = nlohmann::ordered_json;

Format parse_format(const std::string& s) {
    if (s == "dot") return Format::Dot;
    if (s == "tikz") return Format::Tikz;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format '" + s + "' (dot, tikz, json, csv)");
}

std::string dot_color(std::size_t s) {
    static const char* p[] = {"blue", "red", "darkgreen", "orange", "purple", "brown", "cyan4", "magenta"};
    return p[s % 8];
}

std::string tikz_color(std::size_t s) {
    static const char* p[] = {"blue", "red", "green!60!black", "orange", "violet", "brown", "cyan", "magenta"};
    return p[s % 8];
}

Picture picture_of(const DecomposedDiagram& dd) {
    Picture p{dd.st.gc.variety_name() + " / P" + std::to_string(dd.st.gc.p_node()), &dd.diagram,
              dd.st.stratum_of, {}, {}};
    for (const auto& s : dd.st.strata) {
        p.stratum_delta.push_back(s.delta);
        p.stratum_flag.push_back(s.flag.name());
    }
    return p;
}

Picture picture_of(const HasseDiagram& h, const std::string& title) {
    return Picture{title, &h, std::vector<std::size_t>(h.size(), 0), {0}, {""}};
}

namespace {

// vertices of one degree, ordered by stratum then by element order
std::map<int, std::vector<std::size_t>> columns(const Picture& p) {
    std::map<int, std::vector<std::size_t>> cols;
    for (std::size_t v = 0; v < p.diagram->size(); ++v) cols[p.diagram->degree(v)].push_back(v);
    for (auto& [deg, vs] : cols)
        std::stable_sort(vs.begin(), vs.end(), [&](std::size_t a, std::size_t b) { return p.color[a] < p.color[b]; });
    return cols;
}

bool crosses(const Picture& p, const HasseEdge& e) { return p.color[e.from] != p.color[e.to]; }

}  // namespace

std::string render_dot(const Picture& p) {
    std::ostringstream o;
    const auto& pq = p.diagram->quotient();
    o << "graph \"" << p.title << "\" {\n";
    o << "  graph [rankdir=LR, nodesep=0.15, ranksep=0.6, label=\"" << p.title << "\"];\n";
    o << "  node [shape=box, fontsize=9, height=0.2, margin=0.04];\n";
    for (std::size_t v = 0; v < p.diagram->size(); ++v)
        o << "  n" << v << " [label=\"" << pq[v].str() << "\", class=\"stratum" << p.color[v] << "\", color=\""
          << dot_color(p.color[v]) << "\", fontcolor=\"" << dot_color(p.color[v]) << "\"];\n";
    for (const auto& [deg, vs] : columns(p)) {
        o << "  { rank=same;";
        for (std::size_t v : vs) o << " n" << v << ";";
        o << " }\n";
    }
    for (const auto& e : p.diagram->edges()) {
        const std::string c = crosses(p, e) ? "black" : dot_color(p.color[e.from]);
        std::string col = c;
        for (int k = 1; k < e.mult; ++k) col += ":invis:" + c;
        o << "  n" << e.from << " -- n" << e.to << " [color=\"" << col << "\", penwidth=" << (e.mult > 1 ? "1.5" : "1");
        if (e.mult > 1) o << ", class=\"double\"";
        if (e.mult > 2) o << ", label=\"" << e.mult << "\"";
        o << "];\n";
    }
    o << "}\n";
    return o.str();
}

std::string render_tikz(const Picture& p) {
    std::ostringstream o;
    const auto& pq = p.diagram->quotient();
    o << "\\documentclass[tikz,border=6pt]{standalone}\n\\begin{document}\n";
    o << "% " << p.title << "\n";
    o << "\\begin{tikzpicture}[x=1.1cm,y=0.7cm,v/.style={circle,fill,inner sep=1.3pt}]\n";
    for (const auto& [deg, vs] : columns(p)) {
        const double mid = (static_cast<double>(vs.size()) - 1) / 2;
        for (std::size_t k = 0; k < vs.size(); ++k) {
            std::ostringstream y;
            y << static_cast<double>(k) - mid;
            o << "  \\node[v," << tikz_color(p.color[vs[k]]) << "] (n" << vs[k] << ") at (" << deg << "," << y.str()
              << ") {}; % " << pq[vs[k]].str() << "\n";
        }
    }
    for (const auto& e : p.diagram->edges()) {
        const std::string c = crosses(p, e) ? "black" : tikz_color(p.color[e.from]);
        o << "  \\draw[" << c;
        if (e.mult == 2) o << ",double,double distance=1.2pt";
        if (e.mult > 2) o << ",very thick";
        o << "] (n" << e.from << ") -- (n" << e.to << ")";
        if (e.mult > 2) o << " node[midway,above,font=\\tiny] {" << e.mult << "}";
        o << ";\n";
    }
    o << "\\end{tikzpicture}\n\\end{document}\n";
    return o.str();
}

std::string render_json(const Picture& p) {
    const auto& pq = p.diagram->quotient();
    json j;
    j["title"] = p.title;
    json strata = json::array();
    for (std::size_t s = 0; s < p.stratum_delta.size(); ++s)
        strata.push_back({{"index", s}, {"delta", p.stratum_delta[s]}, {"flag", p.stratum_flag[s]}});
    j["strata"] = strata;
    json vs = json::array();
    for (std::size_t v = 0; v < p.diagram->size(); ++v)
        vs.push_back({{"id", v}, {"window", pq[v].str()}, {"degree", pq[v].length()}, {"stratum", p.color[v]}});
    j["vertices"] = vs;
    json es = json::array();
    for (const auto& e : p.diagram->edges())
        es.push_back({{"from", e.from}, {"to", e.to}, {"mult", e.mult}, {"root", format_vector(e.root)}});
    j["edges"] = es;
    return j.dump(1) + "\n";
}

std::string render(const Picture& p, Format f) {
    switch (f) {
    case Format::Dot: return render_dot(p);
    case Format::Tikz: return render_tikz(p);
    case Format::Json: return render_json(p);
    case Format::Csv: break;
    }
    throw std::invalid_argument("diagrams render as dot, tikz or json");
}

std::string quotient_json(const ParabolicQuotient& pq) {
    json j;
    j["type"] = std::string(1, type_letter(pq.root_system().type()));
    j["rank"] = pq.root_system().rank();
    j["q_node"] = pq.q_node();
    json el = json::array();
    for (const auto& w : pq.elements()) el.push_back({{"window", w.str()}, {"length", w.length()}});
    j["elements"] = el;
    json cv = json::array();
    for (const auto& c : pq.covers()) cv.push_back({{"from", c.from}, {"to", c.to}, {"root", format_vector(c.root)}});
    j["covers"] = cv;
    return j.dump(1) + "\n";
}

std::string strata_json(const Stratification& st, const std::vector<bool>* certified) {
    const auto& gc = st.gc;
    json j;
    j["fixture"] = gc.fixture_name();
    j["variety"] = gc.variety_name();
    j["p_node"] = gc.p_node();
    j["case"] = case_name(gc.kind());
    json arr = json::array();
    for (std::size_t s = 0; s < st.strata.size(); ++s) {
        const auto& os = st.strata[s];
        json comps = json::array();
        for (const auto& c : os.flag.components)
            comps.push_back({{"type", std::string(1, type_letter(c.levi.type))},
                             {"rank", c.levi.rank},
                             {"nodes", c.levi.nodes},
                             {"marked", c.marked},
                             {"h_prime", c.h_prime},
                             {"name", c.name()}});
        json item;
        item["delta"] = os.delta;
        item["d"] = os.d;
        item["clause_label"] = gc.clause_label(st.pq[os.dc.w_min]);
        item["w_min"] = st.pq[os.dc.w_min].str();
        item["w_max"] = st.pq[os.dc.w_max].str();
        item["size"] = os.dc.members.size();
        item["K"] = os.K.nodes();
        item["flag"] = {{"name", os.flag.name()},
                        {"components", comps},
                        {"marked", os.flag.marked_ambient().nodes()},
                        {"dim", os.flag.dim}};
        item["fiber_dim"] = os.fiber_dim;
        item["expected_fiber_dim"] = gc.expected_fiber_dim(os.orbit_label);
        item["doubling"] = os.flag.doubling();
        if (certified) item["interval"] = static_cast<bool>((*certified)[s]);
        arr.push_back(item);
    }
    j["strata"] = arr;
    return j.dump(1) + "\n";
}

std::string decomposition_report_json(const DecomposedDiagram& dd) {
    json j;
    j["fixture"] = dd.st.gc.fixture_name();
    json arr = json::array();
    for (const auto& c : dd.checks) {
        json item{{"delta", c.delta}, {"flag", c.flag}, {"scale", c.scale}, {"pass", c.pass()}};
        if (!c.detail.empty()) item["detail"] = c.detail;
        arr.push_back(item);
    }
    j["strata"] = arr;
    j["cross_edges"] = dd.cross_edges.size();
    j["all_pass"] = dd.all_pass();
    return j.dump(1) + "\n";
}

std::string seidel_json(const ParabolicQuotient& pq, const SeidelElement& se, const std::vector<SeidelRow>& rows) {
    json j;
    j["type"] = std::string(1, type_letter(pq.root_system().type()));
    j["rank"] = pq.root_system().rank();
    j["q_node"] = pq.q_node();
    j["i"] = se.i;
    j["v"] = se.v.str();
    j["q_degree"] = q_degree(pq);
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back({{"window", pq[r.w].str()},
                       {"length", pq[r.w].length()},
                       {"q_exp", r.term.q_exp},
                       {"image_window", pq[r.term.class_index].str()}});
    j["rows"] = arr;
    return j.dump(1) + "\n";
}

std::string seidel_csv(const ParabolicQuotient& pq, const std::vector<SeidelRow>& rows) {
    std::ostringstream o;
    o << "window,length,q_exp,image_window\n";
    for (const auto& r : rows)
        o << '"' << pq[r.w].str() << "\"," << pq[r.w].length() << "," << r.term.q_exp << ",\""
          << pq[r.term.class_index].str() << "\"\n";
    return o.str();
}

}  // namespace parorb
