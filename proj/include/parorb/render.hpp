#pragma once

#include <string>
#include <vector>

#include "parorb/decomp.hpp"
#include "parorb/seidel.hpp"

namespace parorb {

enum class Format { Dot, Tikz, Json, Csv };

Format parse_format(const std::string& s);

// A Hasse diagram with an optional partition of its vertices into strata.
struct Picture {
    std::string title;
    const HasseDiagram* diagram;
    std::vector<std::size_t> color;     // stratum per vertex (all 0 if unstratified)
    std::vector<int> stratum_delta;     // delta per stratum
    std::vector<std::string> stratum_flag;
};

Picture picture_of(const DecomposedDiagram& dd);
Picture picture_of(const HasseDiagram& h, const std::string& title);

std::string render_dot(const Picture& p);
std::string render_tikz(const Picture& p);
std::string render_json(const Picture& p);
std::string render(const Picture& p, Format f);

std::string quotient_json(const ParabolicQuotient& pq);
std::string strata_json(const Stratification& st, const std::vector<bool>* certified = nullptr);
std::string decomposition_report_json(const DecomposedDiagram& dd);
std::string seidel_json(const ParabolicQuotient& pq, const SeidelElement& se, const std::vector<SeidelRow>& rows);
std::string seidel_csv(const ParabolicQuotient& pq, const std::vector<SeidelRow>& rows);

// Palette index -> colour names used by both emitters.
std::string dot_color(std::size_t stratum);
std::string tikz_color(std::size_t stratum);

}  // namespace parorb
