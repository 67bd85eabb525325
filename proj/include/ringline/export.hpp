#pragma once

// DOT and JSON serialization of distant graphs and verification reports.

#include <string>

#include <json.hpp>

#include "ringline/parallelism.hpp"
#include "ringline/projline.hpp"
#include "ringline/report.hpp"

namespace ringline {

inline std::string graph_to_dot(const ProjectiveLine& line, const DistantGraph& g) {
    std::string out = "graph {\n";
    for (int p = 0; p < line.size(); ++p)
        out += "  p" + std::to_string(p) + " [label=\"" + line.label(p) + "\"];\n";
    for (int p = 0; p < line.size(); ++p)
        for (int q = p + 1; q < line.size(); ++q)
            if (g.distant(p, q))
                out += "  p" + std::to_string(p) + " -- p" + std::to_string(q) + ";\n";
    out += "}\n";
    return out;
}

inline nlohmann::json graph_to_json(const ProjectiveLine& line, const DistantGraph& g) {
    nlohmann::json j;
    j["schema"] = 1;
    j["ring"] = line.R().name;
    j["points"] = nlohmann::json::array();
    for (int p = 0; p < line.size(); ++p) j["points"].push_back(line.label(p));
    j["edges"] = nlohmann::json::array();
    for (int p = 0; p < line.size(); ++p)
        for (int q = p + 1; q < line.size(); ++q)
            if (g.distant(p, q)) j["edges"].push_back({p, q});
    return j;
}

inline nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["schema"] = 1;
    j["suite"] = r.suite;
    j["descriptor"] = r.descriptor;
    j["pass"] = r.all_pass();
    j["elapsed_ms"] = r.elapsed_ms;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json jc{{"name", c.name}, {"pass", c.pass}};
        if (!c.pass) jc["witness"] = c.witness;
        j["checks"].push_back(jc);
    }
    return j;
}

inline nlohmann::json parallelism_report_to_json(const ProjectiveLine& line,
                                                 const ParallelismReport& r) {
    nlohmann::json j;
    j["schema"] = 1;
    j["ring"] = r.ring_name;
    j["points"] = r.point_count;
    j["radical_size"] = r.radical_size;
    j["class_count"] = r.classes.size();
    j["class_size"] = r.class_size;
    j["classes_uniform"] = r.classes_uniform;
    j["equivalence"] = r.equivalence;
    j["parallel_equals_nondistant"] = r.relation_equal_to_nondistant;
    j["local"] = r.is_local;
    if (r.witness)
        j["witness"] = {line.label(r.witness->first), line.label(r.witness->second)};
    j["classes"] = nlohmann::json::array();
    for (const auto& cls : r.classes) {
        nlohmann::json jc = nlohmann::json::array();
        for (int p : cls) jc.push_back(line.label(p));
        j["classes"].push_back(jc);
    }
    return j;
}

}  // namespace ringline
