#pragma once

// JSON, DOT and plain-text renderings of reports, decompositions and
// certificates. JSON is the machine interface; DOT and text are for people.
//
// Decomposition JSON (keys always present, in this order):
//   { "class": "in"|"out"|"als",
//     "outcome": "diperfect"|"tripartition"|"clique_cut"|"odd_extended_cycle",
//     "V1": [...], "V2_parts": [[...], ...], "V3": [...], "cut": [...],
//     "witness": null | {"odd_cycle": [...]} }

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "arcloc/classes.hpp"
#include "arcloc/decomposition.hpp"
#include "arcloc/structure.hpp"

namespace arcloc {

using Json = nlohmann::ordered_json;

Json witness_json(const PatternWitness& w);
Json certificate_json(const ExtendedCycleCertificate& cert);
Json report_json(const Digraph& d, const ClassReport& r);
Json decomposition_json(std::string_view class_flag, const Decomposition& outcome);
Json als_json(const ALSOutcome& outcome);
Json rejection_json(std::string_view class_flag, const std::string& message, const PatternWitness* witness);

std::string report_text(const Digraph& d, const ClassReport& r);
std::string decomposition_text(const Decomposition& outcome);
std::string als_text(const ALSOutcome& outcome);

// `group[v]` selects the fill colour of v (negative: uncoloured) and
// `legend[g]`, when given, becomes part of the vertex label.
std::string to_dot(const Digraph& d, const std::vector<int>& group = {}, const std::vector<std::string>& legend = {});
std::string decomposition_dot(const Digraph& d, const Decomposition& outcome);
std::string als_dot(const Digraph& d, const ALSOutcome& outcome);

}  // namespace arcloc
