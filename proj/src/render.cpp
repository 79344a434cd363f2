#include "arcloc/render.hpp"

#include <array>
#include <sstream>

#include "arcloc/io.hpp"

namespace arcloc {

namespace {

Json set_json(const VertexSet& s) {
    Json out = Json::array();
    for (Vertex v : s) out.push_back(v);
    return out;
}

Json decomposition_skeleton(std::string_view class_flag, std::string_view outcome) {
    Json j;
    j["class"] = class_flag;
    j["outcome"] = outcome;
    j["V1"] = Json::array();
    j["V2_parts"] = Json::array();
    j["V3"] = Json::array();
    j["cut"] = Json::array();
    j["witness"] = nullptr;
    return j;
}

std::string set_text(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s.members()[i]);
    return out + "}";
}

std::string parts_text(const ExtendedCycleCertificate& c) {
    std::string out;
    for (std::size_t i = 0; i < c.parts.size(); ++i) out += (i ? " -> " : "") + set_text(c.parts[i]);
    return out;
}

constexpr std::array<std::string_view, 8> kPalette = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                                      "#80b1d3", "#fdb462", "#b3de69", "#fccde5"};

}  // namespace

Json witness_json(const PatternWitness& w) {
    Json j;
    j["pattern"] = pattern_name(w.pattern);
    j["vertices"] = Json::array({w.vertices[0], w.vertices[1], w.vertices[2], w.vertices[3]});
    return j;
}

Json certificate_json(const ExtendedCycleCertificate& cert) {
    Json j = Json::array();
    for (const auto& p : cert.parts) j.push_back(set_json(p));
    return j;
}

Json report_json(const Digraph& d, const ClassReport& r) {
    Json j;
    j["vertices"] = d.order();
    j["arcs"] = d.arc_count();
    Json classes;
    auto flag = [&](const char* name, const Membership& m) {
        Json f;
        f["member"] = m.member;
        f["witness"] = m.witness ? witness_json(*m.witness) : Json(nullptr);
        classes[name] = std::move(f);
    };
    flag("arc_locally_in_semicomplete", r.arc_locally_in_semicomplete);
    flag("arc_locally_out_semicomplete", r.arc_locally_out_semicomplete);
    flag("arc_locally_semicomplete", r.arc_locally_semicomplete);
    flag("three_quasi_transitive", r.three_quasi_transitive);
    flag("three_anti_quasi_transitive", r.three_anti_quasi_transitive);
    flag("three_anti_circulant", r.three_anti_circulant);
    classes["semicomplete"] = {{"member", r.semicomplete}};
    classes["semicomplete_bipartite"] = {{"member", r.semicomplete_bipartite}};
    classes["bipartite"] = {{"member", r.bipartite}};
    j["classes"] = std::move(classes);
    return j;
}

Json decomposition_json(std::string_view class_flag, const Decomposition& outcome) {
    Json j = decomposition_skeleton(class_flag, outcome_name(outcome));
    if (const auto* tri = std::get_if<TriPartition>(&outcome.outcome)) {
        j["V1"] = set_json(tri->v1);
        j["V2_parts"] = certificate_json(tri->cycle);
        j["V3"] = set_json(tri->v3);
        j["witness"] = {{"odd_cycle", tri->cycle.transversal()}};
    } else if (const auto* cut = std::get_if<CliqueCut>(&outcome.outcome)) {
        j["cut"] = set_json(cut->certificate.cut);
    }
    return j;
}

Json als_json(const ALSOutcome& outcome) {
    Json j = decomposition_skeleton("als", outcome_name(outcome));
    if (const auto* odd = std::get_if<OddExtendedCycle>(&outcome)) {
        j["V2_parts"] = certificate_json(odd->cycle);
        j["witness"] = {{"odd_cycle", odd->cycle.transversal()}};
    }
    return j;
}

Json rejection_json(std::string_view class_flag, const std::string& message, const PatternWitness* witness) {
    Json j;
    j["class"] = class_flag;
    j["error"] = message;
    j["witness"] = witness ? witness_json(*witness) : Json(nullptr);
    return j;
}

std::string report_text(const Digraph& d, const ClassReport& r) {
    std::ostringstream out;
    out << "vertices: " << d.order() << "\narcs: " << d.arc_count() << "\n";
    auto line = [&](std::string_view name, bool member, const std::optional<PatternWitness>& w) {
        out << name;
        for (std::size_t i = name.size(); i < 32; ++i) out << ' ';
        out << (member ? "YES" : "NO");
        if (w) out << "  witness " << witness_record(*w);
        out << "\n";
    };
    line("arc-locally in-semicomplete", r.arc_locally_in_semicomplete.member, r.arc_locally_in_semicomplete.witness);
    line("arc-locally out-semicomplete", r.arc_locally_out_semicomplete.member, r.arc_locally_out_semicomplete.witness);
    line("arc-locally semicomplete", r.arc_locally_semicomplete.member, r.arc_locally_semicomplete.witness);
    line("3-quasi-transitive", r.three_quasi_transitive.member, r.three_quasi_transitive.witness);
    line("3-anti-quasi-transitive", r.three_anti_quasi_transitive.member, r.three_anti_quasi_transitive.witness);
    line("3-anti-circulant", r.three_anti_circulant.member, r.three_anti_circulant.witness);
    line("semicomplete", r.semicomplete, std::nullopt);
    line("semicomplete bipartite", r.semicomplete_bipartite, std::nullopt);
    line("bipartite", r.bipartite, std::nullopt);
    return out.str();
}

std::string decomposition_text(const Decomposition& outcome) {
    std::ostringstream out;
    out << "direction: " << (outcome.direction == Direction::in ? "in" : "out") << "\n";
    out << "outcome: " << outcome_name(outcome) << "\n";
    if (const auto* tri = std::get_if<TriPartition>(&outcome.outcome)) {
        out << "V1: " << set_text(tri->v1) << "\n";
        out << "V2: " << parts_text(tri->cycle) << " (k=" << tri->cycle.length() << ")\n";
        out << "V3: " << set_text(tri->v3) << "\n";
    } else if (const auto* cut = std::get_if<CliqueCut>(&outcome.outcome)) {
        out << "cut: " << set_text(cut->certificate.cut) << "\n";
    }
    return out.str();
}

std::string als_text(const ALSOutcome& outcome) {
    std::ostringstream out;
    out << "outcome: " << outcome_name(outcome) << "\n";
    if (const auto* odd = std::get_if<OddExtendedCycle>(&outcome))
        out << "parts: " << parts_text(odd->cycle) << " (k=" << odd->cycle.length() << ")\n";
    return out.str();
}

std::string to_dot(const Digraph& d, const std::vector<int>& group, const std::vector<std::string>& legend) {
    std::ostringstream out;
    out << "digraph D {\n";
    out << "  node [shape=circle, style=filled, fillcolor=\"#ffffff\"];\n";
    for (Vertex v = 0; v < d.order(); ++v) {
        out << "  " << v;
        const int g = static_cast<std::size_t>(v) < group.size() ? group[static_cast<std::size_t>(v)] : -1;
        if (g >= 0) {
            out << " [fillcolor=\"" << kPalette[static_cast<std::size_t>(g) % kPalette.size()] << "\"";
            if (static_cast<std::size_t>(g) < legend.size())
                out << ", label=\"" << v << "\\n" << legend[static_cast<std::size_t>(g)] << "\"";
            out << "]";
        }
        out << ";\n";
    }
    for (const Arc& a : d.arcs()) out << "  " << a.from << " -> " << a.to << ";\n";
    out << "}\n";
    return out.str();
}

std::string decomposition_dot(const Digraph& d, const Decomposition& outcome) {
    std::vector<int> group(static_cast<std::size_t>(d.order()), -1);
    if (const auto* tri = std::get_if<TriPartition>(&outcome.outcome)) {
        for (Vertex v : tri->v1) group[static_cast<std::size_t>(v)] = 0;
        for (Vertex v : tri->v2) group[static_cast<std::size_t>(v)] = 1;
        for (Vertex v : tri->v3) group[static_cast<std::size_t>(v)] = 2;
        return to_dot(d, group, {"V1", "V2", "V3"});
    }
    if (const auto* cut = std::get_if<CliqueCut>(&outcome.outcome)) {
        for (Vertex v : cut->certificate.cut) group[static_cast<std::size_t>(v)] = 3;
        return to_dot(d, group, {"", "", "", "cut"});
    }
    return to_dot(d);
}

std::string als_dot(const Digraph& d, const ALSOutcome& outcome) {
    std::vector<int> group(static_cast<std::size_t>(d.order()), -1);
    std::vector<std::string> legend;
    if (const auto* odd = std::get_if<OddExtendedCycle>(&outcome)) {
        for (std::size_t i = 0; i < odd->cycle.parts.size(); ++i) {
            for (Vertex v : odd->cycle.parts[i]) group[static_cast<std::size_t>(v)] = static_cast<int>(i);
            legend.push_back("X" + std::to_string(i + 1));
        }
    }
    return to_dot(d, group, legend);
}

}  // namespace arcloc
