#include "arcloc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "arcloc/errors.hpp"

namespace arcloc {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_int(std::string_view token, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, std::string("expected ") + what + ", found '" + std::string(token) + "'");
    return value;
}

}  // namespace

Digraph parse_edge_list(std::istream& in) {
    std::string raw;
    int line = 0;
    int n = -1;
    std::vector<Arc> arcs;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view text(raw);
        if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
        const auto tok = tokens(text);
        if (tok.empty()) continue;
        if (n < 0) {
            if (tok.size() != 2 || tok[0] != "n") throw ParseError(line, "expected header 'n <count>'");
            n = parse_int(tok[1], line, "vertex count");
            if (n < 0) throw ParseError(line, "vertex count must be non-negative");
            continue;
        }
        if (tok.size() != 2) throw ParseError(line, "expected an arc 'u v'");
        const int u = parse_int(tok[0], line, "vertex");
        const int v = parse_int(tok[1], line, "vertex");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line, "vertex out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw ParseError(line, "loop arc " + std::to_string(u) + " " + std::to_string(v));
        arcs.push_back({u, v});
    }
    if (n < 0) throw ParseError(line + 1, "missing header 'n <count>'");
    return Digraph(n, arcs);
}

Digraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

Digraph read_edge_list_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path.string());
    return parse_edge_list(in);
}

std::string to_edge_list(const Digraph& d) {
    std::string out = "n " + std::to_string(d.order()) + "\n";
    for (const Arc& a : d.arcs()) out += std::to_string(a.from) + " " + std::to_string(a.to) + "\n";
    return out;
}

std::string witness_record(const PatternWitness& w) {
    std::string out(pattern_name(w.pattern));
    for (Vertex v : w.vertices) out += " " + std::to_string(v);
    return out;
}

}  // namespace arcloc
