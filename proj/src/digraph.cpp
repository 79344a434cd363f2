#include "arcloc/digraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace arcloc {

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(int n) {
    std::vector<Vertex> all(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(all.begin(), all.end(), 0);
    return VertexSet(std::move(all));
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return false;
        if (*i < *j) ++i; else ++j;
    }
    return true;
}

// ---------------------------------------------------------------------------

UndirectedGraph::UndirectedGraph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw std::invalid_argument("self-edge at vertex " + std::to_string(u));
        matrix_[static_cast<std::size_t>(u * n + v)] = 1;
        matrix_[static_cast<std::size_t>(v * n + u)] = 1;
    }
    finish();
}

UndirectedGraph::UndirectedGraph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : UndirectedGraph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

void UndirectedGraph::finish() {
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = 0; v < n_; ++v)
            if (matrix_[static_cast<std::size_t>(u * n_ + v)]) adj_[static_cast<std::size_t>(u)].push_back(v);
}

std::size_t UndirectedGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& a : adj_) total += a.size();
    return total / 2;
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
    return matrix_[static_cast<std::size_t>(u * n_ + v)] != 0;
}

UndirectedGraph UndirectedGraph::complement() const {
    UndirectedGraph c;
    c.n_ = n_;
    c.matrix_.assign(matrix_.size(), 0);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = 0; v < n_; ++v)
            if (u != v) c.matrix_[static_cast<std::size_t>(u * n_ + v)] = matrix_[static_cast<std::size_t>(u * n_ + v)] ? 0 : 1;
    c.finish();
    return c;
}

// ---------------------------------------------------------------------------

Digraph::Digraph(int n, std::span<const Arc> arcs) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (const Arc& a : arcs) {
        if (a.from < 0 || a.to < 0 || a.from >= n || a.to >= n)
            throw std::invalid_argument("arc endpoint out of range: (" + std::to_string(a.from) + "," +
                                        std::to_string(a.to) + ")");
        if (a.from == a.to) throw std::invalid_argument("loop at vertex " + std::to_string(a.from));
        matrix_[index(a.from, a.to)] = 1;
    }
    out_.assign(static_cast<std::size_t>(n), {});
    in_.assign(static_cast<std::size_t>(n), {});
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (matrix_[index(u, v)]) {
                out_[static_cast<std::size_t>(u)].push_back(v);
                in_[static_cast<std::size_t>(v)].push_back(u);
                ++arc_count_;
            }
}

Digraph::Digraph(int n, std::initializer_list<Arc> arcs) : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

void Digraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

bool Digraph::dominates(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("dominates: u and v must differ");
    return has_arc(u, v);
}

bool Digraph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("adjacent: u and v must differ");
    return linked(u, v);
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : out_neighbors(u)) out.push_back({u, v});
    return out;
}

VertexSet InducedSubdigraph::lift(const VertexSet& local) const {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(to_original.at(static_cast<std::size_t>(v)));
    return VertexSet(std::move(out));
}

UndirectedGraph underlying_graph(const Digraph& d) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const Arc& a : d.arcs()) edges.emplace_back(a.from, a.to);
    return UndirectedGraph(d.order(), edges);
}

Digraph inverse(const Digraph& d) {
    std::vector<Arc> arcs = d.arcs();
    for (Arc& a : arcs) std::swap(a.from, a.to);
    return Digraph(d.order(), arcs);
}

InducedSubdigraph induced(const Digraph& d, const VertexSet& s) {
    std::vector<int> local(static_cast<std::size_t>(d.order()), -1);
    InducedSubdigraph out;
    for (Vertex v : s) {
        if (v < 0 || v >= d.order()) throw std::invalid_argument("induced: vertex out of range");
        local[static_cast<std::size_t>(v)] = static_cast<int>(out.to_original.size());
        out.to_original.push_back(v);
    }
    std::vector<Arc> arcs;
    for (Vertex u : s)
        for (Vertex v : d.out_neighbors(u))
            if (local[static_cast<std::size_t>(v)] >= 0)
                arcs.push_back({local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]});
    out.digraph = Digraph(static_cast<int>(s.size()), arcs);
    return out;
}

InducedSubdigraph remove_vertices(const Digraph& d, const VertexSet& s) {
    return induced(d, set_difference(d.vertices(), s));
}

SetRelation set_relation(const Digraph& d, const VertexSet& x, const VertexSet& y) {
    auto in_range = [&](const VertexSet& s) { return s.empty() || (s.front() >= 0 && s.members().back() < d.order()); };
    if (!in_range(x) || !in_range(y)) throw std::invalid_argument("set_relation: vertex out of range");
    if (!disjoint(x, y)) throw std::invalid_argument("set_relation: X and Y must be disjoint");
    SetRelation r{true, true, false};
    for (Vertex a : x)
        for (Vertex b : y) {
            if (!d.has_arc(a, b)) r.dominates_all = false;
            if (d.has_arc(b, a)) r.no_back_arc = false;
        }
    r.strictly_dominates = r.dominates_all && r.no_back_arc;
    return r;
}

bool is_connected(const UndirectedGraph& g) {
    const int n = g.order();
    if (n == 0) return true;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : g.neighbors(u))
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                ++count;
                stack.push_back(v);
            }
    }
    return count == n;
}

bool is_connected(const Digraph& d) {
    const int n = d.order();
    if (n == 0) return true;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    int count = 1;
    auto visit = [&](Vertex v) {
        if (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = true;
            ++count;
            stack.push_back(v);
        }
    };
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : d.out_neighbors(u)) visit(v);
        for (Vertex v : d.in_neighbors(u)) visit(v);
    }
    return count == n;
}

std::optional<int> distance(const Digraph& d, Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= d.order() || v >= d.order()) throw std::out_of_range("distance: vertex out of range");
    std::vector<int> dist(static_cast<std::size_t>(d.order()), -1);
    std::deque<Vertex> queue{u};
    dist[static_cast<std::size_t>(u)] = 0;
    while (!queue.empty()) {
        Vertex a = queue.front();
        queue.pop_front();
        if (a == v) return dist[static_cast<std::size_t>(a)];
        for (Vertex b : d.out_neighbors(a))
            if (dist[static_cast<std::size_t>(b)] < 0) {
                dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(a)] + 1;
                queue.push_back(b);
            }
    }
    return std::nullopt;
}

std::vector<bool> reachable_from(const Digraph& d, Vertex from) {
    std::vector<bool> seen(static_cast<std::size_t>(d.order()), false);
    std::vector<Vertex> stack{from};
    seen[static_cast<std::size_t>(from)] = true;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : d.out_neighbors(u))
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                stack.push_back(v);
            }
    }
    return seen;
}

bool is_semicomplete(const Digraph& d) {
    for (Vertex u = 0; u < d.order(); ++u)
        for (Vertex v = u + 1; v < d.order(); ++v)
            if (!d.linked(u, v)) return false;
    return true;
}

bool is_stable(const Digraph& d, const VertexSet& s) {
    for (Vertex u : s)
        for (Vertex v : s)
            if (u != v && d.has_arc(u, v)) return false;
    return true;
}

std::optional<std::vector<int>> bipartition(const Digraph& d) {
    const int n = d.order();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    for (Vertex start = 0; start < n; ++start) {
        if (colour[static_cast<std::size_t>(start)] >= 0) continue;
        colour[static_cast<std::size_t>(start)] = 0;
        std::vector<Vertex> stack{start};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            const int c = colour[static_cast<std::size_t>(u)];
            for (auto nbrs : {d.out_neighbors(u), d.in_neighbors(u)})
                for (Vertex v : nbrs) {
                    int& cv = colour[static_cast<std::size_t>(v)];
                    if (cv < 0) {
                        cv = 1 - c;
                        stack.push_back(v);
                    } else if (cv == c) {
                        return std::nullopt;
                    }
                }
        }
    }
    return colour;
}

bool is_bipartite(const Digraph& d) { return bipartition(d).has_value(); }

bool is_semicomplete_bipartite(const Digraph& d) {
    if (d.arc_count() == 0) return true;
    if (!is_connected(d)) return false;
    auto colour = bipartition(d);
    if (!colour) return false;
    for (Vertex u = 0; u < d.order(); ++u)
        for (Vertex v = u + 1; v < d.order(); ++v)
            if ((*colour)[static_cast<std::size_t>(u)] != (*colour)[static_cast<std::size_t>(v)] && !d.linked(u, v))
                return false;
    return true;
}

}  // namespace arcloc
