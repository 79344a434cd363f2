#include "arcloc/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace arcloc {

namespace {

// Iterative Tarjan. Components come out sinks first.
std::vector<std::vector<Vertex>> tarjan(const Digraph& d) {
    const int n = d.order();
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> out;
    int next_index = 0;

    struct Frame {
        Vertex v;
        std::size_t edge;
    };
    std::vector<Frame> call;

    for (Vertex root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] >= 0) continue;
        call.push_back({root, 0});
        index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = next_index++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = true;

        while (!call.empty()) {
            Frame& f = call.back();
            const auto succ = d.out_neighbors(f.v);
            if (f.edge < succ.size()) {
                const Vertex w = succ[f.edge++];
                const auto wi = static_cast<std::size_t>(w);
                if (index[wi] < 0) {
                    index[wi] = low[wi] = next_index++;
                    stack.push_back(w);
                    on_stack[wi] = true;
                    call.push_back({w, 0});
                } else if (on_stack[wi]) {
                    low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], index[wi]);
                }
                continue;
            }
            const Vertex v = f.v;
            const auto vi = static_cast<std::size_t>(v);
            call.pop_back();
            if (!call.empty()) {
                const auto pi = static_cast<std::size_t>(call.back().v);
                low[pi] = std::min(low[pi], low[vi]);
            }
            if (low[vi] == index[vi]) {
                std::vector<Vertex> comp;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = false;
                    comp.push_back(w);
                } while (w != v);
                out.push_back(std::move(comp));
            }
        }
    }
    return out;
}

}  // namespace

StrongDecomposition::StrongDecomposition(const Digraph& d) {
    auto raw = tarjan(d);
    std::reverse(raw.begin(), raw.end());
    component_of_.assign(static_cast<std::size_t>(d.order()), -1);
    for (std::size_t c = 0; c < raw.size(); ++c) {
        for (Vertex v : raw[c]) component_of_[static_cast<std::size_t>(v)] = static_cast<int>(c);
        components_.emplace_back(std::move(raw[c]));
    }
    std::vector<Arc> arcs;
    for (const Arc& a : d.arcs()) {
        const int cu = component_of_[static_cast<std::size_t>(a.from)];
        const int cv = component_of_[static_cast<std::size_t>(a.to)];
        if (cu != cv) arcs.push_back({cu, cv});
    }
    condensation_ = Digraph(static_cast<int>(components_.size()), arcs);
}

const VertexSet& StrongDecomposition::component(int c) const {
    if (c < 0 || static_cast<std::size_t>(c) >= components_.size())
        throw std::out_of_range("component index " + std::to_string(c) + " out of range");
    return components_[static_cast<std::size_t>(c)];
}

std::vector<int> StrongDecomposition::initial_components() const {
    std::vector<int> out;
    for (int c = 0; c < condensation_.order(); ++c)
        if (condensation_.in_neighbors(c).empty()) out.push_back(c);
    return out;
}

StrongDecomposition::ReachSets StrongDecomposition::reach_sets(int q) const {
    component(q);
    ReachSets r;
    const auto forward = reachable_from(condensation_, q);
    const auto backward = reachable_from(inverse(condensation_), q);
    for (int c = 0; c < condensation_.order(); ++c) {
        if (c == q) continue;
        if (backward[static_cast<std::size_t>(c)]) r.reaching.push_back(c);
        if (forward[static_cast<std::size_t>(c)]) r.reached.push_back(c);
    }
    return r;
}

VertexSet StrongDecomposition::vertices_of(const std::vector<int>& comps) const {
    std::vector<Vertex> out;
    for (int c : comps)
        for (Vertex v : component(c)) out.push_back(v);
    return VertexSet(std::move(out));
}

// ---------------------------------------------------------------------------

VertexSet ExtendedCycleCertificate::vertices() const {
    std::vector<Vertex> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return VertexSet(std::move(out));
}

std::vector<int> ExtendedCycleCertificate::part_sizes() const {
    std::vector<int> out;
    for (const auto& p : parts) out.push_back(static_cast<int>(p.size()));
    return out;
}

std::vector<Vertex> ExtendedCycleCertificate::transversal() const {
    std::vector<Vertex> out;
    for (const auto& p : parts) out.push_back(p.front());
    return out;
}

bool certifies_extended_cycle(const Digraph& d, const ExtendedCycleCertificate& cert) {
    const std::size_t k = cert.parts.size();
    if (k < 3) return false;
    std::vector<int> part_of(static_cast<std::size_t>(d.order()), -1);
    for (std::size_t i = 0; i < k; ++i) {
        if (cert.parts[i].empty()) return false;
        for (Vertex v : cert.parts[i]) {
            if (v < 0 || v >= d.order()) return false;
            if (part_of[static_cast<std::size_t>(v)] >= 0) return false;
            part_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        const auto& next = cert.parts[(i + 1) % k];
        for (Vertex u : cert.parts[i]) {
            // Inside the union, u's out-neighbours are exactly the next part.
            std::size_t hits = 0;
            for (Vertex v : d.out_neighbors(u)) {
                const int pv = part_of[static_cast<std::size_t>(v)];
                if (pv < 0) continue;
                if (static_cast<std::size_t>(pv) != (i + 1) % k) return false;
                ++hits;
            }
            if (hits != next.size()) return false;
        }
    }
    return true;
}

ExtendedCycleCertificate canonical(ExtendedCycleCertificate cert) {
    if (cert.parts.empty()) return cert;
    auto first = std::min_element(cert.parts.begin(), cert.parts.end(),
                                  [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    std::rotate(cert.parts.begin(), first, cert.parts.end());
    return cert;
}

std::optional<ExtendedCycleCertificate> recognize_extended_cycle(const Digraph& d) {
    const int n = d.order();
    if (n < 3) return std::nullopt;
    for (Vertex v = 0; v < n; ++v)
        if (d.out_neighbors(v).empty() || d.in_neighbors(v).empty()) return std::nullopt;

    // Vertices of one part share their in- and out-neighbourhoods.
    using Signature = std::pair<std::vector<Vertex>, std::vector<Vertex>>;
    std::map<Signature, int> group_id;
    std::vector<int> group_of(static_cast<std::size_t>(n));
    std::vector<std::vector<Vertex>> groups;
    for (Vertex v = 0; v < n; ++v) {
        Signature sig{{d.in_neighbors(v).begin(), d.in_neighbors(v).end()},
                      {d.out_neighbors(v).begin(), d.out_neighbors(v).end()}};
        auto [it, inserted] = group_id.emplace(std::move(sig), static_cast<int>(groups.size()));
        if (inserted) groups.emplace_back();
        groups[static_cast<std::size_t>(it->second)].push_back(v);
        group_of[static_cast<std::size_t>(v)] = it->second;
    }
    const std::size_t k = groups.size();
    if (k < 3) return std::nullopt;

    // The out-neighbourhood of each group must be exactly one other group.
    std::vector<int> successor(k, -1);
    for (std::size_t g = 0; g < k; ++g) {
        const auto out = d.out_neighbors(groups[g].front());
        const int h = group_of[static_cast<std::size_t>(out.front())];
        if (static_cast<std::size_t>(h) == g) return std::nullopt;
        if (!std::equal(out.begin(), out.end(), groups[static_cast<std::size_t>(h)].begin(),
                        groups[static_cast<std::size_t>(h)].end()))
            return std::nullopt;
        successor[g] = h;
    }

    ExtendedCycleCertificate cert;
    std::vector<bool> seen(k, false);
    int g = group_of[0];
    for (std::size_t step = 0; step < k; ++step) {
        if (seen[static_cast<std::size_t>(g)]) return std::nullopt;
        seen[static_cast<std::size_t>(g)] = true;
        cert.parts.emplace_back(groups[static_cast<std::size_t>(g)]);
        g = successor[static_cast<std::size_t>(g)];
    }
    if (g != group_of[0]) return std::nullopt;
    for (const auto& p : cert.parts)
        if (!is_stable(d, p)) return std::nullopt;
    return cert;
}

std::optional<ExtendedCycleCertificate> is_odd_extended_cycle_ge5(const Digraph& d) {
    auto cert = recognize_extended_cycle(d);
    if (cert && cert->length() >= 5 && cert->length() % 2 == 1) return cert;
    return std::nullopt;
}

bool verify_clique_cut(const Digraph& d, const VertexSet& b) {
    for (Vertex v : b)
        if (v < 0 || v >= d.order()) throw std::invalid_argument("verify_clique_cut: vertex out of range");
    if (b.size() >= static_cast<std::size_t>(d.order())) return false;
    if (!is_semicomplete(induced(d, b).digraph)) return false;
    return !is_connected(remove_vertices(d, b).digraph);
}

// ---------------------------------------------------------------------------

namespace {

class DirectedCycleSearch {
public:
    DirectedCycleSearch(const Digraph& d, int min_length, bool odd_only)
        : d_(d), min_length_(min_length), odd_only_(odd_only), on_path_(static_cast<std::size_t>(d.order()), false) {}

    std::optional<std::vector<Vertex>> run() {
        for (Vertex s = 0; s < d_.order(); ++s) {
            path_.assign(1, s);
            on_path_[static_cast<std::size_t>(s)] = true;
            const bool found = extend();
            on_path_[static_cast<std::size_t>(s)] = false;
            if (found) return result_;
        }
        return std::nullopt;
    }

private:
    // path_ is an induced directed path starting at its smallest vertex.
    bool extend() {
        const Vertex s = path_.front();
        const Vertex last = path_.back();
        for (Vertex w : d_.out_neighbors(last)) {
            if (w <= s || on_path_[static_cast<std::size_t>(w)] || d_.has_arc(w, last)) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path_.size() && !chord; ++i) chord = d_.linked(w, path_[i]);
            if (chord) continue;
            if (path_.size() >= 2) {
                if (d_.has_arc(s, w)) continue;
                if (d_.has_arc(w, s)) {
                    const int len = static_cast<int>(path_.size()) + 1;
                    if (len >= min_length_ && (!odd_only_ || len % 2 == 1)) {
                        result_ = path_;
                        result_.push_back(w);
                        return true;
                    }
                    continue;
                }
            }
            path_.push_back(w);
            on_path_[static_cast<std::size_t>(w)] = true;
            const bool found = extend();
            on_path_[static_cast<std::size_t>(w)] = false;
            path_.pop_back();
            if (found) return true;
        }
        return false;
    }

    const Digraph& d_;
    int min_length_;
    bool odd_only_;
    std::vector<bool> on_path_;
    std::vector<Vertex> path_;
    std::vector<Vertex> result_;
};

class HoleSearch {
public:
    HoleSearch(const Digraph& d, int min_length, bool odd_only,
               const std::function<bool(const std::vector<Vertex>&)>& visit)
        : d_(d), min_length_(min_length), odd_only_(odd_only), visit_(visit),
          on_path_(static_cast<std::size_t>(d.order()), false) {}

    void run() {
        for (Vertex s = 0; s < d_.order(); ++s) {
            path_.assign(1, s);
            on_path_[static_cast<std::size_t>(s)] = true;
            const bool stop = extend();
            on_path_[static_cast<std::size_t>(s)] = false;
            if (stop) return;
        }
    }

private:
    bool for_each_neighbor(Vertex v, auto&& fn) const {
        // Merge of the sorted in/out lists, skipping the duplicate of a digon.
        const auto out = d_.out_neighbors(v);
        const auto in = d_.in_neighbors(v);
        std::size_t i = 0, j = 0;
        while (i < out.size() || j < in.size()) {
            Vertex w;
            if (j == in.size() || (i < out.size() && out[i] < in[j])) w = out[i++];
            else if (i == out.size() || in[j] < out[i]) w = in[j++];
            else { w = out[i++]; ++j; }
            if (fn(w)) return true;
        }
        return false;
    }

    // Returns true when the visitor asked to stop.
    bool extend() {
        const Vertex s = path_.front();
        return for_each_neighbor(path_.back(), [&](Vertex w) {
            if (w <= s || on_path_[static_cast<std::size_t>(w)]) return false;
            for (std::size_t i = 1; i + 1 < path_.size(); ++i)
                if (d_.linked(w, path_[i])) return false;
            if (path_.size() >= 2 && d_.linked(w, s)) {
                const int len = static_cast<int>(path_.size()) + 1;
                // Each hole is met in both directions; keep one.
                if (path_[1] < w && len >= min_length_ && (!odd_only_ || len % 2 == 1)) {
                    path_.push_back(w);
                    const bool keep_going = visit_(path_);
                    path_.pop_back();
                    if (!keep_going) return true;
                }
                return false;
            }
            path_.push_back(w);
            on_path_[static_cast<std::size_t>(w)] = true;
            const bool stop = extend();
            on_path_[static_cast<std::size_t>(w)] = false;
            path_.pop_back();
            return stop;
        });
    }

    const Digraph& d_;
    int min_length_;
    bool odd_only_;
    const std::function<bool(const std::vector<Vertex>&)>& visit_;
    std::vector<bool> on_path_;
    std::vector<Vertex> path_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_induced_directed_cycle(const Digraph& d, int min_length, bool odd_only) {
    return DirectedCycleSearch(d, min_length, odd_only).run();
}

void for_each_hole(const Digraph& d, int min_length, bool odd_only,
                   const std::function<bool(const std::vector<Vertex>&)>& visit) {
    HoleSearch(d, min_length, odd_only, visit).run();
}

bool is_directed_cycle(const Digraph& d, const std::vector<Vertex>& cycle) {
    const std::size_t k = cycle.size();
    if (k < 2) return false;
    std::size_t arcs = 0;
    for (Vertex u : cycle)
        for (Vertex v : cycle)
            if (u != v && d.has_arc(u, v)) ++arcs;
    if (arcs != k) return false;
    bool forward = true, backward = true;
    for (std::size_t i = 0; i < k; ++i) {
        const Vertex a = cycle[i], b = cycle[(i + 1) % k];
        forward = forward && d.has_arc(a, b);
        backward = backward && d.has_arc(b, a);
    }
    return forward || backward;
}

std::optional<std::vector<Vertex>> find_induced_nonoriented_odd_cycle_ge5(const Digraph& d) {
    std::optional<std::vector<Vertex>> found;
    for_each_hole(d, 5, true, [&](const std::vector<Vertex>& cycle) {
        if (is_directed_cycle(d, cycle)) return true;
        found = cycle;
        return false;
    });
    return found;
}

}  // namespace arcloc
