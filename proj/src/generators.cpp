#include "arcloc/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "arcloc/classes.hpp"

namespace arcloc {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

void check_exhaustive(int n) {
    if (n < 0 || n > kExhaustiveCap)
        throw std::invalid_argument("exhaustive enumeration supports 0 <= n <= " + std::to_string(kExhaustiveCap) +
                                    ", got " + std::to_string(n));
}

}  // namespace

std::uint64_t digraph_count(int n) {
    check_exhaustive(n);
    return std::uint64_t{1} << (2 * pair_count(n));
}

Digraph digraph_from_index(int n, std::uint64_t index) {
    check_exhaustive(n);
    if (index >= digraph_count(n)) throw std::out_of_range("enumeration index out of range");
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) {
            const auto digit = index & 3u;
            index >>= 2;
            if (digit & 1u) arcs.push_back({i, j});
            if (digit & 2u) arcs.push_back({j, i});
        }
    return Digraph(n, arcs);
}

std::uint64_t digraph_index(const Digraph& d) {
    check_exhaustive(d.order());
    std::uint64_t index = 0;
    int shift = 0;
    for (Vertex i = 0; i < d.order(); ++i)
        for (Vertex j = i + 1; j < d.order(); ++j) {
            const std::uint64_t digit = (d.has_arc(i, j) ? 1u : 0u) | (d.has_arc(j, i) ? 2u : 0u);
            index |= digit << shift;
            shift += 2;
        }
    return index;
}

std::uint64_t enumerate_digraphs(const EnumerationSpec& spec,
                                 const std::function<void(std::uint64_t, const Digraph&)>& visit) {
    const std::uint64_t total = digraph_count(spec.n);
    const std::uint64_t end = std::min(spec.end, total);
    std::uint64_t visited = 0;
    for (std::uint64_t index = spec.begin; index < end; ++index) {
        const Digraph d = digraph_from_index(spec.n, index);
        if (spec.connected_only && !is_connected(d)) continue;
        if (spec.filter && !spec.filter(d)) continue;
        ++visited;
        visit(index, d);
    }
    return visited;
}

// ---------------------------------------------------------------------------

ExtendedCycle make_extended_cycle(const std::vector<int>& sizes) {
    if (sizes.size() < 3) throw std::invalid_argument("an extended cycle needs at least three parts");
    ExtendedCycle out;
    Vertex next = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("extended cycle parts must be nonempty");
        std::vector<Vertex> part;
        for (int i = 0; i < s; ++i) part.push_back(next++);
        out.certificate.parts.emplace_back(std::move(part));
    }
    std::vector<Arc> arcs;
    const std::size_t k = sizes.size();
    for (std::size_t i = 0; i < k; ++i)
        for (Vertex u : out.certificate.parts[i])
            for (Vertex v : out.certificate.parts[(i + 1) % k]) arcs.push_back({u, v});
    out.digraph = Digraph(next, arcs);
    return out;
}

Digraph compose(const Digraph& d, const std::vector<Digraph>& parts) {
    if (parts.size() != static_cast<std::size_t>(d.order()))
        throw std::invalid_argument("compose: expected " + std::to_string(d.order()) + " parts, got " +
                                    std::to_string(parts.size()));
    std::vector<Vertex> offset(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) offset[i + 1] = offset[i] + parts[i].order();
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (const Arc& a : parts[i].arcs()) arcs.push_back({a.from + offset[i], a.to + offset[i]});
    for (const Arc& a : d.arcs()) {
        const auto i = static_cast<std::size_t>(a.from);
        const auto j = static_cast<std::size_t>(a.to);
        for (Vertex u = offset[i]; u < offset[i + 1]; ++u)
            for (Vertex v = offset[j]; v < offset[j + 1]; ++v) arcs.push_back({u, v});
    }
    return Digraph(offset.back(), arcs);
}

Digraph make_extension(const Digraph& d, const std::vector<int>& sizes) {
    std::vector<Digraph> parts;
    for (int s : sizes) {
        if (s < 0) throw std::invalid_argument("make_extension: negative part size");
        parts.emplace_back(s, std::initializer_list<Arc>{});
    }
    return compose(d, parts);
}

Digraph directed_cycle(int k) {
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < k; ++i) arcs.push_back({i, (i + 1) % k});
    return Digraph(k, arcs);
}

Digraph directed_path(int n) {
    std::vector<Arc> arcs;
    for (Vertex i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
    return Digraph(n, arcs);
}

// ---------------------------------------------------------------------------

Digraph random_digraph(int n, double p_arc, double p_digon, Rng& rng) {
    if (n < 0) throw std::invalid_argument("random_digraph: negative vertex count");
    if (!(p_arc >= 0.0 && p_arc <= 1.0) || !(p_digon >= 0.0 && p_digon <= 1.0))
        throw std::invalid_argument("random_digraph: probabilities must lie in [0, 1]");
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) {
            if (rng.chance(p_digon)) {
                arcs.push_back({i, j});
                arcs.push_back({j, i});
            } else if (rng.chance(p_arc)) {
                if (rng.chance(0.5)) arcs.push_back({i, j});
                else arcs.push_back({j, i});
            }
        }
    return Digraph(n, arcs);
}

Digraph random_digraph(const RandomModel& model) {
    Rng rng(model.seed);
    return random_digraph(model.n, model.p_arc, model.p_digon, rng);
}

bool in_class(const Digraph& d, ClassKind kind) {
    switch (kind) {
        case ClassKind::in_semicomplete: return is_arc_locally_in_semicomplete(d).member;
        case ClassKind::out_semicomplete: return is_arc_locally_out_semicomplete(d).member;
        case ClassKind::arc_locally_semicomplete: return is_arc_locally_semicomplete(d).member;
    }
    return false;
}

std::optional<Digraph> random_class_member(const RandomModel& model, ClassKind kind, int max_tries) {
    Rng rng(model.seed);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Digraph d = random_digraph(model.n, model.p_arc, model.p_digon, rng);
        if (in_class(d, kind)) return d;
    }
    return std::nullopt;
}

namespace {

std::optional<PatternWitness> violation(const Digraph& d, ClassKind kind) {
    switch (kind) {
        case ClassKind::in_semicomplete: return find_pattern_violation(d, Pattern::h1);
        case ClassKind::out_semicomplete: return find_pattern_violation(d, Pattern::h2);
        case ClassKind::arc_locally_semicomplete:
            if (auto w = find_pattern_violation(d, Pattern::h1)) return w;
            return find_pattern_violation(d, Pattern::h2);
    }
    return std::nullopt;
}

void add_random_link(std::vector<Arc>& arcs, Vertex a, Vertex b, Rng& rng, double p_digon = 0.15) {
    if (rng.chance(p_digon)) {
        arcs.push_back({a, b});
        arcs.push_back({b, a});
    } else if (rng.chance(0.5)) {
        arcs.push_back({a, b});
    } else {
        arcs.push_back({b, a});
    }
}

}  // namespace

Digraph complete_violations(const Digraph& d, ClassKind kind, Rng& rng) {
    Digraph current = d;
    while (auto w = violation(current, kind)) {
        std::vector<Arc> arcs = current.arcs();
        add_random_link(arcs, w->vertices[0], w->vertices[3], rng);
        current = Digraph(current.order(), arcs);
    }
    return current;
}

Digraph random_structured_member(int n, ClassKind kind, Rng& rng) {
    if (kind == ClassKind::out_semicomplete)
        return inverse(random_structured_member(n, ClassKind::in_semicomplete, rng));
    if (n < 5) return complete_violations(random_digraph(n, rng.uniform(), 0.1, rng), kind, rng);

    const int k = (n >= 7 && rng.chance(0.3)) ? 7 : 5;
    std::vector<int> sizes(static_cast<std::size_t>(k), 1);
    int v1 = 0, v3 = 0, pendant = 0;
    const bool cycle_only = kind == ClassKind::arc_locally_semicomplete && rng.chance(0.6);
    for (int extra = n - k; extra > 0; --extra) {
        const double r = rng.uniform();
        if (cycle_only || r < 0.3) ++sizes[static_cast<std::size_t>(rng.between(0, k - 1))];
        else if (r < 0.55) ++v1;
        else if (r < 0.8) ++v3;
        else ++pendant;
    }
    if (v1 == 0) {
        v3 += pendant;
        pendant = 0;
    }

    ExtendedCycle cycle = make_extended_cycle(sizes);
    std::vector<Arc> arcs = cycle.digraph.arcs();
    const int c = cycle.digraph.order();
    // Labels: cycle [0, c), V1 [c, c+v1), V3 [c+v1, c+v1+v3), pendant after.
    const Vertex v1_begin = c, v3_begin = c + v1, pendant_begin = c + v1 + v3;

    for (Vertex a = v1_begin; a < v3_begin; ++a)
        for (Vertex b = a + 1; b < v3_begin; ++b) add_random_link(arcs, a, b, rng, 0.2);
    for (Vertex a = v1_begin; a < v3_begin; ++a)
        for (Vertex x = 0; x < c; ++x) arcs.push_back({a, x});

    std::vector<int> side(static_cast<std::size_t>(v3));
    for (int& s : side) s = rng.between(0, 1);
    const double p_inner = rng.uniform();
    for (Vertex a = v3_begin; a < pendant_begin; ++a)
        for (Vertex b = a + 1; b < pendant_begin; ++b)
            if (side[static_cast<std::size_t>(a - v3_begin)] != side[static_cast<std::size_t>(b - v3_begin)] &&
                rng.chance(p_inner))
                add_random_link(arcs, a, b, rng, 0.1);
    const double p_into = rng.uniform() * 0.6;
    for (Vertex y = v3_begin; y < pendant_begin; ++y) {
        for (Vertex x = 0; x < v3_begin; ++x)
            if (rng.chance(p_into)) arcs.push_back({x, y});
    }

    for (Vertex p = pendant_begin; p < n; ++p) {
        for (Vertex q = p + 1; q < n; ++q)
            if (rng.chance(0.5)) add_random_link(arcs, p, q, rng);
        for (Vertex a = v1_begin; a < v3_begin; ++a)
            if (rng.chance(0.6)) add_random_link(arcs, p, a, rng);
    }

    // Relabel randomly so the cycle does not always hold the smallest labels.
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
    for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(rng.between(0, i))]);
    for (Arc& a : arcs) a = {perm[static_cast<std::size_t>(a.from)], perm[static_cast<std::size_t>(a.to)]};

    return complete_violations(Digraph(n, arcs), kind, rng);
}

Digraph random_connected_member(int n, ClassKind kind, Rng& rng) {
    for (;;) {
        const double r = rng.uniform();
        Digraph d;
        if (r < 0.45) {
            d = random_structured_member(n, kind, rng);
        } else if (r < 0.75) {
            d = complete_violations(random_digraph(n, 0.1 + 0.8 * rng.uniform(), 0.2 * rng.uniform(), rng), kind, rng);
        } else {
            // Sparse draws land in the class often without any completion.
            d = random_digraph(n, 0.15 + 0.35 * rng.uniform(), 0.05 * rng.uniform(), rng);
            if (!in_class(d, kind)) continue;
        }
        if (is_connected(d)) return d;
    }
}

}  // namespace arcloc
