#include "arcloc/oracles.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "arcloc/errors.hpp"

namespace arcloc {

namespace {

using Mask = std::uint32_t;

void check_cap(int n, int cap) {
    if (cap < 0 || cap > kMaxOracleCap) throw std::invalid_argument("oracle cap must lie in [0, 24]");
    if (n > cap) throw OracleCapExceeded(n, cap);
}

std::vector<Mask> neighbor_masks(const UndirectedGraph& g) {
    std::vector<Mask> nbr(static_cast<std::size_t>(g.order()), 0);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : g.neighbors(u)) nbr[static_cast<std::size_t>(u)] |= Mask{1} << v;
    return nbr;
}

Mask lowest(Mask m) { return m & (~m + 1); }
int index_of(Mask bit) { return std::countr_zero(bit); }

bool connected_within(const std::vector<Mask>& nbr, Mask s) {
    if (s == 0) return true;
    Mask seen = lowest(s);
    Mask frontier = seen;
    while (frontier) {
        const Mask bit = lowest(frontier);
        frontier ^= bit;
        const Mask fresh = nbr[static_cast<std::size_t>(index_of(bit))] & s & ~seen;
        seen |= fresh;
        frontier |= fresh;
    }
    return seen == s;
}

// G[s] is a cycle: connected and 2-regular.
bool induces_cycle(const std::vector<Mask>& nbr, Mask s) {
    for (Mask rest = s; rest; rest &= rest - 1) {
        const int v = index_of(lowest(rest));
        if (std::popcount(nbr[static_cast<std::size_t>(v)] & s) != 2) return false;
    }
    return connected_within(nbr, s);
}

std::vector<Vertex> cycle_order(const std::vector<Mask>& nbr, Mask s) {
    std::vector<Vertex> order;
    int prev = -1;
    int cur = index_of(lowest(s));
    const int start = cur;
    do {
        order.push_back(cur);
        Mask next = nbr[static_cast<std::size_t>(cur)] & s;
        if (prev >= 0) next &= ~(Mask{1} << prev);
        const int nxt = index_of(lowest(next));
        prev = cur;
        cur = nxt;
    } while (cur != start);
    return order;
}

std::optional<std::vector<Vertex>> find_odd_hole(const std::vector<Mask>& nbr, int n) {
    const Mask full = (Mask{1} << n) - 1;
    for (Mask s = 1; s <= full; ++s) {
        const int size = std::popcount(s);
        if (size < 5 || size % 2 == 0) continue;
        if (induces_cycle(nbr, s)) return cycle_order(nbr, s);
    }
    return std::nullopt;
}

}  // namespace

int oracle_cap_from_env(int fallback) {
    const char* raw = std::getenv("ARCLOCAL_ORACLE_CAP");
    if (raw == nullptr) return fallback;
    int value = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc{} || ptr != end || value < 0 || value > kMaxOracleCap) return fallback;
    return value;
}

PerfectionVerdict brute_force_is_perfect(const UndirectedGraph& g, int cap) {
    check_cap(g.order(), cap);
    if (auto hole = find_odd_hole(neighbor_masks(g), g.order()))
        return {false, Obstruction::odd_hole, std::move(*hole)};
    if (auto hole = find_odd_hole(neighbor_masks(g.complement()), g.order()))
        return {false, Obstruction::odd_antihole, std::move(*hole)};
    return {};
}

std::optional<CliqueCutCertificate> brute_force_has_clique_cut(const Digraph& d, int cap) {
    const int n = d.order();
    check_cap(n, cap);
    std::vector<Mask> nbr(static_cast<std::size_t>(n), 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && (d.has_arc(u, v) || d.has_arc(v, u))) nbr[static_cast<std::size_t>(u)] |= Mask{1} << v;
    const Mask full = (Mask{1} << n) - 1;

    for (int size = 0; size < n; ++size) {
        if (size == 0) {
            if (!connected_within(nbr, full)) return CliqueCutCertificate{};
            continue;
        }
        // Gosper's hack: next mask with the same popcount.
        for (Mask b = (Mask{1} << size) - 1; b <= full;) {
            bool clique = true;
            for (Mask rest = b; rest && clique; rest &= rest - 1) {
                const int v = index_of(lowest(rest));
                clique = (b & ~nbr[static_cast<std::size_t>(v)]) == (Mask{1} << v);
            }
            if (clique && !connected_within(nbr, full & ~b)) {
                std::vector<Vertex> members;
                for (Mask rest = b; rest; rest &= rest - 1) members.push_back(index_of(lowest(rest)));
                return CliqueCutCertificate{VertexSet(std::move(members))};
            }
            const Mask c = lowest(b);
            const Mask r = b + c;
            b = (((r ^ b) >> 2) / c) | r;
        }
    }
    return std::nullopt;
}

}  // namespace arcloc
