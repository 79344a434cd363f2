#pragma once

// Brute-force ground truth used to cross-check the structural algorithms.
// Both oracles enumerate vertex subsets and refuse inputs above a vertex cap
// (OracleCapExceeded) rather than running for an unbounded time.

#include <optional>
#include <vector>

#include "arcloc/digraph.hpp"
#include "arcloc/structure.hpp"

namespace arcloc {

inline constexpr int kDefaultOracleCap = 12;
// Subsets are enumerated as 32-bit masks.
inline constexpr int kMaxOracleCap = 24;

// Value of ARCLOCAL_ORACLE_CAP when set to a valid integer, else `fallback`.
int oracle_cap_from_env(int fallback = kDefaultOracleCap);

enum class Obstruction { none, odd_hole, odd_antihole };

struct PerfectionVerdict {
    bool perfect = true;
    Obstruction obstruction = Obstruction::none;
    // The hole (of G, or of the complement for an antihole) in cycle order.
    std::vector<Vertex> cycle;
};

// Perfect iff neither G nor its complement has an induced odd cycle of
// length >= 5. The first offending subset in increasing mask order is
// reported, holes before antiholes.
PerfectionVerdict brute_force_is_perfect(const UndirectedGraph& g, int cap = kDefaultOracleCap);

// Smallest clique cut, searching subsets by size and then by mask.
std::optional<CliqueCutCertificate> brute_force_has_clique_cut(const Digraph& d, int cap = kDefaultOracleCap);

}  // namespace arcloc
