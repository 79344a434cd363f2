#pragma once

// Exhaustive enumeration of small labelled digraphs, constructive families
// (extended cycles, compositions, extensions) and reproducible random models.
//
// Enumeration index <-> digraph bijection: the unordered pairs {i,j}, i<j, are
// listed lexicographically, (0,1), (0,2), ..., (n-2,n-1). Pair p contributes
// the base-4 digit (index / 4^p) % 4 with
//   0 = no arc, 1 = i->j, 2 = j->i, 3 = digon.
// A failing case can therefore be reported as the pair (n, index).

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "arcloc/digraph.hpp"
#include "arcloc/structure.hpp"

namespace arcloc {

inline constexpr int kExhaustiveCap = 5;

// 4^(n(n-1)/2). Throws std::invalid_argument above the exhaustive cap.
std::uint64_t digraph_count(int n);
Digraph digraph_from_index(int n, std::uint64_t index);
std::uint64_t digraph_index(const Digraph& d);

struct EnumerationSpec {
    int n = 0;
    std::function<bool(const Digraph&)> filter;  // optional class predicate
    bool connected_only = false;
    // Index range [begin, end) for sharding; end is clamped to the count.
    std::uint64_t begin = 0;
    std::uint64_t end = std::numeric_limits<std::uint64_t>::max();
};

// Calls `visit(index, digraph)` for every digraph in the range that passes the
// filters and returns how many were visited. Throws std::invalid_argument
// when n exceeds kExhaustiveCap.
std::uint64_t enumerate_digraphs(const EnumerationSpec& spec,
                                 const std::function<void(std::uint64_t, const Digraph&)>& visit);

struct ExtendedCycle {
    Digraph digraph;
    ExtendedCycleCertificate certificate;
};

// Parts are labelled consecutively: X1 = {0..s1-1}, X2 = {s1..s1+s2-1}, ...
// Throws std::invalid_argument for fewer than three parts or an empty part.
ExtendedCycle make_extended_cycle(const std::vector<int>& sizes);

// D[H0, ..., Hn-1]: part i keeps its own arcs and every arc (i,j) of D joins
// all of part i to all of part j. Vertices of part i follow those of part i-1.
Digraph compose(const Digraph& d, const std::vector<Digraph>& parts);
// Composition with edgeless parts of the given sizes.
Digraph make_extension(const Digraph& d, const std::vector<int>& sizes);

Digraph directed_cycle(int k);
Digraph directed_path(int n);

// Deterministic uniform source on top of mt19937_64; the mapping to doubles
// and bounded integers is fixed here so streams are identical across
// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return uniform() < p; }
    // Uniform in [lo, hi].
    int between(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

private:
    std::mt19937_64 engine_;
};

// Per unordered pair: a digon with probability p_digon, otherwise a one-way
// arc (direction by fair coin) with probability p_arc, otherwise nothing.
struct RandomModel {
    int n = 0;
    double p_arc = 0.5;
    double p_digon = 0.0;
    std::uint64_t seed = 0;
};

// Throws std::invalid_argument for n < 0 or probabilities outside [0, 1].
Digraph random_digraph(const RandomModel& model);
Digraph random_digraph(int n, double p_arc, double p_digon, Rng& rng);

enum class ClassKind { in_semicomplete, out_semicomplete, arc_locally_semicomplete };

bool in_class(const Digraph& d, ClassKind kind);

// Rejection sampling: up to max_tries draws with seeds derived from the model.
std::optional<Digraph> random_class_member(const RandomModel& model, ClassKind kind, int max_tries);

// Repeatedly joins the endpoints of a violating occurrence with a random
// orientation until none is left. Terminates because every step removes a
// non-adjacent pair.
Digraph complete_violations(const Digraph& d, ClassKind kind, Rng& rng);

// A semicomplete part, an odd extended cycle and a bipartite part wired as
// V1 |-> V2, V1 => V3, V2 => V3, randomly perturbed, optionally with a
// pendant piece hanging off V1, then completed into the class. Always a
// member of `kind`; connectivity is not guaranteed.
Digraph random_structured_member(int n, ClassKind kind, Rng& rng);

// Mixed sampler used by the random sweeps: connected members of `kind` on n
// vertices drawn from several constructions.
Digraph random_connected_member(int n, ClassKind kind, Rng& rng);

}  // namespace arcloc
