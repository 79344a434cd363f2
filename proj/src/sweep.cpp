#include "arcloc/sweep.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "arcloc/classes.hpp"
#include "arcloc/decomposition.hpp"
#include "arcloc/errors.hpp"
#include "arcloc/structure.hpp"

namespace arcloc {

std::string_view property_name(Property p) {
    switch (p) {
        case Property::main_theorem: return "main-theorem";
        case Property::diperfect: return "diperfect";
        case Property::nonoriented: return "nonoriented";
        case Property::lemmas: return "lemmas";
        case Property::duality: return "duality";
    }
    return "?";
}

std::optional<Property> property_from_name(std::string_view name) {
    if (name == "dichotomy") return Property::main_theorem;
    for (Property p : all_properties())
        if (property_name(p) == name) return p;
    return std::nullopt;
}

std::vector<Property> all_properties() {
    return {Property::main_theorem, Property::diperfect, Property::nonoriented, Property::lemmas, Property::duality};
}

std::string_view class_flag(ClassKind kind) {
    switch (kind) {
        case ClassKind::in_semicomplete: return "in";
        case ClassKind::out_semicomplete: return "out";
        case ClassKind::arc_locally_semicomplete: return "als";
    }
    return "?";
}

std::optional<ClassKind> class_from_flag(std::string_view flag) {
    if (flag == "in") return ClassKind::in_semicomplete;
    if (flag == "out") return ClassKind::out_semicomplete;
    if (flag == "als") return ClassKind::arc_locally_semicomplete;
    return std::nullopt;
}

void SweepStats::merge(const SweepStats& o) {
    diperfect += o.diperfect;
    tripartition += o.tripartition;
    clique_cut += o.clique_cut;
    odd_extended_cycle += o.odd_extended_cycle;
    multiple_odd_components += o.multiple_odd_components;
    noninitial_odd_components += o.noninitial_odd_components;
}

namespace {

using Failure = std::optional<std::string>;

std::size_t count_odd_components(const Digraph& d, const StrongDecomposition& sd) {
    std::size_t count = 0;
    for (const auto& comp : sd.components())
        if (comp.size() >= 5 && is_odd_extended_cycle_ge5(induced(d, comp).digraph)) ++count;
    return count;
}

Failure check_main_theorem(const Digraph& d, ClassKind kind, int oracle_cap, SweepStats* stats) {
    try {
        if (kind == ClassKind::arc_locally_semicomplete) {
            const ALSOutcome out = classify_arc_locally_semicomplete(d);
            if (auto v = verify_als_outcome(d, out, oracle_cap); !v) return "dichotomy: " + v.reason;
            if (stats) (std::holds_alternative<Diperfect>(out) ? stats->diperfect : stats->odd_extended_cycle)++;
        } else {
            const Decomposition out = kind == ClassKind::in_semicomplete ? decompose_in_semicomplete(d)
                                                                         : decompose_out_semicomplete(d);
            if (auto v = verify_decomposition(d, out, oracle_cap); !v) return "decomposition: " + v.reason;
            if (stats) {
                switch (out.outcome.index()) {
                    case 0: ++stats->diperfect; break;
                    case 1: ++stats->tripartition; break;
                    default: ++stats->clique_cut; break;
                }
            }
        }
        if (stats) {
            const Digraph oriented = kind == ClassKind::out_semicomplete ? inverse(d) : d;
            if (count_odd_components(oriented, StrongDecomposition(oriented)) > 1) ++stats->multiple_odd_components;
        }
    } catch (const DomainError& e) {
        return std::string("decomposer rejected a class member: ") + e.what();
    } catch (const TheoremViolation& e) {
        return std::string("theorem violation: ") + e.what();
    }
    return std::nullopt;
}

Failure check_diperfect(const Digraph& d, int oracle_cap) {
    const DiperfectVerdict verdict = is_diperfect_in_class(d);
    const PerfectionVerdict oracle = brute_force_is_perfect(underlying_graph(d), oracle_cap);
    if (verdict.diperfect != oracle.perfect)
        return std::string("diperfect test says ") + (verdict.diperfect ? "yes" : "no") + ", oracle says " +
               (oracle.perfect ? "yes" : "no");
    if (verdict.odd_cycle) {
        const auto& c = *verdict.odd_cycle;
        if (c.size() < 5 || c.size() % 2 == 0 || !is_directed_cycle(d, c))
            return "odd cycle witness is not an induced odd directed cycle of length >= 5";
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::string> check_in_semicomplete_lemmas(const Digraph& d, SweepStats* stats) {
    const StrongDecomposition sd(d);
    const int n = d.order();
    std::vector<std::vector<bool>> reach;
    reach.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) reach.push_back(reachable_from(d, v));

    for (int k = 0; k < static_cast<int>(sd.size()); ++k) {
        if (sd.is_trivial(k)) continue;
        const VertexSet& comp = sd.component(k);
        const bool bipartite_comp = is_bipartite(induced(d, comp).digraph);
        for (Vertex v = 0; v < n; ++v) {
            if (comp.contains(v)) continue;
            bool reaches = false, dominates_some = false;
            for (Vertex x : comp) {
                reaches = reaches || reach[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)];
                dominates_some = dominates_some || d.has_arc(v, x);
            }
            if (reaches && !dominates_some)
                return "adjacency lemma: vertex " + std::to_string(v) + " reaches a non-trivial component without dominating it";
            if (!bipartite_comp && dominates_some && !set_relation(d, VertexSet{v}, comp).strictly_dominates)
                return "domination lemma: vertex " + std::to_string(v) + " does not strictly dominate a non-bipartite component";
        }
    }

    for (int a = 0; a < static_cast<int>(sd.size()); ++a)
        for (int b = 0; b < static_cast<int>(sd.size()); ++b) {
            if (a == b || sd.is_trivial(a) || sd.is_trivial(b) || !sd.condensation().has_arc(a, b)) continue;
            if (!set_relation(d, sd.component(a), sd.component(b)).strictly_dominates &&
                !is_bipartite(induced(d, set_union(sd.component(a), sd.component(b))).digraph))
                return "component-pair lemma: neither K1 |-> K2 nor K1 u K2 bipartite";
        }

    const auto initial = sd.initial_components();
    if (is_connected(d) && !sd.is_strong() && initial.size() > 1)
        for (int c : initial)
            if (!sd.is_trivial(c)) return "initial-components lemma: a non-trivial initial component among several";

    if (n > 0 && sd.is_strong() && find_induced_directed_cycle(d, 5, false) && !recognize_extended_cycle(d))
        return "strong digraph with an induced cycle of length >= 5 is not an extended cycle";

    if (!sd.is_strong()) {
        for (int q = 0; q < static_cast<int>(sd.size()); ++q) {
            if (std::find(initial.begin(), initial.end(), q) != initial.end()) continue;
            const VertexSet& qv = sd.component(q);
            if (qv.size() < 5 || !is_odd_extended_cycle_ge5(induced(d, qv).digraph)) continue;
            if (stats) ++stats->noninitial_odd_components;
            const auto rs = sd.reach_sets(q);
            for (int c : rs.reached)
                if (!sd.is_trivial(c)) return "odd-cycle component lemma (i): non-trivial component reached from Q";
            const VertexSet w = sd.vertices_of(rs.reaching);
            if (!set_relation(d, w, qv).strictly_dominates) return "odd-cycle component lemma (ii): W |-> Q fails";
            if (!is_semicomplete(induced(d, w).digraph)) return "odd-cycle component lemma (iii): D[W] not semicomplete";
            const auto reaching_initial = std::count_if(rs.reaching.begin(), rs.reaching.end(), [&](int c) {
                return std::find(initial.begin(), initial.end(), c) != initial.end();
            });
            if (reaching_initial != 1) return "odd-cycle component lemma (iv): initial component reaching Q is not unique";
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_property(Property p, const Digraph& d, ClassKind kind, int oracle_cap,
                                          SweepStats* stats) {
    if (p == Property::duality) {
        if (is_arc_locally_in_semicomplete(d).member != is_arc_locally_out_semicomplete(inverse(d)).member)
            return "in-semicomplete(D) differs from out-semicomplete(inverse(D))";
        return std::nullopt;
    }
    if (p == Property::main_theorem) return check_main_theorem(d, kind, oracle_cap, stats);

    const Digraph oriented = kind == ClassKind::out_semicomplete ? inverse(d) : d;
    switch (p) {
        case Property::diperfect: return check_diperfect(oriented, oracle_cap);
        case Property::nonoriented:
            if (find_induced_nonoriented_odd_cycle_ge5(oriented)) return "induced non-oriented odd cycle of length >= 5";
            return std::nullopt;
        case Property::lemmas: return check_in_semicomplete_lemmas(oriented, stats);
        default: break;
    }
    return std::nullopt;
}

SweepSummary run_exhaustive_sweep(const SweepOptions& options) {
    const std::uint64_t total = digraph_count(options.n);
    const int jobs = std::max(1, options.jobs);
    const bool wants_duality =
        std::find(options.properties.begin(), options.properties.end(), Property::duality) != options.properties.end();

    std::vector<SweepSummary> partial(static_cast<std::size_t>(jobs));
    auto work = [&](int shard) {
        SweepSummary& s = partial[static_cast<std::size_t>(shard)];
        const std::uint64_t begin = total * static_cast<std::uint64_t>(shard) / static_cast<std::uint64_t>(jobs);
        const std::uint64_t end = total * static_cast<std::uint64_t>(shard + 1) / static_cast<std::uint64_t>(jobs);
        auto record = [&](std::uint64_t index, const std::string& reason) {
            ++s.failures;
            if (!s.first_failure || index < *s.first_failure) {
                s.first_failure = index;
                s.first_failure_reason = reason;
            }
        };
        for (std::uint64_t index = begin; index < end; ++index) {
            const Digraph d = digraph_from_index(options.n, index);
            ++s.scanned;
            if (wants_duality)
                if (auto f = check_property(Property::duality, d, options.kind, options.oracle_cap)) record(index, *f);
            if (!in_class(d, options.kind) || !is_connected(d)) continue;
            ++s.filtered;
            for (Property p : options.properties) {
                if (p == Property::duality) continue;
                if (auto f = check_property(p, d, options.kind, options.oracle_cap, &s.stats)) {
                    record(index, std::string(property_name(p)) + ": " + *f);
                    break;
                }
            }
        }
    };

    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j) threads.emplace_back(work, j);
        for (auto& t : threads) t.join();
    }

    SweepSummary out;
    for (const auto& s : partial) {
        out.scanned += s.scanned;
        out.filtered += s.filtered;
        out.failures += s.failures;
        out.stats.merge(s.stats);
        if (s.first_failure && (!out.first_failure || *s.first_failure < *out.first_failure)) {
            out.first_failure = s.first_failure;
            out.first_failure_reason = s.first_failure_reason;
        }
    }
    return out;
}

}  // namespace arcloc
