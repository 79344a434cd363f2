#pragma once

// Property checks for the structure results and the exhaustive sweep that
// drives them over every labelled digraph on n <= 5 vertices.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arcloc/digraph.hpp"
#include "arcloc/generators.hpp"
#include "arcloc/oracles.hpp"

namespace arcloc {

enum class Property {
    main_theorem,  // decompose (in/out) or dichotomy (als), then verify
    diperfect,     // structural diperfection test == brute-force perfection of U(D)
    nonoriented,   // no induced non-oriented odd cycle of length >= 5
    lemmas,        // the auxiliary structure lemmas on strong components
    duality,       // in-semicomplete(D) == out-semicomplete(inverse(D)); checked on every digraph
};

std::string_view property_name(Property p);
// Accepts the names above with '-' separators, plus "dichotomy" for main-theorem.
std::optional<Property> property_from_name(std::string_view name);
std::vector<Property> all_properties();

std::string_view class_flag(ClassKind kind);  // "in", "out", "als"
std::optional<ClassKind> class_from_flag(std::string_view flag);

struct SweepStats {
    std::uint64_t diperfect = 0;
    std::uint64_t tripartition = 0;
    std::uint64_t clique_cut = 0;
    std::uint64_t odd_extended_cycle = 0;
    // Digraphs with more than one odd extended cycle component.
    std::uint64_t multiple_odd_components = 0;
    // Non-initial odd extended cycle components examined by the lemma checks.
    std::uint64_t noninitial_odd_components = 0;

    void merge(const SweepStats& other);
};

// nullopt when `p` holds on `d`, otherwise a failure description.
// Class-dependent properties expect `d` to be a connected member of `kind`;
// for the out-semicomplete class the in-semicomplete statements are checked
// on the inverse digraph.
std::optional<std::string> check_property(Property p, const Digraph& d, ClassKind kind, int oracle_cap,
                                          SweepStats* stats = nullptr);

// Individual lemma checks on an arc-locally in-semicomplete digraph.
std::optional<std::string> check_in_semicomplete_lemmas(const Digraph& d, SweepStats* stats = nullptr);

struct SweepOptions {
    int n = 4;
    ClassKind kind = ClassKind::in_semicomplete;
    std::vector<Property> properties = {Property::main_theorem};
    int jobs = 1;
    int oracle_cap = kDefaultOracleCap;
};

struct SweepSummary {
    std::uint64_t scanned = 0;
    std::uint64_t filtered = 0;  // connected members of the class
    std::uint64_t failures = 0;
    std::optional<std::uint64_t> first_failure;  // smallest failing enumeration index
    std::string first_failure_reason;
    SweepStats stats;
};

// Throws std::invalid_argument when n exceeds the exhaustive cap.
SweepSummary run_exhaustive_sweep(const SweepOptions& options);

}  // namespace arcloc
