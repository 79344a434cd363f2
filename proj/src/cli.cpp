#include "arcloc/cli.hpp"

#include <chrono>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "arcloc/classes.hpp"
#include "arcloc/decomposition.hpp"
#include "arcloc/errors.hpp"
#include "arcloc/generators.hpp"
#include "arcloc/io.hpp"
#include "arcloc/oracles.hpp"
#include "arcloc/render.hpp"
#include "arcloc/sweep.hpp"

namespace arcloc::cli {

namespace {

struct RunConfig {
    std::string input;
    std::string format = "text";
    std::string class_flag = "in";
    int n = 4;
    std::uint64_t seed = 1;
    std::optional<int> oracle_cap;
    int jobs = 1;
    std::vector<std::string> properties;
    std::string generate_kind;
    std::vector<int> sizes;
    double p_arc = 0.5;
    double p_digon = 0.0;
    std::string oracle_kind = "perfect";
};

int resolve_cap(const RunConfig& cfg) { return cfg.oracle_cap.value_or(oracle_cap_from_env()); }

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    const Digraph d = read_edge_list_file(cfg.input);
    const ClassReport report = classify(d);
    if (cfg.format == "json") out << report_json(d, report).dump(2) << "\n";
    else if (cfg.format == "dot") out << to_dot(d);
    else out << report_text(d, report);
    return kExitOk;
}

int reject(const RunConfig& cfg, std::ostream& out, const std::string& message, const PatternWitness* witness) {
    if (cfg.format == "json") {
        out << rejection_json(cfg.class_flag, message, witness).dump(2) << "\n";
    } else {
        out << "rejected: " << message << "\n";
        if (witness) out << "witness: " << witness_record(*witness) << "\n";
    }
    return kExitRejected;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Digraph d = read_edge_list_file(cfg.input);
    const int cap = resolve_cap(cfg);
    try {
        if (cfg.class_flag == "als") {
            const ALSOutcome outcome = classify_arc_locally_semicomplete(d);
            if (auto v = verify_als_outcome(d, outcome, cap); !v) {
                err << "internal error: outcome failed verification: " << v.reason << "\n";
                return kExitInternal;
            }
            if (cfg.format == "json") out << als_json(outcome).dump(2) << "\n";
            else if (cfg.format == "dot") out << als_dot(d, outcome);
            else out << als_text(outcome);
            return kExitOk;
        }
        const Decomposition outcome =
            cfg.class_flag == "in" ? decompose_in_semicomplete(d) : decompose_out_semicomplete(d);
        if (auto v = verify_decomposition(d, outcome, cap); !v) {
            err << "internal error: decomposition failed verification: " << v.reason << "\n";
            return kExitInternal;
        }
        if (cfg.format == "json") out << decomposition_json(cfg.class_flag, outcome).dump(2) << "\n";
        else if (cfg.format == "dot") out << decomposition_dot(d, outcome);
        else out << decomposition_text(outcome);
        return kExitOk;
    } catch (const ClassViolation& e) {
        return reject(cfg, out, e.what(), &e.witness());
    } catch (const DomainError& e) {
        return reject(cfg, out, e.what(), nullptr);
    } catch (const TheoremViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Digraph d;
    if (cfg.generate_kind == "extended-cycle") {
        d = make_extended_cycle(cfg.sizes).digraph;
    } else if (cfg.generate_kind == "random") {
        d = random_digraph(RandomModel{cfg.n, cfg.p_arc, cfg.p_digon, cfg.seed});
    } else {
        Rng rng(cfg.seed);
        d = random_connected_member(cfg.n, *class_from_flag(cfg.class_flag), rng);
    }
    (void)err;
    if (cfg.format == "dot") out << to_dot(d);
    else out << to_edge_list(d);
    return kExitOk;
}

int cmd_enumerate_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.n < 0 || cfg.n > kExhaustiveCap) {
        err << "error: exhaustive enumeration supports n <= " << kExhaustiveCap << ", got " << cfg.n << "\n";
        return kExitUsage;
    }
    SweepOptions options;
    options.n = cfg.n;
    options.kind = *class_from_flag(cfg.class_flag);
    options.jobs = cfg.jobs;
    options.oracle_cap = resolve_cap(cfg);
    options.properties.clear();
    for (const auto& name : cfg.properties) {
        if (name == "all") {
            options.properties = all_properties();
            break;
        }
        auto p = property_from_name(name);
        if (!p) {
            err << "error: unknown property '" << name << "'\n";
            return kExitUsage;
        }
        options.properties.push_back(*p);
    }
    if (options.properties.empty()) options.properties = {Property::main_theorem};

    const auto start = std::chrono::steady_clock::now();
    const SweepSummary s = run_exhaustive_sweep(options);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    out << "n=" << cfg.n << " class=" << cfg.class_flag << " properties=";
    for (std::size_t i = 0; i < options.properties.size(); ++i)
        out << (i ? "," : "") << property_name(options.properties[i]);
    out << "\n";
    out << s.scanned << " scanned, " << s.filtered << " filtered, " << s.failures << " failures\n";
    out << "outcomes: diperfect=" << s.stats.diperfect << " tripartition=" << s.stats.tripartition
        << " clique_cut=" << s.stats.clique_cut << " odd_extended_cycle=" << s.stats.odd_extended_cycle << "\n";
    out << "multiple odd extended cycle components: " << s.stats.multiple_odd_components << "\n";
    out << "elapsed: " << seconds << " s\n";
    if (s.first_failure) {
        out << "first counterexample: index " << *s.first_failure << " (n=" << cfg.n << "): " << s.first_failure_reason
            << "\n";
        out << to_edge_list(digraph_from_index(cfg.n, *s.first_failure));
        return kExitRejected;
    }
    return kExitOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Digraph d = read_edge_list_file(cfg.input);
    const int cap = resolve_cap(cfg);
    try {
        if (cfg.oracle_kind == "clique-cut") {
            const auto cut = brute_force_has_clique_cut(d, cap);
            if (cfg.format == "json") {
                Json j;
                j["clique_cut"] = cut ? Json(cut->cut.members()) : Json(nullptr);
                out << j.dump(2) << "\n";
            } else if (cut) {
                out << "clique cut:";
                for (Vertex v : cut->cut) out << " " << v;
                out << "\n";
            } else {
                out << "no clique cut\n";
            }
            return kExitOk;
        }
        const PerfectionVerdict v = brute_force_is_perfect(underlying_graph(d), cap);
        const char* kind = v.obstruction == Obstruction::odd_hole       ? "odd_hole"
                           : v.obstruction == Obstruction::odd_antihole ? "odd_antihole"
                                                                        : "none";
        if (cfg.format == "json") {
            Json j;
            j["perfect"] = v.perfect;
            j["obstruction"] = kind;
            j["cycle"] = v.cycle;
            out << j.dump(2) << "\n";
        } else {
            out << (v.perfect ? "perfect" : "not perfect");
            if (!v.perfect) {
                out << " (" << kind << ":";
                for (Vertex x : v.cycle) out << " " << x;
                out << ")";
            }
            out << "\n";
        }
        return kExitOk;
    } catch (const OracleCapExceeded& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Recognition and structure decompositions of arc-locally (in/out) semicomplete digraphs", "arcloc"};
    app.require_subcommand(1);
    RunConfig cfg;
    const std::vector<std::string> formats{"text", "json", "dot"};
    const std::vector<std::string> classes{"in", "out", "als"};

    auto* classify_cmd = app.add_subcommand("classify", "Report class memberships with violation witnesses");
    classify_cmd->add_option("input", cfg.input, "Edge-list file")->required();
    classify_cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));

    auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a connected class member and verify the result");
    decompose_cmd->add_option("input", cfg.input, "Edge-list file")->required();
    decompose_cmd->add_option("--class", cfg.class_flag, "Declared class")->check(CLI::IsMember(classes));
    decompose_cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
    decompose_cmd->add_option("--oracle-cap", cfg.oracle_cap, "Vertex cap for brute-force cross-checks");

    auto* generate_cmd = app.add_subcommand("generate", "Emit a generated digraph as an edge list");
    generate_cmd->add_option("kind", cfg.generate_kind, "extended-cycle | random | member")
        ->required()
        ->check(CLI::IsMember({"extended-cycle", "random", "member"}));
    generate_cmd->add_option("--sizes", cfg.sizes, "Part sizes for extended-cycle")->delimiter(',');
    generate_cmd->add_option("--n", cfg.n, "Vertex count")->check(CLI::Range(0, 64));
    generate_cmd->add_option("--seed", cfg.seed, "Random seed");
    generate_cmd->add_option("--p-arc", cfg.p_arc, "One-way arc probability per pair")->check(CLI::Range(0.0, 1.0));
    generate_cmd->add_option("--p-digon", cfg.p_digon, "Digon probability per pair")->check(CLI::Range(0.0, 1.0));
    generate_cmd->add_option("--class", cfg.class_flag, "Class for member")->check(CLI::IsMember(classes));
    generate_cmd->add_option("--format", cfg.format, "text (edge list) or dot")->check(CLI::IsMember({"text", "dot"}));

    auto* sweep_cmd = app.add_subcommand("enumerate-verify", "Check properties over every labelled digraph on n vertices");
    sweep_cmd->add_option("--n", cfg.n, "Vertex count (at most 5)")->required();
    sweep_cmd->add_option("--class", cfg.class_flag, "Class filter")->check(CLI::IsMember(classes));
    sweep_cmd->add_option("--property", cfg.properties,
                          "main-theorem | dichotomy | diperfect | nonoriented | lemmas | duality | all");
    sweep_cmd->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1, 256));
    sweep_cmd->add_option("--oracle-cap", cfg.oracle_cap, "Vertex cap for brute-force oracles");

    auto* oracle_cmd = app.add_subcommand("oracle", "Run a brute-force oracle on a digraph");
    oracle_cmd->add_option("input", cfg.input, "Edge-list file")->required();
    oracle_cmd->add_option("--kind", cfg.oracle_kind, "perfect | clique-cut")
        ->check(CLI::IsMember({"perfect", "clique-cut"}));
    oracle_cmd->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    oracle_cmd->add_option("--oracle-cap", cfg.oracle_cap, "Vertex cap");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (cfg.oracle_cap && (*cfg.oracle_cap < 0 || *cfg.oracle_cap > kMaxOracleCap)) {
        err << "error: --oracle-cap must lie in [0, " << kMaxOracleCap << "]\n";
        return kExitUsage;
    }

    try {
        if (*classify_cmd) return cmd_classify(cfg, out);
        if (*decompose_cmd) return cmd_decompose(cfg, out, err);
        if (*generate_cmd) return cmd_generate(cfg, out, err);
        if (*sweep_cmd) return cmd_enumerate_verify(cfg, out, err);
        if (*oracle_cmd) return cmd_oracle(cfg, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace arcloc::cli
