#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fatpoints/analyze.hpp"
#include "fatpoints/identities.hpp"
#include "fatpoints/parse.hpp"
#include "fatpoints/sweep.hpp"

namespace {

struct OracleFlags {
    std::uint64_t prime = (1ull << 31) - 1;
    int trials = 3;
    std::uint64_t seed = 1;
};

void add_oracle_flags(CLI::App* cmd, OracleFlags& flags) {
    cmd->add_option("--prime", flags.prime, "prime modulus for the interpolation oracle");
    cmd->add_option("--trials", flags.trials, "independent point configurations per system");
    cmd->add_option("--seed", flags.seed, "base RNG seed");
}

int cmd_analyze(const std::vector<std::string>& spec_parts, bool no_oracle, bool json,
                const OracleFlags& flags) {
    std::string spec;
    for (const std::string& part : spec_parts) {
        if (!spec.empty()) spec += " ";
        spec += part;
    }
    const fatpoints::LinearSystem sys = fatpoints::parse_system_spec(spec);

    fatpoints::AnalysisOptions options;
    options.run_oracle = !no_oracle;
    options.oracle.prime = flags.prime;
    options.oracle.trials = flags.trials;
    options.oracle.seed = flags.seed;

    const fatpoints::AnalysisReport report = fatpoints::analyze(sys, options);
    if (json) {
        std::cout << fatpoints::report_to_json(report).dump() << "\n";
    } else {
        std::cout << fatpoints::report_to_text(report);
    }
    return 0;
}

int cmd_verify_identities(int count, std::uint64_t seed) {
    const fatpoints::IdentitySummary summary = fatpoints::run_identity_checks(count, seed);
    std::cout << "v == RR-v:            " << summary.rr_checked - summary.rr_failed << "/"
              << summary.rr_checked << " passed\n";
    std::cout << "additivity of v:      " << summary.additivity_checked - summary.additivity_failed << "/"
              << summary.additivity_checked << " passed\n";
    std::cout << "cremona v-change:     " << summary.vir_change_checked - summary.vir_change_failed << "/"
              << summary.vir_change_checked << " passed\n";
    for (const std::string& failure : summary.failures) std::cout << "  FAIL: " << failure << "\n";
    std::cout << (summary.all_passed() ? "all identities hold\n" : "IDENTITY FAILURES FOUND\n");
    return summary.all_passed() ? 0 : 1;
}

int cmd_sweep(fatpoints::Int max_degree, fatpoints::Int max_mult, fatpoints::Int max_points,
              const std::string& out_path, bool resume, const OracleFlags& flags) {
    fatpoints::SweepConfig config;
    config.max_degree = max_degree;
    config.max_mult = max_mult;
    config.max_points = max_points;
    config.oracle.prime = flags.prime;
    config.oracle.trials = flags.trials;
    config.oracle.seed = flags.seed;

    std::vector<std::string> existing;
    if (resume) existing = fatpoints::load_record_keys(out_path);

    std::ofstream out(out_path, std::ios::app);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << " for appending\n";
        return 1;
    }

    const fatpoints::SweepSummary summary = fatpoints::run_sweep(config, out, resume ? &existing : nullptr);
    const int disagreeing = static_cast<int>(summary.disagreements.size());
    std::cout << "sweep complete: " << summary.total << " systems enumerated, " << summary.analyzed
              << " analyzed this run (" << summary.total - summary.analyzed << " resumed), "
              << summary.agreeing << " agree, " << disagreeing << " disagree\n";
    if (disagreeing > 0) {
        std::cout << "disagreements:\n";
        for (const fatpoints::SweepDisagreement& item : summary.disagreements)
            std::cout << "  " << fatpoints::format_system(item.system) << ": predicted "
                      << item.predicted << ", oracle " << item.oracle_dim << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear systems of surfaces in P^3 through fat points: dimensions, "
                 "Cremona reduction, speciality prediction and exact oracle checks"};
    app.require_subcommand(1);

    // analyze
    std::vector<std::string> spec_parts;
    bool no_oracle = false;
    bool json = false;
    OracleFlags analyze_flags;
    CLI::App* analyze = app.add_subcommand("analyze", "analyze one system, e.g. analyze 4 2^9");
    analyze->add_option("spec", spec_parts, "degree then multiplicities (k^j shorthand allowed)")
        ->required()
        ->take_all();
    analyze->add_flag("--no-oracle", no_oracle, "skip the interpolation oracle");
    analyze->add_flag("--json", json, "emit one JSON object instead of text");
    add_oracle_flags(analyze, analyze_flags);

    // verify-identities
    int count = 1000;
    std::uint64_t id_seed = 1;
    CLI::App* verify = app.add_subcommand("verify-identities", "run the exact identity suites");
    verify->add_option("--count", count, "samples per suite");
    verify->add_option("--seed", id_seed, "RNG seed");

    // sweep
    fatpoints::Int max_degree = 10, max_mult = 5, max_points = 10;
    std::string out_path = "sweep.jsonl";
    bool resume = false;
    OracleFlags sweep_flags;
    CLI::App* sweep = app.add_subcommand("sweep", "analyze every canonical system in a box");
    sweep->add_option("--max-degree", max_degree, "largest degree (default 10)");
    sweep->add_option("--max-mult", max_mult, "largest multiplicity (default 5)");
    sweep->add_option("--max-points", max_points, "largest point count (default 10)");
    sweep->add_option("--out", out_path, "output records file (JSON lines, appended)");
    sweep->add_flag("--resume", resume, "skip systems already recorded for this config");
    add_oracle_flags(sweep, sweep_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(spec_parts, no_oracle, json, analyze_flags);
        if (verify->parsed()) return cmd_verify_identities(count, id_seed);
        if (sweep->parsed()) return cmd_sweep(max_degree, max_mult, max_points, out_path, resume, sweep_flags);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
