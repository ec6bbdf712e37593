#pragma once

#include <optional>
#include <string>

#include "fatpoints/base_lines.hpp"
#include "fatpoints/core.hpp"
#include "fatpoints/cremona.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/speciality.hpp"

#include <json.hpp>

namespace fatpoints {

struct AnalysisOptions {
    bool run_oracle = true;
    OracleOptions oracle;
    std::size_t scan_cap = default_scan_cap;
};

/// One system analyzed end to end: reduction, base lines, obstructions,
/// verdict and (optionally) the interpolation oracle for the ground truth.
struct AnalysisReport {
    LinearSystem input;
    Verdict verdict;                            // holds the reduction trace and the peel list
    std::vector<MultipleLine> lines;            // of the standardized system
    LineGraphShape shape;                       // of the standardized system
    std::vector<QuadricObstruction> obstructions;  // negative obstructions on the standardized system
    std::optional<OracleResult> oracle;  // absent when the oracle was skipped
    bool agree = false;                  // predicted == oracle dimension, when the oracle ran

    const LinearSystem& standardized() const { return verdict.standard_trace.final; }
};

AnalysisReport analyze(const LinearSystem& sys, const AnalysisOptions& options = {});

/// Fixed-order JSON object (schema, d, mults, standard_d, standard_mults,
/// trace, gamma, shape, obstructions, special, reasons, predicted, oracle,
/// agree). Point indices are 1-based in the serialized form.
nlohmann::ordered_json report_to_json(const AnalysisReport& report);

/// Multi-line human-readable rendering of the same report.
std::string report_to_text(const AnalysisReport& report);

inline constexpr int record_schema_version = 1;

}  // namespace fatpoints
