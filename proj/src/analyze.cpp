#include "fatpoints/analyze.hpp"

#include "fatpoints/parse.hpp"

namespace fatpoints {

using nlohmann::ordered_json;

AnalysisReport analyze(const LinearSystem& sys, const AnalysisOptions& options) {
    AnalysisReport report;
    report.input = sys;
    report.verdict = speciality_verdict(sys, options.scan_cap);
    if (report.standardized().degree >= 0) {
        report.lines = multiple_lines(report.standardized());
        report.shape = classify_line_graph(report.lines);
        report.obstructions = scan_quadrics(report.standardized(), options.scan_cap);
    }
    if (options.run_oracle) {
        report.oracle = oracle_dimension(sys, options.oracle);
        report.agree = report.oracle->dimension == report.verdict.predicted;
    }
    return report;
}

namespace {

ordered_json indices_1based(const std::vector<std::size_t>& idx) {
    ordered_json out = ordered_json::array();
    for (std::size_t i : idx) out.push_back(i + 1);
    return out;
}

ordered_json trace_to_json(const ReductionTrace& trace) {
    ordered_json steps = ordered_json::array();
    for (const ReductionStep& step : trace.steps) {
        ordered_json entry;
        switch (step.kind) {
            case StepKind::Resort: entry["step"] = "resort"; break;
            case StepKind::ClampNegative: entry["step"] = "clamp"; break;
            case StepKind::PlaneRemoval:
                entry["step"] = "plane";
                entry["points"] = indices_1based(step.indices);
                break;
            case StepKind::Cremona:
                entry["step"] = "cremona";
                entry["points"] = indices_1based(step.indices);
                entry["k"] = step.k;
                break;
        }
        steps.push_back(std::move(entry));
    }
    return steps;
}

}  // namespace

ordered_json report_to_json(const AnalysisReport& report) {
    const LinearSystem& standard = report.standardized();

    ordered_json out;
    out["schema"] = record_schema_version;
    out["d"] = report.input.degree;
    out["mults"] = report.input.mults;
    out["standard_d"] = standard.degree;
    out["standard_mults"] = standard.mults;
    out["trace"] = trace_to_json(report.verdict.standard_trace);

    ordered_json gamma = ordered_json::array();
    for (const MultipleLine& line : report.lines)
        gamma.push_back(ordered_json::array({line.i + 1, line.j + 1, line.t}));
    out["gamma"] = std::move(gamma);
    out["shape"] = to_string(report.shape.kind);

    ordered_json obstructions = ordered_json::array();
    for (const QuadricObstruction& obs : report.obstructions) {
        ordered_json entry;
        entry["points"] = indices_1based(obs.subset);
        entry["value"] = obs.value;
        obstructions.push_back(std::move(entry));
    }
    out["obstructions"] = std::move(obstructions);

    out["special"] = report.verdict.special;
    ordered_json reasons = ordered_json::array();
    for (const QuadricObstruction& obs : report.verdict.quadric_reasons) {
        ordered_json entry;
        entry["kind"] = "quadric";
        entry["points"] = indices_1based(obs.subset);
        entry["value"] = obs.value;
        reasons.push_back(std::move(entry));
    }
    for (const MultipleLine& line : report.verdict.line_reasons) {
        ordered_json entry;
        entry["kind"] = "line";
        entry["points"] = ordered_json::array({line.i + 1, line.j + 1});
        entry["t"] = line.t;
        reasons.push_back(std::move(entry));
    }
    out["reasons"] = std::move(reasons);
    out["predicted"] = report.verdict.predicted;

    if (report.oracle) {
        ordered_json oracle;
        oracle["prime"] = report.oracle->prime;
        oracle["seed"] = report.oracle->seed;
        oracle["trials"] = report.oracle->trials;
        oracle["coranks"] = report.oracle->coranks;
        oracle["dim"] = report.oracle->dimension;
        out["oracle"] = std::move(oracle);
        out["agree"] = report.agree;
    } else {
        out["oracle"] = nullptr;
        out["agree"] = nullptr;
    }
    return out;
}

std::string report_to_text(const AnalysisReport& report) {
    const LinearSystem& standard = report.standardized();
    std::string out;
    out += "system:        " + format_system(report.input) + "\n";
    out += "virtual dim:   " + std::to_string(virtual_dimension(report.input)) +
           "   expected dim: " + std::to_string(expected_dimension(report.input)) + "\n";

    out += "standard form: " + format_system(standard);
    const std::size_t nsteps = report.verdict.standard_trace.steps.size();
    if (report.verdict.standard_trace.empty()) {
        out += "   (empty system; " + std::to_string(nsteps) + " steps)\n";
    } else if (nsteps == 0) {
        out += "   (already standard)\n";
    } else {
        out += "   (" + std::to_string(nsteps) + " steps)\n";
    }
    for (const ReductionStep& step : report.verdict.standard_trace.steps) {
        switch (step.kind) {
            case StepKind::Resort: out += "    resort\n"; break;
            case StepKind::ClampNegative: out += "    clamp negatives\n"; break;
            case StepKind::PlaneRemoval: {
                out += "    remove plane through points";
                for (std::size_t i : step.indices) out += " " + std::to_string(i + 1);
                out += "\n";
                break;
            }
            case StepKind::Cremona: {
                out += "    cremona (k = " + std::to_string(step.k) + ") at points";
                for (std::size_t i : step.indices) out += " " + std::to_string(i + 1);
                out += "\n";
                break;
            }
        }
    }

    out += "base lines:    ";
    if (report.lines.empty()) {
        out += "none";
    } else {
        for (const MultipleLine& line : report.lines)
            out += "t(" + std::to_string(line.i + 1) + "," + std::to_string(line.j + 1) +
                   ")=" + std::to_string(line.t) + " ";
    }
    out += "\n";

    out += "line graph:    ";
    out += to_string(report.shape.kind);
    if (report.shape.kind == LineGraphShape::Kind::Star) {
        out += " (center p" + std::to_string(report.shape.center + 1) + ")";
    } else if (report.shape.kind == LineGraphShape::Kind::Triangle) {
        out += " (p" + std::to_string(report.shape.vertices[0] + 1) + ",p" +
               std::to_string(report.shape.vertices[1] + 1) + ",p" +
               std::to_string(report.shape.vertices[2] + 1) + ")";
    }
    out += "\n";

    if (!report.verdict.peeled_quadrics.empty()) {
        out += "peeled:        " + std::to_string(report.verdict.peeled_quadrics.size()) +
               " quadric(s); residual of the peel drives the prediction\n";
    }

    out += "verdict:       ";
    if (report.verdict.special) {
        out += "special (";
        bool first = true;
        for (const QuadricObstruction& obs : report.verdict.quadric_reasons) {
            if (!first) out += ", ";
            first = false;
            out += "quadric obstruction " + std::to_string(obs.value);
        }
        for (const MultipleLine& line : report.verdict.line_reasons) {
            if (!first) out += ", ";
            first = false;
            out += "line (" + std::to_string(line.i + 1) + "," + std::to_string(line.j + 1) +
                   ") multiplicity " + std::to_string(line.t);
        }
        out += ")\n";
    } else {
        out += "not special\n";
    }
    out += "predicted dim: " + std::to_string(report.verdict.predicted) + "\n";

    if (report.oracle) {
        out += "oracle dim:    " + std::to_string(report.oracle->dimension) +
               "   (prime=" + std::to_string(report.oracle->prime) +
               ", trials=" + std::to_string(report.oracle->trials) +
               ", seed=" + std::to_string(report.oracle->seed) + ", coranks=[";
        for (std::size_t i = 0; i < report.oracle->coranks.size(); ++i) {
            if (i > 0) out += ",";
            out += std::to_string(report.oracle->coranks[i]);
        }
        out += "])\n";
        out += "agreement:     ";
        out += report.agree ? "yes" : "NO";
        out += "\n";
    }
    return out;
}

}  // namespace fatpoints
