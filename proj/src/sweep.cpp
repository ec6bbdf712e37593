#include "fatpoints/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace fatpoints {

namespace {

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[hash & 0xf];
        hash >>= 4;
    }
    return out;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void append_mult_run(std::vector<std::vector<Int>>& out, std::vector<Int>& prefix, Int max_mult,
                     std::size_t remaining) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    const Int cap = prefix.empty() ? max_mult : prefix.back();
    for (Int m = 1; m <= cap; ++m) {
        prefix.push_back(m);
        append_mult_run(out, prefix, max_mult, remaining - 1);
        prefix.pop_back();
    }
}

}  // namespace

std::string SweepConfig::config_hash() const {
    std::string canon = "schema=" + std::to_string(record_schema_version) +
                        ";D=" + std::to_string(max_degree) + ";M=" + std::to_string(max_mult) +
                        ";R=" + std::to_string(max_points) + ";prime=" + std::to_string(oracle.prime) +
                        ";trials=" + std::to_string(oracle.trials) + ";seed=" + std::to_string(oracle.seed);
    return fnv1a_hex(canon);
}

std::vector<LinearSystem> enumerate_canonical_systems(Int max_degree, Int max_mult, Int max_points) {
    // Multiplicity vectors in lexicographic order, grouped by length.
    std::vector<std::vector<Int>> vectors;
    for (std::size_t r = 0; r <= static_cast<std::size_t>(std::max<Int>(max_points, 0)); ++r) {
        std::vector<Int> prefix;
        append_mult_run(vectors, prefix, max_mult, r);
    }
    // Within each length the recursion emits ascending-lex order already;
    // lengths were emitted ascending, so just pair with each degree.
    std::vector<LinearSystem> out;
    for (Int d = 0; d <= max_degree; ++d)
        for (const std::vector<Int>& mults : vectors)
            out.emplace_back(d, mults);
    return out;
}

std::string make_key(const SweepConfig& config, const LinearSystem& sys) {
    std::string key = config.config_hash() + " " + std::to_string(sys.degree);
    for (Int m : sys.mults) key += " " + std::to_string(m);
    return key;
}

std::string record_key(const std::string& line) {
    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.contains("config") || !record.contains("d") ||
        !record.contains("mults"))
        return {};
    std::string key = record["config"].get<std::string>() + " " + std::to_string(record["d"].get<Int>());
    for (const auto& m : record["mults"]) key += " " + std::to_string(m.get<Int>());
    return key;
}

std::vector<std::string> load_record_keys(const std::string& path) {
    std::vector<std::string> keys;
    std::ifstream in(path);
    if (!in) return keys;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::string key = record_key(line);
        if (key.empty())
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed sweep record");
        keys.push_back(std::move(key));
    }
    return keys;
}

SweepSummary run_sweep(const SweepConfig& config, std::ostream& out,
                       const std::vector<std::string>* existing_keys,
                       const std::function<void(const AnalysisReport&)>& progress) {
    SweepSummary summary;
    const std::string hash = config.config_hash();
    const std::string ts = utc_timestamp();
    std::unordered_set<std::string> skip;
    if (existing_keys) skip.insert(existing_keys->begin(), existing_keys->end());

    AnalysisOptions options;
    options.run_oracle = true;
    options.oracle = config.oracle;
    options.scan_cap = config.scan_cap;

    for (const LinearSystem& sys : enumerate_canonical_systems(config.max_degree, config.max_mult,
                                                               config.max_points)) {
        ++summary.total;
        if (!skip.empty() && skip.contains(make_key(config, sys))) continue;

        const AnalysisReport report = analyze(sys, options);
        ++summary.analyzed;
        if (report.agree) {
            ++summary.agreeing;
        } else {
            summary.disagreements.push_back({sys, report.verdict.predicted, report.oracle->dimension});
        }

        nlohmann::ordered_json record;
        record["schema"] = record_schema_version;
        record["ts"] = ts;
        record["config"] = hash;
        nlohmann::ordered_json body = report_to_json(report);
        body.erase("schema");
        record.update(body);
        out << record.dump() << "\n";
        if (progress) progress(report);
    }
    out.flush();
    return summary;
}

}  // namespace fatpoints
