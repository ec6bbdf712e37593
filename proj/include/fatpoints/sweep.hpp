#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "fatpoints/analyze.hpp"
#include "fatpoints/core.hpp"
#include "fatpoints/oracle.hpp"

// Batch sweeps: enumerate every canonical system in a degree/multiplicity/
// point-count box, analyze each against the oracle and append one JSON
// record per line. Records are byte-reproducible under a fixed seed except
// for the ts field, and interrupted sweeps resume by skipping pairs of
// (config hash, system) already present in the output file.

namespace fatpoints {

struct SweepConfig {
    Int max_degree = 10;
    Int max_mult = 5;
    Int max_points = 10;
    OracleOptions oracle;
    std::size_t scan_cap = default_scan_cap;

    /// Hex FNV-1a of the fields that define the record contents.
    std::string config_hash() const;
};

struct SweepDisagreement {
    LinearSystem system;
    Int predicted = 0;
    Int oracle_dim = 0;
};

struct SweepSummary {
    int total = 0;       // systems in the enumeration
    int analyzed = 0;    // records written by this run (rest were resumed)
    int agreeing = 0;
    std::vector<SweepDisagreement> disagreements;
};

/// Canonical enumeration: degree ascending from 0, then point count
/// ascending from 0, then the sorted multiplicity vector (entries in
/// [1, max_mult], non-increasing) in lexicographic order.
std::vector<LinearSystem> enumerate_canonical_systems(Int max_degree, Int max_mult, Int max_points);

/// Run the sweep, appending records to `out`. When `existing_keys` is
/// non-null, systems whose (config hash, system) key appears in it are
/// skipped. `progress` (optional) is called after every record.
SweepSummary run_sweep(const SweepConfig& config, std::ostream& out,
                       const std::vector<std::string>* existing_keys = nullptr,
                       const std::function<void(const AnalysisReport&)>& progress = {});

/// Resume key of one record line ("<config-hash> d mults..."), or empty if
/// the line is not a valid record.
std::string record_key(const std::string& line);

/// Key a fresh record for `sys` under `config` would carry.
std::string make_key(const SweepConfig& config, const LinearSystem& sys);

/// Load the resume keys of all records already in the file at `path`
/// (missing file yields an empty list). Throws on malformed record lines.
std::vector<std::string> load_record_keys(const std::string& path);

}  // namespace fatpoints
