#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chv/checks.hpp"
#include "chv/config.hpp"
#include "chv/report.hpp"

namespace chv {

// Returns a human-readable description of the first configuration problem
// (bad ranges, unknown check names, delta incompatible with a selected
// check), or an empty string if the run may proceed. Callers map a
// non-empty result to a usage error.
std::string usage_problems(const RunConfig& cfg);

// Runs the selected checks (empty selection or "all" expands to the full
// suite in registry order) and returns their reports.
std::vector<CheckReport> run(const RunConfig& cfg);

// Fixed-field-order JSON array, one object per report. All floating-point
// values are rendered with 17 significant digits so reruns can be compared
// bit for bit.
std::string emit_report_json(const std::vector<CheckReport>& reports,
                             const RunConfig& cfg);

// CSV with the exact header "name,pass,samples,worst,bound".
std::string emit_report_csv(const std::vector<CheckReport>& reports);

// Per-sample CSV ("index,p,q,s,t,statistic") for one dumpable check named
// in cfg.checks. Samples are regenerated from (seed, index) substreams, so
// the dump matches what the check consumed.
void dump_samples(const RunConfig& cfg, std::ostream& os);

// Writes text to cfg.output, or to stdout when no path is set. Throws
// IoError if the file cannot be written.
void write_output(const RunConfig& cfg, const std::string& text);

}  // namespace chv
