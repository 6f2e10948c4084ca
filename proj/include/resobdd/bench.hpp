#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "resobdd/diagram.hpp"
#include "resobdd/edge_recovery.hpp"
#include "resobdd/pla.hpp"

namespace resobdd {

enum class DcPolicy : std::uint8_t { Zero, One };

/// Truth table of one PLA output straight from its cubes. n <= 24.
[[nodiscard]] std::vector<bool> cover_table(const PlaFile& pla, std::size_t output,
                                            DcPolicy dc);

struct OutputDiagrams {
  Diagram ro;
  Diagram qr;
  Diagram ir;
};

/// ROBDD from the cubes in file column order; QR and IR are derived from it.
[[nodiscard]] OutputDiagrams build_output(const PlaFile& pla, std::size_t output, DcPolicy dc);

struct OutputCounts {
  std::size_t qr = 0;
  std::size_t ro = 0;
  std::size_t ir = 0;
};

struct StatsRow {
  std::string benchmark;
  std::uint32_t in = 0;
  std::uint32_t out = 0;
  std::size_t qr = 0;
  std::size_t ro = 0;
  std::size_t ir = 0;
  std::vector<OutputCounts> outputs;
};

[[nodiscard]] StatsRow compute_stats(const PlaFile& pla, const std::string& benchmark,
                                     DcPolicy dc);

/// Published per-benchmark sums used as the reference column.
struct ReferenceRow {
  const char* name;
  std::uint32_t in;
  std::uint32_t out;
  std::size_t qr;
  std::size_t ro;
  std::size_t ir;
};
[[nodiscard]] std::span<const ReferenceRow> reference_table();
[[nodiscard]] const ReferenceRow* find_reference(const std::string& benchmark);

/// Benchmark name from a path: file stem without directories.
[[nodiscard]] std::string benchmark_name(const std::string& path);

enum class ReportFormat : std::uint8_t { Csv, Text, Json };
/// Rows carry ref_* and d_* (measured minus reference) columns when the
/// benchmark is in the reference table; empty otherwise.
void write_stats(std::ostream& os, const std::vector<StatsRow>& rows, ReportFormat format);

// ---------------------------------------------------------------------------

struct VerifyIssue {
  std::size_t output;
  std::string check;
  std::string detail;
};

struct VerifyOptions {
  DcPolicy dc = DcPolicy::Zero;
  std::uint32_t max_exhaustive_vars = 20;
  /// Test hook: may alter the diagrams of an output before they are checked.
  std::function<void(std::size_t, OutputDiagrams&)> tamper;
};

struct VerifyReport {
  std::size_t outputs = 0;
  std::size_t exhaustive_outputs = 0;
  std::vector<VerifyIssue> issues;
  [[nodiscard]] bool ok() const { return issues.empty(); }
};

/// Per output: RO/QR/IR agree with the cube oracle on every assignment
/// (when n <= max_exhaustive_vars), RO has no mergeable or redundant node,
/// QR keeps the level discipline, IR is index-resilient with no removable
/// chain, and ro <= ir <= qr.
[[nodiscard]] VerifyReport verify_pla(const PlaFile& pla, const VerifyOptions& opts);
void write_verify(std::ostream& os, const std::string& benchmark, const VerifyReport& r);

// ---------------------------------------------------------------------------

enum class CampaignMode : std::uint8_t { IndexUt, IndexIr, Edge };

struct CampaignConfig {
  CampaignMode mode = CampaignMode::IndexUt;
  DcPolicy dc = DcPolicy::Zero;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  /// Index faults per IR trial: `fault_count`, or a fraction of the
  /// internal nodes when `fault_fraction` > 0 (at least one).
  std::size_t fault_count = 1;
  double fault_fraction = 0.0;
  std::vector<std::size_t> table_sizes{256, 1024, 2048};
  bool strict = false;
};

struct IndexCampaignRow {
  std::size_t output = 0;
  std::size_t nodes = 0;
  std::size_t trials = 0;
  std::size_t faults = 0;             ///< indices corrupted in total
  std::size_t restored = 0;           ///< indices recovered to their original value
  std::size_t max_invocations = 0;    ///< largest single repair call tree
  std::size_t bound_violations = 0;   ///< repairs exceeding the corrupted-below count
};

struct CampaignReport {
  CampaignMode mode = CampaignMode::IndexUt;
  std::string benchmark;
  std::uint64_t seed = 0;
  std::vector<IndexCampaignRow> index_rows;
  std::vector<std::pair<std::size_t, std::vector<EdgeCampaignRow>>> edge_rows;  ///< by output

  /// Index modes: every corrupted index restored and no bound violated.
  /// Edge mode: the campaign ran (also true with wrong recoveries).
  [[nodiscard]] bool passed() const;
  /// Edge mode: aggregated success is non-decreasing in table size.
  [[nodiscard]] bool edge_trend_monotone() const;
};

/// Index-ut runs single faults on each output's ROBDD, recovered through
/// the unique table. Index-ir corrupts several indices of each output's
/// IR diagram and repairs them by recursive reconstruction. Edge runs
/// edge_campaign on each output's ROBDD.
[[nodiscard]] CampaignReport run_campaign(const PlaFile& pla, const std::string& benchmark,
                                          const CampaignConfig& cfg);

void write_campaign_csv(std::ostream& os, const CampaignReport& r);
void write_campaign_summary(std::ostream& os, const CampaignReport& r);

}  // namespace resobdd
