#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "copermanent/bipoly.hpp"
#include "copermanent/graph.hpp"

namespace copermanent {

/// Pull-style graph stream; returns nullopt when exhausted. Called from one
/// thread at a time.
using GraphSource = std::function<std::optional<Graph>()>;

/// Source over a vector that must outlive the returned callable.
GraphSource source_from(const std::vector<Graph>& graphs);

/// One surveyed graph: its canonical graph6 and polynomial fingerprint.
struct SurveyRecord {
  std::string graph6;
  Fingerprint fingerprint;

  friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

/// Two or more pairwise non-isomorphic graphs sharing one polynomial.
struct CopermanentFamily {
  Fingerprint fingerprint;
  std::vector<std::string> members;  // canonical graph6, ascending
  BiPoly polynomial;

  friend bool operator==(const CopermanentFamily&, const CopermanentFamily&) = default;
};

struct SurveyReport {
  int order = 0;
  std::uint64_t num_graphs = 0;
  std::uint64_t num_polynomials = 0;
  std::uint64_t num_with_mate = 0;
  std::string fraction_with_mate = "0.000000";
  std::uint64_t max_family = 0;
  std::vector<CopermanentFamily> families;  // ascending fingerprint bytes

  friend bool operator==(const SurveyReport&, const SurveyReport&) = default;
};

/// numerator / denominator to 6 decimal places, rounding half to even.
/// A zero denominator formats as 0.
std::string format_fraction_6dp(std::uint64_t numerator, std::uint64_t denominator);

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& fp) const noexcept {
    return static_cast<std::size_t>(fp.hash64);
  }
};

/// Groups records by full fingerprint bytes.
class SurveyAccumulator {
 public:
  /// Throws Error(DuplicateGraph) if the graph6 string was already added.
  void add(SurveyRecord record);

  bool contains(const std::string& graph6) const { return graphs_.contains(graph6); }
  std::size_t size() const noexcept { return graphs_.size(); }
  const std::unordered_set<std::string>& graphs() const noexcept { return graphs_; }

  SurveyReport report(int order) const;

 private:
  std::unordered_map<Fingerprint, std::vector<std::string>, FingerprintHash> groups_;
  std::unordered_set<std::string> graphs_;
};

struct SurveyOptions {
  unsigned workers = 1;
  std::size_t batch_size = 256;
  /// Invoked on the aggregating thread with each batch of new records.
  std::function<void(std::span<const SurveyRecord>)> on_records;
};

/// Computes the record for one graph: canonical graph6 (order <= 10, else the
/// plain encoding) plus the fingerprint of its bivariate permanent polynomial.
/// Errors carry the offending graph6.
SurveyRecord survey_record(const Graph& g);

/// Computes every graph's polynomial across `options.workers` threads and
/// groups them. Graphs already present in `seed` are skipped, so a seed read
/// from a checkpoint resumes an interrupted run. The report does not depend
/// on worker count or arrival order.
///
/// Throws Error(OrderMismatch) for a graph of a different order and
/// Error(DuplicateGraph) when two inputs are isomorphic.
SurveyReport run_survey(const GraphSource& source, int order, const SurveyOptions& options = {},
                        SurveyAccumulator seed = {});

/// Checkpoint lines: "<graph6>\t<lowercase fingerprint hex>\n".
void write_checkpoint(std::span<const SurveyRecord> records, std::ostream& out);

/// Throws LineError(MalformedRecord) naming the bad line.
std::vector<SurveyRecord> read_checkpoint(std::istream& in);

/// run_survey that resumes from, and appends to, a checkpoint file.
SurveyReport run_survey_checkpointed(const GraphSource& source, int order,
                                     const SurveyOptions& options,
                                     const std::filesystem::path& checkpoint);

enum class ReportFormat { Json, Csv, TextTable };

/// json: the full report with families; csv: one line of the five summary
/// statistics; text-table: aligned header and row.
std::string write_report(const SurveyReport& report, ReportFormat format);

/// Inverse of the json form of write_report.
SurveyReport parse_report_json(std::string_view json);

/// Families only, in the report's json family schema.
std::string write_families_json(std::span<const CopermanentFamily> families);

}  // namespace copermanent
