#pragma once

#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "linkdet/diagram.hpp"
#include "linkdet/invariants.hpp"

namespace linkdet {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};
struct DuplicateName : std::runtime_error {
  explicit DuplicateName(const std::string& name)
      : std::runtime_error("duplicate record name: " + name) {}
};
struct EncodingMismatch : std::runtime_error {
  explicit EncodingMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct UnknownInvariant : std::runtime_error {
  explicit UnknownInvariant(const std::string& id)
      : std::runtime_error("unknown invariant: " + id) {}
};
struct CoverageGap : std::runtime_error {
  explicit CoverageGap(const std::string& name)
      : std::runtime_error("record has neither value nor failure entry: " + name) {}
};
struct InsufficientRows : std::runtime_error {
  InsufficientRows() : std::runtime_error("need at least 4 rows below 100%") {}
};

struct KnotRecord {
  std::string name;
  int crossing_number = 0;
  bool alternating = false;
  std::string dt_code;  // at least one of dt_code/pd_code is nonempty
  std::string pd_code;

  LinkDiagram diagram() const;
};

// CSV with header name,crossing_number,alternating,dt_code,pd_code
std::vector<KnotRecord> ingest(std::istream& in);
std::vector<KnotRecord> ingest_file(const std::string& path);

// Canonical value string of one invariant on one diagram. Supported ids:
// jones, alexander, homflypt, sl<N>, det, signature, dbc, khovanov-f2, kt1,
// and tuples X+Y (joined with ';').
std::string invariant_value(const std::string& invariant_id, const LinkDiagram& d,
                            const InvariantCaps& caps = {});

struct EvaluateOptions {
  bool fold_mirror = false;  // bucket min(value, mirror value)
  int jobs = 1;
  std::string cache_dir;  // empty disables the on-disk cache
  InvariantCaps caps;
};

struct EvaluationResult {
  std::map<std::string, std::string> values;
  std::map<std::string, std::string> failures;  // name -> reason, never dropped
};

EvaluationResult evaluate(const std::vector<KnotRecord>& records,
                          const std::string& invariant_id, const EvaluateOptions& opts = {});

struct DetectionRow {
  int n = 0;
  long total = 0;     // records counted at this row, failures excluded
  long distinct = 0;  // distinct canonical value strings
  long failed = 0;
  double percent = 0;  // 100 * distinct / total
};

struct DetectionReport {
  bool cumulative = true;
  std::vector<DetectionRow> rows;
};

DetectionReport detection_report(const EvaluationResult& values,
                                 const std::vector<KnotRecord>& records,
                                 bool cumulative = true, bool alternating_only = false,
                                 int max_n = 0);

struct DecayFit {
  double base = 0;       // exp(slope) of the log(percent) vs n fit
  double slope = 0;
  double intercept = 0;
  std::vector<double> residuals;
};

// Least-squares fit of log(percent) vs n over rows strictly below 100%.
// An estimate of the decay base, not a verification of any bound.
DecayFit decay_fit(const std::vector<std::pair<int, double>>& rows);
DecayFit decay_fit(const DetectionReport& report);

}  // namespace linkdet
