#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "linkdet/detect.hpp"
#include "linkdet/diagram.hpp"
#include "linkdet/invariants.hpp"
#include "linkdet/khovanov.hpp"
#include "linkdet/series.hpp"
#include "linkdet/tangle.hpp"

using namespace linkdet;
using nlohmann::json;

namespace {

struct DiagramInput {
  std::string dt, pd, input, format = "dt";

  void add_flags(CLI::App* cmd, bool allow_csv = false) {
    cmd->add_option("--dt", dt, "inline DT code");
    cmd->add_option("--pd", pd, "inline PD code");
    cmd->add_option("--input", input, "file holding one encoding per line");
    auto formats = allow_csv ? std::vector<std::string>{"dt", "pd", "csv"}
                             : std::vector<std::string>{"dt", "pd"};
    cmd->add_option("--format", format, "encoding in --input")
        ->check(CLI::IsMember(formats));
  }

  LinkDiagram diagram() const {
    int given = !dt.empty() + !pd.empty() + !input.empty();
    if (given != 1)
      throw CLI::ValidationError("exactly one of --dt, --pd, --input is required");
    if (!dt.empty()) return dt_to_pd(parse_dt(dt));
    if (!pd.empty()) return parse_pd(pd);
    std::ifstream in(input);
    if (!in) throw ParseError("cannot open " + input);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return format == "dt" ? dt_to_pd(parse_dt(text)) : parse_pd(text);
  }
};

std::string dt_text(const LinkDiagram& d) {
  DTCode code = pd_to_dt(d);
  std::ostringstream o;
  for (std::size_t i = 0; i < code.evens.size(); ++i) {
    if (i) o << ' ';
    o << code.evens[i];
  }
  return o.str();
}

// truncated, not rounded, matching the convention of the study tables
std::string percent_text(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::floor(p * 100.0) / 100.0);
  return buf;
}

const char* symmetry_name(SquareSymmetry s) {
  switch (s) {
    case SquareSymmetry::identity: return "identity";
    case SquareSymmetry::rotate_x: return "rotate_x";
    case SquareSymmetry::rotate_y: return "rotate_y";
    case SquareSymmetry::rotate_z: return "rotate_z";
  }
  return "";
}

int cmd_parse(const DiagramInput& in, const std::string& output) {
  if (!in.input.empty() && in.format == "csv") {
    auto records = ingest_file(in.input);
    if (output == "json") {
      json j;
      j["config"] = {{"subcommand", "parse"}, {"input", in.input}, {"format", "csv"}};
      j["records"] = records.size();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "records," << records.size() << "\n";
    }
    return 0;
  }
  LinkDiagram d = in.diagram();
  if (output == "json") {
    json j;
    j["config"] = {{"subcommand", "parse"}, {"format", in.format}};
    j["crossings"] = d.size();
    j["components"] = d.n_components;
    j["writhe"] = d.writhe;
    j["alternating"] = is_alternating(d);
    j["pd"] = serialize_pd(d);
    if (d.n_components == 1) j["dt"] = dt_text(d);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "crossings," << d.size() << "\ncomponents," << d.n_components
              << "\nwrithe," << d.writhe << "\nalternating," << is_alternating(d)
              << "\npd,\"" << serialize_pd(d) << "\"\n";
    if (d.n_components == 1) std::cout << "dt," << dt_text(d) << "\n";
  }
  return 0;
}

int cmd_invariant(const DiagramInput& in, const std::string& id, bool fold,
                  const std::string& output) {
  LinkDiagram d = in.diagram();
  std::string v = invariant_value(id, d);
  if (fold) v = std::min(v, invariant_value(id, mirror(d)));
  if (output == "json") {
    json j;
    j["config"] = {{"subcommand", "invariant"},
                   {"invariant", id},
                   {"fold_mirror", fold}};
    j["value"] = v;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << v << "\n";
  }
  return 0;
}

int cmd_mutate(const DiagramInput& in, std::size_t max_region, const std::string& output) {
  LinkDiagram d = in.diagram();
  json rows = json::array();
  std::ostringstream csv;
  csv << "region,symmetry,oriented,pd\n";
  for (const auto& r : find_tangle_regions(d, max_region)) {
    std::ostringstream region;
    for (std::size_t i = 0; i < r.crossings.size(); ++i) {
      if (i) region << ' ';
      region << r.crossings[i];
    }
    for (auto s : {SquareSymmetry::identity, SquareSymmetry::rotate_x,
                   SquareSymmetry::rotate_y, SquareSymmetry::rotate_z}) {
      LinkDiagram m = mutate(d, r, s);
      bool oriented = is_oriented_mutation(r, s);
      csv << region.str() << ',' << symmetry_name(s) << ',' << (oriented ? 1 : 0) << ",\""
          << serialize_pd(m) << "\"\n";
      rows.push_back({{"region", region.str()},
                      {"symmetry", symmetry_name(s)},
                      {"oriented", oriented},
                      {"pd", serialize_pd(m)}});
    }
  }
  if (output == "json") {
    json j;
    j["config"] = {{"subcommand", "mutate"}, {"max_region", max_region}};
    j["mutants"] = rows;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << csv.str();
  }
  return 0;
}

int cmd_detect(const std::string& input, const std::string& id, int max_n, bool per_n,
               bool alternating_only, bool fold, int jobs, const std::string& cache_dir,
               const std::string& output) {
  auto records = ingest_file(input);
  EvaluateOptions opts;
  opts.fold_mirror = fold;
  opts.jobs = jobs;
  opts.cache_dir = cache_dir;
  auto values = evaluate(records, id, opts);
  auto report = detection_report(values, records, !per_n, alternating_only, max_n);
  if (output == "json") {
    json j;
    j["config"] = {{"subcommand", "detect"},   {"input", input},
                   {"invariant", id},          {"max_n", max_n},
                   {"cumulative", !per_n},     {"alternating_only", alternating_only},
                   {"fold_mirror", fold},      {"jobs", jobs},
                   {"cache_dir", cache_dir}};
    j["failures"] = values.failures.size();
    j["rows"] = json::array();
    for (const auto& r : report.rows)
      j["rows"].push_back({{"n", r.n},
                           {"total", r.total},
                           {"distinct", r.distinct},
                           {"failed", r.failed},
                           {"percent", percent_text(r.percent)}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n,total,distinct,percent\n";
    for (const auto& r : report.rows)
      std::cout << r.n << ',' << r.total << ',' << r.distinct << ','
                << percent_text(r.percent) << "\n";
  }
  return 0;
}

int cmd_growth(std::size_t order, const std::string& output) {
  auto c = singularity_constants();
  auto bound = decay_bound();
  auto at = solve_at(order);
  auto bt = bt_series(order);
  json j;
  j["config"] = {{"subcommand", "growth"}, {"series_order", order}};
  j["inv_z1"] = {{"surd", c.inv_z1_surd}, {"decimal", c.inv_z1_decimal}, {"value", c.inv_z1}};
  j["inv_z2"] = {{"surd", c.inv_z2_surd}, {"decimal", c.inv_z2_decimal}, {"value", c.inv_z2}};
  j["delta"] = {{"rational", bound.delta_rational.get_str()},
                {"value", bound.delta},
                {"certified_below_0.9993", bound.certified},
                {"sup_ratio", bound.sup_ratio}};
  auto head = [](const TruncatedSeries& s, std::size_t k) {
    json a = json::array();
    for (std::size_t i = 0; i <= std::min(k, s.order()); ++i) a.push_back(s[i].get_str());
    return a;
  };
  j["bt_head"] = head(bt, 16);
  j["at_head"] = head(at, 16);
  if (order >= 2) {
    Rat ratio = at[order] / at[order - 1];
    j["at_tail_ratio"] = {{"n", order - 1},
                          {"value", mpq_class(ratio).get_d()}};
  }
  if (output == "csv") {
    std::cout << "n,at_coefficient\n";
    for (std::size_t i = 0; i <= at.order(); ++i)
      std::cout << i << ',' << at[i].get_str() << "\n";
    return 0;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"link invariant toolkit"};
  app.require_subcommand(1);
  std::string output = "csv";
  app.add_option("--output", output)->check(CLI::IsMember({"csv", "json"}));
  app.fallthrough();

  auto* parse_cmd = app.add_subcommand("parse", "validate and convert encodings");
  DiagramInput parse_in;
  parse_in.add_flags(parse_cmd, true);

  auto* inv_cmd = app.add_subcommand("invariant", "print a canonical invariant value");
  DiagramInput inv_in;
  inv_in.add_flags(inv_cmd);
  std::string invariant_id = "jones";
  bool inv_fold = false;
  inv_cmd->add_option("--invariant", invariant_id);
  inv_cmd->add_flag("--fold-mirror", inv_fold);

  auto* mut_cmd = app.add_subcommand("mutate", "list mutants per region and symmetry");
  DiagramInput mut_in;
  mut_in.add_flags(mut_cmd);
  std::size_t max_region = 8;
  mut_cmd->add_option("--max-region", max_region);

  auto* det_cmd = app.add_subcommand("detect", "distinct-value detection report");
  std::string det_input = "data/knots_3_10.csv", det_invariant = "jones", cache_dir;
  int max_n = 0, jobs = 1;
  bool per_n = false, alternating_only = false, det_fold = false, cumulative = true;
  det_cmd->add_option("--input", det_input);
  det_cmd->add_option("--invariant", det_invariant);
  det_cmd->add_option("--max-n", max_n);
  det_cmd->add_flag("--cumulative", cumulative);
  det_cmd->add_flag("--per-n", per_n);
  det_cmd->add_flag("--alternating-only", alternating_only);
  det_cmd->add_flag("--fold-mirror", det_fold);
  det_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  det_cmd->add_option("--cache-dir", cache_dir);

  auto* growth_cmd = app.add_subcommand("growth", "growth constants and series");
  std::size_t series_order = 200;
  growth_cmd->add_option("--series-order", series_order)->check(CLI::Range(2, 100000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*parse_cmd) return cmd_parse(parse_in, output);
    if (*inv_cmd) return cmd_invariant(inv_in, invariant_id, inv_fold, output);
    if (*mut_cmd) return cmd_mutate(mut_in, max_region, output);
    if (*det_cmd)
      return cmd_detect(det_input, det_invariant, max_n, per_n, alternating_only, det_fold,
                        jobs, cache_dir, output);
    if (*growth_cmd) return cmd_growth(series_order, output);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
