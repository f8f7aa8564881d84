#include "linkdet/detect.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "linkdet/khovanov.hpp"

namespace linkdet {

namespace {

// bump when any serialization convention changes; stale caches must not match
constexpr const char* kConventionTag = "conv1";

std::vector<std::string> split_csv_line(const std::string& line, std::size_t row) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw ParseError("row " + std::to_string(row) + ": unterminated quote");
  fields.push_back(cur);
  return fields;
}

std::string join(const std::vector<Int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].get_str();
  }
  return out;
}

std::string single_value(const std::string& id, const LinkDiagram& d,
                         const InvariantCaps& caps) {
  if (id == "jones") return jones(d, caps).canonical_string();
  if (id == "alexander") return alexander(d, caps).canonical_string();
  if (id == "homflypt") return homflypt(d, caps).canonical_string();
  if (id == "det") return determinant(d, caps).get_str();
  if (id == "signature") return std::to_string(signature(d, caps));
  if (id == "dbc") {
    auto f = dbc_homology(d, caps);
    return f.empty() ? "1" : join(f, 'x');
  }
  if (id == "khovanov-f2") return poincare_poly(khovanov_f2(d, caps)).canonical_string();
  if (id == "kt1") return specialize_t(khovanov_f2(d, caps), 1).canonical_string();
  if (id.size() > 2 && id.compare(0, 2, "sl") == 0 &&
      id.find_first_not_of("0123456789", 2) == std::string::npos)
    return sl_n(d, std::stoi(id.substr(2)), caps).canonical_string();
  throw UnknownInvariant(id);
}

std::vector<std::string> tuple_parts(const std::string& invariant_id) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : invariant_id) {
    if (c == '+') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  for (const auto& p : parts)
    if (p.empty()) throw UnknownInvariant(invariant_id);
  return parts;
}

}  // namespace

LinkDiagram KnotRecord::diagram() const {
  if (!pd_code.empty()) return parse_pd(pd_code);
  return dt_to_pd(parse_dt(dt_code));
}

std::vector<KnotRecord> ingest(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) return {};
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "name,crossing_number,alternating,dt_code,pd_code")
    throw ParseError("row 1: unexpected header");

  std::vector<KnotRecord> records;
  std::set<std::string> names;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv_line(line, row);
    if (fields.size() != 5)
      throw ParseError("row " + std::to_string(row) + ": expected 5 fields, got " +
                       std::to_string(fields.size()));
    KnotRecord r;
    r.name = fields[0];
    if (r.name.empty()) throw ParseError("row " + std::to_string(row) + ": empty name");
    if (!names.insert(r.name).second) throw DuplicateName(r.name);
    try {
      r.crossing_number = std::stoi(fields[1]);
    } catch (const std::exception&) {
      throw ParseError("row " + std::to_string(row) + ": bad crossing number");
    }
    if (r.crossing_number <= 0)
      throw ParseError("row " + std::to_string(row) + ": bad crossing number");
    if (fields[2] == "1" || fields[2] == "true")
      r.alternating = true;
    else if (fields[2] == "0" || fields[2] == "false")
      r.alternating = false;
    else
      throw ParseError("row " + std::to_string(row) + ": bad alternating flag");
    r.dt_code = fields[3];
    r.pd_code = fields[4];
    if (r.dt_code.empty() && r.pd_code.empty())
      throw ParseError("row " + std::to_string(row) + ": no encoding");
    if (!r.dt_code.empty()) {
      DTCode code;
      try {
        code = parse_dt(r.dt_code);
      } catch (const std::exception& e) {
        throw ParseError("row " + std::to_string(row) + ": " + e.what());
      }
      if (static_cast<int>(code.evens.size()) != r.crossing_number)
        throw EncodingMismatch("row " + std::to_string(row) + ": dt code has " +
                               std::to_string(code.evens.size()) + " crossings, declared " +
                               std::to_string(r.crossing_number));
    }
    if (!r.pd_code.empty()) {
      LinkDiagram d;
      try {
        d = parse_pd(r.pd_code);
      } catch (const std::exception& e) {
        throw ParseError("row " + std::to_string(row) + ": " + e.what());
      }
      if (static_cast<int>(d.size()) != r.crossing_number)
        throw EncodingMismatch("row " + std::to_string(row) + ": pd code has " +
                               std::to_string(d.size()) + " crossings, declared " +
                               std::to_string(r.crossing_number));
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<KnotRecord> ingest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return ingest(in);
}

std::string invariant_value(const std::string& invariant_id, const LinkDiagram& d,
                            const InvariantCaps& caps) {
  auto parts = tuple_parts(invariant_id);
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ';';
    out += single_value(parts[i], d, caps);
  }
  return out;
}

namespace {

std::string cached_value(const std::string& invariant_id, const KnotRecord& rec,
                         bool mirrored, const EvaluateOptions& opts) {
  namespace fs = std::filesystem;
  fs::path file;
  if (!opts.cache_dir.empty()) {
    fs::path dir = fs::path(opts.cache_dir) / kConventionTag / invariant_id;
    file = dir / (rec.name + (mirrored ? ".mirror" : "") + ".txt");
    std::ifstream in(file);
    if (in) {
      std::string v((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      return v;
    }
    fs::create_directories(dir);
  }
  LinkDiagram d = rec.diagram();
  if (mirrored) d = mirror(d);
  std::string v = invariant_value(invariant_id, d, opts.caps);
  if (!file.empty()) {
    // atomic publish: concurrent writers race to rename, any winner is fine
    fs::path tmp = file;
    tmp += "." + std::to_string(
                     std::hash<std::thread::id>{}(std::this_thread::get_id())) +
           ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary);
      out << v;
    }
    std::error_code ec;
    fs::rename(tmp, file, ec);
    if (ec) fs::remove(tmp, ec);
  }
  return v;
}

}  // namespace

EvaluationResult evaluate(const std::vector<KnotRecord>& records,
                          const std::string& invariant_id, const EvaluateOptions& opts) {
  tuple_parts(invariant_id);  // reject unknown ids before spawning workers

  struct Slot {
    bool failed = false;
    std::string value;
  };
  std::vector<Slot> slots(records.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= records.size()) return;
      try {
        std::string v = cached_value(invariant_id, records[i], false, opts);
        if (opts.fold_mirror)
          v = std::min(v, cached_value(invariant_id, records[i], true, opts));
        slots[i].value = std::move(v);
      } catch (const std::exception& e) {
        slots[i].failed = true;
        slots[i].value = e.what();
      }
    }
  };
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  EvaluationResult out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (slots[i].failed)
      out.failures[records[i].name] = slots[i].value;
    else
      out.values[records[i].name] = slots[i].value;
  }
  return out;
}

DetectionReport detection_report(const EvaluationResult& values,
                                 const std::vector<KnotRecord>& records, bool cumulative,
                                 bool alternating_only, int max_n) {
  std::vector<const KnotRecord*> kept;
  for (const auto& r : records) {
    if (alternating_only && !r.alternating) continue;
    if (max_n > 0 && r.crossing_number > max_n) continue;
    if (!values.values.count(r.name) && !values.failures.count(r.name))
      throw CoverageGap(r.name);
    kept.push_back(&r);
  }
  DetectionReport report;
  report.cumulative = cumulative;
  if (kept.empty()) return report;

  int lo = kept.front()->crossing_number, hi = lo;
  for (const auto* r : kept) {
    lo = std::min(lo, r->crossing_number);
    hi = std::max(hi, r->crossing_number);
  }
  for (int n = lo; n <= hi; ++n) {
    DetectionRow row;
    row.n = n;
    std::set<std::string> distinct;
    for (const auto* r : kept) {
      if (cumulative ? r->crossing_number > n : r->crossing_number != n) continue;
      if (values.failures.count(r->name)) {
        ++row.failed;
        continue;
      }
      ++row.total;
      distinct.insert(values.values.at(r->name));
    }
    if (row.total == 0 && row.failed == 0) continue;
    row.distinct = static_cast<long>(distinct.size());
    row.percent = row.total ? 100.0 * static_cast<double>(row.distinct) /
                                  static_cast<double>(row.total)
                            : 0.0;
    report.rows.push_back(row);
  }
  return report;
}

DecayFit decay_fit(const std::vector<std::pair<int, double>>& rows) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [n, percent] : rows)
    if (percent > 0 && percent < 100.0) pts.emplace_back(n, std::log(percent));
  if (pts.size() < 4) throw InsufficientRows();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double m = static_cast<double>(pts.size());
  DecayFit fit;
  fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / m;
  fit.base = std::exp(fit.slope);
  for (const auto& [x, y] : pts) fit.residuals.push_back(y - fit.intercept - fit.slope * x);
  return fit;
}

DecayFit decay_fit(const DetectionReport& report) {
  std::vector<std::pair<int, double>> rows;
  for (const auto& r : report.rows) rows.emplace_back(r.n, r.percent);
  return decay_fit(rows);
}

}  // namespace linkdet
