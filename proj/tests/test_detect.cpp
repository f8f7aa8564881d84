#include "linkdet/detect.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "linkdet/invariants.hpp"
#include "linkdet/khovanov.hpp"

using namespace linkdet;

namespace {

const char* kHeader = "name,crossing_number,alternating,dt_code,pd_code\n";

std::vector<KnotRecord> from_text(const std::string& text) {
  std::istringstream in(text);
  return ingest(in);
}

std::vector<KnotRecord> mini_corpus() {
  return from_text(std::string(kHeader) +
                   "3_1,3,1,4 6 2,\n"
                   "4_1,4,1,4 6 8 2,\n"
                   "5_1,5,1,6 8 10 2 4,\n");
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("linkdet_test_" +
            std::to_string(std::hash<const void*>{}(static_cast<const void*>(this))));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("ingest validates structure") {
  std::istringstream empty("");
  CHECK(ingest(empty).empty());

  auto records = mini_corpus();
  REQUIRE(records.size() == 3);
  CHECK(records[0].name == "3_1");
  CHECK(records[0].crossing_number == 3);
  CHECK(records[0].alternating);
  CHECK(records[0].diagram().size() == 3);

  CHECK_THROWS_AS(from_text("wrong,header\n"), ParseError);
  CHECK_THROWS_AS(from_text(std::string(kHeader) + "k,3,1,4 4 2,\n"), ParseError);
  CHECK_THROWS_AS(from_text(std::string(kHeader) + "k,3,1,,\n"), ParseError);
  CHECK_THROWS_AS(from_text(std::string(kHeader) + "k,3,2,4 6 2,\n"), ParseError);
  CHECK_THROWS_AS(from_text(std::string(kHeader) + "k,3,1,4 6 2,\nk,3,1,4 6 2,\n"),
                  DuplicateName);
  CHECK_THROWS_AS(from_text(std::string(kHeader) + "k,4,1,4 6 2,\n"), EncodingMismatch);
  CHECK_THROWS_AS(from_text(std::string(kHeader) +
                            "k,4,1,,\"X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)\"\n"),
                  EncodingMismatch);
}

TEST_CASE("ingest reads quoted pd codes") {
  auto records = from_text(std::string(kHeader) +
                           "tref,3,1,4 6 2,\"X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)\"\n");
  REQUIRE(records.size() == 1);
  CHECK(records[0].pd_code == "X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)");
  CHECK(records[0].diagram().size() == 3);
}

TEST_CASE("invariant values agree with the library calls") {
  LinkDiagram d = dt_to_pd(parse_dt("4 6 8 2"));
  CHECK(invariant_value("jones", d) == jones(d).canonical_string());
  CHECK(invariant_value("alexander", d) == alexander(d).canonical_string());
  CHECK(invariant_value("homflypt", d) == homflypt(d).canonical_string());
  CHECK(invariant_value("sl3", d) == sl_n(d, 3).canonical_string());
  CHECK(invariant_value("det", d) == determinant(d).get_str());
  CHECK(invariant_value("signature", d) == std::to_string(signature(d)));
  CHECK(invariant_value("khovanov-f2", d) ==
        poincare_poly(khovanov_f2(d)).canonical_string());
  CHECK(invariant_value("kt1", d) == specialize_t(khovanov_f2(d), 1).canonical_string());
  CHECK(invariant_value("jones+signature", d) ==
        jones(d).canonical_string() + ";" + std::to_string(signature(d)));
  CHECK(invariant_value("dbc", dt_to_pd(parse_dt("4 6 2"))) == "3");
  CHECK_THROWS_AS(invariant_value("nope", d), UnknownInvariant);
  CHECK_THROWS_AS(invariant_value("jones++", d), UnknownInvariant);
}

TEST_CASE("evaluate covers every record and reports failures") {
  auto records = mini_corpus();
  auto res = evaluate(records, "jones");
  CHECK(res.values.size() == 3);
  CHECK(res.failures.empty());

  EvaluateOptions tight;
  tight.caps.bracket = 4;
  auto capped = evaluate(records, "jones", tight);
  CHECK(capped.values.size() == 2);
  CHECK(capped.failures.count("5_1") == 1);
}

TEST_CASE("fold-mirror buckets chiral pairs together") {
  LinkDiagram right = dt_to_pd(parse_dt("4 6 2"));
  LinkDiagram left = mirror(right);
  auto records = from_text(std::string(kHeader) +
                           "right,3,1,,\"" + serialize_pd(right) + "\"\n" +
                           "left,3,1,,\"" + serialize_pd(left) + "\"\n");
  auto plain = evaluate(records, "jones");
  CHECK(plain.values.at("right") != plain.values.at("left"));
  EvaluateOptions fold;
  fold.fold_mirror = true;
  auto folded = evaluate(records, "jones", fold);
  CHECK(folded.values.at("right") == folded.values.at("left"));
}

TEST_CASE("disk cache is warm-start identical and thread-count independent") {
  TempDir tmp;
  auto records = mini_corpus();
  EvaluateOptions opts;
  opts.cache_dir = tmp.path.string();
  auto cold = evaluate(records, "jones", opts);
  CHECK(!cold.values.empty());
  bool cached = false;
  for (const auto& e : std::filesystem::recursive_directory_iterator(tmp.path))
    cached |= e.is_regular_file();
  CHECK(cached);
  auto warm = evaluate(records, "jones", opts);
  CHECK(warm.values == cold.values);
  EvaluateOptions wide = opts;
  wide.jobs = 4;
  CHECK(evaluate(records, "jones", wide).values == cold.values);
}

TEST_CASE("detection report buckets canonical strings") {
  auto records = from_text(std::string(kHeader) +
                           "a,3,1,4 6 2,\n"
                           "b,4,0,4 6 8 2,\n"
                           "c,4,1,-4 6 -8 2,\n");
  EvaluationResult vals;
  vals.values = {{"a", "x"}, {"b", "x"}, {"c", "y"}};

  auto cum = detection_report(vals, records);
  REQUIRE(cum.rows.size() == 2);
  CHECK(cum.rows[0].n == 3);
  CHECK(cum.rows[0].total == 1);
  CHECK(cum.rows[0].distinct == 1);
  CHECK(cum.rows[1].n == 4);
  CHECK(cum.rows[1].total == 3);
  CHECK(cum.rows[1].distinct == 2);
  CHECK(cum.rows[1].percent == doctest::Approx(200.0 / 3));

  auto per = detection_report(vals, records, false);
  CHECK(per.rows[1].total == 2);
  CHECK(per.rows[1].distinct == 2);

  auto alt = detection_report(vals, records, true, true);
  CHECK(alt.rows[1].total == 2);

  auto capped = detection_report(vals, records, true, false, 3);
  CHECK(capped.rows.size() == 1);

  EvaluationResult gap;
  gap.values = {{"a", "x"}};
  CHECK_THROWS_AS(detection_report(gap, records), CoverageGap);

  EvaluationResult with_failure = vals;
  with_failure.values.erase("b");
  with_failure.failures["b"] = "cap";
  auto rep = detection_report(with_failure, records);
  CHECK(rep.rows[1].total == 2);
  CHECK(rep.rows[1].failed == 1);
}

TEST_CASE("tuple invariants never lose distinctions") {
  auto records = mini_corpus();
  for (const char* tuple : {"jones+signature", "alexander+det"}) {
    std::string x(tuple, std::string(tuple).find('+'));
    std::string y = std::string(tuple).substr(x.size() + 1);
    auto rx = detection_report(evaluate(records, x), records);
    auto ry = detection_report(evaluate(records, y), records);
    auto rt = detection_report(evaluate(records, tuple), records);
    for (std::size_t i = 0; i < rt.rows.size(); ++i)
      CHECK(rt.rows[i].distinct >= std::max(rx.rows[i].distinct, ry.rows[i].distinct));
  }
}

TEST_CASE("decay fit recovers a synthetic base") {
  std::vector<std::pair<int, double>> rows;
  for (int n = 10; n <= 18; ++n) rows.emplace_back(n, 100.0 * std::pow(0.9, n));
  auto fit = decay_fit(rows);
  CHECK(fit.base == doctest::Approx(0.9).epsilon(1e-9));
  for (double r : fit.residuals) CHECK(std::abs(r) < 1e-9);

  std::vector<std::pair<int, double>> flat{{3, 100}, {4, 100}, {5, 100}, {6, 100}};
  CHECK_THROWS_AS(decay_fit(flat), InsufficientRows);
}
