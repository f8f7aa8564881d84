#include "linkdet/diagram.hpp"

#include "doctest.h"

using namespace linkdet;

TEST_CASE("empty PD is the unknot") {
  auto d = parse_pd("");
  CHECK(d.size() == 0);
  CHECK(d.n_components == 1);
  CHECK(d.writhe == 0);
}

TEST_CASE("trefoil PD parses with |writhe| 3") {
  auto d = parse_pd("X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)");
  CHECK(d.size() == 3);
  CHECK(d.n_components == 1);
  CHECK(std::abs(d.writhe) == 3);
  CHECK(d.writhe == d.crossings[0].sign + d.crossings[1].sign + d.crossings[2].sign);
  CHECK(is_alternating(d));
}

TEST_CASE("arity violations are rejected") {
  CHECK_THROWS_AS(parse_pd("X(1,4,2,5);X(3,6,4,1)"), InconsistentArcs);
  CHECK_THROWS_AS(parse_pd("X(1,2,3)"), MalformedPD);
  CHECK_THROWS_AS(parse_pd("Y(1,2,3,4)"), MalformedPD);
  CHECK_THROWS_AS(parse_pd("X(1,2,0,1)"), MalformedPD);
}

TEST_CASE("PD round trips through serialization") {
  const std::string text = "X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)";
  auto d = parse_pd(text);
  CHECK(serialize_pd(d) == text);
  auto d2 = parse_pd(serialize_pd(d));
  CHECK(d2 == d);
}

TEST_CASE("kink orientation and sign") {
  auto pos = parse_pd("X(2,2,1,1)");
  CHECK(pos.size() == 1);
  CHECK(pos.n_components == 1);
  CHECK(pos.writhe == 1);
  auto neg = parse_pd("X(1,2,2,1)");
  CHECK(neg.writhe == -1);
}

TEST_CASE("hopf link has two components") {
  auto d = parse_pd("X(1,3,2,4);X(3,1,4,2)");
  CHECK(d.n_components == 2);
  CHECK(std::abs(d.writhe) == 2);
}

TEST_CASE("DT parsing") {
  auto c = parse_dt("4 6 2");
  CHECK(c.evens == std::vector<int>{4, 6, 2});
  CHECK(parse_dt("").evens.empty());
  CHECK_THROWS_AS(parse_dt("4 4 2"), NotPermutation);
  CHECK_THROWS_AS(parse_dt("4 5 2"), MalformedDT);
  CHECK_THROWS_AS(parse_dt("4 x 2"), MalformedDT);
  CHECK_THROWS_AS(parse_dt("4 8 2"), NotPermutation);
}

TEST_CASE("trefoil DT realizes with writhe +3") {
  auto d = dt_to_pd(parse_dt("4 6 2"));
  CHECK(d.size() == 3);
  CHECK(d.n_components == 1);
  CHECK(d.writhe == 3);
  CHECK(is_alternating(d));
  // signs survive reparsing from the serialized PD text
  auto re = parse_pd(serialize_pd(d));
  CHECK(re.writhe == 3);
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(re.crossings[i].sign == d.crossings[i].sign);
}

TEST_CASE("figure-eight DT realizes with writhe 0") {
  auto d = dt_to_pd(parse_dt("4 6 8 2"));
  CHECK(d.size() == 4);
  CHECK(d.n_components == 1);
  CHECK(d.writhe == 0);
  CHECK(is_alternating(d));
}

TEST_CASE("DT round trip") {
  for (const std::string text : {"4 6 2", "4 6 8 2", "4 8 10 2 6", "6 8 10 2 4",
                                 "4 8 10 12 2 6", "8 10 12 14 2 4 6"}) {
    auto code = parse_dt(text);
    auto d = dt_to_pd(code);
    auto back = pd_to_dt(d);
    CHECK(back == code);
  }
}

TEST_CASE("non-realizable DT codes are rejected") {
  // five chords interlacing in a cycle: the classic pattern with no planar
  // closed-curve realization
  CHECK_THROWS_AS(dt_to_pd(parse_dt("4 6 8 10 2")), NonRealizableDT);
}

TEST_CASE("mirror is an involution that negates signs") {
  auto d = dt_to_pd(parse_dt("4 6 2"));
  auto m = mirror(d);
  CHECK(m.writhe == -3);
  CHECK(m.n_components == 1);
  CHECK(mirror(m) == d);
  auto re = parse_pd(serialize_pd(m));
  CHECK(re.writhe == -3);
  CHECK(parse_pd("") == mirror(parse_pd("")));
}

TEST_CASE("face counts satisfy the Euler relation for realized diagrams") {
  for (const std::string text : {"4 6 2", "4 6 8 2", "4 8 10 2 6"}) {
    auto d = dt_to_pd(parse_dt(text));
    CHECK(CombMap::of(d).face_count() == d.size() + 2);
  }
}

TEST_CASE("nonalternating DT gives a nonalternating diagram") {
  // 8_19 in standard tables
  auto d = dt_to_pd(parse_dt("4 8 -12 2 -14 -16 6 -10"));
  CHECK(d.size() == 8);
  CHECK(!is_alternating(d));
  CHECK(pd_to_dt(d) == parse_dt("4 8 -12 2 -14 -16 6 -10"));
}
