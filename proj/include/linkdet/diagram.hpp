#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace linkdet {

struct MalformedPD : std::runtime_error {
  explicit MalformedPD(const std::string& w) : std::runtime_error("malformed PD: " + w) {}
};
struct InconsistentArcs : std::runtime_error {
  explicit InconsistentArcs(const std::string& w)
      : std::runtime_error("inconsistent arcs: " + w) {}
};
struct NonRealizable : std::runtime_error {
  explicit NonRealizable(const std::string& w) : std::runtime_error("non-realizable: " + w) {}
};
struct MalformedDT : std::runtime_error {
  explicit MalformedDT(const std::string& w) : std::runtime_error("malformed DT: " + w) {}
};
struct NotPermutation : std::runtime_error {
  NotPermutation() : std::runtime_error("DT entries are not a signed permutation of 2..2n") {}
};
struct NonRealizableDT : std::runtime_error {
  NonRealizableDT() : std::runtime_error("DT code admits no planar realization") {}
};

// One crossing: the four incident arc labels counterclockwise from the
// incoming under-strand, plus the crossing sign once orientation is fixed.
// The under-strand runs slot 0 -> slot 2; the over-strand runs slot 3 -> slot 1
// for a positive crossing and slot 1 -> slot 3 for a negative one.
struct PDCrossing {
  std::array<int, 4> arcs;
  int sign = 0;
  bool operator==(const PDCrossing&) const = default;

  int over_in_slot() const { return sign > 0 ? 3 : 1; }
  int over_out_slot() const { return sign > 0 ? 1 : 3; }
};

struct LinkDiagram {
  std::vector<PDCrossing> crossings;
  int n_components = 1;
  int writhe = 0;
  std::string name;

  std::size_t size() const { return crossings.size(); }
  bool operator==(const LinkDiagram&) const = default;
};

struct DTCode {
  std::vector<int> evens;
  bool operator==(const DTCode&) const = default;
};

LinkDiagram parse_pd(const std::string& text);
std::string serialize_pd(const LinkDiagram& d);
DTCode parse_dt(const std::string& text);
LinkDiagram dt_to_pd(const DTCode& code);
// Inverse of dt_to_pd for knots; walks the strand starting at arc 1.
DTCode pd_to_dt(const LinkDiagram& d);
LinkDiagram mirror(const LinkDiagram& d);

bool is_alternating(const LinkDiagram& d);

// Combinatorial-map view: darts are (crossing, slot) pairs with id 4c + s.
// vertex rotation is slot -> slot + 1 mod 4; edge_pair swaps the two darts of
// each arc. Face count satisfies V - E + F = 2 exactly when planar.
struct CombMap {
  std::size_t n_darts = 0;
  std::vector<std::size_t> edge_pair;

  static CombMap of(const LinkDiagram& d);
  std::size_t face_count() const;
  // face id per dart, tracing with next = rotate(edge_pair(dart))
  std::vector<int> face_ids() const;
};

}  // namespace linkdet
