#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "linkdet/diagram.hpp"
#include "linkdet/series.hpp"

namespace linkdet {

struct MalformedTangle : std::runtime_error {
  explicit MalformedTangle(const std::string& w) : std::runtime_error("malformed tangle: " + w) {}
};
struct NotRational : std::runtime_error {
  NotRational() : std::runtime_error("tangle sum is not rational") {}
};
struct NotNormalForm : std::runtime_error {
  NotNormalForm() : std::runtime_error("tangle is not a flat horizontal sum of atoms") {}
};
struct RegionInvalid : std::runtime_error {
  explicit RegionInvalid(const std::string& w) : std::runtime_error("invalid region: " + w) {}
};

// Expression tree over twist atoms. An integer atom n is a run of n horizontal
// half-twists, the overbarred atom (written "nb") the vertical run, "inf" the
// two-vertical-strand tangle. Sums compose side by side (+h) or stacked (+v).
struct TangleExpr {
  enum class Kind { Integer, Overbar, Infinity, SumH, SumV };
  Kind kind = Kind::Integer;
  long value = 0;
  std::vector<TangleExpr> children;

  static TangleExpr atom(long n) { return {Kind::Integer, n, {}}; }
  static TangleExpr overbar(long n) { return {Kind::Overbar, n, {}}; }
  static TangleExpr infinity() { return {Kind::Infinity, 0, {}}; }
  static TangleExpr sum_h(TangleExpr a, TangleExpr b) {
    return {Kind::SumH, 0, {std::move(a), std::move(b)}};
  }
  static TangleExpr sum_v(TangleExpr a, TangleExpr b) {
    return {Kind::SumV, 0, {std::move(a), std::move(b)}};
  }
};

// Grammar: integers and overbarred integers ("3b", "-3b") joined by "+h"/"+v",
// with parentheses; e.g. "(-2 +h -3b)".
TangleExpr parse_tangle(const std::string& text);

struct TangleFraction {
  bool infinite = false;
  Rat value = 0;
  bool operator==(const TangleFraction&) const = default;
};

// Conway fraction of a rational tangle: horizontal sums add fractions,
// vertical sums add reciprocals. Throws NotRational when neither summand of a
// horizontal (resp. vertical) sum has an integer fraction (resp. reciprocal).
TangleFraction tangle_fraction(const TangleExpr& t);

// Permutes the summands of a flat horizontal sum of atoms and reports whether
// the Conway fraction is unchanged.
bool summand_permutation_invariance_check(const TangleExpr& t,
                                          const std::vector<std::size_t>& perm);

enum class SquareSymmetry { identity, rotate_x, rotate_y, rotate_z };

// A 4-ended tangle region of a diagram: a connected set of crossings whose
// boundary is met by exactly four arcs. Boundary data is listed in contour
// order, rotated so boundary_arcs[0] is the smallest arc label.
struct TangleRegion {
  std::vector<int> crossings;               // indices into d.crossings, sorted
  std::array<int, 4> boundary_arcs;         // cyclic contour order
  std::array<bool, 4> inward;               // arc oriented into the region
  std::array<std::pair<int, int>, 4> inner_darts;  // (crossing, slot) inside
};

std::vector<TangleRegion> find_tangle_regions(const LinkDiagram& d, std::size_t max_size,
                                              bool include_single = true);

// Re-glues the region after the square symmetry (pi-rotations: rotate_z in the
// projection plane, rotate_x/rotate_y through it, which also flip every region
// crossing). The result is rebuilt with a fresh consistent orientation and
// arcs renumbered in walk order from the lowest boundary arc.
LinkDiagram mutate(const LinkDiagram& d, const TangleRegion& r, SquareSymmetry s);

// True when the symmetry maps the in/out pattern of the four boundary ends to
// itself, so the mutant inherits the original orientation.
bool is_oriented_mutation(const TangleRegion& r, SquareSymmetry s);

// Orientation-and-start-point independent code for a diagram; equal codes mean
// equal diagrams up to relabeling and reorientation (single component only).
std::string canonical_code(const LinkDiagram& d);

}  // namespace linkdet
