#pragma once

#include <cstddef>
#include <vector>

#include "linkdet/diagram.hpp"

namespace linkdet {

// Local diagram moves on knot diagrams (single component). All results keep
// crossing signs consistent with the inherited strand orientation.

// Kink removals: one per crossing whose two adjacent slots share an arc.
std::vector<LinkDiagram> r1_reductions(const LinkDiagram& d);

// Bigon removals: one per two-sided face whose strands run one fully over
// and one fully under. Clasp bigons are not removable.
std::vector<LinkDiagram> r2_reductions(const LinkDiagram& d);

// Triangle slides: one per three-sided face on three distinct crossings where
// some strand passes over (or under) both others. Crossing count is kept.
std::vector<LinkDiagram> r3_moves(const LinkDiagram& d);

// Flypes: a tangle region one of whose crossings has its two free ends on
// adjacent region boundary positions rotates about the axis through that
// crossing. The single-crossing tangle is invariant under this rotation, so
// the rotated diagram is isotopic. Crossing count is kept.
std::vector<LinkDiagram> flype_moves(const LinkDiagram& d);

// Bigon insertions: push one arc of a face across another, over or under,
// adding two crossings of opposite sign. Only wirings that stay planar and
// carry the new bigon as a face are returned; removing that bigon restores
// the input, so each result is isotopic to it.
std::vector<LinkDiagram> r2_insertions(const LinkDiagram& d);

bool has_reduction(const LinkDiagram& d);

// True when a best-first search over the moves above, visiting at most
// state_budget canonical states and allowing two crossings of headroom over
// the start, reaches a diagram with fewer than target crossings. States with
// fewer crossings are explored first, so the constant-count plateau is
// exhausted before any bigon insertion is tried.
bool simplifies_below(const LinkDiagram& d, std::size_t target, std::size_t state_budget);

}  // namespace linkdet
