#pragma once

#include <string>
#include <vector>

#include "linkdet/diagram.hpp"

namespace linkdet {

// Checkerboard graph of a diagram: vertices are the faces of one color of the
// two-coloring, with one edge per crossing joining the two faces of that color
// at the crossing. Loops and parallel edges are kept.
struct TaitGraph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

// The two graphs (one per color class) are planar duals of each other.
std::pair<TaitGraph, TaitGraph> tait_graphs(const LinkDiagram& d);

// Tutte polynomial by deletion and contraction; term list "i,j:c;" sorted by
// exponent pair, coefficient of x^i y^j.
std::string tutte_polynomial(const TaitGraph& g);

// min over the two color choices of the Tutte polynomial string; planar
// duality swaps the variables, so this is also mirror-independent. Flypes
// change the graph by Whitney twists, which preserve the cycle matroid, so
// for reduced prime alternating diagrams this is a knot invariant.
std::string folded_tutte(const LinkDiagram& d);

}  // namespace linkdet
