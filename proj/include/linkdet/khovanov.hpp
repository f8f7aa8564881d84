#pragma once

#include <map>
#include <utility>
#include <vector>

#include "linkdet/diagram.hpp"
#include "linkdet/invariants.hpp"
#include "linkdet/laurent.hpp"

namespace linkdet {

// Cube of resolutions over GF(2). Vertex s of the n-cube resolves crossing c
// with the A-smoothing when bit c of s is 0 and the B-smoothing otherwise.
// Generators of vertex s are the 2^k labelings of its k circles, packed as
// bitmasks (set bit = the degree -1 label); generator ids are contiguous per
// vertex in mask order.
struct KhovanovCube {
  std::size_t n = 0;
  int n_plus = 0, n_minus = 0;
  std::vector<long> vertex_base;             // size 2^n + 1; gens of s in [base[s], base[s+1])
  std::vector<int> n_circles;                // per vertex
  std::vector<std::pair<int, int>> grading;  // per generator: (homological, quantum)
  std::vector<std::vector<long>> diff;       // per generator: sorted image ids, coefficients 1
  long total() const { return vertex_base.back(); }
};

KhovanovCube khovanov_cube(const LinkDiagram& d, const InvariantCaps& caps = {});

// (homological degree, quantum degree) -> dimension over GF(2)
using BigradedDims = std::map<std::pair<int, int>, long>;

BigradedDims khovanov_f2(const LinkDiagram& d, const InvariantCaps& caps = {});

// sum of dim * t^i * q^j
LaurentPoly2 poincare_poly(const BigradedDims& b);
// t -> +1 or -1; the -1 specialization is the graded Euler characteristic
LaurentPoly1 specialize_t(const BigradedDims& b, int t_sign);

}  // namespace linkdet
