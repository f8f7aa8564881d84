#pragma once

#include <stdexcept>
#include <vector>

#include "linkdet/diagram.hpp"
#include "linkdet/laurent.hpp"

namespace linkdet {

struct CrossingCapExceeded : std::runtime_error {
  explicit CrossingCapExceeded(std::size_t n, std::size_t cap)
      : std::runtime_error("diagram has " + std::to_string(n) + " crossings, cap is " +
                           std::to_string(cap)) {}
};
struct RecursionBudgetExceeded : std::runtime_error {
  RecursionBudgetExceeded() : std::runtime_error("skein recursion budget exceeded") {}
};
struct MultiComponentUnsupported : std::runtime_error {
  MultiComponentUnsupported() : std::runtime_error("operation requires a knot diagram") {}
};
struct DisconnectedDiagram : std::runtime_error {
  DisconnectedDiagram() : std::runtime_error("operation requires a connected diagram") {}
};

struct InvariantCaps {
  std::size_t bracket = 16;   // also jones, alexander, goeritz family
  std::size_t homflypt = 14;
  std::size_t khovanov = 13;
};

// The one skein convention used everywhere:
//   a_plus * P(L+) - a_minus * P(L-) = c_smooth * P(L0),  P(unknot) = 1
// with a_plus = a, a_minus = a^-1, c_smooth = q - q^-1.
struct SkeinCoefficients {
  LaurentPoly2 a_plus = LaurentPoly2::monomial(1, 1, 0);
  LaurentPoly2 a_minus = LaurentPoly2::monomial(1, -1, 0);
  LaurentPoly2 c_smooth =
      LaurentPoly2::monomial(1, 0, 1) + LaurentPoly2::monomial(-1, 0, -1);
};

// Raw Kauffman bracket in the variable A, loop value -A^2 - A^-2,
// 0-crossing unknot -> 1.
LaurentPoly1 kauffman_bracket(const LinkDiagram& d, const InvariantCaps& caps = {});

// (-A)^(-3 writhe) * bracket, re-expressed in t = A^-4. Multi-component
// diagrams may need half-integer powers of t; those come back in the variable
// "r" with r = t^(1/2).
LaurentPoly1 jones(const LinkDiagram& d, const InvariantCaps& caps = {});

// Symmetric-normalized Alexander polynomial, Delta(t) = Delta(1/t), Delta(1) = 1.
LaurentPoly1 alexander(const LinkDiagram& d, const InvariantCaps& caps = {});

struct GoeritzData {
  // white-region Goeritz matrix with one row and column struck
  std::vector<std::vector<Int>> matrix;
  // Gordon-Litherland correction subtracted from the matrix signature
  int correction = 0;
};

GoeritzData goeritz(const LinkDiagram& d, const InvariantCaps& caps = {});
int signature(const LinkDiagram& d, const InvariantCaps& caps = {});
Int determinant(const LinkDiagram& d, const InvariantCaps& caps = {});
// nontrivial invariant factors of the Goeritz presentation of H1 of the
// double branched cover
std::vector<Int> dbc_homology(const LinkDiagram& d, const InvariantCaps& caps = {});

// HOMFLYPT in (a, q) for the convention in SkeinCoefficients. For a link with
// c components the unlink factor (a - a^-1)/(q - q^-1) appears c-1 times; the
// returned polynomial is the value multiplied by (q - q^-1)^(c-1), which for
// knots is the value itself.
LaurentPoly2 homflypt(const LinkDiagram& d, const InvariantCaps& caps = {});

// a -> q^N specialization of homflypt; knots only.
LaurentPoly1 sl_n(const LinkDiagram& d, int N, const InvariantCaps& caps = {});

// exact symmetric-matrix helpers used by the Goeritz family
Int symmetric_det(std::vector<std::vector<Int>> m);
int symmetric_signature(const std::vector<std::vector<Int>>& m);
std::vector<Int> smith_invariant_factors(std::vector<std::vector<Int>> m);

}  // namespace linkdet
