#include "linkdet/invariants.hpp"

#include <algorithm>

#include "linkdet/series.hpp"
#include <map>
#include <numeric>

namespace linkdet {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::map<int, int> arc_index(const LinkDiagram& d) {
  std::map<int, int> idx;
  for (const auto& cr : d.crossings)
    for (int a : cr.arcs)
      if (!idx.count(a)) {
        int v = static_cast<int>(idx.size());
        idx[a] = v;
      }
  return idx;
}

void check_connected(const LinkDiagram& d) {
  if (d.size() <= 1) return;
  auto idx = arc_index(d);
  UnionFind uf(static_cast<int>(idx.size()));
  for (const auto& cr : d.crossings)
    for (int k = 1; k < 4; ++k) uf.unite(idx.at(cr.arcs[0]), idx.at(cr.arcs[k]));
  int root = uf.find(0);
  for (int i = 1; i < static_cast<int>(idx.size()); ++i)
    if (uf.find(i) != root) throw DisconnectedDiagram();
}

}  // namespace

LaurentPoly1 kauffman_bracket(const LinkDiagram& d, const InvariantCaps& caps) {
  const std::size_t n = d.size();
  if (n > caps.bracket) throw CrossingCapExceeded(n, caps.bracket);
  LaurentPoly1 result("A");
  if (n == 0) return LaurentPoly1::constant(1, "A");

  auto idx = arc_index(d);
  const int arcs = static_cast<int>(idx.size());
  std::vector<std::array<int, 4>> slots(n);
  for (std::size_t c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) slots[c][k] = idx.at(d.crossings[c].arcs[k]);

  // loop-count tallies per exponent difference (#A - #B smoothings)
  std::map<std::pair<long, int>, Int> tally;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    UnionFind uf(arcs);
    int a_count = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if ((mask >> c) & 1) {
        uf.unite(slots[c][1], slots[c][2]);
        uf.unite(slots[c][3], slots[c][0]);
      } else {
        uf.unite(slots[c][0], slots[c][1]);
        uf.unite(slots[c][2], slots[c][3]);
        ++a_count;
      }
    }
    int loops = 0;
    for (int i = 0; i < arcs; ++i)
      if (uf.find(i) == i) ++loops;
    tally[{2 * a_count - static_cast<long>(n), loops}] += 1;
  }

  // d = -A^2 - A^-2, one loop normalized away
  LaurentPoly1 dval = LaurentPoly1::monomial(-1, 2, "A") + LaurentPoly1::monomial(-1, -2, "A");
  std::vector<LaurentPoly1> dpow{LaurentPoly1::constant(1, "A")};
  for (std::size_t k = 1; k <= n + 1; ++k) dpow.push_back(dpow.back() * dval);
  for (const auto& [key, count] : tally) {
    auto [diff, loops] = key;
    result = result + dpow[loops - 1].scalar_mul(count).shifted(diff);
  }
  return result;
}

LaurentPoly1 jones(const LinkDiagram& d, const InvariantCaps& caps) {
  LaurentPoly1 br = kauffman_bracket(d, caps);
  // (-A)^(-3w) * <D>
  LaurentPoly1 f = br.shifted(-3 * d.writhe);
  if (d.writhe % 2 != 0) f = -f;
  bool quarters = true;
  for (const auto& [e, c] : f.terms())
    if (e % 4 != 0) quarters = false;
  LaurentPoly1 out(quarters ? "t" : "r");
  for (const auto& [e, c] : f.terms()) {
    if (e % 2 != 0) throw std::logic_error("odd bracket exponent");
    out.set_coeff(quarters ? -e / 4 : -e / 2, c);
  }
  return out;
}

namespace {

// Exact determinant of a matrix of Laurent polynomials, fraction-free.
LaurentPoly1 laurent_det(std::vector<std::vector<LaurentPoly1>> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly1::constant(1, "t");
  LaurentPoly1 prev = LaurentPoly1::constant(1, "t");
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return LaurentPoly1("t");  // singular
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev);
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

LaurentPoly1 alexander(const LinkDiagram& d, const InvariantCaps& caps) {
  if (d.n_components != 1) throw MultiComponentUnsupported();
  const std::size_t n = d.size();
  if (n > caps.bracket) throw CrossingCapExceeded(n, caps.bracket);
  if (n == 0) return LaurentPoly1::constant(1, "t");

  // Wirtinger generators: arcs merged across over-passages.
  auto idx = arc_index(d);
  UnionFind uf(static_cast<int>(idx.size()));
  for (const auto& cr : d.crossings)
    uf.unite(idx.at(cr.arcs[cr.over_in_slot()]), idx.at(cr.arcs[cr.over_out_slot()]));
  std::map<int, int> gen;
  for (const auto& [arc, i] : idx) {
    int r = uf.find(i);
    if (!gen.count(r)) {
      int v = static_cast<int>(gen.size());
      gen[r] = v;
    }
  }
  auto gen_of = [&](int arc) { return gen.at(uf.find(idx.at(arc))); };
  const std::size_t g = gen.size();
  if (g != n) throw std::logic_error("knot diagram must have as many strands as crossings");

  LaurentPoly1 t = LaurentPoly1::monomial(1, 1, "t");
  LaurentPoly1 one = LaurentPoly1::constant(1, "t");
  std::vector<std::vector<LaurentPoly1>> m(n, std::vector<LaurentPoly1>(g, LaurentPoly1("t")));
  for (std::size_t c = 0; c < n; ++c) {
    const auto& cr = d.crossings[c];
    int i = gen_of(cr.arcs[0]), j = gen_of(cr.arcs[2]), k = gen_of(cr.arcs[1]);
    if (cr.sign > 0) {
      m[c][i] = m[c][i] + t;
      m[c][k] = m[c][k] + (one - t);
      m[c][j] = m[c][j] - one;
    } else {
      m[c][i] = m[c][i] + one;
      m[c][k] = m[c][k] + (t - one);
      m[c][j] = m[c][j] - t;
    }
  }
  // strike the last row and column
  std::vector<std::vector<LaurentPoly1>> minor(n - 1);
  for (std::size_t r = 0; r + 1 < n; ++r)
    minor[r] = std::vector<LaurentPoly1>(m[r].begin(), m[r].end() - 1);
  LaurentPoly1 det = laurent_det(std::move(minor));
  if (det.is_zero()) throw std::logic_error("vanishing Alexander determinant for a knot");

  // normalize to the symmetric representative with Delta(1) = 1
  long lo = det.min_exp(), hi = det.max_exp();
  if ((lo + hi) % 2 != 0)
    throw std::logic_error("Alexander polynomial cannot be symmetrized");
  LaurentPoly1 sym = det.shifted(-(lo + hi) / 2);
  Int at1 = sym.evaluate_sign(1);
  if (at1 == -1) sym = -sym;
  else if (at1 != 1)
    throw std::logic_error("Alexander normalization failed: Delta(1) = " + at1.get_str());
  if (!(sym == sym.invert_var()))
    throw std::logic_error("Alexander polynomial is not symmetric");
  return sym;
}

namespace {

}  // namespace

// Goeritz/Gordon-Litherland conventions in the slot-quadrant encoding:
// quadrant k of a crossing is the face containing dart (c, k); "pair02" means
// quadrants 0 and 2 are white. Tables indexed by [pair02][sign > 0]; the
// unique assignment consistent with the signature and determinant of both
// chiralities of 3_1, 4_1, 5_1 and 7_1 under both colorings.
namespace detail {
constexpr bool g_eta_plus[2][2] = {{true, true}, {false, false}};
constexpr bool g_type_two[2][2] = {{false, true}, {true, false}};
}  // namespace detail

namespace {

struct Coloring {
  std::vector<int> face_of_dart;
  std::vector<bool> is_white;  // per face id
  int n_faces = 0;
};

Coloring checkerboard(const LinkDiagram& d, bool flip_colors) {
  CombMap m = CombMap::of(d);
  Coloring col;
  col.face_of_dart = m.face_ids();
  col.n_faces = static_cast<int>(m.face_count());
  std::vector<int> color(col.n_faces, -1);
  color[col.face_of_dart[0]] = 0;
  // adjacency: the two darts of an edge lie in the two neighboring faces
  std::vector<std::vector<int>> adj(col.n_faces);
  for (std::size_t dart = 0; dart < m.n_darts; ++dart) {
    int f1 = col.face_of_dart[dart], f2 = col.face_of_dart[m.edge_pair[dart]];
    adj[f1].push_back(f2);
  }
  std::vector<int> todo{col.face_of_dart[0]};
  while (!todo.empty()) {
    int f = todo.back();
    todo.pop_back();
    for (int nf : adj[f]) {
      if (color[nf] == -1) {
        color[nf] = 1 - color[f];
        todo.push_back(nf);
      } else if (color[nf] == color[f]) {
        throw std::logic_error("diagram faces are not checkerboard-colorable");
      }
    }
  }
  col.is_white.resize(col.n_faces);
  for (int f = 0; f < col.n_faces; ++f) col.is_white[f] = (color[f] == (flip_colors ? 0 : 1));
  return col;
}

}  // namespace
namespace detail {
GoeritzData goeritz_colored(const LinkDiagram& d, bool flip_colors) {
  GoeritzData out;
  if (d.size() == 0) return out;
  check_connected(d);
  Coloring col = checkerboard(d, flip_colors);
  std::map<int, int> white_index;
  for (int f = 0; f < col.n_faces; ++f)
    if (col.is_white[f]) {
      int v = static_cast<int>(white_index.size());
      white_index[f] = v;
    }
  const int w = static_cast<int>(white_index.size());
  std::vector<std::vector<Int>> full(w, std::vector<Int>(w, 0));
  int correction = 0;
  for (std::size_t c = 0; c < d.size(); ++c) {
    std::array<int, 4> q;
    for (int k = 0; k < 4; ++k) q[k] = col.face_of_dart[4 * c + k];
    bool pair02;
    if (col.is_white[q[0]] && col.is_white[q[2]])
      pair02 = true;
    else if (col.is_white[q[1]] && col.is_white[q[3]])
      pair02 = false;
    else
      throw std::logic_error("white quadrants are not opposite");
    int ip = pair02 ? 1 : 0, is = d.crossings[c].sign > 0 ? 1 : 0;
    int eta = detail::g_eta_plus[ip][is] ? 1 : -1;
    if (detail::g_type_two[ip][is]) correction += eta;
    int wi = white_index.at(pair02 ? q[0] : q[1]);
    int wj = white_index.at(pair02 ? q[2] : q[3]);
    if (wi != wj) {
      full[wi][wj] -= eta;
      full[wj][wi] -= eta;
      full[wi][wi] += eta;
      full[wj][wj] += eta;
    }
  }
  out.correction = correction;
  out.matrix.assign(w - 1, std::vector<Int>(w - 1));
  for (int i = 1; i < w; ++i)
    for (int j = 1; j < w; ++j) out.matrix[i - 1][j - 1] = full[i][j];
  return out;
}

}  // namespace detail

GoeritzData goeritz(const LinkDiagram& d, const InvariantCaps& caps) {
  if (d.size() > caps.bracket) throw CrossingCapExceeded(d.size(), caps.bracket);
  return detail::goeritz_colored(d, false);
}

int signature(const LinkDiagram& d, const InvariantCaps& caps) {
  GoeritzData g = goeritz(d, caps);
  return symmetric_signature(g.matrix) - g.correction;
}

Int determinant(const LinkDiagram& d, const InvariantCaps& caps) {
  GoeritzData g = goeritz(d, caps);
  Int det = symmetric_det(g.matrix);
  return det >= 0 ? det : -det;
}

std::vector<Int> dbc_homology(const LinkDiagram& d, const InvariantCaps& caps) {
  GoeritzData g = goeritz(d, caps);
  auto factors = smith_invariant_factors(g.matrix);
  std::vector<Int> nontrivial;
  for (const auto& f : factors)
    if (f != 1) nontrivial.push_back(f);
  return nontrivial;
}

LaurentPoly1 sl_n(const LinkDiagram& d, int N, const InvariantCaps& caps) {
  return homflypt(d, caps).substitute_var1(N);
}

Int symmetric_det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

int symmetric_signature(const std::vector<std::vector<Int>>& m) {
  // congruent diagonalization over the rationals
  const std::size_t n = m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
  int sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          r = i;
          break;
        }
      if (r == k) continue;  // zero row/column: zero eigenvalue
      // merge row/column r into row/column k to create a pivot; pick the sign
      // that cannot cancel (2 a_kr + a_rr and -2 a_kr + a_rr are not both 0)
      Rat s = (a[k][r] * 2 + a[r][r] != 0) ? Rat(1) : Rat(-1);
      for (std::size_t j = 0; j < n; ++j) a[k][j] += s * a[r][j];
      for (std::size_t i = 0; i < n; ++i) a[i][k] += s * a[i][r];
      if (a[k][k] == 0) throw std::logic_error("signature pivot construction failed");
    }
    Rat pivot = a[k][k];
    sig += (pivot > 0) ? 1 : -1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat f = a[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      for (std::size_t j = 0; j < n; ++j) a[j][i] = a[i][j];
    }
  }
  return sig;
}

std::vector<Int> smith_invariant_factors(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  std::vector<Int> factors;
  std::size_t top = 0;
  while (top < n) {
    // find the nonzero entry of least absolute value in the remaining block
    std::size_t pi = top, pj = top;
    Int best = 0;
    for (std::size_t i = top; i < n; ++i)
      for (std::size_t j = top; j < n; ++j) {
        if (m[i][j] == 0) continue;
        Int v = m[i][j] >= 0 ? m[i][j] : Int(-m[i][j]);
        if (best == 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    std::swap(m[top], m[pi]);
    for (std::size_t i = top; i < n; ++i) std::swap(m[i][top], m[i][pj]);
    bool clean = true;
    for (std::size_t i = top + 1; i < n; ++i) {
      if (m[i][top] == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][top].get_mpz_t(), m[top][top].get_mpz_t());
      for (std::size_t j = top; j < n; ++j) m[i][j] -= q * m[top][j];
      if (m[i][top] != 0) clean = false;
    }
    for (std::size_t j = top + 1; j < n; ++j) {
      if (m[top][j] == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m[top][j].get_mpz_t(), m[top][top].get_mpz_t());
      for (std::size_t i = top; i < n; ++i) m[i][j] -= q * m[i][top];
      if (m[top][j] != 0) clean = false;
    }
    if (!clean) continue;
    // ensure the pivot divides every remaining entry
    bool divides_all = true;
    for (std::size_t i = top + 1; i < n && divides_all; ++i)
      for (std::size_t j = top + 1; j < n && divides_all; ++j)
        if (m[i][j] % m[top][top] != 0) {
          for (std::size_t jj = top; jj < n; ++jj) m[top][jj] += m[i][jj];
          divides_all = false;
        }
    if (!divides_all) continue;
    Int f = m[top][top] >= 0 ? m[top][top] : Int(-m[top][top]);
    factors.push_back(f);
    ++top;
  }
  while (top < n) {
    factors.push_back(0);
    ++top;
  }
  return factors;
}

}  // namespace linkdet
