#include "linkdet/khovanov.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace linkdet {

namespace {

struct ArcUF {
  std::vector<int> parent;
  explicit ArcUF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct VertexCircles {
  std::vector<int> circ_of_arc;  // arc slot -> circle index, circles ordered by min root
  int count = 0;
};

VertexCircles resolve(const std::vector<std::array<int, 4>>& slots, int arcs,
                      std::size_t mask) {
  ArcUF uf(arcs);
  for (std::size_t c = 0; c < slots.size(); ++c) {
    if ((mask >> c) & 1) {
      uf.unite(slots[c][1], slots[c][2]);
      uf.unite(slots[c][3], slots[c][0]);
    } else {
      uf.unite(slots[c][0], slots[c][1]);
      uf.unite(slots[c][2], slots[c][3]);
    }
  }
  VertexCircles v;
  v.circ_of_arc.assign(arcs, -1);
  for (int a = 0; a < arcs; ++a) {
    int r = uf.find(a);
    if (v.circ_of_arc[r] == -1) v.circ_of_arc[r] = v.count++;
  }
  for (int a = 0; a < arcs; ++a) v.circ_of_arc[a] = v.circ_of_arc[uf.find(a)];
  return v;
}

// rank of the F2 column space of `cols`, each column a bitset of `words` words
long gf2_rank(std::vector<std::vector<std::uint64_t>>& cols) {
  long rank = 0;
  std::vector<std::size_t> pivot_col;
  std::vector<int> pivot_bit;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& col = cols[j];
    for (std::size_t p = 0; p < pivot_col.size(); ++p) {
      int b = pivot_bit[p];
      if ((col[b >> 6] >> (b & 63)) & 1) {
        const auto& pc = cols[pivot_col[p]];
        for (std::size_t w = 0; w < col.size(); ++w) col[w] ^= pc[w];
      }
    }
    int lead = -1;
    for (std::size_t w = 0; w < col.size() && lead < 0; ++w)
      if (col[w]) lead = static_cast<int>(w * 64 + std::countr_zero(col[w]));
    if (lead >= 0) {
      pivot_col.push_back(j);
      pivot_bit.push_back(lead);
      ++rank;
    }
  }
  return rank;
}

}  // namespace

KhovanovCube khovanov_cube(const LinkDiagram& d, const InvariantCaps& caps) {
  const std::size_t n = d.size();
  if (n > caps.khovanov) throw CrossingCapExceeded(n, caps.khovanov);

  KhovanovCube cube;
  cube.n = n;
  for (const auto& cr : d.crossings) (cr.sign > 0 ? cube.n_plus : cube.n_minus) += 1;

  if (n == 0) {
    cube.vertex_base = {0, 2};
    cube.n_circles = {1};
    cube.grading = {{0, 1}, {0, -1}};
    cube.diff.resize(2);
    return cube;
  }

  // compact arc labels to 0..arcs-1
  std::map<int, int> idx;
  for (const auto& cr : d.crossings)
    for (int a : cr.arcs)
      if (!idx.count(a)) {
        int v = static_cast<int>(idx.size());
        idx[a] = v;
      }
  const int arcs = static_cast<int>(idx.size());
  std::vector<std::array<int, 4>> slots(n);
  for (std::size_t c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) slots[c][k] = idx.at(d.crossings[c].arcs[k]);

  const std::size_t vertices = std::size_t{1} << n;
  std::vector<VertexCircles> vc(vertices);
  cube.n_circles.resize(vertices);
  cube.vertex_base.assign(vertices + 1, 0);
  for (std::size_t s = 0; s < vertices; ++s) {
    vc[s] = resolve(slots, arcs, s);
    cube.n_circles[s] = vc[s].count;
    cube.vertex_base[s + 1] = cube.vertex_base[s] + (long{1} << vc[s].count);
  }

  const long total = cube.vertex_base.back();
  cube.grading.resize(total);
  cube.diff.resize(total);
  const int shift_j = cube.n_plus - 2 * cube.n_minus;
  for (std::size_t s = 0; s < vertices; ++s) {
    int r = std::popcount(s);
    int k = vc[s].count;
    for (long label = 0; label < (long{1} << k); ++label) {
      int p = std::popcount(static_cast<std::uint64_t>(label));
      cube.grading[cube.vertex_base[s] + label] = {
          r - cube.n_minus, k - 2 * p + r + shift_j};
    }
  }

  for (std::size_t s = 0; s < vertices; ++s) {
    const auto& src = vc[s];
    for (std::size_t c = 0; c < n; ++c) {
      if ((s >> c) & 1) continue;
      std::size_t s2 = s | (std::size_t{1} << c);
      const auto& tgt = vc[s2];

      // circle correspondence through shared arcs
      std::vector<int> tgt_of_src(src.count, -1);
      int split_src = -1, split_tgt2 = -1;
      for (int a = 0; a < arcs; ++a) {
        int sc = src.circ_of_arc[a], tc = tgt.circ_of_arc[a];
        if (tgt_of_src[sc] == -1)
          tgt_of_src[sc] = tc;
        else if (tgt_of_src[sc] != tc) {
          split_src = sc;
          split_tgt2 = tc;
        }
      }
      bool is_split = tgt.count == src.count + 1;
      int merge_a = -1, merge_b = -1, merge_t = -1;
      if (!is_split) {
        // the two source circles through crossing c fuse; in the A-smoothing
        // slots 0,1 lie on one circle and slots 2,3 on the other
        merge_a = src.circ_of_arc[slots[c][0]];
        merge_b = src.circ_of_arc[slots[c][2]];
        merge_t = tgt_of_src[merge_a];
      }

      for (long label = 0; label < (long{1} << src.count); ++label) {
        long gid = cube.vertex_base[s] + label;
        long base2 = cube.vertex_base[s2];
        // copy labels of untouched circles through the correspondence
        long carried = 0;
        for (int sc = 0; sc < src.count; ++sc)
          if ((label >> sc) & 1) carried |= long{1} << tgt_of_src[sc];
        if (!is_split) {
          bool xa = (label >> merge_a) & 1, xb = (label >> merge_b) & 1;
          if (xa && xb) continue;  // x*x = 0
          long out = carried & ~(long{1} << merge_t);
          if (xa || xb) out |= long{1} << merge_t;
          cube.diff[gid].push_back(base2 + out);
        } else {
          long t1 = tgt_of_src[split_src], t2 = split_tgt2;
          if ((label >> split_src) & 1) {
            cube.diff[gid].push_back(base2 + (carried | (long{1} << t2)));
          } else {
            cube.diff[gid].push_back(base2 + (carried | (long{1} << t1)));
            cube.diff[gid].push_back(base2 + (carried | (long{1} << t2)));
          }
        }
      }
    }
  }
  for (auto& row : cube.diff) std::sort(row.begin(), row.end());
  return cube;
}

BigradedDims khovanov_f2(const LinkDiagram& d, const InvariantCaps& caps) {
  KhovanovCube cube = khovanov_cube(d, caps);
  const long total = cube.total();

  // per-(i,j) block column indices
  std::map<std::pair<int, int>, long> block_dim;
  std::vector<long> col(total);
  for (long g = 0; g < total; ++g) col[g] = block_dim[cube.grading[g]]++;

  // rank of the differential out of each block
  std::map<std::pair<int, int>, long> rank_out;
  for (const auto& [ij, dim] : block_dim) {
    auto tgt = std::pair<int, int>{ij.first + 1, ij.second};
    auto it = block_dim.find(tgt);
    if (it == block_dim.end()) continue;
    std::size_t words = static_cast<std::size_t>(it->second + 63) / 64;
    std::vector<std::vector<std::uint64_t>> cols;
    for (long g = 0; g < total; ++g) {
      if (cube.grading[g] != ij || cube.diff[g].empty()) continue;
      std::vector<std::uint64_t> bits(words, 0);
      for (long h : cube.diff[g]) bits[col[h] >> 6] ^= std::uint64_t{1} << (col[h] & 63);
      cols.push_back(std::move(bits));
    }
    if (!cols.empty()) rank_out[ij] = gf2_rank(cols);
  }

  BigradedDims out;
  for (const auto& [ij, dim] : block_dim) {
    long r_out = rank_out.count(ij) ? rank_out.at(ij) : 0;
    auto prev = std::pair<int, int>{ij.first - 1, ij.second};
    long r_in = rank_out.count(prev) ? rank_out.at(prev) : 0;
    long h = dim - r_out - r_in;
    if (h < 0) throw std::logic_error("negative homology dimension");
    if (h > 0) out[ij] = h;
  }
  return out;
}

LaurentPoly2 poincare_poly(const BigradedDims& b) {
  LaurentPoly2 p("t", "q");
  for (const auto& [ij, dim] : b) p.set_coeff(ij.first, ij.second, dim);
  return p;
}

LaurentPoly1 specialize_t(const BigradedDims& b, int t_sign) {
  if (t_sign != 1 && t_sign != -1) throw std::invalid_argument("t must be +1 or -1");
  LaurentPoly1 p("q");
  for (const auto& [ij, dim] : b) {
    Int c = (t_sign == -1 && (ij.first % 2 != 0)) ? Int(-dim) : Int(dim);
    p.set_coeff(ij.second, p.coeff(ij.second) + c);
  }
  return p;
}

}  // namespace linkdet
