#pragma once

// Independent brute-force oracles used by the tests. These deliberately share
// no code with the library search engines they check.

#include "latinlab/core.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracles {

using latinlab::ColouredDigraph;
using latinlab::LatinSquare;

// Iterates all permutations of {0..n-1} (diagonals) and applies fn(perm).
template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    fn(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

// Full transversals by literal diagonal enumeration.
inline std::uint64_t count_transversals_naive(const LatinSquare& L) {
  std::uint64_t total = 0;
  for_each_permutation(L.n, [&](const std::vector<int>& p) {
    std::vector<char> sym(L.n, 0);
    bool ok = true;
    for (int r = 0; r < L.n && ok; ++r) {
      int s = L.at(r, p[r]);
      if (sym[s]) ok = false;
      sym[s] = 1;
    }
    if (ok) ++total;
  });
  return total;
}

// Hamilton transversals: full transversals whose cells, read as arcs r->p[r],
// form one directed n-cycle.
inline std::uint64_t count_hamilton_naive(const LatinSquare& L) {
  std::uint64_t total = 0;
  for_each_permutation(L.n, [&](const std::vector<int>& p) {
    std::vector<char> sym(L.n, 0);
    bool ok = true;
    for (int r = 0; r < L.n && ok; ++r) {
      int s = L.at(r, p[r]);
      if (sym[s]) ok = false;
      sym[s] = 1;
    }
    if (!ok) return;
    int steps = 0, x = 0;
    do {
      x = p[x];
      ++steps;
    } while (x != 0 && steps <= L.n);
    if (steps == L.n) ++total;
  });
  return total;
}

// Maximum partial transversal by subset search over cells (exponential; for
// tiny n only). forest_only additionally forbids directed cycles, counting
// loops as 1-cycles.
inline int max_partial_naive(const LatinSquare& L, bool forest_only) {
  const int n = L.n;
  struct Cell {
    int r, c, s;
  };
  std::vector<Cell> cells;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) cells.push_back({r, c, L.at(r, c)});
  int best = 0;
  std::vector<int> chosen;
  auto has_directed_cycle = [&](const std::vector<int>& sel) {
    std::vector<int> succ(n, -1);
    for (int idx : sel) succ[cells[idx].r] = cells[idx].c;
    for (int v = 0; v < n; ++v) {
      int x = v, steps = 0;
      while (x != -1 && steps <= n) {
        x = succ[x];
        ++steps;
        if (x == v) return true;
      }
    }
    return false;
  };
  auto rec = [&](auto&& self, std::size_t i, int rows, int cols, int syms) -> void {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (i == cells.size()) return;
    if (static_cast<int>(chosen.size()) + static_cast<int>(cells.size() - i) <= best) return;
    const auto& cell = cells[i];
    bool clash = ((rows >> cell.r) & 1) || ((cols >> cell.c) & 1) || ((syms >> cell.s) & 1);
    if (!clash) {
      chosen.push_back(static_cast<int>(i));
      if (!forest_only || !has_directed_cycle(chosen))
        self(self, i + 1, rows | (1 << cell.r), cols | (1 << cell.c), syms | (1 << cell.s));
      chosen.pop_back();
    }
    self(self, i + 1, rows, cols, syms);
  };
  rec(rec, 0, 0, 0, 0);
  return best;
}

// Exact arc count between vertex sets in given colours, double loop.
inline long long arc_count_naive(const ColouredDigraph& G, const std::vector<int>& U1,
                                 const std::vector<int>& U2, const std::vector<int>& D) {
  std::set<int> ds(D.begin(), D.end());
  long long total = 0;
  std::set<int> u1(U1.begin(), U1.end()), u2(U2.begin(), U2.end());
  for (int u : u1)
    for (int v : u2) {
      int c = G.arc_colour(u, v);
      if (c >= 0 && ds.count(c)) ++total;
    }
  return total;
}

// Longest rainbow directed path or cycle by exhaustive DFS over vertex
// sequences (independent of the library's colour-mask pruning engine).
inline int max_rainbow_naive(const ColouredDigraph& G, bool allow_loops) {
  const int n = G.n;
  int best = 0;
  if (allow_loops) {
    for (int v = 0; v < n; ++v)
      if (G.arc_colour(v, v) >= 0) best = std::max(best, 1);
  }
  std::vector<int> path;
  std::vector<char> used(n, 0);
  std::set<int> colours;
  auto rec = [&](auto&& self) -> void {
    int u = path.back();
    best = std::max(best, static_cast<int>(path.size()) - 1);
    for (int v = 0; v < n; ++v) {
      if (v == u) continue;
      int c = G.arc_colour(u, v);
      if (c < 0 || colours.count(c)) continue;
      if (v == path.front() && path.size() >= 2) {
        best = std::max(best, static_cast<int>(path.size()));
        continue;
      }
      if (used[v]) continue;
      used[v] = 1;
      colours.insert(c);
      path.push_back(v);
      self(self);
      path.pop_back();
      colours.erase(c);
      used[v] = 0;
    }
  };
  for (int v = 0; v < n; ++v) {
    path = {v};
    std::fill(used.begin(), used.end(), 0);
    used[v] = 1;
    colours.clear();
    rec(rec);
  }
  return best;
}

// All Latin squares of order n by brute force over grids, for n <= 4.
inline std::vector<LatinSquare> all_squares_naive(int n) {
  std::vector<LatinSquare> out;
  latinlab::Grid grid(n, n);
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == n * n) {
      std::string why;
      if (latinlab::check_latin(grid, &why)) out.push_back(latinlab::make_latin_square(grid));
      return;
    }
    int r = cell / n, c = cell % n;
    for (int s = 0; s < n; ++s) {
      bool ok = true;
      for (int i = 0; i < c && ok; ++i)
        if (grid(r, i) == s) ok = false;
      for (int i = 0; i < r && ok; ++i)
        if (grid(i, c) == s) ok = false;
      if (!ok) continue;
      grid(r, c) = s;
      self(self, cell + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace oracles
