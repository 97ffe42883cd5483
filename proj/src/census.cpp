#include "latinlab/census.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace latinlab {

namespace {

void require_limit(int n, int limit, const char* op) {
  if (n > limit)
    throw std::invalid_argument(std::string(op) + " is limited to n <= " +
                                std::to_string(limit) + " (got n = " + std::to_string(n) +
                                "); raise the engine limit to override");
}

std::uint64_t count_transversals_rec(const LatinSquare& L, int row, std::uint32_t cols,
                                     std::uint32_t syms) {
  const int n = L.n;
  if (row == n) return 1;
  std::uint64_t total = 0;
  for (int c = 0; c < n; ++c) {
    if ((cols >> c) & 1) continue;
    int s = L.at(row, c);
    if ((syms >> s) & 1) continue;
    total += count_transversals_rec(L, row + 1, cols | (1u << c), syms | (1u << s));
  }
  return total;
}

}  // namespace

BigUint count_full_transversals(const LatinSquare& L, const EngineLimits& limits) {
  require_limit(L.n, limits.full_count, "count_full_transversals");
  return BigUint{count_transversals_rec(L, 0, 0, 0)};
}

namespace {

// Enumerates directed Hamilton cycles v0=0 -> v1 -> ... -> v_{n-1} -> 0 whose
// arc symbols are pairwise distinct.
std::uint64_t hamilton_rec(const LatinSquare& L, int current, int depth, std::uint32_t used_v,
                           std::uint32_t used_s) {
  const int n = L.n;
  if (depth == n) {
    int s = L.at(current, 0);
    return ((used_s >> s) & 1) ? 0 : 1;
  }
  std::uint64_t total = 0;
  for (int v = 1; v < n; ++v) {
    if ((used_v >> v) & 1) continue;
    int s = L.at(current, v);
    if ((used_s >> s) & 1) continue;
    total += hamilton_rec(L, v, depth + 1, used_v | (1u << v), used_s | (1u << s));
  }
  return total;
}

}  // namespace

BigUint count_hamilton_transversals(const LatinSquare& L, const EngineLimits& limits,
                                    bool include_degenerate) {
  require_limit(L.n, limits.hamilton, "count_hamilton_transversals");
  if (L.n == 1) return BigUint{include_degenerate ? 1ull : 0ull};
  return BigUint{hamilton_rec(L, 0, 1, 1u, 0u)};
}

namespace {

struct MaxSearch {
  const LatinSquare& L;
  bool forest_only;
  int best = 0;
  std::vector<std::pair<int, int>> best_cells;
  std::vector<std::pair<int, int>> current;
  std::uint32_t cols = 0, syms = 0;
  // Union-find over vertices for forest cycle pruning.
  std::vector<int> parent;

  explicit MaxSearch(const LatinSquare& l, bool forest) : L(l), forest_only(forest) {
    parent.resize(L.n);
    std::iota(parent.begin(), parent.end(), 0);
  }

  // No path compression: the search undoes unions on backtrack by resetting
  // a single parent entry.
  int find(int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  }

  // Cell sequences are explored in lexicographic order, so the first witness
  // recorded at any size is the lexicographically least of that size.
  void record_if_better() {
    int size = static_cast<int>(current.size());
    if (size > best) {
      best = size;
      best_cells = current;
    }
  }

  // Rows are scanned in order; each row is either skipped or assigned a cell.
  void run(int row) {
    record_if_better();
    const int n = L.n;
    if (row == n) return;
    if (static_cast<int>(current.size()) + (n - row) <= best) return;
    for (int c = 0; c < n; ++c) {
      if ((cols >> c) & 1) continue;
      int s = L.at(row, c);
      if ((syms >> s) & 1) continue;
      int ra = -1, rb = -1;
      if (forest_only) {
        if (row == c) continue;  // loop is a 1-cycle
        ra = find(row);
        rb = find(c);
        if (ra == rb) continue;  // arc would close a directed cycle
        parent[ra] = rb;
      }
      cols |= 1u << c;
      syms |= 1u << s;
      current.emplace_back(row, c);
      run(row + 1);
      current.pop_back();
      cols &= ~(1u << c);
      syms &= ~(1u << s);
      if (forest_only) parent[ra] = ra;
    }
    run(row + 1);  // skip this row
  }
};

}  // namespace

std::pair<int, PositionSet> max_partial_transversal(const LatinSquare& L,
                                                    const EngineLimits& limits) {
  require_limit(L.n, limits.full_count, "max_partial_transversal");
  MaxSearch search(L, false);
  search.run(0);
  PositionSet witness;
  witness.n = L.n;
  witness.cells = search.best_cells;
  return {search.best, witness};
}

std::pair<int, PositionSet> max_cycle_free_partial(const LatinSquare& L,
                                                   const EngineLimits& limits) {
  require_limit(L.n, limits.full_count, "max_cycle_free_partial");
  MaxSearch search(L, true);
  search.run(0);
  PositionSet witness;
  witness.n = L.n;
  witness.cells = search.best_cells;
  return {search.best, witness};
}

namespace {

struct RainbowSearch {
  const ColouredDigraph& G;
  bool allow_loops;
  RainbowExtremum best;
  std::vector<int> path;
  std::vector<char> used_v, used_c;

  RainbowSearch(const ColouredDigraph& g, bool loops)
      : G(g), allow_loops(loops), used_v(g.n, 0), used_c(g.n, 0) {}

  void extend() {
    const int u = path.back();
    if (static_cast<int>(path.size()) - 1 > best.length) {
      best.length = static_cast<int>(path.size()) - 1;
      best.is_cycle = false;
      best.degenerate_loop = false;
      best.vertices = path;
    }
    for (int v = 0; v < G.n; ++v) {
      int c = G.arc_colour(u, v);
      if (c < 0 || used_c[c]) continue;
      if (u == v) {
        // loop: a rainbow directed cycle of length 1
        if (allow_loops && 1 > best.length) {
          best.length = 1;
          best.is_cycle = true;
          best.degenerate_loop = true;
          best.vertices = {u};
        }
        continue;
      }
      if (v == path.front() && path.size() >= 2) {
        // closing arc: rainbow directed cycle
        if (static_cast<int>(path.size()) > best.length) {
          best.length = static_cast<int>(path.size());
          best.is_cycle = true;
          best.degenerate_loop = false;
          best.vertices = path;
        }
        continue;
      }
      if (used_v[v]) continue;
      used_v[v] = 1;
      used_c[c] = 1;
      path.push_back(v);
      extend();
      path.pop_back();
      used_c[c] = 0;
      used_v[v] = 0;
    }
  }
};

}  // namespace

RainbowExtremum max_rainbow_path_or_cycle(const ColouredDigraph& G, bool allow_loops,
                                          const EngineLimits& limits) {
  require_limit(G.n, limits.rainbow, "max_rainbow_path_or_cycle");
  RainbowSearch search(G, allow_loops);
  for (int v = 0; v < G.n; ++v) {
    search.path = {v};
    std::fill(search.used_v.begin(), search.used_v.end(), 0);
    std::fill(search.used_c.begin(), search.used_c.end(), 0);
    search.used_v[v] = 1;
    search.extend();
  }
  return search.best;
}

CensusReport conjecture_report(const LatinSquare& L, const EngineLimits& limits) {
  CensusReport rep;
  rep.n = L.n;
  rep.limits_used = limits;
  rep.full_transversal_count = count_full_transversals(L, limits);
  if (L.n <= limits.hamilton)
    rep.hamilton_transversal_count = count_hamilton_transversals(L, limits);

  auto [max_partial, pw] = max_partial_transversal(L, limits);
  rep.max_partial_transversal_size = max_partial;
  rep.partial_witness = pw;

  auto [max_cf, cw] = max_cycle_free_partial(L, limits);
  rep.max_cycle_free_partial_size = max_cf;
  rep.cycle_free_witness = cw;

  ColouredDigraph G = latin_to_digraph(L);
  if (L.n <= limits.rainbow) {
    RainbowExtremum with_loops = max_rainbow_path_or_cycle(G, true, limits);
    RainbowExtremum no_loops = max_rainbow_path_or_cycle(G, false, limits);
    rep.max_rainbow_length = with_loops.length;
    rep.max_rainbow_length_loop_free = no_loops.length;
    rep.rainbow_witness_is_cycle = with_loops.is_cycle;
    rep.degenerate_loop_witness = with_loops.degenerate_loop;
    rep.rainbow_witness.n = L.n;
    if (!with_loops.vertices.empty()) {
      const auto& vs = with_loops.vertices;
      for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        rep.rainbow_witness.cells.emplace_back(vs[i], vs[i + 1]);
      if (with_loops.is_cycle) rep.rainbow_witness.cells.emplace_back(vs.back(), vs.front());
    }
    rep.cycle_or_path_holds = rep.max_rainbow_length >= L.n - 1;
  }

  rep.rbs_holds = max_partial >= L.n - 1;
  rep.gs_holds = max_cf >= L.n - 2;

  const long double ratio_base = static_cast<long double>(L.n) / std::exp(2.0L);
  rep.taranenko_bound_value = std::pow(ratio_base, static_cast<long double>(L.n));
  long double count = static_cast<long double>(rep.full_transversal_count.to_double());
  rep.taranenko_ratio = rep.taranenko_bound_value > 0 ? count / rep.taranenko_bound_value : 0.0L;
  return rep;
}

}  // namespace latinlab
