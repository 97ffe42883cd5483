#include "latinlab/sampler.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace latinlab {

LatinSquare cyclic_square(int n) {
  if (n < 1) throw std::invalid_argument("order must be at least 1");
  Grid grid(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) grid(i, j) = (i + j) % n;
  return make_latin_square(std::move(grid));
}

namespace {

void enumerate_rows(int n, int row, Grid& grid, std::vector<int>& col_mask,
                    std::vector<LatinSquare>& out) {
  if (row == n) {
    out.push_back(make_latin_square(grid));
    return;
  }
  // Fill one row left to right.
  auto rec = [&](auto&& self, int col, int row_mask) -> void {
    if (col == n) {
      enumerate_rows(n, row + 1, grid, col_mask, out);
      return;
    }
    for (int s = 0; s < n; ++s) {
      if ((row_mask >> s) & 1) continue;
      if ((col_mask[col] >> s) & 1) continue;
      grid(row, col) = s;
      col_mask[col] |= 1 << s;
      self(self, col + 1, row_mask | (1 << s));
      col_mask[col] &= ~(1 << s);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

const std::vector<LatinSquare>& enumerate_latin_squares(int n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("complete enumeration is limited to n <= 4");
  static std::map<int, std::vector<LatinSquare>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<LatinSquare> all;
  Grid grid(n, n);
  std::vector<int> col_mask(n, 0);
  enumerate_rows(n, 0, grid, col_mask, all);
  return cache.emplace(n, std::move(all)).first->second;
}

namespace {

// Jacobson-Matthews chain on the 0/1 incidence cube, allowing one -1 entry.
class JmChain {
 public:
  JmChain(const LatinSquare& start, Rng& rng) : n_(start.n), rng_(rng), cube_(n_ * n_ * n_, 0) {
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) at(r, c, start.at(r, c)) = 1;
  }

  void run(long long moves) {
    for (long long i = 0; i < moves; ++i) step();
    while (improper_) step();  // settle on a proper square
  }

  LatinSquare to_square() const {
    Grid grid(n_, n_);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c)
        for (int s = 0; s < n_; ++s)
          if (at(r, c, s) == 1) grid(r, c) = s;
    return make_latin_square(std::move(grid));
  }

 private:
  int n_;
  Rng& rng_;
  std::vector<signed char> cube_;
  bool improper_ = false;
  int ir_ = -1, ic_ = -1, is_ = -1;  // position of the -1 entry

  signed char& at(int r, int c, int s) { return cube_[(r * n_ + c) * n_ + s]; }
  signed char at(int r, int c, int s) const { return cube_[(r * n_ + c) * n_ + s]; }

  int pick_one(int fixed_a, int fixed_b, int axis, int exclude) {
    // Returns one of the (two) indices x on the given axis with entry 1,
    // chosen uniformly; `exclude` skips a known index (-1: none).
    int found[2] = {-1, -1};
    int cnt = 0;
    for (int x = 0; x < n_; ++x) {
      signed char v = axis == 0 ? at(x, fixed_a, fixed_b)
                    : axis == 1 ? at(fixed_a, x, fixed_b)
                                : at(fixed_a, fixed_b, x);
      if (v == 1 && x != exclude) {
        if (cnt < 2) found[cnt] = x;
        ++cnt;
      }
    }
    if (cnt == 1) return found[0];
    return found[rng_.below_int(2)];
  }

  void flip(int r, int c, int s, int r1, int c1, int s1) {
    at(r, c, s)++;
    at(r, c1, s1)++;
    at(r1, c, s1)++;
    at(r1, c1, s)++;
    at(r, c, s1)--;
    at(r, c1, s)--;
    at(r1, c, s)--;
    at(r1, c1, s1)--;
    if (at(r1, c1, s1) == -1) {
      improper_ = true;
      ir_ = r1;
      ic_ = c1;
      is_ = s1;
    } else {
      improper_ = false;
    }
  }

  void step() {
    if (!improper_) {
      int r = rng_.below_int(n_);
      int c = rng_.below_int(n_);
      int s1 = -1;
      for (int s = 0; s < n_; ++s)
        if (at(r, c, s) == 1) s1 = s;
      int s;
      do {
        s = rng_.below_int(n_);
      } while (s == s1);
      int c1 = -1, r1 = -1;
      for (int x = 0; x < n_; ++x) {
        if (at(r, x, s) == 1) c1 = x;
        if (at(x, c, s) == 1) r1 = x;
      }
      flip(r, c, s, r1, c1, s1);
    } else {
      int r = ir_, c = ic_, s = is_;
      int s1 = pick_one(r, c, 2, s);
      int c1 = pick_one(r, s, 1, c);
      int r1 = pick_one(c, s, 0, r);
      flip(r, c, s, r1, c1, s1);
    }
  }
};

}  // namespace

LatinSquare sample_latin_square(const SamplerConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("order must be at least 1");
  Rng rng = Rng(cfg.seed).fork(0x5157);
  if (cfg.n <= 4) {
    const auto& all = enumerate_latin_squares(cfg.n);
    return all[rng.below(all.size())];
  }
  if (cfg.n > 256)
    throw std::invalid_argument("chain sampler capped at n <= 256 (dense incidence cube)");
  long long moves = cfg.burn_in_moves >= 0
                        ? cfg.burn_in_moves
                        : static_cast<long long>(cfg.n) * cfg.n * cfg.n;
  JmChain chain(cyclic_square(cfg.n), rng);
  chain.run(moves);
  return chain.to_square();
}

namespace {

// One rectangle row: a permutation avoiding the symbols already used in each
// column. Uniform-permutation rejection first, matching fallback after.
std::vector<int> sample_row(int n, const std::vector<std::vector<char>>& col_used, Rng& rng,
                            int proposal_budget) {
  for (int attempt = 0; attempt < proposal_budget; ++attempt) {
    std::vector<int> p = rng.permutation(n);
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) ok = !col_used[u][p[u]];
    if (ok) return p;
  }
  // Randomized greedy matching with augmenting repair; a completion always
  // exists because the availability graph is regular bipartite.
  std::vector<int> match_head(n, -1), match_tail(n, -1);
  std::vector<int> order = rng.permutation(n);
  std::vector<int> stamp(n, -1);
  auto augment = [&](auto&& self, int u, int stamp_id) -> bool {
    for (int v0 = rng.below_int(n), i = 0; i < n; ++i) {
      int v = (v0 + i) % n;
      if (col_used[u][v] || stamp[v] == stamp_id) continue;
      stamp[v] = stamp_id;
      if (match_tail[v] == -1 || self(self, match_tail[v], stamp_id)) {
        match_head[u] = v;
        match_tail[v] = u;
        return true;
      }
    }
    return false;
  };
  int stamp_id = 0;
  for (int u : order) {
    if (!augment(augment, u, stamp_id++))
      throw std::logic_error("rectangle row completion failed; Hall violation is a defect");
  }
  return match_head;
}

}  // namespace

ColouredDigraph sample_latin_rectangle(const SamplerConfig& cfg) {
  if (cfg.n < 1 || cfg.k < 1 || cfg.k > cfg.n)
    throw std::invalid_argument("rectangle requires 1 <= k <= n");
  Rng rng = Rng(cfg.seed).fork(0x7ec7);
  std::vector<std::vector<char>> col_used(cfg.n, std::vector<char>(cfg.n, 0));
  std::vector<std::vector<int>> rows;
  for (int d = 0; d < cfg.k; ++d) {
    std::vector<int> row = sample_row(cfg.n, col_used, rng, 300);
    for (int u = 0; u < cfg.n; ++u) col_used[u][row[u]] = 1;
    rows.push_back(std::move(row));
  }
  std::vector<int> colours(cfg.k);
  std::iota(colours.begin(), colours.end(), 0);
  return make_coloured_digraph(cfg.n, colours, rows);
}

ColouredDigraph complete_with_constraints(int n, int colour_count,
                                          const std::vector<ArcSpec>& constraints, Rng& rng,
                                          int max_restarts) {
  if (n < 1 || colour_count < 1 || colour_count > n)
    throw std::invalid_argument("need 1 <= colour_count <= n");
  // prescribed(u,v) = colour demanding the cell, or -1.
  Grid prescribed = Grid::Constant(n, n, -1);
  std::vector<std::vector<int>> forced_head(colour_count, std::vector<int>(n, -1));
  std::vector<std::vector<int>> forced_tail(colour_count, std::vector<int>(n, -1));
  for (const auto& a : constraints) {
    if (a.u < 0 || a.u >= n || a.v < 0 || a.v >= n || a.c < 0 || a.c >= colour_count)
      throw std::invalid_argument("constraint out of range");
    if (prescribed(a.u, a.v) != -1 && prescribed(a.u, a.v) != a.c)
      throw std::invalid_argument("conflicting colours prescribed on one cell");
    if (prescribed(a.u, a.v) == a.c) continue;
    if (forced_head[a.c][a.u] != -1 || forced_tail[a.c][a.v] != -1)
      throw std::invalid_argument("colour class properness violated by constraints");
    prescribed(a.u, a.v) = a.c;
    forced_head[a.c][a.u] = a.v;
    forced_tail[a.c][a.v] = a.u;
  }

  for (int restart = 0; restart < max_restarts; ++restart) {
    Rng local = rng.fork(restart + 1);
    std::vector<std::vector<char>> cell_used(n, std::vector<char>(n, 0));
    std::vector<std::vector<int>> heads(colour_count, std::vector<int>(n, -1));
    bool ok = true;
    for (int c = 0; c < colour_count && ok; ++c) {
      auto& head = heads[c];
      std::vector<int> match_tail(n, -1);
      std::vector<int> todo;
      for (int u = 0; u < n; ++u) {
        int v = forced_head[c][u];
        if (v != -1) {
          head[u] = v;
          match_tail[v] = u;
        } else {
          todo.push_back(u);
        }
      }
      // A cell is structurally available if no earlier colour used it and it
      // is not prescribed (prescribed cells of this colour are pre-placed).
      auto avail = [&](int u, int v) {
        return !cell_used[u][v] && prescribed(u, v) == -1;
      };
      local.shuffle(todo);
      std::vector<int> stamp(n, -1);
      int stamp_id = 0;
      auto augment = [&](auto&& self, int u, int sid) -> bool {
        for (int v0 = local.below_int(n), i = 0; i < n; ++i) {
          int v = (v0 + i) % n;
          if (stamp[v] == sid || !avail(u, v)) continue;
          stamp[v] = sid;
          int holder = match_tail[v];
          if (holder == -1 || (forced_head[c][holder] == -1 && self(self, holder, sid))) {
            head[u] = v;
            match_tail[v] = u;
            return true;
          }
        }
        return false;
      };
      for (int u : todo) {
        if (!augment(augment, u, stamp_id++)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
      for (int u = 0; u < n; ++u) cell_used[u][head[u]] = 1;
    }
    if (ok) {
      std::vector<int> colours(colour_count);
      std::iota(colours.begin(), colours.end(), 0);
      return make_coloured_digraph(n, colours, heads);
    }
  }
  throw std::runtime_error("constrained completion failed after restarts");
}

LatinSquare complete_square_with_constraints(int n, const std::vector<ArcSpec>& constraints,
                                             Rng& rng, int max_restarts) {
  return digraph_to_latin(complete_with_constraints(n, n, constraints, rng, max_restarts));
}

}  // namespace latinlab
