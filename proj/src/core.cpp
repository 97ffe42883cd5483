#include "latinlab/core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace latinlab {

namespace {

// Disjoint-set union on the undirected shadow of the image digraph.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool check_latin(const Grid& grid, std::string* why) {
  const int n = static_cast<int>(grid.rows());
  if (n == 0 || grid.cols() != n) {
    if (why) *why = "grid is not a nonempty square matrix";
    return false;
  }
  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int s = grid(r, c);
      if (s < 0 || s >= n) {
        if (why)
          *why = "symbol " + std::to_string(s + 1) + " out of range at row " +
                 std::to_string(r + 1) + ", column " + std::to_string(c + 1);
        return false;
      }
      if (seen[s]) {
        if (why)
          *why = "row " + std::to_string(r + 1) + " repeats symbol " + std::to_string(s + 1);
        return false;
      }
      seen[s] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int s = grid(r, c);
      if (seen[s]) {
        if (why)
          *why = "column " + std::to_string(c + 1) + " repeats symbol " + std::to_string(s + 1);
        return false;
      }
      seen[s] = 1;
    }
  }
  return true;
}

LatinSquare make_latin_square(Grid grid) {
  std::string why;
  if (!check_latin(grid, &why)) throw std::invalid_argument("invalid Latin square: " + why);
  LatinSquare L;
  L.n = static_cast<int>(grid.rows());
  L.grid = std::move(grid);
  return L;
}

ColouredDigraph make_coloured_digraph(int n, const std::vector<int>& colours,
                                      const std::vector<std::vector<int>>& head_of_colour) {
  if (n <= 0) throw std::invalid_argument("digraph order must be positive");
  ColouredDigraph G;
  G.n = n;
  G.colours = colours;
  std::sort(G.colours.begin(), G.colours.end());
  if (std::adjacent_find(G.colours.begin(), G.colours.end()) != G.colours.end())
    throw std::invalid_argument("duplicate colour id");
  G.colour_present.assign(n, 0);
  G.arc_colour = Grid::Constant(n, n, -1);
  G.head_of = Grid::Constant(n, n, -1);
  G.tail_of = Grid::Constant(n, n, -1);
  if (head_of_colour.size() != G.colours.size())
    throw std::invalid_argument("one permutation per colour required");
  for (std::size_t ci = 0; ci < G.colours.size(); ++ci) {
    const int c = G.colours[ci];
    if (c < 0 || c >= n) throw std::invalid_argument("colour id out of range");
    G.colour_present[c] = 1;
    const auto& perm = head_of_colour[ci];
    if (static_cast<int>(perm.size()) != n)
      throw std::invalid_argument("colour class must map every vertex");
    std::vector<char> head_seen(n, 0);
    for (int u = 0; u < n; ++u) {
      int v = perm[u];
      if (v < 0 || v >= n) throw std::invalid_argument("arc head out of range");
      if (head_seen[v])
        throw std::invalid_argument("colour " + std::to_string(c + 1) +
                                    " has two arcs into vertex " + std::to_string(v + 1));
      head_seen[v] = 1;
      if (G.arc_colour(u, v) != -1)
        throw std::invalid_argument("two arcs on the ordered pair (" + std::to_string(u + 1) +
                                    "," + std::to_string(v + 1) + ")");
      G.arc_colour(u, v) = c;
      G.head_of(c, u) = v;
      G.tail_of(c, v) = u;
    }
  }
  return G;
}

bool is_partial_transversal(const LatinSquare& L, const PositionSet& S, std::string* why) {
  const auto& cells = S.cells;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto [r, c] = cells[i];
    if (r < 0 || r >= L.n || c < 0 || c >= L.n) {
      if (why)
        *why = "cell (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") out of range";
      return false;
    }
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      auto [r2, c2] = cells[j];
      const char* clash = nullptr;
      if (r == r2 && c == c2) clash = "duplicate cell";
      else if (r == r2) clash = "shared row";
      else if (c == c2) clash = "shared column";
      else if (L.at(r, c) == L.at(r2, c2)) clash = "shared symbol";
      if (clash) {
        if (why)
          *why = std::string(clash) + " between cells (" + std::to_string(r + 1) + "," +
                 std::to_string(c + 1) + ") and (" + std::to_string(r2 + 1) + "," +
                 std::to_string(c2 + 1) + ")";
        return false;
      }
    }
  }
  return true;
}

ColouredDigraph latin_to_digraph(const LatinSquare& L) {
  std::string why;
  if (!check_latin(L.grid, &why)) throw std::invalid_argument("invalid Latin square: " + why);
  std::vector<int> colours(L.n);
  std::iota(colours.begin(), colours.end(), 0);
  // head_of_colour[c][u] = the column j with L[u][j] = c.
  std::vector<std::vector<int>> heads(L.n, std::vector<int>(L.n, -1));
  for (int i = 0; i < L.n; ++i)
    for (int j = 0; j < L.n; ++j) heads[L.at(i, j)][i] = j;
  return make_coloured_digraph(L.n, colours, heads);
}

LatinSquare digraph_to_latin(const ColouredDigraph& G) {
  if (!G.is_full())
    throw std::invalid_argument("digraph_to_latin requires a full colour set");
  Grid grid(G.n, G.n);
  for (int u = 0; u < G.n; ++u)
    for (int v = 0; v < G.n; ++v) grid(u, v) = G.arc_colour(u, v);
  return make_latin_square(std::move(grid));
}

TransversalClass classify_position_set(const LatinSquare& L, const PositionSet& S) {
  std::string why;
  if (!is_partial_transversal(L, S, &why))
    throw std::invalid_argument("not a partial transversal: " + why);
  TransversalClass out;
  const int n = L.n;
  out.full = static_cast<int>(S.cells.size()) == n;

  std::vector<int> succ(n, -1), indeg(n, 0);
  std::vector<char> used(n, 0);
  for (auto [r, c] : S.cells) {
    succ[r] = c;
    indeg[c]++;
    used[r] = used[c] = 1;
  }

  // Directed cycles: follow successor chains (in/out-degree <= 1 everywhere).
  std::vector<char> on_cycle(n, 0);
  std::vector<char> visited(n, 0);
  for (int v = 0; v < n; ++v) {
    if (succ[v] < 0 || visited[v]) continue;
    // Walk forward; a cycle exists iff we return to the start.
    std::vector<int> walk;
    int x = v;
    std::vector<char> local(n, 0);
    while (x >= 0 && !local[x] && !visited[x]) {
      local[x] = 1;
      walk.push_back(x);
      x = succ[x];
    }
    if (x >= 0 && local[x]) {
      std::vector<int> cycle;
      bool in = false;
      for (int w : walk) {
        if (w == x) in = true;
        if (in) {
          cycle.push_back(w);
          on_cycle[w] = 1;
        }
      }
      out.cycles.push_back(std::move(cycle));
    }
    for (int w : walk) visited[w] = 1;
  }
  out.cycle_free = out.cycles.empty();

  Dsu dsu(n);
  int components = 0;
  for (int v = 0; v < n; ++v)
    if (used[v]) ++components;
  for (auto [r, c] : S.cells)
    if (dsu.unite(r, c)) --components;
  out.component_count = components;
  out.connected = !S.cells.empty() && components == 1;

  bool hamilton = out.full && out.connected && out.cycles.size() == 1 &&
                  static_cast<int>(out.cycles[0].size()) == n;
  if (hamilton && n == 1) out.degenerate_loop_hamilton = true;
  if (hamilton)
    out.kind = TransversalKind::Hamilton;
  else if (out.cycle_free)
    out.kind = TransversalKind::CycleFree;
  else if (out.connected)
    out.kind = TransversalKind::Connected;
  else
    out.kind = TransversalKind::General;
  return out;
}

ColouredDigraph restrict_to_colours(const ColouredDigraph& G, const std::vector<int>& D) {
  for (int c : D)
    if (!G.has_colour(c))
      throw std::invalid_argument("colour " + std::to_string(c + 1) + " not in the digraph");
  std::vector<int> ds = D;
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  std::vector<std::vector<int>> heads;
  heads.reserve(ds.size());
  for (int c : ds) {
    std::vector<int> perm(G.n);
    for (int u = 0; u < G.n; ++u) perm[u] = G.head_of(c, u);
    heads.push_back(std::move(perm));
  }
  return make_coloured_digraph(G.n, ds, heads);
}

long long colour_arc_count(const ColouredDigraph& G, const std::vector<int>& U1,
                           const std::vector<int>& U2, const std::vector<int>& D) {
  std::vector<char> in1(G.n, 0), in2(G.n, 0), ind(G.n, 0);
  for (int v : U2) {
    if (v < 0 || v >= G.n) throw std::invalid_argument("vertex out of range");
    in2[v] = 1;
  }
  for (int u : U1) {
    if (u < 0 || u >= G.n) throw std::invalid_argument("vertex out of range");
    in1[u] = 1;
  }
  for (int c : D) {
    if (!G.has_colour(c))
      throw std::invalid_argument("colour " + std::to_string(c + 1) + " not in the digraph");
    ind[c] = 1;
  }
  long long count = 0;
  for (int u = 0; u < G.n; ++u) {
    if (!in1[u]) continue;
    for (int c = 0; c < G.n; ++c) {
      if (!ind[c]) continue;
      int v = G.head_of(c, u);
      if (v >= 0 && in2[v]) ++count;
    }
  }
  return count;
}

}  // namespace latinlab
