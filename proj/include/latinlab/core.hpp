#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latinlab {

// Vertices, rows, columns, and colours are 0-based internally. All serialized
// formats are 1-based; the conversion happens only at the I/O boundary.

using Grid = Eigen::MatrixXi;

// n x n symbol grid; every row and every column holds each symbol of
// {0,...,n-1} exactly once.
struct LatinSquare {
  int n = 0;
  Grid grid;

  int at(int r, int c) const { return grid(r, c); }
  bool operator==(const LatinSquare& o) const { return n == o.n && grid == o.grid; }
};

// Checks the Latin property; on failure reports the first violated row,
// column, or range constraint (1-based in the message).
bool check_latin(const Grid& grid, std::string* why = nullptr);

// Validating constructor; throws std::invalid_argument naming the violation.
LatinSquare make_latin_square(Grid grid);

// Properly arc-coloured digraph on [n] whose colour classes are permutations
// of the vertex set (loops allowed). With a full colour set this is exactly
// the digraph form of a Latin square; with a restricted colour set it is the
// digraph form of a |D| x n Latin rectangle.
struct ColouredDigraph {
  int n = 0;
  std::vector<int> colours;        // sorted colour ids, subset of {0,...,n-1}
  std::vector<char> colour_present;  // size n membership mask
  Grid arc_colour;            // n x n; entry (u,v) = colour of u->v, or -1
  Grid head_of;               // n x n; head_of(c,u) = head of the c-arc at u, or -1
  Grid tail_of;               // n x n; tail_of(c,v) = tail of the c-arc into v, or -1

  bool has_colour(int c) const { return c >= 0 && c < n && colour_present[c]; }
  int out_neighbour(int c, int u) const { return head_of(c, u); }
  int in_neighbour(int c, int v) const { return tail_of(c, v); }
  bool has_arc(int u, int v) const { return arc_colour(u, v) >= 0; }
  int colour_of(int u, int v) const { return arc_colour(u, v); }
  std::size_t arc_count() const { return colours.size() * static_cast<std::size_t>(n); }
  bool is_full() const { return static_cast<int>(colours.size()) == n; }

  bool operator==(const ColouredDigraph& o) const {
    return n == o.n && arc_colour == o.arc_colour;  // matrix is authoritative
  }
};

// Builds the digraph from per-colour permutations; validates properness
// (one arc per ordered pair) and per-colour regularity.
ColouredDigraph make_coloured_digraph(int n, const std::vector<int>& colours,
                                      const std::vector<std::vector<int>>& head_of_colour);

// Set of (row, column) cells of an order-n square.
struct PositionSet {
  int n = 0;
  std::vector<std::pair<int, int>> cells;
};

enum class TransversalKind { CycleFree, Connected, Hamilton, General };

struct TransversalClass {
  TransversalKind kind = TransversalKind::CycleFree;
  bool full = false;
  bool cycle_free = true;
  bool connected = false;          // weak connectivity among used vertices
  bool degenerate_loop_hamilton = false;  // n = 1 single-loop case
  int component_count = 0;         // weak components among used vertices
  std::vector<std::vector<int>> cycles;  // directed cycles, loops included as 1-cycles
};

// True iff no two cells of S share a row, column, or symbol of L. On failure
// reports the clashing pair of cells.
bool is_partial_transversal(const LatinSquare& L, const PositionSet& S,
                            std::string* why = nullptr);

// Correspondence: cell (i,j) with symbol s becomes the arc i->j coloured s.
ColouredDigraph latin_to_digraph(const LatinSquare& L);
LatinSquare digraph_to_latin(const ColouredDigraph& G);

// Structural classification of a partial transversal via its image digraph.
TransversalClass classify_position_set(const LatinSquare& L, const PositionSet& S);

// Deletes all arcs whose colour is outside D; throws if D is not a subset of
// the colour set.
ColouredDigraph restrict_to_colours(const ColouredDigraph& G, const std::vector<int>& D);

// Number of arcs with tail in U1, head in U2, and colour in D.
long long colour_arc_count(const ColouredDigraph& G, const std::vector<int>& U1,
                           const std::vector<int>& U2, const std::vector<int>& D);

}  // namespace latinlab
