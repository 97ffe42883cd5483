#pragma once

#include "latinlab/bigint.hpp"
#include "latinlab/core.hpp"

#include <optional>
#include <string>

namespace latinlab {

struct EngineLimits {
  int full_count = 12;     // count_full_transversals, max partial searches
  int hamilton = 10;       // count_hamilton_transversals
  int rainbow = 10;        // max_rainbow_path_or_cycle
};

struct CensusReport {
  int n = 0;
  BigUint full_transversal_count;
  BigUint hamilton_transversal_count;
  int max_partial_transversal_size = 0;
  int max_cycle_free_partial_size = 0;
  int max_rainbow_length = 0;                 // loops admitted as 1-cycles
  int max_rainbow_length_loop_free = 0;       // loops excluded
  bool rainbow_witness_is_cycle = false;
  bool degenerate_loop_witness = false;       // n = 1 loop reported as length 1
  long double taranenko_bound_value = 0.0L;   // (n/e^2)^n, reference only
  long double taranenko_ratio = 0.0L;         // count / (n/e^2)^n
  bool rbs_holds = false;                     // max partial >= n - 1
  bool gs_holds = false;                      // max cycle-free >= n - 2
  bool cycle_or_path_holds = false;           // max rainbow length >= n - 1
  PositionSet partial_witness;
  PositionSet cycle_free_witness;
  PositionSet rainbow_witness;
  EngineLimits limits_used;
};

// Exact count via bitmask backtracking over (column, symbol) masks.
BigUint count_full_transversals(const LatinSquare& L, const EngineLimits& limits = {});

// Full transversals whose image digraph is one directed Hamilton cycle.
// include_degenerate controls whether the n = 1 loop counts.
BigUint count_hamilton_transversals(const LatinSquare& L, const EngineLimits& limits = {},
                                    bool include_degenerate = true);

// Maximum size of a partial transversal, with the lexicographically least
// witness of that size.
std::pair<int, PositionSet> max_partial_transversal(const LatinSquare& L,
                                                    const EngineLimits& limits = {});

// Maximum size of a partial transversal whose image is a linear directed
// forest (loops count as cycles), with witness.
std::pair<int, PositionSet> max_cycle_free_partial(const LatinSquare& L,
                                                   const EngineLimits& limits = {});

struct RainbowExtremum {
  int length = 0;             // number of arcs
  bool is_cycle = false;
  bool degenerate_loop = false;
  std::vector<int> vertices;  // path: v0..vk; cycle: v0..v_{k-1} closing to v0
};

// Maximum arc-length over rainbow directed paths and cycles of G. When
// allow_loops is false, loops are excluded from consideration.
RainbowExtremum max_rainbow_path_or_cycle(const ColouredDigraph& G, bool allow_loops = true,
                                          const EngineLimits& limits = {});

CensusReport conjecture_report(const LatinSquare& L, const EngineLimits& limits = {});

}  // namespace latinlab
