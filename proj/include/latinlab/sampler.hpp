#pragma once

#include "latinlab/core.hpp"
#include "latinlab/rng.hpp"

#include <cstdint>
#include <vector>

namespace latinlab {

struct SamplerConfig {
  std::uint64_t seed = 0;
  int n = 1;
  int k = 1;                    // rectangle height for rectangle sampling
  long long burn_in_moves = -1;  // -1: default n^3 chain moves
};

// Addition table of the integers modulo n: grid(i,j) = (i + j) mod n.
LatinSquare cyclic_square(int n);

// All Latin squares of order n (n <= 4; 1, 2, 12, 576 squares).
const std::vector<LatinSquare>& enumerate_latin_squares(int n);

// Exactly uniform for n <= 4 via complete enumeration; for larger n runs a
// Jacobson-Matthews +-1 move chain from a seeded start for burn_in_moves.
// Identical config yields identical output.
LatinSquare sample_latin_square(const SamplerConfig& cfg);

// Element of G_D with |D| = k: k colour classes, each a permutation of [n].
// Rows are sampled by uniform-permutation proposals with a matching-based
// completion fallback.
ColouredDigraph sample_latin_rectangle(const SamplerConfig& cfg);

// Prescribed arc of a digraph under construction.
struct ArcSpec {
  int u = 0, v = 0, c = 0;
};

// Builds an element of G_D (colours 0..colour_count-1) containing every
// prescribed arc, filling the rest by randomized sequential matching with
// restarts. Throws if the constraints are inconsistent or completion fails.
ColouredDigraph complete_with_constraints(int n, int colour_count,
                                          const std::vector<ArcSpec>& constraints, Rng& rng,
                                          int max_restarts = 64);

// Same, then converts the full digraph to a Latin square.
LatinSquare complete_square_with_constraints(int n, const std::vector<ArcSpec>& constraints,
                                             Rng& rng, int max_restarts = 64);

}  // namespace latinlab
