#pragma once

#include "latinlab/core.hpp"
#include "latinlab/rng.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace latinlab {

// Arc with its colour; used for edit lists and inventories.
struct Arc {
  int u = 0, v = 0, c = 0;
  bool operator==(const Arc& o) const { return u == o.u && v == o.v && c == o.c; }
  bool operator<(const Arc& o) const {
    if (u != o.u) return u < o.u;
    if (v != o.v) return v < o.v;
    return c < o.c;
  }
};

// Seven-vertex pattern around (v, c): arcs x1->v, v->x2, x1->x2, x3->x4,
// x3->x5, x4->x6, x5->x6 coloured f1, f2, f3, f3, f2, f1, c respectively,
// with f1, f2, f3, c pairwise distinct. Abutment pair: (x4, x5).
struct AbsorbingGadget {
  int v = 0, c = 0;
  std::array<int, 6> x{};  // x[i] is x_{i+1}
  std::array<int, 3> f{};  // f[i] is f_{i+1}

  int abutment_first() const { return x[3]; }
  int abutment_second() const { return x[4]; }
  std::vector<int> vertices() const;
  std::vector<int> colours() const;
  std::vector<Arc> arcs() const;
};

// Eight-vertex pattern between y and z: arcs y->w1, w2->w1, w2->w3, z->w3,
// w4->y, w4->w5, w6->w5, w6->z coloured d1, d2, d3, d4, d3, d4, d1, d2, with
// d1..d4 pairwise distinct.
struct BridgingGadget {
  int y = 0, z = 0;
  std::array<int, 6> w{};
  std::array<int, 4> d{};

  std::vector<int> vertices() const;
  std::vector<int> colours() const;
  std::vector<Arc> arcs() const;
};

// Ordered equitable partition of a colour set into six parts.
struct ColourPartition {
  std::array<std::vector<int>, 6> parts;
  std::vector<int> part_index;  // size n; -1 for colours outside the set

  int part_of(int colour) const {
    return colour >= 0 && colour < static_cast<int>(part_index.size()) ? part_index[colour] : -1;
  }
};

// Round-robin assignment of the sorted colour set; equitable by construction.
ColourPartition make_equitable_partition(const std::vector<int>& colours, int n);

// Bridging gadget plus the arcs y->w2 (colour in D5) and z->w5 (colour in
// D6), with d_i constrained to part D_i.
struct Bridge {
  BridgingGadget gadget;
  int d5 = 0, d6 = 0;
  bool distinguishable = false;

  // The four arcs whose unique ownership defines distinguishability.
  std::array<Arc, 4> middle_arcs() const;
  std::vector<Arc> arcs() const;  // all ten arcs
};

// The 23-vertex switching configuration. u holds the inner vertices u1..u6,
// up the middle vertices u'1..u'8 (possibly repeating among themselves), upp
// the outer vertices u''1..u''8; d holds d1..d6.
struct TwistSystem {
  int y = 0, z = 0;
  std::array<int, 6> u{};
  std::array<int, 8> up{};
  std::array<int, 8> upp{};
  std::array<int, 6> d{};

  std::vector<Arc> required_arcs() const;   // the 18 arcs of the system
  std::vector<Arc> deleted_arcs() const;    // the 12 arcs a twist removes
  std::vector<Arc> added_arcs() const;      // the 12 arcs a twist inserts
  std::array<std::pair<int, int>, 12> required_non_arcs() const;
  Bridge canonical_bridge() const;          // present after twisting
};

// --- finders -------------------------------------------------------------

// Up to cap instances, scanning (x1, x2, x3) in ascending order; exhaustive
// when cap is larger than the search space.
std::vector<AbsorbingGadget> find_absorbing_gadgets(const ColouredDigraph& G, int v, int c,
                                                    std::size_t cap);

// Up to cap instances, scanning colour triples (d1, d2, d3) ascending.
std::vector<BridgingGadget> find_bridging_gadgets(const ColouredDigraph& G, int y, int z,
                                                  std::size_t cap);

struct WellSpreadReport {
  bool well_spread = true;
  int worst_vertex = -1;  // set when a vertex exceeds the bound
  int worst_colour = -1;  // set when a colour exceeds the bound
  int worst_load = 0;
};

// No non-root vertex in more than n members; for absorbing collections no
// non-root colour in more than n members, for bridging collections no colour
// at all in more than n members. Mixed roots are rejected.
WellSpreadReport is_well_spread(const std::vector<AbsorbingGadget>& collection, int n);
WellSpreadReport is_well_spread(const std::vector<BridgingGadget>& collection, int n);

struct BridgeCensus {
  long long distinguishable_count = 0;   // r_{(y,z,P)}(H)
  std::vector<Bridge> bridges;           // all bridges, marked
};

BridgeCensus count_distinguishable_bridges(const ColouredDigraph& H, int y, int z,
                                           const ColourPartition& P);

// Enumerates twist systems in ascending (d1..d6, e1..e4) order, up to cap.
std::vector<TwistSystem> find_twist_systems(const ColouredDigraph& H, int y, int z,
                                            const ColourPartition& P, std::size_t cap);

// Throws std::invalid_argument naming the first violated condition.
void validate_twist_system(const ColouredDigraph& H, const TwistSystem& T,
                           const ColourPartition& P);

// The twelve-arc exchange; the result is a validated element of G_D.
ColouredDigraph twist(const ColouredDigraph& H, const TwistSystem& T, const ColourPartition& P);

// Inverse of twist: removes the added arcs and restores the deleted ones.
ColouredDigraph untwist(const ColouredDigraph& H_twisted, const TwistSystem& T,
                        const ColourPartition& P);

// Deterministic side conditions under which a twist creates exactly the
// canonical bridge and destroys none: proof-style filters exposed for
// experiments and planted tests.
struct TwistSideConditions {
  bool outer_vertices_avoid_yz_neighbourhoods = false;  // (E2)
  bool no_alternative_d12_completion = false;           // (A_{5,6}1)
  bool no_alternative_d34_completion = false;           // (A_{5,6}2)
  bool deleted_arcs_in_no_bridge = false;               // strengthened (R)
  bool deleted_arcs_in_no_distinguishable_bridge = false;

  bool all_for_unique_increment() const {
    return outer_vertices_avoid_yz_neighbourhoods && no_alternative_d12_completion &&
           no_alternative_d34_completion && deleted_arcs_in_no_bridge;
  }
};

TwistSideConditions twist_side_conditions(const ColouredDigraph& H, const TwistSystem& T,
                                          const ColourPartition& P);

// --- quasirandomness ------------------------------------------------------

struct UpperQuasiReport {
  bool ok = false;
  bool exhaustive = false;        // exhaustively certified vs. sampled bound
  long long max_arcs = 0;         // best e_H(A,B) found over |A|=|B|=|D|
  double bound = 0;               // (1+ell) |D|^3 / n
  std::vector<int> worst_A, worst_B;
};

// Maximizes e_H(A,B) over |A| = |B| = |D|: exact when n <= exhaustive_limit,
// otherwise greedy-exchange local search from sampled starts (a lower-bound
// certificate; reported as such).
UpperQuasiReport upper_quasirandom_check(const ColouredDigraph& H, double ell,
                                         int exhaustive_limit = 14, std::uint64_t seed = 0);

struct LowerQuasiReport {
  bool ok = false;
  bool exhaustive = false;
  double min_slack = 0;           // min of e - |U1||U2||D|/n
  double threshold = 0;           // -n^{5/3}
  std::vector<int> worst_U1, worst_U2, worst_D;
};

// Verifies e_{G,D}(U1,U2) >= |U1||U2||D|/n - n^{5/3}: exhaustive over all
// triples when n <= exhaustive_limit, otherwise over `samples` random triples.
LowerQuasiReport lower_quasirandom_check(const ColouredDigraph& G, bool exhaustive,
                                         long long samples = 100000, std::uint64_t seed = 0,
                                         int exhaustive_limit = 10);

// Membership in M_s: r(H) = s and e_H(A,B) <= 2|D|^3/n + 12 s for all
// |A| = |B| = |D|. The arc-count side inherits the maximizer's mode.
struct MsReport {
  long long r = 0;
  bool arc_condition_ok = false;
  bool exhaustive = false;
  long long max_arcs = 0;
  double bound = 0;
};

MsReport check_ms_membership(const ColouredDigraph& H, int y, int z, const ColourPartition& P,
                             int exhaustive_limit = 14, std::uint64_t seed = 0);

// --- rotate ---------------------------------------------------------------

// Replaces arcs ab and vw (equal colour, not the protected colour) with aw
// and vb in that colour. Preconditions: a in A, b in B, v not in A, w not in
// B, arcs ab, vw present with equal colour != protected_colour, arcs aw, vb
// absent. Violations throw with the failed condition named.
ColouredDigraph rotate(const ColouredDigraph& H, int a, int b, int v, int w,
                       const std::vector<int>& A, const std::vector<int>& B,
                       int protected_colour);

}  // namespace latinlab
