#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latinlab/census.hpp"
#include "latinlab/rng.hpp"
#include "latinlab/sampler.hpp"

#include "oracles.hpp"

using namespace latinlab;

TEST_CASE("cyclic ground truths") {
  CHECK(count_full_transversals(cyclic_square(1)).to_u64() == 1);
  CHECK(count_full_transversals(cyclic_square(2)).to_u64() == 0);
  CHECK(count_full_transversals(cyclic_square(3)).to_u64() == 3);
  CHECK(count_full_transversals(cyclic_square(4)).to_u64() == 0);
  CHECK(count_full_transversals(cyclic_square(6)).to_u64() == 0);
}

TEST_CASE("transversal counts match the diagonal-enumeration oracle") {
  Rng rng(555);
  for (int n = 2; n <= 6; ++n) {
    for (int rep = 0; rep < 12; ++rep) {
      SamplerConfig cfg;
      cfg.n = n;
      cfg.seed = rng.next_u64();
      auto L = sample_latin_square(cfg);
      CHECK(count_full_transversals(L).to_u64() == oracles::count_transversals_naive(L));
    }
  }
  for (int n : {3, 5, 7}) {
    auto L = cyclic_square(n);
    CHECK(count_full_transversals(L).to_u64() == oracles::count_transversals_naive(L));
  }
}

TEST_CASE("hamilton counts: Z_3 regression and oracle agreement") {
  CHECK(count_hamilton_transversals(cyclic_square(3)).to_u64() == 2);
  CHECK(count_hamilton_transversals(cyclic_square(2)).to_u64() == 0);
  Rng rng(556);
  for (int n = 2; n <= 6; ++n) {
    for (int rep = 0; rep < 8; ++rep) {
      SamplerConfig cfg;
      cfg.n = n;
      cfg.seed = rng.next_u64();
      auto L = sample_latin_square(cfg);
      CHECK(count_hamilton_transversals(L).to_u64() == oracles::count_hamilton_naive(L));
    }
  }
}

TEST_CASE("hamilton count never exceeds the full count") {
  Rng rng(557);
  for (int rep = 0; rep < 10; ++rep) {
    SamplerConfig cfg;
    cfg.n = 7;
    cfg.seed = rng.next_u64();
    auto L = sample_latin_square(cfg);
    CHECK(count_hamilton_transversals(L) <= count_full_transversals(L));
  }
}

TEST_CASE("partitioned enumeration: hamilton + non-hamilton = full") {
  Rng rng(558);
  SamplerConfig cfg;
  cfg.n = 6;
  cfg.seed = rng.next_u64();
  auto L = sample_latin_square(cfg);
  // count non-hamilton full transversals by oracle
  std::uint64_t full = oracles::count_transversals_naive(L);
  std::uint64_t ham = oracles::count_hamilton_naive(L);
  CHECK(count_full_transversals(L).to_u64() == full);
  CHECK(count_hamilton_transversals(L).to_u64() == ham);
  CHECK(ham + (full - ham) == full);
}

TEST_CASE("engine limits produce capacity errors naming the limit") {
  EngineLimits limits;
  limits.full_count = 5;
  CHECK_THROWS_WITH_AS(count_full_transversals(cyclic_square(6), limits),
                       doctest::Contains("n <= 5"), std::invalid_argument);
}

TEST_CASE("max cycle-free partial transversal") {
  // n = 1: the only cell is a loop, which is a 1-cycle.
  CHECK(max_cycle_free_partial(cyclic_square(1)).first == 0);
  // Z_2: n - 2 = 0 holds trivially.
  CHECK(max_cycle_free_partial(cyclic_square(2)).first >= 0);
  // Z_4: value equals the independent exhaustive oracle.
  auto z4 = max_cycle_free_partial(cyclic_square(4));
  CHECK(z4.first == oracles::max_partial_naive(cyclic_square(4), true));
  // witness cells must form a cycle-free partial transversal of that size
  auto L = cyclic_square(4);
  auto cls = classify_position_set(L, z4.second);
  CHECK(cls.cycle_free);
  CHECK(static_cast<int>(z4.second.cells.size()) == z4.first);

  Rng rng(600);
  for (int n = 2; n <= 5; ++n) {
    SamplerConfig cfg;
    cfg.n = n;
    cfg.seed = rng.next_u64();
    auto S = sample_latin_square(cfg);
    CHECK(max_cycle_free_partial(S).first == oracles::max_partial_naive(S, true));
  }
}

TEST_CASE("max partial transversal matches oracle") {
  Rng rng(601);
  for (int n = 2; n <= 5; ++n) {
    SamplerConfig cfg;
    cfg.n = n;
    cfg.seed = rng.next_u64();
    auto S = sample_latin_square(cfg);
    CHECK(max_partial_transversal(S).first == oracles::max_partial_naive(S, false));
  }
}

TEST_CASE("rainbow path/cycle extremum") {
  auto g3 = latin_to_digraph(cyclic_square(3));
  auto best = max_rainbow_path_or_cycle(g3);
  CHECK(best.length == 3);  // hamilton transversals exist, so a rainbow 3-cycle
  CHECK(best.is_cycle);

  auto g1 = latin_to_digraph(cyclic_square(1));
  auto b1 = max_rainbow_path_or_cycle(g1);
  CHECK(b1.length == 1);
  CHECK(b1.degenerate_loop);

  Rng rng(602);
  for (int n = 2; n <= 6; ++n) {
    SamplerConfig cfg;
    cfg.n = n;
    cfg.seed = rng.next_u64();
    auto G = latin_to_digraph(sample_latin_square(cfg));
    CHECK(max_rainbow_path_or_cycle(G, true).length >= 1);
    CHECK(max_rainbow_path_or_cycle(G, true).length == oracles::max_rainbow_naive(G, true));
    CHECK(max_rainbow_path_or_cycle(G, false).length == oracles::max_rainbow_naive(G, false));
  }
}

TEST_CASE("isotopy invariance of the transversal count") {
  Rng rng(603);
  for (int n : {5, 7}) {
    auto L = cyclic_square(n);
    auto base = count_full_transversals(L).to_u64();
    auto rows = rng.permutation(n);
    auto cols = rng.permutation(n);
    auto syms = rng.permutation(n);
    Grid g(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) g(rows[r], cols[c]) = syms[L.at(r, c)];
    CHECK(count_full_transversals(make_latin_square(g)).to_u64() == base);
  }
}

TEST_CASE("conjecture report at small orders") {
  auto r2 = conjecture_report(cyclic_square(2));
  CHECK(r2.max_partial_transversal_size == 1);  // = n - 1
  CHECK(r2.rbs_holds);
  CHECK(r2.gs_holds);
  CHECK(r2.cycle_or_path_holds);  // a rainbow path of length 1 exists

  auto r3 = conjecture_report(cyclic_square(3));
  CHECK(r3.rbs_holds);
  CHECK(r3.gs_holds);
  CHECK(r3.cycle_or_path_holds);
  CHECK(r3.full_transversal_count.to_u64() == 3);
  CHECK(r3.hamilton_transversal_count.to_u64() == 2);
  CHECK(!r3.rainbow_witness.cells.empty());

  SamplerConfig cfg;
  cfg.n = 7;
  cfg.seed = 1234;
  auto L = sample_latin_square(cfg);
  auto r7 = conjecture_report(L);
  CHECK(r7.rbs_holds == (oracles::max_partial_naive(L, false) >= 6));
  CHECK(r7.gs_holds == (oracles::max_partial_naive(L, true) >= 5));
  CHECK(r7.cycle_or_path_holds == (oracles::max_rainbow_naive(latin_to_digraph(L), true) >= 6));
}

TEST_CASE("report witnesses are deterministic and valid") {
  auto L = cyclic_square(5);
  auto a = conjecture_report(L);
  auto b = conjecture_report(L);
  CHECK(a.partial_witness.cells == b.partial_witness.cells);
  CHECK(a.cycle_free_witness.cells == b.cycle_free_witness.cells);
  auto cls = classify_position_set(L, a.cycle_free_witness);
  CHECK(cls.cycle_free);
}
