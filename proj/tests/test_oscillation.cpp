#include <doctest.h>

#include <random>
#include <set>

#include "pinsimple/oracle.hpp"
#include "pinsimple/oscillation.hpp"
#include "support.hpp"

using namespace pinsimple;
using pinsimple::testing::P;
using pinsimple::testing::W;

namespace {

Permutation pattern_at(const std::vector<std::size_t>& positions) {
  const auto seq = inc_osc_prefix(positions.empty() ? 0 : positions.back());
  std::vector<int> values;
  for (auto p : positions) values.push_back(seq[p - 1]);
  return Permutation::pattern_of(values);
}

// Longest alternation by trying every subset against every cut direction.
std::size_t brute_alternation(const Permutation& p) {
  const std::size_t n = p.size();
  std::size_t best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) pos.push_back(i);
    }
    if (pos.size() <= best) continue;
    const auto q = p.restrict_to(pos);
    for (const auto& s : Symmetry::all()) {
      // Odd entries (by value) left of even entries.
      const auto r = s.apply(q);
      const auto inv = r.inverse();
      std::size_t last_odd = 0, first_even = r.size() + 1;
      for (std::size_t v = 1; v <= r.size(); ++v) {
        const auto position = static_cast<std::size_t>(inv[v - 1]);
        if (v % 2) last_odd = std::max(last_odd, position);
        else first_even = std::min(first_even, position);
      }
      if (last_odd < first_even) {
        best = pos.size();
        break;
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("increasing oscillating sequence") {
  CHECK(inc_osc_prefix(6) == std::vector<int>{4, 1, 6, 3, 8, 5});
  CHECK(inc_osc_prefix(1) == std::vector<int>{4});
  CHECK(inc_osc_prefix(8) == std::vector<int>{4, 1, 6, 3, 8, 5, 10, 7});
}

TEST_CASE("rank encoding") {
  CHECK(rank_encoding(P("2153647")).to_string() == "1020100");
  CHECK(rank_encoding(P("321")).to_string() == "210");
  CHECK(rank_encoding(Permutation::identity(5)).to_string() == "00000");
  CHECK(rank_encoding(P("11,1,2,3,4,5,6,7,8,9,10")).to_string() == "10,0,0,0,0,0,0,0,0,0,0");
  for (const auto& p : pinsimple::testing::permutations_up_to(7)) {
    REQUIRE(rank_decode(rank_encoding(p)) == p);
  }
  CHECK_THROWS_AS(rank_decode(RankEncoding{{0, 2}}), std::invalid_argument);
}

TEST_CASE("rank rules characterize the quartet avoiders") {
  const auto& quartet = oscillation_quartet();
  CHECK(quartet.size() == 4);
  for (const auto& p : pinsimple::testing::permutations_up_to(8)) {
    REQUIRE(satisfies_rank_rules(rank_encoding(p)) == avoids_all(p, quartet));
  }
}

TEST_CASE("embedding examples") {
  const auto e = embed_into_inc_osc(P("2153647"));
  REQUIRE(e.ok());
  CHECK(e.greedy);
  CHECK(e.positions == std::vector<std::size_t>{1, 4, 5, 6, 7, 8, 12});
  CHECK(pattern_at(e.positions) == P("2153647"));

  const auto one = embed_into_inc_osc(P("1"));
  REQUIRE(one.ok());
  CHECK(one.positions.size() == 1);
  CHECK(pattern_at(one.positions) == P("1"));

  const auto bad = embed_into_inc_osc(P("321"));
  CHECK_FALSE(bad.ok());
  CHECK(*bad.violated == P("321"));
  CHECK(*embed_into_inc_osc(P("3412")).violated == P("3412"));

  // The literal greedy rule misses 312; the search still embeds it.
  CHECK(pattern_at(greedy_inc_osc_positions(P("312"))) != P("312"));
  const auto e312 = embed_into_inc_osc(P("312"));
  REQUIRE(e312.ok());
  CHECK_FALSE(e312.greedy);
  CHECK(pattern_at(e312.positions) == P("312"));
}

TEST_CASE("embedding succeeds exactly on the quartet avoiders") {
  for (const auto& p : pinsimple::testing::permutations_up_to(7)) {
    const auto e = embed_into_inc_osc(p);
    REQUIRE(e.ok() == avoids_all(p, oscillation_quartet()));
    if (e.ok()) {
      REQUIRE(std::is_sorted(e.positions.begin(), e.positions.end()));
      REQUIRE(pattern_at(e.positions) == p);
    } else {
      REQUIRE(contains(*e.violated, p));
    }
  }
}

TEST_CASE("longest alternation") {
  CHECK(longest_alternation(P("11,9,7,5,3,1,12,10,8,6,4,2")) == 12);
  CHECK(longest_alternation(P("1")) == 1);
  CHECK(longest_alternation(Permutation()) == 0);
  for (std::size_t n = 2; n <= 8; ++n) CHECK(longest_alternation(Permutation::identity(n)) == 2);
  for (const auto& p : pinsimple::testing::permutations_up_to(6)) {
    REQUIRE(longest_alternation(p) == brute_alternation(p));
  }
}

TEST_CASE("oscillation catalog") {
  CHECK(oscillations_of_length(4) == std::vector<Permutation>{P("2413"), P("3142")});
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto catalog = oscillations_of_length(k);
    std::set<Permutation> brute;
    for (const auto& p : increasing_oscillations_brute_force(k, 16)) {
      brute.insert(p);
      brute.insert(p.reverse());
    }
    CHECK_MESSAGE(std::set<Permutation>(catalog.begin(), catalog.end()) == brute, k);
    const auto host = Permutation::pattern_of(inc_osc_prefix(16));
    for (const auto& p : catalog) {
      CHECK(is_simple(p));
      CHECK((contains(p, host) || contains(p.reverse(), host)));
    }
  }
}

TEST_CASE("longest oscillation") {
  CHECK(longest_oscillation(Permutation::pattern_of(inc_osc_prefix(8))) == 8);
  CHECK(longest_oscillation(P("321")) == 2);
  CHECK(longest_oscillation(P("2413")) == 4);
  CHECK(longest_oscillation(P("1")) == 1);
  CHECK_THROWS_AS(longest_oscillation(Permutation::identity(15)), ResourceError);
  CHECK(longest_oscillation(Permutation::identity(15), 15) == 2);
}

TEST_CASE("long pin sequences contain long alternations or oscillations") {
  // k = 2: every strict word of length 8.
  for (const auto& w : pinsimple::testing::pin_words(8, true)) {
    const auto p = perm_of(w);
    REQUIRE(std::max(longest_alternation(p), longest_oscillation(p)) >= 2);
  }
  // k = 3: a sample of strict words of length 18.
  std::mt19937 rng(29);
  for (int i = 0; i < 100; ++i) {
    const auto p = perm_of(pinsimple::testing::random_pin_word(rng, 18, true));
    REQUIRE(std::max(longest_alternation(p), longest_oscillation(p, 18)) >= 3);
  }
}
