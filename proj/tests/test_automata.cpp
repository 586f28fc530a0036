#include <doctest.h>

#include <random>

#include "pinsimple/decision.hpp"
#include "support.hpp"

using namespace pinsimple;
using pinsimple::testing::W;

namespace {

using Word = std::vector<PinLetter>;

/// Random machine whose arcs use only the given letters; eps_rate of the
/// arcs are empty moves.
Nfa random_nfa(std::mt19937& rng, std::size_t states, std::span<const PinLetter> letters,
               double eps_rate) {
  std::uniform_int_distribution<StateId> state(0, static_cast<StateId>(states - 1));
  std::uniform_int_distribution<std::size_t> letter(0, letters.size() - 1);
  std::uniform_real_distribution<double> coin(0, 1);
  std::vector<Nfa::Transition> arcs;
  const std::size_t arc_count = states * 2 + state(rng);
  for (std::size_t k = 0; k < arc_count; ++k) {
    const Label l = coin(rng) < eps_rate ? kEpsilon : label_of(letters[letter(rng)]);
    arcs.push_back({state(rng), l, state(rng)});
  }
  std::vector<bool> accepting(states);
  for (std::size_t s = 0; s < states; ++s) accepting[s] = coin(rng) < 0.3;
  return Nfa(states, 0, accepting, arcs);
}

std::vector<Word> words_over(std::span<const PinLetter> letters, std::size_t max_len) {
  std::vector<Word> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (auto l : letters) {
        auto w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

bool valid_strict(const Word& w) {
  if (w.empty() || !is_numeral(w[0])) return false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (is_numeral(w[i]) || !may_follow(w[i - 1], w[i])) return false;
  }
  return true;
}

// Walks every word up to max_len in lockstep with the automaton.
void check_strict_words(const Dfa& d, StateId s, Word& w, std::size_t max_len) {
  REQUIRE(d.is_accepting(s) == valid_strict(w));
  if (w.size() == max_len) return;
  for (auto l : kPinAlphabet) {
    w.push_back(l);
    check_strict_words(d, d.next(s, l), w, max_len);
    w.pop_back();
  }
}

constexpr std::array<PinLetter, 3> kSmallAlphabet = {PinLetter::Q1, PinLetter::L, PinLetter::U};

}  // namespace

TEST_CASE("strict pin word automaton") {
  const auto d = strict_pin_word_automaton();
  CHECK(d.accepts(W("1")));
  CHECK(d.accepts(W("3RDRDLULURDLDRD")));
  CHECK_FALSE(d.accepts(W("4RDL21DL")));
  CHECK_FALSE(d.accepts(Word{}));
  CHECK(strict_pin_word_nfa().state_count() == 3);

  CHECK(count_words(d, 0) == 0);
  CHECK(count_words(d, 1) == 4);
  CHECK(count_words(d, 2) == 16);
  CHECK(count_words(d, 3) == 32);
  CHECK(count_words(d, 4) == 64);
  CHECK(count_words(d, 5) == 128);
  CHECK(count_words(universal_automaton(), 2) == 64);
  CHECK(count_words(universal_automaton(), 0) == 1);
  CHECK_THROWS_AS(count_words(universal_automaton(), 22), std::overflow_error);

  Word w;
  check_strict_words(d, d.initial(), w, 8);
  CHECK(is_infinite(d));
}

TEST_CASE("machine construction checks endpoints") {
  CHECK_THROWS_AS(Nfa(2, 0, {false, true}, {{0, 0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Nfa(2, 3, {false, true}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Dfa(1, 0, {true}, std::vector<StateId>(7, 0)), std::invalid_argument);
  CHECK_THROWS_AS(Dfa(1, 0, {true}, std::vector<StateId>(8, 1)), std::invalid_argument);
}

TEST_CASE("single words") {
  const auto one = single_word_nfa(W("1").letters());
  CHECK(one.accepts(W("1")));
  CHECK_FALSE(one.accepts(W("2")));
  CHECK_FALSE(one.accepts(Word{}));
  CHECK_FALSE(is_infinite(one));
  CHECK_FALSE(is_empty(one));
  CHECK(is_empty(Nfa()));
  CHECK(is_empty(Dfa()));
  CHECK(count_words(determinize(one), 1) == 1);
}

TEST_CASE("determinization preserves the language") {
  std::mt19937 rng(11);
  const auto small_words = words_over(kSmallAlphabet, 8);
  for (int m = 0; m < 60; ++m) {
    const auto a = random_nfa(rng, 1 + m % 12, kSmallAlphabet, 0.2);
    const auto d = determinize(a);
    const auto md = minimize(d);
    CHECK(md.state_count() <= d.state_count());
    CHECK(minimize(md).state_count() == md.state_count());
    for (const auto& w : small_words) {
      const bool in = a.accepts(w);
      REQUIRE(d.accepts(w) == in);
      REQUIRE(md.accepts(w) == in);
    }
  }
  std::uniform_int_distribution<std::size_t> len(0, 10);
  for (int m = 0; m < 20; ++m) {
    const auto a = random_nfa(rng, 3 + m, kPinAlphabet, 0.15);
    const auto d = minimize(determinize(a));
    for (int k = 0; k < 1000; ++k) {
      const auto w = pinsimple::testing::random_letters(rng, len(rng));
      REQUIRE(d.accepts(w) == a.accepts(w));
    }
  }
}

TEST_CASE("minimization reaches the known minimum") {
  // Words over {1} whose length is divisible by 3, as a 6-cycle.
  std::vector<Nfa::Transition> arcs;
  for (StateId s = 0; s < 6; ++s) arcs.push_back({s, label_of(PinLetter::Q1), (s + 1) % 6});
  const Nfa a(6, 0, {true, false, false, true, false, false}, arcs);
  const auto d = minimize(determinize(a));
  CHECK(d.state_count() == 4);  // three residues plus the sink
  CHECK(d.initial() == 0);
}

TEST_CASE("determinization cap") {
  // (1|L)* 1 (1|L)^k needs 2^(k+1) subsets.
  const std::size_t k = 10;
  std::vector<Nfa::Transition> arcs{{0, label_of(PinLetter::Q1), 0},
                                    {0, label_of(PinLetter::L), 0},
                                    {0, label_of(PinLetter::Q1), 1}};
  for (StateId s = 1; s <= k; ++s) {
    arcs.push_back({s, label_of(PinLetter::Q1), s + 1});
    arcs.push_back({s, label_of(PinLetter::L), s + 1});
  }
  std::vector<bool> accepting(k + 2, false);
  accepting.back() = true;
  const Nfa a(k + 2, 0, accepting, arcs);
  CHECK(minimize(determinize(a)).state_count() >= (std::size_t{1} << (k + 1)));
  try {
    determinize(a, 100);
    FAIL("cap not enforced");
  } catch (const ResourceError& e) {
    CHECK(e.cap_name() == "state-cap");
    CHECK(e.cap_value() == 100);
  }
}

TEST_CASE("boolean operations") {
  const auto strict = strict_pin_word_automaton();
  const auto all_strict = complement_within(Nfa(), strict);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(count_words(all_strict, n) == count_words(strict, n));

  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> len(0, 8);
  for (int m = 0; m < 20; ++m) {
    const auto a = random_nfa(rng, 2 + m % 8, kPinAlphabet, 0.1);
    const auto b = random_nfa(rng, 2 + m % 5, kPinAlphabet, 0.1);
    const auto da = determinize(a), db = determinize(b);
    const auto rest = complement_within(a, strict);
    const auto both = intersect(a, b);
    const auto either = nfa_union(a, b);
    const auto self = intersect(a, a);
    const auto inter = product(da, db, ProductMode::Intersection);
    const auto uni = product(da, db, ProductMode::Union);
    const auto diff = product(da, db, ProductMode::Difference);
    const auto comp = complement(da);
    CHECK(is_empty(intersect(to_nfa(rest), a)));
    CHECK(minimize(product(rest, da, ProductMode::Union)).state_count() ==
          minimize(product(strict, da, ProductMode::Union)).state_count());
    for (int k = 0; k < 2000; ++k) {
      const auto w = pinsimple::testing::random_letters(rng, len(rng));
      const bool in_a = a.accepts(w), in_b = b.accepts(w);
      REQUIRE(rest.accepts(w) == (strict.accepts(w) && !in_a));
      REQUIRE(both.accepts(w) == (in_a && in_b));
      REQUIRE(either.accepts(w) == (in_a || in_b));
      REQUIRE(self.accepts(w) == in_a);
      REQUIRE(inter.accepts(w) == (in_a && in_b));
      REQUIRE(uni.accepts(w) == (in_a || in_b));
      REQUIRE(diff.accepts(w) == (in_a && !in_b));
      REQUIRE(comp.accepts(w) == !in_a);
    }
  }
  // Idempotence on the strict language, to length 8.
  const auto ss = determinize(intersect(strict_pin_word_nfa(), strict_pin_word_nfa()));
  for (std::size_t n = 0; n <= 8; ++n) CHECK(count_words(ss, n) == count_words(strict, n));
}

TEST_CASE("trim keeps the language") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> len(0, 8);
  for (int m = 0; m < 30; ++m) {
    const auto a = random_nfa(rng, 2 + m % 10, kPinAlphabet, 0.2);
    const auto t = trim(a);
    CHECK(t.state_count() <= a.state_count());
    CHECK(is_empty(a) == is_empty(determinize(a)));
    for (int k = 0; k < 500; ++k) {
      const auto w = pinsimple::testing::random_letters(rng, len(rng));
      REQUIRE(t.accepts(w) == a.accepts(w));
    }
  }
}

TEST_CASE("infiniteness agrees with the pumping criterion") {
  std::mt19937 rng(17);
  const std::array<PinLetter, 2> letters = {PinLetter::Q1, PinLetter::L};
  const auto words = words_over(letters, 11);
  for (int m = 0; m < 50; ++m) {
    const std::size_t n = 1 + m % 6;
    const auto a = random_nfa(rng, n, letters, 0.0);
    bool pumped = false;
    for (const auto& w : words) {
      if (w.size() >= n && w.size() < 2 * n && a.accepts(w)) {
        pumped = true;
        break;
      }
    }
    CHECK(is_infinite(a) == pumped);
    const auto d = minimize(determinize(a));
    CHECK(is_infinite(d) == pumped);
    if (!pumped) {
      for (std::size_t len = d.state_count(); len < 2 * d.state_count() + 2; ++len) {
        CHECK(count_words(d, len) == 0);
      }
    }
  }
  // An empty-move cycle alone does not make a language infinite.
  const Nfa eps_loop(3, 0, {false, false, true},
                     {{0, label_of(PinLetter::Q2), 1}, {1, kEpsilon, 2}, {2, kEpsilon, 1}});
  CHECK_FALSE(is_infinite(eps_loop));
  const Nfa dead_loop(3, 0, {false, true, false},
                      {{0, label_of(PinLetter::Q2), 1}, {0, label_of(PinLetter::L), 2},
                       {2, label_of(PinLetter::L), 2}});
  CHECK_FALSE(is_infinite(dead_loop));
}

TEST_CASE("transducer application") {
  // Copies its input and may append any number of L letters.
  Transducer t;
  t.state_count = 2;
  t.initial = 0;
  t.accepting = {true, true};
  for (auto l : kPinAlphabet) t.transitions.push_back({0, label_of(l), label_of(l), 0});
  t.transitions.push_back({0, kEpsilon, label_of(PinLetter::L), 1});
  t.transitions.push_back({1, kEpsilon, label_of(PinLetter::L), 1});

  const auto image = apply_transducer(t, W("1U"));
  CHECK(image.accepts(W("1U")));
  CHECK(image.accepts(W("1UL")));
  CHECK(image.accepts(Word{PinLetter::Q1, PinLetter::U, PinLetter::L, PinLetter::L}));
  CHECK_FALSE(image.accepts(W("1")));
  CHECK_FALSE(image.accepts(W("1UR")));
  CHECK(is_infinite(image));

  const auto empty_input = apply_transducer(t, Word{});
  CHECK(empty_input.accepts(Word{}));
  CHECK(empty_input.accepts(Word{PinLetter::L, PinLetter::L}));
  CHECK_FALSE(empty_input.accepts(Word{PinLetter::R}));
}

TEST_CASE("pin transducer images agree with the joint search") {
  const auto t = pin_transducer();
  const auto ws = pinsimple::testing::pin_words_up_to(5, true);
  for (const auto& u : pinsimple::testing::pin_words_up_to(3, false)) {
    const auto image = apply_transducer(t, u);
    for (const auto& w : ws) {
      REQUIRE(image.accepts(w) == transduces(t, u.letters(), w.letters()));
    }
  }
  // The empty input writes every strict pin word.
  const auto from_empty = determinize(intersect(apply_transducer(t, Word{}), strict_pin_word_nfa()));
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK(count_words(from_empty, n) == count_words(strict_pin_word_automaton(), n));
  }
}

TEST_CASE("the image of 1 is every strict word above it") {
  const auto image = apply_transducer(pin_transducer(), W("1"));
  for (const auto& w : pinsimple::testing::pin_words_up_to(4, true)) {
    REQUIRE(image.accepts(w) == preceq(W("1"), w));
  }
}

TEST_CASE("text dumps") {
  const auto text = to_text(single_word_nfa(W("1L").letters()));
  CHECK(text == "initial\t0\naccepting\t2\n0\t1\t1\n1\tL\t2\n");
  const auto dfa_text = to_text(universal_automaton());
  CHECK(dfa_text.rfind("initial\t0\naccepting\t0\n0\t1\t0\n", 0) == 0);
  const auto t_text = to_text(pin_transducer());
  CHECK(t_text.rfind("initial\tS\n", 0) == 0);
  CHECK(t_text.find("C2\teps:D\tF3") != std::string::npos);
  CHECK(label_text(kEpsilon) == "eps");
}
