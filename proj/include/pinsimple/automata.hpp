#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pinsimple/pin_word.hpp"

namespace pinsimple {

using StateId = std::uint32_t;

/// Arc labels: 0..7 are pin letters (by enumerator value), 8 is the empty word.
using Label = std::uint8_t;
constexpr Label kEpsilon = 8;

inline Label label_of(PinLetter l) { return static_cast<Label>(l); }
std::string label_text(Label label);

constexpr std::size_t kDefaultStateCap = 2'000'000;

/// Nondeterministic automaton with empty moves over the pin alphabet.
/// Immutable once built; epsilon closures are computed at construction.
class Nfa {
 public:
  struct Arc {
    Label label;
    StateId target;
  };
  struct Transition {
    StateId from;
    Label label;
    StateId to;
  };

  /// A machine with one non-accepting state and no arcs.
  Nfa() : Nfa(1, 0, {false}, {}) {}

  /// Throws std::invalid_argument when an endpoint is not a state.
  Nfa(std::size_t state_count, StateId initial, std::vector<bool> accepting,
      const std::vector<Transition>& transitions);

  std::size_t state_count() const { return accepting_.size(); }
  StateId initial() const { return initial_; }
  bool is_accepting(StateId s) const { return accepting_[s]; }
  std::span<const Arc> arcs(StateId s) const { return arcs_[s]; }
  std::size_t transition_count() const;
  /// Sorted; includes s itself.
  std::span<const StateId> epsilon_closure(StateId s) const { return closures_[s]; }

  bool accepts(std::span<const PinLetter> word) const;
  bool accepts(const PinWord& w) const { return accepts(w.letters()); }

 private:
  StateId initial_;
  std::vector<bool> accepting_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<std::vector<StateId>> closures_;
};

/// Complete deterministic automaton over the pin alphabet.
class Dfa {
 public:
  Dfa() : Dfa(1, 0, {false}, std::vector<StateId>(kPinAlphabetSize, 0)) {}

  /// table[s * 8 + letter] is the successor; throws unless total and in range.
  Dfa(std::size_t state_count, StateId initial, std::vector<bool> accepting,
      std::vector<StateId> table);

  std::size_t state_count() const { return accepting_.size(); }
  StateId initial() const { return initial_; }
  bool is_accepting(StateId s) const { return accepting_[s]; }
  StateId next(StateId s, PinLetter l) const { return table_[s * kPinAlphabetSize + label_of(l)]; }
  StateId next(StateId s, Label l) const { return table_[s * kPinAlphabetSize + l]; }

  bool accepts(std::span<const PinLetter> word) const;
  bool accepts(const PinWord& w) const { return accepts(w.letters()); }

 private:
  StateId initial_;
  std::vector<bool> accepting_;
  std::vector<StateId> table_;
};

/// Finite transducer; either side of a transition may be kEpsilon.
struct Transducer {
  struct Transition {
    StateId from;
    Label input;
    Label output;
    StateId to;
  };

  std::size_t state_count = 0;
  StateId initial = 0;
  std::vector<bool> accepting;
  std::vector<Transition> transitions;
  std::vector<std::string> state_names;  // optional, for dumps
};

// ---------------------------------------------------------------------------
// Constructions

/// The three-state strict pin word acceptor (start, V, H), as drawn: a
/// numeral leads to V or to H, V reads U/D into H and H reads L/R into V.
Nfa strict_pin_word_nfa();
/// Its determinized, minimized, completed form.
Dfa strict_pin_word_automaton();
/// Every word over the alphabet.
Dfa universal_automaton();
/// Accepts exactly one word.
Nfa single_word_nfa(std::span<const PinLetter> word);

Nfa to_nfa(const Dfa& d);
Nfa nfa_union(const Nfa& a, const Nfa& b);
Nfa nfa_union(std::span<const Nfa> machines);
Nfa intersect(const Nfa& a, const Nfa& b);

/// Subset construction; throws ResourceError past state_cap subset states.
Dfa determinize(const Nfa& a, std::size_t state_cap = kDefaultStateCap);
/// Hopcroft partition refinement; unreachable states are dropped and the
/// result is numbered in breadth-first order from the initial state.
Dfa minimize(const Dfa& d);
Dfa complement(const Dfa& d);

enum class ProductMode { Intersection, Union, Difference };
Dfa product(const Dfa& a, const Dfa& b, ProductMode mode,
            std::size_t state_cap = kDefaultStateCap);

/// Universe language minus the language of a, minimized.
Dfa complement_within(const Nfa& a, const Dfa& universe,
                      std::size_t state_cap = kDefaultStateCap);

/// Keeps states that are reachable and co-reachable.
Nfa trim(const Nfa& a);
bool is_empty(const Nfa& a);
bool is_empty(const Dfa& d);
/// True iff some accepted walk passes through a cycle that reads at least
/// one letter.
bool is_infinite(const Nfa& a);
bool is_infinite(const Dfa& d);

/// Accepted words of length exactly n; throws std::overflow_error past 2^64.
std::uint64_t count_words(const Dfa& d, std::size_t n);

/// Automaton for T({u}) over states (position in u, transducer state).
Nfa apply_transducer(const Transducer& t, std::span<const PinLetter> u);
inline Nfa apply_transducer(const Transducer& t, const PinWord& u) {
  return apply_transducer(t, u.letters());
}

/// Whether t can read u while writing w, by direct search over
/// (position in u, position in w, state). Independent of apply_transducer.
bool transduces(const Transducer& t, std::span<const PinLetter> u,
                std::span<const PinLetter> w);

// ---------------------------------------------------------------------------
// Text dumps: header lines "initial<TAB>s" and "accepting<TAB>s s ...",
// then one "from<TAB>label<TAB>to" line per transition.

std::string to_text(const Nfa& a);
std::string to_text(const Dfa& d);
std::string to_text(const Transducer& t);

}  // namespace pinsimple
