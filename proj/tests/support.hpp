#pragma once

#include <random>
#include <string>
#include <vector>

#include "pinsimple/automata.hpp"
#include "pinsimple/permutation.hpp"
#include "pinsimple/pin_word.hpp"

namespace pinsimple::testing {

inline Permutation P(const std::string& text) { return Permutation::parse(text); }
inline PinWord W(const std::string& text) { return PinWord::validate(text); }

inline std::vector<PinWord> pin_words(std::size_t n, bool strict_only) {
  std::vector<PinWord> out;
  for_each_pin_word(n, strict_only, [&](const PinWord& w) { out.push_back(w); });
  return out;
}

inline std::vector<PinWord> pin_words_up_to(std::size_t max_n, bool strict_only) {
  std::vector<PinWord> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for_each_pin_word(n, strict_only, [&](const PinWord& w) { out.push_back(w); });
  }
  return out;
}

inline std::vector<Permutation> permutations_up_to(std::size_t max_n) {
  std::vector<Permutation> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (auto& p : all_permutations(n)) out.push_back(std::move(p));
  }
  return out;
}

/// Any word over the alphabet, not necessarily a valid pin word.
inline std::vector<PinLetter> random_letters(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> pick(0, kPinAlphabetSize - 1);
  std::vector<PinLetter> out(n);
  for (auto& l : out) l = kPinAlphabet[pick(rng)];
  return out;
}

/// A uniformly chosen valid word of length n; strict if requested.
inline PinWord random_pin_word(std::mt19937& rng, std::size_t n, bool strict) {
  std::vector<PinLetter> letters;
  std::uniform_int_distribution<int> quad(1, 4);
  letters.push_back(numeral_for(quad(rng)));
  while (letters.size() < n) {
    std::vector<PinLetter> options;
    for (auto l : kPinAlphabet) {
      if (strict && is_numeral(l)) continue;
      if (may_follow(letters.back(), l)) options.push_back(l);
    }
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    letters.push_back(options[pick(rng)]);
  }
  return PinWord::validate(letters);
}

/// Every word over the alphabet of length at most n.
inline std::vector<std::vector<PinLetter>> all_words_up_to(std::size_t n) {
  std::vector<std::vector<PinLetter>> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= n; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (auto l : kPinAlphabet) {
        auto w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

}  // namespace pinsimple::testing
