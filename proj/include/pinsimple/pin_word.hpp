#pragma once

#include <boost/rational.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pinsimple/permutation.hpp"

namespace pinsimple {

/// Letters of the pin alphabet. The numerals name quadrants; the directions
/// name the side on which a pin is placed. Enumerator values double as
/// automaton letter indices.
enum class PinLetter : std::uint8_t { Q1, Q2, Q3, Q4, L, R, U, D };

constexpr std::size_t kPinAlphabetSize = 8;
constexpr std::array<PinLetter, kPinAlphabetSize> kPinAlphabet = {
    PinLetter::Q1, PinLetter::Q2, PinLetter::Q3, PinLetter::Q4,
    PinLetter::L,  PinLetter::R,  PinLetter::U,  PinLetter::D};

constexpr bool is_numeral(PinLetter l) { return static_cast<int>(l) < 4; }
constexpr bool is_horizontal(PinLetter l) { return l == PinLetter::L || l == PinLetter::R; }
constexpr bool is_vertical(PinLetter l) { return l == PinLetter::U || l == PinLetter::D; }
/// 1..4 for numerals.
constexpr int quadrant_of(PinLetter numeral) { return static_cast<int>(numeral) + 1; }
constexpr PinLetter numeral_for(int quadrant) { return static_cast<PinLetter>(quadrant - 1); }

char to_char(PinLetter l);
std::optional<PinLetter> letter_from_char(char c);

/// True iff next may follow prev in a pin word (rules W2 and W3).
constexpr bool may_follow(PinLetter prev, PinLetter next) {
  if (is_horizontal(prev)) return !is_horizontal(next);
  if (is_vertical(prev)) return !is_vertical(next);
  return true;
}

/// Quadrant of a pin placed in direction d after a point in quadrant q. The
/// origin lies in every bounding rectangle, so a separating pin keeps the
/// sign of the coordinate it is sandwiched on.
int quadrant_after(int quadrant, PinLetter direction);

/// Thrown by validation; index() is the 1-based offending position.
class PinWordError : public std::invalid_argument {
 public:
  PinWordError(std::size_t index, const std::string& what)
      : std::invalid_argument(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// A nonempty word over the pin alphabet that begins with a numeral and
/// alternates horizontal and vertical directions between numerals.
class PinWord {
 public:
  static PinWord validate(std::string_view text);
  static PinWord validate(std::span<const PinLetter> letters);

  std::size_t size() const { return letters_.size(); }
  PinLetter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const PinLetter> letters() const { return letters_; }

  std::size_t numeral_count() const;
  bool is_strict() const { return numeral_count() == 1; }

  std::string to_string() const;

  friend auto operator<=>(const PinWord&, const PinWord&) = default;
  friend bool operator==(const PinWord&, const PinWord&) = default;

 private:
  explicit PinWord(std::vector<PinLetter> letters) : letters_(std::move(letters)) {}
  std::vector<PinLetter> letters_;
};

struct PinWordHash {
  std::size_t operator()(const PinWord& w) const noexcept;
};

/// Maximal numeral-led factors; their concatenation is the word.
std::vector<PinWord> factorize(const PinWord& w);

// ---------------------------------------------------------------------------
// Geometric realization

using Coord = boost::rational<std::int64_t>;

struct Point {
  Coord x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Points p1..pm of a realization; the origin anchor is implicit.
using PointSequence = std::vector<Point>;

/// Chooses where new coordinates go. The canonical chooser steps one unit
/// past the span and takes gap midpoints.
class PlacementChooser {
 public:
  virtual ~PlacementChooser() = default;
  /// A positive distance to step beyond the current span.
  virtual Coord step_beyond() { return Coord(1); }
  /// A fraction strictly inside (0, 1) of a separation gap.
  virtual Coord gap_fraction() { return Coord(1, 2); }
};

/// Incremental realization of a pin word, one letter at a time. Used
/// directly by the depth-first enumerators so prefixes share work.
class PinRealizer {
 public:
  /// Words longer than this would overflow the 64-bit rational coordinates.
  static constexpr std::size_t kMaxLength = 48;

  explicit PinRealizer(PlacementChooser* chooser = nullptr);

  /// Appends a letter; throws PinWordError if it breaks W1-W3.
  void push(PinLetter letter);
  void pop();

  std::size_t size() const { return points_.size(); }
  const PointSequence& points() const { return points_; }
  /// Quadrant (1..4) of each point relative to the origin.
  int quadrant(std::size_t i) const;
  Permutation permutation() const;

 private:
  struct Box {
    Coord min_x, max_x, min_y, max_y;
  };

  PlacementChooser& chooser() { return chooser_ ? *chooser_ : canonical_; }

  PlacementChooser* chooser_;  // null selects canonical_
  PlacementChooser canonical_;
  std::vector<PinLetter> letters_;
  PointSequence points_;
  std::vector<Box> boxes_;  // boxes_[k] bounds the origin and the first k points
};

/// Canonical realization: numerals go strictly beyond the whole span
/// (origin included) on their quadrant's sides; a direction pin goes one
/// step beyond the span on its side and sits at the midpoint of the gap
/// that separates the previous point from everything before it.
PointSequence realize(const PinWord& w, PlacementChooser* chooser = nullptr);

Permutation perm_of(const PinWord& w);

/// Externality and separation, checked point by point.
bool is_proper_pin_sequence(std::span<const Point> points);

/// u precedes w in the factor-embedding order. Quadrants of w's letters are
/// read from w's canonical realization, relative to the origin.
bool preceq(const PinWord& u, const PinWord& w);

/// Exhaustive search over factor placements; reference for preceq.
bool preceq_naive(const PinWord& u, const PinWord& w);

constexpr std::size_t kDefaultPinWordLengthCap = 10;

/// All pin words whose permutation is p, sorted.
std::vector<PinWord> pin_words_of(const Permutation& p,
                                  std::size_t cap = kDefaultPinWordLengthCap);

/// Visits every pin word of length n (strict ones only if strict_only).
void for_each_pin_word(std::size_t n, bool strict_only,
                       const std::function<void(const PinWord&)>& visit);

}  // namespace pinsimple
