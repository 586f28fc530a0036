#include "pinsimple/pin_word.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace pinsimple {

char to_char(PinLetter l) {
  static constexpr char kChars[] = {'1', '2', '3', '4', 'L', 'R', 'U', 'D'};
  return kChars[static_cast<int>(l)];
}

std::optional<PinLetter> letter_from_char(char c) {
  switch (c) {
    case '1': return PinLetter::Q1;
    case '2': return PinLetter::Q2;
    case '3': return PinLetter::Q3;
    case '4': return PinLetter::Q4;
    case 'L': return PinLetter::L;
    case 'R': return PinLetter::R;
    case 'U': return PinLetter::U;
    case 'D': return PinLetter::D;
    default: return std::nullopt;
  }
}

int quadrant_after(int quadrant, PinLetter direction) {
  const bool right = quadrant == 1 || quadrant == 4;
  const bool up = quadrant == 1 || quadrant == 2;
  bool new_right = right, new_up = up;
  switch (direction) {
    case PinLetter::L: new_right = false; break;
    case PinLetter::R: new_right = true; break;
    case PinLetter::U: new_up = true; break;
    case PinLetter::D: new_up = false; break;
    default: throw std::invalid_argument("quadrant_after needs a direction");
  }
  if (new_up) return new_right ? 1 : 2;
  return new_right ? 4 : 3;
}

PinWord PinWord::validate(std::string_view text) {
  std::vector<PinLetter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto l = letter_from_char(text[i]);
    if (!l) {
      throw PinWordError(i + 1, "pin word '" + std::string(text) + "': bad letter '" +
                                    std::string(1, text[i]) + "' at index " +
                                    std::to_string(i + 1));
    }
    letters.push_back(*l);
  }
  return validate(letters);
}

PinWord PinWord::validate(std::span<const PinLetter> letters) {
  std::string text;
  for (auto l : letters) text.push_back(to_char(l));
  if (letters.empty()) throw PinWordError(0, "empty pin word");
  if (!is_numeral(letters[0])) {
    throw PinWordError(1, "pin word '" + text + "' must begin with a numeral");
  }
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (!may_follow(letters[i - 1], letters[i])) {
      throw PinWordError(i + 1, "pin word '" + text + "': '" + std::string(1, text[i]) +
                                    "' may not follow '" + std::string(1, text[i - 1]) +
                                    "' (index " + std::to_string(i + 1) + ")");
    }
  }
  return PinWord(std::vector<PinLetter>(letters.begin(), letters.end()));
}

std::size_t PinWord::numeral_count() const {
  return static_cast<std::size_t>(std::count_if(letters_.begin(), letters_.end(), is_numeral));
}

std::string PinWord::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (auto l : letters_) out.push_back(to_char(l));
  return out;
}

std::size_t PinWordHash::operator()(const PinWord& w) const noexcept {
  std::size_t h = w.size();
  for (auto l : w.letters()) h = h * 31 + static_cast<std::size_t>(l);
  return h;
}

std::vector<PinWord> factorize(const PinWord& w) {
  std::vector<PinWord> factors;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    if (i == w.size() || is_numeral(w[i])) {
      factors.push_back(PinWord::validate(w.letters().subspan(start, i - start)));
      start = i;
    }
  }
  return factors;
}

// ---------------------------------------------------------------------------

PinRealizer::PinRealizer(PlacementChooser* chooser) : chooser_(chooser) {
  boxes_.push_back(Box{Coord(0), Coord(0), Coord(0), Coord(0)});
}

void PinRealizer::push(PinLetter letter) {
  const std::size_t i = points_.size();
  if (i >= kMaxLength) {
    throw ResourceError("pin-word-length", kMaxLength, "pin word too long to realize exactly");
  }
  if (i == 0 && !is_numeral(letter)) throw PinWordError(1, "pin word must begin with a numeral");
  if (i > 0 && !may_follow(letters_.back(), letter)) {
    throw PinWordError(i + 1, "letter breaks direction alternation");
  }

  auto& pick = chooser();
  const Box& all = boxes_.back();
  Point p;
  if (is_numeral(letter)) {
    const int q = quadrant_of(letter);
    p.x = (q == 1 || q == 4) ? all.max_x + pick.step_beyond() : all.min_x - pick.step_beyond();
    p.y = (q == 1 || q == 2) ? all.max_y + pick.step_beyond() : all.min_y - pick.step_beyond();
  } else {
    // The new pin separates the previous point from the origin and the
    // points before it, so the sandwiched coordinate lies strictly between
    // the previous point and the facing edge of their bounding box.
    const Point& prev = points_.back();
    const Box& before = boxes_[i - 1];
    auto between = [&](const Coord& edge_lo, const Coord& edge_hi, const Coord& c) {
      Coord lo, hi;
      if (c > edge_hi) {
        lo = edge_hi;
        hi = c;
      } else if (c < edge_lo) {
        lo = c;
        hi = edge_lo;
      } else {
        assert(false && "empty separation gap");
        throw std::logic_error("empty separation gap while realizing pin word");
      }
      return lo + (hi - lo) * pick.gap_fraction();
    };
    switch (letter) {
      case PinLetter::L:
        p.x = all.min_x - pick.step_beyond();
        p.y = between(before.min_y, before.max_y, prev.y);
        break;
      case PinLetter::R:
        p.x = all.max_x + pick.step_beyond();
        p.y = between(before.min_y, before.max_y, prev.y);
        break;
      case PinLetter::U:
        p.y = all.max_y + pick.step_beyond();
        p.x = between(before.min_x, before.max_x, prev.x);
        break;
      case PinLetter::D:
        p.y = all.min_y - pick.step_beyond();
        p.x = between(before.min_x, before.max_x, prev.x);
        break;
      default: break;
    }
  }

  Box next = all;
  next.min_x = std::min(next.min_x, p.x);
  next.max_x = std::max(next.max_x, p.x);
  next.min_y = std::min(next.min_y, p.y);
  next.max_y = std::max(next.max_y, p.y);
  letters_.push_back(letter);
  points_.push_back(p);
  boxes_.push_back(next);
}

void PinRealizer::pop() {
  letters_.pop_back();
  points_.pop_back();
  boxes_.pop_back();
}

int PinRealizer::quadrant(std::size_t i) const {
  const auto& p = points_[i];
  const bool right = p.x > 0, up = p.y > 0;
  if (up) return right ? 1 : 2;
  return right ? 4 : 3;
}

Permutation PinRealizer::permutation() const {
  std::vector<std::size_t> by_x(points_.size());
  std::iota(by_x.begin(), by_x.end(), std::size_t{0});
  std::sort(by_x.begin(), by_x.end(),
            [&](std::size_t a, std::size_t b) { return points_[a].x < points_[b].x; });
  std::vector<Coord> ys;
  ys.reserve(points_.size());
  for (auto k : by_x) ys.push_back(points_[k].y);
  return Permutation::pattern_of(std::span<const Coord>(ys));
}

PointSequence realize(const PinWord& w, PlacementChooser* chooser) {
  PinRealizer r(chooser);
  for (auto l : w.letters()) r.push(l);
  return r.points();
}

Permutation perm_of(const PinWord& w) {
  PinRealizer r;
  for (auto l : w.letters()) r.push(l);
  return r.permutation();
}

bool is_proper_pin_sequence(std::span<const Point> points) {
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (points[a].x == points[b].x || points[a].y == points[b].y) {
        throw std::invalid_argument("points share a coordinate");
      }
    }
  }
  if (points.empty()) return true;
  Coord min_x = points[0].x, max_x = points[0].x, min_y = points[0].y, max_y = points[0].y;
  // Bounding box of all points before the previous one.
  Coord old_min_x = 0, old_max_x = 0, old_min_y = 0, old_max_y = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const Point& p = points[i];
    const Point& prev = points[i - 1];
    const bool external = p.x < min_x || p.x > max_x || p.y < min_y || p.y > max_y;
    if (!external) return false;
    if (i >= 2) {
      const bool sep_x = (old_max_x < p.x && p.x < prev.x) || (prev.x < p.x && p.x < old_min_x);
      const bool sep_y = (old_max_y < p.y && p.y < prev.y) || (prev.y < p.y && p.y < old_min_y);
      if (!sep_x && !sep_y) return false;
    }
    old_min_x = min_x;
    old_max_x = max_x;
    old_min_y = min_y;
    old_max_y = max_y;
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  return true;
}

namespace {

struct FactorSpan {
  std::size_t start, length;
};

std::vector<FactorSpan> factor_spans(const PinWord& u) {
  std::vector<FactorSpan> spans;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (is_numeral(u[i])) {
      spans.push_back({i, 1});
    } else {
      ++spans.back().length;
    }
  }
  return spans;
}

// Can factor f of u be matched by the chunk of w starting at s, given that
// the previous chunk ended at gap_start?
template <typename QuadrantFn>
bool chunk_matches(const PinWord& u, const FactorSpan& f, const PinWord& w, std::size_t gap_start,
                   std::size_t s, QuadrantFn&& quadrant_of_w) {
  if (s + f.length > w.size()) return false;
  if (is_numeral(w[s])) {
    if (w[s] != u[f.start]) return false;
  } else {
    if (s == gap_start) return false;
    if (quadrant_of_w(s) != quadrant_of(u[f.start])) return false;
  }
  for (std::size_t k = 1; k < f.length; ++k) {
    if (w[s + k] != u[f.start + k]) return false;
  }
  return true;
}

bool naive_search(const PinWord& u, const std::vector<FactorSpan>& spans, std::size_t factor,
                  const PinWord& w, std::size_t pos, const std::vector<int>& quadrants) {
  if (factor == spans.size()) return true;
  for (std::size_t s = pos; s < w.size(); ++s) {
    if (chunk_matches(u, spans[factor], w, pos, s, [&](std::size_t i) { return quadrants[i]; }) &&
        naive_search(u, spans, factor + 1, w, s + spans[factor].length, quadrants)) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool preceq(const PinWord& u, const PinWord& w) {
  if (u.size() > w.size()) return false;
  PinRealizer r;
  for (auto l : w.letters()) r.push(l);
  const auto spans = factor_spans(u);
  // reach[pos]: the factors handled so far can end exactly at pos in w.
  std::vector<char> reach(w.size() + 1, 0), next(w.size() + 1, 0);
  reach[0] = 1;
  for (const auto& f : spans) {
    std::fill(next.begin(), next.end(), 0);
    bool any = false;
    for (std::size_t pos = 0; pos <= w.size(); ++pos) {
      if (!reach[pos]) continue;
      for (std::size_t s = pos; s + f.length <= w.size(); ++s) {
        if (chunk_matches(u, f, w, pos, s, [&](std::size_t i) { return r.quadrant(i); })) {
          next[s + f.length] = 1;
          any = true;
        }
      }
    }
    if (!any) return false;
    reach.swap(next);
  }
  return true;
}

bool preceq_naive(const PinWord& u, const PinWord& w) {
  // Quadrants tracked letter by letter rather than from coordinates.
  std::vector<int> quadrants(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    quadrants[i] = is_numeral(w[i]) ? quadrant_of(w[i]) : quadrant_after(quadrants[i - 1], w[i]);
  }
  return naive_search(u, factor_spans(u), 0, w, 0, quadrants);
}

namespace {

void pin_word_dfs(PinRealizer& realizer, std::vector<PinLetter>& prefix, std::size_t n,
                  bool strict_only, const std::function<bool(const PinRealizer&)>& keep,
                  const std::function<void(const PinWord&)>& visit) {
  if (prefix.size() == n) {
    visit(PinWord::validate(prefix));
    return;
  }
  for (auto l : kPinAlphabet) {
    if (prefix.empty() ? !is_numeral(l) : !may_follow(prefix.back(), l)) continue;
    if (strict_only && !prefix.empty() && is_numeral(l)) continue;
    prefix.push_back(l);
    realizer.push(l);
    if (!keep || keep(realizer)) pin_word_dfs(realizer, prefix, n, strict_only, keep, visit);
    realizer.pop();
    prefix.pop_back();
  }
}

}  // namespace

std::vector<PinWord> pin_words_of(const Permutation& p, std::size_t cap) {
  if (p.size() > cap) {
    throw ResourceError("pin-word-length-cap", cap,
                        "pin_words_of: length " + std::to_string(p.size()) +
                            " exceeds the cap of " + std::to_string(cap));
  }
  std::vector<PinWord> words;
  if (p.empty()) return words;
  PinRealizer realizer;
  std::vector<PinLetter> prefix;
  pin_word_dfs(
      realizer, prefix, p.size(), false,
      [&](const PinRealizer& r) {
        auto pattern = r.permutation();
        return r.size() == p.size() ? pattern == p : contains(pattern, p);
      },
      [&](const PinWord& w) { words.push_back(w); });
  std::sort(words.begin(), words.end());
  return words;
}

void for_each_pin_word(std::size_t n, bool strict_only,
                       const std::function<void(const PinWord&)>& visit) {
  if (n == 0) return;
  PinRealizer realizer;
  std::vector<PinLetter> prefix;
  pin_word_dfs(realizer, prefix, n, strict_only, nullptr, visit);
}

}  // namespace pinsimple
