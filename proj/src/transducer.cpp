#include "pinsimple/decision.hpp"

namespace pinsimple {

namespace {

constexpr StateId kS = 0;
constexpr StateId F(int q) { return static_cast<StateId>(q); }
constexpr StateId C(int q) { return static_cast<StateId>(4 + q); }

constexpr Label N(int q) { return static_cast<Label>(q - 1); }
constexpr Label kL = static_cast<Label>(PinLetter::L);
constexpr Label kR = static_cast<Label>(PinLetter::R);
constexpr Label kU = static_cast<Label>(PinLetter::U);
constexpr Label kD = static_cast<Label>(PinLetter::D);

// The two directions that keep a point in quadrant q.
constexpr std::array<std::array<Label, 2>, 5> kStay = {{
    {0, 0}, {kR, kU}, {kL, kU}, {kL, kD}, {kR, kD}}};

}  // namespace

Transducer pin_transducer() {
  Transducer t;
  t.state_count = 9;
  t.initial = kS;
  t.accepting.assign(9, true);
  t.accepting[kS] = false;
  t.state_names = {"S", "F1", "F2", "F3", "F4", "C1", "C2", "C3", "C4"};

  auto& tr = t.transitions;
  for (int q = 1; q <= 4; ++q) {
    tr.push_back({kS, N(q), N(q), C(q)});
    tr.push_back({kS, kEpsilon, N(q), F(q)});
  }
  for (int q = 1; q <= 4; ++q) {
    for (auto d : kStay[q]) {
      tr.push_back({F(q), kEpsilon, d, F(q)});
      tr.push_back({C(q), d, d, C(q)});
      tr.push_back({F(q), N(q), d, C(q)});
      tr.push_back({C(q), kEpsilon, d, F(q)});
    }
  }

  // Moves between neighbouring quadrants, clockwise then anticlockwise.
  struct Ring {
    int from;
    Label dir;
    int to;
  };
  constexpr std::array<Ring, 8> ring = {{{1, kL, 2}, {2, kD, 3}, {3, kR, 4}, {4, kU, 1},
                                         {1, kD, 4}, {4, kL, 3}, {3, kU, 2}, {2, kR, 1}}};
  for (const auto& r : ring) {
    tr.push_back({F(r.from), kEpsilon, r.dir, F(r.to)});
    tr.push_back({C(r.from), r.dir, r.dir, C(r.to)});
    tr.push_back({F(r.from), N(r.to), r.dir, C(r.to)});
    tr.push_back({C(r.from), kEpsilon, r.dir, F(r.to)});
  }
  return t;
}

}  // namespace pinsimple
