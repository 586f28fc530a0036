#include "pinsimple/automata.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pinsimple {

std::string label_text(Label label) {
  if (label == kEpsilon) return "eps";
  return std::string(1, to_char(static_cast<PinLetter>(label)));
}

// ---------------------------------------------------------------------------
// Nfa

Nfa::Nfa(std::size_t state_count, StateId initial, std::vector<bool> accepting,
         const std::vector<Transition>& transitions)
    : initial_(initial), accepting_(std::move(accepting)), arcs_(state_count) {
  if (state_count == 0 || accepting_.size() != state_count || initial >= state_count) {
    throw std::invalid_argument("nfa: bad state count or initial state");
  }
  for (const auto& t : transitions) {
    if (t.from >= state_count || t.to >= state_count || t.label > kEpsilon) {
      throw std::invalid_argument("nfa: transition endpoint is not a state");
    }
    arcs_[t.from].push_back(Arc{t.label, t.to});
  }
  for (auto& out : arcs_) {
    std::sort(out.begin(), out.end(), [](const Arc& a, const Arc& b) {
      return a.label != b.label ? a.label < b.label : a.target < b.target;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Arc& a, const Arc& b) {
                            return a.label == b.label && a.target == b.target;
                          }),
              out.end());
  }

  closures_.resize(state_count);
  std::vector<StateId> stack;
  std::vector<char> seen(state_count, 0);
  for (StateId s = 0; s < state_count; ++s) {
    auto& closure = closures_[s];
    stack.assign(1, s);
    seen[s] = 1;
    while (!stack.empty()) {
      const StateId q = stack.back();
      stack.pop_back();
      closure.push_back(q);
      for (const auto& arc : arcs_[q]) {
        if (arc.label == kEpsilon && !seen[arc.target]) {
          seen[arc.target] = 1;
          stack.push_back(arc.target);
        }
      }
    }
    for (auto q : closure) seen[q] = 0;
    std::sort(closure.begin(), closure.end());
  }
}

std::size_t Nfa::transition_count() const {
  std::size_t n = 0;
  for (const auto& out : arcs_) n += out.size();
  return n;
}

namespace {

// Epsilon-closed set of states reached from `from` on `label`.
std::vector<StateId> step(const Nfa& a, const std::vector<StateId>& from, Label label,
                          std::vector<char>& mark) {
  std::vector<StateId> out;
  for (auto q : from) {
    for (const auto& arc : a.arcs(q)) {
      if (arc.label != label) continue;
      for (auto r : a.epsilon_closure(arc.target)) {
        if (!mark[r]) {
          mark[r] = 1;
          out.push_back(r);
        }
      }
    }
  }
  for (auto r : out) mark[r] = 0;
  std::sort(out.begin(), out.end());
  return out;
}

struct StateSetHash {
  std::size_t operator()(const std::vector<StateId>& v) const noexcept {
    std::size_t h = v.size();
    for (auto s : v) h = (h ^ s) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace

bool Nfa::accepts(std::span<const PinLetter> word) const {
  std::vector<char> mark(state_count(), 0);
  auto closure = epsilon_closure(initial_);
  std::vector<StateId> current(closure.begin(), closure.end());
  for (auto l : word) {
    current = step(*this, current, label_of(l), mark);
    if (current.empty()) return false;
  }
  return std::any_of(current.begin(), current.end(), [&](StateId s) { return accepting_[s]; });
}

// ---------------------------------------------------------------------------
// Dfa

Dfa::Dfa(std::size_t state_count, StateId initial, std::vector<bool> accepting,
         std::vector<StateId> table)
    : initial_(initial), accepting_(std::move(accepting)), table_(std::move(table)) {
  if (state_count == 0 || accepting_.size() != state_count || initial >= state_count ||
      table_.size() != state_count * kPinAlphabetSize) {
    throw std::invalid_argument("dfa: transition table is not total");
  }
  for (auto t : table_) {
    if (t >= state_count) throw std::invalid_argument("dfa: successor is not a state");
  }
}

bool Dfa::accepts(std::span<const PinLetter> word) const {
  StateId s = initial_;
  for (auto l : word) s = next(s, l);
  return accepting_[s];
}

// ---------------------------------------------------------------------------
// Constructions

Nfa strict_pin_word_nfa() {
  enum : StateId { kStart, kV, kH };
  std::vector<Nfa::Transition> arcs;
  for (auto l : kPinAlphabet) {
    if (is_numeral(l)) {
      arcs.push_back({kStart, label_of(l), kV});
      arcs.push_back({kStart, label_of(l), kH});
    } else if (is_vertical(l)) {
      arcs.push_back({kV, label_of(l), kH});
    } else {
      arcs.push_back({kH, label_of(l), kV});
    }
  }
  // Pin words are nonempty, so the start state does not accept.
  return Nfa(3, kStart, {false, true, true}, arcs);
}

Dfa strict_pin_word_automaton() { return minimize(determinize(strict_pin_word_nfa())); }

Dfa universal_automaton() {
  return Dfa(1, 0, {true}, std::vector<StateId>(kPinAlphabetSize, 0));
}

Nfa single_word_nfa(std::span<const PinLetter> word) {
  std::vector<Nfa::Transition> arcs;
  for (std::size_t i = 0; i < word.size(); ++i) {
    arcs.push_back({static_cast<StateId>(i), label_of(word[i]), static_cast<StateId>(i + 1)});
  }
  std::vector<bool> accepting(word.size() + 1, false);
  accepting.back() = true;
  return Nfa(word.size() + 1, 0, std::move(accepting), arcs);
}

Nfa to_nfa(const Dfa& d) {
  std::vector<Nfa::Transition> arcs;
  arcs.reserve(d.state_count() * kPinAlphabetSize);
  std::vector<bool> accepting(d.state_count());
  for (StateId s = 0; s < d.state_count(); ++s) {
    accepting[s] = d.is_accepting(s);
    for (Label l = 0; l < kPinAlphabetSize; ++l) arcs.push_back({s, l, d.next(s, l)});
  }
  return Nfa(d.state_count(), d.initial(), std::move(accepting), arcs);
}

namespace {

void append_shifted(const Nfa& a, StateId offset, std::vector<Nfa::Transition>& arcs,
                    std::vector<bool>& accepting) {
  for (StateId s = 0; s < a.state_count(); ++s) {
    accepting.push_back(a.is_accepting(s));
    for (const auto& arc : a.arcs(s)) arcs.push_back({s + offset, arc.label, arc.target + offset});
  }
}

}  // namespace

Nfa nfa_union(std::span<const Nfa> machines) {
  std::vector<Nfa::Transition> arcs;
  std::vector<bool> accepting{false};
  StateId offset = 1;
  for (const auto& m : machines) {
    arcs.push_back({0, kEpsilon, m.initial() + offset});
    append_shifted(m, offset, arcs, accepting);
    offset += static_cast<StateId>(m.state_count());
  }
  return Nfa(accepting.size(), 0, accepting, arcs);
}

Nfa nfa_union(const Nfa& a, const Nfa& b) {
  const std::array<Nfa, 2> pair{a, b};
  return nfa_union(pair);
}

Nfa intersect(const Nfa& a, const Nfa& b) {
  std::unordered_map<std::uint64_t, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  std::vector<Nfa::Transition> arcs;
  auto id_of = [&](StateId p, StateId q) {
    const auto key = (static_cast<std::uint64_t>(p) << 32) | q;
    auto [it, inserted] = ids.emplace(key, static_cast<StateId>(pairs.size()));
    if (inserted) pairs.emplace_back(p, q);
    return it->second;
  };
  id_of(a.initial(), b.initial());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [p, q] = pairs[k];
    const auto from = static_cast<StateId>(k);
    for (const auto& x : a.arcs(p)) {
      if (x.label == kEpsilon) {
        arcs.push_back({from, kEpsilon, id_of(x.target, q)});
        continue;
      }
      for (const auto& y : b.arcs(q)) {
        if (y.label == x.label) arcs.push_back({from, x.label, id_of(x.target, y.target)});
      }
    }
    for (const auto& y : b.arcs(q)) {
      if (y.label == kEpsilon) arcs.push_back({from, kEpsilon, id_of(p, y.target)});
    }
  }
  std::vector<bool> accepting(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    accepting[k] = a.is_accepting(pairs[k].first) && b.is_accepting(pairs[k].second);
  }
  return Nfa(pairs.size(), 0, std::move(accepting), arcs);
}

Dfa determinize(const Nfa& a, std::size_t state_cap) {
  std::unordered_map<std::vector<StateId>, StateId, StateSetHash> ids;
  std::vector<std::vector<StateId>> sets;
  std::vector<StateId> table;
  std::vector<char> mark(a.state_count(), 0);

  auto id_of = [&](std::vector<StateId> set) {
    auto it = ids.find(set);
    if (it != ids.end()) return it->second;
    if (sets.size() >= state_cap) {
      throw ResourceError("state-cap", state_cap,
                          "determinization exceeded the state cap of " +
                              std::to_string(state_cap));
    }
    const auto id = static_cast<StateId>(sets.size());
    ids.emplace(set, id);
    sets.push_back(std::move(set));
    return id;
  };

  auto start = a.epsilon_closure(a.initial());
  id_of(std::vector<StateId>(start.begin(), start.end()));
  for (std::size_t k = 0; k < sets.size(); ++k) {
    for (Label l = 0; l < kPinAlphabetSize; ++l) {
      // Copy: id_of may grow `sets` and invalidate references into it.
      auto target = step(a, sets[k], l, mark);
      table.push_back(id_of(std::move(target)));
    }
  }
  std::vector<bool> accepting(sets.size());
  for (std::size_t k = 0; k < sets.size(); ++k) {
    accepting[k] = std::any_of(sets[k].begin(), sets[k].end(),
                               [&](StateId s) { return a.is_accepting(s); });
  }
  return Dfa(sets.size(), 0, std::move(accepting), std::move(table));
}

Dfa minimize(const Dfa& d) {
  // Restrict to reachable states.
  std::vector<StateId> index(d.state_count(), std::numeric_limits<StateId>::max());
  std::vector<StateId> order{d.initial()};
  index[d.initial()] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (Label l = 0; l < kPinAlphabetSize; ++l) {
      const auto t = d.next(order[k], l);
      if (index[t] == std::numeric_limits<StateId>::max()) {
        index[t] = static_cast<StateId>(order.size());
        order.push_back(t);
      }
    }
  }
  const std::size_t n = order.size();
  std::vector<StateId> delta(n * kPinAlphabetSize);
  std::vector<std::vector<std::vector<StateId>>> preds(kPinAlphabetSize,
                                                       std::vector<std::vector<StateId>>(n));
  for (StateId s = 0; s < n; ++s) {
    for (Label l = 0; l < kPinAlphabetSize; ++l) {
      const auto t = index[d.next(order[s], l)];
      delta[s * kPinAlphabetSize + l] = t;
      preds[l][t].push_back(s);
    }
  }

  // Partition refinement.
  std::vector<std::vector<StateId>> blocks;
  std::vector<std::size_t> block_of(n), pos_in_block(n);
  {
    std::vector<StateId> acc, rej;
    for (StateId s = 0; s < n; ++s) (d.is_accepting(order[s]) ? acc : rej).push_back(s);
    for (auto* part : {&acc, &rej}) {
      if (part->empty()) continue;
      for (std::size_t i = 0; i < part->size(); ++i) {
        block_of[(*part)[i]] = blocks.size();
        pos_in_block[(*part)[i]] = i;
      }
      blocks.push_back(std::move(*part));
    }
  }
  std::vector<std::array<char, kPinAlphabetSize>> queued;
  std::deque<std::pair<std::size_t, Label>> work;
  auto enqueue = [&](std::size_t b, Label l) {
    if (queued.size() <= b) queued.resize(b + 1, {});
    if (!queued[b][l]) {
      queued[b][l] = 1;
      work.emplace_back(b, l);
    }
  };
  const std::size_t first = blocks.size() == 2 && blocks[1].size() < blocks[0].size() ? 1 : 0;
  for (Label l = 0; l < kPinAlphabetSize; ++l) enqueue(first, l);

  std::vector<std::size_t> marked_count;
  std::vector<std::size_t> touched;
  std::vector<StateId> splitter_preds;
  std::vector<char> in_x(n, 0);
  while (!work.empty()) {
    const auto [b, l] = work.front();
    work.pop_front();
    queued[b][l] = 0;

    splitter_preds.clear();
    for (auto t : blocks[b]) {
      for (auto s : preds[l][t]) {
        if (!in_x[s]) {
          in_x[s] = 1;
          splitter_preds.push_back(s);
        }
      }
    }
    marked_count.resize(blocks.size(), 0);
    touched.clear();
    for (auto s : splitter_preds) {
      const auto y = block_of[s];
      if (marked_count[y]++ == 0) touched.push_back(y);
    }
    for (auto y : touched) {
      if (marked_count[y] == blocks[y].size()) {
        marked_count[y] = 0;
        continue;
      }
      // Move the marked states of y into a new block z.
      const std::size_t z = blocks.size();
      blocks.emplace_back();
      auto& ys = blocks[y];
      for (std::size_t i = 0; i < ys.size();) {
        const auto s = ys[i];
        if (in_x[s]) {
          ys[i] = ys.back();
          pos_in_block[ys[i]] = i;
          ys.pop_back();
          block_of[s] = z;
          pos_in_block[s] = blocks[z].size();
          blocks[z].push_back(s);
        } else {
          ++i;
        }
      }
      marked_count[y] = 0;
      marked_count.push_back(0);
      for (Label c = 0; c < kPinAlphabetSize; ++c) {
        if (queued.size() > y && queued[y][c]) {
          enqueue(z, c);
        } else {
          enqueue(blocks[y].size() <= blocks[z].size() ? y : z, c);
        }
      }
    }
    for (auto s : splitter_preds) in_x[s] = 0;
  }

  // Number blocks breadth-first from the initial state.
  std::vector<StateId> block_id(blocks.size(), std::numeric_limits<StateId>::max());
  std::vector<std::size_t> block_order{block_of[0]};
  block_id[block_of[0]] = 0;
  std::vector<StateId> table;
  for (std::size_t k = 0; k < block_order.size(); ++k) {
    const auto rep = blocks[block_order[k]].front();
    for (Label c = 0; c < kPinAlphabetSize; ++c) {
      const auto tb = block_of[delta[rep * kPinAlphabetSize + c]];
      if (block_id[tb] == std::numeric_limits<StateId>::max()) {
        block_id[tb] = static_cast<StateId>(block_order.size());
        block_order.push_back(tb);
      }
      table.push_back(block_id[tb]);
    }
  }
  std::vector<bool> accepting(block_order.size());
  for (std::size_t k = 0; k < block_order.size(); ++k) {
    accepting[k] = d.is_accepting(order[blocks[block_order[k]].front()]);
  }
  return Dfa(block_order.size(), 0, std::move(accepting), std::move(table));
}

Dfa complement(const Dfa& d) {
  std::vector<bool> accepting(d.state_count());
  std::vector<StateId> table(d.state_count() * kPinAlphabetSize);
  for (StateId s = 0; s < d.state_count(); ++s) {
    accepting[s] = !d.is_accepting(s);
    for (Label l = 0; l < kPinAlphabetSize; ++l) table[s * kPinAlphabetSize + l] = d.next(s, l);
  }
  return Dfa(d.state_count(), d.initial(), std::move(accepting), std::move(table));
}

Dfa product(const Dfa& a, const Dfa& b, ProductMode mode, std::size_t state_cap) {
  std::unordered_map<std::uint64_t, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  std::vector<StateId> table;
  auto id_of = [&](StateId p, StateId q) {
    const auto key = (static_cast<std::uint64_t>(p) << 32) | q;
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    if (pairs.size() >= state_cap) {
      throw ResourceError("state-cap", state_cap,
                          "product automaton exceeded the state cap of " +
                              std::to_string(state_cap));
    }
    const auto id = static_cast<StateId>(pairs.size());
    ids.emplace(key, id);
    pairs.emplace_back(p, q);
    return id;
  };
  id_of(a.initial(), b.initial());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    for (Label l = 0; l < kPinAlphabetSize; ++l) {
      const auto [p, q] = pairs[k];
      table.push_back(id_of(a.next(p, l), b.next(q, l)));
    }
  }
  std::vector<bool> accepting(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const bool x = a.is_accepting(pairs[k].first), y = b.is_accepting(pairs[k].second);
    switch (mode) {
      case ProductMode::Intersection: accepting[k] = x && y; break;
      case ProductMode::Union: accepting[k] = x || y; break;
      case ProductMode::Difference: accepting[k] = x && !y; break;
    }
  }
  return Dfa(pairs.size(), 0, std::move(accepting), std::move(table));
}

Dfa complement_within(const Nfa& a, const Dfa& universe, std::size_t state_cap) {
  const auto da = minimize(determinize(a, state_cap));
  return minimize(product(universe, complement(da), ProductMode::Intersection, state_cap));
}

namespace {

std::vector<char> reachable_from_initial(const Nfa& a) {
  std::vector<char> seen(a.state_count(), 0);
  std::vector<StateId> stack{a.initial()};
  seen[a.initial()] = 1;
  while (!stack.empty()) {
    const auto s = stack.back();
    stack.pop_back();
    for (const auto& arc : a.arcs(s)) {
      if (!seen[arc.target]) {
        seen[arc.target] = 1;
        stack.push_back(arc.target);
      }
    }
  }
  return seen;
}

std::vector<char> coreachable(const Nfa& a) {
  std::vector<std::vector<StateId>> back(a.state_count());
  for (StateId s = 0; s < a.state_count(); ++s) {
    for (const auto& arc : a.arcs(s)) back[arc.target].push_back(s);
  }
  std::vector<char> seen(a.state_count(), 0);
  std::vector<StateId> stack;
  for (StateId s = 0; s < a.state_count(); ++s) {
    if (a.is_accepting(s)) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const auto s = stack.back();
    stack.pop_back();
    for (auto p : back[s]) {
      if (!seen[p]) {
        seen[p] = 1;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

// Equivalent machine without empty moves.
Nfa remove_epsilon(const Nfa& a) {
  std::vector<Nfa::Transition> arcs;
  std::vector<bool> accepting(a.state_count(), false);
  for (StateId s = 0; s < a.state_count(); ++s) {
    for (auto q : a.epsilon_closure(s)) {
      if (a.is_accepting(q)) accepting[s] = true;
      for (const auto& arc : a.arcs(q)) {
        if (arc.label != kEpsilon) arcs.push_back({s, arc.label, arc.target});
      }
    }
  }
  return Nfa(a.state_count(), a.initial(), std::move(accepting), arcs);
}

}  // namespace

Nfa trim(const Nfa& a) {
  const auto fwd = reachable_from_initial(a);
  const auto bwd = coreachable(a);
  if (!bwd[a.initial()]) return Nfa();
  std::vector<StateId> index(a.state_count(), std::numeric_limits<StateId>::max());
  StateId next = 0;
  for (StateId s = 0; s < a.state_count(); ++s) {
    if (fwd[s] && bwd[s]) index[s] = next++;
  }
  std::vector<Nfa::Transition> arcs;
  std::vector<bool> accepting(next);
  for (StateId s = 0; s < a.state_count(); ++s) {
    if (index[s] == std::numeric_limits<StateId>::max()) continue;
    accepting[index[s]] = a.is_accepting(s);
    for (const auto& arc : a.arcs(s)) {
      if (index[arc.target] != std::numeric_limits<StateId>::max()) {
        arcs.push_back({index[s], arc.label, index[arc.target]});
      }
    }
  }
  return Nfa(next, index[a.initial()], std::move(accepting), arcs);
}

bool is_empty(const Nfa& a) {
  const auto fwd = reachable_from_initial(a);
  for (StateId s = 0; s < a.state_count(); ++s) {
    if (fwd[s] && a.is_accepting(s)) return false;
  }
  return true;
}

bool is_empty(const Dfa& d) { return is_empty(to_nfa(d)); }

bool is_infinite(const Nfa& a) {
  const Nfa t = trim(remove_epsilon(a));
  // Iterative depth-first search for a back edge.
  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> colour(t.state_count(), kWhite);
  std::vector<std::pair<StateId, std::size_t>> stack;
  for (StateId root = 0; root < t.state_count(); ++root) {
    if (colour[root] != kWhite) continue;
    stack.emplace_back(root, 0);
    colour[root] = kGrey;
    while (!stack.empty()) {
      auto& [s, next_arc] = stack.back();
      const auto arcs = t.arcs(s);
      if (next_arc == arcs.size()) {
        colour[s] = kBlack;
        stack.pop_back();
        continue;
      }
      const auto target = arcs[next_arc++].target;
      if (colour[target] == kGrey) return true;
      if (colour[target] == kWhite) {
        colour[target] = kGrey;
        stack.emplace_back(target, 0);
      }
    }
  }
  return false;
}

bool is_infinite(const Dfa& d) { return is_infinite(to_nfa(d)); }

std::uint64_t count_words(const Dfa& d, std::size_t n) {
  // ways[s]: accepted words of the current remaining length starting at s.
  std::vector<std::uint64_t> ways(d.state_count()), next(d.state_count());
  for (StateId s = 0; s < d.state_count(); ++s) ways[s] = d.is_accepting(s) ? 1 : 0;
  for (std::size_t len = 0; len < n; ++len) {
    for (StateId s = 0; s < d.state_count(); ++s) {
      std::uint64_t total = 0;
      for (Label l = 0; l < kPinAlphabetSize; ++l) {
        if (__builtin_add_overflow(total, ways[d.next(s, l)], &total)) {
          throw std::overflow_error("count_words: more than 2^64 words");
        }
      }
      next[s] = total;
    }
    ways.swap(next);
  }
  return ways[d.initial()];
}

Nfa apply_transducer(const Transducer& t, std::span<const PinLetter> u) {
  const auto width = static_cast<StateId>(t.state_count);
  const std::size_t positions = u.size() + 1;
  auto id = [&](std::size_t i, StateId s) { return static_cast<StateId>(i * width + s); };
  std::vector<Nfa::Transition> arcs;
  for (const auto& tr : t.transitions) {
    if (tr.input == kEpsilon) {
      for (std::size_t i = 0; i < positions; ++i) arcs.push_back({id(i, tr.from), tr.output, id(i, tr.to)});
    } else {
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (label_of(u[i]) == tr.input) arcs.push_back({id(i, tr.from), tr.output, id(i + 1, tr.to)});
      }
    }
  }
  std::vector<bool> accepting(positions * width, false);
  for (StateId s = 0; s < width; ++s) accepting[id(u.size(), s)] = t.accepting[s];
  return trim(Nfa(positions * width, id(0, t.initial), std::move(accepting), arcs));
}

bool transduces(const Transducer& t, std::span<const PinLetter> u,
                std::span<const PinLetter> w) {
  const std::size_t nu = u.size() + 1, nw = w.size() + 1;
  std::vector<char> seen(nu * nw * t.state_count, 0);
  struct Config {
    std::size_t i, j;
    StateId s;
  };
  std::vector<Config> stack{{0, 0, t.initial}};
  seen[t.initial] = 1;
  while (!stack.empty()) {
    const auto c = stack.back();
    stack.pop_back();
    if (c.i == u.size() && c.j == w.size() && t.accepting[c.s]) return true;
    for (const auto& tr : t.transitions) {
      if (tr.from != c.s) continue;
      std::size_t i = c.i, j = c.j;
      if (tr.input != kEpsilon) {
        if (i == u.size() || label_of(u[i]) != tr.input) continue;
        ++i;
      }
      if (tr.output != kEpsilon) {
        if (j == w.size() || label_of(w[j]) != tr.output) continue;
        ++j;
      }
      const auto key = (i * nw + j) * t.state_count + tr.to;
      if (!seen[key]) {
        seen[key] = 1;
        stack.push_back({i, j, tr.to});
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

namespace {

std::string accepting_line(std::size_t n, const std::function<bool(StateId)>& acc) {
  std::string line = "accepting\t";
  bool first = true;
  for (StateId s = 0; s < n; ++s) {
    if (!acc(s)) continue;
    if (!first) line.push_back(' ');
    line += std::to_string(s);
    first = false;
  }
  return line + "\n";
}

}  // namespace

std::string to_text(const Nfa& a) {
  std::ostringstream out;
  out << "initial\t" << a.initial() << "\n"
      << accepting_line(a.state_count(), [&](StateId s) { return a.is_accepting(s); });
  for (StateId s = 0; s < a.state_count(); ++s) {
    for (const auto& arc : a.arcs(s)) out << s << '\t' << label_text(arc.label) << '\t' << arc.target << '\n';
  }
  return out.str();
}

std::string to_text(const Dfa& d) {
  std::ostringstream out;
  out << "initial\t" << d.initial() << "\n"
      << accepting_line(d.state_count(), [&](StateId s) { return d.is_accepting(s); });
  for (StateId s = 0; s < d.state_count(); ++s) {
    for (Label l = 0; l < kPinAlphabetSize; ++l) out << s << '\t' << label_text(l) << '\t' << d.next(s, l) << '\n';
  }
  return out.str();
}

std::string to_text(const Transducer& t) {
  auto name = [&](StateId s) {
    return s < t.state_names.size() ? t.state_names[s] : std::to_string(s);
  };
  std::ostringstream out;
  out << "initial\t" << name(t.initial) << "\naccepting\t";
  bool first = true;
  for (StateId s = 0; s < t.state_count; ++s) {
    if (!t.accepting[s]) continue;
    out << (first ? "" : " ") << name(s);
    first = false;
  }
  out << "\n";
  for (const auto& tr : t.transitions) {
    out << name(tr.from) << '\t' << label_text(tr.input) << ':' << label_text(tr.output) << '\t'
        << name(tr.to) << '\n';
  }
  return out.str();
}

}  // namespace pinsimple
