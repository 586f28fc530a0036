#include "pinsimple/oscillation.hpp"

#include <set>
#include <stdexcept>

namespace pinsimple {

std::vector<int> inc_osc_prefix(std::size_t n) {
  std::vector<int> seq(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const int k = static_cast<int>((i + 1) / 2);
    seq[i - 1] = i % 2 ? 2 * k + 2 : 2 * k - 1;
  }
  return seq;
}

std::string RankEncoding::to_string() const {
  const bool wide = std::any_of(digits.begin(), digits.end(), [](int d) { return d > 9; });
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (wide && i) out.push_back(',');
    out += std::to_string(digits[i]);
  }
  return out;
}

RankEncoding rank_encoding(const Permutation& p) {
  RankEncoding d;
  d.digits.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) d.digits[i] += p[j] < p[i];
  }
  return d;
}

Permutation rank_decode(const RankEncoding& d) {
  const std::size_t n = d.digits.size();
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 1);
  std::vector<int> entries;
  for (std::size_t i = 0; i < n; ++i) {
    const int di = d.digits[i];
    if (di < 0 || static_cast<std::size_t>(di) >= remaining.size()) {
      throw std::invalid_argument("rank encoding digit " + std::to_string(di) + " at position " +
                                  std::to_string(i + 1) + " is out of range");
    }
    entries.push_back(remaining[di]);
    remaining.erase(remaining.begin() + di);
  }
  return Permutation(std::move(entries));
}

namespace {

bool ends_with(const std::vector<int>& d, std::size_t end, std::initializer_list<int> suffix) {
  if (end < suffix.size()) return false;
  return std::equal(suffix.begin(), suffix.end(), d.begin() + (end - suffix.size()));
}

bool has_factor(const std::vector<int>& d, std::initializer_list<int> f) {
  for (std::size_t end = f.size(); end <= d.size(); ++end) {
    if (ends_with(d, end, f)) return true;
  }
  return false;
}

}  // namespace

bool satisfies_rank_rules(const RankEncoding& d) {
  const auto& x = d.digits;
  if (std::any_of(x.begin(), x.end(), [](int v) { return v < 0 || v > 2; })) return false;
  const auto n = x.size();
  if (ends_with(x, n, {1}) || ends_with(x, n, {2}) || ends_with(x, n, {2, 0})) return false;
  for (auto f : {std::initializer_list<int>{2, 1}, {2, 2}, {1, 1, 1}, {1, 1, 2}, {2, 0, 1, 1},
                 {2, 0, 1, 2}}) {
    if (has_factor(x, f)) return false;
  }
  return true;
}

const Basis& oscillation_quartet() {
  static const Basis b{{3, 2, 1}, {2, 3, 4, 1}, {3, 4, 1, 2}, {4, 1, 2, 3}};
  return b;
}

std::vector<std::size_t> greedy_inc_osc_positions(const Permutation& p) {
  // Odd positions of the sequence carry even values and vice versa.
  const auto d = rank_encoding(p).digits;
  std::vector<std::size_t> positions;
  std::size_t last = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::size_t next_even = last % 2 ? last + 2 : last + 1;
    const std::size_t next_odd = last % 2 ? last + 1 : last + 2;
    if (d[i] >= 1) {
      last = next_even;
    } else {
      const std::size_t end = i + 1;
      const bool tight = ends_with(d, end, {2, 0}) || ends_with(d, end, {1, 1, 0}) ||
                         ends_with(d, end, {2, 0, 1, 0});
      last = tight ? next_odd : next_odd + 2;
    }
    positions.push_back(last);
  }
  return positions;
}

OscEmbedding embed_into_inc_osc(const Permutation& p) {
  OscEmbedding result;
  for (const auto& q : oscillation_quartet().elements()) {
    if (contains(q, p)) {
      result.violated = q;
      return result;
    }
  }
  result.positions = greedy_inc_osc_positions(p);
  const auto seq = inc_osc_prefix(result.positions.empty() ? 0 : result.positions.back());
  std::vector<int> values;
  for (auto pos : result.positions) values.push_back(seq[pos - 1]);
  if (Permutation::pattern_of(values) == p) {
    result.greedy = true;
    return result;
  }

  const auto host = Permutation::pattern_of(inc_osc_prefix(2 * p.size() + 4));
  const auto occurrence = find_occurrence(p, host);
  if (occurrence.empty() && !p.empty()) {
    throw std::logic_error(p.to_string() + " avoids the quartet but does not embed");
  }
  result.positions.clear();
  for (auto i : occurrence) result.positions.push_back(i + 1);
  return result;
}

namespace {

// Longest alternation with a vertical cut: for each cut, the number of
// maximal runs of side labels read in value order.
std::size_t vertical_cut_alternation(const Permutation& p) {
  const std::size_t n = p.size();
  const auto inv = p.inverse();
  std::size_t best = n ? 1 : 0;
  for (std::size_t cut = 0; cut <= n; ++cut) {
    std::size_t blocks = 0;
    int prev = -1;
    for (std::size_t v = 0; v < n; ++v) {
      const int side = static_cast<std::size_t>(inv[v]) <= cut ? 0 : 1;
      if (side != prev) ++blocks;
      prev = side;
    }
    best = std::max(best, blocks);
  }
  return best;
}

}  // namespace

std::size_t longest_alternation(const Permutation& p) {
  return std::max(vertical_cut_alternation(p), vertical_cut_alternation(p.inverse()));
}

std::vector<Permutation> oscillations_of_length(std::size_t k) {
  std::set<Permutation> found;
  if (k == 0) return {};
  const std::size_t prefix = k + 6;
  const auto seq = inc_osc_prefix(prefix);

  // Inversions join 1-4-3-6-5-8-7-...; list positions along that path.
  std::vector<std::size_t> path{1};
  for (std::size_t m = 1; path.size() < prefix; ++m) {
    path.push_back(2 * m - 2);
    if (2 * m + 1 < prefix) path.push_back(2 * m + 1);
  }

  auto add = [&](std::vector<std::size_t> positions) {
    std::sort(positions.begin(), positions.end());
    std::vector<int> values;
    for (auto i : positions) values.push_back(seq[i]);
    auto pat = Permutation::pattern_of(values);
    if (is_simple(pat)) {
      found.insert(pat.reverse());
      found.insert(std::move(pat));
    }
  };
  for (std::size_t s = 0; s + k <= prefix && s < 4; ++s) {
    std::vector<std::size_t> window(k);
    std::iota(window.begin(), window.end(), s);
    add(window);
    add(std::vector<std::size_t>(path.begin() + s, path.begin() + s + k));
  }
  return {found.begin(), found.end()};
}

std::vector<Permutation> increasing_oscillations_brute_force(std::size_t k, std::size_t prefix) {
  std::set<Permutation> found;
  const auto seq = inc_osc_prefix(prefix);
  if (k == 0 || k > prefix) return {};
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  std::vector<int> values(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) values[i] = seq[pick[i]];
    auto pat = Permutation::pattern_of(values);
    if (is_simple(pat)) found.insert(std::move(pat));
    // Next k-subset in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == prefix - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

std::size_t longest_oscillation(const Permutation& p, std::size_t cap) {
  if (p.size() > cap) {
    throw ResourceError("oscillation-length-cap", cap,
                        "longest_oscillation: length " + std::to_string(p.size()) +
                            " exceeds the cap of " + std::to_string(cap));
  }
  for (std::size_t k = p.size(); k > 0; --k) {
    for (const auto& osc : oscillations_of_length(k)) {
      if (contains(osc, p)) return k;
    }
  }
  return 0;
}

}  // namespace pinsimple
