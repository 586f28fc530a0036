#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pinsimple/permutation.hpp"

namespace pinsimple {

/// First n terms of 4,1,6,3,8,5,...
std::vector<int> inc_osc_prefix(std::size_t n);

/// d_i = number of later entries smaller than entry i.
struct RankEncoding {
  std::vector<int> digits;

  /// Concatenated digits, or comma-separated when some digit exceeds 9.
  std::string to_string() const;
  friend bool operator==(const RankEncoding&, const RankEncoding&) = default;
};

RankEncoding rank_encoding(const Permutation& p);
/// Throws std::invalid_argument if some d_i exceeds n - i.
Permutation rank_decode(const RankEncoding& d);

/// The three digit rules satisfied by the rank encodings of
/// Av(321, 2341, 3412, 4123).
bool satisfies_rank_rules(const RankEncoding& d);

/// Basis of the permutations that embed in the increasing oscillating sequence.
const Basis& oscillation_quartet();

/// The greedy placement driven by the rank encoding, as 1-based positions
/// into the increasing oscillating sequence: a nonzero digit takes the next
/// even entry, a zero the next odd entry when it ends 20, 110 or 2010 and
/// the second next odd entry otherwise. Not always an embedding, even for
/// members of the class (312 is the smallest miss).
std::vector<std::size_t> greedy_inc_osc_positions(const Permutation& p);

struct OscEmbedding {
  /// 1-based positions into the increasing oscillating sequence.
  std::vector<std::size_t> positions;
  /// Set on failure: the quartet element contained in p.
  std::optional<Permutation> violated;
  /// Whether the greedy placement was used; otherwise the positions are the
  /// first occurrence found by search.
  bool greedy = false;

  bool ok() const { return !violated; }
};

/// Tries the greedy placement and falls back to a search of the first
/// 2n+4 terms. Throws std::logic_error if a quartet avoider does not embed.
OscEmbedding embed_into_inc_osc(const Permutation& p);

/// Largest number of points of p forming an alternation.
std::size_t longest_alternation(const Permutation& p);

constexpr std::size_t kDefaultOscillationCap = 14;

/// Increasing oscillations of length k together with their reverses,
/// sorted. Built from windows of the oscillating path.
std::vector<Permutation> oscillations_of_length(std::size_t k);

/// Increasing oscillations of length k, by brute force over every subset
/// of the first `prefix` terms.
std::vector<Permutation> increasing_oscillations_brute_force(std::size_t k, std::size_t prefix);

/// Largest k such that p contains an oscillation of length k; throws
/// ResourceError when |p| exceeds cap.
std::size_t longest_oscillation(const Permutation& p, std::size_t cap = kDefaultOscillationCap);

}  // namespace pinsimple
