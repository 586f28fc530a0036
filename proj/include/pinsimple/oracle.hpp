#pragma once

#include <cstddef>
#include <vector>

#include "pinsimple/permutation.hpp"

namespace pinsimple {

/// Simple members of Av(B) of length n, sorted.
std::vector<Permutation> simples_in_class(const Basis& b, std::size_t n,
                                          std::size_t cap = kDefaultClassLengthCap);
std::size_t count_simples_in_class(const Basis& b, std::size_t n,
                                   std::size_t cap = kDefaultClassLengthCap);

/// k points; the two halves are decreasing and the odd values sit on the
/// left ("\\" orientation). Other orientations come from the symmetry.
Permutation parallel_alternation(std::size_t k, const Symmetry& orientation = Symmetry::identity());

/// A "<" wedge (increasing above, decreasing below) followed by one point
/// between the arms. The arms interleave starting with the upper one, or
/// with the lower one when lower_first is set.
Permutation wedge_type1(std::size_t k, const Symmetry& orientation = Symmetry::identity(),
                        bool lower_first = false);

/// A "Λ" wedge (increasing then decreasing) followed by one point just
/// below the peak.
Permutation wedge_type2(std::size_t k, const Symmetry& orientation = Symmetry::identity());

enum class Juxtaposition { Horizontal, Vertical };

/// Horizontal: p splits by position into a prefix in Av(first) and a suffix
/// in Av(second). Vertical: p splits by value into a top part in Av(first)
/// and a bottom part in Av(second).
bool juxtaposition_member(const Permutation& p, const Basis& first, const Basis& second,
                          Juxtaposition direction = Juxtaposition::Horizontal);

/// Every pattern of length at most max_len contained in one of the hosts.
std::vector<Permutation> downward_closure(const std::vector<Permutation>& hosts,
                                          std::size_t max_len);

constexpr std::size_t kPinCensusCap = 8;
constexpr std::size_t kPinBasisCap = 7;

/// Distinct permutations of the pin words of length n, sorted.
std::vector<Permutation> pin_class_census(std::size_t n, unsigned jobs = 1,
                                          std::size_t cap = kPinCensusCap);

/// Minimal permutations of length at most max_n outside the pin class,
/// in shortlex order.
std::vector<Permutation> pin_class_basis(std::size_t max_n, unsigned jobs = 1,
                                         std::size_t cap = kPinBasisCap);

}  // namespace pinsimple
