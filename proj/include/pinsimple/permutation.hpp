#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pinsimple {

/// Raised when a configured size or state cap would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string cap_name, std::size_t cap_value, const std::string& what)
      : std::runtime_error(what), cap_name_(std::move(cap_name)), cap_value_(cap_value) {}

  const std::string& cap_name() const { return cap_name_; }
  std::size_t cap_value() const { return cap_value_; }

 private:
  std::string cap_name_;
  std::size_t cap_value_;
};

/// A permutation of {1..n} in one-line notation. Entries are stored 0-indexed
/// by position and carry values 1..n.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless entries is a bijection on {1..n}.
  explicit Permutation(std::vector<int> entries);
  Permutation(std::initializer_list<int> entries) : Permutation(std::vector<int>(entries)) {}

  /// Digit string ("2413") when every rank is a single digit, otherwise
  /// comma-separated ranks ("10,2,6,...").
  static Permutation parse(std::string_view text);

  static Permutation identity(std::size_t n);

  /// The permutation order isomorphic to a sequence of distinct values.
  template <typename T, typename Less = std::less<T>>
  static Permutation pattern_of(std::span<const T> values, Less less = {}) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return less(values[a], values[b]); });
    std::vector<int> ranks(values.size());
    for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<int>(r) + 1;
    return Permutation(std::move(ranks), Unchecked{});
  }
  template <typename T>
  static Permutation pattern_of(const std::vector<T>& values) {
    return pattern_of(std::span<const T>(values));
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int operator[](std::size_t position) const { return entries_[position]; }
  std::span<const int> entries() const { return entries_; }

  Permutation inverse() const;
  Permutation reverse() const;
  Permutation complement() const;

  /// Pattern of the entries at the given increasing positions.
  Permutation restrict_to(std::span<const std::size_t> positions) const;
  /// Pattern left after removing the entry at one position.
  Permutation delete_position(std::size_t position) const;

  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> entries, Unchecked) : entries_(std::move(entries)) {}

  std::vector<int> entries_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Shorter permutations first, then lexicographic.
struct ShortlexLess {
  bool operator()(const Permutation& a, const Permutation& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// True iff some subsequence of host is order isomorphic to pattern.
bool contains(const Permutation& pattern, const Permutation& host);

/// Positions in host of one occurrence of pattern, or empty if none.
std::vector<std::size_t> find_occurrence(const Permutation& pattern, const Permutation& host);

/// True iff p has no interval of size strictly between 1 and n.
bool is_simple(const Permutation& p);

/// An element of the dihedral group of the square acting on permutation
/// plots, stored as a signed 2x2 permutation matrix on centred coordinates.
class Symmetry {
 public:
  static Symmetry identity() { return Symmetry(1, 0, 0, 1); }
  static Symmetry reverse() { return Symmetry(-1, 0, 0, 1); }
  static Symmetry complement() { return Symmetry(1, 0, 0, -1); }
  static Symmetry inverse() { return Symmetry(0, 1, 1, 0); }

  /// The eight symmetries in a fixed order, identity first.
  static std::span<const Symmetry> all();

  /// Apply other first, then this.
  Symmetry after(const Symmetry& other) const;
  Symmetry inverted() const { return Symmetry(a_, c_, b_, d_); }

  Permutation apply(const Permutation& p) const;
  std::string name() const;

  friend bool operator==(const Symmetry&, const Symmetry&) = default;

 private:
  Symmetry(int a, int b, int c, int d) : a_(a), b_(b), c_(c), d_(d) {}
  int a_, b_, c_, d_;
};

inline Permutation apply_symmetry(const Symmetry& s, const Permutation& p) { return s.apply(p); }

/// A finite basis reduced to an antichain: duplicates and elements that
/// contain another element are dropped on construction.
class Basis {
 public:
  Basis() = default;
  explicit Basis(std::vector<Permutation> elements);
  Basis(std::initializer_list<Permutation> elements)
      : Basis(std::vector<Permutation>(elements)) {}

  /// Comma- or whitespace-separated permutations.
  static Basis parse(std::string_view text);

  std::span<const Permutation> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  /// True iff Av(basis) has no members of length >= 1.
  bool defines_empty_class() const;

  Basis transformed(const Symmetry& s) const;
  std::string to_string() const;

  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  std::vector<Permutation> elements_;  // shortlex order
};

bool avoids_all(const Permutation& p, const Basis& basis);

constexpr std::size_t kDefaultClassLengthCap = 10;

/// Calls visit on every length-n member of Av(basis). Only the length n-1
/// members are held in memory.
void for_each_in_class(const Basis& basis, std::size_t n,
                       const std::function<void(const Permutation&)>& visit,
                       std::size_t cap = kDefaultClassLengthCap);

/// Length-n members of Av(basis), sorted.
std::vector<Permutation> enumerate_class(const Basis& basis, std::size_t n,
                                         std::size_t cap = kDefaultClassLengthCap);

/// Every permutation of length n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace pinsimple
