#include "pinsimple/oracle.hpp"

#include <set>
#include <unordered_set>

#include "pinsimple/parallel.hpp"
#include "pinsimple/pin_word.hpp"

namespace pinsimple {

std::vector<Permutation> simples_in_class(const Basis& b, std::size_t n, std::size_t cap) {
  std::vector<Permutation> out;
  for_each_in_class(
      b, n, [&](const Permutation& p) {
        if (is_simple(p)) out.push_back(p);
      },
      cap);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_simples_in_class(const Basis& b, std::size_t n, std::size_t cap) {
  std::size_t count = 0;
  for_each_in_class(
      b, n, [&](const Permutation& p) { count += is_simple(p); }, cap);
  return count;
}

Permutation parallel_alternation(std::size_t k, const Symmetry& orientation) {
  std::vector<int> entries;
  const int top = static_cast<int>(k);
  for (int v = top % 2 ? top : top - 1; v >= 1; v -= 2) entries.push_back(v);
  for (int v = top % 2 ? top - 1 : top; v >= 2; v -= 2) entries.push_back(v);
  return orientation.apply(Permutation(std::move(entries)));
}

Permutation wedge_type1(std::size_t k, const Symmetry& orientation, bool lower_first) {
  if (k == 0) return {};
  // Arms: `upper` increasing values above the last point, `lower`
  // decreasing values below it.
  const int arms = static_cast<int>(k) - 1;
  const int lower = lower_first ? arms - arms / 2 : arms / 2;
  const int upper = arms - lower;
  std::vector<int> entries;
  for (int i = 0; i < std::max(upper, lower); ++i) {
    if (lower_first && i < lower) entries.push_back(lower - i);
    if (i < upper) entries.push_back(lower + 2 + i);
    if (!lower_first && i < lower) entries.push_back(lower - i);
  }
  entries.push_back(lower + 1);
  return orientation.apply(Permutation(std::move(entries)));
}

Permutation wedge_type2(std::size_t k, const Symmetry& orientation) {
  if (k == 0) return {};
  if (k == 1) return orientation.apply(Permutation{1});
  // Values alternate between the rising and falling arms by parity; the
  // maximum tops the rising arm and the runner-up is the final point.
  const int n = static_cast<int>(k);
  std::vector<int> rising, falling;
  for (int v = 1; v <= n - 2; ++v) (v % 2 ? falling : rising).push_back(v);
  rising.push_back(n);
  std::vector<int> entries(rising.begin(), rising.end());
  entries.insert(entries.end(), falling.rbegin(), falling.rend());
  entries.push_back(n - 1);
  return orientation.apply(Permutation(std::move(entries)));
}

bool juxtaposition_member(const Permutation& p, const Basis& first, const Basis& second,
                          Juxtaposition direction) {
  const Permutation q = direction == Juxtaposition::Horizontal ? p : p.inverse();
  const std::size_t n = q.size();
  for (std::size_t cut = 0; cut <= n; ++cut) {
    // For the vertical case q is the inverse, so positions of q are values
    // of p; the top part of p is the suffix of q.
    std::vector<std::size_t> low(cut), high(n - cut);
    std::iota(low.begin(), low.end(), std::size_t{0});
    std::iota(high.begin(), high.end(), cut);
    auto part = [&](const std::vector<std::size_t>& pos) {
      Permutation pat = q.restrict_to(pos);
      return direction == Juxtaposition::Horizontal ? pat : pat.inverse();
    };
    const bool ok = direction == Juxtaposition::Horizontal
                        ? avoids_all(part(low), first) && avoids_all(part(high), second)
                        : avoids_all(part(high), first) && avoids_all(part(low), second);
    if (ok) return true;
  }
  return false;
}

std::vector<Permutation> downward_closure(const std::vector<Permutation>& hosts,
                                          std::size_t max_len) {
  std::set<Permutation, ShortlexLess> out;
  for (const auto& host : hosts) {
    const std::size_t n = host.size();
    for (std::size_t k = 0; k <= std::min(max_len, n); ++k) {
      std::vector<std::size_t> pick(k);
      std::iota(pick.begin(), pick.end(), std::size_t{0});
      while (true) {
        out.insert(host.restrict_to(pick));
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return {out.begin(), out.end()};
}

namespace {

using PermSet = std::unordered_set<Permutation, PermutationHash>;

void census_dfs(PinRealizer& realizer, PinLetter last, std::size_t n, PermSet& out) {
  if (realizer.size() == n) {
    out.insert(realizer.permutation());
    return;
  }
  for (auto l : kPinAlphabet) {
    if (!may_follow(last, l)) continue;
    realizer.push(l);
    census_dfs(realizer, l, n, out);
    realizer.pop();
  }
}

}  // namespace

std::vector<Permutation> pin_class_census(std::size_t n, unsigned jobs, std::size_t cap) {
  if (n > cap) {
    throw ResourceError("census-length-cap", cap,
                        "pin class census: length " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(cap));
  }
  if (n == 0) return {Permutation()};

  // One work unit per admissible two-letter prefix (or per numeral if n = 1).
  std::vector<std::vector<PinLetter>> prefixes;
  for (int q = 1; q <= 4; ++q) {
    if (n == 1) {
      prefixes.push_back({numeral_for(q)});
      continue;
    }
    for (auto l : kPinAlphabet) prefixes.push_back({numeral_for(q), l});
  }
  std::vector<PermSet> parts(prefixes.size());
  parallel_for(prefixes.size(), jobs, [&](std::size_t i) {
    PinRealizer realizer;
    for (auto l : prefixes[i]) realizer.push(l);
    census_dfs(realizer, prefixes[i].back(), n, parts[i]);
  });

  PermSet all;
  for (auto& part : parts) all.merge(part);
  std::vector<Permutation> out(all.begin(), all.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> pin_class_basis(std::size_t max_n, unsigned jobs, std::size_t cap) {
  if (max_n > cap) {
    throw ResourceError("basis-length-cap", cap,
                        "pin class basis: length " + std::to_string(max_n) +
                            " exceeds the cap of " + std::to_string(cap));
  }
  std::vector<Permutation> basis;
  PermSet previous{Permutation()};
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto members = pin_class_census(n, jobs, cap);
    PermSet current(members.begin(), members.end());
    for (const auto& p : all_permutations(n)) {
      if (current.count(p)) continue;
      bool minimal = true;
      for (std::size_t i = 0; i < n && minimal; ++i) minimal = previous.count(p.delete_position(i));
      if (minimal) basis.push_back(p);
    }
    previous = std::move(current);
  }
  return basis;
}

}  // namespace pinsimple
