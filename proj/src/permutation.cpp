#include "pinsimple/permutation.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

namespace pinsimple {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const auto n = entries_.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : entries_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') {
        throw std::invalid_argument("bad permutation '" + std::string(text) + "'");
      }
      values.push_back(ch - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      auto field = trim(text.substr(start, end - start));
      int value = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
        throw std::invalid_argument("bad permutation '" + std::string(text) + "'");
      }
      values.push_back(value);
      start = end + 1;
    }
  }
  try {
    return Permutation(std::move(values));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("'" + std::string(text) + "' is not a permutation");
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(size());
  for (std::size_t i = 0; i < size(); ++i) inv[entries_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::reverse() const {
  return Permutation(std::vector<int>(entries_.rbegin(), entries_.rend()), Unchecked{});
}

Permutation Permutation::complement() const {
  std::vector<int> c(size());
  const int top = static_cast<int>(size()) + 1;
  for (std::size_t i = 0; i < size(); ++i) c[i] = top - entries_[i];
  return Permutation(std::move(c), Unchecked{});
}

Permutation Permutation::restrict_to(std::span<const std::size_t> positions) const {
  std::vector<int> picked;
  picked.reserve(positions.size());
  for (auto pos : positions) picked.push_back(entries_[pos]);
  return pattern_of(std::span<const int>(picked));
}

Permutation Permutation::delete_position(std::size_t position) const {
  std::vector<int> rest;
  rest.reserve(size() - 1);
  const int removed = entries_[position];
  for (std::size_t i = 0; i < size(); ++i) {
    if (i == position) continue;
    rest.push_back(entries_[i] > removed ? entries_[i] - 1 : entries_[i]);
  }
  return Permutation(std::move(rest), Unchecked{});
}

std::string Permutation::to_string() const {
  const bool digits = size() <= 9;
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (digits) {
      out.push_back(static_cast<char>('0' + entries_[i]));
    } else {
      if (i) out.push_back(',');
      out += std::to_string(entries_[i]);
    }
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = p.size();
  for (int v : p.entries()) h = h * 1000003u ^ static_cast<std::size_t>(v);
  return h;
}

namespace {

// For each pattern position k, the earlier positions holding the nearest
// smaller and nearest larger value (or -1). Matching position k against a
// host value then needs only these two comparisons.
struct PatternBounds {
  std::vector<int> below, above;

  explicit PatternBounds(const Permutation& pattern)
      : below(pattern.size(), -1), above(pattern.size(), -1) {
    for (std::size_t k = 0; k < pattern.size(); ++k) {
      for (std::size_t j = 0; j < k; ++j) {
        if (pattern[j] < pattern[k]) {
          if (below[k] < 0 || pattern[j] > pattern[below[k]]) below[k] = static_cast<int>(j);
        } else if (above[k] < 0 || pattern[j] < pattern[above[k]]) {
          above[k] = static_cast<int>(j);
        }
      }
    }
  }
};

bool extend_occurrence(const Permutation& pattern, const Permutation& host,
                       const PatternBounds& bounds, std::vector<std::size_t>& chosen) {
  const std::size_t k = chosen.size();
  if (k == pattern.size()) return true;
  const std::size_t first = k == 0 ? 0 : chosen.back() + 1;
  // Leave room for the remaining pattern entries.
  const std::size_t last = host.size() - (pattern.size() - k);
  for (std::size_t pos = first; pos <= last && pos < host.size(); ++pos) {
    const int v = host[pos];
    if (bounds.below[k] >= 0 && host[chosen[bounds.below[k]]] > v) continue;
    if (bounds.above[k] >= 0 && host[chosen[bounds.above[k]]] < v) continue;
    chosen.push_back(pos);
    if (extend_occurrence(pattern, host, bounds, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::vector<std::size_t> find_occurrence(const Permutation& pattern, const Permutation& host) {
  std::vector<std::size_t> chosen;
  if (pattern.size() > host.size()) return chosen;
  PatternBounds bounds(pattern);
  chosen.reserve(pattern.size());
  if (!extend_occurrence(pattern, host, bounds, chosen)) chosen.clear();
  return chosen;
}

bool contains(const Permutation& pattern, const Permutation& host) {
  if (pattern.empty()) return true;
  if (pattern.size() > host.size()) return false;
  if (pattern.size() == host.size()) return pattern == host;
  return !find_occurrence(pattern, host).empty();
}

bool is_simple(const Permutation& p) {
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a) {
    int lo = p[a], hi = p[a];
    for (std::size_t b = a + 1; b < n; ++b) {
      lo = std::min(lo, p[b]);
      hi = std::max(hi, p[b]);
      const std::size_t width = b - a + 1;
      if (width == n) break;
      if (static_cast<std::size_t>(hi - lo) + 1 == width) return false;
    }
  }
  return true;
}

std::span<const Symmetry> Symmetry::all() {
  static const std::array<Symmetry, 8> kAll = [] {
    const auto r = reverse(), c = complement(), i = inverse();
    return std::array<Symmetry, 8>{identity(), r, c, i, r.after(c), r.after(i), c.after(i),
                                   r.after(c).after(i)};
  }();
  return kAll;
}

Symmetry Symmetry::after(const Symmetry& o) const {
  return Symmetry(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_,
                  c_ * o.b_ + d_ * o.d_);
}

Permutation Symmetry::apply(const Permutation& p) const {
  const int n = static_cast<int>(p.size());
  std::vector<std::pair<int, int>> points(p.size());
  for (int i = 0; i < n; ++i) {
    const int x = 2 * i - (n - 1);
    const int y = 2 * (p[i] - 1) - (n - 1);
    points[i] = {a_ * x + b_ * y, c_ * x + d_ * y};
  }
  std::sort(points.begin(), points.end());
  std::vector<int> ys;
  ys.reserve(points.size());
  for (auto& pt : points) ys.push_back(pt.second);
  return Permutation::pattern_of(std::span<const int>(ys));
}

std::string Symmetry::name() const {
  static const char* kNames[] = {"identity",
                                 "reverse",
                                 "complement",
                                 "inverse",
                                 "reverse-complement",
                                 "reverse-inverse",
                                 "complement-inverse",
                                 "reverse-complement-inverse"};
  auto syms = all();
  for (std::size_t k = 0; k < syms.size(); ++k) {
    if (syms[k] == *this) return kNames[k];
  }
  return "?";
}

Basis::Basis(std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end(), ShortlexLess{});
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (auto& candidate : elements) {
    bool dominated = false;
    for (const auto& kept : elements_) {
      if (contains(kept, candidate)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) elements_.push_back(std::move(candidate));
  }
}

Basis Basis::parse(std::string_view text) {
  std::vector<Permutation> elements;
  auto add_token = [&](std::string_view token) {
    if (token.empty()) return;
    // A comma token is one long permutation ("10,2,...") when it parses as
    // ranks and some rank has two digits; otherwise commas separate elements.
    if (token.find(',') != std::string_view::npos) {
      bool wide = false;
      for (std::size_t i = 0, run = 0; i < token.size(); ++i) {
        run = token[i] == ',' ? 0 : run + 1;
        wide = wide || run > 1;
      }
      if (wide) {
        try {
          elements.push_back(Permutation::parse(token));
          return;
        } catch (const std::invalid_argument&) {
        }
      }
      std::size_t start = 0;
      while (start <= token.size()) {
        auto end = std::min(token.find(',', start), token.size());
        if (end > start) elements.push_back(Permutation::parse(token.substr(start, end - start)));
        start = end + 1;
      }
      return;
    }
    elements.push_back(Permutation::parse(token));
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = std::min(text.find_first_of(" \t\n;", start), text.size());
    add_token(text.substr(start, end - start));
    start = end + 1;
  }
  return Basis(std::move(elements));
}

bool Basis::defines_empty_class() const {
  return !elements_.empty() && elements_.front().size() <= 1;
}

Basis Basis::transformed(const Symmetry& s) const {
  std::vector<Permutation> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(s.apply(e));
  return Basis(std::move(out));
}

std::string Basis::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out.push_back(' ');
    out += elements_[i].to_string();
  }
  return out;
}

bool avoids_all(const Permutation& p, const Basis& basis) {
  for (const auto& beta : basis.elements()) {
    if (contains(beta, p)) return false;
  }
  return true;
}

void for_each_in_class(const Basis& basis, std::size_t n,
                       const std::function<void(const Permutation&)>& visit, std::size_t cap) {
  if (n > cap) {
    throw ResourceError("class-length-cap", cap,
                        "class enumeration at length " + std::to_string(n) +
                            " exceeds the cap of " + std::to_string(cap));
  }
  std::vector<Permutation> level;
  if (avoids_all(Permutation(), basis)) level.emplace_back();
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<Permutation> next;
    const bool last = len == n;
    for (const auto& parent : level) {
      // Inserting the new maximum at every position reaches each permutation
      // exactly once; downward closure means every member has a member parent.
      const auto base = parent.entries();
      for (std::size_t pos = len; pos-- > 0;) {
        std::vector<int> child(base.begin(), base.end());
        child.insert(child.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<int>(len));
        Permutation candidate(std::move(child));
        if (!avoids_all(candidate, basis)) continue;
        if (last) {
          visit(candidate);
        } else {
          next.push_back(std::move(candidate));
        }
      }
    }
    if (!last) {
      std::sort(next.begin(), next.end());
      level = std::move(next);
    }
  }
  if (n == 0) {
    for (const auto& p : level) visit(p);
  }
}

std::vector<Permutation> enumerate_class(const Basis& basis, std::size_t n, std::size_t cap) {
  std::vector<Permutation> out;
  for_each_in_class(basis, n, [&](const Permutation& p) { out.push_back(p); }, cap);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace pinsimple
