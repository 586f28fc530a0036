#include "pinsimple/decision.hpp"

#include <chrono>
#include <json.hpp>
#include <sstream>

#include "pinsimple/parallel.hpp"

namespace pinsimple {

namespace {

FixedClass make_fixed(std::string name, std::initializer_list<Permutation> elements) {
  FixedClass c{std::move(name), Basis(elements), {}};
  for (const auto& s : Symmetry::all()) {
    Basis image = c.basis.transformed(s);
    const bool seen = std::any_of(c.variants.begin(), c.variants.end(),
                                  [&](const FixedClass::Variant& v) { return v.basis == image; });
    if (!seen) c.variants.push_back({s.name(), std::move(image)});
  }
  return c;
}

}  // namespace

const FixedClass& parallel_class() {
  static const FixedClass c = make_fixed("parallel", {{1, 2, 3}, {2, 4, 1, 3}, {3, 4, 1, 2}});
  return c;
}

const FixedClass& wedge1_class() {
  static const FixedClass c = make_fixed(
      "wedge1", {{1, 2, 4, 3}, {1, 3, 2, 4}, {1, 4, 2, 3}, {1, 4, 3, 2}, {2, 4, 3, 1},
                 {3, 1, 2, 4}, {4, 1, 2, 3}, {4, 1, 3, 2}, {4, 2, 3, 1}, {4, 3, 1, 2}});
  return c;
}

const FixedClass& wedge2_class() {
  static const FixedClass c = make_fixed(
      "wedge2", {{2, 1, 3, 4}, {2, 1, 4, 3}, {3, 1, 2, 4}, {3, 1, 4, 2}, {3, 2, 4, 1},
                 {3, 4, 1, 2}, {4, 1, 2, 3}, {4, 1, 3, 2}, {4, 2, 3, 1}, {4, 3, 1, 2}});
  return c;
}

EasyDecision finitely_many_in(const FixedClass& fixed, const Basis& b) {
  for (const auto& v : fixed.variants) {
    const bool met = std::any_of(b.elements().begin(), b.elements().end(),
                                 [&](const Permutation& beta) { return avoids_all(beta, v.basis); });
    if (!met) return {false, v};
  }
  return {true, std::nullopt};
}

EasyDecision finitely_many_parallel_alternations(const Basis& b) {
  return finitely_many_in(parallel_class(), b);
}
EasyDecision finitely_many_wedge_type1(const Basis& b) { return finitely_many_in(wedge1_class(), b); }
EasyDecision finitely_many_wedge_type2(const Basis& b) { return finitely_many_in(wedge2_class(), b); }

// ---------------------------------------------------------------------------

std::vector<PinWord> preceq_minimal(std::vector<PinWord> words) {
  std::sort(words.begin(), words.end(), [](const PinWord& a, const PinWord& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::vector<PinWord> kept;
  for (const auto& w : words) {
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [&](const PinWord& u) { return preceq(u, w); });
    if (!dominated) kept.push_back(w);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<PinWord> basis_pin_words(const Basis& b, const PinOptions& options) {
  std::vector<PinWord> words;
  for (const auto& beta : b.elements()) {
    auto ws = pin_words_of(beta, options.pin_word_cap);
    words.insert(words.end(), ws.begin(), ws.end());
  }
  if (options.minimal_pins) return preceq_minimal(std::move(words));
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

Nfa bad_pin_language(const Basis& b, const PinOptions& options) {
  const auto t = pin_transducer();
  std::vector<Nfa> images;
  for (const auto& u : basis_pin_words(b, options)) images.push_back(apply_transducer(t, u));
  return intersect(nfa_union(images), strict_pin_word_nfa());
}

namespace {

struct BadLanguage {
  Dfa dfa;
  std::size_t words = 0;
  std::size_t image_states = 0;
};

BadLanguage build_bad_language(const Basis& b, const PinOptions& options) {
  const auto words = basis_pin_words(b, options);
  const auto t = pin_transducer();
  const auto strict = strict_pin_word_automaton();
  std::vector<Dfa> parts(words.size());
  std::vector<std::size_t> sizes(words.size());
  parallel_for(words.size(), options.jobs, [&](std::size_t i) {
    const Nfa image = apply_transducer(t, words[i]);
    sizes[i] = image.state_count();
    parts[i] = minimize(product(minimize(determinize(image, options.state_cap)), strict,
                                ProductMode::Intersection, options.state_cap));
  });

  // Balanced pairwise merge; the order is fixed so results do not depend on jobs.
  while (parts.size() > 1) {
    std::vector<Dfa> merged((parts.size() + 1) / 2);
    parallel_for(parts.size() / 2, options.jobs, [&](std::size_t i) {
      merged[i] = minimize(product(parts[2 * i], parts[2 * i + 1], ProductMode::Union,
                                   options.state_cap));
    });
    if (parts.size() % 2) merged.back() = std::move(parts.back());
    parts = std::move(merged);
  }
  BadLanguage out;
  out.dfa = parts.empty() ? Dfa() : std::move(parts.front());
  out.words = words.size();
  for (auto s : sizes) out.image_states += s;
  return out;
}

}  // namespace

Dfa bad_pin_language_dfa(const Basis& b, const PinOptions& options) {
  return build_bad_language(b, options).dfa;
}

Dfa pin_language(const Basis& b, const PinOptions& options) {
  return minimize(product(strict_pin_word_automaton(), bad_pin_language_dfa(b, options),
                          ProductMode::Difference, options.state_cap));
}

// ---------------------------------------------------------------------------

std::string mechanism_name(Mechanism m) {
  switch (m) {
    case Mechanism::ParallelAlternations: return "parallel alternations";
    case Mechanism::WedgeType1: return "wedge type 1";
    case Mechanism::WedgeType2: return "wedge type 2";
    case Mechanism::PinSequences: return "proper pin sequences";
  }
  return "?";
}

std::string status_name(MechanismStatus s) {
  switch (s) {
    case MechanismStatus::Absent: return "absent";
    case MechanismStatus::Present: return "present";
    case MechanismStatus::Skipped: return "skipped";
  }
  return "?";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Finite: return "finite";
    case Verdict::Infinite: return "infinite";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

DecisionReport decide(const Basis& b, const DecisionOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  DecisionReport r;
  r.basis = b;
  r.empty_class = b.defines_empty_class();

  bool settled = r.empty_class;
  auto easy = [&](Mechanism m, const FixedClass& fixed) {
    auto& mr = r.mechanism(m);
    if (settled && !options.exhaustive) return;
    const auto d = finitely_many_in(fixed, b);
    mr.status = d.finitely_many ? MechanismStatus::Absent : MechanismStatus::Present;
    mr.witness = d.witness;
    if (!d.finitely_many) settled = true;
  };
  easy(Mechanism::ParallelAlternations, parallel_class());
  easy(Mechanism::WedgeType1, wedge1_class());
  easy(Mechanism::WedgeType2, wedge2_class());

  if (!settled || options.exhaustive) {
    try {
      for (const auto& beta : b.elements()) {
        r.stats.elements.push_back({beta, pin_words_of(beta, options.pins.pin_word_cap).size()});
      }
      const auto bad = build_bad_language(b, options.pins);
      const auto strict = strict_pin_word_automaton();
      const auto language = minimize(
          product(strict, bad.dfa, ProductMode::Difference, options.pins.state_cap));
      r.stats.pin_words_used = bad.words;
      r.stats.image_states = bad.image_states;
      r.stats.strict_states = strict.state_count();
      r.stats.bad_states = bad.dfa.state_count();
      r.stats.language_states = language.state_count();
      r.mechanism(Mechanism::PinSequences).status =
          is_infinite(language) ? MechanismStatus::Present : MechanismStatus::Absent;
    } catch (const ResourceError& e) {
      r.error = e.what();
      r.error_cap = e.cap_name();
    }
  }

  const bool any_present = std::any_of(r.mechanisms.begin(), r.mechanisms.end(), [](const auto& m) {
    return m.status == MechanismStatus::Present;
  });
  if (any_present) {
    r.verdict = Verdict::Infinite;
  } else if (r.empty_class && !r.error) {
    r.verdict = Verdict::Finite;
  } else {
    const bool all_absent = std::all_of(r.mechanisms.begin(), r.mechanisms.end(), [](const auto& m) {
      return m.status == MechanismStatus::Absent;
    });
    r.verdict = all_absent ? Verdict::Finite : Verdict::Undetermined;
  }
  r.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string summary_line(const DecisionReport& r) {
  switch (r.verdict) {
    case Verdict::Finite: return r.empty_class ? "finite (empty class)" : "finite";
    case Verdict::Undetermined:
      return "undetermined (" + r.error_cap.value_or("cap") + " exceeded)";
    case Verdict::Infinite: break;
  }
  std::string reasons;
  for (const auto& m : r.mechanisms) {
    if (m.status != MechanismStatus::Present) continue;
    if (!reasons.empty()) reasons += ", ";
    reasons += mechanism_name(m.mechanism);
  }
  return "infinite (" + reasons + ")";
}

std::string report_text(const DecisionReport& r, bool with_timing) {
  std::ostringstream out;
  out << "basis: " << (r.basis.empty() ? "(empty)" : r.basis.to_string()) << "\n"
      << "verdict: " << verdict_name(r.verdict) << "\n"
      << "summary: " << summary_line(r) << "\n"
      << "empty class: " << (r.empty_class ? "yes" : "no") << "\n"
      << "mechanisms:\n";
  for (const auto& m : r.mechanisms) {
    out << "  " << mechanism_name(m.mechanism) << ": " << status_name(m.status);
    if (m.witness) {
      out << " (B meets no element of Av(" << m.witness->basis.to_string() << "), "
          << m.witness->symmetry << ")";
    }
    out << "\n";
  }
  out << "stats:\n";
  for (const auto& e : r.stats.elements) {
    out << "  pin words of " << e.element.to_string() << ": " << e.pin_words << "\n";
  }
  out << "  pin words used: " << r.stats.pin_words_used << "\n"
      << "  transducer image states: " << r.stats.image_states << "\n"
      << "  strict automaton states: " << r.stats.strict_states << "\n"
      << "  bad language states: " << r.stats.bad_states << "\n"
      << "  pin language states: " << r.stats.language_states << "\n";
  if (with_timing) out << "  elapsed seconds: " << r.stats.elapsed_seconds << "\n";
  if (r.error) out << "error: " << *r.error << "\n";
  return out.str();
}

std::string report_json(const DecisionReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["basis"] = nlohmann::json::array();
  for (const auto& p : r.basis.elements()) j["basis"].push_back(p.to_string());
  j["verdict"] = verdict_name(r.verdict);
  j["summary"] = summary_line(r);
  j["empty_class"] = r.empty_class;
  j["mechanisms"] = nlohmann::json::array();
  for (const auto& m : r.mechanisms) {
    nlohmann::ordered_json jm;
    jm["name"] = mechanism_name(m.mechanism);
    jm["status"] = status_name(m.status);
    if (m.witness) {
      jm["witness"] = {{"symmetry", m.witness->symmetry},
                       {"variant_basis", m.witness->basis.to_string()}};
    }
    j["mechanisms"].push_back(jm);
  }
  auto& s = j["stats"];
  s["pin_words"] = nlohmann::ordered_json::object();
  for (const auto& e : r.stats.elements) s["pin_words"][e.element.to_string()] = e.pin_words;
  s["pin_words_used"] = r.stats.pin_words_used;
  s["transducer_image_states"] = r.stats.image_states;
  s["strict_automaton_states"] = r.stats.strict_states;
  s["bad_language_states"] = r.stats.bad_states;
  s["pin_language_states"] = r.stats.language_states;
  if (with_timing) s["elapsed_seconds"] = r.stats.elapsed_seconds;
  if (r.error) j["error"] = {{"cap", r.error_cap.value_or("")}, {"message", *r.error}};
  return j.dump(2) + "\n";
}

}  // namespace pinsimple
