#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pinsimple/automata.hpp"
#include "pinsimple/permutation.hpp"
#include "pinsimple/pin_word.hpp"

namespace pinsimple {

/// A fixed class together with its distinct symmetric images.
struct FixedClass {
  struct Variant {
    std::string symmetry;  // first symmetry (in Symmetry::all() order) producing it
    Basis basis;
  };
  std::string name;
  Basis basis;
  std::vector<Variant> variants;
};

const FixedClass& parallel_class();
const FixedClass& wedge1_class();
const FixedClass& wedge2_class();

/// Outcome of one of the easy checks. When finitely_many is false,
/// witness names a variant class containing no element of B.
struct EasyDecision {
  bool finitely_many = true;
  std::optional<FixedClass::Variant> witness;
};

EasyDecision finitely_many_in(const FixedClass& fixed, const Basis& b);
EasyDecision finitely_many_parallel_alternations(const Basis& b);
EasyDecision finitely_many_wedge_type1(const Basis& b);
EasyDecision finitely_many_wedge_type2(const Basis& b);

/// States S, F1..F4, C1..C4 (ids 0..8). Reads a pin word u and writes the
/// strict pin words w with u preceq w.
Transducer pin_transducer();

struct PinOptions {
  std::size_t state_cap = kDefaultStateCap;
  std::size_t pin_word_cap = kDefaultPinWordLengthCap;
  /// Keep only the preceq-minimal words among all pin words of B.
  bool minimal_pins = false;
  unsigned jobs = 1;
};

/// The pin words of every element of B, deduplicated and sorted; pruned to
/// the preceq-minimal ones when options.minimal_pins is set.
std::vector<PinWord> basis_pin_words(const Basis& b, const PinOptions& options = {});

/// Drops every word that has a different word below it.
std::vector<PinWord> preceq_minimal(std::vector<PinWord> words);

/// Strict pin words lying above some pin word of an element of B.
Nfa bad_pin_language(const Basis& b, const PinOptions& options = {});

/// Minimal deterministic form of bad_pin_language. Per-word images are
/// determinized independently (in parallel when jobs > 1) and merged.
Dfa bad_pin_language_dfa(const Basis& b, const PinOptions& options = {});

/// Strict pin words whose permutations lie in Av(B), minimized.
Dfa pin_language(const Basis& b, const PinOptions& options = {});

// ---------------------------------------------------------------------------

enum class Verdict { Finite, Infinite, Undetermined };
enum class MechanismStatus { Absent, Present, Skipped };

enum class Mechanism { ParallelAlternations, WedgeType1, WedgeType2, PinSequences };
constexpr std::array<Mechanism, 4> kMechanisms = {
    Mechanism::ParallelAlternations, Mechanism::WedgeType1, Mechanism::WedgeType2,
    Mechanism::PinSequences};

std::string mechanism_name(Mechanism m);
std::string status_name(MechanismStatus s);
std::string verdict_name(Verdict v);

struct MechanismReport {
  Mechanism mechanism;
  MechanismStatus status = MechanismStatus::Skipped;
  /// Easy checks: the variant class that B fails to meet.
  std::optional<FixedClass::Variant> witness;
};

struct BasisElementStats {
  Permutation element;
  std::size_t pin_words = 0;
};

struct DecisionStats {
  std::vector<BasisElementStats> elements;
  std::size_t pin_words_used = 0;
  std::size_t image_states = 0;  // summed over the transducer images
  std::size_t strict_states = 0;
  std::size_t bad_states = 0;
  std::size_t language_states = 0;
  double elapsed_seconds = 0;
};

struct DecisionOptions {
  PinOptions pins;
  /// Evaluate every mechanism even when the verdict is already known.
  bool exhaustive = false;
};

struct DecisionReport {
  Basis basis;
  Verdict verdict = Verdict::Undetermined;
  bool empty_class = false;
  std::array<MechanismReport, 4> mechanisms{
      {{Mechanism::ParallelAlternations, MechanismStatus::Skipped, std::nullopt},
       {Mechanism::WedgeType1, MechanismStatus::Skipped, std::nullopt},
       {Mechanism::WedgeType2, MechanismStatus::Skipped, std::nullopt},
       {Mechanism::PinSequences, MechanismStatus::Skipped, std::nullopt}}};
  DecisionStats stats;
  /// Set when a resource cap stopped the pipeline.
  std::optional<std::string> error;
  std::optional<std::string> error_cap;

  const MechanismReport& mechanism(Mechanism m) const {
    return mechanisms[static_cast<std::size_t>(m)];
  }
  MechanismReport& mechanism(Mechanism m) { return mechanisms[static_cast<std::size_t>(m)]; }
};

/// Never throws ResourceError: a cap hit is recorded in the report and
/// leaves the verdict Undetermined unless an earlier stage settled it.
DecisionReport decide(const Basis& b, const DecisionOptions& options = {});

/// "finite", "infinite (parallel alternations)", "finite (empty class)", ...
std::string summary_line(const DecisionReport& r);
std::string report_text(const DecisionReport& r, bool with_timing = false);
std::string report_json(const DecisionReport& r, bool with_timing = false);

}  // namespace pinsimple
