#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "pinsimple/decision.hpp"
#include "pinsimple/oracle.hpp"
#include "pinsimple/oscillation.hpp"

using namespace pinsimple;

namespace {

enum Exit { kOk = 0, kUsage = 1, kCap = 2, kInfinite = 3 };

struct DecideArgs {
  std::string basis;
  std::size_t state_cap = kDefaultStateCap;
  bool minimal_pins = false;
  unsigned jobs = 1;
  bool json = false;
  bool timing = false;
  bool exhaustive = false;
  std::string dump_dir;
};

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

void dump_automata(const std::filesystem::path& dir, const Basis& b, const PinOptions& options) {
  std::filesystem::create_directories(dir);
  write_file(dir / "transducer.txt", to_text(pin_transducer()));
  write_file(dir / "strict.txt", to_text(strict_pin_word_automaton()));
  const auto bad = bad_pin_language_dfa(b, options);
  write_file(dir / "bad.txt", to_text(bad));
  write_file(dir / "language.txt",
             to_text(minimize(product(strict_pin_word_automaton(), bad, ProductMode::Difference,
                                      options.state_cap))));
}

int run_decide(const DecideArgs& a) {
  const Basis b = Basis::parse(a.basis);
  DecisionOptions options;
  options.pins.state_cap = a.state_cap;
  options.pins.minimal_pins = a.minimal_pins;
  options.pins.jobs = a.jobs;
  options.exhaustive = a.exhaustive;

  const auto report = decide(b, options);
  std::cout << (a.json ? report_json(report, a.timing) : report_text(report, a.timing));
  if (!a.dump_dir.empty()) dump_automata(a.dump_dir, b, options.pins);
  switch (report.verdict) {
    case Verdict::Finite: return kOk;
    case Verdict::Infinite: return kInfinite;
    case Verdict::Undetermined: return kCap;
  }
  return kCap;
}

void print_perms(const std::vector<Permutation>& perms) {
  for (const auto& p : perms) std::cout << p.to_string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple permutations in finitely based classes"};
  app.require_subcommand(1);

  DecideArgs d;
  auto* decide_cmd = app.add_subcommand("decide", "Decide whether Av(B) has infinitely many simples");
  decide_cmd->add_option("--basis", d.basis, "Basis elements, comma or space separated")->required();
  decide_cmd->add_option("--state-cap", d.state_cap, "Largest automaton built")
      ->envname("PINSIMPLE_STATE_CAP");
  decide_cmd->add_flag("--minimal-pins", d.minimal_pins, "Use only preceq-minimal pin words")
      ->envname("PINSIMPLE_MINIMAL_PINS");
  decide_cmd->add_option("--jobs", d.jobs, "Worker threads")->envname("PINSIMPLE_JOBS");
  decide_cmd->add_flag("--json", d.json, "Machine-readable report");
  decide_cmd->add_flag("--timing", d.timing, "Include elapsed time");
  decide_cmd->add_flag("--exhaustive", d.exhaustive, "Evaluate every mechanism");
  decide_cmd->add_option("--dump-automata", d.dump_dir, "Write automata to this directory");

  auto* pin_class = app.add_subcommand("pin-class", "Permutations of pin words");
  pin_class->require_subcommand(1);
  std::size_t max_len = 0, len = 0;
  unsigned jobs = 1;
  pin_class->add_option("--jobs", jobs, "Worker threads")->envname("PINSIMPLE_JOBS");
  auto* count_cmd = pin_class->add_subcommand("count", "Series of class sizes");
  count_cmd->add_option("--max-len", max_len)->required();
  auto* basis_cmd = pin_class->add_subcommand("basis", "Minimal non-members");
  basis_cmd->add_option("--max-len", max_len)->required();
  auto* members_cmd = pin_class->add_subcommand("members", "Members of one length");
  members_cmd->add_option("--len", len)->required();

  std::string word;
  auto* pin_perm = app.add_subcommand("pin-perm", "Permutation of a pin word");
  pin_perm->add_option("word", word)->required();

  std::string perm;
  auto* embed = app.add_subcommand("embed-osc", "Embed into the increasing oscillating sequence");
  embed->add_option("perm", perm)->required();

  std::string simples_basis;
  std::size_t simples_len = 0;
  auto* simples = app.add_subcommand("simples", "Simple members of Av(B) by length");
  simples->add_option("--basis", simples_basis)->required();
  simples->add_option("--max-len", simples_len)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*decide_cmd) return run_decide(d);
    if (*count_cmd) {
      // Largest first, so a cap error comes before any work.
      std::vector<std::size_t> sizes(max_len);
      for (std::size_t n = max_len; n >= 1; --n) sizes[n - 1] = pin_class_census(n, jobs).size();
      for (std::size_t n = 1; n <= max_len; ++n) std::cout << (n > 1 ? " " : "") << sizes[n - 1];
      std::cout << "\n";
      return kOk;
    }
    if (*basis_cmd) {
      print_perms(pin_class_basis(max_len, jobs));
      return kOk;
    }
    if (*members_cmd) {
      print_perms(pin_class_census(len, jobs));
      return kOk;
    }
    if (*pin_perm) {
      std::cout << perm_of(PinWord::validate(word)).to_string() << "\n";
      return kOk;
    }
    if (*embed) {
      const auto e = embed_into_inc_osc(Permutation::parse(perm));
      if (!e.ok()) {
        std::cout << "contains " << e.violated->to_string() << "\n";
        return kInfinite;
      }
      for (std::size_t i = 0; i < e.positions.size(); ++i) {
        std::cout << (i ? " " : "") << e.positions[i];
      }
      std::cout << "\n";
      return kOk;
    }
    if (*simples) {
      const Basis b = Basis::parse(simples_basis);
      for (std::size_t n = 1; n <= simples_len; ++n) {
        std::cout << n << "\t" << count_simples_in_class(b, n) << "\n";
      }
      return kOk;
    }
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << " (" << e.cap_name() << ")\n";
    return kCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
