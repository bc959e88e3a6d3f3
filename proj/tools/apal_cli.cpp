// Command-line front end: parse and measure formulas, model-check,
// quotient models, reduce announcements, verify derivations, and run the
// randomized self-test suites.
//
// Exit status: 0 on success/true/accept, 1 on false/reject, 2 on usage
// or input errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "apal/axioms.hpp"
#include "apal/checker.hpp"
#include "apal/formula.hpp"
#include "apal/model.hpp"
#include "apal/rewrite.hpp"
#include "apal/selftest.hpp"

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct FormulaInput {
  std::string inline_text;
  std::string file;

  apal::Formula resolve() const {
    if (!file.empty()) return apal::parse(read_file(file));
    return apal::parse(inline_text);
  }
};

void add_formula_options(CLI::App* cmd, FormulaInput& input) {
  auto* positional = cmd->add_option("formula", input.inline_text, "Formula text");
  auto* file = cmd->add_option("--file", input.file, "Read the formula from a file");
  positional->excludes(file);
  cmd->callback([cmd, &input] {
    if (input.inline_text.empty() && input.file.empty())
      throw CLI::ValidationError(cmd->get_name(),
                                 "a formula (inline or --file) is required");
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolkit for arbitrary public announcement logic"};
  app.require_subcommand(1);

  FormulaInput formula_input;
  std::string model_path;
  std::string world;
  std::string proof_path;
  std::uint64_t seed = 0;
  std::uint64_t cases = 1000;

  auto* parse_cmd =
      app.add_subcommand("parse", "Parse a formula; print its canonical "
                                  "rendering and fragment flags");
  add_formula_options(parse_cmd, formula_input);

  auto* size_cmd =
      app.add_subcommand("size", "Print Size and box depth of a formula");
  add_formula_options(size_cmd, formula_input);

  auto* check_cmd = app.add_subcommand(
      "check", "Check a formula at a world of a model; print true/false");
  check_cmd->add_option("model", model_path, "Model file (JSON)")->required();
  check_cmd->add_option("world", world, "World name")->required();
  add_formula_options(check_cmd, formula_input);

  auto* truthset_cmd = app.add_subcommand(
      "truthset", "Print the worlds satisfying a formula, in document order");
  truthset_cmd->add_option("model", model_path, "Model file (JSON)")->required();
  add_formula_options(truthset_cmd, formula_input);

  auto* bisim_cmd = app.add_subcommand(
      "bisim", "Print the bisimulation quotient blocks of a model");
  bisim_cmd->add_option("model", model_path, "Model file (JSON)")->required();

  auto* reduce_cmd = app.add_subcommand(
      "reduce", "Rewrite a box-free formula to epistemic form; print the trace");
  add_formula_options(reduce_cmd, formula_input);

  auto* prove_cmd = app.add_subcommand(
      "prove", "Verify a derivation file; print accept/reject");
  prove_cmd->add_option("file", proof_path, "Derivation file")->required();

  auto* randtest_cmd = app.add_subcommand(
      "randtest", "Run the randomized validity and oracle-equivalence suites");
  randtest_cmd->add_option("--seed", seed, "Random seed")->default_val(0);
  randtest_cmd->add_option("--cases", cases, "Base case count")
      ->default_val(1000);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (parse_cmd->parsed()) {
      apal::Formula f = formula_input.resolve();
      apal::FragmentFlags flags = apal::classify(f);
      std::cout << apal::render(f) << "\n";
      std::cout << "box_free=" << (flags.box_free ? "true" : "false")
                << " announcement_free="
                << (flags.announcement_free ? "true" : "false")
                << " epistemic=" << (flags.epistemic ? "true" : "false")
                << "\n";
      return kTrue;
    }
    if (size_cmd->parsed()) {
      apal::Formula f = formula_input.resolve();
      std::cout << "Size=" << apal::size(f) << " d_box=" << apal::box_depth(f)
                << "\n";
      return kTrue;
    }
    if (check_cmd->parsed()) {
      apal::KripkeModel m = apal::load_model(read_file(model_path));
      apal::Formula f = formula_input.resolve();
      apal::TruthSetCache cache;
      bool holds = apal::satisfies(m, world, f, &cache);
      std::cout << (holds ? "true" : "false") << "\n";
      return holds ? kTrue : kFalse;
    }
    if (truthset_cmd->parsed()) {
      apal::KripkeModel m = apal::load_model(read_file(model_path));
      apal::Formula f = formula_input.resolve();
      apal::TruthSetCache cache;
      apal::WorldSet set = apal::truth_set(m, f, &cache);
      std::cout << apal::format_world_set(m, set) << "\n";
      return kTrue;
    }
    if (bisim_cmd->parsed()) {
      apal::KripkeModel m = apal::load_model(read_file(model_path));
      apal::Partition part = apal::bisim_quotient(m);
      for (apal::WorldSet block : part.blocks)
        std::cout << apal::format_world_set(m, block) << "\n";
      return kTrue;
    }
    if (reduce_cmd->parsed()) {
      apal::Formula f = formula_input.resolve();
      if (!apal::is_box_free(f)) {
        std::cerr << "error: reduce requires a box-free formula\n";
        return kUsage;
      }
      apal::RewriteTrace trace = apal::reduce_to_epistemic(f);
      std::cout << apal::format_trace(trace);
      std::cout << apal::render(trace.result) << "\n";
      return kTrue;
    }
    if (prove_cmd->parsed()) {
      apal::Derivation d = apal::parse_derivation(read_file(proof_path));
      apal::Verdict verdict = apal::check_derivation(d);
      if (verdict.accepted) {
        std::cout << "accept (" << d.steps.size() << " steps)\n";
        return kTrue;
      }
      std::cout << "reject at step " << verdict.step << ": " << verdict.reason
                << "\n";
      return kFalse;
    }
    if (randtest_cmd->parsed()) {
      bool all_passed = true;
      for (const apal::SuiteResult& r : apal::run_all_suites(seed, cases)) {
        std::cout << (r.passed() ? "[PASS] " : "[FAIL] ") << r.name << ": "
                  << r.cases << " cases, " << r.failures << " failures";
        if (!r.first_failure.empty())
          std::cout << " (first: " << r.first_failure << ")";
        std::cout << "\n";
        all_passed = all_passed && r.passed();
      }
      std::cout << (all_passed ? "all suites passed" : "FAILURES detected")
                << "\n";
      return all_passed ? kTrue : kFalse;
    }
  } catch (const apal::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const apal::ModelError& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
