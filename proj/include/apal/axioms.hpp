#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apal/formula.hpp"
#include "apal/model.hpp"

namespace apal {

/// Treating maximal non-Boolean subformulas (atoms, K_a, announcements,
/// box) as opaque letters, decides by truth table whether f is an
/// instantiation of a propositional tautology. Throws if more than 20
/// distinct letters occur.
bool is_tautology_instance(const Formula& f);

/// First matching schema in order A1..A13, falling back to A0 when the
/// formula is a tautology instance. A13 only matches when the announced
/// formula is epistemic; on a letter-cap overflow A0 is not attempted.
std::optional<std::string> match_axiom(const Formula& f);

/// Match against one named schema, "A0" through "A13".
bool matches_schema(const Formula& f, const std::string& axiom);

struct Justification {
  enum class Kind { Axiom, R0, R1, R2, R3 } kind;
  std::string axiom;               // Axiom
  int from = 0;                    // R0..R3: premise step, 1-based
  int implication = 0;             // R0: implication step, 1-based
  std::string agent;               // R1
  std::optional<Formula> announced;  // R2
};

struct DerivationStep {
  Formula formula;
  Justification justification;
};

struct Derivation {
  std::vector<DerivationStep> steps;
};

struct Verdict {
  bool accepted = true;
  int step = 0;  // 1-based index of the first failing step
  std::string reason;
};

Verdict check_derivation(const Derivation& d);

/// Parses the derivation file format: one step per line,
///   <n>. <formula> ; <justification>
/// with justifications "A7", "R0 3 5", "R1 2 a", "R2 4 [p]", "R3 1".
/// Blank lines and lines starting with '#' are skipped.
Derivation parse_derivation(const std::string& document);

struct R4Instance {
  std::vector<Formula> premises;  // fill(nf, [psi]f) per announcement
  Formula conclusion;             // fill(nf, box f)
};

/// Finite premise sample for the infinitary rule R4. Every announcement
/// must be epistemic.
R4Instance r4_premises(const NecessityForm& nf, const Formula& f,
                       const std::vector<Formula>& announcements);

enum class Fragment { Epistemic, Pal, Apal };

/// Deterministic pseudo-random formula with size(f) <= max_size, drawn
/// from the requested fragment.
Formula gen_formula(std::uint64_t seed, std::uint64_t max_size,
                    Fragment fragment);

/// Deterministic pseudo-random S5 model: 1..max_worlds worlds, a random
/// partition per agent, a random valuation per atom.
KripkeModel gen_model(std::uint64_t seed, std::size_t max_worlds,
                      const std::vector<std::string>& agents,
                      const std::vector<std::string>& atoms);

}  // namespace apal
