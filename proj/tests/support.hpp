// Test-only helpers shared by the checker/axioms suites.
#pragma once

#include <optional>
#include <vector>

#include "apal/formula.hpp"
#include "apal/model.hpp"

namespace apal::testsupport {

// Characteristic epistemic formulas of the worlds of a small model:
// after |W| refinement rounds, delta[w] is true exactly on w's
// bisimilarity class. Built from the semantics alone, independent of
// bisim_quotient.
inline std::vector<Formula> world_formulas(const KripkeModel& m) {
  const std::size_t n = m.world_count();
  std::vector<Formula> delta;
  for (std::size_t w = 0; w < n; ++w) {
    std::optional<Formula> acc;
    for (const auto& [atom, set] : m.valuation()) {
      Formula lit = (set >> w) & 1 ? Formula::atom(atom)
                                   : Formula::neg(Formula::atom(atom));
      acc = acc ? Formula::conj(*acc, lit) : lit;
    }
    delta.push_back(acc ? *acc : Formula::verum());
  }

  for (std::size_t round = 0; round < n; ++round) {
    std::vector<Formula> next;
    for (std::size_t w = 0; w < n; ++w) {
      Formula acc = delta[w];
      for (std::size_t a = 0; a < m.agents().size(); ++a) {
        WorldSet block = m.block_of(a, w);
        std::optional<Formula> reachable;
        for (std::size_t v = 0; v < n; ++v)
          if ((block >> v) & 1) {
            reachable = reachable ? Formula::disj(*reachable, delta[v])
                                  : delta[v];
            acc = Formula::conj(
                acc, Formula::dual_know(m.agents()[a], delta[v]));
          }
        acc = Formula::conj(acc, Formula::know(m.agents()[a], *reachable));
      }
      next.push_back(acc);
    }
    delta = std::move(next);
  }
  return delta;
}

// An epistemic formula whose truth set is the given (nonempty,
// bisimulation-closed) world set.
inline Formula characteristic_formula(const KripkeModel& m, WorldSet set,
                                      const std::vector<Formula>& delta) {
  std::optional<Formula> acc;
  for (std::size_t w = 0; w < m.world_count(); ++w)
    if ((set >> w) & 1)
      acc = acc ? Formula::disj(*acc, delta[w]) : delta[w];
  return *acc;
}

}  // namespace apal::testsupport
