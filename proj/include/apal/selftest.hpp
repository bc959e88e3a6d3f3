#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apal/formula.hpp"

namespace apal {

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

/// Lemma-style Size inequalities and the box-depth equalities for the
/// three announcement commutation clauses.
SuiteResult run_size_lemma_suite(std::uint64_t seed, std::uint64_t cases);

/// Every row of the induction-order table, with epistemic instantiation
/// where the row requires it.
SuiteResult run_corollary_suite(std::uint64_t seed, std::uint64_t cases_per_row);

/// Irreflexivity and transitivity of the lexicographic (box-depth, Size)
/// order on sampled pairs and triples.
SuiteResult run_order_laws_suite(std::uint64_t seed, std::uint64_t cases);

/// Validity of random instances of A1-A13 (epistemic side condition on
/// A13) on random S5 models, plus R0-R3 validity preservation.
SuiteResult run_axiom_validity_suite(std::uint64_t seed, std::uint64_t cases,
                                     std::size_t max_worlds = 6);

/// Agreement between the quotient-based box clause and the brute-force
/// subset oracle on random small models.
SuiteResult run_box_oracle_suite(std::uint64_t seed, std::uint64_t cases,
                                 std::size_t max_worlds = 5);

/// Semantic soundness of the announcement reduction: input and reduced
/// output have the same truth set on random models; each step decreases
/// the weight measure.
SuiteResult run_reduction_suite(std::uint64_t seed, std::uint64_t cases,
                                std::size_t models_per_case = 5,
                                std::size_t max_worlds = 6);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed,
                                        std::uint64_t cases);

}  // namespace apal
