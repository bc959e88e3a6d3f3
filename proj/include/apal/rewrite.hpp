#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apal/formula.hpp"

namespace apal {

enum class Rule { A7, A8, A9, A10, A11, A12 };

const char* rule_name(Rule rule);

/// Termination measure for the reduction: announcements weigh in
/// multiplicatively, (4 + weight(announced)) * weight(continuation).
/// Every left-to-right application of A7-A12 strictly decreases it.
std::uint64_t weight(const Formula& f);

struct RewriteStep {
  Rule rule;
  std::vector<int> path;  // child indices from the root to the redex
  Formula before;         // whole formula before the step
  Formula after;          // whole formula after the step
};

struct RewriteTrace {
  Formula start;
  std::vector<RewriteStep> steps;
  Formula result;
};

/// One reduction step at the leftmost-outermost announcement, oriented
/// by the continuation's head: A7 atom, A8 falsum, A9 negation, A10
/// disjunction, A11 knowledge, A12 nested announcement. Returns nothing
/// iff f is epistemic. Throws on input containing box.
std::optional<RewriteStep> reduce_step(const Formula& f);

/// Iterates reduce_step until the formula is epistemic.
RewriteTrace reduce_to_epistemic(const Formula& f);

std::string format_path(const std::vector<int>& path);
std::string format_step(const RewriteStep& step);
std::string format_trace(const RewriteTrace& trace);

}  // namespace apal
