#include "apal/rewrite.hpp"

#include <stdexcept>

namespace apal {

const char* rule_name(Rule rule) {
  switch (rule) {
    case Rule::A7: return "A7";
    case Rule::A8: return "A8";
    case Rule::A9: return "A9";
    case Rule::A10: return "A10";
    case Rule::A11: return "A11";
    case Rule::A12: return "A12";
  }
  return "?";
}

std::uint64_t weight(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bottom:
      return 1;
    case Kind::Neg:
    case Kind::Know:
    case Kind::Box:
      return 1 + weight(f.operand(0));
    case Kind::Or:
      return 1 + weight(f.left()) + weight(f.right());
    case Kind::Announce:
      return (4 + weight(f.announced())) * weight(f.continuation());
  }
  return 1;
}

namespace {

struct Redex {
  std::vector<int> path;
  Rule rule;
  Formula replacement;
};

// Right-hand sides of the reduction axioms, with -> expanded.
Formula rule_rhs(const Formula& redex, Rule* rule) {
  const Formula& phi = redex.announced();
  const Formula& cont = redex.continuation();
  switch (cont.kind()) {
    case Kind::Atom:
      *rule = Rule::A7;
      return Formula::implies(phi, cont);
    case Kind::Bottom:
      *rule = Rule::A8;
      return Formula::neg(phi);
    case Kind::Neg:
      *rule = Rule::A9;
      return Formula::implies(phi,
                              Formula::neg(Formula::announce(phi, cont.child())));
    case Kind::Or:
      *rule = Rule::A10;
      return Formula::disj(Formula::announce(phi, cont.left()),
                           Formula::announce(phi, cont.right()));
    case Kind::Know:
      *rule = Rule::A11;
      return Formula::implies(
          phi, Formula::know(cont.agent(),
                             Formula::announce(phi, cont.child())));
    case Kind::Announce:
      *rule = Rule::A12;
      return Formula::announce(Formula::dia_announce(phi, cont.announced()),
                               cont.continuation());
    case Kind::Box:
      break;
  }
  throw std::invalid_argument("reduction requires a box-free formula");
}

// Leftmost-outermost announcement: the node itself before its operands,
// announced part before continuation.
std::optional<Redex> find_redex(const Formula& f, std::vector<int>& path) {
  if (f.kind() == Kind::Announce) {
    Rule rule;
    Formula rhs = rule_rhs(f, &rule);
    return Redex{path, rule, std::move(rhs)};
  }
  for (std::size_t i = 0; i < f.arity(); ++i) {
    path.push_back(static_cast<int>(i));
    if (auto found = find_redex(f.operand(i), path)) return found;
    path.pop_back();
  }
  return std::nullopt;
}

Formula replace_at(const Formula& f, const std::vector<int>& path,
                   std::size_t depth, const Formula& replacement) {
  if (depth == path.size()) return replacement;
  int which = path[depth];
  switch (f.kind()) {
    case Kind::Neg:
      return Formula::neg(replace_at(f.child(), path, depth + 1, replacement));
    case Kind::Know:
      return Formula::know(f.agent(),
                           replace_at(f.child(), path, depth + 1, replacement));
    case Kind::Box:
      return Formula::box(replace_at(f.child(), path, depth + 1, replacement));
    case Kind::Or:
      if (which == 0)
        return Formula::disj(
            replace_at(f.left(), path, depth + 1, replacement), f.right());
      return Formula::disj(f.left(),
                           replace_at(f.right(), path, depth + 1, replacement));
    case Kind::Announce:
      if (which == 0)
        return Formula::announce(
            replace_at(f.announced(), path, depth + 1, replacement),
            f.continuation());
      return Formula::announce(
          f.announced(),
          replace_at(f.continuation(), path, depth + 1, replacement));
    default:
      throw std::logic_error("invalid rewrite path");
  }
}

}  // namespace

std::optional<RewriteStep> reduce_step(const Formula& f) {
  if (!is_box_free(f))
    throw std::invalid_argument("reduction requires a box-free formula");
  std::vector<int> path;
  auto redex = find_redex(f, path);
  if (!redex) return std::nullopt;
  Formula after = replace_at(f, redex->path, 0, redex->replacement);
  return RewriteStep{redex->rule, redex->path, f, std::move(after)};
}

RewriteTrace reduce_to_epistemic(const Formula& f) {
  RewriteTrace trace{f, {}, f};
  while (auto step = reduce_step(trace.result)) {
    if (weight(step->after) >= weight(step->before))
      throw std::logic_error("termination measure failed to decrease");
    trace.result = step->after;
    trace.steps.push_back(std::move(*step));
  }
  return trace;
}

std::string format_path(const std::vector<int>& path) {
  if (path.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

std::string format_step(const RewriteStep& step) {
  return std::string(rule_name(step.rule)) + " @ " + format_path(step.path) +
         ": " + render(step.before) + " ==> " + render(step.after);
}

std::string format_trace(const RewriteTrace& trace) {
  std::string out;
  for (const RewriteStep& step : trace.steps) {
    out += format_step(step);
    out += '\n';
  }
  return out;
}

}  // namespace apal
