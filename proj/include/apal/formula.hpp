#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace apal {

enum class Kind : std::uint8_t { Atom, Bottom, Neg, Or, Know, Announce, Box };

/// Immutable formula over the primitive constructs: atoms, falsum,
/// negation, disjunction, K_a, announcement [phi]psi, and box.
/// Derived connectives (&, ->, <->, top, dual K, <phi>psi, dia) are
/// expanded at construction and never appear as node kinds.
class Formula {
 public:
  Formula() = delete;

  static Formula atom(std::string name);
  static Formula bottom();
  static Formula neg(Formula f);
  static Formula disj(Formula l, Formula r);
  static Formula know(std::string agent, Formula f);
  static Formula announce(Formula announced, Formula continuation);
  static Formula box(Formula f);

  // Abbreviations, expanded to primitives.
  static Formula verum();                            // ~false
  static Formula conj(Formula l, Formula r);         // ~(~l | ~r)
  static Formula implies(Formula l, Formula r);      // ~l | r
  static Formula iff(Formula l, Formula r);          // (l->r) & (r->l)
  static Formula dual_know(std::string agent, Formula f);  // ~K a ~f
  static Formula dia_announce(Formula a, Formula c);       // ~[a]~c
  static Formula dia(Formula f);                           // ~box ~f

  Kind kind() const;
  const std::string& name() const;   // Atom
  const std::string& agent() const;  // Know
  const Formula& child() const;      // Neg, Know, Box
  const Formula& left() const;       // Or
  const Formula& right() const;      // Or
  const Formula& announced() const;     // Announce
  const Formula& continuation() const;  // Announce

  std::size_t arity() const;
  const Formula& operand(std::size_t i) const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }
  bool operator<(const Formula& other) const;  // structural, for ordered sets

  std::size_t hash() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::string label,
                      std::vector<Formula> operands);
  std::shared_ptr<const Node> node_;

  friend std::uint64_t size(const Formula& f);
  friend std::uint64_t box_depth(const Formula& f);
};

struct FragmentFlags {
  bool box_free = true;
  bool announcement_free = true;
  bool epistemic = true;
};

enum class Order { Size, DBox, SizeDBox, StrictSubformula };

std::uint64_t size(const Formula& f);
std::uint64_t box_depth(const Formula& f);
bool less(const Formula& f, const Formula& g, Order order);

/// Proper subformulas of f (f itself excluded); set semantics.
std::set<Formula> subformulas(const Formula& f);
FragmentFlags classify(const Formula& f);
bool is_epistemic(const Formula& f);
bool is_box_free(const Formula& f);

/// Context with a single hole, built from ->, K_a and announcements.
class NecessityForm {
 public:
  static NecessityForm hole();
  static NecessityForm implies(Formula antecedent, NecessityForm rest);
  static NecessityForm know(std::string agent, NecessityForm rest);
  static NecessityForm announce(Formula announced, NecessityForm rest);

  /// Replaces the hole with f; -> is expanded as its abbreviation.
  Formula fill(const Formula& f) const;

 private:
  enum class NfKind : std::uint8_t { Hole, Implies, Know, Announce };
  struct Layer {
    NfKind kind;
    std::string agent;          // Know
    std::optional<Formula> formula;  // Implies antecedent / Announce announced
  };
  std::vector<Layer> layers_;  // outermost first, hole implicit at the end
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error(std::move(message)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Formula parse(const std::string& text);

/// Minimal-parentheses rendering; parse(render(f)) == f.
std::string render(const Formula& f);

}  // namespace apal

template <>
struct std::hash<apal::Formula> {
  std::size_t operator()(const apal::Formula& f) const { return f.hash(); }
};
