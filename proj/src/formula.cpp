#include "apal/formula.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace apal {

struct Formula::Node {
  Kind kind;
  std::string label;  // atom name or agent
  std::vector<Formula> operands;
  std::uint64_t size;
  std::uint64_t box_depth;
  std::size_t hash;
};

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("atom name must be nonempty");
  return Formula::make(Kind::Atom, std::move(name), {});
}
Formula Formula::bottom() { return make(Kind::Bottom, "", {}); }
Formula Formula::neg(Formula f) {
  return make(Kind::Neg, "", {std::move(f)});
}
Formula Formula::disj(Formula l, Formula r) {
  return make(Kind::Or, "", {std::move(l), std::move(r)});
}
Formula Formula::know(std::string agent, Formula f) {
  if (agent.empty()) throw std::invalid_argument("agent must be nonempty");
  return make(Kind::Know, std::move(agent), {std::move(f)});
}
Formula Formula::announce(Formula announced, Formula continuation) {
  return make(Kind::Announce, "",
                   {std::move(announced), std::move(continuation)});
}
Formula Formula::box(Formula f) {
  return make(Kind::Box, "", {std::move(f)});
}

Formula Formula::verum() { return neg(bottom()); }
Formula Formula::conj(Formula l, Formula r) {
  return neg(disj(neg(std::move(l)), neg(std::move(r))));
}
Formula Formula::implies(Formula l, Formula r) {
  return disj(neg(std::move(l)), std::move(r));
}
Formula Formula::iff(Formula l, Formula r) {
  return conj(implies(l, r), implies(r, l));
}
Formula Formula::dual_know(std::string agent, Formula f) {
  return neg(know(std::move(agent), neg(std::move(f))));
}
Formula Formula::dia_announce(Formula a, Formula c) {
  return neg(announce(std::move(a), neg(std::move(c))));
}
Formula Formula::dia(Formula f) { return neg(box(neg(std::move(f)))); }

Formula Formula::make(Kind kind, std::string label,
                      std::vector<Formula> operands) {
  auto node = std::make_shared<Formula::Node>();
  node->kind = kind;
  node->label = std::move(label);
  node->operands = std::move(operands);

  // Size: atoms and falsum count 1; unary constructs add 1; disjunction
  // adds 1 over both sides; the announcement continuation is weighted 3.
  // Box depth: +1 under box; announcements add the depths of both parts,
  // disjunction takes the maximum.
  switch (node->kind) {
    case Kind::Atom:
    case Kind::Bottom:
      node->size = 1;
      node->box_depth = 0;
      break;
    case Kind::Neg:
    case Kind::Know:
      node->size = apal::size(node->operands[0]) + 1;
      node->box_depth = apal::box_depth(node->operands[0]);
      break;
    case Kind::Or:
      node->size =
          apal::size(node->operands[0]) + apal::size(node->operands[1]) + 1;
      node->box_depth = std::max(apal::box_depth(node->operands[0]),
                                 apal::box_depth(node->operands[1]));
      break;
    case Kind::Announce:
      node->size =
          apal::size(node->operands[0]) + 3 * apal::size(node->operands[1]);
      node->box_depth = apal::box_depth(node->operands[0]) +
                        apal::box_depth(node->operands[1]);
      break;
    case Kind::Box:
      node->size = apal::size(node->operands[0]) + 1;
      node->box_depth = apal::box_depth(node->operands[0]) + 1;
      break;
  }

  std::size_t h = std::hash<int>{}(static_cast<int>(node->kind));
  h = combine(h, std::hash<std::string>{}(node->label));
  for (const Formula& op : node->operands) h = combine(h, op.hash());
  node->hash = h;

  return Formula(std::move(node));
}

Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const {
  assert(node_->kind == Kind::Atom);
  return node_->label;
}
const std::string& Formula::agent() const {
  assert(node_->kind == Kind::Know);
  return node_->label;
}
const Formula& Formula::child() const { return node_->operands[0]; }
const Formula& Formula::left() const { return node_->operands[0]; }
const Formula& Formula::right() const { return node_->operands[1]; }
const Formula& Formula::announced() const { return node_->operands[0]; }
const Formula& Formula::continuation() const { return node_->operands[1]; }

std::size_t Formula::arity() const { return node_->operands.size(); }
const Formula& Formula::operand(std::size_t i) const {
  return node_->operands[i];
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash) return false;
  if (node_->kind != other.node_->kind) return false;
  if (node_->label != other.node_->label) return false;
  if (node_->operands.size() != other.node_->operands.size()) return false;
  for (std::size_t i = 0; i < node_->operands.size(); ++i)
    if (node_->operands[i] != other.node_->operands[i]) return false;
  return true;
}

bool Formula::operator<(const Formula& other) const {
  if (node_ == other.node_) return false;
  if (node_->kind != other.node_->kind)
    return node_->kind < other.node_->kind;
  if (node_->label != other.node_->label) return node_->label < other.node_->label;
  if (node_->operands.size() != other.node_->operands.size())
    return node_->operands.size() < other.node_->operands.size();
  for (std::size_t i = 0; i < node_->operands.size(); ++i) {
    if (node_->operands[i] < other.node_->operands[i]) return true;
    if (other.node_->operands[i] < node_->operands[i]) return false;
  }
  return false;
}

std::size_t Formula::hash() const { return node_->hash; }

std::uint64_t size(const Formula& f) { return f.node_->size; }

std::uint64_t box_depth(const Formula& f) { return f.node_->box_depth; }

namespace {

bool is_proper_subformula(const Formula& f, const Formula& g) {
  for (std::size_t i = 0; i < g.arity(); ++i) {
    const Formula& op = g.operand(i);
    if (op == f || is_proper_subformula(f, op)) return true;
  }
  return false;
}

}  // namespace

bool less(const Formula& f, const Formula& g, Order order) {
  switch (order) {
    case Order::Size:
      return size(f) < size(g);
    case Order::DBox:
      return box_depth(f) < box_depth(g);
    case Order::SizeDBox:
      return box_depth(f) < box_depth(g) ||
             (box_depth(f) == box_depth(g) && size(f) < size(g));
    case Order::StrictSubformula:
      return is_proper_subformula(f, g);
  }
  return false;
}

static void collect_subformulas(const Formula& f, std::set<Formula>& out) {
  for (std::size_t i = 0; i < f.arity(); ++i) {
    const Formula& op = f.operand(i);
    if (out.insert(op).second) collect_subformulas(op, out);
  }
}

std::set<Formula> subformulas(const Formula& f) {
  std::set<Formula> out;
  collect_subformulas(f, out);
  out.erase(f);
  return out;
}

FragmentFlags classify(const Formula& f) {
  FragmentFlags flags;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (g.kind() == Kind::Box) flags.box_free = false;
    if (g.kind() == Kind::Announce) flags.announcement_free = false;
    for (std::size_t i = 0; i < g.arity(); ++i) walk(g.operand(i));
  };
  walk(f);
  flags.epistemic = flags.box_free && flags.announcement_free;
  return flags;
}

bool is_epistemic(const Formula& f) { return classify(f).epistemic; }
bool is_box_free(const Formula& f) { return classify(f).box_free; }

NecessityForm NecessityForm::hole() { return NecessityForm{}; }

NecessityForm NecessityForm::implies(Formula antecedent, NecessityForm rest) {
  NecessityForm nf;
  nf.layers_.push_back({NfKind::Implies, "", std::move(antecedent)});
  nf.layers_.insert(nf.layers_.end(), rest.layers_.begin(),
                    rest.layers_.end());
  return nf;
}

NecessityForm NecessityForm::know(std::string agent, NecessityForm rest) {
  NecessityForm nf;
  nf.layers_.push_back({NfKind::Know, std::move(agent), std::nullopt});
  nf.layers_.insert(nf.layers_.end(), rest.layers_.begin(),
                    rest.layers_.end());
  return nf;
}

NecessityForm NecessityForm::announce(Formula announced, NecessityForm rest) {
  NecessityForm nf;
  nf.layers_.push_back({NfKind::Announce, "", std::move(announced)});
  nf.layers_.insert(nf.layers_.end(), rest.layers_.begin(),
                    rest.layers_.end());
  return nf;
}

Formula NecessityForm::fill(const Formula& f) const {
  Formula result = f;
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
    switch (it->kind) {
      case NfKind::Implies:
        result = Formula::implies(*it->formula, result);
        break;
      case NfKind::Know:
        result = Formula::know(it->agent, result);
        break;
      case NfKind::Announce:
        result = Formula::announce(*it->formula, result);
        break;
      case NfKind::Hole:
        break;
    }
  }
  return result;
}

}  // namespace apal
