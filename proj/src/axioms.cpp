#include "apal/axioms.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace apal {

namespace {

// f == ~a | b
bool as_implies(const Formula& f, Formula* a, Formula* b) {
  if (f.kind() != Kind::Or || f.left().kind() != Kind::Neg) return false;
  *a = f.left().child();
  *b = f.right();
  return true;
}

// f == (a -> b) & (b -> a), with & expanded as ~(~x | ~y)
bool as_iff(const Formula& f, Formula* a, Formula* b) {
  if (f.kind() != Kind::Neg) return false;
  const Formula& o = f.child();
  if (o.kind() != Kind::Or) return false;
  if (o.left().kind() != Kind::Neg || o.right().kind() != Kind::Neg)
    return false;
  const Formula& x1 = o.left().child();
  const Formula& x2 = o.right().child();
  Formula la = x1, lb = x1, ra = x2, rb = x2;
  if (!as_implies(x1, &la, &lb)) return false;
  if (!as_implies(x2, &ra, &rb)) return false;
  if (!(ra == lb && rb == la)) return false;
  *a = la;
  *b = lb;
  return true;
}

void collect_letters(const Formula& f, std::vector<Formula>& letters,
                     std::size_t cap) {
  switch (f.kind()) {
    case Kind::Neg:
    case Kind::Or:
      for (std::size_t i = 0; i < f.arity(); ++i)
        collect_letters(f.operand(i), letters, cap);
      return;
    case Kind::Bottom:
      return;
    default:
      if (std::find(letters.begin(), letters.end(), f) == letters.end()) {
        if (letters.size() >= cap)
          throw std::runtime_error(
              "tautology check: more than 20 distinct opaque letters");
        letters.push_back(f);
      }
  }
}

bool eval_boolean(const Formula& f, const std::vector<Formula>& letters,
                  std::uint32_t assignment) {
  switch (f.kind()) {
    case Kind::Bottom:
      return false;
    case Kind::Neg:
      return !eval_boolean(f.child(), letters, assignment);
    case Kind::Or:
      return eval_boolean(f.left(), letters, assignment) ||
             eval_boolean(f.right(), letters, assignment);
    default: {
      auto it = std::find(letters.begin(), letters.end(), f);
      return (assignment >> (it - letters.begin())) & 1;
    }
  }
}

}  // namespace

bool is_tautology_instance(const Formula& f) {
  std::vector<Formula> letters;
  collect_letters(f, letters, 20);
  for (std::uint32_t assignment = 0; assignment < (1u << letters.size());
       ++assignment)
    if (!eval_boolean(f, letters, assignment)) return false;
  return true;
}

namespace {

// A1: K_a(x -> y) -> (K_a x -> K_a y)
bool is_a1(const Formula& f) {
  Formula l = f, r = f;
  if (!as_implies(f, &l, &r)) return false;
  if (l.kind() != Kind::Know) return false;
  Formula x = l, y = l;
  if (!as_implies(l.child(), &x, &y)) return false;
  Formula kx = f, ky = f;
  if (!as_implies(r, &kx, &ky)) return false;
  return kx.kind() == Kind::Know && ky.kind() == Kind::Know &&
         kx.agent() == l.agent() && ky.agent() == l.agent() &&
         kx.child() == x && ky.child() == y;
}

// A2: [p](x -> y) -> ([p]x -> [p]y)
bool is_a2(const Formula& f) {
  Formula l = f, r = f;
  if (!as_implies(f, &l, &r)) return false;
  if (l.kind() != Kind::Announce) return false;
  Formula x = l, y = l;
  if (!as_implies(l.continuation(), &x, &y)) return false;
  Formula ax = f, ay = f;
  if (!as_implies(r, &ax, &ay)) return false;
  return ax.kind() == Kind::Announce && ay.kind() == Kind::Announce &&
         ax.announced() == l.announced() && ay.announced() == l.announced() &&
         ax.continuation() == x && ay.continuation() == y;
}

// A3: box(x -> y) -> (box x -> box y)
bool is_a3(const Formula& f) {
  Formula l = f, r = f;
  if (!as_implies(f, &l, &r)) return false;
  if (l.kind() != Kind::Box) return false;
  Formula x = l, y = l;
  if (!as_implies(l.child(), &x, &y)) return false;
  Formula bx = f, by = f;
  if (!as_implies(r, &bx, &by)) return false;
  return bx.kind() == Kind::Box && by.kind() == Kind::Box &&
         bx.child() == x && by.child() == y;
}

// A4: K_a x -> x
bool is_a4(const Formula& f) {
  Formula l = f, r = f;
  if (!as_implies(f, &l, &r)) return false;
  return l.kind() == Kind::Know && l.child() == r;
}

// A5: K_a x -> K_a K_a x
bool is_a5(const Formula& f) {
  Formula l = f, r = f;
  if (!as_implies(f, &l, &r)) return false;
  if (l.kind() != Kind::Know || r.kind() != Kind::Know) return false;
  const Formula& inner = r.child();
  return inner.kind() == Kind::Know && r.agent() == l.agent() &&
         inner.agent() == l.agent() && inner.child() == l.child();
}

// A6: x -> K_a ~K_a ~x
bool is_a6(const Formula& f) {
  Formula l = f, r = f;
  if (!as_implies(f, &l, &r)) return false;
  if (r.kind() != Kind::Know) return false;
  const Formula& n1 = r.child();
  if (n1.kind() != Kind::Neg || n1.child().kind() != Kind::Know) return false;
  const Formula& k2 = n1.child();
  if (k2.agent() != r.agent()) return false;
  return k2.child().kind() == Kind::Neg && k2.child().child() == l;
}

// A7: [x]p <-> (x -> p), p an atom
bool is_a7(const Formula& f) {
  Formula l = f, r = f;
  if (!as_iff(f, &l, &r)) return false;
  if (l.kind() != Kind::Announce || l.continuation().kind() != Kind::Atom)
    return false;
  Formula x = f, p = f;
  if (!as_implies(r, &x, &p)) return false;
  return x == l.announced() && p == l.continuation();
}

// A8: [x]false <-> ~x
bool is_a8(const Formula& f) {
  Formula l = f, r = f;
  if (!as_iff(f, &l, &r)) return false;
  if (l.kind() != Kind::Announce || l.continuation().kind() != Kind::Bottom)
    return false;
  return r.kind() == Kind::Neg && r.child() == l.announced();
}

// A9: [x]~y <-> (x -> ~[x]y)
bool is_a9(const Formula& f) {
  Formula l = f, r = f;
  if (!as_iff(f, &l, &r)) return false;
  if (l.kind() != Kind::Announce || l.continuation().kind() != Kind::Neg)
    return false;
  Formula x = f, n = f;
  if (!as_implies(r, &x, &n)) return false;
  if (x != l.announced()) return false;
  if (n.kind() != Kind::Neg || n.child().kind() != Kind::Announce)
    return false;
  const Formula& inner = n.child();
  return inner.announced() == l.announced() &&
         inner.continuation() == l.continuation().child();
}

// A10: [x](y | z) <-> [x]y | [x]z
bool is_a10(const Formula& f) {
  Formula l = f, r = f;
  if (!as_iff(f, &l, &r)) return false;
  if (l.kind() != Kind::Announce || l.continuation().kind() != Kind::Or)
    return false;
  if (r.kind() != Kind::Or) return false;
  const Formula& ay = r.left();
  const Formula& az = r.right();
  return ay.kind() == Kind::Announce && az.kind() == Kind::Announce &&
         ay.announced() == l.announced() && az.announced() == l.announced() &&
         ay.continuation() == l.continuation().left() &&
         az.continuation() == l.continuation().right();
}

// A11: [x]K_a y <-> (x -> K_a [x]y)
bool is_a11(const Formula& f) {
  Formula l = f, r = f;
  if (!as_iff(f, &l, &r)) return false;
  if (l.kind() != Kind::Announce || l.continuation().kind() != Kind::Know)
    return false;
  Formula x = f, k = f;
  if (!as_implies(r, &x, &k)) return false;
  if (x != l.announced()) return false;
  if (k.kind() != Kind::Know || k.agent() != l.continuation().agent())
    return false;
  const Formula& inner = k.child();
  return inner.kind() == Kind::Announce &&
         inner.announced() == l.announced() &&
         inner.continuation() == l.continuation().child();
}

// A12: [x][y]z <-> [<x>y]z, with <x>y expanded as ~[x]~y
bool is_a12(const Formula& f) {
  Formula l = f, r = f;
  if (!as_iff(f, &l, &r)) return false;
  if (l.kind() != Kind::Announce ||
      l.continuation().kind() != Kind::Announce)
    return false;
  if (r.kind() != Kind::Announce) return false;
  const Formula& x = l.announced();
  const Formula& y = l.continuation().announced();
  const Formula& z = l.continuation().continuation();
  return r.announced() == Formula::dia_announce(x, y) &&
         r.continuation() == z;
}

// A13: box x -> [y]x, y epistemic
bool is_a13(const Formula& f) {
  Formula l = f, r = f;
  if (!as_implies(f, &l, &r)) return false;
  if (l.kind() != Kind::Box || r.kind() != Kind::Announce) return false;
  return r.continuation() == l.child() && is_epistemic(r.announced());
}

}  // namespace

bool matches_schema(const Formula& f, const std::string& axiom) {
  if (axiom == "A0") {
    try {
      return is_tautology_instance(f);
    } catch (const std::runtime_error&) {
      return false;
    }
  }
  if (axiom == "A1") return is_a1(f);
  if (axiom == "A2") return is_a2(f);
  if (axiom == "A3") return is_a3(f);
  if (axiom == "A4") return is_a4(f);
  if (axiom == "A5") return is_a5(f);
  if (axiom == "A6") return is_a6(f);
  if (axiom == "A7") return is_a7(f);
  if (axiom == "A8") return is_a8(f);
  if (axiom == "A9") return is_a9(f);
  if (axiom == "A10") return is_a10(f);
  if (axiom == "A11") return is_a11(f);
  if (axiom == "A12") return is_a12(f);
  if (axiom == "A13") return is_a13(f);
  throw std::invalid_argument("unknown axiom name '" + axiom + "'");
}

std::optional<std::string> match_axiom(const Formula& f) {
  static const char* kSchemas[] = {"A1", "A2",  "A3",  "A4",  "A5",  "A6",
                                   "A7", "A8",  "A9",  "A10", "A11", "A12",
                                   "A13"};
  for (const char* name : kSchemas)
    if (matches_schema(f, name)) return std::string(name);
  if (matches_schema(f, "A0")) return std::string("A0");
  return std::nullopt;
}

Verdict check_derivation(const Derivation& d) {
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const DerivationStep& step = d.steps[i];
    const Justification& j = step.justification;
    int n = static_cast<int>(i) + 1;
    auto reject = [&](const std::string& reason) {
      return Verdict{false, n, reason};
    };
    auto premise = [&](int index, const Formula** out) -> std::optional<Verdict> {
      if (index < 1 || index > static_cast<int>(i))
        return reject("step reference " + std::to_string(index) +
                      " does not precede step " + std::to_string(n));
      *out = &d.steps[index - 1].formula;
      return std::nullopt;
    };

    switch (j.kind) {
      case Justification::Kind::Axiom:
        try {
          if (!matches_schema(step.formula, j.axiom))
            return reject("formula is not an instance of " + j.axiom);
        } catch (const std::runtime_error& e) {
          return reject(e.what());
        }
        break;
      case Justification::Kind::R0: {
        const Formula* from;
        const Formula* imp;
        if (auto v = premise(j.from, &from)) return *v;
        if (auto v = premise(j.implication, &imp)) return *v;
        Formula a = *from, b = *from;
        if (!as_implies(*imp, &a, &b))
          return reject("no implication premise");
        if (a != *from)
          return reject("implication antecedent does not match the premise");
        if (b != step.formula)
          return reject("formula is not the implication's consequent");
        break;
      }
      case Justification::Kind::R1: {
        const Formula* from;
        if (auto v = premise(j.from, &from)) return *v;
        if (step.formula != Formula::know(j.agent, *from))
          return reject("formula is not K " + j.agent + " of the premise");
        break;
      }
      case Justification::Kind::R2: {
        const Formula* from;
        if (auto v = premise(j.from, &from)) return *v;
        if (step.formula != Formula::announce(*j.announced, *from))
          return reject("formula is not the premise under the announcement");
        break;
      }
      case Justification::Kind::R3: {
        const Formula* from;
        if (auto v = premise(j.from, &from)) return *v;
        if (step.formula != Formula::box(*from))
          return reject("formula is not box of the premise");
        break;
      }
    }
  }
  return Verdict{};
}

Derivation parse_derivation(const std::string& document) {
  Derivation d;
  std::istringstream in(document);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    auto first = trimmed.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (trimmed[first] == '#') continue;

    auto fail = [&](const std::string& message) {
      throw std::runtime_error("derivation line " + std::to_string(lineno) +
                               ": " + message);
    };

    auto dot = trimmed.find('.');
    if (dot == std::string::npos) fail("expected '<n>. <formula> ; <just>'");
    int number = 0;
    try {
      number = std::stoi(trimmed.substr(first, dot - first));
    } catch (const std::exception&) {
      fail("invalid step number");
    }
    if (number != static_cast<int>(d.steps.size()) + 1)
      fail("steps must be numbered consecutively from 1");

    auto semi = trimmed.rfind(';');
    if (semi == std::string::npos || semi < dot) fail("missing ';'");
    std::string formula_text = trimmed.substr(dot + 1, semi - dot - 1);
    std::string just_text = trimmed.substr(semi + 1);

    Formula formula = parse(formula_text);

    std::istringstream js(just_text);
    std::string tag;
    js >> tag;
    Justification j{};
    if (tag.size() >= 2 && tag[0] == 'A') {
      j.kind = Justification::Kind::Axiom;
      j.axiom = tag;
      try {
        matches_schema(Formula::bottom(), tag);  // validates the name
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    } else if (tag == "R0") {
      j.kind = Justification::Kind::R0;
      if (!(js >> j.from >> j.implication)) fail("R0 needs two step indices");
    } else if (tag == "R1") {
      j.kind = Justification::Kind::R1;
      if (!(js >> j.from >> j.agent)) fail("R1 needs a step index and agent");
    } else if (tag == "R2") {
      j.kind = Justification::Kind::R2;
      if (!(js >> j.from)) fail("R2 needs a step index");
      std::string rest;
      std::getline(js, rest);
      auto lb = rest.find('[');
      auto rb = rest.rfind(']');
      if (lb == std::string::npos || rb == std::string::npos || rb <= lb)
        fail("R2 needs the announced formula in brackets");
      j.announced = parse(rest.substr(lb + 1, rb - lb - 1));
    } else if (tag == "R3") {
      j.kind = Justification::Kind::R3;
      if (!(js >> j.from)) fail("R3 needs a step index");
    } else {
      fail("unknown justification '" + tag + "'");
    }
    d.steps.push_back({std::move(formula), std::move(j)});
  }
  return d;
}

R4Instance r4_premises(const NecessityForm& nf, const Formula& f,
                       const std::vector<Formula>& announcements) {
  R4Instance instance{{}, nf.fill(Formula::box(f))};
  for (const Formula& psi : announcements) {
    if (!is_epistemic(psi))
      throw std::invalid_argument("R4 announcement must be epistemic: " +
                                  render(psi));
    instance.premises.push_back(nf.fill(Formula::announce(psi, f)));
  }
  return instance;
}

}  // namespace apal
