#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "apal/axioms.hpp"
#include "apal/formula.hpp"

using namespace apal;

namespace {

Formula P() { return Formula::atom("p"); }
Formula Q() { return Formula::atom("q"); }
Formula R() { return Formula::atom("r"); }

// Independent size/depth oracles, written straight off the recursive
// definitions; the production path caches these at node construction.
std::uint64_t size_oracle(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bottom:
      return 1;
    case Kind::Neg:
    case Kind::Know:
    case Kind::Box:
      return size_oracle(f.operand(0)) + 1;
    case Kind::Or:
      return size_oracle(f.left()) + size_oracle(f.right()) + 1;
    case Kind::Announce:
      return size_oracle(f.announced()) + 3 * size_oracle(f.continuation());
  }
  return 0;
}

std::uint64_t depth_oracle(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bottom:
      return 0;
    case Kind::Neg:
    case Kind::Know:
      return depth_oracle(f.operand(0));
    case Kind::Or:
      return std::max(depth_oracle(f.left()), depth_oracle(f.right()));
    case Kind::Announce:
      return depth_oracle(f.announced()) + depth_oracle(f.continuation());
    case Kind::Box:
      return depth_oracle(f.child()) + 1;
  }
  return 0;
}

std::uint64_t node_count(const Formula& f) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < f.arity(); ++i) count += node_count(f.operand(i));
  return count;
}

}  // namespace

TEST_CASE("parsing the concrete grammar") {
  CHECK(parse("~(p | q)") == Formula::neg(Formula::disj(P(), Q())));
  CHECK(parse("[p] K a q") == Formula::announce(P(), Formula::know("a", Q())));
  CHECK(parse("p -> q") == Formula::disj(Formula::neg(P()), Q()));
  CHECK(parse("K a p") == Formula::know("a", P()));
  CHECK(parse("box p") == Formula::box(P()));
  CHECK(parse("dia p") == Formula::dia(P()));
  CHECK(parse("<p> q") == Formula::dia_announce(P(), Q()));
  CHECK(parse("p & q") == Formula::conj(P(), Q()));
  CHECK(parse("p <-> q") == Formula::iff(P(), Q()));
  CHECK(parse("false") == Formula::bottom());
  CHECK(parse("my_atom1") == Formula::atom("my_atom1"));
  CHECK(parse("K Bob p") == Formula::know("Bob", P()));
}

TEST_CASE("precedence and associativity") {
  // unary > & > | > -> > <->
  CHECK(parse("~p | q") == Formula::disj(Formula::neg(P()), Q()));
  CHECK(parse("p & q | r") == Formula::disj(Formula::conj(P(), Q()), R()));
  CHECK(parse("p | q -> r") ==
        Formula::implies(Formula::disj(P(), Q()), R()));
  CHECK(parse("p -> q -> r") ==
        Formula::implies(P(), Formula::implies(Q(), R())));
  CHECK(parse("p | q | r") ==
        Formula::disj(Formula::disj(P(), Q()), R()));
  CHECK(parse("p & q & r") == Formula::conj(Formula::conj(P(), Q()), R()));
  CHECK(parse("K a p | q") == Formula::disj(Formula::know("a", P()), Q()));
  CHECK(parse("[p] q | r") ==
        Formula::disj(Formula::announce(P(), Q()), R()));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse("p |"), ParseError);
  CHECK_THROWS_AS(parse("(p"), ParseError);
  CHECK_THROWS_AS(parse("p q"), ParseError);
  CHECK_THROWS_AS(parse("@"), ParseError);
  CHECK_THROWS_AS(parse("[p q"), ParseError);
  CHECK_THROWS_AS(parse("K 1 p"), ParseError);
  try {
    parse("p | | q");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("rendering") {
  CHECK(render(Formula::neg(P())) == "~p");
  CHECK(render(Formula::announce(P(), Formula::box(Q()))) == "[p] box q");
  CHECK(render(Formula::neg(Formula::disj(P(), Q()))) == "~(p | q)");
  CHECK(render(Formula::disj(Formula::disj(P(), Q()), R())) == "p | q | r");
  CHECK(render(Formula::disj(P(), Formula::disj(Q(), R()))) ==
        "p | (q | r)");
}

TEST_CASE("parse-render round trip on random formulas") {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    Formula f = gen_formula(i, 12, Fragment::Apal);
    std::string text = render(f);
    CHECK(parse(text) == f);
    CHECK(render(parse(text)) == text);
  }
}

TEST_CASE("size follows the weighted count") {
  CHECK(size(P()) == 1);
  CHECK(size(Formula::announce(P(), Q())) == 4);
  CHECK(size(Formula::neg(Formula::announce(P(), Q()))) == 5);
  CHECK(size(Formula::announce(P(), Formula::neg(Q()))) == 7);
  for (std::uint64_t i = 0; i < 500; ++i) {
    Formula f = gen_formula(i + 9000, 15, Fragment::Apal);
    CHECK(size(f) == size_oracle(f));
    CHECK(box_depth(f) == depth_oracle(f));
  }
}

TEST_CASE("box depth") {
  CHECK(box_depth(P()) == 0);
  CHECK(box_depth(Formula::box(Formula::box(P()))) == 2);
  for (std::uint64_t i = 0; i < 500; ++i) {
    Formula f = gen_formula(i, 10, Fragment::Epistemic);
    CHECK(box_depth(f) == 0);  // epistemic formulas have depth 0
  }
}

TEST_CASE("induction orders") {
  Formula ann_pq = Formula::announce(P(), Q());
  CHECK(less(ann_pq, Formula::box(Q()), Order::SizeDBox));
  CHECK_FALSE(less(P(), P(), Order::Size));
  CHECK_FALSE(less(P(), P(), Order::DBox));
  CHECK_FALSE(less(P(), P(), Order::SizeDBox));
  CHECK_FALSE(less(P(), P(), Order::StrictSubformula));
  CHECK(less(Formula::know("a", ann_pq),
             Formula::announce(P(), Formula::know("a", Q())), Order::Size));
  CHECK(less(P(), Formula::neg(P()), Order::StrictSubformula));
  CHECK_FALSE(less(Formula::neg(P()), Formula::neg(Q()), Order::StrictSubformula));
}

TEST_CASE("proper subformulas collapse duplicates") {
  CHECK(subformulas(P()).empty());
  std::set<Formula> expected = {P(), Formula::neg(P())};
  CHECK(subformulas(Formula::disj(P(), Formula::neg(P()))) == expected);
  for (std::uint64_t i = 0; i < 300; ++i) {
    Formula f = gen_formula(i + 333, 12, Fragment::Apal);
    CHECK(subformulas(f).size() < node_count(f));
  }
}

TEST_CASE("subformula order implies the size order") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    Formula f = gen_formula(i + 777, 12, Fragment::Apal);
    CHECK(size(f) >= 1);
    for (const Formula& sub : subformulas(f)) {
      CHECK(less(sub, f, Order::Size));
      CHECK(less(sub, f, Order::SizeDBox));
    }
  }
}

TEST_CASE("fragment classification") {
  FragmentFlags kap = classify(Formula::know("a", P()));
  CHECK(kap.box_free);
  CHECK(kap.announcement_free);
  CHECK(kap.epistemic);

  FragmentFlags ann = classify(Formula::announce(P(), Q()));
  CHECK(ann.box_free);
  CHECK_FALSE(ann.announcement_free);
  CHECK_FALSE(ann.epistemic);

  FragmentFlags boxed = classify(Formula::box(P()));
  CHECK_FALSE(boxed.box_free);
  CHECK(boxed.announcement_free);
  CHECK_FALSE(boxed.epistemic);

  for (std::uint64_t i = 0; i < 300; ++i) {
    FragmentFlags flags = classify(gen_formula(i, 10, Fragment::Apal));
    CHECK(flags.epistemic == (flags.box_free && flags.announcement_free));
  }
}

TEST_CASE("size inequalities on random triples") {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    Formula phi = gen_formula(3 * i, 8, Fragment::Apal);
    Formula psi = gen_formula(3 * i + 1, 8, Fragment::Apal);
    Formula chi = gen_formula(3 * i + 2, 8, Fragment::Apal);

    Formula l1 = Formula::neg(Formula::announce(phi, psi));
    Formula r1 = Formula::announce(phi, Formula::neg(psi));
    Formula l2 = Formula::know("a", Formula::announce(phi, psi));
    Formula r2 = Formula::announce(phi, Formula::know("a", psi));
    Formula l3 = Formula::announce(Formula::dia_announce(phi, psi), chi);
    Formula r3 = Formula::announce(phi, Formula::announce(psi, chi));

    CHECK(less(l1, r1, Order::Size));
    CHECK(less(l2, r2, Order::Size));
    CHECK(less(l3, r3, Order::Size));
    CHECK(box_depth(l1) == box_depth(r1));
    CHECK(box_depth(l2) == box_depth(r2));
    CHECK(box_depth(l3) == box_depth(r3));
  }
}

TEST_CASE("necessity forms") {
  NecessityForm hole = NecessityForm::hole();
  CHECK(hole.fill(P()) == P());

  NecessityForm know_ctx = NecessityForm::know("a", NecessityForm::hole());
  CHECK(know_ctx.fill(Formula::announce(Q(), R())) ==
        Formula::know("a", Formula::announce(Q(), R())));

  NecessityForm nested = NecessityForm::announce(
      P(), NecessityForm::implies(Q(), NecessityForm::hole()));
  CHECK(nested.fill(Formula::box(R())) ==
        Formula::announce(P(), Formula::implies(Q(), Formula::box(R()))));
  CHECK(render(nested.fill(Formula::box(R()))) == "[p] (~q | box r)");
}

TEST_CASE("fill is injective for a fixed context") {
  NecessityForm ctx = NecessityForm::announce(
      P(), NecessityForm::know("a", NecessityForm::implies(
                                        Q(), NecessityForm::hole())));
  for (std::uint64_t i = 0; i < 200; ++i) {
    Formula f = gen_formula(2 * i, 8, Fragment::Apal);
    Formula g = gen_formula(2 * i + 1, 8, Fragment::Apal);
    if (f == g) continue;
    CHECK(ctx.fill(f) != ctx.fill(g));
  }
}
