#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "apal/axioms.hpp"
#include "apal/checker.hpp"
#include "apal/model.hpp"
#include "support.hpp"

using namespace apal;

namespace {

std::string read_corpus(const std::string& name) {
  std::ifstream in(std::string(APAL_CORPUS_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Verdict check_file(const std::string& name) {
  return check_derivation(parse_derivation(read_corpus(name)));
}

}  // namespace

TEST_CASE("tautology instances over opaque letters") {
  CHECK(is_tautology_instance(parse("K a p | ~K a p")));
  CHECK(is_tautology_instance(parse("p -> (q -> p)")));
  CHECK(is_tautology_instance(parse("false -> p")));
  CHECK(is_tautology_instance(parse("~false")));
  CHECK_FALSE(is_tautology_instance(parse("[p]q | ~[p]r")));
  CHECK_FALSE(is_tautology_instance(parse("p")));
  // [p]q and [p]r are distinct letters, [p]q is the same letter twice.
  CHECK(is_tautology_instance(parse("[p]q | ~[p]q")));
}

TEST_CASE("tautology letter cap") {
  std::string big = "a1";
  for (int i = 2; i <= 21; ++i) big += " | a" + std::to_string(i);
  big += " | ~a1";
  CHECK_THROWS_AS(is_tautology_instance(parse(big)), std::runtime_error);
  std::string ok = "b1";
  for (int i = 2; i <= 20; ++i) ok += " | b" + std::to_string(i);
  ok += " | ~b1";
  CHECK(is_tautology_instance(parse(ok)));
}

TEST_CASE("axiom schema recognition") {
  CHECK(match_axiom(parse("[p]q <-> (p -> q)")) == "A7");
  CHECK(match_axiom(parse("K a (p -> q) -> (K a p -> K a q)")) == "A1");
  CHECK(match_axiom(parse("[p](q -> r) -> ([p]q -> [p]r)")) == "A2");
  CHECK(match_axiom(parse("box (p -> q) -> (box p -> box q)")) == "A3");
  CHECK(match_axiom(parse("K a p -> p")) == "A4");
  CHECK(match_axiom(parse("K a p -> K a K a p")) == "A5");
  CHECK(match_axiom(parse("p -> K a ~K a ~p")) == "A6");
  CHECK(match_axiom(parse("[p]false <-> ~p")) == "A8");
  CHECK(match_axiom(parse("[p]~q <-> (p -> ~[p]q)")) == "A9");
  CHECK(match_axiom(parse("[p](q | r) <-> [p]q | [p]r")) == "A10");
  CHECK(match_axiom(parse("[p]K a q <-> (p -> K a [p]q)")) == "A11");
  CHECK(match_axiom(parse("[p][q]r <-> [<p>q]r")) == "A12");
  CHECK(match_axiom(parse("box q -> [K a p] q")) == "A13");
  CHECK(match_axiom(parse("K a p | ~K a p")) == "A0");
  CHECK_FALSE(match_axiom(parse("p -> q")).has_value());
}

TEST_CASE("A13 requires an epistemic announced formula") {
  CHECK_FALSE(match_axiom(parse("box q -> [box p] q")).has_value());
  CHECK_FALSE(match_axiom(parse("box q -> [[p]q] q")).has_value());
  CHECK(match_axiom(parse("box [p]q -> [r] [p]q")) == "A13");
}

TEST_CASE("A7 is restricted to atoms") {
  // The generalization to arbitrary continuations is not this schema.
  CHECK_FALSE(match_axiom(parse("[p](q | q) <-> (p -> (q | q))")).has_value());
  CHECK_FALSE(match_axiom(parse("[p]false <-> (p -> false)")).has_value());
}

TEST_CASE("schema instances with mismatched pieces are rejected") {
  CHECK_FALSE(matches_schema(parse("K a p -> K b K a p"), "A5"));
  CHECK_FALSE(matches_schema(parse("K a (p -> q) -> (K a p -> K a r)"), "A1"));
  CHECK_FALSE(matches_schema(parse("[p]~q <-> (p -> ~[r]q)"), "A9"));
  CHECK_FALSE(matches_schema(parse("[p][q]r <-> [<q>p]r"), "A12"));
  CHECK_THROWS_AS(matches_schema(parse("p"), "A99"), std::invalid_argument);
}

TEST_CASE("recognized axioms are valid on random models") {
  std::uint64_t checked = 0;
  for (std::uint64_t i = 0; checked < 200 && i < 40000; ++i) {
    Formula f = gen_formula(i, 9, Fragment::Apal);
    auto axiom = match_axiom(f);
    if (!axiom) continue;
    ++checked;
    KripkeModel m = gen_model(i, 5, {"a", "b"}, {"p", "q", "r"});
    TruthSetCache cache;
    INFO(*axiom, ": ", render(f));
    CHECK(valid_on(m, f, &cache));
  }
  CHECK(checked == 200);
}

TEST_CASE("derivation corpus accepts") {
  CHECK(check_file("box_taut.proof").accepted);
  CHECK(check_file("a8_chain.proof").accepted);
  CHECK(check_file("a3_necessitated.proof").accepted);
  CHECK(check_file("announce_k.proof").accepted);
}

TEST_CASE("mutated derivations reject at the right step") {
  Verdict v1 = check_file("bad_box_taut.proof");
  CHECK_FALSE(v1.accepted);
  CHECK(v1.step == 3);

  Verdict v2 = check_file("bad_a8_chain.proof");
  CHECK_FALSE(v2.accepted);
  CHECK(v2.step == 2);
  CHECK(v2.reason == "no implication premise");

  Verdict v3 = check_file("bad_announce_k.proof");
  CHECK_FALSE(v3.accepted);
  CHECK(v3.step == 2);

  Verdict v4 = check_file("bad_a13.proof");
  CHECK_FALSE(v4.accepted);
  CHECK(v4.step == 1);
}

TEST_CASE("derivation checking via the in-memory interface") {
  Derivation good;
  good.steps.push_back({parse("p -> p"),
                        {Justification::Kind::Axiom, "A0"}});
  good.steps.push_back({parse("K a (p -> p)"),
                        {.kind = Justification::Kind::R1, .from = 1,
                         .agent = "a"}});
  CHECK(check_derivation(good).accepted);

  Derivation bad;
  bad.steps.push_back({parse("p"), {Justification::Kind::Axiom, "A0"}});
  Verdict v = check_derivation(bad);
  CHECK_FALSE(v.accepted);
  CHECK(v.step == 1);
}

TEST_CASE("derivation file parsing errors") {
  CHECK_THROWS_AS(parse_derivation("1. p ; Z9"), std::runtime_error);
  CHECK_THROWS_AS(parse_derivation("2. p ; A0"), std::runtime_error);
  CHECK_THROWS_AS(parse_derivation("1. p ; R0 1"), std::runtime_error);
  CHECK_THROWS_AS(parse_derivation("1. p ; R2 1"), std::runtime_error);
  CHECK_THROWS_AS(parse_derivation("no dot here"), std::runtime_error);
}

TEST_CASE("R4 premise instantiation") {
  R4Instance plain = r4_premises(NecessityForm::hole(), parse("p"),
                                 {parse("q")});
  REQUIRE(plain.premises.size() == 1);
  CHECK(plain.premises[0] == parse("[q]p"));
  CHECK(plain.conclusion == parse("box p"));

  R4Instance under_know = r4_premises(
      NecessityForm::know("a", NecessityForm::hole()), parse("p"), {});
  CHECK(under_know.premises.empty());
  CHECK(under_know.conclusion == parse("K a box p"));

  CHECK_THROWS_AS(
      r4_premises(NecessityForm::hole(), parse("p"), {parse("box q")}),
      std::invalid_argument);
}

TEST_CASE("R4 truth preservation at sample scale") {
  // Announcement-free contexts keep the premises evaluated in the model
  // itself, so characteristic formulas of every bisimulation-closed set
  // cover the quantifier domain exactly: if all those premises are valid
  // then the conclusion must be.
  for (std::uint64_t i = 0; i < 60; ++i) {
    KripkeModel m = gen_model(i + 13, 4, {"a", "b"}, {"p", "q"});
    Formula inner = gen_formula(i, 6, Fragment::Pal);
    NecessityForm nf =
        (i % 2) ? NecessityForm::know("a", NecessityForm::hole())
                : NecessityForm::implies(Formula::atom("q"),
                                         NecessityForm::hole());

    Partition part = bisim_quotient(m);
    std::vector<Formula> delta = testsupport::world_formulas(m);
    std::vector<Formula> announcements;
    for (std::uint32_t choice = 1; choice < (1u << part.blocks.size());
         ++choice) {
      WorldSet set = 0;
      for (std::size_t b = 0; b < part.blocks.size(); ++b)
        if (choice & (1u << b)) set |= part.blocks[b];
      announcements.push_back(
          testsupport::characteristic_formula(m, set, delta));
    }

    R4Instance instance = r4_premises(nf, inner, announcements);
    TruthSetCache cache;
    bool premises_valid = true;
    for (const Formula& premise : instance.premises)
      premises_valid = premises_valid && valid_on(m, premise, &cache);
    if (premises_valid) {
      INFO("inner=", render(inner));
      CHECK(valid_on(m, instance.conclusion, &cache));
    }
    // The converse direction holds unconditionally.
    if (valid_on(m, instance.conclusion, &cache))
      CHECK(premises_valid);
  }
}

TEST_CASE("generators respect fragments and are deterministic") {
  for (std::uint64_t i = 0; i < 3000; ++i) {
    Formula e = gen_formula(i, 7, Fragment::Epistemic);
    CHECK(classify(e).epistemic);
    Formula pal = gen_formula(i, 7, Fragment::Pal);
    CHECK(classify(pal).box_free);
    CHECK(size(gen_formula(i, 7, Fragment::Apal)) <= 7);
  }
  CHECK(gen_formula(42, 9, Fragment::Apal) ==
        gen_formula(42, 9, Fragment::Apal));
  CHECK(gen_model(42, 5, {"a"}, {"p"}).fingerprint() ==
        gen_model(42, 5, {"a"}, {"p"}).fingerprint());
  CHECK(gen_model(1, 1, {"a"}, {"p"}).world_count() == 1);
}
