#include <doctest.h>

#include <algorithm>
#include <set>

#include "ccplus/causal.hpp"
#include "ccplus/cplus.hpp"
#include "ccplus/elim.hpp"
#include "ccplus/error.hpp"
#include "ccplus/mvpl.hpp"
#include "support/boxes.hpp"
#include "support/generators.hpp"

using namespace ccplus;
using ccplus::testing::Rng;

namespace {

Interpretation interp(std::initializer_list<std::uint32_t> values) { return Interpretation{values}; }

std::vector<Interpretation> mapped(const EliminationTarget& target, const std::vector<Interpretation>& xs) {
  std::vector<Interpretation> out;
  for (const auto& i : xs) out.push_back(target.correspond(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> rendered(const CausalTheory& t) {
  std::vector<std::string> out;
  for (const auto& law : t.laws()) out.push_back(to_string(t.signature(), law));
  return out;
}

// Edges of `d` pushed through the state and action maps, sorted.
std::vector<Transition> map_edges(const std::vector<Transition>& edges,
                                  const std::optional<EliminationTarget>& states,
                                  const std::optional<EliminationTarget>& actions) {
  std::vector<Transition> out;
  for (const auto& e : edges) {
    Transition t = e;
    if (states) {
      t.from = states->correspond(e.from);
      t.to = states->correspond(e.to);
    }
    if (actions) t.action = actions->correspond(e.action);
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> fluent_indices(const ActionDescription& d) {
  std::vector<std::uint32_t> out;
  const Signature& fl = d.signature().fluents();
  for (std::uint32_t c = 0; c < fl.size(); ++c) out.push_back(c);
  return out;
}

}  // namespace

TEST_CASE("rename and correspond") {
  Signature sig = Signature::validate({{"c", {"1", "2"}}, {"p", boolean_domain()}});
  EliminationTarget target(sig, "c");
  const Signature& out = target.target();
  CHECK(out.size() == 3);
  CHECK(out.name(0) == "c!1");
  CHECK(out.name(1) == "c!2");
  CHECK(out.name(2) == "p");
  CHECK(out.all_boolean());

  Formula c1 = Formula::atom(sig.atom("c", "1"));
  Formula c2 = Formula::atom(sig.atom("c", "2"));
  CHECK(to_string(out, target.rename(c1 || c2)) == "c!1=tt | c!2=tt");
  CHECK(target.correspond(interp({0, kTrueIndex})) == interp({kTrueIndex, kFalseIndex, kTrueIndex}));
  CHECK(target.decode(interp({kTrueIndex, kFalseIndex, kTrueIndex})) == interp({0, kTrueIndex}));
  CHECK_FALSE(target.decode(interp({kTrueIndex, kTrueIndex, kTrueIndex})).has_value());

  Formula f = Formula::implication(c2, Formula::atom(sig.atom("p", "tt")));
  for (const auto& i : all_interpretations(sig)) {
    CHECK(satisfies(i, f) == satisfies(target.correspond(i), target.rename(f)));
  }

  CHECK_THROWS_AS(EliminationTarget(sig, "q"), SignatureError);
  CHECK_THROWS_AS(EliminationTarget(Signature::validate({{"c", {"1", "2"}}, {"c!1", boolean_domain()}}), "c"),
                  SignatureError);
}

TEST_CASE("elim_formula") {
  Signature sig = Signature::validate({{"c", {"1", "2", "3"}}});
  EliminationTarget target(sig, "c");
  CHECK(to_string(target.target(), target.elim_formula()) ==
        "(c!1=tt | c!2=tt | c!3=tt) & ((c!1=ff | c!2=ff) & (c!1=ff | c!3=ff) & (c!2=ff | c!3=ff))");
  const Formula elim[] = {target.elim_formula()};
  CHECK(models(target.target(), elim) == mapped(target, all_interpretations(sig)));

  Signature one = Signature::validate({{"c", {"1"}}});
  EliminationTarget single(one, "c");
  CHECK(to_string(single.target(), single.elim_formula()) == "c!1=tt");
}

TEST_CASE("eliminate_from_formulas") {
  Signature sig = Signature::validate({{"c", {"1", "2", "3"}}, {"p", boolean_domain()}});
  EliminationTarget target(sig, "c");
  CHECK(eliminate_from_formulas(target, {}) == std::vector<Formula>{target.elim_formula()});

  const Formula pinned[] = {Formula::atom(sig.atom("c", "1"))};
  auto out = eliminate_from_formulas(target, pinned);
  REQUIRE(out.size() == 2);
  CHECK(to_string(target.target(), out[0]) == "c!1=tt");
  CHECK(models(target.target(), out) == mapped(target, models(sig, pinned)));

  const Formula not_two[] = {!Formula::atom(sig.atom("c", "2"))};
  auto reduced = models(target.target(), eliminate_from_formulas(target, not_two));
  CHECK(reduced == mapped(target, models(sig, not_two)));
  CHECK(reduced.size() == 4);
}

TEST_CASE("eliminate_causal_general") {
  Signature sig = Signature::validate({{"c", {"1", "2"}}});
  Formula c1 = Formula::atom(sig.atom("c", "1"));
  CausalTheory t(sig, {{c1, c1}});
  CausalTheory out = eliminate_causal_general(t, 0);
  CHECK(rendered(out) == std::vector<std::string>{
                             "c!1=tt => c!1=tt", "true => (c!1=tt | c!2=tt) & (c!1=ff | c!2=ff)"});
  EliminationTarget target(sig, 0);
  CHECK(causally_explained_brute_force(out) == mapped(target, causally_explained_brute_force(t)));
  CHECK_FALSE(is_definite(out));

  CausalTheory empty(sig, {});
  CHECK(causally_explained_brute_force(eliminate_causal_general(empty, 0)).empty());
}

TEST_CASE("eliminate_causal_definite") {
  Signature sig = Signature::validate({{"c", {"1", "2"}}, {"p", boolean_domain()}});
  Formula c1 = Formula::atom(sig.atom("c", "1"));
  Formula c2 = Formula::atom(sig.atom("c", "2"));
  EliminationTarget target(sig, 0);

  SUBCASE("forced value") {
    Signature c_only = Signature::validate({{"c", {"1", "2"}}});
    CausalTheory t(c_only, {{Formula::top(), Formula::atom(c_only.atom("c", "1"))}});
    CausalTheory out = eliminate_causal_definite(t, 0);
    CHECK(rendered(out) == std::vector<std::string>{"true => c!1=tt", "c!1=tt => c!2=ff",
                                                    "c!2=tt => c!1=ff", "c!1=ff & c!2=ff => false"});
    auto explained = causally_explained_brute_force(out);
    REQUIRE(explained.size() == 1);
    CHECK(explained[0] == interp({kTrueIndex, kFalseIndex}));
    CHECK(is_definite(out));
  }
  SUBCASE("two self-causing values") {
    Formula pt = Formula::atom(sig.atom("p", "tt"));
    Formula pf = Formula::atom(sig.atom("p", "ff"));
    CausalTheory t(sig, {{c1, c1}, {c2, c2}, {Formula::top(), pt}, {Formula::bottom(), pf}});
    auto original = causally_explained_brute_force(t);
    CHECK(original.size() == 2);
    CHECK(causally_explained_brute_force(eliminate_causal_definite(t, 0)) == mapped(target, original));
  }
  SUBCASE("preconditions") {
    CausalTheory t(sig, {{Formula::top(), c1 || Formula::atom(sig.atom("p", "tt"))}});
    CHECK_THROWS_AS(eliminate_causal_definite(t, 0), PreconditionError);
    CHECK_FALSE(definite_elimination_applies(t, 0));
    // Singleton domain.
    Signature one = Signature::validate({{"c", {"1"}}});
    CHECK_THROWS_AS(eliminate_causal_definite(CausalTheory(one, {}), 0), PreconditionError);
  }
}

TEST_CASE("C+ fluent elimination") {
  SUBCASE("boxes, general, Loc(B1)") {
    ActionDescription d = ccplus::testing::boxes();
    ActionDescription out = eliminate_cplus_fluent_general(d, 0);
    EliminationTarget st = fluent_target(d.signature(), 0);
    CHECK(out.signature().fluents() == st.target());
    CHECK(transition_diagram(out).edges == map_edges(transition_diagram(d).edges, st, std::nullopt));
    CHECK_FALSE(is_definite_description(out));
  }
  SUBCASE("boxes, definite, Loc(B1)") {
    ActionDescription d = ccplus::testing::boxes();
    ActionDescription out = eliminate_cplus_fluent_definite(d, 0);
    const ActionSignature& sig = out.signature();
    std::set<std::string> laws;
    for (const auto& p : out.propositions()) laws.insert(to_string(sig, p));
    for (const char* l : {"L1", "L2", "L3"}) {
      for (const char* l2 : {"L1", "L2", "L3"}) {
        if (std::string(l) == l2) continue;
        CHECK(laws.count(std::string("caused Loc(B1)!") + l + "=ff if Loc(B1)!" + l2 + "=tt") == 1);
      }
    }
    CHECK(laws.count("caused false if Loc(B1)!L1=ff & Loc(B1)!L2=ff & Loc(B1)!L3=ff") == 1);
    CHECK(is_definite_description(out));
    EliminationTarget st = fluent_target(d.signature(), 0);
    CHECK(transition_diagram(out).edges == map_edges(transition_diagram(d).edges, st, std::nullopt));
  }
  SUBCASE("no laws") {
    ActionSignature sig(Signature::validate({{"c", {"1", "2"}}}), Signature());
    ActionDescription d(sig, {});
    ActionDescription out = eliminate_cplus_fluent_general(d, 0);
    CHECK(states(out) == mapped(fluent_target(sig, 0), states(d)));
  }
  SUBCASE("inertial two-valued fluent") {
    ActionSignature sig(Signature::validate({{"c", {"1", "2"}}}), Signature::validate({{"a", boolean_domain()}}));
    const Signature& all = sig.combined();
    ActionDescription d(sig, {desugar(sig, InertialLaw{Formula::atom(all.atom("c", "1"))}),
                              desugar(sig, InertialLaw{Formula::atom(all.atom("c", "2"))})});
    ActionDescription out = eliminate_cplus_fluent_definite(d, 0);
    auto edges = transition_diagram(out).edges;
    CHECK(edges.size() == 4);
    CHECK(edges == map_edges(transition_diagram(d).edges, fluent_target(sig, 0), std::nullopt));
  }
  SUBCASE("non-atomic head") {
    ActionSignature sig(Signature::validate({{"c", {"1", "2"}}}), Signature());
    const Signature& all = sig.combined();
    ActionDescription d(sig, {Proposition::static_law(
                                 Formula::atom(all.atom("c", "1")) || Formula::atom(all.atom("c", "2")),
                                 Formula::top())});
    CHECK_THROWS_AS(eliminate_cplus_fluent_definite(d, 0), PreconditionError);
    CHECK_FALSE(definite_elimination_applies(d, 0));
  }
}

TEST_CASE("C+ action elimination") {
  SUBCASE("one box, two locations, Destination") {
    ActionDescription d = ccplus::testing::boxes(1, 2);
    const std::uint32_t dest = d.signature().combined().index_of("Destination(B1)");
    ActionDescription out = eliminate_cplus_action(d, dest);
    CHECK(out.signature().actions().size() == 4);
    EliminationTarget at = action_target(d.signature(), dest);
    auto edges = transition_diagram(out).edges;
    CHECK(edges == map_edges(transition_diagram(d).edges, std::nullopt, at));
    for (const auto& e : edges) CHECK(at.decode(e.action).has_value());
  }
  SUBCASE("unused action constant") {
    ActionSignature sig(Signature::validate({{"p", boolean_domain()}}),
                        Signature::validate({{"k", {"1", "2", "3"}}}));
    const Signature& all = sig.combined();
    ActionDescription d(sig, {desugar(sig, InertialLaw{Formula::atom(all.atom("p", "tt"))}),
                              desugar(sig, InertialLaw{Formula::atom(all.atom("p", "ff"))})});
    ActionDescription out = eliminate_cplus_action(d, 1);
    auto edges = transition_diagram(out).edges;
    CHECK(edges.size() == 6);
    CHECK(edges == map_edges(transition_diagram(d).edges, std::nullopt, action_target(sig, 1)));
  }
}

TEST_CASE("eliminate_all on boxes") {
  ActionDescription d = ccplus::testing::boxes();
  EliminationChain chain = eliminate_all(d);
  CHECK(chain.result.signature().combined().all_boolean());
  REQUIRE(chain.steps.size() == 4);
  CHECK(chain.steps[0].constant == "Loc(B1)");
  CHECK(chain.steps[0].method == EliminationMethod::kDefinite);
  CHECK(chain.steps[2].constant == "Destination(B1)");
  CHECK_FALSE(chain.steps[2].is_fluent);
  CHECK(is_definite_description(chain.result));

  std::vector<Transition> expected;
  for (const auto& e : transition_diagram(d).edges) {
    expected.push_back({chain.map_state(e.from), chain.map_action(e.action), chain.map_state(e.to)});
  }
  std::sort(expected.begin(), expected.end());
  CHECK(transition_diagram(chain.result).edges == expected);
}

TEST_CASE("property: renaming preserves satisfaction") {
  Rng rng(61);
  for (int round = 0; round < 200; ++round) {
    Signature sig = ccplus::testing::random_signature(rng, {1, 3, 1, 3, "c"});
    Formula f = ccplus::testing::random_formula(rng, sig, 4);
    EliminationTarget target(sig, static_cast<std::uint32_t>(rng.below(sig.size())));
    for (const auto& i : all_interpretations(sig)) {
      CHECK(satisfies(i, f) == satisfies(target.correspond(i), target.rename(f)));
    }
  }
}

TEST_CASE("property: causal theory eliminations preserve explained interpretations") {
  Rng rng(62);
  for (int round = 0; round < 300; ++round) {
    CausalTheory t = ccplus::testing::random_theory(rng);
    const auto c = static_cast<std::uint32_t>(rng.below(t.signature().size()));
    EliminationTarget target(t.signature(), c);
    auto expected = mapped(target, causally_explained_brute_force(t));
    CHECK(causally_explained_brute_force(eliminate_causal_general(t, c)) == expected);
    if (definite_elimination_applies(t, c)) {
      CHECK(causally_explained_brute_force(eliminate_causal_definite(t, c)) == expected);
    }
  }
  for (int round = 0; round < 300; ++round) {
    CausalTheory t = ccplus::testing::random_definite_theory(rng);
    const auto c = static_cast<std::uint32_t>(rng.below(t.signature().size()));
    REQUIRE(definite_elimination_applies(t, c));
    CausalTheory out = eliminate_causal_definite(t, c);
    CHECK(is_definite(out));
    CHECK_FALSE(is_definite(eliminate_causal_general(t, c)));
    CHECK(causally_explained_interpretations(out) ==
          mapped(EliminationTarget(t.signature(), c), causally_explained_brute_force(t)));
  }
}

TEST_CASE("property: C+ eliminations preserve transitions") {
  Rng rng(63);
  for (int round = 0; round < 300; ++round) {
    ActionDescription d = ccplus::testing::random_description(rng, {});
    const ActionSignature& sig = d.signature();
    auto edges = transition_diagram(d).edges;
    const auto fluent = static_cast<std::uint32_t>(rng.below(sig.fluent_count()));
    auto st = fluent_target(sig, fluent);
    CHECK(transition_diagram(eliminate_cplus_fluent_general(d, fluent)).edges ==
          map_edges(edges, st, std::nullopt));
    if (definite_elimination_applies(d, fluent)) {
      CHECK(transition_diagram(eliminate_cplus_fluent_definite(d, fluent)).edges ==
            map_edges(edges, st, std::nullopt));
    }
    if (sig.actions().size() > 0) {
      const auto action = sig.action_index(static_cast<std::uint32_t>(rng.below(sig.actions().size())));
      CHECK(transition_diagram(eliminate_cplus_action(d, action)).edges ==
            map_edges(edges, std::nullopt, action_target(sig, action)));
    }
  }
}

TEST_CASE("property: chained elimination on random descriptions") {
  Rng rng(64);
  for (int round = 0; round < 50; ++round) {
    ActionDescription d = ccplus::testing::random_description(rng, {});
    EliminationChain chain = eliminate_all(d);
    CHECK(chain.result.signature().combined().all_boolean());
    std::vector<Transition> expected;
    for (const auto& e : transition_diagram(d).edges) {
      expected.push_back({chain.map_state(e.from), chain.map_action(e.action), chain.map_state(e.to)});
    }
    std::sort(expected.begin(), expected.end());
    CHECK(transition_diagram(chain.result).edges == expected);
  }
}

TEST_CASE("property: definite fluent elimination keeps descriptions definite") {
  Rng rng(65);
  for (int round = 0; round < 100; ++round) {
    ActionDescription d = ccplus::testing::random_description(rng, {2, 2, 2, 3, true, false});
    for (std::uint32_t f : fluent_indices(d)) {
      REQUIRE(definite_elimination_applies(d, f));
      CHECK(is_definite_description(eliminate_cplus_fluent_definite(d, f)));
      CHECK_FALSE(is_definite_description(eliminate_cplus_fluent_general(d, f)));
    }
  }
}
