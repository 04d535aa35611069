#include <doctest.h>

#include <algorithm>
#include <set>

#include "ccplus/causal.hpp"
#include "ccplus/cplus.hpp"
#include "ccplus/error.hpp"
#include "ccplus/mvpl.hpp"
#include "support/boxes.hpp"
#include "support/generators.hpp"

using namespace ccplus;
using ccplus::testing::Rng;

namespace {

Signature numbered(const std::string& name, std::size_t k) {
  std::vector<std::string> domain;
  for (std::size_t i = 1; i <= k; ++i) domain.push_back(std::to_string(i));
  return Signature::validate({{name, domain}});
}

CausalTheory self_cause(std::size_t k) {
  Signature sig = numbered("c", k);
  Formula c1 = Formula::atom(sig.atom("c", "1"));
  return CausalTheory(sig, {{c1, c1}});
}

Interpretation interp(std::initializer_list<std::uint32_t> values) { return Interpretation{values}; }

}  // namespace

TEST_CASE("reduct") {
  CausalTheory t = self_cause(3);
  Formula c1 = Formula::atom(t.signature().atom("c", "1"));
  CHECK(reduct(t, interp({0})) == std::vector<Formula>{c1});
  CHECK(reduct(t, interp({1})).empty());

  Signature p = Signature::validate({{"p", boolean_domain()}});
  CausalTheory u(p, {{Formula::top(), Formula::atom(p.atom("p", "tt"))},
                     {Formula::bottom(), Formula::atom(p.atom("p", "ff"))}});
  for (const auto& i : all_interpretations(p)) {
    CHECK(reduct(u, i) == std::vector<Formula>{Formula::atom(p.atom("p", "tt"))});
  }
}

TEST_CASE("duplicate laws are dropped and reducts stay duplicate-free") {
  Signature p = Signature::validate({{"p", boolean_domain()}});
  Formula pt = Formula::atom(p.atom("p", "tt"));
  CausalTheory t(p, {{Formula::top(), pt}, {Formula::top(), pt}, {pt, pt}});
  CHECK(t.laws().size() == 2);
  CHECK(reduct(t, interp({kTrueIndex})) == std::vector<Formula>{pt});
}

TEST_CASE("laws outside the signature are rejected") {
  Signature p = Signature::validate({{"p", boolean_domain()}});
  CHECK_THROWS_AS(CausalTheory(p, {{Formula::top(), Formula::atom(Atom{3, 0})}}), SignatureError);
}

TEST_CASE("is_causally_explained") {
  CausalTheory t = self_cause(3);
  CHECK(is_causally_explained(t, interp({0})));
  CHECK_FALSE(is_causally_explained(t, interp({1})));
  CHECK_FALSE(is_causally_explained(t, interp({2})));

  Signature p = Signature::validate({{"p", boolean_domain()}});
  CausalTheory empty(p, {});
  for (const auto& i : all_interpretations(p)) CHECK_FALSE(is_causally_explained(empty, i));
}

TEST_CASE("causally_explained_interpretations") {
  for (std::size_t k = 2; k <= 5; ++k) {
    CausalTheory t = self_cause(k);
    CHECK(causally_explained_interpretations(t) == std::vector<Interpretation>{interp({0})});
    CHECK(causally_explained_brute_force(t) == std::vector<Interpretation>{interp({0})});
    CHECK(models(t.signature(), completion(t).formulas) == std::vector<Interpretation>{interp({0})});
  }
  Signature p = Signature::validate({{"p", boolean_domain()}});
  CausalTheory forced(p, {{Formula::top(), Formula::atom(p.atom("p", "tt"))}});
  CHECK(causally_explained_interpretations(forced) == std::vector<Interpretation>{interp({kTrueIndex})});
}

TEST_CASE("ct of boxes has 36 explained interpretations") {
  ActionDescription d = ccplus::testing::boxes();
  CausalTheory theory = ct(d);
  auto engine = causally_explained_interpretations(theory);
  CHECK(engine.size() == 36);
  for (const auto& i : engine) {
    Transition t = decompose_ct(d.signature(), i);
    CHECK(is_state(d, t.from));
    CHECK(is_state(d, t.to));
  }
}

TEST_CASE("is_definite") {
  CHECK(is_definite(self_cause(3)));

  Signature pq = Signature::validate({{"p", boolean_domain()}, {"q", boolean_domain()}});
  CausalTheory disjunctive(pq, {{Formula::top(), Formula::atom(pq.atom("p", "tt")) ||
                                                     Formula::atom(pq.atom("q", "tt"))}});
  DefiniteCheck check = is_definite(disjunctive);
  CHECK_FALSE(check);
  CHECK(check.diagnostic.find("p=tt | q=tt") != std::string::npos);

  Signature singleton = Signature::validate({{"p", boolean_domain()}, {"d", {"v"}}});
  DefiniteCheck single = is_definite(CausalTheory(singleton, {}));
  CHECK_FALSE(single);
  CHECK(single.diagnostic.find('d') != std::string::npos);
}

TEST_CASE("completion") {
  SUBCASE("self-causing c=1") {
    CausalTheory t = self_cause(3);
    const Signature& sig = t.signature();
    auto a = [&](const char* v) { return Formula::atom(sig.atom("c", v)); };
    CHECK(completion(t).formulas == std::vector<Formula>{Formula::equivalence(a("1"), a("1")),
                                                         Formula::equivalence(a("2"), Formula::bottom()),
                                                         Formula::equivalence(a("3"), Formula::bottom())});
  }
  SUBCASE("constraint law") {
    Signature p = Signature::validate({{"p", boolean_domain()}});
    Formula pt = Formula::atom(p.atom("p", "tt"));
    Formula pf = Formula::atom(p.atom("p", "ff"));
    CausalTheory t(p, {{pt, Formula::bottom()}});
    auto formulas = completion(t).formulas;
    CHECK(formulas == std::vector<Formula>{Formula::equivalence(pf, Formula::bottom()),
                                           Formula::equivalence(pt, Formula::bottom()), !pt});
    CHECK(models(p, formulas).empty());
    CHECK(causally_explained_brute_force(t).empty());
  }
  SUBCASE("not definite") {
    Signature pq = Signature::validate({{"p", boolean_domain()}, {"q", boolean_domain()}});
    CausalTheory t(pq, {{Formula::top(), Formula::atom(pq.atom("p", "tt")) ||
                                             Formula::atom(pq.atom("q", "tt"))}});
    CHECK_THROWS_AS(completion(t), PreconditionError);
  }
  SUBCASE("antecedents are collected per consequent") {
    Signature c = numbered("c", 2);
    Formula c1 = Formula::atom(c.atom("c", "1"));
    Formula c2 = Formula::atom(c.atom("c", "2"));
    CausalTheory t(c, {{c2, c1}, {Formula::top(), c1}});
    CHECK(completion(t).formulas.front() == Formula::equivalence(c1, c2 || Formula::top()));
  }
}

TEST_CASE("completion of ct(boxes) entails the displayed consequences") {
  ActionDescription d = ccplus::testing::boxes();
  CausalTheory theory = ct(d);
  const Signature& sig = theory.signature();
  auto formulas = completion(theory).formulas;
  const char* locations[] = {"L1", "L2", "L3"};
  const char* boxes[] = {"B1", "B2"};
  for (const char* l : locations) {
    Formula both = Formula::atom(sig.atom("Destination(B1)@0", l)) &&
                   Formula::atom(sig.atom("Destination(B2)@0", l));
    CHECK(entails(sig, formulas, !both));
    for (const char* b : boxes) {
      for (const char* other : boxes) {
        if (std::string(b) == other) continue;
        std::string dest = std::string("Destination(") + b + ")@0";
        std::string loc = std::string("Loc(") + other + ")@0";
        std::string move = std::string("Move(") + other + ")@0";
        Formula f = Formula::implication(
            Formula::atom(sig.atom(dest, l)) && Formula::atom(sig.atom(loc, l)),
            Formula::atom(sig.atom(move, kTrueValue)));
        CHECK(entails(sig, formulas, f));
      }
    }
  }
}

TEST_CASE("property: fixpoint characterization") {
  Rng rng(31);
  for (int round = 0; round < 150; ++round) {
    CausalTheory t = ccplus::testing::random_theory(rng);
    const Signature& sig = t.signature();
    for (const auto& i : all_interpretations(sig)) {
      auto r = reduct(t, i);
      bool agrees = !models(sig, r).empty();
      for (const Atom& a : sig.atoms()) {
        const bool holds = satisfies(i, Formula::atom(a));
        if (holds != entails(sig, r, Formula::atom(a))) agrees = false;
      }
      CHECK(agrees == is_causally_explained(t, i));
    }
  }
}

TEST_CASE("property: definite theories explain exactly the atom sets equal to their reduct") {
  Rng rng(32);
  for (int round = 0; round < 150; ++round) {
    CausalTheory t = ccplus::testing::random_definite_theory(rng);
    REQUIRE(is_definite(t));
    for (const auto& i : all_interpretations(t.signature())) {
      const Signature& sig = t.signature();
      std::set<std::string> caused;
      for (const auto& g : reduct(t, i)) caused.insert(to_string(sig, g));
      std::set<std::string> atoms;
      for (const Atom& a : interpretation_as_atoms(i)) atoms.insert(to_string(sig, Formula::atom(a)));
      CHECK((caused == atoms) == is_causally_explained(t, i));
    }
  }
}

TEST_CASE("property: models of the completion are the explained interpretations") {
  Rng rng(33);
  for (int round = 0; round < 500; ++round) {
    CausalTheory t = ccplus::testing::random_definite_theory(rng);
    Completion comp = completion(t);
    std::size_t atom_count = t.signature().atom_count();
    std::size_t bottom_laws = static_cast<std::size_t>(std::count_if(
        t.laws().begin(), t.laws().end(),
        [](const CausalLaw& law) { return law.consequent.is_bottom(); }));
    CHECK(comp.formulas.size() == atom_count + bottom_laws);
    auto brute = causally_explained_brute_force(t);
    CHECK(models(t.signature(), comp.formulas) == brute);
    CHECK(causally_explained_interpretations(t) == brute);
  }
}

TEST_CASE("property: engine scan agrees with brute force on arbitrary theories") {
  Rng rng(34);
  for (int round = 0; round < 200; ++round) {
    CausalTheory t = ccplus::testing::random_theory(rng);
    CHECK(causally_explained_interpretations(t) == causally_explained_brute_force(t));
  }
}
