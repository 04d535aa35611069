#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "ccplus/dsl/run.hpp"
#include "ccplus/error.hpp"
#include "support/boxes.hpp"
#include "support/generators.hpp"

using namespace ccplus;
using namespace ccplus::dsl;
using ccplus::testing::Rng;

namespace {

const char* const kBoxes = R"(sorts:
  Box, Location
objects:
  B1, B2 : Box
  L1, L2, L3 : Location
var b, b2 : Box
var l : Location
fluents:
  Loc(Box) : Location
actions:
  Move(Box) : boolean
  Destination(Box) : Location + {None}
laws:
  caused false after Move(b) <-> Destination(b)=None
  Move(b) causes Loc(b)=l if Destination(b)=l
  nonexecutable Move(b) if Loc(b)=l & Destination(b)=l
  inertial Loc(b)=l
  never Loc(b)=l & Loc(b2)=l where b <> b2
query:
  init: Loc(B1)=L1 & Loc(B2)=L2
  goal: Loc(B1)=L3 & Loc(B2)=L1
)";

const char* const kSingleCause = R"(constants:
  c : {1, 2, 3}
laws:
  c=1 => c=1
)";

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string emitted(const Report& r, Format f) {
  std::ostringstream out;
  emit(r, f, out);
  return out.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

Report query(const std::string& text, Command c) {
  QuerySpec q;
  q.command = c;
  return run(expand_schemas(parse(text)), q);
}

Expanded theory_unit(CausalTheory t) {
  Expanded e;
  e.kind = UnitKind::kCausalTheory;
  e.theory = std::move(t);
  return e;
}

Expanded description_unit(ActionDescription d) {
  Expanded e;
  e.kind = UnitKind::kActionDescription;
  e.description = std::move(d);
  return e;
}

std::string source_text(const Report& r) {
  std::string out;
  for (const auto& line : r.lines) out += line + "\n";
  return out;
}

}  // namespace

TEST_CASE("parse: schema laws") {
  SourceUnit u = parse("var b : Box\nvar l : Location\nlaws:\n  inertial Loc(b)=l\n");
  REQUIRE(u.laws.size() == 1);
  const LawAst& law = u.laws[0];
  CHECK(law.kind == LawAst::Kind::kInertial);
  REQUIRE(law.head);
  CHECK(law.head->kind == Expr::Kind::kAtom);
  CHECK(law.head->lhs.base == "Loc");
  CHECK(law.head->lhs.args == std::vector<std::string>{"b"});
  REQUIRE(law.head->rhs);
  CHECK(law.head->rhs->base == "l");
  CHECK(u.vars.size() == 2);

  SourceUnit never = parse("laws:\n  caused false if Loc(b)=l & Loc(b2)=l where b<>b2\n");
  REQUIRE(never.laws.size() == 1);
  CHECK(never.laws[0].kind == LawAst::Kind::kCaused);
  CHECK(never.laws[0].head->kind == Expr::Kind::kBottom);
  CHECK(never.laws[0].condition->kind == Expr::Kind::kAnd);
  REQUIRE(never.laws[0].guards.size() == 1);
  CHECK(never.laws[0].guards[0].lhs == "b");
  CHECK(never.laws[0].guards[0].rhs == "b2");
}

TEST_CASE("parse: errors carry line and column") {
  try {
    parse("fluents:\n  p : boolean\nlaws:\n  caused if p\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 10);
    CHECK(std::string(e.what()).find("'if'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("laws:\n  p = \n"), ParseError);
  CHECK_THROWS_AS(parse("p : boolean\n"), ParseError);
  CHECK_THROWS_AS(parse("constants:\n  c : {1, 2\n"), ParseError);
}

TEST_CASE("parse: Unicode connectives are aliases") {
  CHECK(parse_formula("¬p ∧ q ∨ r ⊃ s ≡ t") == parse_formula("-p & q | r -> s <-> t"));
  CHECK(parse("laws:\n  p ⇒ q\n") == parse("laws:\n  p => q\n"));
  CHECK(parse("laws:\n  caused p if ⊤ after ⊥\n") == parse("laws:\n  caused p if true after false\n"));
}

TEST_CASE("print: round trip on sample sources") {
  std::vector<std::string> sources = {kBoxes, kSingleCause};
  for (const char* name : {"boxes.ccp", "single_cause.ccp", "counters.ccp"}) {
    sources.push_back(slurp(std::string(CCPLUS_DOMAIN_DIR) + "/" + name));
  }
  for (const auto& text : sources) {
    SourceUnit u = parse(text);
    CHECK(parse(print(u)) == u);
    CHECK(print(parse(print(u))) == print(u));
  }
  Expr e = parse_formula("-(p -> q) & (a | b) & (x <-> y <-> z)");
  CHECK(parse_formula(print(e)) == e);
}

TEST_CASE("property: printed formulas parse back to the same formula") {
  Rng rng(201);
  for (int round = 0; round < 300; ++round) {
    Signature sig = ccplus::testing::random_signature(rng, {});
    Formula f = ccplus::testing::random_formula(rng, sig, 4);
    std::string text = "constants:\n";
    for (std::uint32_t c = 0; c < sig.size(); ++c) {
      text += "  " + sig.name(c) + " : {";
      for (std::size_t v = 0; v < sig.domain_size(c); ++v) {
        text += (v > 0 ? ", " : "") + sig.constant(c).domain[v];
      }
      text += "}\n";
    }
    text += "formulas:\n  " + to_string(sig, f) + "\n";
    SourceUnit u = parse(text);
    CHECK(parse(print(u)) == u);
    Expanded e = expand_schemas(u);
    REQUIRE(e.formulas.size() == 1);
    CHECK(e.signature() == sig);
    CHECK(e.formulas[0] == f);
  }
}

TEST_CASE("expand: boxes instances") {
  Expanded e = expand_schemas(parse(kBoxes));
  CHECK(e.kind == UnitKind::kActionDescription);
  CHECK(e.law_instances == std::vector<std::size_t>{2, 6, 6, 6, 6});
  CHECK(e.description.propositions().size() == 26);
  CHECK(e.description.propositions() == ccplus::testing::boxes(2, 3).propositions());
  CHECK(e.description.signature() == ccplus::testing::boxes(2, 3).signature());
  REQUIRE(e.init);
  REQUIRE(e.goal);
}

TEST_CASE("expand: guards and errors") {
  const std::string header =
      "sorts:\n  Location\nobjects:\n  L1, L2, L3 : Location\nvar l, l2 : Location\n"
      "fluents:\n  At(Location) : boolean\n";
  Expanded e = expand_schemas(parse(header + "laws:\n  caused -At(l) if At(l2) where l <> l2\n"));
  CHECK(e.law_instances == std::vector<std::size_t>{6});

  CHECK_THROWS_AS(expand_schemas(parse("sorts:\n  Location\nvar l : Location\nfluents:\n  At(Location) : boolean\n")),
                  SemanticError);
  CHECK_THROWS_AS(expand_schemas(parse(header + "laws:\n  caused At(l) where l <> l3\n")), SemanticError);
  CHECK_THROWS_AS(expand_schemas(parse(header + "laws:\n  caused At(L4)\n")), SemanticError);
  CHECK_THROWS_AS(expand_schemas(parse(header + "laws:\n  caused At(L1)=maybe\n")), SemanticError);
  CHECK_THROWS_AS(expand_schemas(parse(header + "laws:\n  caused At(L1, L2)\n")), SemanticError);
  CHECK_THROWS_AS(expand_schemas(parse(header + "laws:\n  caused Nowhere\n")), SemanticError);
  try {
    expand_schemas(parse(header + "laws:\n  caused At(L4)\n"));
  } catch (const SemanticError& err) {
    CHECK(std::string(err.what()).rfind("9:", 0) == 0);
  }
}

TEST_CASE("run: queries on sample units") {
  CHECK(query(kBoxes, Command::kStates).count == 6);
  CHECK(query(kBoxes, Command::kTransitions).count == 36);

  Report plan = query(kBoxes, Command::kPlan);
  CHECK(plan.count == 1);
  REQUIRE(plan.records.size() == 1);
  CHECK(plan.records[0]["step"] == 1);
  CHECK(plan.records[0]["to"] == nlohmann::json{{"Loc(B1)", "L3"}, {"Loc(B2)", "L1"}});

  Report comp = query(kSingleCause, Command::kCompletion);
  CHECK(comp.lines == std::vector<std::string>{"c=1 <-> c=1", "c=2 <-> false", "c=3 <-> false"});
  CHECK(query(kSingleCause, Command::kExplain).lines == std::vector<std::string>{"{c=1}"});
  CHECK(query(kSingleCause, Command::kModels).count == 3);
  CHECK(query(kBoxes, Command::kExplain).count == 36);

  CHECK_THROWS_AS(query(kSingleCause, Command::kTransitions), SemanticError);
  CHECK_THROWS_AS(query(kBoxes, Command::kModels), SemanticError);
  CHECK_THROWS_AS(query(kBoxes, Command::kAdl2Cplus), SemanticError);
}

TEST_CASE("run: states and transitions agree") {
  Report states = query(kBoxes, Command::kStates);
  Report transitions = query(kBoxes, Command::kTransitions);
  std::set<nlohmann::json> listed(states.records.begin(), states.records.end());
  for (const auto& t : transitions.records) {
    CHECK(listed.count(t["from"]) == 1);
    CHECK(listed.count(t["to"]) == 1);
  }
}

TEST_CASE("run: definite-check and inconsistent ADL") {
  Report check = query(kBoxes, Command::kDefiniteCheck);
  CHECK(check.records[0]["definite"] == true);
  Report general = query("constants:\n  p : boolean\nlaws:\n  true => p | -p\n", Command::kDefiniteCheck);
  CHECK(general.records[0]["definite"] == false);
  CHECK(general.records[0]["diagnostic"] != "");

  const char* inconsistent = "fluents:\n  A : {0, 1}\nactions:\n  Go : boolean\nadl:\n  update Go A : true\n";
  CHECK_THROWS_AS(query(inconsistent, Command::kAdl2Cplus), PreconditionError);
}

TEST_CASE("emit: formats") {
  QuerySpec q;
  q.command = Command::kDiagram;
  Report diagram = run(expand_schemas(parse(kBoxes)), q);
  std::string dot = emitted(diagram, Format::kDot);
  std::size_t nodes = 0;
  std::size_t edges = 0;
  for (const auto& line : lines_of(dot)) {
    if (line.find(" -> ") != std::string::npos) {
      ++edges;
    } else if (line.rfind("  \"", 0) == 0) {
      ++nodes;
    }
  }
  CHECK(nodes == 6);
  CHECK(edges == 36);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK_THROWS_AS(emitted(query(kBoxes, Command::kStates), Format::kDot), SemanticError);

  Report none = query("constants:\n  p : boolean\nformulas:\n  p & -p\n", Command::kModels);
  auto lines = lines_of(emitted(none, Format::kRecords));
  REQUIRE(lines.size() == 1);
  CHECK(nlohmann::json::parse(lines[0]) ==
        nlohmann::json{{"#summary", {{"count", 0}, {"query", "models"}}}});

  Signature sig = Signature::validate({{"c", {"1", "2"}}});
  CHECK(to_record(sig, Interpretation{{0}}).dump() == R"({"c":"1"})");

  auto text = lines_of(emitted(query(kSingleCause, Command::kExplain), Format::kText));
  CHECK(text == std::vector<std::string>{"{c=1}", "# 1 explained interpretations"});
  auto records = lines_of(emitted(query(kBoxes, Command::kStates), Format::kRecords));
  CHECK(records.size() == 7);
  CHECK(records[0] == R"j({"Loc(B1)":"L1","Loc(B2)":"L2"})j");
}

TEST_CASE("property: emitted sources parse back to the same theory or description") {
  Rng rng(202);
  for (int round = 0; round < 100; ++round) {
    ActionDescription d = ccplus::testing::random_description(rng, {});
    QuerySpec q;
    q.command = Command::kTranslateCt;
    Expanded back = expand_schemas(parse(source_text(run(description_unit(d), q))));
    CHECK(back.theory.signature() == ct(d).signature());
    CHECK(back.theory.laws() == ct(d).laws());

    CausalTheory t = ccplus::testing::random_theory(rng);
    const auto c = static_cast<std::uint32_t>(rng.below(t.signature().size()));
    q.command = Command::kEliminate;
    q.eliminate = t.signature().name(c);
    q.method = EliminationMethod::kGeneral;
    Expanded elim = expand_schemas(parse(source_text(run(theory_unit(t), q))));
    CHECK(elim.theory.laws() == eliminate_causal_general(t, c).laws());

    AdlDescription adl = ccplus::testing::random_consistent_adl(rng);
    Expanded unit;
    unit.kind = UnitKind::kAdl;
    unit.adl = adl;
    unit.description = to_cplus(adl);
    q = QuerySpec{};
    q.command = Command::kAdl2Cplus;
    Expanded cplus = expand_schemas(parse(source_text(run(unit, q))));
    CHECK(cplus.kind == UnitKind::kActionDescription);
    CHECK(cplus.description.propositions() == to_cplus(adl).propositions());
  }
}
