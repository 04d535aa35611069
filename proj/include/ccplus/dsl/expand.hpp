#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccplus/adl.hpp"
#include "ccplus/causal.hpp"
#include "ccplus/cplus.hpp"
#include "ccplus/dsl/ast.hpp"

namespace ccplus::dsl {

// What a source file describes, decided by its sections: `adl:` items make an
// ADL description, fluents or actions make a C+ action description, and
// otherwise `constants:` give a causal theory (possibly without laws).
enum class UnitKind { kCausalTheory, kActionDescription, kAdl };

struct Expanded {
  UnitKind kind = UnitKind::kCausalTheory;
  // kCausalTheory
  CausalTheory theory;
  std::vector<Formula> formulas;  // `formulas:` over the theory's signature
  // kActionDescription, and the C+ translation for kAdl
  ActionDescription description;
  std::optional<AdlDescription> adl;
  // `query:` formulas over the constants (causal theory) or the fluents.
  std::optional<Formula> init;
  std::optional<Formula> goal;
  // Ground instances per source law, in source order, counted before the
  // theory or description drops duplicates.
  std::vector<std::size_t> law_instances;

  [[nodiscard]] const Signature& signature() const;
};

// Instantiates every schema over the objects of its variables' sorts, in
// variable declaration order with the last variable varying fastest, and
// drops instances rejected by a `where` guard. Schematic constants such as
// Loc(Box) become Loc(B1), Loc(B2), ... Throws SemanticError with a line and
// column for unknown names, empty sorts, misused arguments and guards over
// unbound variables.
Expanded expand_schemas(const SourceUnit& unit);

}  // namespace ccplus::dsl
