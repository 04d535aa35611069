#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ccplus/cplus.hpp"
#include "ccplus/extended_formula.hpp"
#include "ccplus/formula.hpp"
#include "ccplus/interpretation.hpp"

// Reference implementations that share no code path with the library's
// solver. Each one recomputes its answer from the definitions directly.
namespace ccplus::testing {

// Classical two-valued evaluation over a bit vector: bit c is the truth of
// Boolean constant c. c=tt reads the bit, c=ff its negation.
bool classical_eval(const Formula& f, std::uint64_t bits);

// Direct substitutional semantics of ∀/∃ for closed extended formulas.
bool eval_extended(const Signature& sig, const Interpretation& interp, const ExtendedFormula& f,
                   const std::vector<std::string>& domain,
                   const std::map<std::string, std::string>& env = {});

// Transitions per the state / caused-formula / uniqueness definitions, with
// uniqueness checked by scanning every fluent interpretation.
std::vector<Transition> transitions_brute_force(const ActionDescription& d);

// The same definitions for an all-Boolean description, computed over bit
// vectors with classical_eval. Triples are (s, a, s') bit patterns.
using BitTransition = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;
std::set<BitTransition> boolean_transitions(const ActionDescription& d);
std::uint64_t to_bits(const Interpretation& interp);

}  // namespace ccplus::testing
