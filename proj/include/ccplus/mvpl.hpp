#pragma once

#include <span>
#include <vector>

#include "ccplus/extended_formula.hpp"
#include "ccplus/formula.hpp"
#include "ccplus/interpretation.hpp"
#include "ccplus/signature.hpp"

namespace ccplus {

// I ⊨ F by the truth tables, with I ⊨ c=v iff I(c)=v.
bool satisfies(const Interpretation& interp, const Formula& f);
bool satisfies_all(const Interpretation& interp, std::span<const Formula> formulas);

// Models of `formulas` in canonical order, found by the backtracking solver.
std::vector<Interpretation> models(const Signature& sig, std::span<const Formula> formulas);

// Reference implementation of `models`: scans every interpretation of `sig`.
std::vector<Interpretation> naive_models(const Signature& sig,
                                         std::span<const Formula> formulas);

// X ⊨ F, i.e. X ∪ {¬F} has no model.
bool entails(const Signature& sig, std::span<const Formula> formulas, const Formula& f);
bool naive_entails(const Signature& sig, std::span<const Formula> formulas, const Formula& f);

}  // namespace ccplus
