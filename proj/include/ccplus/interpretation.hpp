#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ccplus/signature.hpp"

namespace ccplus {

// A total assignment of one domain value (by index) to every constant of a
// signature. The default ordering is the canonical lexicographic order over
// declaration order.
struct Interpretation {
  std::vector<std::uint32_t> values;

  [[nodiscard]] std::size_t size() const { return values.size(); }
  [[nodiscard]] std::uint32_t operator[](std::size_t c) const { return values[c]; }

  auto operator<=>(const Interpretation&) const = default;
};

// The atom set {c=I(c)}, in signature order.
std::vector<Atom> interpretation_as_atoms(const Interpretation& interp);

// Inverse of interpretation_as_atoms. Throws SignatureError unless `atoms`
// holds exactly one atom per constant of `sig`.
Interpretation interpretation_from_atoms(const Signature& sig, std::span<const Atom> atoms);

// True iff `interp` assigns an in-domain value to every constant of `sig`.
bool is_interpretation_of(const Signature& sig, const Interpretation& interp);

// Visits all interpretations of `sig` in canonical order. Stops early when
// `fn` returns false.
void for_each_interpretation(const Signature& sig,
                             const std::function<bool(const Interpretation&)>& fn);

std::vector<Interpretation> all_interpretations(const Signature& sig);

// Concatenation of two interpretations (e.g. a state and an action).
Interpretation join(const Interpretation& lhs, const Interpretation& rhs);

// "{c=1, p=tt}"
std::string to_string(const Signature& sig, const Interpretation& interp);

}  // namespace ccplus
