#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ccplus/signature.hpp"

namespace ccplus {

enum class Connective : std::uint8_t { kAtom, kTop, kBottom, kNot, kAnd, kOr, kImplies, kEquiv };

// An immutable propositional formula over atoms c=v. Nodes are shared, so
// copies are cheap. Atoms refer to constants by index, which ties a formula
// to the signature it was built against.
class Formula {
 public:
  // Default-constructed formula is ⊤.
  Formula() = default;

  static Formula atom(Atom a);
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);

  [[nodiscard]] Connective kind() const;
  [[nodiscard]] bool is_atom() const { return kind() == Connective::kAtom; }
  [[nodiscard]] bool is_bottom() const { return kind() == Connective::kBottom; }
  [[nodiscard]] bool is_top() const { return kind() == Connective::kTop; }
  // Only valid for atoms.
  [[nodiscard]] Atom as_atom() const;
  // Operand of ¬, or left operand of a binary connective.
  [[nodiscard]] const Formula& lhs() const;
  [[nodiscard]] const Formula& rhs() const;

  [[nodiscard]] std::size_t depth() const;
  [[nodiscard]] std::size_t size() const;

  // Structural equality.
  bool operator==(const Formula& other) const;

  // Identity of the shared node, for memoization.
  [[nodiscard]] const void* id() const { return node_.get(); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline Formula operator!(Formula f) { return Formula::negation(std::move(f)); }
inline Formula operator&&(Formula a, Formula b) {
  return Formula::conjunction(std::move(a), std::move(b));
}
inline Formula operator||(Formula a, Formula b) {
  return Formula::disjunction(std::move(a), std::move(b));
}

// Left-nested conjunction; ⊤ for an empty list, the sole member for one.
Formula conjoin(std::span<const Formula> parts);
// Left-nested disjunction; ⊥ for an empty list.
Formula disjoin(std::span<const Formula> parts);

// Rebuilds `f` with every atom replaced by `fn(atom)`.
Formula map_atoms(const Formula& f, const std::function<Formula(Atom)>& fn);

// Calls `fn` on every atom occurrence, left to right.
void visit_atoms(const Formula& f, const std::function<void(Atom)>& fn);

// True iff some atom of `f` is an atom of constant `c`.
bool mentions(const Formula& f, std::uint32_t c);

// True iff every atom constant index is below `limit`.
bool atoms_below(const Formula& f, std::uint32_t limit);

// Throws SignatureError unless every atom is an atom of `sig`.
void check_well_formed(const Signature& sig, const Formula& f);

// Renders with ASCII connectives and minimal parentheses. Atoms print as
// `name=value`.
std::string to_string(const Signature& sig, const Formula& f);

}  // namespace ccplus
