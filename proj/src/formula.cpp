#include "ccplus/formula.hpp"

#include <algorithm>
#include <cassert>

#include "ccplus/error.hpp"

namespace ccplus {

// A null node stands for ⊤ so that default-constructed children need no
// allocation.
struct Formula::Node {
  Connective kind = Connective::kTop;
  Atom atom{};
  Formula lhs;
  Formula rhs;
  std::size_t depth = 0;
  std::size_t size = 1;
};

namespace {

const Formula& top_formula() {
  static const Formula f;
  return f;
}

}  // namespace

Formula Formula::atom(Atom a) {
  auto n = std::make_shared<Node>();
  n->kind = Connective::kAtom;
  n->atom = a;
  return Formula(std::move(n));
}

Formula Formula::top() { return Formula(); }

Formula Formula::bottom() {
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->kind = Connective::kBottom;
    return Formula(std::move(n));
  }();
  return f;
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Connective::kNot;
  n->depth = f.depth() + 1;
  n->size = f.size() + 1;
  n->lhs = std::move(f);
  return Formula(std::move(n));
}


#define CCPLUS_BINARY(fn, k)                                   \
  Formula Formula::fn(Formula lhs, Formula rhs) {              \
    auto n = std::make_shared<Node>();                         \
    n->kind = Connective::k;                                   \
    n->depth = std::max(lhs.depth(), rhs.depth()) + 1;         \
    n->size = lhs.size() + rhs.size() + 1;                     \
    n->lhs = std::move(lhs);                                   \
    n->rhs = std::move(rhs);                                   \
    return Formula(std::move(n));                              \
  }

CCPLUS_BINARY(conjunction, kAnd)
CCPLUS_BINARY(disjunction, kOr)
CCPLUS_BINARY(implication, kImplies)
CCPLUS_BINARY(equivalence, kEquiv)

#undef CCPLUS_BINARY

Connective Formula::kind() const { return node_ ? node_->kind : Connective::kTop; }

Atom Formula::as_atom() const {
  assert(is_atom());
  return node_->atom;
}

const Formula& Formula::lhs() const { return node_ ? node_->lhs : top_formula(); }
const Formula& Formula::rhs() const { return node_ ? node_->rhs : top_formula(); }

std::size_t Formula::depth() const { return node_ ? node_->depth : 0; }
std::size_t Formula::size() const { return node_ ? node_->size : 1; }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Connective::kTop:
    case Connective::kBottom:
      return true;
    case Connective::kAtom:
      return as_atom() == other.as_atom();
    case Connective::kNot:
      return lhs() == other.lhs();
    default:
      return size() == other.size() && lhs() == other.lhs() && rhs() == other.rhs();
  }
}

Formula conjoin(std::span<const Formula> parts) {
  if (parts.empty()) return Formula::top();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::conjunction(acc, parts[i]);
  return acc;
}

Formula disjoin(std::span<const Formula> parts) {
  if (parts.empty()) return Formula::bottom();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::disjunction(acc, parts[i]);
  return acc;
}

Formula map_atoms(const Formula& f, const std::function<Formula(Atom)>& fn) {
  switch (f.kind()) {
    case Connective::kAtom:
      return fn(f.as_atom());
    case Connective::kTop:
    case Connective::kBottom:
      return f;
    case Connective::kNot:
      return Formula::negation(map_atoms(f.lhs(), fn));
    case Connective::kAnd:
      return Formula::conjunction(map_atoms(f.lhs(), fn), map_atoms(f.rhs(), fn));
    case Connective::kOr:
      return Formula::disjunction(map_atoms(f.lhs(), fn), map_atoms(f.rhs(), fn));
    case Connective::kImplies:
      return Formula::implication(map_atoms(f.lhs(), fn), map_atoms(f.rhs(), fn));
    case Connective::kEquiv:
      return Formula::equivalence(map_atoms(f.lhs(), fn), map_atoms(f.rhs(), fn));
  }
  return f;
}

void visit_atoms(const Formula& f, const std::function<void(Atom)>& fn) {
  switch (f.kind()) {
    case Connective::kAtom:
      fn(f.as_atom());
      return;
    case Connective::kTop:
    case Connective::kBottom:
      return;
    case Connective::kNot:
      visit_atoms(f.lhs(), fn);
      return;
    default:
      visit_atoms(f.lhs(), fn);
      visit_atoms(f.rhs(), fn);
  }
}

bool mentions(const Formula& f, std::uint32_t c) {
  bool found = false;
  visit_atoms(f, [&](Atom a) { found = found || a.constant == c; });
  return found;
}

bool atoms_below(const Formula& f, std::uint32_t limit) {
  bool ok = true;
  visit_atoms(f, [&](Atom a) { ok = ok && a.constant < limit; });
  return ok;
}

void check_well_formed(const Signature& sig, const Formula& f) {
  visit_atoms(f, [&](Atom a) {
    if (a.constant >= sig.size() || a.value >= sig.domain_size(a.constant)) {
      throw SignatureError("formula atom is not an atom of the signature");
    }
  });
}

namespace {

// Binding strength, loosest first: <->, ->, |, &, -.
int precedence(Connective k) {
  switch (k) {
    case Connective::kEquiv:
      return 1;
    case Connective::kImplies:
      return 2;
    case Connective::kOr:
      return 3;
    case Connective::kAnd:
      return 4;
    case Connective::kNot:
      return 5;
    default:
      return 6;
  }
}

void render(const Signature& sig, const Formula& f, std::string& out);

void render_operand(const Signature& sig, const Formula& f, int min_prec, std::string& out) {
  if (precedence(f.kind()) < min_prec) {
    out += '(';
    render(sig, f, out);
    out += ')';
  } else {
    render(sig, f, out);
  }
}

void render(const Signature& sig, const Formula& f, std::string& out) {
  const int prec = precedence(f.kind());
  switch (f.kind()) {
    case Connective::kTop:
      out += "true";
      return;
    case Connective::kBottom:
      out += "false";
      return;
    case Connective::kAtom: {
      Atom a = f.as_atom();
      out += sig.name(a.constant);
      out += '=';
      out += sig.value_name(a);
      return;
    }
    case Connective::kNot:
      out += '-';
      render_operand(sig, f.lhs(), prec, out);
      return;
    default:
      break;
  }
  const char* op = f.kind() == Connective::kAnd       ? " & "
                   : f.kind() == Connective::kOr      ? " | "
                   : f.kind() == Connective::kImplies ? " -> "
                                                      : " <-> ";
  // & and | are associative and parse left-nested; -> and <-> parse
  // right-nested, so the left operand of those needs strictly higher binding.
  const bool right_assoc = f.kind() == Connective::kImplies || f.kind() == Connective::kEquiv;
  render_operand(sig, f.lhs(), right_assoc ? prec + 1 : prec, out);
  out += op;
  render_operand(sig, f.rhs(), right_assoc ? prec : prec + 1, out);
}

}  // namespace

std::string to_string(const Signature& sig, const Formula& f) {
  std::string out;
  render(sig, f, out);
  return out;
}

}  // namespace ccplus
