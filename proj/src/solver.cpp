#include "ccplus/solver.hpp"

#include <bit>
#include <cassert>

#include "ccplus/error.hpp"
#include "ccplus/mvpl.hpp"

namespace ccplus {

SearchStats& SearchStats::operator+=(const SearchStats& other) {
  decisions += other.decisions;
  propagations += other.propagations;
  conflicts += other.conflicts;
  models_found += other.models_found;
  return *this;
}

DomainState::DomainState(const Signature& sig) : masks_(sig.size()) {
  for (std::uint32_t c = 0; c < sig.size(); ++c) {
    const std::size_t n = sig.domain_size(c);
    if (n > kMaxDomain) {
      throw PreconditionError("domain of '" + sig.name(c) + "' exceeds " +
                              std::to_string(kMaxDomain) + " values");
    }
    masks_[c] = n == kMaxDomain ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }
}

bool DomainState::decided(std::uint32_t c) const { return std::has_single_bit(masks_[c]); }

bool DomainState::assign(Atom a) {
  const std::uint64_t bit = std::uint64_t{1} << a.value;
  if ((masks_[a.constant] & bit) == 0) {
    masks_[a.constant] = 0;
    return false;
  }
  masks_[a.constant] = bit;
  return true;
}

bool DomainState::exclude(Atom a) {
  masks_[a.constant] &= ~(std::uint64_t{1} << a.value);
  return masks_[a.constant] != 0;
}

Interpretation DomainState::to_interpretation() const {
  Interpretation out{std::vector<std::uint32_t>(masks_.size())};
  for (std::size_t c = 0; c < masks_.size(); ++c) {
    assert(std::has_single_bit(masks_[c]));
    out.values[c] = static_cast<std::uint32_t>(std::countr_zero(masks_[c]));
  }
  return out;
}

namespace {

enum class Truth : std::uint8_t { kFalse, kTrue, kUnknown };

Truth lift(bool b) { return b ? Truth::kTrue : Truth::kFalse; }

// Kleene evaluation under a partial assignment. Known values stay known as
// candidate sets shrink.
Truth evaluate(const Formula& f, const DomainState& st) {
  switch (f.kind()) {
    case Connective::kAtom: {
      Atom a = f.as_atom();
      if (!st.allows(a)) return Truth::kFalse;
      return st.decided(a.constant) ? Truth::kTrue : Truth::kUnknown;
    }
    case Connective::kTop:
      return Truth::kTrue;
    case Connective::kBottom:
      return Truth::kFalse;
    case Connective::kNot: {
      Truth t = evaluate(f.lhs(), st);
      return t == Truth::kUnknown ? t : lift(t == Truth::kFalse);
    }
    case Connective::kAnd: {
      Truth l = evaluate(f.lhs(), st);
      if (l == Truth::kFalse) return l;
      Truth r = evaluate(f.rhs(), st);
      if (r == Truth::kFalse) return r;
      return l == Truth::kTrue && r == Truth::kTrue ? Truth::kTrue : Truth::kUnknown;
    }
    case Connective::kOr: {
      Truth l = evaluate(f.lhs(), st);
      if (l == Truth::kTrue) return l;
      Truth r = evaluate(f.rhs(), st);
      if (r == Truth::kTrue) return r;
      return l == Truth::kFalse && r == Truth::kFalse ? Truth::kFalse : Truth::kUnknown;
    }
    case Connective::kImplies: {
      Truth l = evaluate(f.lhs(), st);
      if (l == Truth::kFalse) return Truth::kTrue;
      Truth r = evaluate(f.rhs(), st);
      if (r == Truth::kTrue) return r;
      return l == Truth::kTrue && r == Truth::kFalse ? Truth::kFalse : Truth::kUnknown;
    }
    case Connective::kEquiv: {
      Truth l = evaluate(f.lhs(), st);
      if (l == Truth::kUnknown) return l;
      Truth r = evaluate(f.rhs(), st);
      if (r == Truth::kUnknown) return r;
      return lift(l == r);
    }
  }
  return Truth::kUnknown;
}

class Search {
 public:
  Search(const Signature& sig, std::span<const Formula> formulas,
         const std::function<bool(const Interpretation&)>& fn)
      : sig_(sig), fn_(fn) {
    for (const auto& f : formulas) add_conjuncts(f);
  }

  SearchStats run() {
    DomainState st(sig_);
    descend(st);
    return stats_;
  }

 private:
  void add_conjuncts(const Formula& f) {
    if (f.kind() == Connective::kAnd) {
      add_conjuncts(f.lhs());
      add_conjuncts(f.rhs());
    } else if (!f.is_top()) {
      formulas_.push_back(f);
    }
  }

  // Makes `f` take the truth value `want`, narrowing `st` by whatever follows
  // directly. Returns false on conflict.
  bool force(const Formula& f, bool want, DomainState& st) {
    switch (f.kind()) {
      case Connective::kTop:
        return want;
      case Connective::kBottom:
        return !want;
      case Connective::kAtom: {
        Atom a = f.as_atom();
        if (want) {
          if (!st.allows(a)) return false;
          if (!st.decided(a.constant)) {
            st.assign(a);
            ++stats_.propagations;
          }
          return true;
        }
        if (!st.allows(a)) return true;
        ++stats_.propagations;
        return st.exclude(a);
      }
      case Connective::kNot:
        return force(f.lhs(), !want, st);
      case Connective::kAnd:
      case Connective::kOr: {
        // A conjunction forced true (disjunction forced false) fixes both
        // operands; otherwise an operand is fixed once its sibling is known.
        const bool is_and = f.kind() == Connective::kAnd;
        if (want == is_and) return force(f.lhs(), want, st) && force(f.rhs(), want, st);
        const Truth settled = lift(want);
        const Truth neutral = lift(!want);
        Truth l = evaluate(f.lhs(), st);
        Truth r = evaluate(f.rhs(), st);
        if (l == settled || r == settled) return true;
        if (l == neutral) return force(f.rhs(), want, st);
        if (r == neutral) return force(f.lhs(), want, st);
        return true;
      }
      case Connective::kImplies: {
        if (!want) return force(f.lhs(), true, st) && force(f.rhs(), false, st);
        Truth l = evaluate(f.lhs(), st);
        if (l == Truth::kFalse) return true;
        if (l == Truth::kTrue) return force(f.rhs(), true, st);
        Truth r = evaluate(f.rhs(), st);
        if (r == Truth::kFalse) return force(f.lhs(), false, st);
        return true;
      }
      case Connective::kEquiv: {
        Truth l = evaluate(f.lhs(), st);
        if (l != Truth::kUnknown) return force(f.rhs(), (l == Truth::kTrue) == want, st);
        Truth r = evaluate(f.rhs(), st);
        if (r != Truth::kUnknown) return force(f.lhs(), (r == Truth::kTrue) == want, st);
        return true;
      }
    }
    return true;
  }

  bool propagate(DomainState& st) {
    while (true) {
      const std::uint64_t before = stats_.propagations;
      for (const auto& f : formulas_) {
        if (!force(f, true, st)) return false;
      }
      if (stats_.propagations == before) return true;
    }
  }

  // Returns false once the callback asks to stop.
  bool descend(DomainState& st) {
    if (!propagate(st)) {
      ++stats_.conflicts;
      return true;
    }
    std::uint32_t branch = 0;
    while (branch < st.size() && st.decided(branch)) ++branch;
    if (branch == st.size()) {
      Interpretation model = st.to_interpretation();
      assert(satisfies_all(model, formulas_));
      ++stats_.models_found;
      return fn_(model);
    }
    std::uint64_t remaining = st.candidates(branch);
    while (remaining != 0) {
      const auto v = static_cast<std::uint32_t>(std::countr_zero(remaining));
      remaining &= remaining - 1;
      ++stats_.decisions;
      DomainState child = st;
      child.assign(Atom{branch, v});
      if (!descend(child)) return false;
    }
    return true;
  }

  const Signature& sig_;
  const std::function<bool(const Interpretation&)>& fn_;
  std::vector<Formula> formulas_;
  SearchStats stats_;
};

}  // namespace

SearchStats for_each_model(const Signature& sig, std::span<const Formula> formulas,
                           const std::function<bool(const Interpretation&)>& fn) {
  return Search(sig, formulas, fn).run();
}

ModelEnumeration enumerate_models(const Signature& sig, std::span<const Formula> formulas,
                                  std::optional<std::size_t> limit) {
  ModelEnumeration out;
  if (limit && *limit == 0) return out;
  out.stats = for_each_model(sig, formulas, [&](const Interpretation& i) {
    out.models.push_back(i);
    return !limit || out.models.size() < *limit;
  });
  return out;
}

std::optional<Interpretation> find_model(const Signature& sig,
                                         std::span<const Formula> formulas) {
  auto found = enumerate_models(sig, formulas, 1);
  if (found.models.empty()) return std::nullopt;
  return found.models.front();
}

std::uint64_t count_models(const Signature& sig, std::span<const Formula> formulas) {
  return for_each_model(sig, formulas, [](const Interpretation&) { return true; }).models_found;
}

bool is_unique_model(const Signature& sig, std::span<const Formula> formulas,
                     const Interpretation& expected) {
  if (!satisfies_all(expected, formulas)) return false;
  bool unique = true;
  for_each_model(sig, formulas, [&](const Interpretation& i) {
    if (i != expected) unique = false;
    return unique;
  });
  return unique;
}

}  // namespace ccplus
