#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ccplus/formula.hpp"
#include "ccplus/interpretation.hpp"
#include "ccplus/signature.hpp"

namespace ccplus {

struct SearchStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t models_found = 0;

  SearchStats& operator+=(const SearchStats& other);
};

// Per-constant candidate sets during search. A constant is decided when its
// set is a singleton and conflicted when it is empty. Domains are limited to
// 64 values.
class DomainState {
 public:
  static constexpr std::size_t kMaxDomain = 64;

  explicit DomainState(const Signature& sig);

  [[nodiscard]] std::size_t size() const { return masks_.size(); }
  [[nodiscard]] std::uint64_t candidates(std::uint32_t c) const { return masks_[c]; }
  [[nodiscard]] bool allows(Atom a) const { return (masks_[a.constant] >> a.value) & 1U; }
  [[nodiscard]] bool decided(std::uint32_t c) const;
  [[nodiscard]] bool conflicted(std::uint32_t c) const { return masks_[c] == 0; }

  // Narrow the candidate set to {v}. Returns false when v was not a candidate.
  bool assign(Atom a);
  // Drop v from the candidates. Returns false when the set becomes empty.
  bool exclude(Atom a);

  // Only meaningful when every constant is decided.
  [[nodiscard]] Interpretation to_interpretation() const;

 private:
  std::vector<std::uint64_t> masks_;
};

struct ModelEnumeration {
  std::vector<Interpretation> models;
  SearchStats stats;
};

// Visits the models of `formulas` in canonical order until `fn` returns
// false. Branches on the first undecided constant, values in domain order,
// with propagation in between. Throws PreconditionError for domains larger
// than DomainState::kMaxDomain.
SearchStats for_each_model(const Signature& sig, std::span<const Formula> formulas,
                           const std::function<bool(const Interpretation&)>& fn);

ModelEnumeration enumerate_models(const Signature& sig, std::span<const Formula> formulas,
                                  std::optional<std::size_t> limit = std::nullopt);

std::optional<Interpretation> find_model(const Signature& sig,
                                         std::span<const Formula> formulas);

std::uint64_t count_models(const Signature& sig, std::span<const Formula> formulas);

// True iff `expected` is the one and only model of `formulas`.
bool is_unique_model(const Signature& sig, std::span<const Formula> formulas,
                     const Interpretation& expected);

}  // namespace ccplus
