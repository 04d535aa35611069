#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ccplus/adl.hpp"
#include "ccplus/causal.hpp"
#include "ccplus/cplus.hpp"
#include "ccplus/extended_formula.hpp"
#include "ccplus/formula.hpp"
#include "ccplus/signature.hpp"

namespace ccplus::testing {

// CCPLUS_SEED, or a fixed default.
std::uint64_t base_seed();

// Seeded from CCPLUS_SEED when set; `stream` separates independent
// generators within one run.
class Rng {
 public:
  explicit Rng(std::uint64_t stream);

  std::size_t below(std::size_t n);
  std::size_t between(std::size_t lo, std::size_t hi);  // inclusive
  bool chance(double p);
  [[nodiscard]] std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

struct SignatureShape {
  std::size_t min_constants = 1;
  std::size_t max_constants = 3;
  std::size_t min_domain = 1;
  std::size_t max_domain = 3;
  std::string prefix = "c";
};

// Domains of size 2 are Boolean half of the time; otherwise values are
// numerals "1".."k".
Signature random_signature(Rng& rng, const SignatureShape& shape);

// Random formula over constants [lo, hi) of `sig`, depth at most `depth`.
Formula random_formula(Rng& rng, const Signature& sig, std::size_t depth, std::uint32_t lo,
                       std::uint32_t hi);
Formula random_formula(Rng& rng, const Signature& sig, std::size_t depth);

Formula random_atom(Rng& rng, const Signature& sig, std::uint32_t lo, std::uint32_t hi);

// ≤4 constants, domains of 2..3 values, ≤12 laws with atom or ⊥ consequents.
CausalTheory random_definite_theory(Rng& rng);

// ≤3 constants, domains of 1..3 values, arbitrary consequents.
CausalTheory random_theory(Rng& rng);

struct DescriptionShape {
  std::size_t max_fluents = 2;
  std::size_t max_actions = 2;
  std::size_t min_domain = 1;
  std::size_t max_domain = 3;
  bool definite = false;  // atom or ⊥ heads and no singleton domains
  bool boolean = false;   // every constant Boolean
};

ActionDescription random_description(Rng& rng, const DescriptionShape& shape);

// ≤2 fluents with one shared domain of ≤3 values, ≤2 Boolean actions, random
// preconditions and updates of depth ≤3. Not necessarily consistent.
AdlDescription random_adl(Rng& rng);
// Draws until check_consistent succeeds.
AdlDescription random_consistent_adl(Rng& rng);

ExtendedFormula random_extended_formula(Rng& rng, const Signature& fluents,
                                        const std::vector<std::string>& domain,
                                        std::vector<std::string> variables, std::size_t depth);

}  // namespace ccplus::testing
