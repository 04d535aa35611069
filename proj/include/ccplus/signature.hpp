#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ccplus {

inline constexpr std::string_view kFalseValue = "ff";
inline constexpr std::string_view kTrueValue = "tt";

// Value indices of the Boolean domain {ff, tt}.
inline constexpr std::uint32_t kFalseIndex = 0;
inline constexpr std::uint32_t kTrueIndex = 1;

struct ConstantDecl {
  std::string name;
  std::vector<std::string> domain;

  bool operator==(const ConstantDecl&) const = default;
};

// Returns the domain {ff, tt}.
std::vector<std::string> boolean_domain();

// An atom c=v, stored as indices into the owning signature.
struct Atom {
  std::uint32_t constant = 0;
  std::uint32_t value = 0;

  auto operator<=>(const Atom&) const = default;
};

// An ordered set of constants, each with a finite nonempty domain. Declaration
// order is the canonical order for every emitted set downstream.
class Signature {
 public:
  Signature() = default;

  // Throws SignatureError on a duplicate constant name, an empty domain or a
  // duplicate value within one domain.
  static Signature validate(std::vector<ConstantDecl> decls);

  [[nodiscard]] std::size_t size() const { return constants_.size(); }
  [[nodiscard]] bool empty() const { return constants_.empty(); }
  [[nodiscard]] const std::vector<ConstantDecl>& constants() const { return constants_; }
  [[nodiscard]] const ConstantDecl& constant(std::uint32_t index) const {
    return constants_.at(index);
  }
  [[nodiscard]] const std::string& name(std::uint32_t index) const {
    return constants_.at(index).name;
  }
  [[nodiscard]] std::size_t domain_size(std::uint32_t index) const {
    return constants_.at(index).domain.size();
  }
  [[nodiscard]] const std::string& value_name(Atom atom) const {
    return constants_.at(atom.constant).domain.at(atom.value);
  }

  [[nodiscard]] std::optional<std::uint32_t> find(std::string_view name) const;
  [[nodiscard]] std::optional<std::uint32_t> find_value(std::uint32_t constant,
                                                        std::string_view value) const;

  // Throwing lookups.
  [[nodiscard]] std::uint32_t index_of(std::string_view name) const;
  [[nodiscard]] Atom atom(std::string_view name, std::string_view value) const;
  [[nodiscard]] Atom atom(std::uint32_t constant, std::string_view value) const;

  [[nodiscard]] bool is_boolean(std::uint32_t index) const;
  [[nodiscard]] bool all_boolean() const;

  // Number of atoms, i.e. the sum of the domain sizes.
  [[nodiscard]] std::size_t atom_count() const;
  // All atoms in canonical order.
  [[nodiscard]] std::vector<Atom> atoms() const;
  // Product of domain sizes, saturating at UINT64_MAX.
  [[nodiscard]] std::uint64_t interpretation_count() const;

  // Concatenation; throws SignatureError when the names overlap.
  [[nodiscard]] Signature concat(const Signature& other) const;

  bool operator==(const Signature& other) const { return constants_ == other.constants_; }

 private:
  std::vector<ConstantDecl> constants_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace ccplus
