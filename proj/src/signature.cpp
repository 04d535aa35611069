#include "ccplus/signature.hpp"

#include <limits>
#include <unordered_set>

#include "ccplus/error.hpp"

namespace ccplus {

std::vector<std::string> boolean_domain() {
  return {std::string(kFalseValue), std::string(kTrueValue)};
}

Signature Signature::validate(std::vector<ConstantDecl> decls) {
  Signature sig;
  sig.index_.reserve(decls.size());
  for (std::size_t i = 0; i < decls.size(); ++i) {
    const ConstantDecl& decl = decls[i];
    if (decl.name.empty()) throw SignatureError("constant with empty name");
    if (!sig.index_.emplace(decl.name, static_cast<std::uint32_t>(i)).second) {
      throw SignatureError("duplicate constant '" + decl.name + "'");
    }
    if (decl.domain.empty()) {
      throw SignatureError("constant '" + decl.name + "' has an empty domain");
    }
    std::unordered_set<std::string_view> seen;
    for (const std::string& value : decl.domain) {
      if (!seen.insert(value).second) {
        throw SignatureError("duplicate value '" + value + "' in the domain of '" + decl.name +
                             "'");
      }
    }
  }
  sig.constants_ = std::move(decls);
  return sig;
}

std::optional<std::uint32_t> Signature::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> Signature::find_value(std::uint32_t constant,
                                                   std::string_view value) const {
  const auto& domain = constants_.at(constant).domain;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (domain[i] == value) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

std::uint32_t Signature::index_of(std::string_view name) const {
  auto index = find(name);
  if (!index) throw SignatureError("unknown constant '" + std::string(name) + "'");
  return *index;
}

Atom Signature::atom(std::string_view name, std::string_view value) const {
  return atom(index_of(name), value);
}

Atom Signature::atom(std::uint32_t constant, std::string_view value) const {
  auto v = find_value(constant, value);
  if (!v) {
    throw SignatureError("value '" + std::string(value) + "' is not in the domain of '" +
                         name(constant) + "'");
  }
  return Atom{constant, *v};
}

bool Signature::is_boolean(std::uint32_t index) const {
  const auto& domain = constants_.at(index).domain;
  return domain.size() == 2 && domain[0] == kFalseValue && domain[1] == kTrueValue;
}

bool Signature::all_boolean() const {
  for (std::uint32_t i = 0; i < size(); ++i) {
    if (!is_boolean(i)) return false;
  }
  return true;
}

std::size_t Signature::atom_count() const {
  std::size_t n = 0;
  for (const auto& c : constants_) n += c.domain.size();
  return n;
}

std::vector<Atom> Signature::atoms() const {
  std::vector<Atom> out;
  out.reserve(atom_count());
  for (std::uint32_t c = 0; c < size(); ++c) {
    for (std::uint32_t v = 0; v < domain_size(c); ++v) out.push_back(Atom{c, v});
  }
  return out;
}

std::uint64_t Signature::interpretation_count() const {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t n = 1;
  for (const auto& c : constants_) {
    if (n > kMax / c.domain.size()) return kMax;
    n *= c.domain.size();
  }
  return n;
}

Signature Signature::concat(const Signature& other) const {
  std::vector<ConstantDecl> decls = constants_;
  decls.insert(decls.end(), other.constants_.begin(), other.constants_.end());
  return validate(std::move(decls));
}

}  // namespace ccplus
