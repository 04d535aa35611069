#include "ccplus/interpretation.hpp"

#include "ccplus/error.hpp"

namespace ccplus {

std::vector<Atom> interpretation_as_atoms(const Interpretation& interp) {
  std::vector<Atom> atoms;
  atoms.reserve(interp.size());
  for (std::uint32_t c = 0; c < interp.size(); ++c) atoms.push_back(Atom{c, interp[c]});
  return atoms;
}

Interpretation interpretation_from_atoms(const Signature& sig, std::span<const Atom> atoms) {
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  Interpretation interp{std::vector<std::uint32_t>(sig.size(), kUnset)};
  for (Atom a : atoms) {
    if (a.constant >= sig.size() || a.value >= sig.domain_size(a.constant)) {
      throw SignatureError("atom outside the signature");
    }
    if (interp.values[a.constant] != kUnset) {
      throw SignatureError("two atoms for constant '" + sig.name(a.constant) + "'");
    }
    interp.values[a.constant] = a.value;
  }
  for (std::uint32_t c = 0; c < sig.size(); ++c) {
    if (interp.values[c] == kUnset) {
      throw SignatureError("no atom for constant '" + sig.name(c) + "'");
    }
  }
  return interp;
}

bool is_interpretation_of(const Signature& sig, const Interpretation& interp) {
  if (interp.size() != sig.size()) return false;
  for (std::uint32_t c = 0; c < sig.size(); ++c) {
    if (interp[c] >= sig.domain_size(c)) return false;
  }
  return true;
}

void for_each_interpretation(const Signature& sig,
                             const std::function<bool(const Interpretation&)>& fn) {
  Interpretation interp{std::vector<std::uint32_t>(sig.size(), 0)};
  while (true) {
    if (!fn(interp)) return;
    // Odometer with the last constant varying fastest.
    std::size_t i = sig.size();
    while (i > 0) {
      --i;
      if (++interp.values[i] < sig.domain_size(static_cast<std::uint32_t>(i))) break;
      interp.values[i] = 0;
      if (i == 0) return;
    }
    if (sig.empty()) return;
  }
}

std::vector<Interpretation> all_interpretations(const Signature& sig) {
  std::vector<Interpretation> out;
  for_each_interpretation(sig, [&](const Interpretation& i) {
    out.push_back(i);
    return true;
  });
  return out;
}

Interpretation join(const Interpretation& lhs, const Interpretation& rhs) {
  Interpretation out = lhs;
  out.values.insert(out.values.end(), rhs.values.begin(), rhs.values.end());
  return out;
}

std::string to_string(const Signature& sig, const Interpretation& interp) {
  std::string out = "{";
  for (std::uint32_t c = 0; c < interp.size(); ++c) {
    if (c > 0) out += ", ";
    out += sig.name(c);
    out += '=';
    out += sig.value_name(Atom{c, interp[c]});
  }
  out += '}';
  return out;
}

}  // namespace ccplus
