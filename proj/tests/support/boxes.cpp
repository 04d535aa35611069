#include "support/boxes.hpp"

#include <string>
#include <vector>

namespace ccplus::testing {

ActionDescription boxes(std::size_t box_count, std::size_t location_count) {
  std::vector<std::string> boxes;
  std::vector<std::string> locations;
  for (std::size_t i = 1; i <= box_count; ++i) boxes.push_back("B" + std::to_string(i));
  for (std::size_t i = 1; i <= location_count; ++i) locations.push_back("L" + std::to_string(i));
  auto destinations = locations;
  destinations.push_back("None");

  std::vector<ConstantDecl> fluents;
  std::vector<ConstantDecl> actions;
  for (const auto& b : boxes) fluents.push_back({"Loc(" + b + ")", locations});
  for (const auto& b : boxes) actions.push_back({"Move(" + b + ")", boolean_domain()});
  for (const auto& b : boxes) actions.push_back({"Destination(" + b + ")", destinations});
  ActionSignature sig(Signature::validate(fluents), Signature::validate(actions));
  const Signature& all = sig.combined();
  auto atom = [&](const std::string& c, const std::string& v) {
    return Formula::atom(all.atom(c, v));
  };
  auto loc = [&](const std::string& b, const std::string& l) { return atom("Loc(" + b + ")", l); };
  auto dest = [&](const std::string& b, const std::string& l) {
    return atom("Destination(" + b + ")", l);
  };

  std::vector<Proposition> props;
  for (const auto& b : boxes) {
    props.push_back(Proposition::dynamic_law(
        Formula::bottom(), Formula::top(),
        Formula::equivalence(atom("Move(" + b + ")", "tt"), dest(b, "None"))));
  }
  for (const auto& b : boxes) {
    for (const auto& l : locations) {
      props.push_back(desugar(sig, CausesLaw{{all.index_of("Move(" + b + ")")}, loc(b, l), dest(b, l)}));
    }
  }
  for (const auto& b : boxes) {
    for (const auto& l : locations) {
      props.push_back(desugar(
          sig, NonexecutableLaw{{all.index_of("Move(" + b + ")")}, loc(b, l) && dest(b, l)}));
    }
  }
  for (const auto& b : boxes) {
    for (const auto& l : locations) props.push_back(desugar(sig, InertialLaw{loc(b, l)}));
  }
  for (const auto& b : boxes) {
    for (const auto& b2 : boxes) {
      if (b == b2) continue;
      for (const auto& l : locations) {
        props.push_back(desugar(sig, NeverLaw{loc(b, l) && loc(b2, l)}));
      }
    }
  }
  return ActionDescription(std::move(sig), std::move(props));
}

}  // namespace ccplus::testing
