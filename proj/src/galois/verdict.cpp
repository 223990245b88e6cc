#include "heisenkep/galois/verdict.hpp"

#include <stdexcept>

namespace heisenkep {

const char* to_string(VerdictTag t) {
  return t == VerdictTag::NotSolvableIdentityComponent ? "NotSolvableIdentityComponent" : "Inconclusive";
}

GaloisVerdict GaloisVerdict::not_solvable(std::string criterion, Json evidence) {
  if (evidence.is_null() || evidence.empty()) throw std::invalid_argument("NotSolvable verdict without evidence");
  return {VerdictTag::NotSolvableIdentityComponent, std::move(criterion), std::move(evidence)};
}

GaloisVerdict GaloisVerdict::inconclusive(std::string criterion, Json evidence) {
  return {VerdictTag::Inconclusive, std::move(criterion), std::move(evidence)};
}

Json GaloisVerdict::to_json() const {
  return Json{{"tag", to_string(tag)}, {"criterion", criterion}, {"evidence", evidence}};
}

}  // namespace heisenkep
