#pragma once

#include <string>

#include "heisenkep/exactalg/serialize.hpp"

namespace heisenkep {

/// Morales-Ramis gives necessary conditions only, so there is no "integrable" tag.
enum class VerdictTag { NotSolvableIdentityComponent, Inconclusive };

const char* to_string(VerdictTag t);

struct GaloisVerdict {
  VerdictTag tag = VerdictTag::Inconclusive;
  std::string criterion;
  Json evidence = Json::object();

  /// Throws std::invalid_argument for empty evidence.
  static GaloisVerdict not_solvable(std::string criterion, Json evidence);
  static GaloisVerdict inconclusive(std::string criterion, Json evidence);

  bool is_not_solvable() const { return tag == VerdictTag::NotSolvableIdentityComponent; }
  Json to_json() const;
};

}  // namespace heisenkep
