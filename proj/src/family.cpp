#include "fpaths/family.hpp"

namespace fpaths {

const char* family_name(Family f) {
  switch (f) {
    case Family::FPath: return "fpath";
    case Family::Schroder: return "schroder";
    case Family::Bicolored: return "bicolored";
    case Family::Perm: return "perm";
    case Family::InvI: return "inv-i";
    case Family::InvJ: return "inv-j";
    case Family::Tree: return "tree";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (name == family_name(f)) return f;
  }
  return std::nullopt;
}

}  // namespace fpaths
