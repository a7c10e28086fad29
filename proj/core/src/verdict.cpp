#include "syzstab/verdict.hpp"

namespace syzstab {

std::string_view toString(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Stable: return "Stable";
    case VerdictKind::SemistableNotStable: return "SemistableNotStable";
    case VerdictKind::Unstable: return "Unstable";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

}  // namespace syzstab
