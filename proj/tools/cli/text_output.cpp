#include "cli/text_output.hpp"

#include <iomanip>
#include <sstream>

namespace syzstab::cli {

std::string fractionText(const Rational& q) {
  std::ostringstream os;
  os << toString(q) << " (" << std::setprecision(6) << q.get_d() << ")";
  return os.str();
}

std::string fractionText(const Slope& s) { return fractionText(s.value()); }

std::string indicesText(std::span<const std::size_t> indices) {
  std::string out = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(indices[i] + 1);
  }
  return out + "}";
}

std::string witnessText(const SubsetWitness& w) {
  return indicesText(w.indices) + " gcd " + toString(w.gcdMonomial) + " slope " + fractionText(w.slope);
}

std::string verdictText(const StabilityVerdict& v) {
  std::ostringstream os;
  os << "verdict: " << toString(v.kind) << "\n";
  if (v.witness) os << "witness: " << witnessText(*v.witness) << "\n";
  if (v.section)
    os << "section: twist " << v.section->twist << ", dimension " << v.section->dimension.get_str()
       << ", subsheaf slope " << fractionText(v.section->subsheafSlope) << "\n";
  if (!v.notes.empty()) {
    os << "criteria:";
    for (const auto& n : v.notes) os << " " << n;
    os << "\n";
  }
  return os.str();
}

std::string boundsText(const BoundsReport& r) {
  std::ostringstream os;
  os << "projective dimension N: " << r.N << "\n"
     << "rank: " << r.rank << "\n"
     << "flenner k: " << r.flennerK << "\n"
     << "discriminant: " << r.discriminant.get_str() << "\n";
  if (r.bogomolovMinDegree) os << "bogomolov min degree: " << r.bogomolovMinDegree->get_str() << "\n";
  os << "tight closure bound: " << fractionText(r.tightClosureBound) << "\n"
     << "generic forms: " << (r.heinApplicable ? "applicable" : "not applicable") << ", appendix "
     << toString(r.appendixStable) << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  os << "statement: " << r.statement << "\n";
  return os.str();
}

std::string lineTestText(const LineTestResult& r) {
  std::ostringstream os;
  os << "outcome: " << toString(r.outcome);
  if (r.outcome == LineOutcome::ProbablyNo) os << " (one-sided: no independent line found, none ruled out)";
  os << "\nmethod: " << r.method << "\n";
  if (r.witness) {
    os << "line:";
    for (std::size_t j = 0; j < r.witness->variables(); ++j)
      os << (j ? ", " : " ") << "X" << j << " -> " << toString(r.witness->a()[j]) << "*U + "
         << toString(r.witness->b()[j]) << "*V";
    os << "\n";
  }
  os << "trials: " << r.trialsUsed << "\n";
  return os.str();
}

std::string searchText(const SearchResult& r) {
  std::ostringstream os;
  os << "status: " << toString(r.status) << "\n";
  if (r.family) {
    os << "family:";
    for (std::size_t i = 0; i < r.family->size(); ++i) os << (i ? ", " : " ") << toString((*r.family)[i]);
    os << "\n";
  }
  if (r.verdict) os << verdictText(*r.verdict);
  os << "nodes: " << r.nodes << "\n";
  return os.str();
}

}  // namespace syzstab::cli
