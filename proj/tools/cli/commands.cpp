#include "cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "cli/document.hpp"
#include "cli/json_output.hpp"
#include "cli/text_output.hpp"
#include "syzstab/error.hpp"

namespace syzstab::cli {

namespace {

struct Options {
  bool json = false;
  std::string file;
  std::string monomials;
  std::size_t numVars = 0;
  std::vector<long> degrees;
  long vars = -1;
  long twist = 0;
  std::size_t trials = LineTestOptions{}.trials;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  long degree = 0;
  std::size_t count = 0;
  std::uint64_t budget = SearchSpec{}.budget;
  bool stable = false;
  bool noPrimary = false;
  bool noPrune = false;
};

class Session {
 public:
  Session(const Options& o, std::istream& in, std::ostream& out) : opt_(o), in_(in), out_(out) {}

  void check() {
    const FamilyDocument doc = load();
    const MonomialFamily& f = doc.requireMonomials();
    const StabilityVerdict v = verdict(f);
    const Slope fam = familySlope(f);
    std::optional<MaxSlopeResult> ms;
    if (isPrimaryUpToCommonFactor(f)) ms = maxSlope(f);
    std::optional<SameDegreeResult> same;
    if (equalDegrees(f)) same = sameDegreeCheck(f);
    if (opt_.json) {
      nlohmann::json j = header("check", doc);
      j["familySlope"] = toJson(fam);
      j["maxSlope"] = ms ? toJson(*ms) : nlohmann::json(nullptr);
      j["sameDegree"] = same ? toJson(*same) : nlohmann::json(nullptr);
      j["verdict"] = toJson(v);
      emit(j);
      return;
    }
    out_ << "family slope: " << fractionText(fam) << "\n";
    printMaxSlope(ms);
    if (same)
      out_ << "equal-degree check: " << (same->holds ? "holds" : "fails at " + toString(*same->violating)) << "\n";
    out_ << verdictText(v);
  }

  void oracle() {
    const FamilyDocument doc = load();
    const MonomialFamily& f = doc.requireMonomials();
    const std::size_t ceiling = oracleCeiling();
    const StabilityVerdict v = verdictBruteForce(f, ceiling);
    std::optional<MaxSlopeResult> ms;
    if (isPrimaryUpToCommonFactor(f)) ms = maxSlopeBruteForce(f, ceiling);
    if (opt_.json) {
      nlohmann::json j = header("oracle", doc);
      j["familySlope"] = toJson(familySlope(f));
      j["maxSlope"] = ms ? toJson(*ms) : nlohmann::json(nullptr);
      j["verdict"] = toJson(v);
      emit(j);
      return;
    }
    out_ << "family slope: " << fractionText(familySlope(f)) << "\n";
    printMaxSlope(ms);
    out_ << verdictText(v);
  }

  void sections() {
    const FamilyDocument doc = load();
    const PolyFamily f = doc.asPolynomials();
    const SectionMapDims dims = sectionMap(f, opt_.twist);
    std::optional<long> minDegree;
    if (doc.isMonomial()) minDegree = minSectionDegreeMonomial(*doc.monomials);
    if (opt_.json) {
      nlohmann::json j = header("sections", doc);
      j["twist"] = opt_.twist;
      j["sectionMap"] = toJson(dims);
      j["dimension"] = dims.nullity;
      j["minSectionDegree"] = minDegree ? nlohmann::json(*minDegree) : nlohmann::json(nullptr);
      emit(j);
      return;
    }
    out_ << "twist: " << opt_.twist << "\n"
         << "section dimension: " << dims.nullity << "\n"
         << "map: domain " << dims.domain << ", codomain " << dims.codomain << ", rank " << dims.rank << "\n";
    if (minDegree) out_ << "lowest section degree: " << *minDegree << "\n";
  }

  void lowrank() {
    const FamilyDocument doc = load();
    const PolyFamily f = doc.asPolynomials();
    StabilityVerdict v;
    std::string_view criterion;
    if (f.size() == 3) {
      v = rank2Verdict(f[0], f[1], f[2]);
      criterion = "rank-two";
    } else if (f.size() == 4) {
      v = rank3Verdict(f[0], f[1], f[2], f[3]);
      criterion = "rank-three";
    } else {
      throw PreconditionError("family-size", "lowrank needs three or four forms");
    }
    if (opt_.json) {
      nlohmann::json j = header("lowrank", doc);
      j["criterion"] = criterion;
      j["verdict"] = toJson(v);
      emit(j);
      return;
    }
    out_ << "criterion: " << criterion << "\n" << verdictText(v);
  }

  void bounds() {
    const auto [doc, d, N] = degreeInput();
    const BoundsReport r = report(d, N);
    if (opt_.json) {
      nlohmann::json j = degreeHeader("bounds", doc, d, N);
      j["bounds"] = toJson(r);
      emit(j);
      return;
    }
    out_ << boundsText(r);
  }

  void necessary() {
    const auto [doc, d, N] = degreeInput();
    const NecessaryResult r = necessaryCondition(d.ascending());
    if (opt_.json) {
      nlohmann::json j = degreeHeader("necessary", doc, d, N);
      j["necessary"] = toJson(r);
      emit(j);
      return;
    }
    out_ << "degree condition: " << (r.holds ? "holds" : "fails") << "\n";
    if (r.firstFailingR) out_ << "first failing r: " << *r.firstFailingR << "\n";
  }

  void lineTest() {
    const FamilyDocument doc = load();
    LineTestOptions o;
    o.trials = opt_.trials;
    o.seed = opt_.seed;
    o.exhaustive = opt_.exhaustive;
    const LineTestResult r = lineIndependenceTest(doc.asPolynomials(), o);
    if (opt_.json) {
      nlohmann::json j = header("line-test", doc);
      j["options"] = {{"trials", o.trials}, {"seed", o.seed}, {"exhaustive", o.exhaustive}};
      j["result"] = toJson(r);
      emit(j);
      return;
    }
    out_ << lineTestText(r);
  }

  void search() {
    SearchSpec s;
    s.N = opt_.vars;
    s.d = opt_.degree;
    s.n = opt_.count;
    s.budget = opt_.budget;
    s.requireStable = opt_.stable;
    s.enforcePrimary = !opt_.noPrimary;
    s.prune = !opt_.noPrune;
    const SearchResult r = findSemistableFamily(s);
    if (opt_.json) {
      nlohmann::json j{{"schema", kSchemaVersion}, {"command", "search"}};
      j["spec"] = {{"N", s.N},
                   {"d", s.d},
                   {"n", s.n},
                   {"budget", s.budget},
                   {"requireStable", s.requireStable},
                   {"enforcePrimary", s.enforcePrimary},
                   {"prune", s.prune}};
      j["result"] = toJson(r);
      emit(j);
      return;
    }
    out_ << searchText(r);
  }

  void composite() {
    const auto [doc, d, N] = degreeInput();
    const NecessaryResult nec = necessaryCondition(d.ascending());
    const BoundsReport b = report(d, N);
    std::optional<StabilityVerdict> v;
    if (doc && doc->isMonomial()) v = verdict(*doc->monomials);
    const std::string summary = summaryLine(b);
    if (opt_.json) {
      nlohmann::json j = degreeHeader("report", doc, d, N);
      j["verdict"] = v ? toJson(*v) : nlohmann::json(nullptr);
      j["necessary"] = toJson(nec);
      j["bounds"] = toJson(b);
      j["summary"] = summary;
      emit(j);
      return;
    }
    if (v) out_ << verdictText(*v);
    out_ << "degree condition: " << (nec.holds ? "holds" : "fails") << "\n" << boundsText(b) << summary << "\n";
  }

 private:
  FamilyDocument load() {
    if (!opt_.monomials.empty()) {
      FamilyDocument doc;
      auto ms = parseMonomialList(opt_.monomials,
                                  opt_.numVars ? std::optional<std::size_t>(opt_.numVars) : std::nullopt);
      doc.variables = ms.front().variables();
      try {
        doc.monomials.emplace(std::move(ms));
      } catch (const PreconditionError& e) {
        throw ParseError(e.what());
      }
      return doc;
    }
    std::string text;
    if (!opt_.file.empty()) {
      std::ifstream f(opt_.file);
      if (!f) throw ParseError("cannot open " + opt_.file);
      text.assign(std::istreambuf_iterator<char>(f), {});
    } else {
      text.assign(std::istreambuf_iterator<char>(in_), {});
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parseDocument(j);
  }

  struct DegreeInput {
    std::optional<FamilyDocument> doc;
    DegreeSequence degrees;
    long N;
  };

  DegreeInput degreeInput() {
    if (!opt_.degrees.empty()) {
      if (opt_.vars < 1) throw ParseError("--degrees needs --vars N");
      std::vector<Integer> d;
      for (long x : opt_.degrees) d.emplace_back(x);
      return {std::nullopt, DegreeSequence(std::move(d)), opt_.vars};
    }
    FamilyDocument doc = load();
    std::vector<Integer> d;
    for (long x : doc.asPolynomials().degrees()) d.emplace_back(x);
    const long N = opt_.vars >= 1 ? opt_.vars : static_cast<long>(doc.variables) - 1;
    return {std::move(doc), DegreeSequence(std::move(d)), N};
  }

  static bool equalDegrees(const MonomialFamily& f) {
    for (const auto& m : f)
      if (m.degree() != f[0].degree()) return false;
    return true;
  }

  std::size_t oracleCeiling() const {
    const char* env = std::getenv("SYZSTAB_ORACLE_CEILING");
    if (!env || !*env) return kDefaultOracleCeiling;
    const std::string s(env);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 3)
      throw ParseError("SYZSTAB_ORACLE_CEILING must be a small nonnegative integer");
    return std::stoul(s);
  }

  void printMaxSlope(const std::optional<MaxSlopeResult>& ms) {
    if (!ms) {
      out_ << "max slope: not available (family is not primary)\n";
      return;
    }
    out_ << "max slope: " << fractionText(ms->maxSlope) << " at " << witnessText(ms->witness) << "\n";
    if (ms->maxProperSlope)
      out_ << "max proper slope: " << fractionText(*ms->maxProperSlope) << " at " << witnessText(*ms->properWitness)
           << "\n";
  }

  static std::string summaryLine(const BoundsReport& b) {
    std::string s = "bound " + toString(b.tightClosureBound);
    if (b.flennerK > 0) s += "; generic curve degree ≥ " + std::to_string(b.flennerK);
    if (b.bogomolovMinDegree) s += "; every smooth curve degree ≥ " + b.bogomolovMinDegree->get_str();
    return s;
  }

  nlohmann::json header(std::string_view command, const FamilyDocument& doc) const {
    return {{"schema", kSchemaVersion}, {"command", command}, {"family", toJson(doc)}};
  }

  nlohmann::json degreeHeader(std::string_view command, const std::optional<FamilyDocument>& doc,
                              const DegreeSequence& d, long N) const {
    nlohmann::json j{{"schema", kSchemaVersion}, {"command", command}};
    if (doc) j["family"] = toJson(*doc);
    nlohmann::json degrees = nlohmann::json::array();
    for (const auto& x : d.values()) degrees.push_back(integerJson(x));
    j["degrees"] = std::move(degrees);
    j["N"] = N;
    return j;
  }

  void emit(const nlohmann::json& j) { out_ << j.dump(2) << "\n"; }

  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
};

void addInputOptions(CLI::App* cmd, Options& o) {
  cmd->add_option("--file", o.file, "JSON family document");
  cmd->add_option("--monomials", o.monomials, "inline monomials, e.g. \"X^4,Y^4,Z^4,X*Y*Z^2\"");
  cmd->add_option("--num-vars", o.numVars, "variable count for --monomials");
}

void addDegreeOptions(CLI::App* cmd, Options& o) {
  addInputOptions(cmd, o);
  cmd->add_option("--degrees", o.degrees, "degree sequence instead of a family")->delimiter(',');
  cmd->add_option("--vars", o.vars, "projective dimension N");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Slope stability of syzygy bundles of monomial and polynomial families", "syzstab"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "machine-readable output (schema 1)");
  app.fallthrough();

  auto* check = app.add_subcommand("check", "verdict, maximal slope and witness");
  auto* oracle = app.add_subcommand("oracle", "brute-force verdict for cross-checking");
  auto* sections = app.add_subcommand("sections", "dimension of degree-m syzygies");
  auto* lowrank = app.add_subcommand("lowrank", "section criteria for three or four forms");
  auto* bounds = app.add_subcommand("bounds", "restriction and tight-closure bounds");
  auto* necessary = app.add_subcommand("necessary", "degree-sequence necessary condition");
  auto* line = app.add_subcommand("line-test", "search for a line with independent restrictions");
  auto* search = app.add_subcommand("search", "find n monomials of degree d with semistable syzygies");
  auto* composite = app.add_subcommand("report", "check, degree condition and bounds with the closure statement");

  for (auto* c : {check, oracle, sections, lowrank, line}) addInputOptions(c, o);
  for (auto* c : {bounds, necessary, composite}) addDegreeOptions(c, o);
  sections->add_option("--twist", o.twist, "degree m")->required();
  line->add_option("--trials", o.trials, "random lines to try");
  line->add_option("--seed", o.seed, "RNG seed");
  line->add_flag("--exhaustive", o.exhaustive, "expand all maximal minors when sampling fails");
  search->add_option("--vars", o.vars, "projective dimension N")->required();
  search->add_option("--degree", o.degree, "monomial degree d")->required();
  search->add_option("--count", o.count, "family size n")->required();
  search->add_option("--budget", o.budget, "node limit");
  search->add_flag("--stable", o.stable, "require a stable family");
  search->add_flag("--no-primary", o.noPrimary, "do not require primary families");
  search->add_flag("--no-prune", o.noPrune, "disable the equal-degree pruning");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  Session s(o, in, out);
  try {
    if (*check) s.check();
    else if (*oracle) s.oracle();
    else if (*sections) s.sections();
    else if (*lowrank) s.lowrank();
    else if (*bounds) s.bounds();
    else if (*necessary) s.necessary();
    else if (*line) s.lineTest();
    else if (*search) s.search();
    else if (*composite) s.composite();
  } catch (const PreconditionError& e) {
    err << "precondition failed [" << e.criterion() << "]: " << e.what() << "\n";
    if (o.json)
      out << nlohmann::json{{"schema", kSchemaVersion}, {"error", {{"criterion", e.criterion()}, {"message", e.what()}}}}
                 .dump(2)
          << "\n";
    return kExitPrecondition;
  } catch (const ParseError& e) {
    err << "malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitOk;
}

}  // namespace syzstab::cli
