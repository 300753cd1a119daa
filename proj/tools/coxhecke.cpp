// coxhecke: centers, cocenters and class polynomials of 0-Hecke and generic
// Hecke algebras of finite Coxeter groups, from the command line.

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxhecke/coxhecke.hpp"

namespace {

using namespace coxhecke;
using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Table };

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  Json json = Json::object();
  std::vector<Table> tables;
  bool csvMatrixOnly = false;  // CSV carries just the first table
  bool failed = false;
};

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void printCsv(std::ostream& os, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csvField(cells[i]);
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

void printAligned(std::ostream& os, const Table& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  measure(t.header);
  for (const auto& r : t.rows) measure(r);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out += cells[i];
      if (i + 1 < cells.size()) out += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    os << out << '\n';
  };
  if (!t.title.empty()) os << t.title << '\n';
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

void render(const Report& rep, Format fmt) {
  if (fmt == Format::Json) {
    std::cout << rep.json.dump(2) << '\n';
    return;
  }
  const std::size_t count = fmt == Format::Csv && rep.csvMatrixOnly ? 1 : rep.tables.size();
  for (std::size_t i = 0; i < count; ++i) {
    if (i) std::cout << '\n';
    if (fmt == Format::Csv) printCsv(std::cout, rep.tables[i]);
    else printAligned(std::cout, rep.tables[i]);
  }
}

Json wordJson(const CoxeterGroup& g, Index w) { return Json(g.reducedWord(w)); }

Json subsetJson(GenSubset J) { return Json(J.members()); }

std::string yesNo(bool b) { return b ? "yes" : "no"; }

std::string str(std::size_t n) { return std::to_string(n); }

// ---- commands -------------------------------------------------------------

Report cmdInfo(const Conjugacy& conj, const std::string& spec) {
  const CoxeterGroup& g = conj.group();
  Report rep;
  rep.json["group"] = spec;
  rep.json["rank"] = g.rank();
  rep.json["order"] = g.order();
  rep.json["positiveRoots"] = g.positiveRootCount();
  rep.json["longest"] = wordJson(g, g.longest());
  rep.json["coxeterMatrix"] = g.matrix().rows();
  rep.json["delta"] = conj.delta().genImage();
  rep.json["deltaOrder"] = conj.delta().order();
  std::string images;
  for (int s = 0; s < g.rank(); ++s) images += (s ? "," : "") + std::to_string(conj.delta().onGenerator(s));
  rep.tables.push_back({"", {"property", "value"},
                        {{"group", spec},
                         {"rank", str(g.rank())},
                         {"order", str(g.order())},
                         {"positive roots", str(g.positiveRootCount())},
                         {"longest element", formatElement(g, g.longest())},
                         {"delta", images.empty() ? "-" : images},
                         {"delta order", str(conj.delta().order())}}});
  return rep;
}

Report cmdClasses(const Conjugacy& conj) {
  const CoxeterGroup& g = conj.group();
  Report rep;
  Table t{"", {"id", "size", "minLength", "maxLength", "elliptic", "minRep", "blocks"}, {}};
  Json arr = Json::array();
  for (const auto& c : conj.classes()) {
    Json rec;
    rec["id"] = c.id;
    rec["size"] = c.members.size();
    rec["minLength"] = c.minLength;
    rec["maxLength"] = c.maxLength;
    rec["elliptic"] = c.elliptic;
    Json reps = Json::array();
    for (Index w : c.minSet) reps.push_back(wordJson(g, w));
    rec["minReps"] = reps;
    Json blocks = Json::array();
    for (const auto& b : c.minApproxClasses) {
      Json words = Json::array();
      for (Index w : b) words.push_back(wordJson(g, w));
      blocks.push_back(words);
    }
    rec["approxBlocks"] = blocks;
    arr.push_back(rec);
    t.rows.push_back({str(c.id), str(c.members.size()), str(c.minLength), str(c.maxLength), yesNo(c.elliptic),
                      formatElement(g, c.minSet.front()), str(c.minApproxClasses.size())});
  }
  rep.json["classes"] = arr;
  rep.tables.push_back(std::move(t));
  return rep;
}

Report cmdApprox(const Conjugacy& conj, ApproxKind kind) {
  const CoxeterGroup& g = conj.group();
  const auto& list = kind == ApproxKind::Min ? conj.minApprox() : conj.maxApprox();
  Report rep;
  Table t{"", {"id", "class", "length", "size", "members"}, {}};
  Json arr = Json::array();
  for (const auto& a : list) {
    Json words = Json::array();
    std::string joined;
    for (Index w : a.members) {
      words.push_back(wordJson(g, w));
      joined += (joined.empty() ? "" : " ") + formatElement(g, w);
    }
    Json rec;
    rec["id"] = a.id;
    rec["classId"] = a.classId;
    rec["length"] = a.length;
    rec["members"] = words;
    arr.push_back(rec);
    t.rows.push_back({str(a.id), str(a.classId), str(a.length), str(a.members.size()), joined});
  }
  rep.json[kind == ApproxKind::Min ? "min" : "max"] = arr;
  rep.tables.push_back(std::move(t));
  return rep;
}

Report cmdGamma(const Conjugacy& conj) {
  const CoxeterGroup& g = conj.group();
  Report rep;
  const auto pairs = gamma(conj.delta());
  const auto targets = gammaMinBijection(pairs, conj);
  Table t{"Gamma (minimal side)", {"#", "J", "rep", "lengthC", "class", "minTarget"}, {}};
  Json arr = Json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    Json rec;
    rec["J"] = subsetJson(p.J);
    rec["rep"] = wordJson(g, p.minRepInW);
    rec["lengthC"] = p.lengthC;
    rec["classId"] = gammaToClass(p, conj);
    rec["minApproxId"] = targets[i];
    arr.push_back(rec);
    t.rows.push_back({str(i), formatSubset(p.J), formatElement(g, p.minRepInW), str(p.lengthC),
                      str(gammaToClass(p, conj)), str(targets[i])});
  }
  const auto params = maxApproxParam(conj);
  Table t2{"Gamma' (maximal side, delta' = Ad(w0) delta)", {"#", "J", "rep", "lengthC", "maxTarget"}, {}};
  Json arr2 = Json::array();
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto& p = params[i].pair;
    Json rec;
    rec["J"] = subsetJson(p.J);
    rec["rep"] = wordJson(g, p.minRepInW);
    rec["lengthC"] = p.lengthC;
    rec["maxApproxId"] = params[i].maxApproxId;
    arr2.push_back(rec);
    t2.rows.push_back({str(i), formatSubset(p.J), formatElement(g, p.minRepInW), str(p.lengthC),
                       str(params[i].maxApproxId)});
  }
  rep.json["classCount"] = conj.classes().size();
  rep.json["gamma"] = arr;
  rep.json["gammaPrime"] = arr2;
  rep.tables.push_back(std::move(t));
  rep.tables.push_back(std::move(t2));
  rep.tables.push_back({"", {"count", "value"},
                        {{"classes", str(conj.classes().size())},
                         {"Gamma", str(pairs.size())},
                         {"Gamma'", str(params.size())}}});
  return rep;
}

Report cmdCenter(const Conjugacy& conj) {
  const CoxeterGroup& g = conj.group();
  Report rep;
  const auto basis = centerBasis(conj);
  std::vector<QVector> vecs;
  Table t{"", {"id", "maxClass", "terms", "central"}, {}};
  Json arr = Json::array();
  bool allCentral = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const bool central = isDeltaCentralAtZero(basis[i], conj.delta());
    allCentral = allCentral && central;
    vecs.push_back(basis[i].toVector());
    Json terms = Json::array();
    for (const auto& [w, c] : basis[i].coeffs()) terms.push_back({{"word", wordJson(g, w)}, {"coeff", to_string(c)}});
    std::string rep0;
    for (Index w : conj.maxApprox()[i].members) rep0 += (rep0.empty() ? "" : " ") + formatElement(g, w);
    Json rec;
    rec["maxApproxId"] = i;
    rec["terms"] = terms;
    arr.push_back(rec);
    t.rows.push_back({str(i), rep0, str(basis[i].termCount()), yesNo(central)});
  }
  const Subspace spanned = Subspace::spannedBy(vecs, g.order());
  const Subspace solved = centerSpace(conj.delta());
  const bool spans = spanned.dim() == basis.size() && spacesEqual(spanned, solved);
  rep.json["dimension"] = solved.dim();
  rep.json["basis"] = arr;
  rep.json["central"] = allCentral;
  rep.json["basisOfCenter"] = spans;
  rep.tables.push_back(std::move(t));
  rep.tables.push_back({"", {"property", "value"},
                        {{"dim center", str(solved.dim())},
                         {"all central", yesNo(allCentral)},
                         {"basis of center", yesNo(spans)}}});
  rep.failed = !allCentral || !spans;
  return rep;
}

Report cmdCocenter(const Conjugacy& conj) {
  const CoxeterGroup& g = conj.group();
  Report rep;
  const ZeroCocenter cc(conj);
  const bool graded = gradingCheck(conj.delta(), cc.commutator().space);
  const bool indep = cc.basisIndependent();
  Table t{"", {"#", "J", "rep", "lengthC"}, {}};
  Json arr = Json::array();
  for (std::size_t i = 0; i < cc.pairs().size(); ++i) {
    const auto& p = cc.pairs()[i];
    arr.push_back({{"J", subsetJson(p.J)}, {"rep", wordJson(g, p.minRepInW)}, {"lengthC", p.lengthC}});
    t.rows.push_back({str(i), formatSubset(p.J), formatElement(g, p.minRepInW), str(p.lengthC)});
  }
  rep.json["dimension"] = cc.dimension();
  rep.json["commutatorDim"] = cc.commutator().space.dim();
  rep.json["basis"] = arr;
  rep.json["independent"] = indep;
  rep.json["graded"] = graded;
  rep.tables.push_back(std::move(t));
  rep.tables.push_back({"", {"property", "value"},
                        {{"dim cocenter", str(cc.dimension())},
                         {"dim commutator", str(cc.commutator().space.dim())},
                         {"basis independent", yesNo(indep)},
                         {"grading splits", yesNo(graded)}}});
  rep.failed = !indep || !graded || cc.dimension() != cc.pairs().size();
  return rep;
}

Report cmdClassPoly(const Conjugacy& conj) {
  const CoxeterGroup& g = conj.group();
  const ClassPolynomials cp(conj);
  Report rep;
  Table t{"", {"w"}, {}};
  for (std::size_t o = 0; o < conj.classes().size(); ++o) t.header.push_back(str(o));
  Json rows = Json::array();
  for (Index w = 0; w < g.order(); ++w) {
    std::vector<std::string> row{formatElement(g, w)};
    Json polys = Json::array();
    for (std::size_t o = 0; o < conj.classes().size(); ++o) {
      row.push_back(cp(w, o).str());
      polys.push_back(cp(w, o).str());
    }
    rows.push_back({{"word", wordJson(g, w)}, {"f", polys}});
    t.rows.push_back(std::move(row));
  }
  rep.json["classCount"] = conj.classes().size();
  rep.json["rows"] = rows;
  rep.tables.push_back(std::move(t));
  return rep;
}

Report cmdReduce(const Conjugacy& conj, const std::string& wordText) {
  const CoxeterGroup& g = conj.group();
  const Word word = parseWord(wordText, g.rank());
  const Index w = g.fromWord(word);
  const ZeroCocenter cc(conj);
  const TwReduction tw = reduceTw(cc, w);
  const SigmaResult sr = conj.sigma(w);
  const ApproxClass& sigma = conj.minApprox()[sr.approxId];
  const Reduction red = conj.reduceToMin(w);
  const GammaPair& pair = cc.pairs()[tw.pairIndex];
  Report rep;
  Json sigmaMembers = Json::array();
  std::string joined;
  for (Index v : sigma.members) {
    sigmaMembers.push_back(wordJson(g, v));
    joined += (joined.empty() ? "" : " ") + formatElement(g, v);
  }
  std::string path;
  for (int s : red.path) path += (path.empty() ? "" : ".") + std::to_string(s + 1);
  rep.json["element"] = wordJson(g, w);
  rep.json["sigma"] = {{"minApproxId", sr.approxId}, {"classId", sigma.classId}, {"members", sigmaMembers}};
  rep.json["sign"] = sr.sign;
  rep.json["cocenterImage"] = {{"J", subsetJson(pair.J)}, {"rep", wordJson(g, pair.minRepInW)}, {"coeff", tw.sign}};
  rep.json["minimal"] = wordJson(g, red.result);
  rep.json["path"] = red.path;
  rep.tables.push_back({"", {"property", "value"},
                        {{"element", formatElement(g, w)},
                         {"Sigma_w", joined},
                         {"sign", std::to_string(sr.sign)},
                         {"cocenter image", (tw.sign > 0 ? "+t" : "-t") + formatSubset(pair.J) + ":" + formatElement(g, pair.minRepInW)},
                         {"minimal element", formatElement(g, red.result)},
                         {"move path", path.empty() ? "-" : path}}});
  return rep;
}

Report cmdTrace(const Conjugacy& conj) {
  const CoxeterGroup& g = conj.group();
  const auto pairs = gamma(conj.delta());
  const TraceMatrix tm = traceMatrix(conj.delta(), pairs);
  const TraceReport tr = analyzeTrace(tm, pairs);
  const bool parity = parityCheck(pairs);
  Report rep;
  Table t{"", {"pair"}, {}};
  for (GenSubset K : tm.columns) t.header.push_back(K.bitstring(g.rank()));
  Json rows = Json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string label = pairs[i].J.bitstring(g.rank()) + ":" + formatElement(g, pairs[i].minRepInW);
    std::vector<std::string> row{label};
    for (int v : tm.entries[i]) row.push_back(std::to_string(v));
    rows.push_back({{"J", subsetJson(pairs[i].J)}, {"rep", wordJson(g, pairs[i].minRepInW)}, {"values", tm.entries[i]}});
    t.rows.push_back(std::move(row));
  }
  Json cols = Json::array();
  for (GenSubset K : tm.columns) cols.push_back(subsetJson(K));
  rep.json["columns"] = cols;
  rep.json["rows"] = rows;
  rep.json["rank"] = tr.rank;
  rep.json["kernelDim"] = tr.kernelDim;
  rep.json["surjective"] = tr.surjective;
  rep.json["kernelIsSameJDifferences"] = tr.kernelIsSameJDifferences;
  rep.json["parity"] = parity;
  rep.tables.push_back(std::move(t));
  rep.tables.push_back({"", {"property", "value"},
                        {{"rank", str(tr.rank)},
                         {"kernel dim", str(tr.kernelDim)},
                         {"surjective", yesNo(tr.surjective)},
                         {"kernel = same-J differences", yesNo(tr.kernelIsSameJDifferences)},
                         {"parity", yesNo(parity)}}});
  rep.csvMatrixOnly = true;
  rep.failed = !tr.surjective || !tr.kernelIsSameJDifferences || !parity;
  return rep;
}

Report cmdVerify(const Conjugacy& conj, std::uint64_t seed) {
  const VerifyContext ctx(conj.delta());
  VerifyOptions opts;
  opts.seed = seed;
  Report rep;
  Table t{"", {"check", "result", "detail"}, {}};
  Json arr = Json::array();
  for (const auto& r : verifyAll(ctx, opts)) {
    arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    t.rows.push_back({r.name, r.passed ? "PASS" : "FAIL", r.detail});
    rep.failed = rep.failed || !r.passed;
  }
  rep.json["checks"] = arr;
  rep.json["passed"] = !rep.failed;
  rep.tables.push_back(std::move(t));
  return rep;
}

int exitCodeFor(ErrorKind k) {
  switch (k) {
    case ErrorKind::TheoremViolation:
    case ErrorKind::SolveFailure: return 1;
    default: return 2;
  }
}

void printError(const std::string& kind, const std::string& message) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centers, cocenters and class polynomials of Hecke algebras of finite Coxeter groups"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string typeSpec, matrixFile, deltaSpec, formatName;
  std::size_t sizeLimit = 20000;
  std::uint64_t seed = 1;
  bool slow = false;
  app.add_option("--type", typeSpec, "group spec: A3, B2, I2(5), A2xA1, matrix:path.json");
  app.add_option("--matrix-file", matrixFile, "Coxeter matrix JSON {\"size\": n, \"m\": [[...]]}");
  app.add_option("--delta", deltaSpec, "diagram automorphism as 0-based generator images, e.g. 1,0");
  app.add_option("--format", formatName, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--size-limit", sizeLimit, "refuse groups with more elements");
  app.add_option("--seed", seed, "seed for randomized checks");
  app.add_flag("--slow", slow, "allow H4, E7 and E8");

  std::string word;
  app.add_subcommand("info", "order, number of positive roots, longest element");
  app.add_subcommand("classes", "twisted conjugacy classes");
  app.add_subcommand("min", "reachability classes of minimal length elements");
  app.add_subcommand("max", "reachability classes of maximal length elements");
  app.add_subcommand("gamma", "parameter sets of minimal and maximal classes");
  app.add_subcommand("center", "basis of the center of the 0-Hecke algebra");
  app.add_subcommand("cocenter", "basis of the cocenter of the 0-Hecke algebra");
  app.add_subcommand("classpoly", "class polynomials of the generic Hecke algebra");
  app.add_subcommand("reduce", "image of t_w in the cocenter")->add_option("word", word, "1-based dotted word, e for identity")->required();
  app.add_subcommand("trace", "trace pairing with one-dimensional representations");
  app.add_subcommand("verify", "run every property check; exit 1 on failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    printError("ParseError", e.what());
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Format fmt = Format::Table;
  if (formatName == "json") fmt = Format::Json;
  else if (formatName == "csv" || (formatName.empty() && (command == "classpoly" || command == "trace"))) fmt = Format::Csv;

  try {
    if (typeSpec.empty() == matrixFile.empty()) fail(ErrorKind::ParseError, "give exactly one of --type and --matrix-file");
    const std::string spec = matrixFile.empty() ? typeSpec : "matrix:" + matrixFile;
    if (isSlowSpec(spec) && !slow) fail(ErrorKind::ParseError, "'" + spec + "' is large; pass --slow to allow it");
    BuildOptions opts;
    opts.sizeLimit = sizeLimit;
    const GroupPtr g = CoxeterGroup::build(parseGroupSpec(spec), opts);
    const Conjugacy conj(deltaFromSpec(g, deltaSpec));

    Report rep;
    if (command == "info") rep = cmdInfo(conj, spec);
    else if (command == "classes") rep = cmdClasses(conj);
    else if (command == "min") rep = cmdApprox(conj, ApproxKind::Min);
    else if (command == "max") rep = cmdApprox(conj, ApproxKind::Max);
    else if (command == "gamma") rep = cmdGamma(conj);
    else if (command == "center") rep = cmdCenter(conj);
    else if (command == "cocenter") rep = cmdCocenter(conj);
    else if (command == "classpoly") rep = cmdClassPoly(conj);
    else if (command == "reduce") rep = cmdReduce(conj, word);
    else if (command == "trace") rep = cmdTrace(conj);
    else rep = cmdVerify(conj, seed);
    render(rep, fmt);
    return rep.failed ? 1 : 0;
  } catch (const Error& e) {
    printError(std::string(to_string(e.kind())), e.what());
    return exitCodeFor(e.kind());
  }
}
